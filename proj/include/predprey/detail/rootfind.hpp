#ifndef PREDPREY_DETAIL_ROOTFIND_HPP
#define PREDPREY_DETAIL_ROOTFIND_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace predprey::detail {

/// Bisection on [lo, hi]; requires f(lo) and f(hi) of opposite (or zero) sign.
/// Returns the midpoint of the final bracket of width <= tol.
template <typename F>
double bisect(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::logic_error("bisect: endpoints do not bracket a sign change");
    }
    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fhi > 0.0)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

/// Golden-section minimization of a unimodal f on [a, b] to interval width tol.
template <typename F>
double golden_min(F&& f, double a, double b, double tol, int max_iter = 400) {
    constexpr double inv_phi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > tol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace predprey::detail

#endif  // PREDPREY_DETAIL_ROOTFIND_HPP
