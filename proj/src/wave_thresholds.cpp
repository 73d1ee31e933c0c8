#include <predprey/wave_thresholds.hpp>

#include <cmath>
#include <string>

#include <predprey/detail/rootfind.hpp>
#include <predprey/ode_analysis.hpp>

namespace predprey {

namespace {

constexpr double kHTol = 1e-10;      // absolute tolerance on threshold roots in h
constexpr double kZeroWTol = 1e-10;  // |W| below this reports a zero-speed front

void require_e_above_one(double E, const char* op_name) {
    if (!(E > 1.0)) {
        throw RegimeError(std::string(op_name) + " requires E > 1 (got E = " +
                          std::to_string(E) + ")");
    }
}

double w_at_upper_state(double E, double h) {
    return potential_w(E, h, u_pm(E, h).u_plus);
}

}  // namespace

ScalarBistable ScalarBistable::from_coupled(double E, double h, double v_level) {
    ScalarBistable sb{E * v_level, h / v_level, v_level};
    sb.validate();
    return sb;
}

void ScalarBistable::validate() const {
    if (!(v_level >= 1.0)) {
        throw InvalidParameter("v_level must be >= 1 (got " + std::to_string(v_level) + ")");
    }
    if (!(E_eff > 1.0)) {
        throw RegimeError("scalar comparison equation requires E_eff > 1 (got " +
                          std::to_string(E_eff) + ")");
    }
    if (!(h_eff > 0.0)) {
        throw InvalidParameter("h_eff must be > 0 (got " + std::to_string(h_eff) + ")");
    }
}

double h1(double E) {
    require_e_above_one(E, "h1");
    return (2.0 * E - 1.0 + 2.0 * std::sqrt(E * (E - 1.0))) / E;
}

UPlusMinus u_pm(double E, double h) {
    require_e_above_one(E, "u_pm");
    if (!(h > 0.0)) {
        throw InvalidParameter("u_pm requires h > 0 (got " + std::to_string(h) + ")");
    }
    const double b = 1.0 - 1.0 / (E * h);
    const double disc = b * b - 4.0 * (E - 1.0) / (E * h);
    if (disc < 0.0) {
        throw RegimeError("u_pm: no real steady states; h < h1(E) means the scalar "
                          "equation is below the bistable range (h = " + std::to_string(h) +
                          ", h1 = " + std::to_string(h1(E)) + ")");
    }
    const double s = std::sqrt(disc);
    return {0.5 * (b - s), 0.5 * (b + s)};
}

double potential_w(double E, double h, double u) {
    if (!(h > 0.0)) {
        throw InvalidParameter("potential_w requires h > 0 (got " + std::to_string(h) + ")");
    }
    if (!(u >= 0.0)) {
        throw InvalidParameter("potential_w requires u >= 0 (got " + std::to_string(u) + ")");
    }
    return 0.5 * u * u - u * u * u / 3.0 - u / h +
           std::log1p(E * h * u) / (E * h * h);
}

SpeedSign wave_speed_sign(double E, double h) {
    require_e_above_one(E, "wave_speed_sign");
    if (!(h > h1(E))) {
        // At h = h1 the two states collapse to a double root: no bistable wave.
        throw RegimeError("wave_speed_sign requires the bistable regime h > h1(E) "
                          "(h = " + std::to_string(h) + ", h1 = " + std::to_string(h1(E)) +
                          ")");
    }
    const double w = w_at_upper_state(E, h);
    if (std::abs(w) <= kZeroWTol) return SpeedSign::zero;
    return w < 0.0 ? SpeedSign::negative : SpeedSign::positive;
}

double h_minus(double E) {
    require_e_above_one(E, "h_minus");
    // W(E, ., u+) is increasing, negative at h1(E)+ and positive past the
    // analytic cap 16/3; bisection on that bracket cannot fail.
    const double lo = h1(E) + 1e-9;
    const double hi = 16.0 / 3.0 + 1.0;
    return detail::bisect([&](double h) { return w_at_upper_state(E, h); }, lo, hi, kHTol);
}

double v_bar(double E, double h, double alpha) {
    Params p{E, h, alpha, 1.0, 1.0};
    p.validate();
    return 1.0 + alpha * E / (1.0 + E * h);
}

double h_plus(double E, double alpha) {
    require_e_above_one(E, "h_plus");
    if (!(alpha >= 0.0)) {
        throw InvalidParameter("alpha must be >= 0 (got " + std::to_string(alpha) + ")");
    }
    const double hm = h_minus(E);
    if (alpha == 0.0) return hm;
    const auto f = [&](double h) {
        const double vb = v_bar(E, h, alpha);
        return h - vb * h_minus(E * vb);
    };
    // F is increasing with F(h-(E)) <= 0; grow the upper bound until F > 0.
    double lo = hm;
    double hi = std::max(2.0 * hm, 8.0);
    int guard = 0;
    while (f(hi) <= 0.0 && ++guard < 100) hi *= 2.0;
    return detail::bisect(f, lo, hi, kHTol);
}

ThresholdSet threshold_set(double E, double alpha) {
    require_e_above_one(E, "threshold_set");
    ThresholdSet t;
    t.E = E;
    t.alpha = alpha;
    t.h1 = h1(E);
    t.h_star = h_star(E, alpha).h_star;
    t.h_star_star = h_star_star(E, alpha);
    t.h_minus = h_minus(E);
    t.h_plus = h_plus(E, alpha);
    t.zone_i = {std::max(t.h_star, t.h_minus), t.h_plus};
    t.zone_ii = {t.h_minus, std::min(t.h_star, t.h_plus)};
    return t;
}

const char* to_string(SpeedSign s) {
    switch (s) {
        case SpeedSign::negative: return "negative";
        case SpeedSign::zero: return "zero";
        case SpeedSign::positive: return "positive";
    }
    return "?";
}

}  // namespace predprey
