#include <predprey/ode_analysis.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <predprey/detail/rootfind.hpp>

namespace predprey {

namespace {

constexpr int kRootScanCells = 4096;     // uniform scan of (0,1) for P_h roots
constexpr double kRootTol = 1e-12;       // bisection width on u
constexpr double kDegenerateTol = 1e-9;  // |mu - u*| band reported as conditional

/// P_h(u) = (1-u)(1+Ehu)^2 - E(1 + Ehu + E*alpha*u); positive steady states
/// are its roots in (0,1).
double steady_state_cubic(double E, double h, double alpha, double u) {
    const double q = 1.0 + E * h * u;
    return (1.0 - u) * q * q - E * (q + E * alpha * u);
}

/// f_h'(u) = (Eh-1)/E - 2hu; vanishes at mu(h) = (Eh-1)/(2Eh).
double iso_f_prime(double E, double h, double u) {
    return (E * h - 1.0) / E - 2.0 * h * u;
}

/// Roots of P_h in (0,1), ascending. A fixed fine grid cannot miss simple
/// roots of a cubic; the double root at h = h* is handled by the caller.
std::vector<double> positive_roots(double E, double h, double alpha) {
    std::vector<double> roots;
    double u_prev = 0.0;
    double p_prev = steady_state_cubic(E, h, alpha, u_prev);
    for (int k = 1; k <= kRootScanCells; ++k) {
        const double u_k = static_cast<double>(k) / kRootScanCells;
        const double p_k = steady_state_cubic(E, h, alpha, u_k);
        if (p_prev == 0.0 && u_prev > 0.0) {
            roots.push_back(u_prev);
        } else if ((p_prev > 0.0) != (p_k > 0.0) && p_k != 0.0) {
            roots.push_back(detail::bisect(
                [&](double u) { return steady_state_cubic(E, h, alpha, u); }, u_prev, u_k,
                kRootTol));
        }
        u_prev = u_k;
        p_prev = p_k;
    }
    return roots;
}

StabilityKind stability_from_jacobian(const Params& p, double u, double v) {
    const Matrix2 j = jacobian(p, {u, v});
    const double tr = j[0][0] + j[1][1];
    const double det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
    // asymptotically stable iff tr < 0 and det > 0
    return (tr < 0.0 && det > 0.0) ? StabilityKind::stable : StabilityKind::unstable;
}

struct Rk45Tableau {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 5th-order minus 4th-order weights (error estimate)
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600;
    static constexpr double e3 = 500.0 / 1113 - 7571.0 / 16695;
    static constexpr double e4 = 125.0 / 192 - 393.0 / 640;
    static constexpr double e5 = -2187.0 / 6784 + 92097.0 / 339200;
    static constexpr double e6 = 11.0 / 84 - 187.0 / 2100;
    static constexpr double e7 = -1.0 / 40;
};

}  // namespace

double h_of_u(double E, double alpha, double u) {
    if (!(E > 1.0)) {
        throw RegimeError("h_of_u requires E > 1 (got E = " + std::to_string(E) + ")");
    }
    if (!(alpha >= 0.0)) {
        throw InvalidParameter("alpha must be >= 0");
    }
    if (!(u > 0.0 && u < 1.0)) {
        throw RegimeError("h_of_u requires u strictly inside (0,1); the formula diverges "
                          "at both endpoints (got u = " + std::to_string(u) + ")");
    }
    const double s = u * (1.0 - u);
    return (0.5 * E * (1.0 + std::sqrt(1.0 + 4.0 * alpha * s)) + u - 1.0) / (E * s);
}

HStarResult h_star(double E, double alpha) {
    if (!(E > 1.0)) {
        throw RegimeError("h_star requires E > 1; for E <= 1 the control state (0,1) is "
                          "unstable (got E = " + std::to_string(E) + ")");
    }
    if (!(alpha >= 0.0)) {
        throw InvalidParameter("alpha must be >= 0");
    }
    // h(u) is decreasing-then-increasing on (0,1): a grid argmin brackets the
    // unique interior minimum, then golden-section refines it.
    constexpr int n = kRootScanCells;
    int best = 1;
    double best_h = std::numeric_limits<double>::infinity();
    for (int k = 1; k < n; ++k) {
        const double u = static_cast<double>(k) / n;
        const double hv = h_of_u(E, alpha, u);
        if (hv < best_h) {
            best_h = hv;
            best = k;
        }
    }
    const double lo = static_cast<double>(best - 1) / n + (best == 1 ? 1e-300 : 0.0);
    const double hi = static_cast<double>(best + 1) / n - (best == n - 1 ? 1e-300 : 0.0);
    const double u_crit = detail::golden_min(
        [&](double u) { return h_of_u(E, alpha, u); }, std::max(lo, 1e-15),
        std::min(hi, 1.0 - 1e-15), 1e-10);
    return {h_of_u(E, alpha, u_crit), u_crit};
}

double h_star_star(double E, double alpha) {
    const double hs = h_star(E, alpha).h_star;  // validates E, alpha
    const auto cubic = [&](double x) {
        const double y = x + 1.0;
        return y * y * y - 4.0 * E * (x * x + x * (E * alpha + 1.0) - E * alpha);
    };
    // The largest root of the cubic in x = Eh lies above E*h_star, where the
    // cubic is negative; grow the upper bound until it turns positive.
    double lo = E * hs;
    double hi = std::max(2.0 * lo, 8.0 * E);
    int guard = 0;
    while (cubic(hi) <= 0.0 && ++guard < 200) hi *= 2.0;
    const double x = detail::bisect(cubic, lo, hi, 1e-10 * std::max(1.0, E));
    return x / E;
}

std::vector<SteadyState> steady_states(double E, double h, double alpha, double r) {
    Params p{E, h, alpha, r, 1.0};
    p.validate();

    std::vector<SteadyState> out;
    out.push_back({0.0, 0.0, SteadyStateKind::trivial_00,
                   stability_from_jacobian(p, 0.0, 0.0), std::nullopt});
    out.push_back({1.0, 0.0, SteadyStateKind::trivial_10,
                   stability_from_jacobian(p, 1.0, 0.0), std::nullopt});
    out.push_back({0.0, 1.0, SteadyStateKind::control_01,
                   stability_from_jacobian(p, 0.0, 1.0), std::nullopt});

    std::vector<double> roots = positive_roots(E, h, alpha);
    if (roots.empty() && E > 1.0) {
        // P_h has a double root exactly at h = h*; a sign scan cannot see it.
        const HStarResult hs = h_star(E, alpha);
        if (std::abs(h - hs.h_star) <= kDegenerateTol) roots.push_back(hs.u_crit);
    }

    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double u = roots[i];
        SteadyState s;
        s.u = u;
        s.v = iso_f(p, u);
        s.kind = (i + 1 == roots.size()) ? SteadyStateKind::positive_high
                                         : SteadyStateKind::positive_low;
        if (E > 1.0) {
            if (s.kind == SteadyStateKind::positive_low) {
                s.stability = StabilityKind::unstable;  // saddle: det(J) < 0
            } else {
                const double mu = (E * h - 1.0) / (2.0 * E * h);
                if (mu > u - kDegenerateTol) {
                    s.stability = StabilityKind::conditional;
                    s.r_crit = theta(p, u) * iso_f_prime(E, h, u) / s.v;
                } else {
                    s.stability = StabilityKind::stable;
                }
            }
        } else {
            s.stability = stability_from_jacobian(p, s.u, s.v);
        }
        out.push_back(s);
    }
    return out;
}

std::optional<double> r_crit(double E, double h, double alpha) {
    Params p{E, h, alpha, 1.0, 1.0};
    p.validate();
    p.require_predation_dominant("r_crit");
    std::vector<double> roots = positive_roots(E, h, alpha);
    if (roots.empty()) {
        const HStarResult hs = h_star(E, alpha);
        if (std::abs(h - hs.h_star) <= kDegenerateTol) {
            roots.push_back(hs.u_crit);
        } else {
            throw RegimeError("r_crit requires a positive steady state: h < h*(E,alpha) "
                              "has none (h = " + std::to_string(h) + ", h* = " +
                              std::to_string(hs.h_star) + ")");
        }
    }
    const double u = roots.back();
    const double mu = (E * h - 1.0) / (2.0 * E * h);
    if (mu > u - kDegenerateTol) {
        return theta(p, u) * iso_f_prime(E, h, u) / iso_f(p, u);
    }
    return std::nullopt;  // h >= h**: stable for every r
}

OdeTrajectory integrate_ode(const Params& p, double u0, double v0, double t_end) {
    p.validate();
    if (!(t_end > 0.0)) {
        throw InvalidParameter("t_end must be > 0 (got " + std::to_string(t_end) + ")");
    }
    if (!(u0 > 0.0 && u0 <= 1.0)) {
        throw InvalidParameter("u0 must lie in (0,1] (got " + std::to_string(u0) + ")");
    }
    if (!(v0 >= 1.0)) {
        throw InvalidParameter("v0 must be >= 1 (got " + std::to_string(v0) + ")");
    }

    constexpr double rtol = 1e-8;
    constexpr double atol = 1e-10;
    constexpr double converged_norm = 1e-10;
    using T = Rk45Tableau;

    const auto rhs = [&](double u, double v) { return reaction_rhs_unchecked(p, u, v); };

    OdeTrajectory traj;
    double t = 0.0, u = u0, v = v0;
    traj.t.push_back(t);
    traj.u.push_back(u);
    traj.v.push_back(v);

    ReactionRate k1 = rhs(u, v);
    double dt = 1e-3;
    long steps = 0;
    while (t < t_end) {
        if (std::max(std::abs(k1.du_dt), std::abs(k1.dv_dt)) < converged_norm) {
            traj.converged = true;
            break;
        }
        if (++steps > 5'000'000) {
            throw std::runtime_error("integrate_ode: step limit exceeded");
        }
        dt = std::min(dt, t_end - t);

        const ReactionRate k2 = rhs(u + dt * T::a21 * k1.du_dt, v + dt * T::a21 * k1.dv_dt);
        const ReactionRate k3 = rhs(u + dt * (T::a31 * k1.du_dt + T::a32 * k2.du_dt),
                                    v + dt * (T::a31 * k1.dv_dt + T::a32 * k2.dv_dt));
        const ReactionRate k4 =
            rhs(u + dt * (T::a41 * k1.du_dt + T::a42 * k2.du_dt + T::a43 * k3.du_dt),
                v + dt * (T::a41 * k1.dv_dt + T::a42 * k2.dv_dt + T::a43 * k3.dv_dt));
        const ReactionRate k5 =
            rhs(u + dt * (T::a51 * k1.du_dt + T::a52 * k2.du_dt + T::a53 * k3.du_dt +
                          T::a54 * k4.du_dt),
                v + dt * (T::a51 * k1.dv_dt + T::a52 * k2.dv_dt + T::a53 * k3.dv_dt +
                          T::a54 * k4.dv_dt));
        const ReactionRate k6 =
            rhs(u + dt * (T::a61 * k1.du_dt + T::a62 * k2.du_dt + T::a63 * k3.du_dt +
                          T::a64 * k4.du_dt + T::a65 * k5.du_dt),
                v + dt * (T::a61 * k1.dv_dt + T::a62 * k2.dv_dt + T::a63 * k3.dv_dt +
                          T::a64 * k4.dv_dt + T::a65 * k5.dv_dt));

        const double u_new = u + dt * (T::b1 * k1.du_dt + T::b3 * k3.du_dt +
                                       T::b4 * k4.du_dt + T::b5 * k5.du_dt + T::b6 * k6.du_dt);
        const double v_new = v + dt * (T::b1 * k1.dv_dt + T::b3 * k3.dv_dt +
                                       T::b4 * k4.dv_dt + T::b5 * k5.dv_dt + T::b6 * k6.dv_dt);
        const ReactionRate k7 = rhs(u_new, v_new);

        const double err_u = dt * (T::e1 * k1.du_dt + T::e3 * k3.du_dt + T::e4 * k4.du_dt +
                                   T::e5 * k5.du_dt + T::e6 * k6.du_dt + T::e7 * k7.du_dt);
        const double err_v = dt * (T::e1 * k1.dv_dt + T::e3 * k3.dv_dt + T::e4 * k4.dv_dt +
                                   T::e5 * k5.dv_dt + T::e6 * k6.dv_dt + T::e7 * k7.dv_dt);
        const double sc_u = atol + rtol * std::max(std::abs(u), std::abs(u_new));
        const double sc_v = atol + rtol * std::max(std::abs(v), std::abs(v_new));
        const double err = std::sqrt(0.5 * ((err_u / sc_u) * (err_u / sc_u) +
                                            (err_v / sc_v) * (err_v / sc_v)));

        if (err <= 1.0) {
            t += dt;
            u = u_new;
            v = v_new;
            k1 = k7;  // FSAL
            traj.t.push_back(t);
            traj.u.push_back(u);
            traj.v.push_back(v);
        }
        const double factor =
            (err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        dt = std::max(dt * factor, 1e-14);
    }

    traj.u_final = u;
    traj.v_final = v;
    return traj;
}

OdeRegime classify_ode_regime(double E, double h, double alpha) {
    OdeRegime regime;
    if (!(E > 1.0)) {
        regime.label = OdeRegimeLabel::unstable_control;
        return regime;
    }
    regime.h_star = h_star(E, alpha).h_star;
    regime.h_star_star = h_star_star(E, alpha);
    if (h < *regime.h_star) {
        regime.label = OdeRegimeLabel::monostable;
    } else if (h > *regime.h_star_star) {
        regime.label = OdeRegimeLabel::bistable;
    } else {
        regime.label = OdeRegimeLabel::conditional_bistable;
    }
    return regime;
}

const char* to_string(SteadyStateKind k) {
    switch (k) {
        case SteadyStateKind::trivial_00: return "trivial_00";
        case SteadyStateKind::trivial_10: return "trivial_10";
        case SteadyStateKind::control_01: return "control_01";
        case SteadyStateKind::positive_low: return "positive_low";
        case SteadyStateKind::positive_high: return "positive_high";
    }
    return "?";
}

const char* to_string(StabilityKind k) {
    switch (k) {
        case StabilityKind::stable: return "stable";
        case StabilityKind::unstable: return "unstable";
        case StabilityKind::conditional: return "conditional";
    }
    return "?";
}

const char* to_string(OdeRegimeLabel l) {
    switch (l) {
        case OdeRegimeLabel::unstable_control: return "unstable_control";
        case OdeRegimeLabel::monostable: return "monostable";
        case OdeRegimeLabel::conditional_bistable: return "conditional_bistable";
        case OdeRegimeLabel::bistable: return "bistable";
    }
    return "?";
}

}  // namespace predprey
