#ifndef PREDPREY_KINETICS_HPP
#define PREDPREY_KINETICS_HPP

/**
 * @file kinetics.hpp
 * @brief Dimensionless predator-prey model: parameter conversion and the
 *        pointwise reaction functions shared by every analysis module.
 *
 * The model is the logistic prey / logistic generalist-predator system with
 * a Holling type II functional response,
 *
 *     du/dt = u(1-u) - E u v / (1 + E h u)
 *     dv/dt = r ( v(1-v) + alpha * E u v / (1 + E h u) )
 *
 * in dimensionless form. All functions here are pure and reentrant.
 */

#include <array>

#include <predprey/errors.hpp>

namespace predprey {

/// Dimensional model inputs. All fields strictly positive.
struct RawParams {
    double D_u;    ///< prey diffusion rate (length^2/time)
    double D_v;    ///< predator diffusion rate (length^2/time)
    double r1;     ///< prey growth rate (1/time)
    double r2;     ///< predator growth rate (1/time)
    double K1;     ///< prey carrying capacity (density)
    double K2;     ///< predator carrying capacity (density)
    double E_raw;  ///< encounter rate (1/(density*time))
    double h_raw;  ///< handling time (time)
    double gamma;  ///< conversion efficiency (dimensionless)

    /// Throws InvalidParameter if any field is not strictly positive.
    void validate() const;
};

/// Dimensionless parameter bundle; the coordinate of every analysis.
struct Params {
    double E = 2.0;      ///< encounter rate, > 0
    double h = 1.0;      ///< handling time, >= 0
    double alpha = 0.0;  ///< conversion rate, >= 0
    double r = 1.0;      ///< relative predator growth rate, > 0
    double d = 1.0;      ///< relative predator diffusion, > 0

    void validate() const;
    /// Throws RegimeError unless E > 1 (threshold analyses need a stable control state).
    void require_predation_dominant(const char* op_name) const;
};

/// One point of the (prey, predator) phase plane; both components >= 0.
struct KineticsPoint {
    double u = 0.0;
    double v = 0.0;

    void validate() const;
};

/// Reaction rates (du/dt, dv/dt) at a phase point.
struct ReactionRate {
    double du_dt;
    double dv_dt;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Converts dimensional inputs to the dimensionless bundle:
/// d = D_v/D_u, r = r2/r1, E = E_raw*K2/r1, h = r1*h_raw*K1/K2,
/// alpha = (gamma*K1/K2)/r.
Params nondimensionalize(const RawParams& raw);

/// Space-free reaction terms of the coupled system.
ReactionRate reaction_rhs(const Params& p, const KineticsPoint& pt);

/// Same reaction terms without input validation; for solver inner loops,
/// where transient sub-epsilon undershoots of u are tolerated.
inline ReactionRate reaction_rhs_unchecked(const Params& p, double u, double v) noexcept {
    const double predation = p.E * u * v / (1.0 + p.E * p.h * u);
    return {u * (1.0 - u) - predation, p.r * (v * (1.0 - v) + p.alpha * predation)};
}

/// Prey nullcline level: f_h(u) = (1-u)(1+Ehu)/E.
double iso_f(const Params& p, double u);

/// Predator nullcline level: g_h(u) = 1 + alpha*E*u/(1+Ehu).
double iso_g(const Params& p, double u);

/// Holling II predation kernel: theta(u) = E*u/(1+Ehu).
double theta(const Params& p, double u);

/// Exact Jacobian of reaction_rhs at a phase point, [[d(du)/du, d(du)/dv],
/// [d(dv)/du, d(dv)/dv]]. At a positive steady state it reduces to
/// [[theta*f', -theta], [r v g', -r v]].
Matrix2 jacobian(const Params& p, const KineticsPoint& pt);

}  // namespace predprey

#endif  // PREDPREY_KINETICS_HPP
