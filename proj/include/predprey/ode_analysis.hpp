#ifndef PREDPREY_ODE_ANALYSIS_HPP
#define PREDPREY_ODE_ANALYSIS_HPP

/**
 * @file ode_analysis.hpp
 * @brief Steady states, stability, and the space-free regime thresholds
 *        h*(E,alpha) and h**(E,alpha).
 *
 * Positive steady states (u, f_h(u)) are the roots in (0,1) of the cubic
 *
 *     P_h(u) = (1-u)(1+Ehu)^2 - E(1 + Ehu + E*alpha*u),
 *
 * equivalently of f_h(u) = g_h(u). For E > 1 there are either zero (h < h*)
 * or two such roots (h > h*), with a double root at h = h*.
 */

#include <optional>
#include <string>
#include <vector>

#include <predprey/kinetics.hpp>

namespace predprey {

enum class SteadyStateKind { trivial_00, trivial_10, control_01, positive_low, positive_high };

enum class StabilityKind {
    stable,
    unstable,
    conditional  ///< stable iff r > r_crit; r_crit carried alongside
};

/// A stationary point of the space-free system with its stability verdict.
struct SteadyState {
    double u = 0.0;
    double v = 0.0;
    SteadyStateKind kind = SteadyStateKind::trivial_00;
    StabilityKind stability = StabilityKind::unstable;
    /// Set when stability == conditional: the growth-rate threshold below
    /// which the coexistence state loses stability.
    std::optional<double> r_crit;
};

enum class OdeRegimeLabel { unstable_control, monostable, conditional_bistable, bistable };

/// Placement of (E, h, alpha) relative to the h* and h** curves.
struct OdeRegime {
    OdeRegimeLabel label = OdeRegimeLabel::unstable_control;
    std::optional<double> h_star;       ///< present when E > 1
    std::optional<double> h_star_star;  ///< present when E > 1
};

/// Adaptive Runge-Kutta trajectory of the space-free system.
struct OdeTrajectory {
    std::vector<double> t;
    std::vector<double> u;
    std::vector<double> v;
    bool converged = false;  ///< true when ||rhs||_inf dropped below 1e-10
    double u_final = 0.0;
    double v_final = 0.0;
};

/// The handling time at which (u, f_h(u)) is a positive steady state:
/// h(u) = [ E/2 (1 + sqrt(1+4 alpha u(1-u))) + u - 1 ] / (E u (1-u)).
/// Requires E > 1 and u strictly inside (0,1); h(u) diverges at both ends.
double h_of_u(double E, double alpha, double u);

struct HStarResult {
    double h_star;
    double u_crit;  ///< argmin of h_of_u on (0,1)
};

/// Minimum of h_of_u over (0,1). Below it the space-free system has no
/// positive steady state; above it there are exactly two.
HStarResult h_star(double E, double alpha);

/// The stability threshold above h*: unique root h of
/// (Eh+1)^3 = 4E((Eh)^2 + Eh(E*alpha+1) - E*alpha) with Eh in (E*h_star, inf).
/// The coexistence state is stable for every r when h > h**.
double h_star_star(double E, double alpha);

/// All nonnegative steady states of the space-free system at the given
/// parameters, with stability verdicts: the three trivial states plus the
/// positive roots of P_h in (0,1).
std::vector<SteadyState> steady_states(double E, double h, double alpha, double r);

/// Growth-rate threshold for the coexistence state when h sits in the
/// conditional window (h*, h**): (u*,v*) is unstable iff r < r_crit.
/// Returns nullopt when the state is unconditionally stable (h >= h**).
/// Throws RegimeError when no positive steady state exists.
std::optional<double> r_crit(double E, double h, double alpha);

/// Dormand-Prince RK45 integration of the space-free system from
/// (u0, v0) with u0 in (0,1] and v0 >= 1; relative tolerance 1e-8,
/// absolute 1e-10. Stops early once ||rhs||_inf < 1e-10.
OdeTrajectory integrate_ode(const Params& p, double u0, double v0, double t_end);

/// Regime placement from the h*, h** thresholds (labels per the E-h plane).
OdeRegime classify_ode_regime(double E, double h, double alpha);

const char* to_string(SteadyStateKind k);
const char* to_string(StabilityKind k);
const char* to_string(OdeRegimeLabel l);

}  // namespace predprey

#endif  // PREDPREY_ODE_ANALYSIS_HPP
