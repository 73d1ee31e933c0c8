#ifndef PREDPREY_WAVE_THRESHOLDS_HPP
#define PREDPREY_WAVE_THRESHOLDS_HPP

/**
 * @file wave_thresholds.hpp
 * @brief Scalar bistable comparison machinery: the sub/supersolution steady
 *        states u±, the potential W, the wave-speed sign, and the spatial
 *        thresholds h1(E), h-(E) and h+(E,alpha).
 *
 * Freezing the predator at a constant level v turns the prey equation into a
 * scalar bistable reaction-diffusion equation whose unique front speed has
 * the sign of W(E, h, u+). The supersolution (v = 1) yields the extinction
 * threshold h-(E); the subsolution (v = v_bar) yields the invasion threshold
 * h+(E,alpha).
 */

#include <optional>

#include <predprey/kinetics.hpp>

namespace predprey {

/// Effective scalar-equation parameters after freezing the predator at
/// v_level: (E_eff, h_eff) = (E*v_level, h/v_level).
struct ScalarBistable {
    double E_eff;
    double h_eff;
    double v_level;

    /// Builds the frozen-predator scalar equation from coupled parameters.
    static ScalarBistable from_coupled(double E, double h, double v_level);
    void validate() const;
};

enum class SpeedSign { negative, zero, positive };

/// A half-open interval (lo, hi); empty when hi <= lo.
struct ZoneInterval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return !(hi > lo); }
};

/// The five threshold curves evaluated at one (E, alpha), plus the
/// transition subzones they delimit.
struct ThresholdSet {
    double E = 0.0;
    double alpha = 0.0;
    double h1 = 0.0;
    double h_star = 0.0;
    double h_star_star = 0.0;
    double h_minus = 0.0;
    double h_plus = 0.0;
    ZoneInterval zone_i;   ///< (max(h*, h-), h+): non-monotone-wave subzone
    ZoneInterval zone_ii;  ///< (h-, h*): pulse/Turing subzone (may be empty)
};

/// Uniform-extinction threshold: h1(E) = (2E - 1 + 2*sqrt(E(E-1))) / E.
/// Below it the frozen-predator scalar equation has no positive steady state.
double h1(double E);

struct UPlusMinus {
    double u_minus;
    double u_plus;
};

/// The two nonnegative steady states of the scalar equation at predator
/// level 1: roots of -Ehu^2 + (Eh-1)u + (1-E). Requires h >= h1(E).
UPlusMinus u_pm(double E, double h);

/// Antiderivative of the scalar reaction term s(1-s) - Es/(1+Ehs):
/// W(E,h,u) = u^2/2 - u^3/3 - u/h + ln(1+Ehu)/(Eh^2).
double potential_w(double E, double h, double u);

/// Sign of the unique bistable front speed, via sign(W(E,h,u+)).
/// Negative: the extinction state invades; positive: u+ invades.
/// Requires the bistable regime h > h1(E).
SpeedSign wave_speed_sign(double E, double h);

/// Zero-speed threshold of the supersolution equation: the unique root in
/// (h1(E), inf) of h -> W(E, h, u+(E,h)). Increasing in E with limits
/// h-(1+) = 1 and h-(inf) = 16/3.
double h_minus(double E);

/// Uniform predator upper bound: v_bar = 1 + alpha*E/(1+Eh); >= 1, equal to
/// 1 iff alpha = 0.
double v_bar(double E, double h, double alpha);

/// Invasion threshold: the unique root of
/// F(h) = h - v_bar(E,h,alpha) * h-(E * v_bar(E,h,alpha)).
/// Above it the subsolution argument guarantees invasion; h+(E,0) = h-(E).
double h_plus(double E, double alpha);

/// Assembles all five thresholds and the transition subzones at (E, alpha).
ThresholdSet threshold_set(double E, double alpha);

const char* to_string(SpeedSign s);

}  // namespace predprey

#endif  // PREDPREY_WAVE_THRESHOLDS_HPP
