#ifndef PREDPREY_PDE_SIM_HPP
#define PREDPREY_PDE_SIM_HPP

/**
 * @file pde_sim.hpp
 * @brief 1-D method-of-lines simulation of the coupled system and of the
 *        frozen-predator scalar comparison equations, with front tracking
 *        and outcome/regime classification.
 *
 * Space is truncated to [0, L] with zero-flux (Neumann) boundaries; time
 * stepping is explicit Euler under the diffusion CFL bound
 * dt <= dx^2 / (2 max(1,d)). Results are meaningful while fronts stay a
 * 10%-of-L buffer away from both boundaries.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <predprey/kinetics.hpp>
#include <predprey/wave_thresholds.hpp>

namespace predprey {

/// Uniform 1-D lattice on [0, L] with nodes at both endpoints.
struct Grid {
    double L = 400.0;
    int nx = 4096;

    double dx() const { return L / (nx - 1); }
    double x(int i) const { return i * dx(); }
    void validate() const;
};

/// Discretized concentrations at one instant.
struct Field {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;

    int nx() const { return static_cast<int>(u.size()); }
};

/// Initial prey profile: a smoothed step 1/(1+exp(k(x-x0))), 1 on the left,
/// 0 on the right; the predator starts uniformly at 1.
struct InitialProfile {
    double x0 = 200.0;  ///< front location; must sit in [0.1 L, 0.9 L]
    double k = 1.0;     ///< steepness
};

struct SimConfig {
    Grid grid;
    double dt = 0.0;        ///< 0 = auto: 0.9 * dx^2 / (2 max(1,d))
    double t_end = 2000.0;
    double front_level = 0.0;  ///< 0 = auto: half the expected plateau level
    double extinction_eps = 1e-6;
    InitialProfile ic;

    /// Effective time step for parameters p (resolves the auto default).
    double resolved_dt(const Params& p) const;
    /// Throws InvalidParameter/RegimeError when a field violates its invariant,
    /// including the CFL bound dt <= dx^2/(2 max(1,d)).
    void validate(const Params& p) const;
};

enum class Outcome { uniform_extinction, extinction, invasion, undetermined };

enum class SpatialRegime { ETW, ITW, pulse, turing, uniform_decay, undetermined };

/// Front location samples x_f(t) at the detection level, and the
/// least-squares speed fitted on the last 50% of valid samples.
struct FrontObservation {
    std::vector<double> times;
    std::vector<double> positions;
    double fitted_speed = 0.0;
    bool speed_valid = false;  ///< false when fewer than 4 usable samples exist
};

/// Aggregate diagnostics of a run (extremes are over all sampled steps).
struct SimDiagnostics {
    double max_u_final = 0.0;
    double spatial_variance_final = 0.0;
    double temporal_residual = 0.0;  ///< ||f(t_fin) - f(t_fin - 1)||_inf
    double min_v_seen = 0.0;
    double max_v_seen = 0.0;
    double min_u_preclamp_seen = 0.0;
    double max_u_seen = 0.0;
    double t_final = 0.0;
    std::string stop_reason;  ///< "t_end", "extinct", "front_left", "front_right", "stationary"
};

/// Classification of a simulation: extinction/invasion outcome, spatial
/// regime, and the measured front speed.
struct OutcomeReport {
    Outcome outcome = Outcome::undetermined;
    SpatialRegime regime = SpatialRegime::undetermined;
    double front_speed = 0.0;
    SimDiagnostics diagnostics;
};

struct SimResult {
    Field final_field;
    FrontObservation front;
    OutcomeReport report;
    /// Thinned snapshot history (always spans the full run; used by classify).
    std::vector<Field> history;
};

/// Builds the initial field from the configured profile.
Field init_field(const SimConfig& cfg);

/// One explicit Euler step: central Laplacian with zero-flux boundaries plus
/// the reaction terms; negative undershoots above -1e-12 are clamped to 0.
/// Throws NumericalBlowup (carrying the node) if a non-finite value appears.
Field step(const Params& p, const Field& f, const SimConfig& cfg);

/// Test hook: the same step with the reaction terms disabled (pure diffusion).
Field step_diffusion_only(const Params& p, const Field& f, const SimConfig& cfg);

/// Advances the coupled system to t_end, or stops early once the outcome is
/// decided (prey below extinction_eps everywhere, a clean front reaching a
/// boundary buffer, or a stationary profile). The report's outcome is
/// `undetermined` when nothing fired by t_end.
SimResult run(const Params& p, const SimConfig& cfg);

/// Classification decision tree applied to a sampled history (the final field
/// is the last entry). `thresholds` may be absent when E <= 1.
OutcomeReport classify(const std::vector<Field>& history,
                       const std::optional<ThresholdSet>& thresholds, const Params& p,
                       const SimConfig& cfg);

/// Simulates the frozen-predator scalar comparison equation and measures the
/// front speed. The returned history holds v identically at sb.v_level.
SimResult scalar_sim(const ScalarBistable& sb, const SimConfig& cfg);

/// Spec surface of scalar_sim: just the front observation.
FrontObservation scalar_run(const ScalarBistable& sb, const SimConfig& cfg);

/// FNV-1a hash of (nx, u bits, v bits, t bits); the run determinism witness.
std::uint64_t field_hash(const Field& f);

const char* to_string(Outcome o);
const char* to_string(SpatialRegime r);

}  // namespace predprey

#endif  // PREDPREY_PDE_SIM_HPP
