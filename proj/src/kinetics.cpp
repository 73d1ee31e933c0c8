#include <predprey/kinetics.hpp>

#include <cmath>
#include <string>

namespace predprey {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0)) {
        throw InvalidParameter(std::string(name) + " must be > 0 (got " +
                               std::to_string(value) + ")");
    }
}

void require_nonnegative(double value, const char* name) {
    if (!(value >= 0.0)) {
        throw InvalidParameter(std::string(name) + " must be >= 0 (got " +
                               std::to_string(value) + ")");
    }
}

}  // namespace

void RawParams::validate() const {
    require_positive(D_u, "D_u");
    require_positive(D_v, "D_v");
    require_positive(r1, "r1");
    require_positive(r2, "r2");
    require_positive(K1, "K1");
    require_positive(K2, "K2");
    require_positive(E_raw, "E_raw");
    require_positive(h_raw, "h_raw");
    require_positive(gamma, "gamma");
}

void Params::validate() const {
    require_positive(E, "E");
    require_nonnegative(h, "h");
    require_nonnegative(alpha, "alpha");
    require_positive(r, "r");
    require_positive(d, "d");
}

void Params::require_predation_dominant(const char* op_name) const {
    if (!(E > 1.0)) {
        throw RegimeError(std::string(op_name) +
                          " requires E > 1; for E <= 1 the prey-free state (0,1) is "
                          "unstable and no extinction threshold exists (E = " +
                          std::to_string(E) + ")");
    }
}

void KineticsPoint::validate() const {
    require_nonnegative(u, "u");
    require_nonnegative(v, "v");
}

Params nondimensionalize(const RawParams& raw) {
    raw.validate();
    Params p;
    p.d = raw.D_v / raw.D_u;
    p.r = raw.r2 / raw.r1;
    p.E = raw.E_raw * raw.K2 / raw.r1;
    p.h = raw.r1 * raw.h_raw * raw.K1 / raw.K2;
    p.alpha = (raw.gamma * raw.K1 / raw.K2) / p.r;
    p.validate();
    return p;
}

ReactionRate reaction_rhs(const Params& p, const KineticsPoint& pt) {
    pt.validate();
    const double denom = 1.0 + p.E * p.h * pt.u;
    const double predation = p.E * pt.u * pt.v / denom;
    return {pt.u * (1.0 - pt.u) - predation,
            p.r * (pt.v * (1.0 - pt.v) + p.alpha * predation)};
}

double iso_f(const Params& p, double u) {
    require_nonnegative(u, "u");
    return (1.0 - u) * (1.0 + p.E * p.h * u) / p.E;
}

double iso_g(const Params& p, double u) {
    require_nonnegative(u, "u");
    return 1.0 + p.alpha * p.E * u / (1.0 + p.E * p.h * u);
}

double theta(const Params& p, double u) {
    require_nonnegative(u, "u");
    return p.E * u / (1.0 + p.E * p.h * u);
}

Matrix2 jacobian(const Params& p, const KineticsPoint& pt) {
    pt.validate();
    const double denom = 1.0 + p.E * p.h * pt.u;
    const double theta_u = p.E * pt.u / denom;
    // d/du [E u / (1+Ehu)] = E / (1+Ehu)^2
    const double dtheta_du = p.E / (denom * denom);
    Matrix2 j;
    j[0][0] = 1.0 - 2.0 * pt.u - dtheta_du * pt.v;
    j[0][1] = -theta_u;
    j[1][0] = p.r * p.alpha * pt.v * dtheta_du;
    j[1][1] = p.r * (1.0 - 2.0 * pt.v + p.alpha * theta_u);
    return j;
}

}  // namespace predprey
