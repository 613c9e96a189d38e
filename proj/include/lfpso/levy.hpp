#pragma once

#include <cmath>
#include <stdexcept>

#include "lfpso/geometry.hpp"
#include "lfpso/params.hpp"
#include "lfpso/rng.hpp"

namespace lfpso {

struct LevyParams {
    double beta = 1.0;        // stable exponent
    double scale = 1.0;       // meters per unit raw step
    double step_cap = 1e300;  // meters

    static LevyParams from(const SimParams& p) {
        return {p.beta, p.levy_scale, p.levy_step_cap};
    }
};

/// Mantegna's sigma_u for the ratio sampler: with u ~ N(0, sigma_u^2) and
/// v ~ N(0,1), u/|v|^(1/beta) follows a Levy-stable law of exponent beta.
///
///   sigma_u = [ G(1+b) sin(pi b/2) / ( G((1+b)/2) b 2^((b-1)/2) ) ]^(1/b)
///
/// Valid for beta in [0.3, 1.99]; sigma_u(1) = 1 exactly.
inline double mantegna_sigma(double beta) {
    if (!(beta >= 0.3 && beta <= 1.99))
        throw std::invalid_argument("mantegna_sigma: beta must lie in [0.3, 1.99]");
    const double num = std::tgamma(1.0 + beta) * std::sin(kPi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                       std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

struct LevyDraw {
    double step_size = 0.0;   // meters, in (0, step_cap]
    double direction = 0.0;   // radians, uniform on [0, 2*pi)
};

/// Step length from a given Gaussian pair (u already scaled by sigma_u).
/// Exposed so tests can inject u and v directly.
inline double step_from_normals(double u, double v, const LevyParams& p) {
    const double raw = u / std::pow(std::abs(v), 1.0 / p.beta);
    return std::min(p.scale * std::abs(raw), p.step_cap);
}

/// Draws one Levy step: u ~ N(0, sigma_u^2), v ~ N(0,1), length
/// min(scale*|u/|v|^(1/beta)|, cap), direction uniform. Zero draws of u or
/// v are redrawn so the returned length is strictly positive.
inline LevyDraw draw_step(RngStream& rng, const LevyParams& p) {
    const double sigma = mantegna_sigma(p.beta);
    double u = sigma * rng.normal();
    while (u == 0.0) u = sigma * rng.normal();
    double v = rng.normal();
    while (v == 0.0) v = rng.normal();
    LevyDraw d;
    d.step_size = step_from_normals(u, v, p);
    d.direction = rng.uniform(0.0, kTwoPi);
    return d;
}

} // namespace lfpso
