#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qgw/series.hpp"
#include "qgw/spectral.hpp"

namespace qgw {

using Complex = std::complex<double>;

/// Single-particle state: one complex amplitude per site.
struct WaveFunction {
    std::vector<Complex> amplitudes;

    static WaveFunction basis_state(std::size_t n, SiteId site);

    std::size_t size() const { return amplitudes.size(); }
    double norm() const;
};

/// Inner product <a|b> (conjugate-linear in a).
Complex inner_product(const WaveFunction& a, const WaveFunction& b);

/// psi(t) = sum_k exp(-i λ_k t) v_k <v_k|psi0>. Exact up to the eigensolver
/// tolerance; norm-preserving for any t, negative t runs the evolution
/// backwards.
WaveFunction evolve(const SpectralDecomposition& dec, const WaveFunction& psi0,
                    double t);

/// |<to| exp(-iHt) |from>|^2.
double transition_probability(const SpectralDecomposition& dec, SiteId from,
                              SiteId to, double t);

/// transition_probability sampled over a grid.
ProbabilitySeries probability_series(const SpectralDecomposition& dec, SiteId from,
                                     SiteId to, const TimeGrid& grid);

}  // namespace qgw
