#include "qgw/evolution.hpp"

#include <cmath>

#include "qgw/errors.hpp"

namespace qgw {

WaveFunction WaveFunction::basis_state(std::size_t n, SiteId site) {
    if (site >= n) {
        throw DimensionMismatchError("basis state: site " + std::to_string(site) +
                                     " out of range (n=" + std::to_string(n) + ")");
    }
    WaveFunction psi;
    psi.amplitudes.assign(n, Complex(0.0, 0.0));
    psi.amplitudes[site] = Complex(1.0, 0.0);
    return psi;
}

double WaveFunction::norm() const {
    double sum = 0.0;
    for (const Complex& a : amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

Complex inner_product(const WaveFunction& a, const WaveFunction& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("inner product: sizes " +
                                     std::to_string(a.size()) + " vs " +
                                     std::to_string(b.size()));
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return sum;
}

WaveFunction evolve(const SpectralDecomposition& dec, const WaveFunction& psi0,
                    double t) {
    const std::size_t n = dec.n;
    if (psi0.size() != n) {
        throw DimensionMismatchError("evolve: state size " +
                                     std::to_string(psi0.size()) +
                                     " vs decomposition size " + std::to_string(n));
    }
    WaveFunction psi;
    psi.amplitudes.assign(n, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const double* vk = &dec.eigenvectors[k * n];
        Complex coeff(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            coeff += vk[i] * psi0.amplitudes[i];
        }
        const double phase = -dec.eigenvalues[k] * t;
        coeff *= Complex(std::cos(phase), std::sin(phase));
        for (std::size_t i = 0; i < n; ++i) {
            psi.amplitudes[i] += coeff * vk[i];
        }
    }
    return psi;
}

double transition_probability(const SpectralDecomposition& dec, SiteId from,
                              SiteId to, double t) {
    const std::size_t n = dec.n;
    if (from >= n || to >= n) {
        throw DimensionMismatchError("transition probability: site " +
                                     std::to_string(from >= n ? from : to) +
                                     " out of range (n=" + std::to_string(n) + ")");
    }
    Complex amp(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const double* vk = &dec.eigenvectors[k * n];
        const double phase = -dec.eigenvalues[k] * t;
        amp += vk[to] * vk[from] * Complex(std::cos(phase), std::sin(phase));
    }
    double p = std::norm(amp);
    return p > 1.0 ? 1.0 : p;
}

ProbabilitySeries probability_series(const SpectralDecomposition& dec, SiteId from,
                                     SiteId to, const TimeGrid& grid) {
    std::vector<double> values(grid.steps());
    for (std::size_t i = 0; i < grid.steps(); ++i) {
        values[i] = transition_probability(dec, from, to, grid.time(i));
    }
    return ProbabilitySeries(grid, std::move(values));
}

}  // namespace qgw
