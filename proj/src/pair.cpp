#include "qgw/pair.hpp"

#include <algorithm>
#include <cmath>

#include "qgw/errors.hpp"

namespace qgw {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

const char* to_string(Statistics stats) {
    return stats == Statistics::Fermion ? "fermion" : "boson";
}

SiteSubset::SiteSubset(std::vector<SiteId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SiteSubset SiteSubset::range(SiteId first, SiteId last) {
    if (first > last) {
        throw ValidationError("site subset: empty range " + std::to_string(first) +
                              "-" + std::to_string(last));
    }
    std::vector<SiteId> m(last - first + 1);
    for (std::size_t k = 0; k < m.size(); ++k) {
        m[k] = first + k;
    }
    return SiteSubset(std::move(m));
}

SiteSubset SiteSubset::all(std::size_t n) {
    if (n == 0) {
        return SiteSubset();
    }
    return range(0, n - 1);
}

bool SiteSubset::contains(SiteId id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
}

SiteId SiteSubset::max_member() const { return members_.back(); }

std::size_t pair_dimension(std::size_t n_sites, Statistics stats) {
    if (n_sites < 1) {
        throw ValidationError("pair dimension: need at least one site");
    }
    return stats == Statistics::Boson ? n_sites * (n_sites + 1) / 2
                                      : n_sites * (n_sites - 1) / 2;
}

PairState initial_pair(std::size_t n_sites, SiteId i, SiteId j, Statistics stats) {
    if (i >= n_sites || j >= n_sites) {
        throw DimensionMismatchError("initial pair: site " +
                                     std::to_string(i >= n_sites ? i : j) +
                                     " out of range (n=" + std::to_string(n_sites) +
                                     ")");
    }
    if (i == j) {
        if (stats == Statistics::Fermion) {
            throw PauliViolationError("initial pair: two fermions on site " +
                                      std::to_string(i));
        }
        throw ValidationError("initial pair: doubly occupied site " +
                              std::to_string(i) +
                              " not representable with orthogonal orbitals");
    }
    return PairState{WaveFunction::basis_state(n_sites, i),
                     WaveFunction::basis_state(n_sites, j), stats};
}

Complex pair_amplitude(const PairState& state, SiteId i, SiteId j) {
    const std::size_t n = state.size();
    if (i >= n || j >= n) {
        throw DimensionMismatchError("pair amplitude: site " +
                                     std::to_string(i >= n ? i : j) +
                                     " out of range (n=" + std::to_string(n) + ")");
    }
    if (state.statistics == Statistics::Fermion && i == j) {
        return Complex(0.0, 0.0);
    }
    const Complex direct = state.orbital_a.amplitudes[i] * state.orbital_b.amplitudes[j];
    const Complex exchanged =
        state.orbital_a.amplitudes[j] * state.orbital_b.amplitudes[i];
    const Complex sum =
        state.statistics == Statistics::Boson ? direct + exchanged : direct - exchanged;
    return sum * kInvSqrt2;
}

PairState evolve_pair(const SpectralDecomposition& dec, const PairState& pair0,
                      double t) {
    return PairState{evolve(dec, pair0.orbital_a, t), evolve(dec, pair0.orbital_b, t),
                     pair0.statistics};
}

double p_perp(const PairState& state, const SiteSubset& subset) {
    if (subset.empty()) {
        return 0.0;
    }
    if (subset.max_member() >= state.size()) {
        throw DimensionMismatchError("p_perp: subset site " +
                                     std::to_string(subset.max_member()) +
                                     " out of range (n=" +
                                     std::to_string(state.size()) + ")");
    }
    double sum = 0.0;
    for (SiteId i : subset.members()) {
        for (SiteId j : subset.members()) {
            sum += std::norm(pair_amplitude(state, i, j));
        }
    }
    return sum;
}

double pair_norm(const PairState& state) {
    return p_perp(state, SiteSubset::all(state.size()));
}

ProbabilitySeries p_perp_series(const SpectralDecomposition& dec,
                                const PairState& pair0, const SiteSubset& subset,
                                const TimeGrid& grid) {
    std::vector<double> values(grid.steps());
    for (std::size_t k = 0; k < grid.steps(); ++k) {
        values[k] = p_perp(evolve_pair(dec, pair0, grid.time(k)), subset);
    }
    return ProbabilitySeries(grid, std::move(values));
}

}  // namespace qgw
