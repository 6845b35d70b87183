#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qgw/evolution.hpp"
#include "qgw/series.hpp"
#include "qgw/spectral.hpp"

namespace qgw {

enum class Statistics { Fermion, Boson };

const char* to_string(Statistics stats);

/// Sorted set of site indices. Bounds are checked against the state size at
/// the point of use.
class SiteSubset {
  public:
    SiteSubset() = default;
    explicit SiteSubset(std::vector<SiteId> members);
    SiteSubset(std::initializer_list<SiteId> members)
        : SiteSubset(std::vector<SiteId>(members)) {}

    /// Inclusive range [first, last].
    static SiteSubset range(SiteId first, SiteId last);
    static SiteSubset all(std::size_t n);

    const std::vector<SiteId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(SiteId id) const;
    SiteId max_member() const;  // members must be non-empty

  private:
    std::vector<SiteId> members_;
};

/// Two-particle product state of one-particle orbitals A and B under exchange
/// symmetrization: |ψ> = (A⊗B ± B⊗A)/√2 with + for bosons, − for fermions.
///
/// The √2 normalizer assumes <A|B> = 0, which holds for everything this
/// module constructs: initial_pair starts from distinct basis states and
/// evolve_pair applies the same unitary to both orbitals.
struct PairState {
    WaveFunction orbital_a;
    WaveFunction orbital_b;
    Statistics statistics = Statistics::Fermion;

    std::size_t size() const { return orbital_a.size(); }
};

/// Dimension of the (anti)symmetrized two-particle space on n sites:
/// n(n+1)/2 for bosons, n(n−1)/2 for fermions.
std::size_t pair_dimension(std::size_t n_sites, Statistics stats);

/// Both particles on distinct sites i and j. Fermions with i == j violate
/// Pauli exclusion (PauliViolationError); bosons with i == j are rejected too
/// because the fixed √2 normalization only covers orthogonal orbitals.
PairState initial_pair(std::size_t n_sites, SiteId i, SiteId j, Statistics stats);

/// Tensor-basis amplitude <i,j|ψ> = (A_i B_j ± A_j B_i)/√2. Exactly zero for
/// fermions at i == j.
Complex pair_amplitude(const PairState& state, SiteId i, SiteId j);

/// Evolves both orbitals with the same one-particle propagator; statistics
/// carried through unchanged.
PairState evolve_pair(const SpectralDecomposition& dec, const PairState& pair0,
                      double t);

/// Probability that both particles are inside `subset`:
/// sum over ordered pairs (i,j) in subset×subset of |<i,j|ψ>|².
double p_perp(const PairState& state, const SiteSubset& subset);

/// Total tensor-basis norm (= p_perp over all sites); 1 for valid states.
double pair_norm(const PairState& state);

/// p_perp of the evolved pair at each grid time.
ProbabilitySeries p_perp_series(const SpectralDecomposition& dec,
                                const PairState& pair0, const SiteSubset& subset,
                                const TimeGrid& grid);

}  // namespace qgw
