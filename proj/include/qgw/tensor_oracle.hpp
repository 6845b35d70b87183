#pragma once

#include "qgw/graph.hpp"
#include "qgw/pair.hpp"

namespace qgw {

/// Brute-force cross-check of the factorized two-particle path: builds the
/// full n²-dimensional two-particle Hamiltonian H⊗I + I⊗H, evolves the
/// explicitly (anti)symmetrized initial vector with the Taylor matrix
/// exponential, and projects onto span{|i,j> : i,j in subset}.
///
/// Deliberately shares no code with decompose/evolve. Capped at n ≤ 16
/// (DimensionLimitError beyond).
double tensor_oracle_p_perp(const Hamiltonian& h, const PairState& pair0,
                            const SiteSubset& subset, double t);

}  // namespace qgw
