#pragma once

#include <cstddef>
#include <vector>

#include "qgw/graph.hpp"

namespace qgw {

/// Full eigensystem of a real symmetric Hamiltonian.
///
/// eigenvalues are ascending; eigenvector k is stored column-contiguously at
/// eigenvectors[k*n .. k*n+n). The basis satisfies ||H v_k − λ_k v_k|| ≤ 1e−10
/// and |<v_j, v_k> − δ_jk| ≤ 1e−10, and each vector's first component larger
/// than 1e−12 in magnitude is positive (fixed sign convention, so identical
/// inputs give identical output).
struct SpectralDecomposition {
    std::size_t n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;

    double eigenvector(std::size_t k, std::size_t i) const {
        return eigenvectors[k * n + i];
    }
};

/// Diagonalizes H with a cyclic Jacobi iteration. Deterministic. Throws
/// ConvergenceFailureError if the off-diagonal norm is not annihilated within
/// the sweep budget (does not happen for the n ≤ 64 matrices this library
/// targets).
SpectralDecomposition decompose(const Hamiltonian& h);

}  // namespace qgw
