#include "qgw/tensor_oracle.hpp"

#include <cmath>

#include "qgw/errors.hpp"
#include "qgw/matexp.hpp"

namespace qgw {

double tensor_oracle_p_perp(const Hamiltonian& h, const PairState& pair0,
                            const SiteSubset& subset, double t) {
    const std::size_t n = h.size();
    if (n > 16) {
        throw DimensionLimitError("tensor oracle: n=" + std::to_string(n) +
                                  " exceeds the 16-site cap");
    }
    if (pair0.size() != n) {
        throw DimensionMismatchError("tensor oracle: state size " +
                                     std::to_string(pair0.size()) +
                                     " vs hamiltonian size " + std::to_string(n));
    }
    if (!subset.empty() && subset.max_member() >= n) {
        throw DimensionMismatchError("tensor oracle: subset site " +
                                     std::to_string(subset.max_member()) +
                                     " out of range (n=" + std::to_string(n) + ")");
    }

    // M = -i t (H⊗I + I⊗H), assembled directly in the product basis
    // |i,j> -> index i*n + j.
    const std::size_t dim = n * n;
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t k = 0; k < n; ++k) {
                if (h(i, k) != 0.0) {
                    m(row, k * n + j) += Complex(0.0, -t * h(i, k));
                }
                if (h(j, k) != 0.0) {
                    m(row, i * n + k) += Complex(0.0, -t * h(j, k));
                }
            }
        }
    }

    std::vector<Complex> psi(dim, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            psi[i * n + j] = pair_amplitude(pair0, i, j);
        }
    }

    psi = expm(m).apply(psi);

    double sum = 0.0;
    for (SiteId i : subset.members()) {
        for (SiteId j : subset.members()) {
            sum += std::norm(psi[i * n + j]);
        }
    }
    return sum;
}

}  // namespace qgw
