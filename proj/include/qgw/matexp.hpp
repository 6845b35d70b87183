#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgw {

/// Dense square complex matrix, row-major. Just enough linear algebra for the
/// matrix-exponential oracle; not a general-purpose type.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n)
        : n_(n), entries_(n * n, std::complex<double>(0.0, 0.0)) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }

    std::complex<double>& operator()(std::size_t i, std::size_t j) {
        return entries_[i * n_ + j];
    }
    const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * n_ + j];
    }

    /// Max absolute row sum.
    double inf_norm() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    std::vector<std::complex<double>> apply(
        const std::vector<std::complex<double>>& x) const;

  private:
    std::size_t n_ = 0;
    std::vector<std::complex<double>> entries_;
};

/// exp(A) by Taylor series with scaling and squaring. Independent of the
/// spectral propagation path; used as the cross-check oracle.
ComplexMatrix expm(const ComplexMatrix& a);

}  // namespace qgw
