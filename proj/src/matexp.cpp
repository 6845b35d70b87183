#include "qgw/matexp.hpp"

#include <cmath>
#include <cstdlib>

#include "qgw/errors.hpp"

namespace qgw {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

double ComplexMatrix::inf_norm() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            row += std::abs(entries_[i * n_ + j]);
        }
        worst = std::max(worst, row);
    }
    return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) {
        throw DimensionMismatchError("matrix product: sizes differ");
    }
    const std::size_t n = a.n_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::complex<double> aik = a.entries_[i * n + k];
            if (aik == std::complex<double>(0.0, 0.0)) {
                continue;
            }
            const std::complex<double>* brow = &b.entries_[k * n];
            std::complex<double>* orow = &out.entries_[i * n];
            for (std::size_t j = 0; j < n; ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

std::vector<std::complex<double>> ComplexMatrix::apply(
    const std::vector<std::complex<double>>& x) const {
    if (x.size() != n_) {
        throw DimensionMismatchError("matrix apply: vector size mismatch");
    }
    std::vector<std::complex<double>> y(n_, std::complex<double>(0.0, 0.0));
    for (std::size_t i = 0; i < n_; ++i) {
        std::complex<double> sum(0.0, 0.0);
        const std::complex<double>* row = &entries_[i * n_];
        for (std::size_t j = 0; j < n_; ++j) {
            sum += row[j] * x[j];
        }
        y[i] = sum;
    }
    return y;
}

ComplexMatrix expm(const ComplexMatrix& a) {
    const std::size_t n = a.size();

    // Scale A down to norm <= 0.5, exponentiate the scaled matrix by a plain
    // Taylor sum, then square the result back up.
    int squarings = 0;
    double norm = a.inf_norm();
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    const double factor = std::ldexp(1.0, -squarings);

    ComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = a(i, j) * factor;
        }
    }

    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = term * b;
        const double inv = 1.0 / static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                term(i, j) *= inv;
                sum(i, j) += term(i, j);
            }
        }
        if (term.inf_norm() <= 1e-19) {
            break;
        }
    }

    for (int k = 0; k < squarings; ++k) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace qgw
