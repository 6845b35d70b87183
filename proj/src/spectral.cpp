#include "qgw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgw/errors.hpp"

namespace qgw {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    return std::sqrt(2.0 * sum);
}

double frobenius_norm(const std::vector<double>& a) {
    double sum = 0.0;
    for (double x : a) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

}  // namespace

SpectralDecomposition decompose(const Hamiltonian& h) {
    const std::size_t n = h.size();
    std::vector<double> a = h.entries();       // working copy, diagonalized in place
    std::vector<double> v(n * n, 0.0);         // accumulated rotations, row-major
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
    }

    const double scale = frobenius_norm(a);
    const double tol = 1e-14 * std::max(scale, 1e-300);
    constexpr int kMaxSweeps = 64;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, n) <= tol) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-300) {
                    continue;
                }
                // Stable rotation angle (Golub & Van Loan, sym. Schur 2x2).
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps) {
        throw ConvergenceFailureError(
            "jacobi eigensolver: off-diagonal norm still " +
            std::to_string(off_diagonal_norm(a, n)) + " after " +
            std::to_string(kMaxSweeps) + " sweeps (n=" + std::to_string(n) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x] < a[y * n + y];
    });

    SpectralDecomposition dec;
    dec.n = n;
    dec.eigenvalues.resize(n);
    dec.eigenvectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        dec.eigenvalues[k] = a[col * n + col];
        double* out = &dec.eigenvectors[k * n];
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = v[i * n + col];
        }
        // Sign convention: first component above noise level positive.
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(out[i]) > 1e-12) {
                if (out[i] < 0.0) {
                    for (std::size_t j = 0; j < n; ++j) {
                        out[j] = -out[j];
                    }
                }
                break;
            }
        }
    }
    return dec;
}

}  // namespace qgw
