// Copyright 2026 The qmetro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for tiny dimensions (2 and 4 in this
 * project): products, adjoints, Kronecker products and a cyclic Jacobi
 * eigensolver for Hermitian matrices. Everything is a pure function on
 * immutable values.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmetro {

using Complex = std::complex<double>;

/// Square complex matrix stored row-major. `dim` is small (2 or 4 in
/// practice); no attempt is made at large-dimension performance.
struct ComplexMatrix {
    std::size_t dim = 0;
    std::vector<Complex> entries;

    ComplexMatrix() = default;

    explicit ComplexMatrix(std::size_t d) : dim(d), entries(d * d, Complex(0.0, 0.0)) {
        if (d < 1) {
            throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
        }
    }

    ComplexMatrix(std::size_t d, std::vector<Complex> e) : dim(d), entries(std::move(e)) {
        if (d < 1) {
            throw std::invalid_argument("ComplexMatrix: dim must be >= 1");
        }
        if (entries.size() != d * d) {
            throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(d * d) +
                                        " entries, got " + std::to_string(entries.size()));
        }
    }

    Complex &operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

    static ComplexMatrix zero(std::size_t d) { return ComplexMatrix(d); }

    static ComplexMatrix identity(std::size_t d) {
        ComplexMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("add: dimension mismatch");
    }
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        out.entries[i] = a.entries[i] + b.entries[i];
    }
    return out;
}

inline ComplexMatrix sub(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("sub: dimension mismatch");
    }
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        out.entries[i] = a.entries[i] - b.entries[i];
    }
    return out;
}

inline ComplexMatrix scale(Complex z, const ComplexMatrix &a) {
    ComplexMatrix out(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        out.entries[i] = z * a.entries[i];
    }
    return out;
}

/// Standard matrix product.
inline ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    const std::size_t n = a.dim;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = 0; c < a.dim; ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

/// Kronecker product; output dimension is a.dim * b.dim.
inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t n = a.dim * b.dim;
    ComplexMatrix out(n);
    for (std::size_t ar = 0; ar < a.dim; ++ar) {
        for (std::size_t ac = 0; ac < a.dim; ++ac) {
            const Complex f = a(ar, ac);
            for (std::size_t br = 0; br < b.dim; ++br) {
                for (std::size_t bc = 0; bc < b.dim; ++bc) {
                    out(ar * b.dim + br, ac * b.dim + bc) = f * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline Complex trace(const ComplexMatrix &a) {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim; ++i) {
        t += a(i, i);
    }
    return t;
}

/// Largest |a_ij - b_ij| over all entries.
inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim != b.dim) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
    }
    return worst;
}

inline bool is_hermitian(const ComplexMatrix &a, double tol = 1e-10) {
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = r; c < a.dim; ++c) {
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Spectral decomposition of a Hermitian matrix. `eigenvalues` are sorted
/// ascending; column k of `eigenvectors` is the eigenvector for
/// eigenvalues[k], and the columns are orthonormal.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    /// Column k as an amplitude vector.
    std::vector<Complex> eigenvector(std::size_t k) const {
        std::vector<Complex> v(eigenvectors.dim);
        for (std::size_t r = 0; r < eigenvectors.dim; ++r) {
            v[r] = eigenvectors(r, k);
        }
        return v;
    }
};

namespace detail {

/// Frobenius norm of the strict off-diagonal part.
inline double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim; ++r) {
        for (std::size_t c = 0; c < a.dim; ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

/// Unitary plane rotation that annihilates the (p,q) entry of a Hermitian
/// matrix. Writing a_pq = r e^{i theta}, the classical real Jacobi angle is
/// applied in the p-q plane together with the phase e^{i theta}.
inline ComplexMatrix jacobi_rotation(const ComplexMatrix &a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex phase = apq / r;  // e^{i theta}
    const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    ComplexMatrix g = ComplexMatrix::identity(a.dim);
    g(p, p) = c;
    g(q, q) = c;
    g(p, q) = s * phase;
    g(q, p) = -s * std::conj(phase);
    return g;
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
///
/// The input must be Hermitian within 1e-10; it is symmetrized as
/// (a + a^dagger)/2 before iterating, which absorbs accumulated rounding
/// asymmetry. Sweeps stop once the off-diagonal norm falls below 1e-14;
/// more than 100 sweeps is reported as a failure.
inline EigenDecomposition hermitian_eig(const ComplexMatrix &a) {
    constexpr double kHermTol = 1e-10;
    constexpr double kOffTol = 1e-14;
    constexpr int kMaxSweeps = 100;

    if (!is_hermitian(a, kHermTol)) {
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within 1e-10");
    }

    const std::size_t n = a.dim;
    ComplexMatrix work = scale(0.5, add(a, adjoint(a)));
    ComplexMatrix vectors = ComplexMatrix::identity(n);

    int sweep = 0;
    while (detail::off_diagonal_norm(work) > kOffTol) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error("hermitian_eig: no convergence within 100 sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(work(p, q)) == 0.0) {
                    continue;
                }
                const ComplexMatrix g = detail::jacobi_rotation(work, p, q);
                work = matmul(adjoint(g), matmul(work, g));
                vectors = matmul(vectors, g);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return work(i, i).real() < work(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = work(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, k) = vectors(r, order[k]);
        }
    }
    return out;
}

/// Smallest eigenvalue of a Hermitian matrix (positivity checks).
inline double min_eigenvalue(const ComplexMatrix &a) {
    return hermitian_eig(a).eigenvalues.front();
}

}  // namespace qmetro
