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
 * Quantum states, gates, channels and Born-rule measurement for one
 * polarisation qubit and for the polarisation (+) path two-qubit system.
 *
 * Basis conventions, fixed globally:
 *   - polarisation qubit: (H, V)
 *   - path qubit:         (0, 1)
 *   - joint system:       polarisation (x) path = (H0, H1, V0, V1)
 *   - circular basis:     |R> = (|H> - i|V>)/sqrt(2),
 *                         |L> = (|H> + i|V>)/sqrt(2)
 */

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmetro/linalg.hpp"

namespace qmetro {

/// Normalized state vector of a 1- or 2-qubit system.
struct PureState {
    std::size_t dim = 0;
    std::vector<Complex> amplitudes;

    PureState(std::size_t d, std::vector<Complex> amps) : dim(d), amplitudes(std::move(amps)) {
        if (amplitudes.size() != dim) {
            throw std::invalid_argument("PureState: amplitude count does not match dim");
        }
        double norm2 = 0.0;
        for (const Complex &a : amplitudes) {
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > 1e-12) {
            throw std::invalid_argument("PureState: amplitudes are not normalized");
        }
    }
};

/// Trace-one positive Hermitian operator; checks all three invariants on
/// construction (Hermitian within 1e-10, unit trace within 1e-10,
/// eigenvalues >= -1e-9).
struct DensityOperator {
    ComplexMatrix matrix;

    explicit DensityOperator(ComplexMatrix m) : matrix(std::move(m)) {
        if (!is_hermitian(matrix, 1e-10)) {
            throw std::invalid_argument("DensityOperator: matrix is not Hermitian within 1e-10");
        }
        if (std::abs(trace(matrix) - Complex(1.0, 0.0)) > 1e-10) {
            throw std::invalid_argument("DensityOperator: trace differs from 1 beyond 1e-10");
        }
        if (min_eigenvalue(matrix) < -1e-9) {
            throw std::invalid_argument("DensityOperator: negative eigenvalue beyond -1e-9");
        }
    }

    std::size_t dim() const { return matrix.dim; }
};

/// A unitary operator; U^dagger U = I is checked within 1e-10.
struct UnitaryOp {
    ComplexMatrix matrix;

    explicit UnitaryOp(ComplexMatrix m) : matrix(std::move(m)) {
        const ComplexMatrix probe = matmul(adjoint(matrix), matrix);
        if (max_abs_diff(probe, ComplexMatrix::identity(matrix.dim)) > 1e-10) {
            throw std::invalid_argument("UnitaryOp: U^dagger U differs from identity beyond 1e-10");
        }
    }

    std::size_t dim() const { return matrix.dim; }
};

/// Completely positive trace-preserving map as a Kraus operator list;
/// the completeness sum is checked within 1e-10.
struct QuantumChannel {
    std::vector<ComplexMatrix> kraus;

    explicit QuantumChannel(std::vector<ComplexMatrix> ops) : kraus(std::move(ops)) {
        if (kraus.empty()) {
            throw std::invalid_argument("QuantumChannel: empty Kraus list");
        }
        const std::size_t d = kraus.front().dim;
        ComplexMatrix sum = ComplexMatrix::zero(d);
        for (const ComplexMatrix &k : kraus) {
            if (k.dim != d) {
                throw std::invalid_argument("QuantumChannel: Kraus operators of mixed dimension");
            }
            sum = add(sum, matmul(adjoint(k), k));
        }
        if (max_abs_diff(sum, ComplexMatrix::identity(d)) > 1e-10) {
            throw std::invalid_argument("QuantumChannel: Kraus sum differs from identity beyond 1e-10");
        }
    }

    std::size_t dim() const { return kraus.front().dim; }
};

/// Positive operators summing to identity, with outcome labels.
struct Povm {
    struct Element {
        std::string label;
        ComplexMatrix op;
    };

    std::vector<Element> elements;

    explicit Povm(std::vector<Element> elems) : elements(std::move(elems)) {
        if (elements.empty()) {
            throw std::invalid_argument("Povm: empty element list");
        }
        const std::size_t d = elements.front().op.dim;
        ComplexMatrix sum = ComplexMatrix::zero(d);
        for (const Element &e : elements) {
            if (e.op.dim != d) {
                throw std::invalid_argument("Povm: elements of mixed dimension");
            }
            if (min_eigenvalue(e.op) < -1e-9) {
                throw std::invalid_argument("Povm: element '" + e.label +
                                            "' has a negative eigenvalue beyond -1e-9");
            }
            sum = add(sum, e.op);
        }
        if (max_abs_diff(sum, ComplexMatrix::identity(d)) > 1e-10) {
            throw std::invalid_argument("Povm: elements do not sum to identity within 1e-10");
        }
    }

    std::size_t dim() const { return elements.front().op.dim; }
};

// ---------------------------------------------------------------------------
// Named single-qubit states.

inline PureState basis_h() { return PureState(2, {Complex(1.0, 0.0), Complex(0.0, 0.0)}); }
inline PureState basis_v() { return PureState(2, {Complex(0.0, 0.0), Complex(1.0, 0.0)}); }

/// Diagonal polarisation (|H> + |V>)/sqrt(2), the probe input state.
inline PureState diag_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState(2, {Complex(r, 0.0), Complex(r, 0.0)});
}

inline PureState circular_r() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState(2, {Complex(r, 0.0), Complex(0.0, -r)});
}

inline PureState circular_l() {
    const double r = 1.0 / std::sqrt(2.0);
    return PureState(2, {Complex(r, 0.0), Complex(0.0, r)});
}

inline PureState path_zero() { return basis_h(); }
inline PureState path_one() { return basis_v(); }

inline PureState kron(const PureState &a, const PureState &b) {
    std::vector<Complex> amps(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < b.dim; ++j) {
            amps[i * b.dim + j] = a.amplitudes[i] * b.amplitudes[j];
        }
    }
    return PureState(a.dim * b.dim, std::move(amps));
}

/// |psi><psi| of a pure state.
inline DensityOperator density(const PureState &psi) {
    ComplexMatrix m(psi.dim);
    for (std::size_t r = 0; r < psi.dim; ++r) {
        for (std::size_t c = 0; c < psi.dim; ++c) {
            m(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
        }
    }
    return DensityOperator(std::move(m));
}

/// Rank-one projector |psi><psi| as a plain matrix (POVM building block).
inline ComplexMatrix projector(const PureState &psi) { return density(psi).matrix; }

// ---------------------------------------------------------------------------
// Gates and channels.

/// Phase gate diag(1, e^{i phi}) on the polarisation qubit.
inline UnitaryOp phase_unitary(double phi) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(1, 1) = std::polar(1.0, phi);
    return UnitaryOp(std::move(m));
}

/// Amplitude damping with rate eta: the V component leaks into H,
/// |V> -> sqrt(1-eta)|V> + sqrt(eta)|H>, while H is left alone.
inline QuantumChannel amplitude_damping(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw std::invalid_argument("amplitude_damping: eta must lie in [0, 1]");
    }
    ComplexMatrix k0(2);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - eta);
    ComplexMatrix k1(2);
    k1(0, 1) = std::sqrt(eta);
    return QuantumChannel({std::move(k0), std::move(k1)});
}

/// Polarisation dephasing that scales the H-V coherences by exactly v;
/// models the interferometer visibility.
inline QuantumChannel visibility_dephasing(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("visibility_dephasing: v must lie in [0, 1]");
    }
    ComplexMatrix k0 = scale(std::sqrt((1.0 + v) / 2.0), ComplexMatrix::identity(2));
    ComplexMatrix kz(2);
    kz(0, 0) = std::sqrt((1.0 - v) / 2.0);
    kz(1, 1) = -std::sqrt((1.0 - v) / 2.0);
    return QuantumChannel({std::move(k0), std::move(kz)});
}

/// Controlled-Not on (H0, H1, V0, V1) with the polarisation as control:
/// |H,b> -> |H,b> and |V,b> -> |V,1-b>.
inline UnitaryOp cnot_pol_controls_path() {
    ComplexMatrix m(4);
    m(0, 0) = 1.0;  // H0 -> H0
    m(1, 1) = 1.0;  // H1 -> H1
    m(3, 2) = 1.0;  // V0 -> V1
    m(2, 3) = 1.0;  // V1 -> V0
    return UnitaryOp(std::move(m));
}

/// Tensor a probe-only unitary with the identity on the path qubit.
inline UnitaryOp lift_to_probe(const UnitaryOp &u) {
    if (u.dim() != 2) {
        throw std::invalid_argument("lift_to_probe: expected a dim-2 unitary");
    }
    return UnitaryOp(kron(u.matrix, ComplexMatrix::identity(2)));
}

/// Tensor a probe-only channel with the identity on the path qubit.
inline QuantumChannel lift_to_probe(const QuantumChannel &ch) {
    if (ch.dim() != 2) {
        throw std::invalid_argument("lift_to_probe: expected a dim-2 channel");
    }
    std::vector<ComplexMatrix> lifted;
    lifted.reserve(ch.kraus.size());
    for (const ComplexMatrix &k : ch.kraus) {
        lifted.push_back(kron(k, ComplexMatrix::identity(2)));
    }
    return QuantumChannel(std::move(lifted));
}

// ---------------------------------------------------------------------------
// Evolution and measurement.

inline PureState apply_unitary(const UnitaryOp &u, const PureState &psi) {
    if (u.dim() != psi.dim) {
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    }
    std::vector<Complex> out(psi.dim, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < psi.dim; ++r) {
        for (std::size_t c = 0; c < psi.dim; ++c) {
            out[r] += u.matrix(r, c) * psi.amplitudes[c];
        }
    }
    return PureState(psi.dim, std::move(out));
}

inline DensityOperator apply_unitary(const UnitaryOp &u, const DensityOperator &rho) {
    if (u.dim() != rho.dim()) {
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    }
    return DensityOperator(matmul(u.matrix, matmul(rho.matrix, adjoint(u.matrix))));
}

/// Kraus action sum_k K rho K^dagger.
inline DensityOperator apply_channel(const QuantumChannel &ch, const DensityOperator &rho) {
    if (ch.dim() != rho.dim()) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    ComplexMatrix out = ComplexMatrix::zero(rho.dim());
    for (const ComplexMatrix &k : ch.kraus) {
        out = add(out, matmul(k, matmul(rho.matrix, adjoint(k))));
    }
    return DensityOperator(std::move(out));
}

/// Born probabilities Re tr(E rho) for every POVM element, in element
/// order. Values inside [-1e-9, 0) and (1, 1+1e-9] are rounding residue
/// and get clamped to the [0, 1] boundary; anything further out is a
/// logic error and throws. The clamped values must sum to 1 within 1e-10.
inline std::vector<std::pair<std::string, double>> born_probabilities(const Povm &povm,
                                                                      const DensityOperator &rho) {
    if (povm.dim() != rho.dim()) {
        throw std::invalid_argument("born_probabilities: dimension mismatch");
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(povm.elements.size());
    double sum = 0.0;
    for (const Povm::Element &e : povm.elements) {
        double p = trace(matmul(e.op, rho.matrix)).real();
        if (p < -1e-9 || p > 1.0 + 1e-9) {
            throw std::runtime_error("born_probabilities: probability " + std::to_string(p) +
                                     " for outcome '" + e.label + "' is out of range");
        }
        p = std::min(std::max(p, 0.0), 1.0);
        sum += p;
        out.emplace_back(e.label, p);
    }
    if (std::abs(sum - 1.0) > 1e-10) {
        throw std::runtime_error("born_probabilities: probabilities sum to " + std::to_string(sum));
    }
    return out;
}

}  // namespace qmetro
