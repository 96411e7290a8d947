// Copyright 2026 The qgrover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qgrover/complex_linalg.hpp"

namespace qgrover {

/// Tolerance on |norm^2 - 1| for a vector to be accepted as a state.
inline constexpr double kNormalizationTolerance = 1e-10;

/// Largest register the O(N) state-vector paths accept.
inline constexpr int kVectorQubitLimit = 24;

/// Computational-basis label, 1-based: |1> is the all-zeros basis vector
/// and |2^n> the all-ones one. storage() gives the 0-based vector offset.
class BasisIndex {
  public:
    explicit BasisIndex(std::uint64_t one_based);

    static BasisIndex from_storage(std::uint64_t offset) {
        return BasisIndex(offset + 1);
    }

    std::uint64_t value() const { return value_; }
    std::uint64_t storage() const { return value_ - 1; }

    /// Throws std::out_of_range unless value() <= 2^n_qubits.
    void check_fits(int n_qubits) const;

    friend bool operator==(BasisIndex, BasisIndex) = default;
    friend auto operator<=>(BasisIndex, BasisIndex) = default;

  private:
    std::uint64_t value_;
};

/// A pure n-qubit state: 2^n amplitudes with unit squared norm. The only
/// way to obtain one is through make_qstate() (or the helpers below, which
/// go through it), so the norm invariant holds for every live object.
class QState {
  public:
    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t(amplitudes_.size()); }
    const CVector &amplitudes() const { return amplitudes_; }
    std::complex<double> amplitude(BasisIndex m) const;

    /// sum_i |a_i|^2
    double norm2() const { return amplitudes_.squaredNorm(); }

  private:
    friend QState make_qstate(CVector v);
    QState(int n, CVector v) : n_qubits_(n), amplitudes_(std::move(v)) {}

    int n_qubits_;
    CVector amplitudes_;
};

/// Wraps `v` as a state. The length must be a power of two (at least 2)
/// and |norm^2 - 1| <= kNormalizationTolerance; nothing is renormalised.
QState make_qstate(CVector v);

/// log2 of a power-of-two dimension; throws DimensionError otherwise.
int qubits_for_dimension(std::uint64_t dim);

QState zero_state(int n_qubits);
QState basis_state(int n_qubits, BasisIndex m);

/// H^{(x)n} |0...0>, built directly in O(2^n).
QState uniform_superposition(int n_qubits);

CMatrix hadamard();

/// H^{(x)n}, assembled through tensor_product_list().
CMatrix n_hadamard(int n_qubits);

/// diag(1, e^{i phi})
CMatrix phase_gate(double phi);

/// A square matrix that passed the unitarity check when it was built.
class Unitary {
  public:
    /// Throws EvolutionError when unitarity_residual(m) >= tol.
    explicit Unitary(CMatrix m, double tol = kUnitarityTolerance);

    const CMatrix &matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    CMatrix m_;
};

/// `op` applied to `q`. The operator must match the register size and pass
/// is_unitary at `tol`; the result is re-validated as a state.
QState evolve(const CMatrix &op, const QState &q,
              double tol = kUnitarityTolerance);
QState evolve(const Unitary &op, const QState &q);

/// |v><v|
CMatrix projector(const QState &v);

/// Sum of |m><m| over the given basis labels of an n-qubit register.
CMatrix basis_projector_sum(int n_qubits, std::span<const BasisIndex> labels);

/// Max-norm distance between the full basis-projector sum and I.
double projector_completeness_residual(int n_qubits);
bool projector_completeness(int n_qubits, double tol);

/// |<x|y>|^2, i.e. the squared norm of (|x><x|) y.
double measurement_probability(const QState &x, const QState &y);

/// Outcome counts indexed by storage offset.
struct Histogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;

    std::uint64_t count(BasisIndex m) const { return counts.at(m.storage()); }
    double frequency(BasisIndex m) const {
        return shots == 0 ? 0.0 : double(count(m)) / double(shots);
    }
    /// Most frequent outcome; ties resolve to the smallest label.
    BasisIndex mode() const;
};

/// Draws `shots` projective measurements of `q` in the computational basis.
///
/// The generator is std::mt19937_64 seeded with `seed`. Each draw takes one
/// 64-bit output r, forms u = (r >> 11) * 2^-53 in [0, 1), scales it by the
/// total probability mass and picks the first outcome whose cumulative
/// |a_i|^2 exceeds it. This fixes histograms bit-for-bit per seed.
Histogram sample_measurement(const QState &q, std::uint64_t seed,
                             std::uint64_t shots);

/// Uniform double in [-1, 1) from one raw mt19937_64 draw. Used for the
/// randomised property grids so they do not depend on the standard
/// library's distribution implementations.
double symmetric_unit(std::mt19937_64 &rng);

/// Random state: each re/im part drawn from symmetric_unit(), then
/// normalised once before construction.
QState random_qstate(int n_qubits, std::mt19937_64 &rng);

/// Random unitary on n qubits: L1 * diag(e^{i phi_k}) * L2, where each
/// layer is a tensor product of per-qubit factors drawn from
/// {H, P(phi), H P(phi)}.
CMatrix random_unitary(int n_qubits, std::mt19937_64 &rng);

} // namespace qgrover
