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
#include "qgrover/quantum_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qgrover {

namespace {

void check_qubits(int n_qubits, int limit, const char *what) {
    if (n_qubits < 1 || n_qubits > limit) {
        throw DimensionError(std::string(what) + ": qubit count " +
                             std::to_string(n_qubits) + " outside [1, " +
                             std::to_string(limit) + "]");
    }
}

} // namespace

BasisIndex::BasisIndex(std::uint64_t one_based) : value_(one_based) {
    if (one_based == 0) {
        throw std::out_of_range("BasisIndex: labels start at 1");
    }
}

void BasisIndex::check_fits(int n_qubits) const {
    if (n_qubits < 0 || n_qubits > 63 ||
        value_ > (std::uint64_t(1) << n_qubits)) {
        throw std::out_of_range("basis label " + std::to_string(value_) +
                                " outside [1, 2^" + std::to_string(n_qubits) +
                                "]");
    }
}

std::complex<double> QState::amplitude(BasisIndex m) const {
    m.check_fits(n_qubits_);
    return amplitudes_(Eigen::Index(m.storage()));
}

int qubits_for_dimension(std::uint64_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError("dimension " + std::to_string(dim) +
                             " is not a power of two >= 2");
    }
    return std::countr_zero(dim);
}

QState make_qstate(CVector v) {
    const int n = qubits_for_dimension(std::uint64_t(v.size()));
    detail::require_finite(v, "make_qstate");
    const double norm2 = v.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormalizationTolerance) {
        throw NormalizationError("make_qstate: squared norm " +
                                 std::to_string(norm2) + " is not 1");
    }
    return QState(n, std::move(v));
}

QState zero_state(int n_qubits) {
    return basis_state(n_qubits, BasisIndex(1));
}

QState basis_state(int n_qubits, BasisIndex m) {
    check_qubits(n_qubits, kVectorQubitLimit, "basis_state");
    m.check_fits(n_qubits);
    CVector v = CVector::Zero(Eigen::Index(1) << n_qubits);
    v(Eigen::Index(m.storage())) = 1.0;
    return make_qstate(std::move(v));
}

QState uniform_superposition(int n_qubits) {
    check_qubits(n_qubits, kVectorQubitLimit, "uniform_superposition");
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    return make_qstate(
        CVector::Constant(dim, 1.0 / std::sqrt(double(dim))));
}

CMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix h(2, 2);
    h << s, s, s, -s;
    return h;
}

CMatrix n_hadamard(int n_qubits) {
    check_qubits(n_qubits, kDenseQubitLimit, "n_hadamard");
    return tensor_product_list(matrix_list_gen(
        [](std::size_t) { return hadamard(); }, std::size_t(n_qubits)));
}

CMatrix phase_gate(double phi) {
    CMatrix p = CMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    p(1, 1) = std::polar(1.0, phi);
    return p;
}

Unitary::Unitary(CMatrix m, double tol) : m_(std::move(m)) {
    const double residual = unitarity_residual(m_);
    if (!(residual < tol)) {
        throw EvolutionError("operator is not unitary (residual " +
                             std::to_string(residual) + ")");
    }
}

QState evolve(const CMatrix &op, const QState &q, double tol) {
    return evolve(Unitary(op, tol), q);
}

QState evolve(const Unitary &op, const QState &q) {
    if (op.dim() != Eigen::Index(q.dim())) {
        throw DimensionError("evolve: operator of dimension " +
                             std::to_string(op.dim()) +
                             " on a register of dimension " +
                             std::to_string(q.dim()));
    }
    return make_qstate(matvec(op.matrix(), q.amplitudes()));
}

CMatrix projector(const QState &v) {
    const auto &a = v.amplitudes();
    return a * a.adjoint();
}

CMatrix basis_projector_sum(int n_qubits, std::span<const BasisIndex> labels) {
    check_qubits(n_qubits, kDenseQubitLimit, "basis_projector_sum");
    const Eigen::Index dim = Eigen::Index(1) << n_qubits;
    CMatrix sum = CMatrix::Zero(dim, dim);
    for (const BasisIndex m : labels) {
        sum += projector(basis_state(n_qubits, m));
    }
    return sum;
}

double projector_completeness_residual(int n_qubits) {
    check_qubits(n_qubits, 10, "projector_completeness");
    const std::uint64_t dim = std::uint64_t(1) << n_qubits;
    std::vector<BasisIndex> all;
    all.reserve(dim);
    for (std::uint64_t i = 1; i <= dim; ++i) {
        all.emplace_back(i);
    }
    const CMatrix sum = basis_projector_sum(n_qubits, all);
    return max_abs(sum - identity(Eigen::Index(dim)));
}

bool projector_completeness(int n_qubits, double tol) {
    return projector_completeness_residual(n_qubits) < tol;
}

double measurement_probability(const QState &x, const QState &y) {
    if (x.n_qubits() != y.n_qubits()) {
        throw DimensionError("measurement_probability: qubit counts differ");
    }
    // (|x><x|) y = <x|y> |x>, and <x|x> = 1.
    return std::norm(x.amplitudes().dot(y.amplitudes())) * x.norm2();
}

BasisIndex Histogram::mode() const {
    if (counts.empty()) {
        throw std::logic_error("Histogram::mode: empty histogram");
    }
    const auto it = std::max_element(counts.begin(), counts.end());
    return BasisIndex::from_storage(std::uint64_t(it - counts.begin()));
}

Histogram sample_measurement(const QState &q, std::uint64_t seed,
                             std::uint64_t shots) {
    if (shots < 1) {
        throw std::invalid_argument("sample_measurement: shots must be >= 1");
    }
    const auto &a = q.amplitudes();
    std::vector<double> cumulative(static_cast<std::size_t>(a.size()));
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        cumulative[std::size_t(i)] = std::norm(a(i));
    }
    std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
    const double total = cumulative.back();

    Histogram h;
    h.counts.assign(cumulative.size(), 0);
    h.shots = shots;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = double(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) {
            // u rounded up to the total: take the last outcome with mass.
            --it;
            while (it != cumulative.begin() && *it == *(it - 1)) {
                --it;
            }
        }
        ++h.counts[std::size_t(it - cumulative.begin())];
    }
    return h;
}

double symmetric_unit(std::mt19937_64 &rng) {
    return double(rng() >> 11) * 0x1.0p-52 - 1.0;
}

QState random_qstate(int n_qubits, std::mt19937_64 &rng) {
    check_qubits(n_qubits, kVectorQubitLimit, "random_qstate");
    CVector v(Eigen::Index(1) << n_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double re = symmetric_unit(rng);
        const double im = symmetric_unit(rng);
        v(i) = {re, im};
    }
    const double norm = v.norm();
    if (norm == 0.0) {
        v.setZero();
        v(0) = 1.0;
    } else {
        v /= norm;
    }
    return make_qstate(std::move(v));
}

CMatrix random_unitary(int n_qubits, std::mt19937_64 &rng) {
    check_qubits(n_qubits, kDenseQubitLimit, "random_unitary");
    constexpr double kPi = 3.14159265358979323846;
    auto layer = [&] {
        return tensor_product_list(matrix_list_gen(
            [&](std::size_t) -> CMatrix {
                const double phi = kPi * symmetric_unit(rng);
                switch (rng() % 3) {
                case 0:
                    return hadamard();
                case 1:
                    return phase_gate(phi);
                default:
                    return hadamard() * phase_gate(phi);
                }
            },
            std::size_t(n_qubits)));
    };
    const CMatrix first = layer();
    CVector phases(Eigen::Index(1) << n_qubits);
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, kPi * symmetric_unit(rng));
    }
    const CMatrix second = layer();
    return first * phases.asDiagonal() * second;
}

} // namespace qgrover
