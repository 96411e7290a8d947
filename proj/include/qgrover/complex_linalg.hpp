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

/**
 * @file
 * Dense complex matrix and vector algebra on top of Eigen.
 *
 * Index convention: the mathematical presentation of the gates uses 1-based
 * row/column indices. Storage here is 0-based throughout, so a 1-based index
 * i corresponds to storage index i - 1. The only place where this matters
 * non-trivially is tensor_product_list(), whose bit-selection formula is
 * written directly in terms of 0-based indices (see there).
 */

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qgrover/errors.hpp"

namespace qgrover {

template <typename Scalar> using Complex = std::complex<Scalar>;

/// Dense row-major complex matrix. Every quantum operator in the library
/// is square with power-of-two dimension, but unit tests use other sizes.
template <typename Scalar>
using CMatrixX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic,
                               Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using CVectorX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using CMatrix = CMatrixX<double>;
using CVector = CVectorX<double>;

/// Largest log2-dimension accepted by paths that materialise a full
/// 2^k x 2^k matrix.
inline constexpr int kDenseQubitLimit = 12;

/// Default residual tolerance for unitarity checks.
inline constexpr double kUnitarityTolerance = 1e-10;

template <typename Derived>
using real_scalar_t =
    typename Eigen::NumTraits<typename Derived::Scalar>::Real;

namespace detail {

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived> &m, const char *what) {
    if (!m.allFinite()) {
        throw NonFiniteError(std::string(what) + ": non-finite entry");
    }
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived> &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw DimensionError(std::string(what) + ": expected a non-empty "
                             "square matrix, got " +
                             std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()));
    }
}

} // namespace detail

template <typename Scalar = double>
CMatrixX<Scalar> identity(Eigen::Index dim) {
    if (dim < 1) {
        throw DimensionError("identity: dimension must be positive");
    }
    return CMatrixX<Scalar>::Identity(dim, dim);
}

/// Square matrix with `entries` on the diagonal.
template <typename Derived>
CMatrixX<real_scalar_t<Derived>>
diagonal_matrix(const Eigen::MatrixBase<Derived> &entries) {
    detail::require_finite(entries, "diagonal_matrix");
    if (entries.size() < 1) {
        throw DimensionError("diagonal_matrix: empty diagonal");
    }
    CMatrixX<real_scalar_t<Derived>> out =
        CMatrixX<real_scalar_t<Derived>>::Zero(entries.size(),
                                               entries.size());
    out.diagonal() = entries;
    return out;
}

/// Conjugate transpose, out(i, j) = conj(a(j, i)).
template <typename Derived>
CMatrixX<real_scalar_t<Derived>>
hermitian_conjugate(const Eigen::MatrixBase<Derived> &a) {
    detail::require_square(a, "hermitian_conjugate");
    detail::require_finite(a, "hermitian_conjugate");
    return a.adjoint();
}

template <typename DerivedA, typename DerivedB>
CMatrixX<real_scalar_t<DerivedA>>
matmul(const Eigen::MatrixBase<DerivedA> &a,
       const Eigen::MatrixBase<DerivedB> &b) {
    detail::require_square(a, "matmul");
    detail::require_square(b, "matmul");
    if (a.rows() != b.rows()) {
        throw DimensionError("matmul: incompatible operands " +
                             std::to_string(a.rows()) + " vs " +
                             std::to_string(b.rows()));
    }
    detail::require_finite(a, "matmul");
    detail::require_finite(b, "matmul");
    return a * b;
}

template <typename DerivedA, typename DerivedV>
CVectorX<real_scalar_t<DerivedA>>
matvec(const Eigen::MatrixBase<DerivedA> &a,
       const Eigen::MatrixBase<DerivedV> &v) {
    detail::require_square(a, "matvec");
    if (v.cols() != 1 || a.cols() != v.rows()) {
        throw DimensionError("matvec: matrix of dimension " +
                             std::to_string(a.rows()) +
                             " cannot act on vector of length " +
                             std::to_string(v.size()));
    }
    detail::require_finite(a, "matvec");
    detail::require_finite(v, "matvec");
    return a * v;
}

/// Largest entry modulus, the "max-norm" used by every residual below.
template <typename Derived>
real_scalar_t<Derived> max_abs(const Eigen::MatrixBase<Derived> &m) {
    if (m.size() == 0) {
        return real_scalar_t<Derived>(0);
    }
    return m.cwiseAbs().maxCoeff();
}

/// max(|A^dagger A - I|_max, |A A^dagger - I|_max).
template <typename Derived>
real_scalar_t<Derived> unitarity_residual(const Eigen::MatrixBase<Derived> &a) {
    detail::require_square(a, "unitarity_residual");
    detail::require_finite(a, "unitarity_residual");
    using Plain = CMatrixX<real_scalar_t<Derived>>;
    const Plain eye = Plain::Identity(a.rows(), a.cols());
    const Plain left = a.adjoint() * a;
    const Plain right = a * a.adjoint();
    return std::max(max_abs(left - eye), max_abs(right - eye));
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived> &a,
                real_scalar_t<Derived> tol = kUnitarityTolerance) {
    if (!(tol > 0)) {
        throw std::invalid_argument("is_unitary: tolerance must be positive");
    }
    return unitarity_residual(a) < tol;
}

/// Worst deviation of the column Gram matrix from the identity:
/// max over (x, y) of |sum_i a(i, x) conj(a(i, y)) - delta_xy|.
template <typename Derived>
real_scalar_t<Derived>
column_orthonormality_residual(const Eigen::MatrixBase<Derived> &a) {
    detail::require_square(a, "column_orthonormality_residual");
    detail::require_finite(a, "column_orthonormality_residual");
    const auto dim = a.cols();
    real_scalar_t<Derived> worst(0);
    for (Eigen::Index x = 0; x < dim; ++x) {
        for (Eigen::Index y = 0; y < dim; ++y) {
            std::complex<real_scalar_t<Derived>> acc(0);
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                acc += a(i, x) * std::conj(a(i, y));
            }
            const auto delta = (x == y) ? real_scalar_t<Derived>(1)
                                        : real_scalar_t<Derived>(0);
            worst = std::max(worst, std::abs(acc - delta));
        }
    }
    return worst;
}

template <typename Derived>
bool unitary_columns_orthonormal(const Eigen::MatrixBase<Derived> &a,
                                 real_scalar_t<Derived> tol) {
    return column_orthonormality_residual(a) < tol;
}

/**
 * Tensor (Kronecker) product of a list of 2x2 factors, evaluated entrywise
 * from the bit-selection formula rather than by nested Kronecker blocks.
 *
 * With k factors A_1 .. A_k (A_1 outermost) and 0-based row/column indices
 * i, j of the 2^k x 2^k result,
 *
 *     out(i, j) = prod_{l=0}^{k-1} A_{k-l}( bit_l(i), bit_l(j) )
 *
 * where bit_l(x) = floor(x / 2^l) mod 2 selects the 0-based row/column in
 * the 2x2 factor. Bit 0 therefore addresses the last factor. In 1-based
 * form this is the familiar p_l = floor((i-1)/2^l) mod 2 + 1 rule.
 */
template <typename Scalar>
CMatrixX<Scalar>
tensor_product_list(const std::vector<CMatrixX<Scalar>> &factors) {
    const auto k = static_cast<int>(factors.size());
    if (k == 0) {
        throw DimensionError("tensor_product_list: empty factor list");
    }
    if (k > kDenseQubitLimit) {
        throw DimensionError("tensor_product_list: " + std::to_string(k) +
                             " factors exceed the dense limit");
    }
    for (const auto &f : factors) {
        if (f.rows() != 2 || f.cols() != 2) {
            throw DimensionError("tensor_product_list: every factor must "
                                 "be 2x2");
        }
        detail::require_finite(f, "tensor_product_list");
    }

    const Eigen::Index dim = Eigen::Index(1) << k;
    CMatrixX<Scalar> out(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            std::complex<Scalar> prod(1);
            for (int l = 0; l < k; ++l) {
                const auto &f = factors[static_cast<std::size_t>(k - 1 - l)];
                prod *= f((i >> l) & 1, (j >> l) & 1);
            }
            out(i, j) = prod;
        }
    }
    return out;
}

/// [f(0), f(1), ..., f(count - 1)], each required to be 2x2.
template <typename F>
auto matrix_list_gen(F &&f, std::size_t count)
    -> std::vector<std::decay_t<std::invoke_result_t<F &, std::size_t>>> {
    using Mat = std::decay_t<std::invoke_result_t<F &, std::size_t>>;
    if (count == 0) {
        throw DimensionError("matrix_list_gen: count must be at least 1");
    }
    std::vector<Mat> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Mat m = f(k);
        if (m.rows() != 2 || m.cols() != 2) {
            throw DimensionError("matrix_list_gen: generator returned a "
                                 "non-2x2 matrix");
        }
        out.push_back(std::move(m));
    }
    return out;
}

/// a^t with a^0 = I, by binary exponentiation. a^1 is returned as a copy
/// of `a` and a^2 as exactly a * a.
template <typename Derived>
CMatrixX<real_scalar_t<Derived>>
matrix_pow(const Eigen::MatrixBase<Derived> &a, std::uint64_t t) {
    detail::require_square(a, "matrix_pow");
    detail::require_finite(a, "matrix_pow");
    using Plain = CMatrixX<real_scalar_t<Derived>>;
    if (t == 0) {
        return Plain::Identity(a.rows(), a.cols());
    }
    Plain base = a;
    Plain result;
    bool have = false;
    while (t != 0) {
        if (t & 1U) {
            if (have) {
                result = (result * base).eval();
            } else {
                result = base;
                have = true;
            }
        }
        t >>= 1U;
        if (t != 0) {
            base = (base * base).eval();
        }
    }
    return result;
}

} // namespace qgrover
