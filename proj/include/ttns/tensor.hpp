#pragma once

// Dense tensor plumbing shared by the whole pipeline: row-major axis
// permutation, matricization, and an economy SVD with a deterministic
// ordering of degenerate singular triplets.

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace ttns {

using Cplx = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

using Dims = std::vector<std::size_t>;

std::size_t product(const Dims& dims);

// Row-major convention throughout: the first axis varies slowest.

// out has axes (dims[perm[0]], dims[perm[1]], ...); out[(i_{perm[0]}, ...)] = in[(i_0, i_1, ...)].
Vector permute_axes(const Vector& data, const Dims& dims, const std::vector<std::size_t>& perm);

// Groups the listed axes into a matrix: rows enumerate row_axes in row-major
// order (first listed slowest), columns enumerate col_axes likewise.
// row_axes ++ col_axes must be a permutation of all axes.
Matrix matricize(const Vector& data, const Dims& dims,
                 const std::vector<std::size_t>& row_axes,
                 const std::vector<std::size_t>& col_axes);

// Inverse direction: flattens a matrix back to a row-major buffer whose axis
// order is row_dims ++ col_dims.
Vector flatten_matrix(const Matrix& m, const Dims& row_dims, const Dims& col_dims);

// Keeps the leading new_dims[k] entries of every axis k.
Vector slice_tensor(const Vector& data, const Dims& dims, const Dims& new_dims);

struct SvdResult {
    Matrix u;            // columnwise orthonormal
    RealVector s;        // non-increasing up to degeneracy reordering (see below)
    Matrix v;            // columnwise orthonormal; input = u * s.asDiagonal() * v.adjoint()
    std::size_t rank;    // entries with s >= 1e-14 * s(0)
};

// Thin SVD. Singular triplets whose values agree within 1e-12 * s(0) are
// reordered by the row index of the dominant |u| entry and each column's
// dominant entry is phase-rotated to the positive real axis. Truncations that
// keep "the first M columns" therefore select the same subspace chain on
// every edge of a degenerate state, independent of LAPACK/Eigen internals.
// Stored values may deviate from sorted order at the 1e-12 * s(0) scale.
SvdResult svd_econ(const Matrix& m);

} // namespace ttns
