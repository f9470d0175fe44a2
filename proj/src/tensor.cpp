#include "ttns/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <Eigen/SVD>

#include "ttns/errors.hpp"

namespace ttns {

std::size_t product(const Dims& dims) {
    std::size_t p = 1;
    for (std::size_t d : dims) p *= d;
    return p;
}

static std::vector<std::size_t> row_major_strides(const Dims& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

Vector permute_axes(const Vector& data, const Dims& dims, const std::vector<std::size_t>& perm) {
    const std::size_t rank = dims.size();
    if (perm.size() != rank)
        throw ShapeInconsistent("permute_axes: perm size " + std::to_string(perm.size()) +
                                " vs rank " + std::to_string(rank));
    if (static_cast<std::size_t>(data.size()) != product(dims))
        throw ShapeInconsistent("permute_axes: data size does not match dims");

    if (rank == 0) return data;

    const auto in_strides = row_major_strides(dims);
    Dims out_dims(rank);
    std::vector<std::size_t> stride(rank);   // input stride of the axis at output slot k
    std::vector<bool> seen(rank, false);
    for (std::size_t k = 0; k < rank; ++k) {
        if (perm[k] >= rank || seen[perm[k]])
            throw ShapeInconsistent("permute_axes: perm is not a permutation");
        seen[perm[k]] = true;
        out_dims[k] = dims[perm[k]];
        stride[k] = in_strides[perm[k]];
    }

    Vector out(data.size());
    std::vector<std::size_t> idx(rank, 0);
    std::size_t off = 0;
    const std::size_t n = static_cast<std::size_t>(data.size());
    for (std::size_t i = 0; i < n; ++i) {
        out[static_cast<Eigen::Index>(i)] = data[static_cast<Eigen::Index>(off)];
        // odometer increment over out_dims, updating the input offset
        for (std::size_t k = rank; k-- > 0;) {
            ++idx[k];
            off += stride[k];
            if (idx[k] < out_dims[k]) break;
            off -= stride[k] * out_dims[k];
            idx[k] = 0;
        }
    }
    return out;
}

Matrix matricize(const Vector& data, const Dims& dims,
                 const std::vector<std::size_t>& row_axes,
                 const std::vector<std::size_t>& col_axes) {
    std::vector<std::size_t> perm;
    perm.reserve(dims.size());
    perm.insert(perm.end(), row_axes.begin(), row_axes.end());
    perm.insert(perm.end(), col_axes.begin(), col_axes.end());
    Vector p = permute_axes(data, dims, perm);

    std::size_t rows = 1, cols = 1;
    for (std::size_t a : row_axes) rows *= dims[a];
    for (std::size_t a : col_axes) cols *= dims[a];
    using RowMajorMap =
        Eigen::Map<const Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    return RowMajorMap(p.data(), static_cast<Eigen::Index>(rows),
                       static_cast<Eigen::Index>(cols));
}

Vector flatten_matrix(const Matrix& m, const Dims& row_dims, const Dims& col_dims) {
    if (product(row_dims) != static_cast<std::size_t>(m.rows()) ||
        product(col_dims) != static_cast<std::size_t>(m.cols()))
        throw ShapeInconsistent("flatten_matrix: dims do not match matrix shape");
    Vector out(m.size());
    using RowMajorMap =
        Eigen::Map<Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
    RowMajorMap(out.data(), m.rows(), m.cols()) = m;
    return out;
}

Vector slice_tensor(const Vector& data, const Dims& dims, const Dims& new_dims) {
    const std::size_t rank = dims.size();
    if (new_dims.size() != rank)
        throw ShapeInconsistent("slice_tensor: rank mismatch");
    for (std::size_t k = 0; k < rank; ++k)
        if (new_dims[k] == 0 || new_dims[k] > dims[k])
            throw ShapeInconsistent("slice_tensor: axis " + std::to_string(k) +
                                    " slice " + std::to_string(new_dims[k]) +
                                    " exceeds dim " + std::to_string(dims[k]));
    if (new_dims == dims) return data;

    const auto in_strides = row_major_strides(dims);
    Vector out(static_cast<Eigen::Index>(product(new_dims)));
    std::vector<std::size_t> idx(rank, 0);
    std::size_t off = 0;
    const std::size_t n = static_cast<std::size_t>(out.size());
    for (std::size_t i = 0; i < n; ++i) {
        out[static_cast<Eigen::Index>(i)] = data[static_cast<Eigen::Index>(off)];
        for (std::size_t k = rank; k-- > 0;) {
            ++idx[k];
            off += in_strides[k];
            if (idx[k] < new_dims[k]) break;
            off -= in_strides[k] * new_dims[k];
            idx[k] = 0;
        }
    }
    return out;
}

SvdResult svd_econ(const Matrix& m) {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult r;
    r.u = svd.matrixU();
    r.s = svd.singularValues();
    r.v = svd.matrixV();

    const Eigen::Index k = r.s.size();
    const double smax = k > 0 ? r.s(0) : 0.0;

    // Reorder degenerate groups by dominant row index of |u| (stable).
    const double tie_tol = 1e-12 * smax;
    Eigen::Index g = 0;
    while (g < k) {
        Eigen::Index h = g + 1;
        while (h < k && r.s(h - 1) - r.s(h) <= tie_tol) ++h;
        if (h - g > 1) {
            std::vector<Eigen::Index> order(static_cast<std::size_t>(h - g));
            std::iota(order.begin(), order.end(), g);
            std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
                Eigen::Index ra, rb;
                r.u.col(a).cwiseAbs().maxCoeff(&ra);
                r.u.col(b).cwiseAbs().maxCoeff(&rb);
                return ra < rb;
            });
            Matrix us = r.u.middleCols(g, h - g);
            Matrix vs = r.v.middleCols(g, h - g);
            RealVector ss = r.s.segment(g, h - g);
            for (Eigen::Index j = 0; j < h - g; ++j) {
                r.u.col(g + j) = us.col(order[static_cast<std::size_t>(j)] - g);
                r.v.col(g + j) = vs.col(order[static_cast<std::size_t>(j)] - g);
                r.s(g + j) = ss(order[static_cast<std::size_t>(j)] - g);
            }
        }
        g = h;
    }

    // Rotate each column's dominant entry onto the positive real axis; the
    // compensating phase on v keeps u * s * v^dagger unchanged.
    for (Eigen::Index c = 0; c < k; ++c) {
        Eigen::Index rr;
        double a = r.u.col(c).cwiseAbs().maxCoeff(&rr);
        if (a > 0.0) {
            Cplx phase = std::conj(r.u(rr, c)) / a;
            r.u.col(c) *= phase;
            r.v.col(c) *= phase;
        }
    }

    r.rank = 0;
    for (Eigen::Index i = 0; i < k; ++i)
        if (r.s(i) >= 1e-14 * smax && r.s(i) > 0.0) ++r.rank;
    return r;
}

} // namespace ttns
