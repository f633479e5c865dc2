#ifndef ZKN_LINALG_HPP
#define ZKN_LINALG_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace zkn {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Reduced row echelon form over an exact field.
///
/// `pivots[r]` is the pivot column of row r for r < rank; rows past the rank
/// are zero.  Pivot order is leftmost-first, so the form is canonical.
template <typename Scalar>
struct RowEchelon {
    DenseMatrix<Scalar> reduced;
    std::vector<Eigen::Index> pivots;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

namespace detail {

inline bool is_zero_scalar(const auto& x) { return x == 0; }

}  // namespace detail

/// Gauss-Jordan elimination.  Entries are compared against zero exactly, so
/// Scalar must be an exact field type.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(DenseMatrix<Scalar> m)
{
    RowEchelon<Scalar> out;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> support;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < rows; ++r) {
            if (!detail::is_zero_scalar(m(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != row)
            m.row(pivot).swap(m.row(row));

        const Scalar inv = Scalar(1) / m(row, col);
        support.clear();
        for (Eigen::Index c = col; c < cols; ++c) {
            if (!detail::is_zero_scalar(m(row, c))) {
                m(row, c) = m(row, c) * inv;
                support.push_back(c);
            }
        }
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == row || detail::is_zero_scalar(m(r, col)))
                continue;
            const Scalar factor = m(r, col);
            for (Eigen::Index c : support)
                m(r, c) = m(r, c) - factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const DenseMatrix<Scalar>& m)
{
    return row_echelon<Scalar>(m).rank();
}

/// Basis of the right nullspace, one vector per column of the result.
/// Free columns are taken in increasing order; each basis vector has a 1 in
/// its own free coordinate and 0 in the others.
template <typename Scalar>
DenseMatrix<Scalar> nullspace(const DenseMatrix<Scalar>& m)
{
    const RowEchelon<Scalar> ech = row_echelon<Scalar>(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Eigen::Index p : ech.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            free_cols.push_back(c);

    DenseMatrix<Scalar> basis = DenseMatrix<Scalar>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        const auto fc = free_cols[f];
        const auto col = static_cast<Eigen::Index>(f);
        basis(fc, col) = Scalar(1);
        for (Eigen::Index r = 0; r < ech.rank(); ++r)
            basis(ech.pivots[static_cast<std::size_t>(r)], col) = -ech.reduced(r, fc);
    }
    return basis;
}

/// Reduces every column of `targets` modulo the column space of `span`.
///
/// The result is canonical: two columns differ by an element of the span iff
/// their reductions are equal.  Works on the transposed system so that the
/// pivot order of `span` fixes which coordinates are eliminated.
template <typename Scalar>
DenseMatrix<Scalar> reduce_modulo_columns(const DenseMatrix<Scalar>& span, const DenseMatrix<Scalar>& targets)
{
    const RowEchelon<Scalar> ech = row_echelon<Scalar>(DenseMatrix<Scalar>(span.transpose()));
    DenseMatrix<Scalar> out = targets;
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
        const Eigen::Index p = ech.pivots[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < out.cols(); ++c) {
            if (detail::is_zero_scalar(out(p, c)))
                continue;
            const Scalar factor = out(p, c);
            for (Eigen::Index q = 0; q < out.rows(); ++q)
                if (!detail::is_zero_scalar(ech.reduced(r, q)))
                    out(q, c) = out(q, c) - factor * ech.reduced(r, q);
        }
    }
    return out;
}

}  // namespace zkn

#endif  // ZKN_LINALG_HPP
