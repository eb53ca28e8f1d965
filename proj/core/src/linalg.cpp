#include "lpcert/linalg.hpp"

#include "lpcert/errors.hpp"

#include <string>
#include <utility>

namespace lpcert {

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw PreconditionError("RMatrix: ragged row list");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Rational& RMatrix::operator()(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw PreconditionError("RMatrix: index out of range");
    return data_[i * cols_ + j];
}

const Rational& RMatrix::operator()(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw PreconditionError("RMatrix: index out of range");
    return data_[i * cols_ + j];
}

RVector RMatrix::row(std::size_t i) const {
    if (i >= rows_) throw PreconditionError("RMatrix: row index out of range");
    return RVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RVector RMatrix::col(std::size_t j) const {
    if (j >= cols_) throw PreconditionError("RMatrix: column index out of range");
    RVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
    return out;
}

RMatrix RMatrix::transposed() const {
    RMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = data_[i * cols_ + j];
    }
    return out;
}

RMatrix RMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    RMatrix out(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= cols_) {
            throw PreconditionError("select_columns: column index " + std::to_string(idx[k]) +
                                    " out of range");
        }
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = data_[i * cols_ + idx[k]];
    }
    return out;
}

RVector matvec(const RMatrix& m, const RVector& v) {
    if (v.size() != m.cols()) throw PreconditionError("matvec: dimension mismatch");
    RVector out = zeros(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

RVector vecmat(const RVector& v, const RMatrix& m) {
    if (v.size() != m.rows()) throw PreconditionError("vecmat: dimension mismatch");
    RVector out = zeros(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational acc(0);
        for (std::size_t i = 0; i < m.rows(); ++i) acc += v[i] * m(i, j);
        out[j] = acc;
    }
    return out;
}

namespace {

struct Rref {
    RMatrix m;
    std::vector<std::size_t> pivot_cols;  // ascending; row i pivots at pivot_cols[i]
};

// Gauss-Jordan with deterministic pivoting: leftmost eligible column, first
// nonzero row at or below the working row.
Rref reduced_row_echelon(RMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (m(i, c) != 0) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(pr, j));
        }
        const Rational piv = m(pr, c);
        for (std::size_t j = 0; j < cols; ++j) m(pr, j) /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const RMatrix& m) {
    return reduced_row_echelon(m).pivot_cols.size();
}

bool columns_independent(const RMatrix& m, const std::vector<std::size_t>& idx) {
    return rank(m.select_columns(idx)) == idx.size();
}

std::optional<RVector> solve_exact(const RMatrix& m, const RVector& rhs) {
    if (rhs.size() != m.rows()) throw PreconditionError("solve_exact: dimension mismatch");
    RMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    Rref red = reduced_row_echelon(std::move(aug));
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
        if (red.pivot_cols[k] == m.cols()) return std::nullopt;  // 0 = nonzero row
    }
    RVector z = zeros(m.cols());
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
        z[red.pivot_cols[k]] = red.m(k, m.cols());
    }
    return z;
}

std::vector<RVector> null_space_basis(const RMatrix& m) {
    Rref red = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVector v = zeros(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
            v[red.pivot_cols[k]] = -red.m(k, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lpcert
