#pragma once

#include "lpcert/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace lpcert {

// Dense exact matrix, row-major. Degenerate shapes (0 x 0, 0 x n, m x 0) are
// legal and behave as the empty linear map.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols);  // zero-filled
    RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j);
    const Rational& operator()(std::size_t i, std::size_t j) const;

    RVector row(std::size_t i) const;
    RVector col(std::size_t j) const;
    RMatrix transposed() const;

    // Matrix made of the given columns, in the given order.
    RMatrix select_columns(const std::vector<std::size_t>& idx) const;

    friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RVector matvec(const RMatrix& m, const RVector& v);

// v^T m, i.e. the row vector v applied from the left.
RVector vecmat(const RVector& v, const RMatrix& m);

std::size_t rank(const RMatrix& m);

// True iff the selected columns are linearly independent. The empty selection
// counts as independent.
bool columns_independent(const RMatrix& m, const std::vector<std::size_t>& idx);

// One exact solution of m z = rhs, or nullopt when the system is inconsistent.
// Underdetermined systems are resolved deterministically: pivots are chosen
// leftmost-first and every free variable is pinned to zero.
std::optional<RVector> solve_exact(const RMatrix& m, const RVector& rhs);

// cols(m) - rank(m) vectors spanning the kernel of m, in the deterministic
// order induced by the free columns.
std::vector<RVector> null_space_basis(const RMatrix& m);

}  // namespace lpcert
