#pragma once

#include "texsys/abelian.hpp"
#include "texsys/bigint.hpp"
#include "texsys/error.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace texsys {

/// Dense integer matrix, row-major, arbitrary precision.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transposed() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k); // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

/// U * M * V = diag(diagonal), with U, V unimodular. diagonal holds
/// min(rows, cols) nonnegative entries forming a divisibility chain
/// (nonzero entries first). Transforms and their inverses are present only
/// when requested and are verified by re-multiplication.
struct SNFResult {
    std::vector<Int> diagonal;
    std::size_t rank = 0;
    std::optional<IntMatrix> left;          // U
    std::optional<IntMatrix> right;         // V
    std::optional<IntMatrix> left_inverse;  // U^-1
    std::optional<IntMatrix> right_inverse; // V^-1
};

/// Pivot rule: smallest nonzero absolute value in the remaining submatrix,
/// ties broken by row-major position.
SNFResult snf(IntMatrix m, bool with_transforms = false);

/// Invariants of Z^rows / column-span(m).
AbelianInvariants cokernel_invariants(const IntMatrix& m);

/// Integer solution x of m * x = b, if one exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b);

/// Solution x of m * x = b (mod modulus), if one exists. modulus >= 2.
bool solvable_mod(const IntMatrix& m, const std::vector<Int>& b, const Int& modulus);

std::vector<Int> multiply(const IntMatrix& m, const std::vector<Int>& x);

} // namespace texsys
