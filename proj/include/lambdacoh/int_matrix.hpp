#pragma once

#include "lambdacoh/int.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace lambdacoh {

// Dense matrix over Z, row-major, value semantics.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_row_vectors(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    std::vector<Int> col(std::size_t j) const;

    bool is_zero() const;
    IntMatrix transpose() const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row i += c * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void swap_cols(std::size_t i, std::size_t j);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const Int& c, const IntMatrix& a);

// m * v (v as column vector)
std::vector<Int> mat_apply(const IntMatrix& m, const std::vector<Int>& v);
// v * m (v as row vector)
std::vector<Int> row_apply(const std::vector<Int>& v, const IntMatrix& m);

// Exact determinant (Bareiss fraction-free elimination). Square input.
Int determinant(const IntMatrix& m);

}  // namespace lambdacoh
