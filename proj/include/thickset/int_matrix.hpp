#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "thickset/errors.hpp"

namespace thickset {

using Int = mpz_class;

/// Dense row-major matrix over Z. All arithmetic is exact; shapes with zero
/// rows or zero columns are legal and act as zero maps.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix diagonal(const std::vector<Int>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Exact product; throws DimensionMismatch unless a.cols == b.rows.
/// Parallelised over output rows when the workload is large enough.
IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b);

IntMatrix transpose(const IntMatrix& a);
IntMatrix negated(const IntMatrix& a);

/// [[a, 0], [0, b]]
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

/// Copies src into dst with top-left corner at (i0, j0); bounds-checked.
void paste_block(IntMatrix& dst, std::size_t i0, std::size_t j0, const IntMatrix& src);

std::string to_string(const IntMatrix& a);

}  // namespace thickset
