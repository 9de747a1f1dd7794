#pragma once

#include <vector>

#include "lycov/field.hpp"

namespace lycov {

// Dense matrix with entries in GF(p), row-major.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }
    void set(int r, int c, std::uint32_t v) {
        a_[static_cast<std::size_t>(r) * cols_ + c] = v;
    }

    ScalarMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const ScalarMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

// Rank over GF(p) by Gaussian elimination. Pivots are chosen as the first
// nonzero entry in row-major order, so reduced forms are deterministic.
int rank(const ScalarMatrix& m, const FieldSpec& F);

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const FieldSpec& F);

}  // namespace lycov
