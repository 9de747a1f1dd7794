#include "lycov/matrix.hpp"

#include <stdexcept>

namespace lycov {

ScalarMatrix ScalarMatrix::transposed() const {
    ScalarMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

bool ScalarMatrix::is_zero() const {
    for (auto v : a_)
        if (v != 0) return false;
    return true;
}

int rank(const ScalarMatrix& m, const FieldSpec& F) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ScalarMatrix w = m;
    int rk = 0;
    for (int col = 0; col < w.cols() && rk < w.rows(); ++col) {
        int pivot = -1;
        for (int r = rk; r < w.rows(); ++r)
            if (w.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rk)
            for (int c = col; c < w.cols(); ++c) {
                auto t = w.at(rk, c);
                w.set(rk, c, w.at(pivot, c));
                w.set(pivot, c, t);
            }
        std::uint32_t piv_inv = F.inv(w.at(rk, col));
        for (int r = rk + 1; r < w.rows(); ++r) {
            std::uint32_t f = w.at(r, col);
            if (f == 0) continue;
            std::uint32_t scale = F.mul(f, piv_inv);
            for (int c = col; c < w.cols(); ++c)
                w.set(r, c, F.sub(w.at(r, c), F.mul(scale, w.at(rk, c))));
        }
        ++rk;
    }
    return rk;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b, const FieldSpec& F) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    ScalarMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            std::uint32_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                std::uint32_t v = F.mul(aik, b.at(k, j));
                if (v != 0) c.set(i, j, F.add(c.at(i, j), v));
            }
        }
    return c;
}

}  // namespace lycov
