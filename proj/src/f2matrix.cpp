#include "psl2jac/f2matrix.hpp"

#include <stdexcept>

namespace psl2jac {

namespace {
constexpr int kDimCap = 4096;
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    if (rows < 0 || cols < 0 || rows > kDimCap || cols > kDimCap)
        throw std::invalid_argument("F2Matrix: dimension outside [0, 4096]");
    bits_.assign(static_cast<size_t>(rows_) * wpr_, 0);
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("F2Matrix: shape mismatch");
    F2Matrix r = *this;
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
    return r;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2Matrix: shape mismatch in product");
    F2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        uint64_t* out = &r.bits_[static_cast<size_t>(i) * r.wpr_];
        for (int k = 0; k < cols_; ++k) {
            if (get(i, k)) {
                const uint64_t* src = &o.bits_[static_cast<size_t>(k) * o.wpr_];
                for (int w = 0; w < o.wpr_; ++w) out[w] ^= src[w];
            }
        }
    }
    return r;
}

F2Vector F2Matrix::apply(const F2Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("F2Matrix: vector length mismatch");
    F2Vector out(rows_);
    for (int i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        const uint64_t* row = &bits_[static_cast<size_t>(i) * wpr_];
        for (int w = 0; w < wpr_; ++w) acc ^= row[w] & v.w_[w];
        out.set(i, __builtin_parityll(acc));
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) r.set(j, i, true);
    return r;
}

bool F2Matrix::operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

bool F2Matrix::is_zero() const {
    for (uint64_t w : bits_)
        if (w) return false;
    return true;
}

void F2Matrix::xor_row_into(int src, int dst) {
    uint64_t* d = &bits_[static_cast<size_t>(dst) * wpr_];
    const uint64_t* s = &bits_[static_cast<size_t>(src) * wpr_];
    for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

int F2Matrix::rank() const {
    F2Matrix m = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m.get(i, c)) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int w = 0; w < wpr_; ++w)
                std::swap(m.bits_[static_cast<size_t>(pivot) * wpr_ + w], m.bits_[static_cast<size_t>(r) * wpr_ + w]);
        for (int i = r + 1; i < rows_; ++i)
            if (m.get(i, c)) m.xor_row_into(r, i);
        ++r;
    }
    return r;
}

F2Matrix F2Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("F2Matrix: inverse of non-square matrix");
    int n = rows_;
    F2Matrix m = *this;
    F2Matrix inv = identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (m.get(i, c)) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("F2Matrix: singular matrix");
        if (pivot != c) {
            for (int w = 0; w < m.wpr_; ++w)
                std::swap(m.bits_[static_cast<size_t>(pivot) * m.wpr_ + w], m.bits_[static_cast<size_t>(c) * m.wpr_ + w]);
            for (int w = 0; w < inv.wpr_; ++w)
                std::swap(inv.bits_[static_cast<size_t>(pivot) * inv.wpr_ + w], inv.bits_[static_cast<size_t>(c) * inv.wpr_ + w]);
        }
        for (int i = 0; i < n; ++i) {
            if (i != c && m.get(i, c)) {
                m.xor_row_into(c, i);
                inv.xor_row_into(c, i);
            }
        }
    }
    return inv;
}

std::vector<F2Vector> f2_solve_kernel(const F2Matrix& m) {
    int rows = m.rows(), cols = m.cols();
    F2Matrix r = m;
    std::vector<int> pivot_col;  // pivot column of each reduced row
    int rr = 0;
    for (int c = 0; c < cols && rr < rows; ++c) {
        int pivot = -1;
        for (int i = rr; i < rows; ++i)
            if (r.get(i, c)) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rr)
            for (int j = 0; j < cols; ++j) {
                bool t = r.get(pivot, j);
                r.set(pivot, j, r.get(rr, j));
                r.set(rr, j, t);
            }
        for (int i = 0; i < rows; ++i)
            if (i != rr && r.get(i, c)) r.xor_row_into(rr, i);
        pivot_col.push_back(c);
        ++rr;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<F2Vector> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        F2Vector v(cols);
        v.set(c, true);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            if (r.get(static_cast<int>(i), c)) v.set(pivot_col[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace psl2jac
