#pragma once

#include <cstdint>
#include <vector>

namespace psl2jac {

// Bit-packed vector over F_2.
class F2Vector {
  public:
    F2Vector() = default;
    explicit F2Vector(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        uint64_t m = 1ULL << (i & 63);
        if (v) w_[i >> 6] |= m;
        else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= 1ULL << (i & 63); }
    void xor_with(const F2Vector& o) {
        for (size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
    }
    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool operator==(const F2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }

  private:
    friend class F2Matrix;
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Dense matrix over F_2, rows bit-packed. Dimensions are capped at 4096.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);
    static F2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(int r, int c, bool v) {
        uint64_t m = 1ULL << (c & 63);
        if (v) bits_[r * wpr_ + (c >> 6)] |= m;
        else bits_[r * wpr_ + (c >> 6)] &= ~m;
    }

    F2Matrix operator+(const F2Matrix& o) const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Vector apply(const F2Vector& v) const;  // matrix * column vector
    F2Matrix transpose() const;
    bool operator==(const F2Matrix& o) const;
    bool is_zero() const;

    int rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    F2Matrix inverse() const;  // throws if singular

    void xor_row_into(int src, int dst);  // row[dst] ^= row[src]

  private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> bits_;
};

// Basis of {v : m v = 0}; size is cols - rank.
std::vector<F2Vector> f2_solve_kernel(const F2Matrix& m);

}  // namespace psl2jac
