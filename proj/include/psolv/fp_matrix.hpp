#pragma once

#include <cstdint>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/numeric.hpp"

namespace psolv {

/// Dense matrix over F_p with exact modular arithmetic (p <= 2^31).
class FpMatrix {
public:
  FpMatrix(std::uint64_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    require_prime(p);
  }

  static FpMatrix identity(std::uint64_t p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::uint64_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void set_row(std::size_t r, const std::vector<std::uint64_t>& row) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = row[c] % p_;
  }

  std::vector<std::uint64_t> row(std::size_t r) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  FpMatrix operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw contract_error("matrix product shape mismatch");
    FpMatrix out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        std::uint64_t aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          out.at(i, j) = (out.at(i, j) + aik * rhs.at(k, j)) % p_;
      }
    return out;
  }

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Stacks other's rows below this matrix (column counts must agree).
  FpMatrix vstack(const FpMatrix& other) const {
    if (cols_ != other.cols_ || p_ != other.p_) throw contract_error("vstack shape mismatch");
    FpMatrix out(p_, rows_ + other.rows_, cols_);
    out.a_ = a_;
    out.a_.insert(out.a_.end(), other.a_.begin(), other.a_.end());
    return out;
  }

  std::size_t rank() const {
    std::vector<std::uint64_t> work = a_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rows_;
      for (std::size_t r = rank; r < rows_; ++r)
        if (work[r * cols_ + col] != 0) {
          pivot = r;
          break;
        }
      if (pivot == rows_) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(work[rank * cols_ + c], work[pivot * cols_ + c]);
      std::uint64_t inv = mod_inverse(work[rank * cols_ + col]);
      for (std::size_t c = col; c < cols_; ++c)
        work[rank * cols_ + c] = work[rank * cols_ + c] * inv % p_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == rank) continue;
        std::uint64_t f = work[r * cols_ + col];
        if (f == 0) continue;
        for (std::size_t c = col; c < cols_; ++c) {
          std::uint64_t sub = f * work[rank * cols_ + c] % p_;
          work[r * cols_ + c] = (work[r * cols_ + c] + p_ - sub) % p_;
        }
      }
      ++rank;
    }
    return rank;
  }

  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

private:
  std::uint64_t mod_inverse(std::uint64_t x) const {
    // Fermat: x^(p-2) mod p.
    std::uint64_t result = 1, base = x % p_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::uint64_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> a_;
};

}  // namespace psolv
