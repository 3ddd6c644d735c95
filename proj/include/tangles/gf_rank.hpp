#pragma once

#include <cstdint>
#include <vector>

#include "tangles/side.hpp"

namespace tangles {

/// Dense r x n matrix over the prime field GF(p), entries reduced to [0, p).
class PrimeFieldMatrix {
 public:
  /// Throws InputError if p is not a prime <= 251, rows are ragged, or an
  /// entry lies outside [0, p).
  PrimeFieldMatrix(int prime, std::vector<std::vector<int>> rows);

  [[nodiscard]] int prime() const { return prime_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rank of the columns indexed by `columns`, by Gaussian elimination mod p.
  [[nodiscard]] int column_rank(Side columns) const;

 private:
  int prime_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

bool is_prime(int p);

/// Multiplicative inverse of a nonzero residue mod p.
int inverse_mod(int a, int p);

}  // namespace tangles
