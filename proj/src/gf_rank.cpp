#include "tangles/gf_rank.hpp"

#include <string>
#include <utility>

#include "tangles/errors.hpp"

namespace tangles {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int inverse_mod(int a, int p) {
  // Fermat: a^(p-2) mod p.
  long long result = 1;
  long long base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

PrimeFieldMatrix::PrimeFieldMatrix(int prime, std::vector<std::vector<int>> rows) : prime_(prime) {
  if (!is_prime(prime) || prime > 251) {
    throw InputError("field order " + std::to_string(prime) + " is not a prime <= 251");
  }
  rows_ = rows.size();
  cols_ = rows.empty() ? 0 : rows.front().size();
  data_.reserve(rows_ * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) {
      throw InputError("matrix row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(cols_));
    }
    for (int v : rows[r]) {
      if (v < 0 || v >= prime) {
        throw InputError("matrix entry " + std::to_string(v) + " is not a residue mod " +
                         std::to_string(prime));
      }
      data_.push_back(v);
    }
  }
}

int PrimeFieldMatrix::column_rank(Side columns) const {
  std::vector<std::size_t> picked;
  for (int c : elements_of(columns)) picked.push_back(static_cast<std::size_t>(c));
  const std::size_t width = picked.size();
  if (width == 0 || rows_ == 0) return 0;

  std::vector<int> m(rows_ * width);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < width; ++j) m[r * width + j] = at(r, picked[j]);
  }

  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows_; ++col) {
    std::size_t found = pivot_row;
    while (found < rows_ && m[found * width + col] == 0) ++found;
    if (found == rows_) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < width; ++j) std::swap(m[found * width + j], m[pivot_row * width + j]);
    }
    const int inv = inverse_mod(m[pivot_row * width + col], prime_);
    for (std::size_t r = pivot_row + 1; r < rows_; ++r) {
      const int factor = m[r * width + col] * inv % prime_;
      if (factor == 0) continue;
      for (std::size_t j = col; j < width; ++j) {
        m[r * width + j] = (m[r * width + j] + (prime_ - factor) * m[pivot_row * width + j]) % prime_;
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace tangles
