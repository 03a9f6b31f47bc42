#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcinv/error.hpp"

namespace lcinv {

/// Bit vector over F2, packed 64 bits per machine word. Bit i lives in word
/// i/64 at position i%64 (little-endian bit order within words). Pad bits
/// past size() are kept zero, so whole-word operations need no masking.
class GF2Vector {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  GF2Vector() = default;
  explicit GF2Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  /// Parses a string of '0'/'1' characters; character 0 becomes bit 0.
  static GF2Vector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set_bit(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }

  void flip_bit(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t popcount() const;

  /// Index of the first set bit at or after `from`; npos if none.
  std::size_t first_set(std::size_t from = 0) const;

  /// XOR-accumulate another vector of the same length.
  GF2Vector& operator^=(const GF2Vector& o);

  /// Orders vectors by their value as an integer (bit 0 least significant).
  /// Used for canonical tie-breaking; shorter vectors compare as if padded.
  bool less_as_integer(const GF2Vector& o) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

private:
  static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

inline GF2Vector operator^(GF2Vector a, const GF2Vector& b) {
  a ^= b;
  return a;
}

/// Dense matrix over F2 stored as one packed GF2Vector per row. Matrices
/// with zero rows and/or zero columns are legal everywhere.
class GF2Matrix {
public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  static GF2Matrix identity(std::size_t n);
  static GF2Matrix from_rows(std::vector<GF2Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].bit(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set_bit(c, v); }

  const GF2Vector& row(std::size_t r) const { return data_[r]; }
  GF2Vector& row_mut(std::size_t r) { return data_[r]; }
  void swap_rows(std::size_t i, std::size_t j) { std::swap(data_[i], data_[j]); }

  GF2Matrix transposed() const;

  /// [this | other]: column concatenation. Throws on row-count mismatch.
  GF2Matrix concat_columns(const GF2Matrix& other) const;

  /// One line per row, characters '0'/'1', no separators.
  std::string to_text() const;
  static GF2Matrix parse_text(std::string_view text);

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GF2Vector> data_;
};

/// Dimension of the row space. In-place Gaussian elimination on a working
/// copy with word-level XOR row updates; row updates run under OpenMP once
/// the remaining work is large enough, and the result does not depend on
/// the thread count.
std::size_t rank(const GF2Matrix& m);

/// cols − rank: the kernel dimension in column-coefficient space.
std::size_t corank(const GF2Matrix& m);

/// Rows form a basis of {x : Mx = 0}; row count equals corank(m).
GF2Matrix kernel_basis(const GF2Matrix& m);

/// True iff the column spans coincide, decided as
/// rank(a) == rank(b) == rank([a|b]). Throws on row-count mismatch.
bool column_space_equal(const GF2Matrix& a, const GF2Matrix& b);

/// Product over F2 (XOR-accumulate). Throws on inner-dimension mismatch.
GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace lcinv
