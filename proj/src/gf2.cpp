#include "lcinv/gf2.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace lcinv {

GF2Vector GF2Vector::from_string(std::string_view bits) {
  GF2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set_bit(i, true);
    else if (bits[i] != '0')
      throw parse_error("bit vector: invalid character '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

bool GF2Vector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::size_t GF2Vector::popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t GF2Vector::first_set(std::size_t from) const {
  if (from >= len_) return npos;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return npos;
    w = words_[wi];
  }
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
  assert(len_ == o.len_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool GF2Vector::less_as_integer(const GF2Vector& o) const {
  const std::size_t n = std::max(words_.size(), o.words_.size());
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t a = i < words_.size() ? words_[i] : 0;
    const std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
    if (a != b) return a < b;
  }
  return false;
}

std::string GF2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_rows(std::vector<GF2Vector> rows, std::size_t cols) {
  for (const GF2Vector& r : rows)
    if (r.size() != cols) throw std::invalid_argument("from_rows: row length != cols");
  GF2Matrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  m.data_ = std::move(rows);
  return m;
}

GF2Matrix GF2Matrix::transposed() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = data_[r].first_set(0); c != GF2Vector::npos; c = data_[r].first_set(c + 1))
      t.set(c, r, true);
  return t;
}

GF2Matrix GF2Matrix::concat_columns(const GF2Matrix& other) const {
  if (rows_ != other.rows_)
    throw std::invalid_argument("concat_columns: row-count mismatch");
  GF2Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = data_[r].first_set(0); c != GF2Vector::npos; c = data_[r].first_set(c + 1))
      m.set(r, c, true);
    const GF2Vector& o = other.data_[r];
    for (std::size_t c = o.first_set(0); c != GF2Vector::npos; c = o.first_set(c + 1))
      m.set(r, cols_ + c, true);
  }
  return m;
}

std::string GF2Matrix::to_text() const {
  std::string s;
  s.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    s += data_[r].to_string();
    s += '\n';
  }
  return s;
}

GF2Matrix GF2Matrix::parse_text(std::string_view text) {
  std::vector<GF2Vector> rows;
  std::size_t cols = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    GF2Vector v = GF2Vector::from_string(line);
    if (rows.empty())
      cols = v.size();
    else if (v.size() != cols)
      throw parse_error("matrix text: inconsistent row length");
    rows.push_back(std::move(v));
  }
  return from_rows(std::move(rows), cols);
}

namespace {

// Remaining work (rows x words) above which row updates go parallel.
constexpr std::size_t kParallelEliminationWork = 16384;

// Forward elimination; with full_reduce also clears above the pivots so the
// surviving rows are in reduced echelon form. Returns the rank; pivot column
// indices are appended to *pivot_cols when given.
std::size_t eliminate(std::vector<GF2Vector>& rows, std::size_t cols, bool full_reduce,
                      std::vector<std::size_t>* pivot_cols) {
  const std::size_t nrows = rows.size();
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < nrows; ++c) {
    std::size_t p = rk;
    while (p < nrows && !rows[p].bit(c)) ++p;
    if (p == nrows) continue;
    std::swap(rows[rk], rows[p]);
    if (pivot_cols) pivot_cols->push_back(c);
    const GF2Vector& pivot = rows[rk];
    const std::int64_t begin = full_reduce ? 0 : static_cast<std::int64_t>(rk) + 1;
    const std::int64_t end = static_cast<std::int64_t>(nrows);
    const bool parallel =
        (nrows - rk) * pivot.words().size() >= kParallelEliminationWork;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = begin; i < end; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (u != rk && rows[u].bit(c)) rows[u] ^= pivot;
    }
    ++rk;
  }
  return rk;
}

std::vector<GF2Vector> copy_rows(const GF2Matrix& m) {
  std::vector<GF2Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

std::size_t rank(const GF2Matrix& m) {
  std::vector<GF2Vector> rows = copy_rows(m);
  return eliminate(rows, m.cols(), false, nullptr);
}

std::size_t corank(const GF2Matrix& m) { return m.cols() - rank(m); }

GF2Matrix kernel_basis(const GF2Matrix& m) {
  std::vector<GF2Vector> rows = copy_rows(m);
  std::vector<std::size_t> pivot_cols;
  const std::size_t rk = eliminate(rows, m.cols(), true, &pivot_cols);

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  GF2Matrix basis(m.cols() - rk, m.cols());
  std::size_t bi = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis.set(bi, f, true);
    // Row t of the reduced form reads x[pivot_cols[t]] = sum of free entries.
    for (std::size_t t = 0; t < rk; ++t)
      if (rows[t].bit(f)) basis.set(bi, pivot_cols[t], true);
    ++bi;
  }
  return basis;
}

bool column_space_equal(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("column_space_equal: row-count mismatch");
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  if (ra != rb) return false;
  return rank(a.concat_columns(b)) == ra;
}

GF2Matrix mat_mul(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("mat_mul: inner-dimension mismatch");
  GF2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    GF2Vector& dst = out.row_mut(i);
    const GF2Vector& src = a.row(i);
    for (std::size_t j = src.first_set(0); j != GF2Vector::npos; j = src.first_set(j + 1))
      dst ^= b.row(j);
  }
  return out;
}

}  // namespace lcinv
