#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcinv/stabilizer.hpp"

// Internal helpers for small-n hot loops: Pauli vectors packed into a single
// 64-bit word (z bits 0..n-1, x bits n..2n-1). Only valid for n <= 25, which
// every enumeration budget guarantees.
namespace lcinv::packed {

inline std::uint64_t column(const GF2Matrix& gens, std::uint32_t n, std::uint32_t j) {
  std::uint64_t v = 0;
  for (std::uint32_t i = 0; i < 2 * n; ++i)
    if (gens.get(i, j)) v |= std::uint64_t{1} << i;
  return v;
}

inline std::vector<std::uint64_t> columns(const GF2Matrix& gens, std::uint32_t n) {
  std::vector<std::uint64_t> out(n);
  for (std::uint32_t j = 0; j < n; ++j) out[j] = column(gens, n, j);
  return out;
}

inline std::uint64_t support_mask(std::uint64_t elem, std::uint32_t n) {
  return (elem | (elem >> n)) & ((std::uint64_t{1} << n) - 1);
}

/// All 2^n subspace elements; index order matches enumerate_elements.
inline std::vector<std::uint64_t> elements(const Stabilizer& s) {
  const std::uint32_t n = s.qubits();
  if (n > 25) throw std::invalid_argument("packed::elements: n > 25");
  const std::vector<std::uint64_t> cols = columns(s.generators(), n);
  std::vector<std::uint64_t> out(std::size_t{1} << n, 0);
  for (std::size_t c = 1; c < out.size(); ++c)
    out[c] = out[c & (c - 1)] ^ cols[static_cast<std::uint32_t>(std::countr_zero(c))];
  return out;
}

/// Incremental span-membership tester for vectors of <= 64 bits, indexed by
/// lowest set bit of the reduced representative.
struct PivotBasis {
  std::array<std::uint64_t, 64> by_pivot{};

  void insert(std::uint64_t v) {
    while (v) {
      const int p = std::countr_zero(v);
      if (!by_pivot[p]) {
        by_pivot[p] = v;
        return;
      }
      v ^= by_pivot[p];
    }
  }

  bool contains(std::uint64_t v) const {
    while (v) {
      const int p = std::countr_zero(v);
      if (!by_pivot[p]) return false;
      v ^= by_pivot[p];
    }
    return true;
  }
};

}  // namespace lcinv::packed
