#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lcinv/stabilizer.hpp"

namespace lcinv {

/// Constraint data for r-tuples of stabilizer elements: one set per tuple
/// slot (singles) and one per unordered slot pair (k,l), k < l. Pairs are
/// kept in (1,2),(1,3),...,(1,r),(2,3),... order.
class OmegaTuple {
public:
  OmegaTuple(std::uint32_t n, std::uint32_t r, std::vector<QubitSet> singles,
             std::vector<QubitSet> pairs);

  /// Rebuilds a tuple from its canonical key (one integer mask per
  /// coordinate, singles first). Requires n <= 64.
  static OmegaTuple from_masks(std::uint32_t n, std::uint32_t r,
                               const std::vector<std::uint64_t>& masks);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }

  const QubitSet& single(std::uint32_t k) const { return singles_[k]; }        // 0-based
  const QubitSet& pair(std::uint32_t k, std::uint32_t l) const {               // 0-based, k < l
    return pairs_[pair_index(k, l, r_)];
  }
  static std::size_t pair_index(std::uint32_t k, std::uint32_t l, std::uint32_t r);

  /// Number of constraint coordinates: r singles + r(r-1)/2 pairs.
  std::size_t coords() const { return singles_.size() + pairs_.size(); }
  const QubitSet& coord(std::size_t c) const {
    return c < singles_.size() ? singles_[c] : pairs_[c - singles_.size()];
  }
  OmegaTuple with_coord(std::size_t c, QubitSet value) const;

  /// Canonical key: integer masks in coordinate order. Requires n <= 64.
  std::vector<std::uint64_t> masks() const;

  friend bool operator==(const OmegaTuple&, const OmegaTuple&) = default;
  bool operator<(const OmegaTuple& o) const;

private:
  std::uint32_t n_ = 0;
  std::uint32_t r_ = 0;
  std::vector<QubitSet> singles_;
  std::vector<QubitSet> pairs_;
};

struct InvariantValue {
  enum class Kind { t_count, v_dimension };
  Kind kind;
  std::uint64_t value;
};

inline constexpr std::uint32_t default_tuple_enum_budget = 25;       // max r*n
inline constexpr std::uint64_t default_fingerprint_budget = 1u << 20;  // max entries

/// Number of r-tuples of stabilizer elements whose supports match the tuple
/// pattern exactly: supp(v^k) = omega^k and supp(v^k + v^l) = omega^{kl}.
/// Depth-first enumeration with per-level pruning; every constraint whose
/// slots are already placed is checked immediately. Requires r*n within the
/// enumeration budget.
std::uint64_t t_invariant(const Stabilizer& s, const OmegaTuple& omega,
                          std::uint32_t enum_budget = default_tuple_enum_budget);

/// Dimension of the space of r-tuples with supports contained in the tuple
/// pattern: supp(v^k) in omega^k, supp(v^k + v^l) in omega^{kl}. Evaluated
/// as the corank of a stacked block matrix on coefficient space F2^{r*n}:
/// one block row per single (the row-pair submatrix in block column k) and
/// one per pair (the submatrix repeated in block columns k and l). This is
/// the polynomial path; no enumeration budget applies.
std::uint64_t v_dim_invariant(const Stabilizer& s, const OmegaTuple& omega);

/// |{tuples with supports contained in the pattern}| by brute-force tuple
/// enumeration; independent of the corank path and always equal to
/// 2^v_dim_invariant. Requires r*n within the enumeration budget.
std::uint64_t v_count_oracle(const Stabilizer& s, const OmegaTuple& omega,
                             std::uint32_t enum_budget = default_tuple_enum_budget);

/// Reconstructs the exact-support count at omega0 from subset-support counts
/// by coordinatewise inclusion-exclusion over the subset lattice. The map
/// must contain a count for every tuple in the full downward closure of
/// omega0 (each coordinate replaced by any of its subsets); the exponential
/// closure is deliberately the caller's responsibility.
std::uint64_t moebius_t_from_v(const std::map<OmegaTuple, std::uint64_t>& v_counts,
                               const OmegaTuple& omega0);

/// Subset-support dimensions for every constraint tuple of arity r, in
/// canonical order: sets encoded as integers 0..2^n-1, tuples enumerated in
/// odometer order (first coordinate most significant, last cycles fastest),
/// singles before pairs.
class Fingerprint {
public:
  Fingerprint() = default;
  Fingerprint(std::uint32_t n, std::uint32_t r, std::vector<std::uint32_t> values);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::size_t size() const { return values_.size(); }

  std::uint32_t value(std::size_t i) const { return values_[i]; }
  const std::vector<std::uint32_t>& values() const { return values_; }

  /// Decodes entry i's canonical key.
  std::vector<std::uint64_t> key_masks(std::size_t i) const;
  OmegaTuple key(std::size_t i) const;

  /// Header line "lcfp 1 <n> <r> <entries>", then one record per line:
  /// the coordinate masks followed by the value, space-separated.
  std::string to_text() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

private:
  std::uint32_t n_ = 0;
  std::uint32_t r_ = 0;
  std::vector<std::uint32_t> values_;
};

/// Evaluates the full canonical sweep of subset-support dimensions at arity
/// r. Entry count is (2^n)^(r + r(r-1)/2) and must not exceed max_entries;
/// the error names the offending count. Independent entries are evaluated in
/// parallel; the output order is canonical regardless.
Fingerprint fingerprint(const Stabilizer& s, std::uint32_t r,
                        std::uint64_t max_entries = default_fingerprint_budget);

/// The support pattern of the stored generator basis: r = n, singles are the
/// generator supports in column order, pairs the supports of pairwise sums.
OmegaTuple omega_star(const Stabilizer& s);

/// Inline constraint-tuple syntax: "r=2; w1={1,2}; w2={2,3}; w12={1,3}".
/// Whitespace-insensitive, 1-based. Pair keys use concatenated digits for
/// r <= 9 and the explicit form "w1,12={...}" beyond that. '#' starts a
/// comment; newlines work like ';'.
OmegaTuple parse_omega_spec(std::string_view text, std::uint32_t n);
std::string format_omega_spec(const OmegaTuple& omega);

}  // namespace lcinv
