#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcinv/gf2.hpp"

namespace lcinv {

/// Subset of the qubit positions {1,...,n}. Stored 0-based; all user-facing
/// I/O (parse, to_string, indices) is 1-based.
class QubitSet {
public:
  QubitSet() = default;
  explicit QubitSet(std::uint32_t n) : n_(n), bits_(n) {}

  static QubitSet full(std::uint32_t n);
  /// Bit i of `mask` selects qubit i+1. Requires n <= 64.
  static QubitSet from_mask(std::uint32_t n, std::uint64_t mask);
  static QubitSet from_indices(std::uint32_t n, const std::vector<std::uint32_t>& one_based);

  std::uint32_t universe() const { return n_; }

  bool contains(std::uint32_t q) const { return bits_.bit(q); }  // 0-based
  void add(std::uint32_t q) { bits_.set_bit(q, true); }          // 0-based

  std::uint32_t count() const { return static_cast<std::uint32_t>(bits_.popcount()); }
  bool subset_of(const QubitSet& o) const;
  QubitSet complement() const;

  /// The set as an integer mask (bit i = qubit i+1). Requires n <= 64.
  std::uint64_t mask() const;

  std::vector<std::uint32_t> indices() const;  // 1-based, ascending

  /// "{1,3}"; "{}" when empty.
  std::string to_string() const;
  /// Accepts "{1,3}", "{}", and the empty-set glyph.
  static QubitSet parse(std::string_view text, std::uint32_t n);

  friend bool operator==(const QubitSet&, const QubitSet&) = default;
  bool operator<(const QubitSet& o) const;

private:
  std::uint32_t n_ = 0;
  GF2Vector bits_;
};

/// Phase-free n-qubit Pauli operator as 2n bits: position i (0-based, i < n)
/// holds the z-bit of qubit i+1 and position n+i its x-bit, so the per-qubit
/// bit pairs read I=(0,0), X=(0,1), Z=(1,0), Y=(1,1).
class PauliVector {
public:
  PauliVector() = default;
  explicit PauliVector(std::uint32_t n) : n_(n), v_(2 * static_cast<std::size_t>(n)) {}
  PauliVector(std::uint32_t n, GF2Vector v);

  std::uint32_t qubits() const { return n_; }
  const GF2Vector& bits() const { return v_; }

  bool z_bit(std::uint32_t i) const { return v_.bit(i); }
  bool x_bit(std::uint32_t i) const { return v_.bit(static_cast<std::size_t>(n_) + i); }
  void set_z(std::uint32_t i, bool b) { v_.set_bit(i, b); }
  void set_x(std::uint32_t i, bool b) { v_.set_bit(static_cast<std::size_t>(n_) + i, b); }

  PauliVector operator+(const PauliVector& o) const;

  std::string to_string() const;  // e.g. "XZZXI"

  friend bool operator==(const PauliVector&, const PauliVector&) = default;

private:
  std::uint32_t n_ = 0;
  GF2Vector v_;
};

/// Parses a Pauli string over {I,X,Y,Z} with an optional '+', '-', '+i' or
/// '-i' prefix; any sign is accepted and discarded (states differing only in
/// generator signs are related by local Pauli operators). Throws parse_error
/// on an illegal character or a length mismatch with `expected_n`.
PauliVector parse_pauli_string(std::string_view s,
                               std::optional<std::uint32_t> expected_n = std::nullopt);

/// Qubit positions where the operator differs from the identity.
QubitSet support(const PauliVector& p);

/// sum_i (p_i q_{n+i} + p_{n+i} q_i) mod 2; zero iff the operators commute.
int symplectic_product(const PauliVector& p, const PauliVector& q);

struct ValidationReport {
  std::uint32_t n = 0;
  std::size_t rank = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> anticommuting;  // 1-based pairs

  bool ok() const { return rank == n && anticommuting.empty(); }
  std::string to_string() const;
};

/// Stabilizer state as its 2n x n binary generator matrix; the generators
/// are the columns, and the column space is the stabilizer subspace. The
/// type itself does not enforce validity (see validate), so unchecked input
/// can be parsed first and diagnosed afterwards.
class Stabilizer {
public:
  Stabilizer() = default;
  Stabilizer(std::uint32_t n, GF2Matrix gens);
  static Stabilizer from_generators(const std::vector<PauliVector>& gens);

  std::uint32_t qubits() const { return n_; }
  const GF2Matrix& generators() const { return gens_; }
  PauliVector generator(std::uint32_t j) const;  // column j, 0-based

  friend bool operator==(const Stabilizer&, const Stabilizer&) = default;

private:
  std::uint32_t n_ = 0;
  GF2Matrix gens_;
};

/// Confirms generator-matrix rank n and pairwise symplectic orthogonality of
/// the columns; the report lists each anticommuting pair and the achieved
/// rank. Violations are reported, not thrown.
ValidationReport validate(const Stabilizer& s);

inline constexpr std::uint32_t default_enumeration_max_n = 16;

/// All 2^n elements of the stabilizer subspace. Fixed order: coefficient
/// vectors enumerated as integers 0..2^n-1, where bit j-1 of the integer
/// selects generator j; element 0 is the identity.
std::vector<PauliVector> enumerate_elements(const Stabilizer& s,
                                            std::uint32_t max_n = default_enumeration_max_n);

/// The 2|complement| x n matrix stacking, for each qubit j outside omega in
/// ascending order, rows j and n+j of the generator matrix. The corank of
/// this matrix is the log2 of the number of stabilizer elements supported
/// inside omega.
GF2Matrix row_pair_submatrix(const Stabilizer& s, const QubitSet& omega);

/// Generator i acts as X on vertex i and Z on its neighbours. The adjacency
/// matrix must be symmetric with zero diagonal.
Stabilizer graph_state(const GF2Matrix& adjacency);

/// Seeded corpus generator: a random graph state twirled by a random local
/// Clifford operation and a random generator-basis change. Deterministic per
/// seed; always valid.
Stabilizer random_stabilizer(std::uint32_t n, std::uint64_t seed);

/// Text format: one generator per line as a Pauli string of length n, with
/// exactly n generator lines; lines starting with '#' are comments; optional
/// sign prefixes are accepted and discarded.
Stabilizer parse_stabilizer_text(std::string_view text);
std::string format_stabilizer_text(const Stabilizer& s);

}  // namespace lcinv
