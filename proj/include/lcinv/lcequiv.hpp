#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcinv/invariants.hpp"

namespace lcinv {

/// Invertible 2x2 bit matrix [[a,b],[c,d]]; GL(2,F2) has exactly six.
struct GL2 {
  std::uint8_t a = 1, b = 0, c = 0, d = 1;

  std::pair<bool, bool> apply(bool z, bool x) const {
    return {static_cast<bool>((a & z) ^ (b & x)), static_cast<bool>((c & z) ^ (d & x))};
  }
  /// Matrix product this * o.
  GL2 compose(const GL2& o) const {
    return {static_cast<std::uint8_t>((a & o.a) ^ (b & o.c)),
            static_cast<std::uint8_t>((a & o.b) ^ (b & o.d)),
            static_cast<std::uint8_t>((c & o.a) ^ (d & o.c)),
            static_cast<std::uint8_t>((c & o.b) ^ (d & o.d))};
  }

  friend bool operator==(const GL2&, const GL2&) = default;
};

/// The six invertible 2x2 bit matrices in canonical order: identity first,
/// then lexicographic by (a,b,c,d).
const std::array<GL2, 6>& gl2_elements();

/// Per-qubit invertible bit matrices: the binary image of a local Clifford
/// operation, acting on each qubit's (z,x) bit pair.
struct LocalCliffordOp {
  std::uint32_t n = 0;
  std::vector<GL2> factors;

  static LocalCliffordOp identity(std::uint32_t n);
  /// this after inner (factorwise matrix product).
  LocalCliffordOp compose(const LocalCliffordOp& inner) const;

  /// One line per qubit: "i: a b c d".
  std::string to_string() const;

  friend bool operator==(const LocalCliffordOp&, const LocalCliffordOp&) = default;
};

/// Transforms every generator column by mapping each qubit's (z,x) bit pair
/// through its factor. Preserves validity.
Stabilizer apply(const LocalCliffordOp& q, const Stabilizer& s);

/// Seeded corpus helper: uniformly random factors. Deterministic per seed.
LocalCliffordOp random_local_clifford(std::uint32_t n, std::uint64_t seed);

inline constexpr std::uint32_t default_brute_force_max_n = 8;
inline constexpr std::uint32_t default_constructive_max_n = 6;

/// Exhaustive search over all 6^n local Clifford candidates, in odometer
/// order over gl2_elements per qubit (qubit 1 most significant, last qubit
/// cycling fastest). Returns the first candidate mapping the column space of
/// s1 onto that of s2, or nullopt. The scan is partitioned across OpenMP
/// workers; the reducer keeps the canonically first witness, so the result
/// does not depend on the thread count.
std::optional<LocalCliffordOp> brute_force_check(const Stabilizer& s1, const Stabilizer& s2,
                                                 std::uint32_t max_n = default_brute_force_max_n);

/// Exhaustive-witness variant: every candidate mapping the column space of
/// s1 onto that of s2, in canonical odometer order. Same budget as
/// brute_force_check.
std::vector<LocalCliffordOp> brute_force_check_all(
    const Stabilizer& s1, const Stabilizer& s2,
    std::uint32_t max_n = default_brute_force_max_n);

/// First canonical GL2 element mapping every source (z,x) pair to its target
/// pair, or nullopt if none exists (e.g. a nonzero pair mapped to zero).
std::optional<GL2> build_factor_from_pairs(
    const std::vector<std::pair<std::pair<bool, bool>, std::pair<bool, bool>>>& constraints);

/// Decides equivalence by matching the support pattern of s1's generator
/// basis inside s2: a depth-first search over s2 elements (pre-bucketed by
/// support) looks for a basis image with the same single and pairwise-sum
/// supports; on success the per-qubit factors are assembled with
/// build_factor_from_pairs and the result is re-verified before returning.
/// Returns nullopt iff no such tuple exists.
std::optional<LocalCliffordOp> constructive_check(
    const Stabilizer& s1, const Stabilizer& s2,
    std::uint32_t max_n = default_constructive_max_n);

struct FingerprintVerdict {
  bool equal = false;
  std::uint32_t r = 0;
  /// First differing constraint tuple when distinct.
  std::optional<OmegaTuple> witness;
};

/// Compares canonical fingerprints at arity r. Equality at r < n does not
/// prove equivalence; a mismatch is always a proof of inequivalence and
/// comes with the first differing tuple as witness.
FingerprintVerdict fingerprint_check(const Stabilizer& s1, const Stabilizer& s2, std::uint32_t r,
                                     std::uint64_t max_entries = default_fingerprint_budget);

}  // namespace lcinv
