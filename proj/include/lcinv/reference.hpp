#pragma once

#include <cstdint>
#include <optional>

#include "lcinv/densecheck.hpp"
#include "lcinv/lcequiv.hpp"

// Serial, deliberately naive counterparts of the optimized kernels. They
// share no code with the fast paths and exist as test oracles and benchmark
// baselines.
namespace lcinv::ref {

/// Rank by textbook elimination on an unpacked byte matrix.
std::size_t rank(const GF2Matrix& m);

/// Exact-support tuple count by full (2^n)^r enumeration without pruning.
std::uint64_t t_invariant_full_enum(const Stabilizer& s, const OmegaTuple& omega,
                                    std::uint32_t enum_budget = 20);

/// Number of enumerated subspace elements supported inside omega.
std::uint64_t count_elements_with_support_within(const Stabilizer& s, const QubitSet& omega);

/// Plain ascending scan over all 6^n candidates using apply() and
/// column_space_equal() directly.
std::optional<LocalCliffordOp> brute_force_check(const Stabilizer& s1, const Stabilizer& s2,
                                                 std::uint32_t max_n = 6);

/// Sequential sweep through the generic (unpacked) dimension path.
Fingerprint fingerprint_serial(const Stabilizer& s, std::uint32_t r,
                               std::uint64_t max_entries = default_fingerprint_budget);

/// Triple-loop complex matrix product.
DenseOperator multiply_serial(const DenseOperator& a, const DenseOperator& b);

}  // namespace lcinv::ref
