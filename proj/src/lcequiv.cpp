#include "lcinv/lcequiv.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "lcinv/packed.hpp"

namespace lcinv {

const std::array<GL2, 6>& gl2_elements() {
  static const std::array<GL2, 6> kElements = {{{1, 0, 0, 1},
                                                {0, 1, 1, 0},
                                                {0, 1, 1, 1},
                                                {1, 0, 1, 1},
                                                {1, 1, 0, 1},
                                                {1, 1, 1, 0}}};
  return kElements;
}

LocalCliffordOp LocalCliffordOp::identity(std::uint32_t n) {
  return {n, std::vector<GL2>(n, gl2_elements()[0])};
}

LocalCliffordOp LocalCliffordOp::compose(const LocalCliffordOp& inner) const {
  if (n != inner.n) throw std::invalid_argument("LocalCliffordOp::compose: qubit-count mismatch");
  LocalCliffordOp out{n, {}};
  out.factors.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) out.factors.push_back(factors[i].compose(inner.factors[i]));
  return out;
}

std::string LocalCliffordOp::to_string() const {
  std::string s;
  for (std::uint32_t i = 0; i < n; ++i) {
    const GL2& f = factors[i];
    s += std::to_string(i + 1) + ": " + std::to_string(f.a) + " " + std::to_string(f.b) + " " +
         std::to_string(f.c) + " " + std::to_string(f.d) + "\n";
  }
  return s;
}

Stabilizer apply(const LocalCliffordOp& q, const Stabilizer& s) {
  if (q.n != s.qubits()) throw std::invalid_argument("apply: qubit-count mismatch");
  const std::uint32_t n = s.qubits();
  GF2Matrix g = s.generators();
  for (std::uint32_t i = 0; i < n; ++i) {
    const GL2& f = q.factors[i];
    const GF2Vector z = g.row(i);
    const GF2Vector x = g.row(static_cast<std::size_t>(n) + i);
    GF2Vector nz(n), nx(n);
    if (f.a) nz ^= z;
    if (f.b) nz ^= x;
    if (f.c) nx ^= z;
    if (f.d) nx ^= x;
    g.row_mut(i) = std::move(nz);
    g.row_mut(static_cast<std::size_t>(n) + i) = std::move(nx);
  }
  return Stabilizer(n, std::move(g));
}

LocalCliffordOp random_local_clifford(std::uint32_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LocalCliffordOp q{n, {}};
  q.factors.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) q.factors.push_back(gl2_elements()[rng() % 6]);
  return q;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t v = 1;
  while (exp--) v *= base;
  return v;
}

// Per-factor lookup: input (z | x<<1) -> output (z' | x'<<1).
std::array<std::array<std::uint8_t, 4>, 6> factor_luts() {
  std::array<std::array<std::uint8_t, 4>, 6> luts{};
  for (std::size_t f = 0; f < 6; ++f)
    for (std::uint8_t zx = 0; zx < 4; ++zx) {
      const auto [z, x] = gl2_elements()[f].apply(zx & 1, (zx >> 1) & 1);
      luts[f][zx] = static_cast<std::uint8_t>((z ? 1 : 0) | (x ? 2 : 0));
    }
  return luts;
}

// Decodes the odometer index into per-qubit factor digits: qubit 1 is the
// most significant digit, the last qubit cycles fastest.
void decode_digits(std::uint64_t idx, std::uint32_t n, std::uint8_t* digits) {
  for (std::uint32_t i = n; i-- > 0;) {
    digits[i] = static_cast<std::uint8_t>(idx % 6);
    idx /= 6;
  }
}

bool candidate_maps_into(std::uint64_t idx, std::uint32_t n,
                         const std::vector<std::uint64_t>& cols,
                         const packed::PivotBasis& target,
                         const std::array<std::array<std::uint8_t, 4>, 6>& luts) {
  std::array<std::uint8_t, 32> digits;
  decode_digits(idx, n, digits.data());
  for (const std::uint64_t v : cols) {
    std::uint64_t w = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint8_t zx = static_cast<std::uint8_t>(((v >> i) & 1) | (((v >> (n + i)) & 1) << 1));
      const std::uint8_t m = luts[digits[i]][zx];
      w |= static_cast<std::uint64_t>(m & 1) << i;
      w |= static_cast<std::uint64_t>((m >> 1) & 1) << (n + i);
    }
    if (!target.contains(w)) return false;
  }
  return true;
}

LocalCliffordOp decode_op(std::uint64_t idx, std::uint32_t n) {
  std::array<std::uint8_t, 32> digits;
  decode_digits(idx, n, digits.data());
  LocalCliffordOp q{n, {}};
  q.factors.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) q.factors.push_back(gl2_elements()[digits[i]]);
  return q;
}

}  // namespace

std::optional<LocalCliffordOp> brute_force_check(const Stabilizer& s1, const Stabilizer& s2,
                                                 std::uint32_t max_n) {
  if (s1.qubits() != s2.qubits())
    throw std::invalid_argument("brute_force_check: qubit-count mismatch");
  const std::uint32_t n = s1.qubits();
  if (n > max_n)
    throw budget_error("brute_force_check: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(max_n),
                       n, max_n);
  if (n > 31)
    throw budget_error("brute_force_check: packed search supports n <= 31", n, 31);

  const std::vector<std::uint64_t> cols1 = packed::columns(s1.generators(), n);
  packed::PivotBasis basis2;
  for (const std::uint64_t v : packed::columns(s2.generators(), n)) basis2.insert(v);
  const auto luts = factor_luts();

  // A candidate maps the column space of s1 into that of s2 iff every
  // transformed column reduces to zero against s2's basis; the spaces have
  // equal dimension, so inclusion is equality.
  const std::uint64_t total = pow_u64(6, n);
  std::atomic<std::uint64_t> best{~std::uint64_t{0}};
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic) if (total > 65536)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(nchunks); ++ci) {
    const std::uint64_t lo = static_cast<std::uint64_t>(ci) * kChunk;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t hi = std::min(lo + kChunk, total);
    for (std::uint64_t idx = lo; idx < hi && idx < best.load(std::memory_order_relaxed); ++idx) {
      if (!candidate_maps_into(idx, n, cols1, basis2, luts)) continue;
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
      break;
    }
  }

  const std::uint64_t found = best.load();
  if (found == ~std::uint64_t{0}) return std::nullopt;
  LocalCliffordOp q = decode_op(found, n);
  if (!column_space_equal(apply(q, s1).generators(), s2.generators()))
    throw std::logic_error("brute_force_check: witness failed re-verification");
  return q;
}

std::vector<LocalCliffordOp> brute_force_check_all(const Stabilizer& s1, const Stabilizer& s2,
                                                   std::uint32_t max_n) {
  if (s1.qubits() != s2.qubits())
    throw std::invalid_argument("brute_force_check_all: qubit-count mismatch");
  const std::uint32_t n = s1.qubits();
  if (n > max_n)
    throw budget_error("brute_force_check_all: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(max_n),
                       n, max_n);
  if (n > 31)
    throw budget_error("brute_force_check_all: packed search supports n <= 31", n, 31);

  const std::vector<std::uint64_t> cols1 = packed::columns(s1.generators(), n);
  packed::PivotBasis basis2;
  for (const std::uint64_t v : packed::columns(s2.generators(), n)) basis2.insert(v);
  const auto luts = factor_luts();

  const std::uint64_t total = pow_u64(6, n);
  std::vector<std::uint64_t> hits;
#pragma omp parallel if (total > 65536)
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx)
      if (candidate_maps_into(static_cast<std::uint64_t>(idx), n, cols1, basis2, luts))
        local.push_back(static_cast<std::uint64_t>(idx));
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  std::sort(hits.begin(), hits.end());

  std::vector<LocalCliffordOp> out;
  out.reserve(hits.size());
  for (const std::uint64_t idx : hits) out.push_back(decode_op(idx, n));
  return out;
}

std::optional<GL2> build_factor_from_pairs(
    const std::vector<std::pair<std::pair<bool, bool>, std::pair<bool, bool>>>& constraints) {
  for (const GL2& f : gl2_elements()) {
    bool ok = true;
    for (const auto& [src, dst] : constraints) {
      if (f.apply(src.first, src.second) != dst) {
        ok = false;
        break;
      }
    }
    if (ok) return f;
  }
  return std::nullopt;
}

std::optional<LocalCliffordOp> constructive_check(const Stabilizer& s1, const Stabilizer& s2,
                                                  std::uint32_t max_n) {
  if (s1.qubits() != s2.qubits())
    throw std::invalid_argument("constructive_check: qubit-count mismatch");
  const std::uint32_t n = s1.qubits();
  if (n > max_n)
    throw budget_error("constructive_check: n = " + std::to_string(n) + " exceeds limit " +
                           std::to_string(max_n),
                       n, max_n);

  // Target pattern: supports of s1's generator basis and its pairwise sums.
  const std::vector<std::uint64_t> cols1 = packed::columns(s1.generators(), n);
  std::vector<std::uint64_t> single_mask(n);
  std::vector<std::uint64_t> pair_mask(n < 2 ? 0 : OmegaTuple::pair_index(n - 2, n - 1, n) + 1);
  for (std::uint32_t k = 0; k < n; ++k) single_mask[k] = packed::support_mask(cols1[k], n);
  for (std::uint32_t k = 0; k < n; ++k)
    for (std::uint32_t l = k + 1; l < n; ++l)
      pair_mask[OmegaTuple::pair_index(k, l, n)] = packed::support_mask(cols1[k] ^ cols1[l], n);

  // Candidates per level, pre-bucketed by exact support.
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
  for (const std::uint64_t v : packed::elements(s2)) buckets[packed::support_mask(v, n)].push_back(v);
  static const std::vector<std::uint64_t> kEmpty;
  std::vector<const std::vector<std::uint64_t>*> level(n, &kEmpty);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto it = buckets.find(single_mask[k]);
    if (it != buckets.end()) level[k] = &it->second;
  }

  std::vector<std::uint64_t> chosen(n);
  bool found = false;
  auto dfs = [&](auto&& self, std::uint32_t k) -> void {
    if (found) return;
    if (k == n) {
      found = true;
      return;
    }
    for (const std::uint64_t w : *level[k]) {
      bool ok = true;
      for (std::uint32_t j = 0; j < k; ++j) {
        if (packed::support_mask(chosen[j] ^ w, n) != pair_mask[OmegaTuple::pair_index(j, k, n)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[k] = w;
      self(self, k + 1);
      if (found) return;
    }
  };
  dfs(dfs, 0);
  if (!found) return std::nullopt;

  LocalCliffordOp q{n, {}};
  q.factors.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::pair<bool, bool>, std::pair<bool, bool>>> constraints;
    constraints.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      const std::pair<bool, bool> src{(cols1[k] >> i) & 1, (cols1[k] >> (n + i)) & 1};
      const std::pair<bool, bool> dst{(chosen[k] >> i) & 1, (chosen[k] >> (n + i)) & 1};
      constraints.emplace_back(src, dst);
    }
    const std::optional<GL2> f = build_factor_from_pairs(constraints);
    if (!f) throw std::logic_error("constructive_check: matched pattern has no factor");
    q.factors.push_back(*f);
  }
  if (!column_space_equal(apply(q, s1).generators(), s2.generators()))
    throw std::logic_error("constructive_check: assembled operator failed re-verification");
  return q;
}

FingerprintVerdict fingerprint_check(const Stabilizer& s1, const Stabilizer& s2, std::uint32_t r,
                                     std::uint64_t max_entries) {
  if (s1.qubits() != s2.qubits())
    throw std::invalid_argument("fingerprint_check: qubit-count mismatch");
  const Fingerprint f1 = fingerprint(s1, r, max_entries);
  const Fingerprint f2 = fingerprint(s2, r, max_entries);
  FingerprintVerdict verdict;
  verdict.r = r;
  for (std::size_t i = 0; i < f1.size(); ++i) {
    if (f1.value(i) != f2.value(i)) {
      verdict.equal = false;
      verdict.witness = f1.key(i);
      return verdict;
    }
  }
  verdict.equal = true;
  return verdict;
}

}  // namespace lcinv
