#include "lcinv/reference.hpp"

#include <stdexcept>
#include <vector>

namespace lcinv::ref {

std::size_t rank(const GF2Matrix& m) {
  std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.get(r, c) ? 1 : 0;

  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t p = rk;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[rk], a[p]);
    for (std::size_t i = rk + 1; i < m.rows(); ++i)
      if (a[i][c])
        for (std::size_t j = c; j < m.cols(); ++j) a[i][j] ^= a[rk][j];
    ++rk;
  }
  return rk;
}

std::uint64_t t_invariant_full_enum(const Stabilizer& s, const OmegaTuple& omega,
                                    std::uint32_t enum_budget) {
  if (s.qubits() != omega.n())
    throw std::invalid_argument("t_invariant_full_enum: stabilizer and omega disagree on n");
  const std::uint32_t n = s.qubits();
  const std::uint32_t r = omega.r();
  const std::uint64_t rn = static_cast<std::uint64_t>(r) * n;
  if (rn > enum_budget)
    throw budget_error("t_invariant_full_enum: r*n = " + std::to_string(rn) + " exceeds " +
                           std::to_string(enum_budget),
                       rn, enum_budget);

  const std::vector<PauliVector> elems = enumerate_elements(s);
  std::vector<std::size_t> idx(r, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::uint32_t k = 0; k < r && ok; ++k)
      ok = support(elems[idx[k]]) == omega.single(k);
    for (std::uint32_t k = 0; k < r && ok; ++k)
      for (std::uint32_t l = k + 1; l < r && ok; ++l)
        ok = support(elems[idx[k]] + elems[idx[l]]) == omega.pair(k, l);
    if (ok) ++count;

    std::uint32_t pos = r;
    while (pos-- > 0) {
      if (++idx[pos] < elems.size()) break;
      idx[pos] = 0;
      if (pos == 0) return count;
    }
  }
}

std::uint64_t count_elements_with_support_within(const Stabilizer& s, const QubitSet& omega) {
  std::uint64_t count = 0;
  for (const PauliVector& v : enumerate_elements(s))
    if (support(v).subset_of(omega)) ++count;
  return count;
}

std::optional<LocalCliffordOp> brute_force_check(const Stabilizer& s1, const Stabilizer& s2,
                                                 std::uint32_t max_n) {
  if (s1.qubits() != s2.qubits())
    throw std::invalid_argument("ref::brute_force_check: qubit-count mismatch");
  const std::uint32_t n = s1.qubits();
  if (n > max_n)
    throw budget_error("ref::brute_force_check: n = " + std::to_string(n) + " exceeds " +
                           std::to_string(max_n),
                       n, max_n);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= 6;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    LocalCliffordOp q{n, {}};
    std::uint64_t t = idx;
    std::vector<std::uint8_t> digits(n);
    for (std::uint32_t i = n; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(t % 6);
      t /= 6;
    }
    for (std::uint32_t i = 0; i < n; ++i) q.factors.push_back(gl2_elements()[digits[i]]);
    if (column_space_equal(apply(q, s1).generators(), s2.generators())) return q;
  }
  return std::nullopt;
}

Fingerprint fingerprint_serial(const Stabilizer& s, std::uint32_t r, std::uint64_t max_entries) {
  if (r < 1) throw std::invalid_argument("fingerprint_serial: r must be >= 1");
  const std::uint32_t n = s.qubits();
  const std::uint64_t ncoords =
      static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(r) * (r - 1) / 2;
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * ncoords;
  if (bits >= 63 || (std::uint64_t{1} << bits) > max_entries)
    throw budget_error("fingerprint_serial: entry count exceeds limit", bits, max_entries);
  const std::uint64_t entries = std::uint64_t{1} << bits;
  const Fingerprint decoder(n, r, {});
  std::vector<std::uint32_t> values(entries);
  for (std::uint64_t e = 0; e < entries; ++e) {
    const OmegaTuple omega = OmegaTuple::from_masks(n, r, decoder.key_masks(e));
    values[e] = static_cast<std::uint32_t>(v_dim_invariant(s, omega));
  }
  return Fingerprint(n, r, std::move(values));
}

DenseOperator multiply_serial(const DenseOperator& a, const DenseOperator& b) {
  if (a.qubits() != b.qubits())
    throw std::invalid_argument("multiply_serial: dimension mismatch");
  DenseOperator out(a.qubits());
  const std::size_t d = a.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < d; ++k) acc += a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

}  // namespace lcinv::ref
