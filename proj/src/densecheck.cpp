#include "lcinv/densecheck.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lcinv {

DenseOperator DenseOperator::identity(std::uint32_t n) {
  DenseOperator m(n);
  for (std::size_t i = 0; i < m.dim_; ++i) m.at(i, i) = 1.0;
  return m;
}

std::complex<double> DenseOperator::trace() const {
  std::complex<double> t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

DenseOperator DenseOperator::multiply(const DenseOperator& o) const {
  if (n_ != o.n_) throw std::invalid_argument("DenseOperator::multiply: dimension mismatch");
  DenseOperator out(n_);
  const std::size_t d = dim_;
#pragma omp parallel for schedule(static) if (d >= 64)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(d); ++r) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::complex<double> a = at(static_cast<std::size_t>(r), k);
      if (a.real() == 0.0 && a.imag() == 0.0) continue;
      for (std::size_t c = 0; c < d; ++c)
        out.at(static_cast<std::size_t>(r), c) += a * o.at(k, c);
    }
  }
  return out;
}

double DenseOperator::max_abs_diff(const DenseOperator& o) const {
  if (n_ != o.n_) throw std::invalid_argument("DenseOperator::max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

DenseOperator projector(const Stabilizer& s, std::uint32_t max_n) {
  const std::uint32_t n = s.qubits();
  if (n > max_n)
    throw budget_error("projector: n = " + std::to_string(n) + " exceeds dense limit " +
                           std::to_string(max_n),
                       n, max_n);
  const std::size_t d = std::size_t{1} << n;
  DenseOperator m = DenseOperator::identity(n);

  for (std::uint32_t j = 0; j < n; ++j) {
    std::uint64_t zmask = 0, xmask = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (s.generators().get(i, j)) zmask |= std::uint64_t{1} << i;
      if (s.generators().get(static_cast<std::size_t>(n) + i, j)) xmask |= std::uint64_t{1} << i;
    }
    // g|b> = phase(b) |b ^ xmask>; phase(b) = i^{#Y} * (-1)^{popcount(b & zmask)}.
    static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> ypow = kIPow[std::popcount(zmask & xmask) & 3];

    DenseOperator next(n);
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t src = r ^ xmask;
      std::complex<double> ph = ypow;
      if (std::popcount(src & zmask) & 1) ph = -ph;
      // next = (m + g*m) / 2, row by row: (g*m)[r][:] = phase(r^x) m[r^x][:].
      for (std::size_t c = 0; c < d; ++c)
        next.at(r, c) = 0.5 * (m.at(r, c) + ph * m.at(src, c));
    }
    m = std::move(next);
  }
  return m;
}

DenseOperator partial_trace(const DenseOperator& m, const QubitSet& traced) {
  const std::uint32_t n = m.qubits();
  if (traced.universe() != n)
    throw std::invalid_argument("partial_trace: universe mismatch");
  const std::uint64_t tmask = traced.mask();
  const std::uint64_t kmask = ~tmask & ((std::uint64_t{1} << n) - 1);

  // Enumerate all sub-assignments of a mask, 0 first.
  auto submasks = [](std::uint64_t mask) {
    std::vector<std::uint64_t> subs;
    std::uint64_t s = 0;
    do {
      subs.push_back(s);
      s = (s - mask) & mask;
    } while (s != 0);
    return subs;
  };
  const std::vector<std::uint64_t> kept = submasks(kmask);
  const std::vector<std::uint64_t> tr = submasks(tmask);

  DenseOperator out(n);
  for (const std::uint64_t a : kept)
    for (const std::uint64_t b : kept) {
      std::complex<double> sum = 0.0;
      for (const std::uint64_t t : tr) sum += m.at(a | t, b | t);
      for (const std::uint64_t t : tr) out.at(a | t, b | t) = sum;
    }
  return out;
}

double lu_trace_invariant(const Stabilizer& s, const OmegaTuple& omega, std::uint32_t max_n) {
  if (omega.r() != 2)
    throw std::invalid_argument("lu_trace_invariant: requires an arity-2 tuple");
  if (omega.n() != s.qubits())
    throw std::invalid_argument("lu_trace_invariant: stabilizer and omega disagree on n");
  const DenseOperator psi = projector(s, max_n);
  const DenseOperator a = partial_trace(psi, omega.single(0).complement());
  const DenseOperator b = partial_trace(psi, omega.single(1).complement());
  const DenseOperator c = partial_trace(psi, omega.pair(0, 1).complement());

  const DenseOperator bc = b.multiply(c);
  std::complex<double> t = 0.0;
  const std::size_t d = psi.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) t += a.at(r, k) * bc.at(k, r);
  return t.real();
}

}  // namespace lcinv
