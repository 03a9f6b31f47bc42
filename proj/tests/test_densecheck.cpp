#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lcinv/densecheck.hpp"
#include "lcinv/lcequiv.hpp"
#include "lcinv/reference.hpp"
#include "test_util.hpp"

using namespace lcinv;

namespace {

constexpr double kTol = 1e-10;

// Dense matrix of a phase-free Pauli word, signs +1.
DenseOperator dense_pauli(const PauliVector& p) {
  const std::uint32_t n = p.qubits();
  DenseOperator out(n);
  std::uint64_t zmask = 0, xmask = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (p.z_bit(i)) zmask |= std::uint64_t{1} << i;
    if (p.x_bit(i)) xmask |= std::uint64_t{1} << i;
  }
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> ypow = kIPow[std::popcount(zmask & xmask) & 3];
  for (std::uint64_t b = 0; b < out.dim(); ++b) {
    std::complex<double> ph = ypow;
    if (std::popcount(b & zmask) & 1) ph = -ph;
    out.at(b ^ xmask, b) = ph;
  }
  return out;
}

OmegaTuple omega2(std::uint32_t n, std::uint64_t w1, std::uint64_t w2, std::uint64_t w12) {
  return OmegaTuple(n, 2, {testutil::qs(n, w1), testutil::qs(n, w2)}, {testutil::qs(n, w12)});
}

}  // namespace

TEST_CASE("projector: single-qubit pinned matrices") {
  const DenseOperator z = projector(parse_stabilizer_text("Z\n"));
  CHECK(std::abs(z.at(0, 0) - 1.0) < kTol);
  CHECK(std::abs(z.at(0, 1)) < kTol);
  CHECK(std::abs(z.at(1, 0)) < kTol);
  CHECK(std::abs(z.at(1, 1)) < kTol);

  const DenseOperator x = projector(parse_stabilizer_text("X\n"));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(x.at(r, c) - 0.5) < kTol);
}

TEST_CASE("projector: hermitian, idempotent, trace one, rank one") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::uint32_t n = 1 + seed % 4;
    const Stabilizer s = random_stabilizer(n, 200 + seed);
    const DenseOperator p = projector(s);

    CHECK(std::abs(p.trace() - 1.0) < kTol);
    CHECK(p.multiply(p).max_abs_diff(p) < kTol);
    for (std::size_t r = 0; r < p.dim(); ++r)
      for (std::size_t c = 0; c < p.dim(); ++c)
        CHECK(std::abs(p.at(r, c) - std::conj(p.at(c, r))) < kTol);

    // Rank one: Tr(P) = 1 and P idempotent pin every eigenvalue to {0,1}
    // with sum 1; double-check via Tr(P^2) = 1.
    CHECK(std::abs(p.multiply(p).trace() - 1.0) < kTol);
  }
}

TEST_CASE("every group element fixes the projector") {
  // Group elements are products of the +1-signed generators; the product
  // sign matters, so build them by matrix multiplication.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const std::uint32_t n = 2 + seed % 3;
    const Stabilizer s = random_stabilizer(n, 300 + seed);
    const DenseOperator p = projector(s);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      DenseOperator g = DenseOperator::identity(n);
      for (std::uint32_t j = 0; j < n; ++j)
        if ((c >> j) & 1) g = g.multiply(dense_pauli(s.generator(j)));
      CHECK(g.multiply(p).max_abs_diff(p) < kTol);
    }
  }
}

TEST_CASE("projector commutes with its generator matrices") {
  const Stabilizer ghz = testutil::make_ghz3();
  const DenseOperator p = projector(ghz);
  for (std::uint32_t j = 0; j < 3; ++j) {
    const DenseOperator g = dense_pauli(ghz.generator(j));
    CHECK(g.multiply(p).max_abs_diff(p.multiply(g)) < kTol);
  }
}

TEST_CASE("partial_trace: pinned cases") {
  const Stabilizer bell = parse_stabilizer_text("XX\nZZ\n");
  const DenseOperator psi = projector(bell);

  CHECK(partial_trace(psi, QubitSet(2)) == psi);

  // Tracing one half of a maximally entangled pair leaves I/2, embedded with
  // the identity on the traced qubit: (1/2) I_4.
  const DenseOperator reduced = partial_trace(psi, QubitSet::from_indices(2, {2}));
  DenseOperator expected = DenseOperator::identity(2);
  for (std::size_t i = 0; i < 4; ++i) expected.at(i, i) = 0.5;
  CHECK(reduced.max_abs_diff(expected) < kTol);

  // The embedding tensors the identity on traced qubits, so the trace picks
  // up 2^|traced|.
  const DenseOperator all = partial_trace(psi, QubitSet::full(2));
  CHECK(std::abs(all.trace() - 4.0 * psi.trace()) < kTol);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(all.at(i, i) - 1.0) < kTol);
}

TEST_CASE("lu_trace_invariant: full sets give Tr(P^3) = 1") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::uint32_t n = 2 + seed % 2;
    const Stabilizer s = random_stabilizer(n, 400 + seed);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    CHECK(std::abs(lu_trace_invariant(s, omega2(n, full, full, full)) - 1.0) < 1e-9);
  }
}

TEST_CASE("lu_trace_invariant is proportional to the subset-support count") {
  const std::vector<OmegaTuple> omegas = {omega2(3, 0b011, 0b110, 0b101),
                                          omega2(3, 0b111, 0b011, 0b111),
                                          omega2(3, 0b001, 0b010, 0b011)};
  for (const OmegaTuple& omega : omegas) {
    double ratio = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Stabilizer s = random_stabilizer(3, 600 + seed);
      const double tr = lu_trace_invariant(s, omega);
      const double count = static_cast<double>(std::uint64_t{1} << v_dim_invariant(s, omega));
      const double r = tr / count;
      if (seed == 0)
        ratio = r;
      else
        CHECK(std::abs(r - ratio) < 1e-9);
    }
  }
}

TEST_CASE("lu_trace_invariant is invariant under local Clifford maps") {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::uint32_t n = 2 + seed % 3;
    const Stabilizer s = random_stabilizer(n, 700 + seed);
    const Stabilizer mapped = apply(random_local_clifford(n, 750 + seed), s);
    const std::uint64_t setmask = (std::uint64_t{1} << n) - 1;
    const OmegaTuple omega = omega2(n, rng() & setmask, rng() & setmask, rng() & setmask);
    CHECK(std::abs(lu_trace_invariant(s, omega) - lu_trace_invariant(mapped, omega)) < 1e-9);
  }
}

TEST_CASE("lu_trace_invariant: argument errors") {
  const Stabilizer ghz = testutil::make_ghz3();
  std::mt19937_64 rng(43);
  CHECK_THROWS_AS(lu_trace_invariant(ghz, testutil::random_omega(3, 1, rng)),
                  std::invalid_argument);
  CHECK_THROWS_AS(projector(random_stabilizer(11, 1)), budget_error);
}

TEST_CASE("parallel product equals the serial triple loop") {
  std::mt19937_64 rng(47);
  for (std::uint32_t n : {3u, 6u}) {
    DenseOperator a(n), b(n);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) {
        a.at(r, c) = {static_cast<double>(rng() % 7) - 3, static_cast<double>(rng() % 5) - 2};
        b.at(r, c) = {static_cast<double>(rng() % 7) - 3, static_cast<double>(rng() % 5) - 2};
      }
    CHECK(a.multiply(b).max_abs_diff(ref::multiply_serial(a, b)) == 0.0);
  }
}
