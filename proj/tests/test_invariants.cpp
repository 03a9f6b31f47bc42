#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "lcinv/invariants.hpp"
#include "lcinv/lcequiv.hpp"
#include "lcinv/reference.hpp"
#include "test_util.hpp"

using namespace lcinv;

namespace {

OmegaTuple omega1(std::uint32_t n, std::uint64_t w1) {
  return OmegaTuple(n, 1, {testutil::qs(n, w1)}, {});
}

OmegaTuple omega2(std::uint32_t n, std::uint64_t w1, std::uint64_t w2, std::uint64_t w12) {
  return OmegaTuple(n, 2, {testutil::qs(n, w1), testutil::qs(n, w2)}, {testutil::qs(n, w12)});
}

Stabilizer permuted(const Stabilizer& s, const std::vector<std::uint32_t>& pi) {
  const std::uint32_t n = s.qubits();
  GF2Matrix g(2 * static_cast<std::size_t>(n), n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      g.set(pi[i], j, s.generators().get(i, j));
      g.set(static_cast<std::size_t>(n) + pi[i], j,
            s.generators().get(static_cast<std::size_t>(n) + i, j));
    }
  return Stabilizer(n, std::move(g));
}

QubitSet permuted(const QubitSet& q, const std::vector<std::uint32_t>& pi) {
  QubitSet out(q.universe());
  for (std::uint32_t i = 0; i < q.universe(); ++i)
    if (q.contains(i)) out.add(pi[i]);
  return out;
}

}  // namespace

TEST_CASE("t_invariant: pinned cases") {
  const Stabilizer ghz = testutil::make_ghz3();
  // Of the 8 elements, exactly XXX, YYX, XYY, YXY have full support.
  CHECK(t_invariant(ghz, omega1(3, 0b111)) == 4);
  CHECK(t_invariant(ghz, omega1(3, 0)) == 1);
  // Only the pair (ZZI, IZZ) realizes supports ({1,2},{2,3}) with sum {1,3}.
  CHECK(t_invariant(ghz, omega2(3, 0b011, 0b110, 0b101)) == 1);
}

TEST_CASE("t_invariant: pruned search equals full enumeration") {
  std::mt19937_64 rng(21);
  for (std::uint32_t n = 2; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Stabilizer s = random_stabilizer(n, 60 + seed);
      for (std::uint32_t r = 1; r <= 3; ++r)
        for (int trial = 0; trial < 8; ++trial) {
          const OmegaTuple omega = testutil::random_omega(n, r, rng);
          CHECK(t_invariant(s, omega) == ref::t_invariant_full_enum(s, omega));
        }
    }
}

TEST_CASE("v_dim_invariant: pinned cases") {
  const Stabilizer ghz = testutil::make_ghz3();
  CHECK(v_dim_invariant(ghz, omega2(3, 0b111, 0b111, 0b111)) == 6);
  CHECK(v_dim_invariant(ghz, omega2(3, 0b111, 0b111, 0)) == 3);
  CHECK(v_dim_invariant(ghz, omega1(3, 0b011)) == 1);
  const Stabilizer s5 = random_stabilizer(5, 3);
  CHECK(v_dim_invariant(s5, omega2(5, 0b11111, 0b11111, 0b11111)) == 10);
  CHECK(v_dim_invariant(s5, omega2(5, 0b11111, 0b11111, 0)) == 5);
}

TEST_CASE("v_count_oracle: pinned cases and oracle equality") {
  const Stabilizer ghz = testutil::make_ghz3();
  CHECK(v_count_oracle(ghz, omega1(3, 0b011)) == 2);
  CHECK(v_count_oracle(ghz, omega2(3, 0b111, 0b111, 0)) == 8);
  CHECK(v_count_oracle(ghz, omega1(3, 0b111)) == 8);

  // Exhaustive over every tuple for r <= 2 on states up to n = 4.
  std::vector<Stabilizer> corpus = {ghz};
  for (std::uint32_t n = 2; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 2; ++seed) corpus.push_back(random_stabilizer(n, 7 * n + seed));
  for (const Stabilizer& s : corpus) {
    const std::uint64_t total = std::uint64_t{1} << s.qubits();
    for (std::uint64_t w1 = 0; w1 < total; ++w1)
      CHECK(v_count_oracle(s, omega1(s.qubits(), w1)) ==
            (std::uint64_t{1} << v_dim_invariant(s, omega1(s.qubits(), w1))));
    for (std::uint64_t w1 = 0; w1 < total; ++w1)
      for (std::uint64_t w2 = 0; w2 < total; ++w2)
        for (std::uint64_t w12 = 0; w12 < total; ++w12) {
          const OmegaTuple omega = omega2(s.qubits(), w1, w2, w12);
          CHECK(v_count_oracle(s, omega) == (std::uint64_t{1} << v_dim_invariant(s, omega)));
        }
  }

  // Spot checks at r = 3.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const OmegaTuple omega = testutil::random_omega(3, 3, rng);
    CHECK(v_count_oracle(ghz, omega) == (std::uint64_t{1} << v_dim_invariant(ghz, omega)));
  }
}

TEST_CASE("moebius_t_from_v: pinned cases") {
  const Stabilizer ghz = testutil::make_ghz3();

  std::map<OmegaTuple, std::uint64_t> counts;
  counts.emplace(omega1(3, 0b000), 1);
  counts.emplace(omega1(3, 0b001), 1);
  counts.emplace(omega1(3, 0b010), 1);
  counts.emplace(omega1(3, 0b011), 2);
  CHECK(moebius_t_from_v(counts, omega1(3, 0b011)) == 1);  // only ZZI

  std::map<OmegaTuple, std::uint64_t> empty_only;
  empty_only.emplace(omega1(3, 0), 1);
  CHECK(moebius_t_from_v(empty_only, omega1(3, 0)) == 1);

  std::map<OmegaTuple, std::uint64_t> full;
  for (std::uint64_t w = 0; w < 8; ++w)
    full.emplace(omega1(3, w), v_count_oracle(ghz, omega1(3, w)));
  CHECK(moebius_t_from_v(full, omega1(3, 0b111)) == 4);
  CHECK(moebius_t_from_v(full, omega1(3, 0b111)) == t_invariant(ghz, omega1(3, 0b111)));

  std::map<OmegaTuple, std::uint64_t> incomplete = full;
  incomplete.erase(omega1(3, 0b010));
  CHECK_THROWS_AS(moebius_t_from_v(incomplete, omega1(3, 0b111)), std::invalid_argument);
}

TEST_CASE("moebius inversion matches direct counting exhaustively") {
  for (std::uint32_t n = 2; n <= 3; ++n) {
    const Stabilizer s = random_stabilizer(n, 31 + n);
    const std::uint64_t total = std::uint64_t{1} << n;

    std::map<OmegaTuple, std::uint64_t> counts1;
    for (std::uint64_t w = 0; w < total; ++w)
      counts1.emplace(omega1(n, w), v_count_oracle(s, omega1(n, w)));
    for (std::uint64_t w = 0; w < total; ++w)
      CHECK(moebius_t_from_v(counts1, omega1(n, w)) == t_invariant(s, omega1(n, w)));

    std::map<OmegaTuple, std::uint64_t> counts2;
    for (std::uint64_t w1 = 0; w1 < total; ++w1)
      for (std::uint64_t w2 = 0; w2 < total; ++w2)
        for (std::uint64_t w12 = 0; w12 < total; ++w12) {
          const OmegaTuple omega = omega2(n, w1, w2, w12);
          counts2.emplace(omega, std::uint64_t{1} << v_dim_invariant(s, omega));
        }
    for (std::uint64_t w1 = 0; w1 < total; ++w1)
      for (std::uint64_t w2 = 0; w2 < total; ++w2)
        for (std::uint64_t w12 = 0; w12 < total; ++w12) {
          const OmegaTuple omega = omega2(n, w1, w2, w12);
          CHECK(moebius_t_from_v(counts2, omega) == t_invariant(s, omega));
        }
  }
}

TEST_CASE("tuple counts partition the full product space") {
  for (std::uint32_t n = 2; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      const Stabilizer s = random_stabilizer(n, 77 + seed);
      const std::uint64_t total = std::uint64_t{1} << n;

      std::uint64_t sum1 = 0;
      for (std::uint64_t w = 0; w < total; ++w) sum1 += t_invariant(s, omega1(n, w));
      CHECK(sum1 == (std::uint64_t{1} << n));

      std::uint64_t sum2 = 0;
      for (std::uint64_t w1 = 0; w1 < total; ++w1)
        for (std::uint64_t w2 = 0; w2 < total; ++w2)
          for (std::uint64_t w12 = 0; w12 < total; ++w12)
            sum2 += t_invariant(s, omega2(n, w1, w2, w12));
      CHECK(sum2 == (std::uint64_t{1} << (2 * n)));
    }
}

TEST_CASE("both invariants are invariant under local Clifford maps") {
  std::mt19937_64 rng(29);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::uint32_t n = 2 + seed % 4;
    const Stabilizer s = random_stabilizer(n, 500 + seed);
    const Stabilizer mapped = apply(random_local_clifford(n, 900 + seed), s);
    for (int trial = 0; trial < 10; ++trial) {
      const std::uint32_t r = 1 + rng() % 3;
      const OmegaTuple omega = testutil::random_omega(n, r, rng);
      CHECK(v_dim_invariant(s, omega) == v_dim_invariant(mapped, omega));
      CHECK(t_invariant(s, omega) == t_invariant(mapped, omega));
    }
  }
}

TEST_CASE("v_dim is monotone under coordinatewise set growth") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 2 + rng() % 3;
    const std::uint32_t r = 1 + rng() % 3;
    const Stabilizer s = random_stabilizer(n, 800 + trial);
    const OmegaTuple small = testutil::random_omega(n, r, rng);
    OmegaTuple big = small;
    for (std::size_t c = 0; c < small.coords(); ++c) {
      const std::uint64_t grown =
          small.coord(c).mask() | (rng() & ((std::uint64_t{1} << n) - 1));
      big = big.with_coord(c, testutil::qs(n, grown));
    }
    CHECK(v_dim_invariant(s, small) <= v_dim_invariant(s, big));
  }
}

TEST_CASE("qubit permutations act covariantly") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const std::uint32_t n = 3 + trial % 2;
    const Stabilizer s = random_stabilizer(n, 1200 + trial);
    std::vector<std::uint32_t> pi(n);
    for (std::uint32_t i = 0; i < n; ++i) pi[i] = i;
    std::shuffle(pi.begin(), pi.end(), rng);

    const Stabilizer sp = permuted(s, pi);
    CHECK(validate(sp).ok());
    const std::uint32_t r = 1 + rng() % 2;
    const OmegaTuple omega = testutil::random_omega(n, r, rng);
    std::vector<QubitSet> singles, pairs;
    for (std::uint32_t k = 0; k < r; ++k) singles.push_back(permuted(omega.single(k), pi));
    for (std::uint32_t k = 0; k < r; ++k)
      for (std::uint32_t l = k + 1; l < r; ++l) pairs.push_back(permuted(omega.pair(k, l), pi));
    const OmegaTuple omega_p(n, r, std::move(singles), std::move(pairs));

    CHECK(t_invariant(s, omega) == t_invariant(sp, omega_p));
    CHECK(v_dim_invariant(s, omega) == v_dim_invariant(sp, omega_p));
  }
}

TEST_CASE("fingerprint: canonical order, determinism, pinned n=1") {
  const Stabilizer z1 = parse_stabilizer_text("Z\n");
  const Fingerprint fp = fingerprint(z1, 1);
  REQUIRE(fp.size() == 2);
  CHECK(fp.key_masks(0) == std::vector<std::uint64_t>{0});
  CHECK(fp.value(0) == 0);
  CHECK(fp.key_masks(1) == std::vector<std::uint64_t>{1});
  CHECK(fp.value(1) == 1);
  CHECK(fp.to_text() == "lcfp 1 1 1 2\n0 0\n1 1\n");

  const Stabilizer s = random_stabilizer(3, 5);
  CHECK(fingerprint(s, 2) == fingerprint(s, 2));
}

TEST_CASE("fingerprint matches the serial generic sweep") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Stabilizer s2 = random_stabilizer(2, seed);
    CHECK(fingerprint(s2, 2) == ref::fingerprint_serial(s2, 2));
    const Stabilizer s3 = random_stabilizer(3, seed);
    CHECK(fingerprint(s3, 1) == ref::fingerprint_serial(s3, 1));
  }
}

TEST_CASE("fingerprint: equal for equal states, equal across an LC orbit at r=3") {
  const Stabilizer ghz = testutil::make_ghz3();
  const Stabilizer tri =
      graph_state(testutil::adjacency_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(brute_force_check(ghz, tri).has_value());
  CHECK(fingerprint(ghz, 3) == fingerprint(tri, 3));
}

TEST_CASE("fingerprint budget") {
  const Stabilizer s = random_stabilizer(4, 1);
  CHECK_THROWS_AS(fingerprint(s, 3), budget_error);  // 16^6 entries > default
  try {
    fingerprint(s, 3);
  } catch (const budget_error& e) {
    CHECK(e.requested() == std::uint64_t{1} << 24);
    CHECK(std::string(e.what()).find("16777216") != std::string::npos);
  }
}

TEST_CASE("tuple enumeration budget") {
  const Stabilizer s = random_stabilizer(5, 2);
  std::mt19937_64 rng(39);
  const OmegaTuple omega = testutil::random_omega(5, 6, rng);
  CHECK_THROWS_AS(t_invariant(s, omega), budget_error);
  CHECK_THROWS_AS(v_count_oracle(s, omega), budget_error);
  CHECK(v_dim_invariant(s, omega) <= 30);  // no budget on the polynomial path
}

TEST_CASE("omega_star") {
  const Stabilizer ghz = testutil::make_ghz3();
  const OmegaTuple star = omega_star(ghz);
  CHECK(star.r() == 3);
  CHECK(star.single(0) == QubitSet::full(3));
  CHECK(star.single(1) == QubitSet::from_indices(3, {1, 2}));
  CHECK(star.single(2) == QubitSet::from_indices(3, {2, 3}));
  CHECK(star.pair(0, 1) == QubitSet::full(3));
  CHECK(star.pair(0, 2) == QubitSet::full(3));
  CHECK(star.pair(1, 2) == QubitSet::from_indices(3, {1, 3}));
  CHECK(t_invariant(ghz, star) > 0);

  const OmegaTuple prod_star = omega_star(testutil::make_product_zzz());
  CHECK(prod_star.single(0) == QubitSet::from_indices(3, {1}));
  CHECK(prod_star.pair(0, 1) == QubitSet::from_indices(3, {1, 2}));
  CHECK(prod_star.pair(1, 2) == QubitSet::from_indices(3, {2, 3}));

  const OmegaTuple z_star = omega_star(parse_stabilizer_text("Z\n"));
  CHECK(z_star.r() == 1);
  CHECK(z_star.single(0) == QubitSet::full(1));
}

TEST_CASE("omega spec syntax") {
  const OmegaTuple omega = parse_omega_spec("r=2; w1={1,2}; w2={2,3}; w12={1,3}", 3);
  CHECK(omega == omega2(3, 0b011, 0b110, 0b101));
  CHECK(parse_omega_spec(format_omega_spec(omega), 3) == omega);
  CHECK(parse_omega_spec("r=2;w2={2,3};w1={1,2};w1,2={1,3}", 3) == omega);
  CHECK(parse_omega_spec("# arity\nr=1\nw1={}", 3) == omega1(3, 0));

  CHECK_THROWS_AS(parse_omega_spec("w1={1}", 3), parse_error);               // missing r
  CHECK_THROWS_AS(parse_omega_spec("r=2; w1={1}; w2={2}", 3), parse_error);  // missing pair
  CHECK_THROWS_AS(parse_omega_spec("r=1; w1={1}; w2={2}", 3), parse_error);  // stray slot
  CHECK_THROWS_AS(parse_omega_spec("r=2; w1={9}; w2={2}; w12={}", 3), parse_error);
  CHECK_THROWS_AS(parse_omega_spec("r=2; w1={1}; w2={2}; w21={1}", 3), parse_error);
}
