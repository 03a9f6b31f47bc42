#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lcinv/lcequiv.hpp"
#include "lcinv/reference.hpp"
#include "test_util.hpp"

using namespace lcinv;

TEST_CASE("gl2_elements: six invertible factors, identity first, frozen order") {
  const auto& els = gl2_elements();
  REQUIRE(els.size() == 6);
  CHECK(els[0] == GL2{1, 0, 0, 1});

  std::set<int> codes;
  for (const GL2& f : els) {
    CHECK(((f.a & f.d) ^ (f.b & f.c)) == 1);  // invertible over F2
    codes.insert(f.a << 3 | f.b << 2 | f.c << 1 | f.d);
  }
  CHECK(codes == std::set<int>{0b1001, 0b0110, 0b0111, 0b1011, 0b1101, 0b1110});
  for (std::size_t i = 1; i + 1 < els.size(); ++i) {
    const auto code = [](const GL2& f) { return f.a << 3 | f.b << 2 | f.c << 1 | f.d; };
    CHECK(code(els[i]) < code(els[i + 1]));
  }

  // Group closure: every element has an inverse in the list.
  for (const GL2& f : els) {
    bool has_inverse = false;
    for (const GL2& g : els) has_inverse |= f.compose(g) == GL2{1, 0, 0, 1};
    CHECK(has_inverse);
  }
}

TEST_CASE("apply: identity, z/x swap, validity preservation") {
  const Stabilizer ghz = testutil::make_ghz3();
  CHECK(apply(LocalCliffordOp::identity(3), ghz) == ghz);

  LocalCliffordOp swap{3, std::vector<GL2>(3, GL2{0, 1, 1, 0})};
  CHECK(apply(swap, testutil::make_product_zzz()) == parse_stabilizer_text("XII\nIXI\nIIX\n"));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::uint32_t n = 2 + seed % 5;
    const Stabilizer s = random_stabilizer(n, 2000 + seed);
    const Stabilizer mapped = apply(random_local_clifford(n, 3000 + seed), s);
    CHECK(validate(mapped).ok());
  }

  CHECK_THROWS_AS(apply(LocalCliffordOp::identity(2), ghz), std::invalid_argument);
}

TEST_CASE("apply is a group action") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::uint32_t n = 2 + seed % 4;
    const Stabilizer s = random_stabilizer(n, 4000 + seed);
    const LocalCliffordOp q1 = random_local_clifford(n, 5000 + seed);
    const LocalCliffordOp q2 = random_local_clifford(n, 6000 + seed);
    CHECK(apply(q2, apply(q1, s)) == apply(q2.compose(q1), s));
  }
}

TEST_CASE("brute_force_check: pinned cases") {
  const Stabilizer ghz = testutil::make_ghz3();
  const Stabilizer tri =
      graph_state(testutil::adjacency_from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  const Stabilizer prod = testutil::make_product_zzz();

  const auto self = brute_force_check(ghz, ghz);
  REQUIRE(self.has_value());
  CHECK(*self == LocalCliffordOp::identity(3));

  const auto q = brute_force_check(ghz, tri);
  REQUIRE(q.has_value());
  CHECK(column_space_equal(apply(*q, ghz).generators(), tri.generators()));

  CHECK_FALSE(brute_force_check(ghz, prod).has_value());

  CHECK_THROWS_AS(brute_force_check(random_stabilizer(9, 1), random_stabilizer(9, 2)),
                  budget_error);
  CHECK_THROWS_AS(brute_force_check(ghz, random_stabilizer(2, 1)), std::invalid_argument);
}

TEST_CASE("brute_force_check matches the serial reference scan") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::uint32_t n = 2 + seed % 2;
    const Stabilizer s1 = random_stabilizer(n, 7000 + seed);
    const Stabilizer s2 = seed % 3 == 0 ? random_stabilizer(n, 7100 + seed)
                                        : apply(random_local_clifford(n, 7200 + seed), s1);
    const auto fast = brute_force_check(s1, s2);
    const auto slow = ref::brute_force_check(s1, s2);
    CHECK(fast.has_value() == slow.has_value());
    if (fast && slow) CHECK(*fast == *slow);  // both take the canonically first witness
  }
}

TEST_CASE("brute_force_check_all: every witness in order, first matches the scan") {
  const Stabilizer bell = parse_stabilizer_text("XX\nZZ\n");
  const auto all = brute_force_check_all(bell, bell);
  REQUIRE(!all.empty());
  CHECK(all[0] == *brute_force_check(bell, bell));
  for (const LocalCliffordOp& q : all)
    CHECK(column_space_equal(apply(q, bell).generators(), bell.generators()));

  // Cross-count against a raw reference scan.
  std::size_t expected = 0;
  for (const GL2& f0 : gl2_elements())
    for (const GL2& f1 : gl2_elements()) {
      const LocalCliffordOp q{2, {f0, f1}};
      if (column_space_equal(apply(q, bell).generators(), bell.generators())) ++expected;
    }
  CHECK(all.size() == expected);

  CHECK(brute_force_check_all(bell, parse_stabilizer_text("ZI\nIZ\n")).empty());
}

TEST_CASE("build_factor_from_pairs") {
  CHECK(build_factor_from_pairs({}) == GL2{1, 0, 0, 1});

  const auto f = build_factor_from_pairs({{{true, false}, {false, true}}});
  REQUIRE(f.has_value());
  CHECK(*f == GL2{0, 1, 1, 0});
  CHECK(f->apply(true, false) == std::pair<bool, bool>{false, true});

  CHECK_FALSE(build_factor_from_pairs({{{true, false}, {false, false}}}).has_value());
  CHECK_FALSE(
      build_factor_from_pairs({{{true, false}, {true, false}}, {{true, false}, {false, true}}})
          .has_value());
}

TEST_CASE("constructive_check: pinned cases") {
  const Stabilizer ghz = testutil::make_ghz3();
  const Stabilizer path = graph_state(testutil::adjacency_from_edges(3, {{0, 1}, {1, 2}}));
  const Stabilizer prod = testutil::make_product_zzz();

  const auto self = constructive_check(ghz, ghz);
  REQUIRE(self.has_value());
  CHECK(column_space_equal(apply(*self, ghz).generators(), ghz.generators()));

  const auto q = constructive_check(ghz, path);
  REQUIRE(q.has_value());
  CHECK(column_space_equal(apply(*q, ghz).generators(), path.generators()));
  CHECK(brute_force_check(ghz, path).has_value());

  CHECK_FALSE(constructive_check(ghz, prod).has_value());
  CHECK_FALSE(brute_force_check(ghz, prod).has_value());

  CHECK_THROWS_AS(constructive_check(random_stabilizer(7, 1), random_stabilizer(7, 2)),
                  budget_error);
}

TEST_CASE("deciders agree on a seeded pair corpus") {
  int equivalent = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::uint32_t n = 2 + seed % 3;
    const Stabilizer s1 = random_stabilizer(n, 8000 + seed);
    const Stabilizer s2 = seed % 2 == 0 ? apply(random_local_clifford(n, 8500 + seed), s1)
                                        : random_stabilizer(n, 9000 + seed);
    const auto brute = brute_force_check(s1, s2);
    const auto constructive = constructive_check(s1, s2);
    CHECK(brute.has_value() == constructive.has_value());
    if (brute) {
      ++equivalent;
      CHECK(column_space_equal(apply(*brute, s1).generators(), s2.generators()));
      CHECK(column_space_equal(apply(*constructive, s1).generators(), s2.generators()));
    }
  }
  CHECK(equivalent >= 50);  // the constructed half must all be found
}

TEST_CASE("every decider recognizes an LC orbit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::uint32_t n = 2 + seed % 3;
    const Stabilizer s = random_stabilizer(n, 10000 + seed);
    const Stabilizer mapped = apply(random_local_clifford(n, 11000 + seed), s);
    CHECK(brute_force_check(s, mapped).has_value());
    CHECK(constructive_check(s, mapped).has_value());
    CHECK(fingerprint_check(s, mapped, 2).equal);
  }
}

TEST_CASE("fingerprint_check: equal, distinct with witness, soundness") {
  const Stabilizer ghz = testutil::make_ghz3();
  const Stabilizer prod = testutil::make_product_zzz();

  CHECK(fingerprint_check(ghz, ghz, 2).equal);

  const FingerprintVerdict v = fingerprint_check(ghz, prod, 1);
  CHECK_FALSE(v.equal);
  REQUIRE(v.witness.has_value());
  const OmegaTuple w = *v.witness;
  CHECK(v_dim_invariant(ghz, w) != v_dim_invariant(prod, w));
  // A distinct verdict at any arity is a proof of inequivalence.
  CHECK_FALSE(brute_force_check(ghz, prod).has_value());
}

TEST_CASE("local Clifford op serialization") {
  LocalCliffordOp q{2, {GL2{1, 0, 0, 1}, GL2{0, 1, 1, 0}}};
  CHECK(q.to_string() == "1: 1 0 0 1\n2: 0 1 1 0\n");
}
