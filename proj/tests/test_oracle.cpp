#include <random>

#include "catch_amalgamated.hpp"

#include "singbraid/oracle.hpp"
#include "singbraid/relations.hpp"
#include "support.hpp"

using namespace singbraid;

namespace {
  BraidWord w(char const* text, int n) {
    return parse_braid(text, n);
  }
}  // namespace

TEST_CASE("Artin images", "[oracle]") {
  FreeEndo e = artin_endo(w("s1", 2));
  CHECK(e.image(1) == FreeWord(2, {1, 2, -1}));
  CHECK(e.image(2) == FreeWord(2, {1}));
  CHECK(artin_endo(w("", 2)).is_identity());
  CHECK(artin_endo(w("s1 S1", 2)).is_identity());
  CHECK(artin_endo(w("S2 s2 s1", 3)) == artin_endo(w("s1", 3)));
  CHECK_THROWS_AS(artin_endo(w("t1", 2)), PreconditionError);
}

TEST_CASE("braid_equal", "[oracle]") {
  CHECK(braid_equal(w("s1 s2 s1", 3), w("s2 s1 s2", 3)));
  CHECK(braid_equal(w("s1 s3", 4), w("s3 s1", 4)));
  CHECK_FALSE(braid_equal(w("s1", 2), w("S1", 2)));
  CHECK_FALSE(braid_equal(w("s1 s2", 3), w("s2 s1", 3)));
  CHECK_THROWS_AS(braid_equal(w("s1", 2), w("s1", 3)), PreconditionError);
}

TEST_CASE("desingularize expands tau into sigma - sigma^-1", "[oracle]") {
  ZBnElement t = desingularize(w("t1", 2));
  REQUIRE(t.size() == 2);
  CHECK(t.coefficient(normal_key(w("s1", 2))) == 1);
  CHECK(t.coefficient(normal_key(w("S1", 2))) == -1);
  ZBnElement s = desingularize(w("s1", 2));
  CHECK(s.size() == 1);
  CHECK(s.coefficient(normal_key(w("s1", 2))) == 1);
  ZBnElement tt = desingularize(w("t1 t1", 2));
  REQUIRE(tt.size() == 3);
  CHECK(tt.coefficient(normal_key(w("s1 s1", 2))) == 1);
  CHECK(tt.coefficient(normal_key(w("", 2))) == -2);
  CHECK(tt.coefficient(normal_key(w("S1 S1", 2))) == 1);
  CHECK_THROWS_AS(desingularize(w("T1", 2)), PreconditionError);
  CHECK_THROWS_AS(desingularize(w("t1 t1 t1", 2), 2), BudgetExceeded);
}

TEST_CASE("sb_equal on the monoid relations", "[oracle]") {
  CHECK(sb_equal(w("t1 s1", 2), w("s1 t1", 2)));
  CHECK(sb_equal(w("s1 s2 t1", 3), w("t2 s1 s2", 3)));
  CHECK_FALSE(sb_equal(w("t1 t2", 3), w("t2 t1", 3)));
  CHECK_FALSE(sb_equal(w("t1", 2), w("s1", 2)));
  CHECK_FALSE(sb_equal(w("t1 s1 t1", 2), w("t1 t1 s1 s1", 2)));
  for (int n = 3; n <= 6; ++n) {
    for (auto const& rel : sb_relations(n)) {
      INFO(rel.label << " " << rel.indices << " n=" << n);
      CHECK(sb_equal(rel.lhs, rel.rhs));
    }
  }
}

TEST_CASE("sb_equal is a congruence and extends braid_equal",
          "[oracle][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int  n     = 3 + trial % 3;
    auto rels  = sb_relations(n);
    auto const& rel = rels[trial % rels.size()];
    BraidWord a = testing::random_word(rng, {n, 4, 0.3, false});
    BraidWord b = testing::random_word(rng, {n, 4, 0.3, false});
    REQUIRE(sb_equal(a * rel.lhs * b, a * rel.rhs * b));
  }
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord u = testing::random_word(rng, {3, 6, 0.0, false});
    BraidWord v = testing::random_word(rng, {3, 6, 0.0, false});
    REQUIRE(sb_equal(u, v) == braid_equal(u, v));
    REQUIRE(sb_equal(u, u * v * invert(v)));
  }
}

TEST_CASE("Artin action: homomorphism and membership conditions",
          "[oracle][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int       n = 2 + trial % 5;
    BraidWord u = testing::random_word(rng, {n, std::size_t(trial % 11), 0.0});
    BraidWord v = testing::random_word(rng, {n, 5, 0.0});
    REQUIRE(artin_endo(u * v) == artin_endo(u).after(artin_endo(v)));
    FreeEndo e  = artin_endo(u);
    Perm     pi = pi_image(u);
    FreeWord product(n);
    for (int i = 1; i <= n; ++i) {
      FreeWord core = cyclic_reduce(e.image(i));
      REQUIRE(core == FreeWord::generator(n, pi.inverse()(i)));
      product *= FreeWord::generator(n, i);
    }
    REQUIRE(e.apply(product) == product);
  }
}

TEST_CASE("to_tau_positive clears conjugations", "[oracle]") {
  // b12^-1 (a13 a23) b12 = a13 a23
  BraidWord b12 = w("t1 s1", 3), a13 = w("s2 s1 s1 S2", 3),
            a23 = w("s2 s2", 3);
  auto [l, r] = to_tau_positive(invert(b12) * a13 * a23 * b12, a13 * a23);
  CHECK(l == a13 * a23 * b12);
  CHECK(r == b12 * a13 * a23);
  auto same = to_tau_positive(w("t1 s2", 3), w("t1 s2", 3));
  CHECK(same.first == w("t1 s2", 3));
  auto [l2, r2] = to_tau_positive(w("T1 s2 t1", 3), w("s2", 3));
  CHECK(l2 == w("s2 t1", 3));
  CHECK(r2 == w("t1 s2", 3));
  CHECK_THROWS_AS(to_tau_positive(w("T1 t2 T1 t2", 3), w("", 3)),
                  PreconditionError);
}

TEST_CASE("sg_identity_holds", "[oracle]") {
  CHECK(sg_identity_holds(w("s1 s1 t1 s1", 2), w("t1 s1 s1 s1", 2)));
  CHECK(sg_identity_holds(w("s1 t1", 2), w("t1 s1", 2)));
  CHECK_FALSE(sg_identity_holds(w("s1 s1", 2), w("t1 s1", 2)));
  CHECK(sg_identity_holds(w("t1 s1 T1", 2), w("s1", 2)));
  CHECK(sg_identity_holds(w("s3 T1", 4), w("T1 s3", 4)));
  CHECK_FALSE(sg_identity_holds(w("s2 T1", 3), w("T1 s2", 3)));
}
