#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "singbraid/oracle.hpp"
#include "singbraid/purebraid.hpp"
#include "support.hpp"

using namespace singbraid;

namespace {
  BraidWord w(char const* text, int n) {
    return parse_braid(text, n);
  }

  std::set<std::string> texts(std::vector<BraidWord> const& ws) {
    std::set<std::string> out;
    for (auto const& x : ws) {
      out.insert(to_string(x));
    }
    return out;
  }

  PureWord random_pure(std::mt19937_64& rng, int n, int len, bool positive) {
    auto                               gens = pure_generators(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    PureWord                           out(n);
    for (int k = 0; k < len; ++k) {
      out *= PureWord::gen(gens[pick(rng)], n, positive || sign(rng) ? 1 : -1);
    }
    return out;
  }
}  // namespace

TEST_CASE("generator words", "[purebraid]") {
  CHECK(gen_word({GenKind::a, 1, 2}, 3) == w("s1 s1", 3));
  CHECK(gen_word({GenKind::b, 1, 2}, 3) == w("t1 s1", 3));
  CHECK(gen_word({GenKind::a, 1, 3}, 3) == w("s2 s1 s1 S2", 3));
  CHECK(gen_word({GenKind::b, 2, 4}, 4) == w("s3 t2 s2 S3", 4));
  CHECK_THROWS_AS(gen_word({GenKind::a, 2, 2}, 3), RangeError);
  CHECK_THROWS_AS(gen_word({GenKind::a, 1, 4}, 3), RangeError);
  for (int n = 2; n <= 5; ++n) {
    for (auto g : pure_generators(n)) {
      CHECK(in_pure_subgroup(gen_word(g, n)));
      CHECK(gen_at(gen_index(g, n), n) == g);
    }
  }
  CHECK(gen_name({GenKind::b, 3, 4}, 4) == "b34");
}

TEST_CASE("Schreier sets", "[purebraid]") {
  for (int n = 2; n <= 5; ++n) {
    for (auto kind : {SchreierKind::lambda, SchreierKind::m}) {
      auto reps = schreier_set(n, kind);
      REQUIRE(reps.size() == static_cast<std::size_t>(
                                 std::tgamma(n + 1) + 0.5));
      std::set<Perm> images;
      for (auto const& r : reps) {
        images.insert(pi_image(r));
      }
      CHECK(images.size() == reps.size());
    }
  }
  CHECK(texts(schreier_set(2, SchreierKind::lambda))
        == std::set<std::string>{"", "s1"});
  CHECK(texts(schreier_set(3, SchreierKind::lambda))
        == std::set<std::string>{"", "s1", "s2", "s2 s1", "s1 s2",
                                 "s1 s2 s1"});
  CHECK(texts(schreier_set(3, SchreierKind::m))
        == std::set<std::string>{"", "S1", "S2", "S2 S1", "S1 S2",
                                 "S1 S2 S1"});
}

TEST_CASE("M subsets", "[purebraid]") {
  CHECK(m_subset(5, 4).size() == 97);
  CHECK(m_subset(4, 3).size() == 19);
  auto m32 = texts(m_subset(3, 2));
  CHECK(m32.size() == 5);
  CHECK(m32.count("") == 1);
  CHECK(m32.count("S1") == 0);
  CHECK_THROWS_AS(m_subset(3, 3), RangeError);
}

TEST_CASE("conjugation table agrees with the oracle", "[purebraid][slow]") {
  for (int n : {4, 5}) {
    auto rows = conjugation_table_identities(n);
    CHECK(rows.size() == static_cast<std::size_t>(n * (n - 1) * 2 * (n - 1)));
    for (auto const& id : rows) {
      INFO(id.label << " " << id.detail);
      REQUIRE(sg_identity_holds(id.lhs, id.rhs));
    }
  }
}

TEST_CASE("conjugating by a braid word", "[purebraid]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    PureWord  x = random_pure(rng, 4, 3, true);
    BraidWord g = testing::random_word(rng, {4, 4, 0.0});
    PureWord  y = conj_by_braid(x, g);
    REQUIRE(sg_identity_holds(invert(g) * expand(x) * g, expand(y)));
  }
}

TEST_CASE("relations of SP_n hold", "[purebraid][slow]") {
  auto two = sp_relations(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].family == "dr-0");
  for (int n : {3, 4}) {
    std::set<std::string> families;
    for (auto const& r : sp_relations(n)) {
      families.insert(r.family);
      INFO(describe(r));
      REQUIRE(sg_identity_holds(expand(r.lhs), expand(r.rhs)));
    }
    CHECK(families.count("dr-4") == (n >= 4));
    CHECK(families.count("dr-51") == (n >= 4));
    CHECK(families.count("dr-1") == 1);
  }
  CHECK(sp_presentation(3).rank() == 6);
  CHECK(sp_presentation(4).rank() == 12);
}

TEST_CASE("relations of P_n hold", "[purebraid]") {
  CHECK(pn_presentation(2).relators.empty());
  CHECK(pn_presentation(2).rank() == 1);
  for (int n = 3; n <= 5; ++n) {
    for (bool co : {false, true}) {
      for (auto const& r : pn_relations(n, co)) {
        INFO(describe(r));
        REQUIRE(braid_equal(expand(r.lhs), expand(r.rhs)));
      }
    }
  }
  std::set<std::string> three;
  for (auto const& r : pn_relations(3)) {
    three.insert(r.family);
  }
  CHECK(three == std::set<std::string>{"re2", "re3"});
  bool far = false;
  for (auto const& r : pn_relations(4)) {
    far = far
          || (r.family == "re1"
              && same_relator(r.relator(),
                              commutator(pa(3, 4, 4), pa(1, 2, 4)).word()));
  }
  CHECK(far);
}

TEST_CASE("full twist and its factors", "[purebraid]") {
  CHECK(delta(3).size() == 6);
  CHECK(delta(5).size() == 20);
  CHECK(to_string(delta_k(3, 3)) == "a13 a23");
  CHECK(braid_equal(expand(delta_range(2, 4, 4)), delta(4)));
  CHECK_THROWS_AS(delta_k(1, 3), RangeError);
}

TEST_CASE("center presentation shape", "[purebraid]") {
  GroupPresentation p = center_presentation(3);
  CHECK(p.rank() == 6);
  CHECK(p.generators.front() == "a13");
  CHECK(p.generators.back() == "D");
  std::size_t commutators = 0;
  for (auto const& r : p.relators) {
    commutators += r.mentions(6);
  }
  CHECK(commutators == 5);
  GroupPresentation const sp3 = sp_presentation(3);
  auto const&             sp  = sp3.relators;
  CHECK(p.relators.size()
        == commutators
               + std::count_if(sp.begin(), sp.end(), [](FreeWord const& r) {
                   return !r.mentions(1);
                 }));
}

TEST_CASE("center identities", "[purebraid][slow]") {
  for (int n = 3; n <= 5; ++n) {
    for (auto const& id : center_identities(n)) {
      INFO(id.label << " " << id.detail);
      REQUIRE(sg_identity_holds(id.lhs, id.rhs));
    }
  }
}

TEST_CASE("Reidemeister-Schreier rewriting", "[purebraid]") {
  CHECK(to_string(rs_rewrite(w("s1 s1", 2))) == "a12");
  CHECK(to_string(rs_rewrite(w("t1 s1", 2))) == "b12");
  CHECK(to_string(rs_rewrite(w("", 3))) == "1");
  CHECK_THROWS_AS(rs_rewrite(w("s1", 2)), PreconditionError);
  std::mt19937_64 rng(5);
  int             tried = 0;
  while (tried < 60) {
    BraidWord x = testing::random_word(rng, {4, 10, 0.3});
    if (!in_pure_subgroup(x)) {
      continue;
    }
    ++tried;
    INFO(to_string(x));
    REQUIRE(sg_identity_holds(expand(rs_rewrite(x)), x));
  }
}

TEST_CASE("combing pure braids", "[purebraid]") {
  auto parts = comb(delta(3));
  REQUIRE(parts.size() == 2);
  CHECK(to_string(parts[0]) == "a13 a23");
  CHECK(to_string(parts[1]) == "a12");
  CHECK_THROWS_AS(comb(w("t1 s1", 2)), PreconditionError);
  std::mt19937_64 rng(9);
  int             tried = 0;
  while (tried < 60) {
    BraidWord x = testing::random_word(rng, {4, 12, 0.0});
    if (!in_pure_subgroup(x)) {
      continue;
    }
    ++tried;
    auto c = comb(x);
    REQUIRE(braid_equal(expand(comb_product(c, 4)), x));
    // the same element written differently combs the same way
    BraidWord y = x * w("s2 s1 S1 s3 S3 S2", 4);
    CHECK(comb(y) == c);
    for (std::size_t k = 0; k < c.size(); ++k) {
      int j = 4 - static_cast<int>(k);
      for (auto [g, e] : c[k].letters()) {
        CHECK(g.j == j);
      }
    }
  }
}

TEST_CASE("camomile decomposition", "[purebraid][slow]") {
  CamomileReport r = camomile_check(5, 4);
  CHECK(r.generators.size() == 20);
  CHECK(r.generators_ok());
  CHECK(r.union_ok);
  CHECK(r.relators_total > 0);
  CHECK(r.relators_matched == r.relators_total);
  for (auto const& m : r.generators) {
    PureWord target = PureWord::gen(m.target, 5);
    BraidWord g0    = gen_word(m.source, 5);
    CHECK(sg_identity_holds(invert(m.conjugator) * g0 * m.conjugator,
                            expand(target)));
  }
}
