// Acceptance suite: one PASS/FAIL line per criterion, with wall time checked
// against the per-criterion limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "singbraid/singbraid.hpp"

using namespace singbraid;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  int failures = 0;

  void criterion(int id, char const* name, double limit_s,
                 std::function<Outcome()> const& body) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = body();
    } catch (std::exception const& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                   .count();
    bool in_time = s < limit_s;
    bool pass    = r.ok && in_time;
    failures += !pass;
    std::printf("%s %2d %-22s %s [%.2f s, limit %.0f s%s]\n",
                pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), s, limit_s,
                in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }

  BraidWord w(char const* text, int n) {
    return parse_braid(text, n);
  }

  FreeWord fw(std::vector<int> letters) {
    return FreeWord(2, letters);
  }

  FreeWord fpow(FreeWord const& x, int k) {
    return x.pow(k);
  }

  std::string count_line(std::size_t good, std::size_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
  }

  // Counts identities that hold; keeps the first few failures for the log.
  template <class Range, class Pred, class Name>
  std::size_t tally(Range const& items, Pred holds, Name name,
                    std::vector<std::string>& bad) {
    std::size_t good = 0;
    for (auto const& x : items) {
      if (holds(x)) {
        ++good;
      } else if (bad.size() < 6) {
        bad.push_back(name(x));
      }
    }
    return good;
  }

  std::string join(std::vector<std::string> const& v) {
    std::string out;
    for (auto const& s : v) {
      out += (out.empty() ? "" : "; ") + s;
    }
    return out;
  }

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  criterion(1, "sb-relations", 10, [] {
    Outcome                  r;
    std::vector<std::string> bad;
    std::size_t              good = 0, total = 0;
    for (int n = 3; n <= 6; ++n) {
      auto rels = sb_relations(n);
      total += rels.size();
      good += tally(
          rels, [](MonoidRelation const& m) { return sb_equal(m.lhs, m.rhs); },
          [n](MonoidRelation const& m) {
            return "n=" + std::to_string(n) + " " + m.label + " " + m.indices;
          },
          bad);
    }
    r.ok     = good == total;
    r.detail = count_line(good, total) + " instances, n=3..6";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(2, "sp-presentation", 60, [] {
    Outcome                  r;
    std::vector<std::string> bad;
    std::size_t              good = 0, total = 0;
    for (int n : {3, 4}) {
      auto rels = sp_relations(n);
      total += rels.size();
      good += tally(
          rels,
          [](PureRelation const& p) {
            return sg_identity_holds(expand(p.lhs), expand(p.rhs));
          },
          [n](PureRelation const& p) {
            return "n=" + std::to_string(n) + " " + describe(p);
          },
          bad);
    }
    r.ok     = good == total;
    r.detail = count_line(good, total) + " relator instances, n=3,4";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(3, "conjugation-table", 120, [] {
    Outcome                  r;
    std::vector<std::string> bad;
    std::size_t              good = 0, total = 0;
    std::set<std::string>    labels;
    for (int n : {4, 5}) {
      auto ids = conjugation_table_identities(n);
      total += ids.size();
      for (auto const& id : ids) {
        labels.insert(id.label);
      }
      good += tally(
          ids,
          [](BraidIdentity const& id) { return sg_identity_holds(id.lhs, id.rhs); },
          [n](BraidIdentity const& id) {
            return "n=" + std::to_string(n) + " " + id.label + " " + id.detail;
          },
          bad);
    }
    r.ok     = good == total;
    r.detail = count_line(good, total) + " rows, n=4,5, "
               + std::to_string(labels.size()) + " distinct row labels";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(4, "center", 120, [] {
    Outcome                  r;
    std::vector<std::string> bad;
    std::size_t              good = 0, total = 0;
    for (int n = 3; n <= 5; ++n) {
      auto ids = center_identities(n);
      total += ids.size();
      good += tally(
          ids,
          [](BraidIdentity const& id) { return sg_identity_holds(id.lhs, id.rhs); },
          [n](BraidIdentity const& id) {
            return "n=" + std::to_string(n) + " " + id.label + " " + id.detail;
          },
          bad);
    }
    r.ok     = good == total && delta(5).size() == 20;
    r.detail = count_line(good, total) + " identities (cent1-3, cl2, central), n=3..5";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(5, "camomile", 60, [] {
    CamomileReport c = camomile_check(5, 4);
    std::size_t    found = 0;
    for (auto const& m : c.generators) {
      found += m.found;
    }
    Outcome r;
    r.ok     = c.generators_ok() && c.union_ok && c.generators.size() == 20;
    r.detail = count_line(found, c.generators.size())
               + " generators of SP_5 as petal conjugates over M_{5,4}, "
               + "three-petal union " + (c.union_ok ? "reproduced" : "NOT reproduced")
               + ", relators matched " + count_line(c.relators_matched, c.relators_total);
    return r;
  });

  criterion(6, "rs-roundtrip", 300, [] {
    std::mt19937_64                    rng(20240601);
    std::uniform_int_distribution<int> len(2, 12), idx(1, 3), sign(0, 1);
    std::bernoulli_distribution        tau(0.3);
    std::size_t                        good = 0, total = 0, taus = 0;
    std::vector<std::string>           bad;
    while (total < 200) {
      BraidWord x(4);
      int       l = len(rng);
      for (int k = 0; k < l; ++k) {
        int i = idx(rng);
        x.push_back(tau(rng) ? Letter::tau(i) : Letter::sigma(i, sign(rng) ? 1 : -1));
      }
      if (!in_pure_subgroup(x) || x.tau_count() > 5) {
        continue;
      }
      ++total;
      taus += x.tau_count();
      PureWord p = rs_rewrite(x);
      if (sg_identity_holds(expand(p), x)) {
        ++good;
      } else if (bad.size() < 6) {
        bad.push_back(to_string(x));
      }
    }
    Outcome r;
    r.ok     = good == total;
    r.detail = count_line(good, total) + " random words of SP_4 (<=12 letters, <=5 tau, "
               + std::to_string(taus) + " tau letters in all)";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(7, "representations", 30, [] {
    Outcome                  r;
    std::vector<std::string> notes;
    std::vector<RepId>       reps{RepId::phi1(), RepId::phi2(), RepId::phi3(),
                            RepId::phi4(1), RepId::phi4(2), RepId::phi4(3)};
    for (auto const& rep : reps) {
      std::set<std::string> failing;
      for (int n = 3; n <= 5; ++n) {
        for (auto const& c : check_rep_relations(rep, n)) {
          if (!c.holds) {
            failing.insert(c.relation.label);
          }
        }
      }
      if (!failing.empty()) {
        r.ok = false;
        std::string f;
        for (auto const& l : failing) {
          f += (f.empty() ? "" : ",") + l;
        }
        notes.push_back(to_string(rep) + " violates " + f);
      }
    }
    BraidWord st = w("s1 t1", 2);
    FreeEndo  e1 = phi_word(RepId::phi1(), st);
    bool      d1 = e1.image(1) == fw({1, 2, 1, 2, -1, -2, -1})
              && e1.image(2) == fw({1, 2, 1, -2, -1});
    FreeEndo e3 = phi_word(RepId::phi3(), st);
    bool     d3 = e3.image(1) == fw({1, 2, -1, -2, 1, 2, -1})
              && e3.image(2) == fw({1, -2, -1, 2, 1});
    bool d4 = true;
    for (int n = 1; n <= 3; ++n) {
      // x1 -> x2^-1 (x1^-1 x2)^n (x2^-1 x1)^(n+1) x2 (x2^-1 x1)^n x2
      // x2 -> x2^-1 (x1^-1 x2)^n
      FreeWord a = fw({-1, 2}), b = fw({-2, 1}), x2 = fw({2}), y2 = fw({-2});
      FreeWord img1 = y2 * fpow(a, n) * fpow(b, n + 1) * x2 * fpow(b, n) * x2;
      FreeWord img2 = y2 * fpow(a, n);
      FreeEndo e4   = phi_word(RepId::phi4(n), st);
      if (!(e4.image(1) == img1 && e4.image(2) == img2)) {
        d4 = false;
        FreeEndo swapped = phi_word(RepId::phi4(n), w("t1 s1", 2));
        notes.push_back("phi4:" + std::to_string(n) + "(s1 t1) differs from the displayed image"
                        + (swapped.image(1) == img1 && swapped.image(2) == img2
                               ? " (the display equals the image of t1 s1)"
                               : ""));
      }
    }
    if (!d1) notes.push_back("phi1 display not reproduced");
    if (!d3) notes.push_back("phi3 display not reproduced");
    r.ok     = r.ok && d1 && d3 && d4;
    r.detail = "relation respect for phi1,phi2,phi3,phi4:1..3 at 3..5 strands and the "
               "displayed images of s1 t1";
    if (!notes.empty()) {
      r.detail += ": " + join(notes);
    }
    return r;
  });

  criterion(8, "worked-examples", 10, [] {
    std::vector<std::string> bad;
    auto expect = [&bad](bool ok, char const* what) {
      if (!ok) bad.emplace_back(what);
    };
    auto rel_in = [](GroupPresentation const& p, FreeWord const& r) {
      return std::any_of(p.relators.begin(), p.relators.end(),
                         [&](FreeWord const& s) { return same_relator(s, r); });
    };
    BraidWord sf = w("s1 t1", 2), mirror = w("S1 t1", 2);

    GroupPresentation g1 = group_of_braid(RepId::phi1(), sf);
    // x1 = x2 x1 x2 x1^-1 x2^-1,  x2 = x1 x2 x1 x2^-1 x1^-1
    expect(g1.relators.size() == 2 && rel_in(g1, fw({-1, 2, 1, 2, -1, -2}))
               && rel_in(g1, fw({-2, 1, 2, 1, -2, -1})),
           "G1 relators");

    GroupPresentation g1m = tietze_simplify(group_of_braid(RepId::phi1(), mirror));
    expect(g1m.rank() == 1 && g1m.relators.empty()
               && abelianization(g1m) == AbelianInvariants{1, {}},
           "G1 mirror is free of rank 1");

    expect(abelianization(group_of_braid(RepId::phi1(), w("s1 s1", 2)))
               == AbelianInvariants{2, {}},
           "Hopf link abelianization");

    GroupPresentation g41 = group_of_braid(RepId::phi4(1), sf);
    auto              tc  = todd_coxeter(g41, {}, 1000);
    expect(abelianization(g41) == AbelianInvariants{0, {2}}, "G41 abelianization");
    expect(tc && *tc == 2, "G41 coset enumeration");

    GroupPresentation g3 = group_of_braid(RepId::phi3(), sf);
    // x1 = x2 x1^-1 x2^-1 x1 x2,  x2 = x1 x2^-1 x1^-1 x2 x1
    expect(g3.relators.size() == 2 && rel_in(g3, fw({-1, 2, -1, -2, 1, 2}))
               && rel_in(g3, fw({-2, 1, -2, -1, 2, 1})),
           "G3 relators");
    GroupPresentation g3m = tietze_simplify(group_of_braid(RepId::phi3(), mirror));
    // x2 x1^2 = x1 x2^2
    expect(g3m.rank() == 2 && g3m.relators.size() == 1
               && rel_in(g3m, fw({2, 1, 1, -2, -2, -1})),
           "G3 mirror relator");

    // singular trefoil: y2 = y1*y3, y4 = y3*y2, y1 = y2 o_l y4, y3 = y2 o_r y4
    SQTerm y1 = SQTerm::gen(1), y3 = SQTerm::gen(3);
    SQTerm y2 = y1 * y3, y4 = y3 * y2;
    std::vector<SQTerm> rename{SQTerm::gen(1), SQTerm::gen(2), SQTerm::gen(2)};
    SQPresentation sq = fundamental_singquandle(w("s1 s1 t1", 2));
    expect(sq.rank == 2 && sq.relations.size() == 2
               && sq.relations[0].first == substitute(y1, rename)
               && sq.relations[0].second
                      == substitute(SQTerm::make(SQOp::circ_l, y2, y4), rename)
               && sq.relations[1].first == substitute(y3, rename)
               && sq.relations[1].second
                      == substitute(SQTerm::make(SQOp::circ_r, y2, y4), rename),
           "singular trefoil singquandle");

    Outcome r;
    r.ok     = bad.empty();
    r.detail = "G1, G1 mirror, Hopf, G41, G3, G3 mirror, singular trefoil";
    if (!bad.empty()) {
      r.detail += " failing: " + join(bad);
    }
    return r;
  });

  criterion(9, "singquandles", 300, [] {
    std::vector<FiniteSingquandle> models;
    for (int q = 1; q <= 3; ++q) {
      auto m = enumerate_singquandles(q);
      models.insert(models.end(), m.begin(), m.end());
    }
    std::size_t axiom_bad = 0, rel_bad = 0;
    for (auto const& m : models) {
      axiom_bad += !failed_axioms(m).empty();
      rel_bad += !sq_relation_failures(m, 4).empty();
    }
    std::mt19937_64                    rng(77);
    std::uniform_int_distribution<int> len(1, 4), idx(1, 2), sign(0, 1);
    std::size_t                        color_bad = 0, counts = 0;
    for (char const* b : {"s1 s1 t1", "s1 t1", "t1 t2", "s1 S2 t1 s2", "t2 s1 s1 t1 S2"}) {
      BraidWord base = w(b, 3);
      std::vector<BraidWord> variants;
      for (int k = 0; k < 10; ++k) {
        BraidWord g(3);
        for (int l = len(rng); l > 0; --l) {
          g.push_back(Letter::sigma(idx(rng), sign(rng) ? 1 : -1));
        }
        std::vector<Letter> c = (invert(g) * base * g).letters();
        std::uniform_int_distribution<std::size_t> cut(0, c.size() - 1);
        std::rotate(c.begin(), c.begin() + cut(rng), c.end());
        variants.emplace_back(3, c);
      }
      for (int e : {1, -1}) {
        BraidWord up = widen(base, 4);
        up.push_back(Letter::sigma(3, e));
        variants.push_back(up);
      }
      SQPresentation              p0 = fundamental_singquandle(base);
      std::vector<SQPresentation> ps;
      for (auto const& v : variants) {
        ps.push_back(fundamental_singquandle(v));
      }
      for (auto const& m : models) {
        auto expected = count_sq_colorings(p0, m);
        for (auto const& p : ps) {
          ++counts;
          color_bad += count_sq_colorings(p, m) != expected;
        }
      }
    }
    Outcome r;
    r.ok     = axiom_bad == 0 && rel_bad == 0 && color_bad == 0;
    r.detail = std::to_string(models.size()) + " models of order <=3, axiom failures "
               + std::to_string(axiom_bad) + ", SB_4 relation failures "
               + std::to_string(rel_bad) + ", coloring mismatches "
               + count_line(color_bad, counts);
    return r;
  });

  criterion(10, "mirror-separation", 5, [] {
    auto          s3 = FiniteGroupModel::symmetric(3);
    std::uint64_t a  = count_homs(group_of_braid(RepId::phi1(), w("s1 t1", 2)), s3);
    std::uint64_t b  = count_homs(group_of_braid(RepId::phi1(), w("S1 t1", 2)), s3);
    Outcome       r;
    r.ok     = a != b;
    r.detail = "homs into S_3: " + std::to_string(a) + " vs mirror " + std::to_string(b);
    return r;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
