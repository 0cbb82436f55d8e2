// Command-line front end: singbraid <subcommand> ...
// Exit codes: 0 success / identity holds, 1 failure or computation error,
// 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "singbraid/singbraid.hpp"

using namespace singbraid;
using nlohmann::json;

namespace {

  struct Options {
    int                      strands = 0;
    std::string              word, other, braid;
    std::string              rep = "phi1";
    std::string              format = "text";
    std::string              kind, suite;
    int                      n = 3, k = 4, order = 2, count = 200, index = 0;
    std::uint64_t            seed = 1;
    std::size_t              budget = default_tau_budget;
    std::size_t              max_models = default_max_models;
    std::size_t              todd_coxeter = 0;
    bool                     simplify = false, abelianize = false;
    bool                     up_to_iso = false, quiet = false;
    std::vector<std::string> homs_into;
    std::string              out, model;
  };

  BraidWord braid_arg(Options const& o, std::string const& text) {
    return parse_braid(text, o.strands);
  }

  // Collects per-instance verdicts and prints them in sorted order.
  class Report {
   public:
    explicit Report(bool quiet) : quiet_(quiet) {}

    void add(bool ok, std::string line) {
      lines_.emplace_back(std::move(line), ok);
      failed_ += !ok;
    }

    int finish(std::string const& suite) {
      std::sort(lines_.begin(), lines_.end());
      for (auto const& [line, ok] : lines_) {
        if (!quiet_ || !ok) {
          std::cout << (ok ? "PASS " : "FAIL ") << line << "\n";
        }
      }
      std::cout << suite << ": " << lines_.size() - failed_ << "/"
                << lines_.size() << " passed\n";
      return failed_ == 0 ? 0 : 1;
    }

   private:
    bool                                      quiet_;
    std::vector<std::pair<std::string, bool>> lines_;
    std::size_t                               failed_ = 0;
  };

  bool oracle_holds(BraidWord const& u, BraidWord const& v, std::size_t budget) {
    if (u.is_tau_positive() && v.is_tau_positive()) {
      return sb_equal(u, v, budget);
    }
    return sg_identity_holds(u, v, budget);
  }

  void print_presentation(GroupPresentation const& p, std::string const& fmt) {
    if (fmt == "json") {
      std::cout << to_json(p).dump(2) << "\n";
    } else if (fmt == "gap") {
      std::cout << to_gap(p);
    } else {
      std::cout << to_string(p) << "\n";
    }
  }

  ////////////////////////////////////////////////////////////////////////

  int run_parse(Options const& o) {
    BraidWord w = braid_arg(o, o.word);
    std::cout << "word: " << (w.empty() ? "e" : to_string(w)) << "\n"
              << "strands: " << w.strands() << "\n"
              << "length: " << w.size() << "\n"
              << "tau letters: " << w.tau_count() << "\n"
              << "tau-positive: " << (w.is_tau_positive() ? "yes" : "no")
              << "\n"
              << "pure (SP_n): " << (in_pure_subgroup(w) ? "yes" : "no") << "\n"
              << "in ST_n: " << (in_st_subgroup(w) ? "yes" : "no") << "\n";
    return 0;
  }

  int run_perm(Options const& o) {
    BraidWord w = braid_arg(o, o.word);
    std::cout << "pi: " << pi_image(w).to_cycles() << "\n"
              << "theta: " << theta_image(w).to_cycles() << "\n";
    return 0;
  }

  int run_equal(Options const& o) {
    bool eq = oracle_holds(braid_arg(o, o.word), braid_arg(o, o.other), o.budget);
    std::cout << (eq ? "equal" : "not equal") << "\n";
    return eq ? 0 : 1;
  }

  int run_rewrite(Options const& o) {
    std::cout << to_string(rs_rewrite(braid_arg(o, o.word))) << "\n";
    return 0;
  }

  int run_comb(Options const& o) {
    auto parts = comb(braid_arg(o, o.word));
    int  j     = o.strands;
    for (auto const& u : parts) {
      std::cout << "u" << j-- << ": " << to_string(u) << "\n";
    }
    return 0;
  }

  int run_present(Options const& o) {
    GroupPresentation p;
    if (o.kind == "sp") {
      p = sp_presentation(o.n);
    } else if (o.kind == "pn") {
      p = pn_presentation(o.n);
    } else if (o.kind == "pn-co") {
      p = pn_presentation(o.n, true);
    } else {
      p = center_presentation(o.n);
    }
    print_presentation(p, o.format);
    return 0;
  }

  void identities_to(Report& r, std::vector<BraidIdentity> const& ids,
                     std::size_t budget) {
    for (auto const& id : ids) {
      r.add(oracle_holds(id.lhs, id.rhs, budget), id.label + " " + id.detail);
    }
  }

  int run_verify(Options const& o) {
    Report r(o.quiet);
    std::string const& s = o.suite;
    if (s == "sbn-relations") {
      for (auto const& rel : sb_relations(o.n)) {
        r.add(sb_equal(rel.lhs, rel.rhs, o.budget), rel.label + " " + rel.indices);
      }
    } else if (s == "sp-presentation") {
      for (auto const& rel : sp_relations(o.n)) {
        r.add(oracle_holds(expand(rel.lhs), expand(rel.rhs), o.budget),
              describe(rel));
      }
    } else if (s == "ct-table") {
      identities_to(r, conjugation_table_identities(o.n), o.budget);
    } else if (s == "center-lemmas") {
      identities_to(r, center_identities(o.n), o.budget);
    } else if (s == "camomile") {
      CamomileReport c = camomile_check(o.n, o.k);
      for (auto const& m : c.generators) {
        r.add(m.found, "petal " + gen_name(m.target, o.n)
                           + (m.found ? " = m^-1 " + gen_name(m.source, o.n)
                                            + " m, m = "
                                            + (m.conjugator.empty()
                                                   ? std::string("e")
                                                   : to_string(m.conjugator))
                                      : std::string(" unmatched")));
      }
      r.add(c.union_ok, "three-petal generator union");
      for (auto const& d : c.union_detail) {
        std::cout << "  " << d << "\n";
      }
      std::cout << "relators matched literally: " << c.relators_matched << "/"
                << c.relators_total << "\n";
    } else if (s == "rep-respect") {
      RepId rep = parse_rep(o.rep);
      for (auto const& c : check_rep_relations(rep, o.n)) {
        r.add(c.holds, to_string(rep) + " " + c.relation.label + " "
                           + c.relation.indices);
      }
    } else if (s == "sq-axioms") {
      auto models = enumerate_singquandles(o.order, o.max_models);
      for (std::size_t m = 0; m < models.size(); ++m) {
        auto axioms = failed_axioms(models[m]);
        auto rels   = sq_relation_failures(models[m], o.n);
        std::string why;
        for (auto const& a : axioms) {
          why += " " + a;
        }
        for (auto const& rel : rels) {
          why += " " + rel.label + "(" + rel.indices + ")";
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "model %06zu", m);
        r.add(why.empty(), buf + why);
      }
    } else if (s == "rs-roundtrip") {
      std::mt19937_64                    rng(o.seed);
      std::uniform_int_distribution<int> idx(1, o.n - 1), sign(0, 1);
      std::bernoulli_distribution        tau(0.3);
      int                                made = 0;
      while (made < o.count) {
        BraidWord w(o.n);
        for (int l = 0; l < 12; ++l) {
          int i = idx(rng);
          w.push_back(tau(rng) ? Letter::tau(i)
                               : Letter::sigma(i, sign(rng) ? 1 : -1));
        }
        if (!in_pure_subgroup(w) || w.tau_count() > 5) {
          continue;
        }
        ++made;
        PureWord p = rs_rewrite(w);
        char     buf[16];
        std::snprintf(buf, sizeof buf, "%04d ", made);
        r.add(sg_identity_holds(expand(p), w, o.budget),
              buf + to_string(w) + " -> " + to_string(p));
      }
    }
    return r.finish(s);
  }

  int run_rep_apply(Options const& o) {
    RepId    rep = parse_rep(o.rep);
    FreeEndo e   = phi_word(rep, braid_arg(o, o.braid));
    auto     gens = GroupPresentation::free(o.strands).generators;
    for (int g = 1; g <= o.strands; ++g) {
      std::cout << "x" << g << " -> " << to_string(e.image(g), gens) << "\n";
    }
    return 0;
  }

  int run_sq_census(Options const& o) {
    auto models = enumerate_singquandles(o.order, o.max_models);
    if (o.up_to_iso) {
      models = up_to_isomorphism(models);
    }
    json all = json::array();
    for (auto const& m : models) {
      all.push_back(to_json(m));
    }
    json doc = {{"order", o.order}, {"up_to_iso", o.up_to_iso},
                {"models", std::move(all)}};
    if (o.out.empty()) {
      std::cout << doc.dump() << "\n";
    } else {
      std::ofstream f(o.out);
      if (!f) {
        throw Error("cannot write " + o.out);
      }
      f << doc.dump() << "\n";
    }
    std::cerr << models.size() << " models of order " << o.order << "\n";
    return 0;
  }

  FiniteSingquandle load_model(Options const& o) {
    std::ifstream f(o.model);
    if (!f) {
      throw Error("cannot read " + o.model);
    }
    json doc;
    try {
      doc = json::parse(f);
    } catch (json::exception const& e) {
      throw SyntaxError(o.model + ": " + e.what());
    }
    if (doc.contains("models")) {
      auto const& ms = doc.at("models");
      if (o.index < 0 || o.index >= static_cast<int>(ms.size())) {
        throw RangeError("model index out of range");
      }
      return model_from_json(ms.at(o.index));
    }
    return model_from_json(doc);
  }

  int run_sq_colorings(Options const& o) {
    FiniteSingquandle m = load_model(o);
    auto p = fundamental_singquandle(braid_arg(o, o.braid));
    std::cout << count_sq_colorings(p, m) << "\n";
    return 0;
  }

  int run_sq_present(Options const& o) {
    std::cout << to_string(fundamental_singquandle(braid_arg(o, o.braid)))
              << "\n";
    return 0;
  }

  int run_invariant_group(Options const& o) {
    RepId             rep = parse_rep(o.rep);
    GroupPresentation p   = group_of_braid(rep, braid_arg(o, o.braid));
    if (o.simplify) {
      p = tietze_simplify(p);
    }
    if (o.format != "text") {
      print_presentation(p, o.format);
    } else {
      std::cout << "presentation: " << to_string(p) << "\n";
    }
    if (o.abelianize) {
      std::cout << "abelianization: " << to_string(abelianization(p)) << "\n";
    }
    for (auto const& g : o.homs_into) {
      FiniteGroupModel model = FiniteGroupModel::named(g);
      std::cout << "homs into " << model.name() << ": " << count_homs(p, model)
                << "\n";
    }
    if (o.todd_coxeter > 0) {
      auto idx = todd_coxeter(p, {}, o.todd_coxeter);
      std::cout << "order: " << (idx ? std::to_string(*idx) : "unknown")
                << "\n";
    }
    return 0;
  }

  void strands_opt(CLI::App* s, Options& o) {
    s->add_option("--strands", o.strands, "number of strands")
        ->required()
        ->check(CLI::Range(2, 64));
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular braids: word problem, pure subgroups, representations, invariants"};
  app.require_subcommand(1);
  Options o;

  auto* parse = app.add_subcommand("parse", "parse a braid word and report its shape");
  strands_opt(parse, o);
  parse->add_option("word", o.word, "braid word, e.g. \"s1 t2 S1\"")->required();

  auto* perm = app.add_subcommand("perm", "images under the two maps to S_n");
  strands_opt(perm, o);
  perm->add_option("word", o.word, "braid word")->required();

  auto* equal = app.add_subcommand("equal", "decide equality of two singular braids");
  strands_opt(equal, o);
  equal->add_option("lhs", o.word, "left word")->required();
  equal->add_option("rhs", o.other, "right word")->required();
  equal->add_option("--budget", o.budget, "maximum tau letters to expand");

  auto* rewrite = app.add_subcommand("rewrite", "rewrite an element of SP_n in a_ij, b_ij");
  strands_opt(rewrite, o);
  rewrite->add_option("word", o.word, "pure singular braid word")->required();

  auto* combc = app.add_subcommand("comb", "comb a classical pure braid");
  strands_opt(combc, o);
  combc->add_option("word", o.word, "pure braid word")->required();

  auto* present = app.add_subcommand("present", "emit a group presentation");
  present->add_option("kind", o.kind, "sp | pn | pn-co | center")
      ->required()
      ->check(CLI::IsMember({"sp", "pn", "pn-co", "center"}));
  present->add_option("--n", o.n, "number of strands")->check(CLI::Range(2, 12));
  present->add_option("--format", o.format, "text | json | gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", o.suite,
                   "sbn-relations | sp-presentation | ct-table | center-lemmas "
                   "| camomile | rep-respect | sq-axioms | rs-roundtrip")
      ->required()
      ->check(CLI::IsMember({"sbn-relations", "sp-presentation", "ct-table",
                             "center-lemmas", "camomile", "rep-respect",
                             "sq-axioms", "rs-roundtrip"}));
  verify->add_option("--n", o.n, "number of strands")->check(CLI::Range(2, 8));
  verify->add_option("--k", o.k, "highlighted subgroup for camomile");
  verify->add_option("--rep", o.rep, "representation for rep-respect");
  verify->add_option("--order", o.order, "model order for sq-axioms")
      ->check(CLI::Range(1, max_census_order));
  verify->add_option("--max-models", o.max_models, "census size budget");
  verify->add_option("--count", o.count, "samples for rs-roundtrip");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--budget", o.budget, "maximum tau letters to expand");
  verify->add_flag("--quiet", o.quiet, "print failures and the summary only");

  auto* rep = app.add_subcommand("rep", "free-group representations");
  rep->require_subcommand(1);
  auto* apply = rep->add_subcommand("apply", "images of the generators");
  apply->add_option("--rep", o.rep, "phi1 | phi2 | phi3 | phi4:N")->required();
  strands_opt(apply, o);
  apply->add_option("--braid", o.braid, "braid word")->required();

  auto* sq = app.add_subcommand("sq", "singquandles");
  sq->require_subcommand(1);
  auto* census = sq->add_subcommand("census", "enumerate finite singquandles");
  census->add_option("--order", o.order, "number of elements")
      ->required()
      ->check(CLI::Range(1, max_census_order));
  census->add_option("--out", o.out, "output file (default stdout)");
  census->add_flag("--up-to-iso", o.up_to_iso, "one model per isomorphism class");
  census->add_option("--max-models", o.max_models, "census size budget");
  auto* colorings = sq->add_subcommand("colorings", "count colorings of a closed braid");
  strands_opt(colorings, o);
  colorings->add_option("--braid", o.braid, "braid word")->required();
  colorings->add_option("--model", o.model, "model or census JSON file")->required();
  colorings->add_option("--index", o.index, "model index inside a census file");
  auto* sqp = sq->add_subcommand("present", "fundamental singquandle of a closed braid");
  strands_opt(sqp, o);
  sqp->add_option("--braid", o.braid, "braid word")->required();

  auto* inv = app.add_subcommand("invariant", "group invariants of closed braids");
  inv->require_subcommand(1);
  auto* group = inv->add_subcommand("group", "group of the closure under a representation");
  group->add_option("--rep", o.rep, "phi1 | phi2 | phi3 | phi4:N");
  strands_opt(group, o);
  group->add_option("--braid", o.braid, "braid word")->required();
  group->add_flag("--simplify", o.simplify, "apply Tietze moves");
  group->add_flag("--abelianize", o.abelianize, "print the abelianization");
  group->add_option("--homs-into", o.homs_into, "count maps into z<k>, s<m>, d<k>");
  group->add_option("--todd-coxeter", o.todd_coxeter, "coset cap for the order");
  group->add_option("--format", o.format, "text | json | gap")
      ->check(CLI::IsMember({"text", "json", "gap"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*parse) return run_parse(o);
    if (*perm) return run_perm(o);
    if (*equal) return run_equal(o);
    if (*rewrite) return run_rewrite(o);
    if (*combc) return run_comb(o);
    if (*present) return run_present(o);
    if (*verify) return run_verify(o);
    if (*apply) return run_rep_apply(o);
    if (*census) return run_sq_census(o);
    if (*colorings) return run_sq_colorings(o);
    if (*sqp) return run_sq_present(o);
    if (*group) return run_invariant_group(o);
  } catch (SyntaxError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (RangeError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
