#ifndef SINGBRAID_REPRESENT_HPP
#define SINGBRAID_REPRESENT_HPP

// Representations of SB_n by endomorphisms of F_n extending the Artin
// representation. All of them share the sigma rule and differ on tau_i.

#include <string>
#include <vector>

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"
#include "singbraid/oracle.hpp"
#include "singbraid/relations.hpp"
#include "singbraid/words.hpp"

namespace singbraid {

  enum class RepFamily { phi1, phi2, phi3, phi4, custom };

  struct RepId {
    RepFamily family    = RepFamily::phi1;
    int       parameter = 0;  // only for phi4
    LocalRule custom_tau;     // only for custom

    static RepId phi1() {
      return {RepFamily::phi1, 0, {}};
    }
    static RepId phi2() {
      return {RepFamily::phi2, 0, {}};
    }
    static RepId phi3() {
      return {RepFamily::phi3, 0, {}};
    }
    static RepId phi4(int n) {
      if (n < 1) {
        throw RangeError("phi4: parameter must be at least 1");
      }
      return {RepFamily::phi4, n, {}};
    }
    // Artin on sigma, the given rule on tau; used for mutation tests.
    static RepId custom(LocalRule tau) {
      return {RepFamily::custom, 0, std::move(tau)};
    }
  };

  inline std::string to_string(RepId const& r) {
    switch (r.family) {
      case RepFamily::phi1: return "phi1";
      case RepFamily::phi2: return "phi2";
      case RepFamily::phi3: return "phi3";
      case RepFamily::phi4: return "phi4:" + std::to_string(r.parameter);
      case RepFamily::custom: return "custom";
    }
    return "?";
  }

  // phi1 | phi2 | phi3 | phi4:<n>
  inline RepId parse_rep(std::string const& s) {
    if (s == "phi1") {
      return RepId::phi1();
    }
    if (s == "phi2") {
      return RepId::phi2();
    }
    if (s == "phi3") {
      return RepId::phi3();
    }
    if (s.rfind("phi4:", 0) == 0 && s.size() > 5 && s.size() < 12
        && s.find_first_not_of("0123456789", 5) == std::string::npos) {
      return RepId::phi4(std::stoi(s.substr(5)));
    }
    throw SyntaxError("unknown representation '" + s + "'");
  }

  inline LocalRule tau_rule(RepId const& r) {
    switch (r.family) {
      case RepFamily::phi1:
        // x_i -> x_i x_{i+1} x_i x_{i+1}^-1 x_i^-1, x_{i+1} -> x_i x_{i+1} x_i^-1
        return {{1, 2, 1, -2, -1}, {1, 2, -1}};
      case RepFamily::phi2:
        // x_i -> x_{i+1}^-1 x_i x_{i+1},
        // x_{i+1} -> x_{i+1}^-1 x_i^-1 x_{i+1} x_i x_{i+1}
        return {{-2, 1, 2}, {-2, -1, 2, 1, 2}};
      case RepFamily::phi3:
        // x_i -> x_i x_{i+1}^-1 x_i^-1 x_{i+1} x_i,
        // x_{i+1} -> x_i^-1 x_{i+1}^-1 x_i x_{i+1}^2
        return {{1, -2, -1, 2, 1}, {-1, -2, 1, 2, 2}};
      case RepFamily::phi4: {
        // x_i -> x_{i+1}^-1 (x_i^-1 x_{i+1})^n,
        // x_{i+1} -> (x_{i+1}^-1 x_i)^(n+1) x_{i+1}
        LocalRule rule{{-2}, {}};
        for (int k = 0; k < r.parameter; ++k) {
          rule.first.insert(rule.first.end(), {-1, 2});
        }
        for (int k = 0; k <= r.parameter; ++k) {
          rule.second.insert(rule.second.end(), {-2, 1});
        }
        rule.second.push_back(2);
        return rule;
      }
      case RepFamily::custom: return r.custom_tau;
    }
    return {};
  }

  inline FreeEndo phi_letter(RepId const& r, Letter l, int rank) {
    if (l.index < 1 || l.index + 1 > rank) {
      throw RangeError("phi_letter: index " + std::to_string(l.index)
                       + " out of range for rank " + std::to_string(rank));
    }
    if (l.is_sigma()) {
      return local_endo(rank, artin_rule(l.exp), l.index);
    }
    if (l.exp < 0) {
      throw PreconditionError("phi_letter: the image of tau under "
                              + to_string(r)
                              + " is not known to be invertible");
    }
    return local_endo(rank, tau_rule(r), l.index);
  }

  inline FreeEndo phi_word(RepId const& r, BraidWord const& w) {
    FreeEndo  e   = FreeEndo::identity(w.strands());
    LocalRule tau = tau_rule(r);
    for (Letter l : w) {
      if (l.is_sigma()) {
        e = then_local(std::move(e), artin_rule(l.exp), l.index);
      } else if (l.exp > 0) {
        e = then_local(std::move(e), tau, l.index);
      } else {
        throw PreconditionError("phi_word: the image of tau under "
                                + to_string(r)
                                + " is not known to be invertible");
      }
    }
    return e;
  }

  struct RelationCheck {
    MonoidRelation relation;
    bool           holds;
  };

  inline std::vector<RelationCheck> check_rep_relations(RepId const& r,
                                                        int          strands) {
    std::vector<RelationCheck> out;
    for (auto& rel : sb_relations(strands)) {
      bool ok = phi_word(r, rel.lhs) == phi_word(r, rel.rhs);
      out.push_back({std::move(rel), ok});
    }
    return out;
  }

  inline bool rep_respects_relations(RepId const& r, int strands) {
    for (auto const& c : check_rep_relations(r, strands)) {
      if (!c.holds) {
        return false;
      }
    }
    return true;
  }

}  // namespace singbraid

#endif  // SINGBRAID_REPRESENT_HPP
