#ifndef SINGBRAID_PRESENTATION_HPP
#define SINGBRAID_PRESENTATION_HPP

// Finitely presented groups <generators | relators> and their text forms.

#include <string>
#include <vector>

#include "json.hpp"

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"

namespace singbraid {

  struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<FreeWord>    relators;

    int rank() const noexcept {
      return static_cast<int>(generators.size());
    }

    void add_relator(FreeWord w) {
      if (w.rank() != rank()) {
        throw RangeError("GroupPresentation: relator rank "
                         + std::to_string(w.rank()) + " but "
                         + std::to_string(rank()) + " generators");
      }
      relators.push_back(std::move(w));
    }

    static GroupPresentation free(int rank, std::string const& prefix = "x") {
      GroupPresentation p;
      for (int g = 1; g <= rank; ++g) {
        p.generators.push_back(prefix + std::to_string(g));
      }
      return p;
    }
  };

  inline std::string to_string(GroupPresentation const& p) {
    std::string out = "<";
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      out += (g ? ", " : " ") + p.generators[g];
    }
    out += " |";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      out += (r ? ", " : " ") + to_string(p.relators[r], p.generators);
    }
    return out + " >";
  }

  // {"generators": [...], "relators": [[[g, e], ...], ...]} with 1-based
  // generator numbers and nonzero syllable exponents.
  inline nlohmann::json to_json(GroupPresentation const& p) {
    nlohmann::json rels = nlohmann::json::array();
    for (auto const& r : p.relators) {
      nlohmann::json syl = nlohmann::json::array();
      for (auto [g, e] : r.syllables()) {
        syl.push_back({g, e});
      }
      rels.push_back(std::move(syl));
    }
    return {{"generators", p.generators}, {"relators", std::move(rels)}};
  }

  inline GroupPresentation presentation_from_json(nlohmann::json const& j) {
    GroupPresentation p;
    try {
      p.generators = j.at("generators").get<std::vector<std::string>>();
      for (auto const& rel : j.at("relators")) {
        std::vector<std::pair<int, int>> syl;
        for (auto const& s : rel) {
          syl.emplace_back(s.at(0).get<int>(), s.at(1).get<int>());
        }
        p.add_relator(FreeWord::from_syllables(p.rank(), syl));
      }
    } catch (nlohmann::json::exception const& e) {
      throw SyntaxError(std::string("presentation JSON: ") + e.what());
    }
    return p;
  }

  // GAP input: F := FreeGroup("a12", ...); rels := [ ... ];
  inline std::string to_gap(GroupPresentation const& p) {
    std::string out = "F := FreeGroup(";
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      out += (g ? ", \"" : "\"") + p.generators[g] + "\"";
    }
    if (p.generators.empty()) {
      out += "0";
    }
    out += ");\n";
    out += "rels := [";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      out += r ? ",\n  " : "\n  ";
      auto syl = p.relators[r].syllables();
      if (syl.empty()) {
        out += "One(F)";
      }
      for (std::size_t s = 0; s < syl.size(); ++s) {
        out += (s ? "*" : "") + std::string("F.")
               + std::to_string(syl[s].first);
        if (syl[s].second != 1) {
          out += "^" + std::to_string(syl[s].second);
        }
      }
    }
    out += p.relators.empty() ? "];\n" : "\n];\n";
    out += "G := F / rels;\n";
    return out;
  }

}  // namespace singbraid

#endif  // SINGBRAID_PRESENTATION_HPP
