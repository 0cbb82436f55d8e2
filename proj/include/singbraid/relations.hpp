#ifndef SINGBRAID_RELATIONS_HPP
#define SINGBRAID_RELATIONS_HPP

// Defining relations of the singular braid monoid SB_n, fully instantiated.

#include <cstdlib>
#include <string>
#include <vector>

#include "singbraid/words.hpp"

namespace singbraid {

  struct MonoidRelation {
    std::string label;  // eq1, eq2, eq12 .. eq16
    std::string indices;
    BraidWord   lhs;
    BraidWord   rhs;
  };

  inline std::vector<MonoidRelation> sb_relations(int n) {
    using L = Letter;
    std::vector<MonoidRelation> out;
    auto add = [&](std::string label, std::string idx,
                   std::vector<Letter> lhs, std::vector<Letter> rhs) {
      out.push_back({std::move(label), std::move(idx),
                     BraidWord(n, std::move(lhs)),
                     BraidWord(n, std::move(rhs))});
    };
    auto pair_str = [](int i, int j) {
      return "i=" + std::to_string(i) + ",j=" + std::to_string(j);
    };
    for (int i = 1; i + 1 <= n - 1; ++i) {
      add("eq1", "i=" + std::to_string(i),
          {L::sigma(i), L::sigma(i + 1), L::sigma(i)},
          {L::sigma(i + 1), L::sigma(i), L::sigma(i + 1)});
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = i + 2; j <= n - 1; ++j) {
        add("eq2", pair_str(i, j), {L::sigma(i), L::sigma(j)},
            {L::sigma(j), L::sigma(i)});
        add("eq12", pair_str(i, j), {L::tau(i), L::tau(j)},
            {L::tau(j), L::tau(i)});
      }
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) {
          add("eq13", pair_str(i, j), {L::tau(i), L::sigma(j)},
              {L::sigma(j), L::tau(i)});
        }
      }
    }
    for (int i = 1; i <= n - 1; ++i) {
      add("eq14", "i=" + std::to_string(i), {L::tau(i), L::sigma(i)},
          {L::sigma(i), L::tau(i)});
    }
    for (int i = 1; i + 1 <= n - 1; ++i) {
      add("eq15", "i=" + std::to_string(i),
          {L::sigma(i), L::sigma(i + 1), L::tau(i)},
          {L::tau(i + 1), L::sigma(i), L::sigma(i + 1)});
      add("eq16", "i=" + std::to_string(i),
          {L::sigma(i + 1), L::sigma(i), L::tau(i + 1)},
          {L::tau(i), L::sigma(i + 1), L::sigma(i)});
    }
    return out;
  }

}  // namespace singbraid

#endif  // SINGBRAID_RELATIONS_HPP
