#ifndef SINGBRAID_TESTS_SUPPORT_HPP
#define SINGBRAID_TESTS_SUPPORT_HPP

#include <random>

#include "singbraid/words.hpp"

namespace singbraid::testing {

  struct WordShape {
    int         strands   = 3;
    std::size_t length    = 8;
    double      tau_share = 0.0;   // probability that a letter is a tau
    bool        tau_inverse = false;
  };

  inline BraidWord random_word(std::mt19937_64& rng, WordShape const& s) {
    std::uniform_int_distribution<int>     idx(1, s.strands - 1);
    std::uniform_int_distribution<int>     sign(0, 1);
    std::bernoulli_distribution            is_tau(s.tau_share);
    BraidWord                              w(s.strands);
    for (std::size_t k = 0; k < s.length; ++k) {
      int i = idx(rng);
      if (is_tau(rng)) {
        w.push_back(Letter::tau(i, s.tau_inverse && sign(rng) ? -1 : 1));
      } else {
        w.push_back(Letter::sigma(i, sign(rng) ? 1 : -1));
      }
    }
    return w;
  }

}  // namespace singbraid::testing

#endif  // SINGBRAID_TESTS_SUPPORT_HPP
