#ifndef SINGBRAID_ORACLE_HPP
#define SINGBRAID_ORACLE_HPP

// Exact equality of braid words.
//
// Classical words are compared through the Artin action on F_n, which is
// faithful. A tau-positive singular word is expanded by tau_i -> sigma_i -
// sigma_i^-1 into a signed sum of classical braids, each keyed by its Artin
// image; two singular words are equal in SB_n iff the expansions agree.
// Equations in SG_n whose tau^-1 letters come from conjugations are first
// rearranged into tau-positive form.
//
// Composition convention: for a word l_1 l_2 ... l_k the endomorphism is
// phi(l_1) o phi(l_2) o ... o phi(l_k), so phi(l_k) hits the generators
// first and the leftmost letter is applied last.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"
#include "singbraid/words.hpp"

namespace singbraid {

  // Action of one letter on the pair (x_i, x_{i+1}); other generators are
  // fixed. Local letters are +-1 for x_i and +-2 for x_{i+1}.
  struct LocalRule {
    std::vector<int> first;   // image of x_i
    std::vector<int> second;  // image of x_{i+1}

    friend bool operator==(LocalRule const&, LocalRule const&) = default;
  };

  namespace detail {
    inline void append_image(FreeWord& out, FreeWord const& img, bool inv) {
      if (!inv) {
        for (int x : img.letters()) {
          out.push_back(x);
        }
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend();
             ++it) {
          out.push_back(-*it);
        }
      }
    }

    inline FreeWord substitute_local(FreeEndo const&        e,
                                     int                    i,
                                     std::vector<int> const& local) {
      FreeWord out(e.rank());
      for (int l : local) {
        int g = (std::abs(l) == 1) ? i : i + 1;
        append_image(out, e.image(g), l < 0);
      }
      return out;
    }
  }  // namespace detail

  // e o rule_i, i.e. the endomorphism of the word extended on the right by
  // the letter acting on (x_i, x_{i+1}).
  inline FreeEndo then_local(FreeEndo e, LocalRule const& rule, int i) {
    FreeWord a = detail::substitute_local(e, i, rule.first);
    FreeWord b = detail::substitute_local(e, i, rule.second);
    e.set_image(i, std::move(a));
    e.set_image(i + 1, std::move(b));
    return e;
  }

  inline FreeEndo local_endo(int rank, LocalRule const& rule, int i) {
    return then_local(FreeEndo::identity(rank), rule, i);
  }

  inline LocalRule const& artin_rule(int exp) {
    // sigma_i:    x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
    // sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    static LocalRule const pos{{1, 2, -1}, {1}};
    static LocalRule const neg{{2}, {-2, 1, 2}};
    return exp > 0 ? pos : neg;
  }

  inline FreeEndo artin_endo(BraidWord const& w) {
    if (!w.is_sigma_only()) {
      throw PreconditionError("artin_endo: word contains a tau letter");
    }
    FreeEndo e = FreeEndo::identity(w.strands());
    for (Letter l : w) {
      e = then_local(std::move(e), artin_rule(l.exp), l.index);
    }
    return e;
  }

  inline bool braid_equal(BraidWord const& u, BraidWord const& v) {
    if (u.strands() != v.strands()) {
      throw PreconditionError("braid_equal: strand-count mismatch");
    }
    if (!u.is_sigma_only() || !v.is_sigma_only()) {
      throw PreconditionError("braid_equal: word contains a tau letter");
    }
    if (pi_image(u) != pi_image(v)) {
      return false;
    }
    return artin_endo(u) == artin_endo(v);
  }

  // Element of the monoid ring Z[B_n]: braid keys with nonzero coefficients.
  class ZBnElement {
   public:
    using key_type = std::string;

    void add(key_type const& key, long long coeff) {
      auto it = terms_.find(key);
      if (it == terms_.end()) {
        if (coeff != 0) {
          terms_.emplace(key, coeff);
        }
        return;
      }
      it->second += coeff;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }

    long long coefficient(key_type const& key) const {
      auto it = terms_.find(key);
      return it == terms_.end() ? 0 : it->second;
    }

    std::map<key_type, long long> const& terms() const noexcept {
      return terms_;
    }

    std::size_t size() const noexcept {
      return terms_.size();
    }

    friend bool operator==(ZBnElement const&, ZBnElement const&) = default;

   private:
    std::map<key_type, long long> terms_;
  };

  inline std::string normal_key(BraidWord const& w) {
    return encode_key(artin_endo(w));
  }

  inline constexpr std::size_t default_tau_budget = 16;

  inline ZBnElement desingularize(BraidWord const& w,
                                  std::size_t budget = default_tau_budget) {
    if (!w.is_tau_positive()) {
      throw PreconditionError("desingularize: word contains tau^-1");
    }
    if (w.tau_count() > budget) {
      throw BudgetExceeded("desingularize: " + std::to_string(w.tau_count())
                           + " tau letters exceed the budget of "
                           + std::to_string(budget));
    }
    ZBnElement result;
    auto const& letters = w.letters();
    // Depth-first over the 2^k branches, sharing the Artin image of prefixes.
    auto expand = [&](auto&& self, std::size_t pos, FreeEndo e,
                      long long sign) -> void {
      while (pos < letters.size() && letters[pos].is_sigma()) {
        e = then_local(std::move(e), artin_rule(letters[pos].exp),
                       letters[pos].index);
        ++pos;
      }
      if (pos == letters.size()) {
        result.add(encode_key(e), sign);
        return;
      }
      int i = letters[pos].index;
      self(self, pos + 1, then_local(e, artin_rule(1), i), sign);
      self(self, pos + 1, then_local(std::move(e), artin_rule(-1), i), -sign);
    };
    expand(expand, 0, FreeEndo::identity(w.strands()), 1);
    return result;
  }

  inline bool sb_equal(BraidWord const& u,
                       BraidWord const& v,
                       std::size_t      budget = default_tau_budget) {
    if (u.strands() != v.strands()) {
      throw PreconditionError("sb_equal: strand-count mismatch");
    }
    if (!u.is_tau_positive() || !v.is_tau_positive()) {
      throw PreconditionError("sb_equal: word contains tau^-1");
    }
    if (u.tau_count() != v.tau_count() || pi_image(u) != pi_image(v)) {
      return false;
    }
    return desingularize(u, budget) == desingularize(v, budget);
  }

  namespace detail {
    inline BraidWord slice(BraidWord const& w, std::size_t lo, std::size_t hi) {
      return BraidWord(w.strands(),
                       std::vector<Letter>(w.letters().begin() + lo,
                                           w.letters().begin() + hi));
    }

    // Moves a conjugator g across the equation when side = g^-1 X g or
    // side = g X g^-1 with g tau-positive. `side_is_lhs` selects which
    // argument is the conjugation.
    inline bool peel(BraidWord const& side,
                     BraidWord const& other,
                     bool             side_is_lhs,
                     std::pair<BraidWord, BraidWord>& out) {
      std::size_t n = side.size(), kmax = 0;
      while (2 * (kmax + 1) <= n
             && side[kmax] == side[n - 1 - kmax].inverse()) {
        ++kmax;
      }
      for (std::size_t k = kmax; k >= 1; --k) {
        BraidWord pre = slice(side, 0, k), mid = slice(side, k, n - k),
                  suf = slice(side, n - k, n);
        BraidWord a, b;
        if (suf.is_tau_positive()) {
          // g^-1 X g = R  <=>  X g = g R
          a = mid * suf;
          b = suf * other;
        } else if (pre.is_tau_positive()) {
          // g X g^-1 = R  <=>  g X = R g
          a = pre * mid;
          b = other * pre;
        } else {
          continue;
        }
        if (a.is_tau_positive() && b.is_tau_positive()) {
          out = side_is_lhs ? std::pair{a, b} : std::pair{b, a};
          return true;
        }
      }
      return false;
    }

    // L = R  <=>  the cyclic word L R^-1 is trivial. If its tau and tau^-1
    // letters occupy complementary arcs, rotate and split it as U V^-1.
    inline bool split_cyclic(BraidWord const& lhs,
                             BraidWord const& rhs,
                             std::pair<BraidWord, BraidWord>& out) {
      BraidWord           w = free_reduce(lhs * invert(rhs));
      std::vector<Letter> l = w.letters();
      while (l.size() >= 2 && l.front() == l.back().inverse()) {
        l.erase(l.begin());
        l.pop_back();
      }
      std::size_t const n = l.size();
      std::vector<std::size_t> taus;
      for (std::size_t k = 0; k < n; ++k) {
        if (l[k].is_tau()) {
          taus.push_back(k);
        }
      }
      BraidWord empty(lhs.strands());
      BraidWord cyc(lhs.strands(), l);
      bool any_neg = false, any_pos = false;
      for (auto k : taus) {
        (l[k].exp > 0 ? any_pos : any_neg) = true;
      }
      if (!any_neg) {
        out = {cyc, empty};
        return true;
      }
      if (!any_pos) {
        out = {empty, invert(cyc)};
        return true;
      }
      // Start right after a tau^-1 whose next tau letter is a tau^+.
      std::size_t changes = 0, start = 0;
      for (std::size_t t = 0; t < taus.size(); ++t) {
        Letter a = l[taus[t]], b = l[taus[(t + 1) % taus.size()]];
        if ((a.exp > 0) != (b.exp > 0)) {
          ++changes;
          if (a.exp < 0) {
            start = taus[t] + 1;
          }
        }
      }
      if (changes != 2) {
        return false;
      }
      std::vector<Letter> rot(l.begin() + start % n, l.end());
      rot.insert(rot.end(), l.begin(), l.begin() + start % n);
      std::size_t split = 0;
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (rot[k].is_tau() && rot[k].exp > 0) {
          split = k + 1;
        }
        if (rot[k].is_tau() && rot[k].exp < 0) {
          break;
        }
      }
      BraidWord r(lhs.strands(), rot);
      out = {slice(r, 0, split), invert(slice(r, split, rot.size()))};
      return true;
    }
  }  // namespace detail

  // Rewrites the SG_n equation lhs = rhs into an equivalent one with both
  // sides tau-positive. Conjugation shapes g^-1 X g are cleared outside-in;
  // otherwise the equation is treated as a cyclic relator.
  inline std::pair<BraidWord, BraidWord> to_tau_positive(BraidWord const& lhs,
                                                         BraidWord const& rhs) {
    if (lhs.strands() != rhs.strands()) {
      throw PreconditionError("to_tau_positive: strand-count mismatch");
    }
    if (lhs.is_tau_positive() && rhs.is_tau_positive()) {
      return {lhs, rhs};
    }
    std::pair<BraidWord, BraidWord> out;
    if (!lhs.is_tau_positive() && rhs.is_tau_positive()
        && detail::peel(lhs, rhs, true, out)) {
      return out;
    }
    if (!rhs.is_tau_positive() && lhs.is_tau_positive()
        && detail::peel(rhs, lhs, false, out)) {
      return out;
    }
    if (detail::split_cyclic(lhs, rhs, out)) {
      return out;
    }
    throw PreconditionError(
        "to_tau_positive: tau^-1 letters cannot be cleared (equation is not "
        "of conjugation shape)");
  }

  inline bool sg_identity_holds(BraidWord const& lhs,
                                BraidWord const& rhs,
                                std::size_t      budget = default_tau_budget) {
    auto [u, v] = to_tau_positive(lhs, rhs);
    return sb_equal(u, v, budget);
  }

}  // namespace singbraid

#endif  // SINGBRAID_ORACLE_HPP
