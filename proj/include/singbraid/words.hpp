#ifndef SINGBRAID_WORDS_HPP
#define SINGBRAID_WORDS_HPP

// Braid words over {sigma_i, tau_i}, their text form, and the two
// homomorphisms onto the symmetric group.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "singbraid/errors.hpp"

namespace singbraid {

  enum class LetterKind { sigma, tau };

  struct Letter {
    LetterKind kind  = LetterKind::sigma;
    int        index = 1;  // 1-based, 1 <= index <= strands - 1
    int        exp   = 1;  // +1 or -1

    static constexpr Letter sigma(int i, int e = 1) {
      return {LetterKind::sigma, i, e};
    }
    static constexpr Letter tau(int i, int e = 1) {
      return {LetterKind::tau, i, e};
    }

    constexpr bool is_sigma() const noexcept {
      return kind == LetterKind::sigma;
    }
    constexpr bool is_tau() const noexcept {
      return kind == LetterKind::tau;
    }
    constexpr Letter inverse() const noexcept {
      return {kind, index, -exp};
    }

    friend constexpr bool operator==(Letter const&, Letter const&) = default;
    friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
  };

  // Permutation of {1..n}; images[x - 1] is the image of x.
  class Perm {
   public:
    Perm() = default;

    explicit Perm(std::size_t n) : images_(n) {
      std::iota(images_.begin(), images_.end(), 1);
    }

    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
      std::vector<bool> seen(images_.size(), false);
      for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
          throw RangeError("Perm: images do not form a permutation");
        }
        seen[v - 1] = true;
      }
    }

    static Perm transposition(std::size_t n, int a, int b) {
      Perm p(n);
      std::swap(p.images_[a - 1], p.images_[b - 1]);
      return p;
    }

    std::size_t size() const noexcept {
      return images_.size();
    }

    int operator()(int x) const {
      return images_.at(x - 1);
    }

    std::vector<int> const& images() const noexcept {
      return images_;
    }

    bool is_identity() const noexcept {
      for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] != static_cast<int>(k + 1)) {
          return false;
        }
      }
      return true;
    }

    // Left-to-right product: (p * q)(x) = q(p(x)).
    friend Perm operator*(Perm const& p, Perm const& q) {
      Perm r(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        r.images_[k] = q.images_[p.images_[k] - 1];
      }
      return r;
    }

    Perm inverse() const {
      Perm r(size());
      for (std::size_t k = 0; k < size(); ++k) {
        r.images_[images_[k] - 1] = static_cast<int>(k + 1);
      }
      return r;
    }

    // Disjoint-cycle notation, fixed points omitted; "()" for identity.
    std::string to_cycles() const {
      std::string      out;
      std::vector<int> seen(size(), 0);
      for (std::size_t s = 1; s <= size(); ++s) {
        if (seen[s - 1] || images_[s - 1] == static_cast<int>(s)) {
          continue;
        }
        out += '(';
        int x = static_cast<int>(s);
        do {
          seen[x - 1] = 1;
          if (out.back() != '(') {
            out += ' ';
          }
          out += std::to_string(x);
          x = images_[x - 1];
        } while (x != static_cast<int>(s));
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    friend bool operator==(Perm const&, Perm const&) = default;
    friend auto operator<=>(Perm const&, Perm const&) = default;

   private:
    std::vector<int> images_;
  };

  class BraidWord {
   public:
    BraidWord() = default;

    explicit BraidWord(int strands) : strands_(strands) {
      if (strands < 2) {
        throw RangeError("BraidWord: strand count must be at least 2");
      }
    }

    BraidWord(int strands, std::vector<Letter> letters)
        : BraidWord(strands) {
      for (Letter const& l : letters) {
        push_back(l);
      }
    }

    int strands() const noexcept {
      return strands_;
    }
    std::vector<Letter> const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter const& operator[](std::size_t k) const {
      return letters_[k];
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    void push_back(Letter l) {
      if (l.index < 1 || l.index > strands_ - 1) {
        throw RangeError("letter index " + std::to_string(l.index)
                         + " out of range for " + std::to_string(strands_)
                         + " strands");
      }
      if (l.exp != 1 && l.exp != -1) {
        throw RangeError("letter exponent must be +1 or -1");
      }
      letters_.push_back(l);
    }

    BraidWord& operator*=(BraidWord const& v) {
      if (v.strands_ != strands_) {
        throw PreconditionError("concat: strand-count mismatch");
      }
      letters_.insert(letters_.end(), v.letters_.begin(), v.letters_.end());
      return *this;
    }

    std::size_t tau_count() const noexcept {
      return std::count_if(letters_.begin(), letters_.end(), [](Letter l) {
        return l.is_tau();
      });
    }

    bool is_sigma_only() const noexcept {
      return tau_count() == 0;
    }

    bool is_tau_positive() const noexcept {
      return std::none_of(letters_.begin(), letters_.end(), [](Letter l) {
        return l.is_tau() && l.exp < 0;
      });
    }

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    int                 strands_ = 2;
    std::vector<Letter> letters_;
  };

  // Monoid product; no simplification.
  inline BraidWord concat(BraidWord u, BraidWord const& v) {
    u *= v;
    return u;
  }

  inline BraidWord operator*(BraidWord u, BraidWord const& v) {
    u *= v;
    return u;
  }

  inline BraidWord invert(BraidWord const& w) {
    BraidWord r(w.strands());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      r.push_back(it->inverse());
    }
    return r;
  }

  inline BraidWord mirror(BraidWord const& w) {
    BraidWord r(w.strands());
    for (Letter l : w) {
      if (l.is_sigma()) {
        l.exp = -l.exp;
      }
      r.push_back(l);
    }
    return r;
  }

  // Same letters on more strands (used for stabilization).
  inline BraidWord widen(BraidWord const& w, int strands) {
    if (strands < w.strands()) {
      throw PreconditionError("widen: cannot reduce the strand count");
    }
    return BraidWord(strands, w.letters());
  }

  // Free reduction of adjacent x x^-1 pairs (valid in SG_n).
  inline BraidWord free_reduce(BraidWord const& w) {
    std::vector<Letter> out;
    for (Letter l : w) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return BraidWord(w.strands(), std::move(out));
  }

  inline Perm pi_image(BraidWord const& w) {
    Perm p(static_cast<std::size_t>(w.strands()));
    for (Letter l : w) {
      p = p * Perm::transposition(p.size(), l.index, l.index + 1);
    }
    return p;
  }

  // sigma_i -> e, tau_i -> (i, i+1); the kernel is ST_n.
  inline Perm theta_image(BraidWord const& w) {
    Perm p(static_cast<std::size_t>(w.strands()));
    for (Letter l : w) {
      if (l.is_tau()) {
        p = p * Perm::transposition(p.size(), l.index, l.index + 1);
      }
    }
    return p;
  }

  inline bool in_pure_subgroup(BraidWord const& w) {
    return pi_image(w).is_identity();
  }

  inline bool in_st_subgroup(BraidWord const& w) {
    return theta_image(w).is_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form: s<i> = sigma_i, S<i> = sigma_i^-1, t<i> = tau_i,
  // T<i> = tau_i^-1, whitespace separated.
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Letter l) {
    char c = l.is_sigma() ? (l.exp > 0 ? 's' : 'S') : (l.exp > 0 ? 't' : 'T');
    return c + std::to_string(l.index);
  }

  inline std::string to_string(BraidWord const& w) {
    std::string out;
    for (Letter l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(l);
    }
    return out;
  }

  inline BraidWord parse_braid(std::string_view text, int strands) {
    BraidWord          w(strands);
    std::istringstream in{std::string(text)};
    std::string        tok;
    while (in >> tok) {
      if (tok.size() < 2) {
        throw SyntaxError("bad braid token '" + tok + "'");
      }
      Letter l;
      switch (tok[0]) {
        case 's': l = Letter::sigma(0, 1); break;
        case 'S': l = Letter::sigma(0, -1); break;
        case 't': l = Letter::tau(0, 1); break;
        case 'T': l = Letter::tau(0, -1); break;
        default: throw SyntaxError("bad braid token '" + tok + "'");
      }
      if (!std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) {
            return std::isdigit(c);
          })
          || tok.size() > 6) {
        throw SyntaxError("bad braid token '" + tok + "'");
      }
      l.index = std::stoi(tok.substr(1));
      w.push_back(l);  // throws RangeError on a bad index
    }
    return w;
  }

}  // namespace singbraid

#endif  // SINGBRAID_WORDS_HPP
