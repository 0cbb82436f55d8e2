#ifndef SINGBRAID_FREE_GROUP_HPP
#define SINGBRAID_FREE_GROUP_HPP

// Reduced words in a free group F_n = <x_1, ..., x_n> and endomorphisms of
// F_n given by the images of the generators.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "singbraid/errors.hpp"

namespace singbraid {

  // A reduced word. Letters are signed generator numbers: +g is x_g and
  // -g is x_g^-1, with 1 <= g <= rank.
  class FreeWord {
   public:
    FreeWord() = default;

    explicit FreeWord(int rank) : rank_(rank) {}

    FreeWord(int rank, std::vector<int> const& letters) : rank_(rank) {
      for (int l : letters) {
        push_back(l);
      }
    }

    static FreeWord generator(int rank, int g, int exp = 1) {
      FreeWord w(rank);
      for (int k = 0; k < std::abs(exp); ++k) {
        w.push_back(exp > 0 ? g : -g);
      }
      return w;
    }

    // (generator, nonzero exponent) pairs; adjacent generators differ.
    static FreeWord from_syllables(int                                  rank,
                                   std::vector<std::pair<int, int>> const& s) {
      FreeWord w(rank);
      for (auto [g, e] : s) {
        w *= generator(rank, g, e);
      }
      return w;
    }

    int rank() const noexcept {
      return rank_;
    }
    std::vector<int> const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }

    // Appends one letter, cancelling against the last letter if possible.
    void push_back(int l) {
      if (l == 0 || std::abs(l) > rank_) {
        throw RangeError("FreeWord: generator " + std::to_string(l)
                         + " out of range for rank " + std::to_string(rank_));
      }
      if (!letters_.empty() && letters_.back() == -l) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }

    std::vector<std::pair<int, int>> syllables() const {
      std::vector<std::pair<int, int>> out;
      for (int l : letters_) {
        int g = std::abs(l), e = l > 0 ? 1 : -1;
        if (!out.empty() && out.back().first == g) {
          out.back().second += e;
        } else {
          out.emplace_back(g, e);
        }
      }
      return out;
    }

    FreeWord inverse() const {
      FreeWord r(rank_);
      r.letters_.reserve(letters_.size());
      for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        r.letters_.push_back(-*it);
      }
      return r;
    }

    FreeWord pow(int k) const {
      FreeWord base = k < 0 ? inverse() : *this;
      FreeWord r(rank_);
      for (int t = 0; t < std::abs(k); ++t) {
        r *= base;
      }
      return r;
    }

    FreeWord& operator*=(FreeWord const& v) {
      for (int l : v.letters_) {
        push_back(l);
      }
      return *this;
    }

    friend FreeWord operator*(FreeWord u, FreeWord const& v) {
      u *= v;
      return u;
    }

    // Exponent sum of each generator (abelianization image).
    std::vector<long long> exponent_sums() const {
      std::vector<long long> s(rank_, 0);
      for (int l : letters_) {
        s[std::abs(l) - 1] += l > 0 ? 1 : -1;
      }
      return s;
    }

    bool mentions(int g) const {
      return std::any_of(letters_.begin(), letters_.end(), [g](int l) {
        return std::abs(l) == g;
      });
    }

    friend bool operator==(FreeWord const&, FreeWord const&) = default;
    friend auto operator<=>(FreeWord const&, FreeWord const&) = default;

   private:
    int              rank_ = 0;
    std::vector<int> letters_;
  };

  // Strips letters that cancel cyclically (w = u v u^-1 -> v).
  inline FreeWord cyclic_reduce(FreeWord const& w) {
    auto const&  l = w.letters();
    std::size_t  lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
      ++lo;
      --hi;
    }
    return FreeWord(w.rank(),
                    std::vector<int>(l.begin() + lo, l.begin() + hi));
  }

  // Representative of the relator class of w: least rotation (letter-code
  // order) of the cyclic reductions of w and w^-1. Two relators generate
  // the same normal closure trivially iff their canonical forms agree.
  inline FreeWord relator_canonical(FreeWord const& w) {
    FreeWord best;
    bool     have = false;
    for (FreeWord const& c : {cyclic_reduce(w), cyclic_reduce(w.inverse())}) {
      std::vector<int> const& l = c.letters();
      for (std::size_t r = 0; r < std::max<std::size_t>(l.size(), 1); ++r) {
        std::vector<int> rot(l.begin() + r, l.end());
        rot.insert(rot.end(), l.begin(), l.begin() + r);
        FreeWord cand(w.rank(), rot);
        if (!have || cand < best) {
          best = cand;
          have = true;
        }
      }
    }
    return best;
  }

  inline bool same_relator(FreeWord const& u, FreeWord const& v) {
    return relator_canonical(u) == relator_canonical(v);
  }

  // x1 x2^-1 ...; "1" for the empty word.
  inline std::string to_string(FreeWord const& w,
                               std::vector<std::string> const& names = {}) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto [g, e] : w.syllables()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += names.empty() ? "x" + std::to_string(g) : names[g - 1];
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
    }
    return out;
  }

  // An endomorphism of F_n, stored by the reduced images of x_1..x_n.
  class FreeEndo {
   public:
    FreeEndo() = default;

    static FreeEndo identity(int rank) {
      FreeEndo e;
      e.rank_ = rank;
      for (int g = 1; g <= rank; ++g) {
        e.images_.push_back(FreeWord::generator(rank, g));
      }
      return e;
    }

    FreeEndo(int rank, std::vector<FreeWord> images)
        : rank_(rank), images_(std::move(images)) {
      if (static_cast<int>(images_.size()) != rank_) {
        throw PreconditionError("FreeEndo: need one image per generator");
      }
      for (auto const& w : images_) {
        if (w.rank() != rank_) {
          throw PreconditionError("FreeEndo: image rank mismatch");
        }
      }
    }

    int rank() const noexcept {
      return rank_;
    }
    std::vector<FreeWord> const& images() const noexcept {
      return images_;
    }
    FreeWord const& image(int g) const {
      return images_.at(g - 1);
    }
    void set_image(int g, FreeWord w) {
      images_.at(g - 1) = std::move(w);
    }

    // Substitutes the images into w.
    FreeWord apply(FreeWord const& w) const {
      FreeWord r(rank_);
      for (int l : w.letters()) {
        FreeWord const& img = images_[std::abs(l) - 1];
        if (l > 0) {
          for (int x : img.letters()) {
            r.push_back(x);
          }
        } else {
          for (auto it = img.letters().rbegin(); it != img.letters().rend();
               ++it) {
            r.push_back(-*it);
          }
        }
      }
      return r;
    }

    // (this o g)(x) = this(g(x)): g is applied to the generators first.
    FreeEndo after(FreeEndo const& g) const {
      FreeEndo r;
      r.rank_ = rank_;
      for (auto const& img : g.images_) {
        r.images_.push_back(apply(img));
      }
      return r;
    }

    bool is_identity() const {
      return *this == identity(rank_);
    }

    std::size_t total_length() const noexcept {
      std::size_t s = 0;
      for (auto const& w : images_) {
        s += w.size();
      }
      return s;
    }

    friend bool operator==(FreeEndo const&, FreeEndo const&) = default;

   private:
    int                   rank_ = 0;
    std::vector<FreeWord> images_;
  };

  // Canonical byte encoding of an endomorphism: for each image a 4-byte
  // little-endian length, then each letter as 2-byte little-endian signed.
  inline std::string encode_key(FreeEndo const& e) {
    std::string key;
    auto put16 = [&key](int v) {
      auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(v));
      key.push_back(static_cast<char>(u & 0xff));
      key.push_back(static_cast<char>(u >> 8));
    };
    for (auto const& w : e.images()) {
      auto n = static_cast<std::uint32_t>(w.size());
      for (int b = 0; b < 4; ++b) {
        key.push_back(static_cast<char>((n >> (8 * b)) & 0xff));
      }
      for (int l : w.letters()) {
        put16(l);
      }
    }
    return key;
  }

}  // namespace singbraid

#endif  // SINGBRAID_FREE_GROUP_HPP
