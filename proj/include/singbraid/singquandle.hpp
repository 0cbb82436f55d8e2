#ifndef SINGBRAID_SINGQUANDLE_HPP
#define SINGBRAID_SINGQUANDLE_HPP

// Oriented singquandles: terms of the free object, the action of SB_n on
// them, fundamental presentations of closures, and finite models.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "singbraid/errors.hpp"
#include "singbraid/relations.hpp"
#include "singbraid/words.hpp"

namespace singbraid {

  enum class SQOp { star, starbar, circ_l, circ_r };

  inline char const* op_symbol(SQOp op) {
    switch (op) {
      case SQOp::star: return "*";
      case SQOp::starbar: return "*~";
      case SQOp::circ_l: return "o_l";
      case SQOp::circ_r: return "o_r";
    }
    return "?";
  }

  // Immutable term; subterms are shared, so images of long braids stay
  // linear in size.
  class SQTerm {
    struct Node {
      int    gen;  // > 0 for a generator, 0 for an operation node
      SQOp   op;
      std::shared_ptr<Node const> left, right;
    };

   public:
    SQTerm() = default;

    static SQTerm gen(int g) {
      if (g < 1) {
        throw RangeError("SQTerm: generator index must be positive");
      }
      SQTerm t;
      t.p_ = std::make_shared<Node const>(Node{g, SQOp::star, {}, {}});
      return t;
    }

    // Builds l op r, applying the cancellations valid in every singquandle:
    // x * x = x, x *~ x = x, (a *~ b) * b = a, (a * b) *~ b = a.
    static SQTerm make(SQOp op, SQTerm const& l, SQTerm const& r) {
      if ((op == SQOp::star || op == SQOp::starbar) && l == r) {
        return l;
      }
      if (op == SQOp::star && !l.is_gen() && l.op() == SQOp::starbar
          && l.right() == r) {
        return l.left();
      }
      if (op == SQOp::starbar && !l.is_gen() && l.op() == SQOp::star
          && l.right() == r) {
        return l.left();
      }
      SQTerm t;
      t.p_ = std::make_shared<Node const>(Node{0, op, l.p_, r.p_});
      return t;
    }

    bool is_gen() const {
      return p_->gen > 0;
    }
    int generator() const {
      return p_->gen;
    }
    SQOp op() const {
      return p_->op;
    }
    SQTerm left() const {
      return SQTerm(p_->left);
    }
    SQTerm right() const {
      return SQTerm(p_->right);
    }
    void const* id() const noexcept {
      return p_.get();
    }

    std::size_t depth() const {
      return is_gen() ? 0 : 1 + std::max(left().depth(), right().depth());
    }

    int max_generator() const {
      return is_gen() ? generator()
                      : std::max(left().max_generator(),
                                 right().max_generator());
    }

    friend bool operator==(SQTerm const& a, SQTerm const& b) {
      if (a.p_ == b.p_) {
        return true;
      }
      if (a.is_gen() || b.is_gen()) {
        return a.is_gen() && b.is_gen() && a.generator() == b.generator();
      }
      return a.op() == b.op() && a.left() == b.left()
             && a.right() == b.right();
    }

   private:
    explicit SQTerm(std::shared_ptr<Node const> p) : p_(std::move(p)) {}

    std::shared_ptr<Node const> p_;
  };

  inline SQTerm operator*(SQTerm const& a, SQTerm const& b) {
    return SQTerm::make(SQOp::star, a, b);
  }

  inline std::string to_string(SQTerm const& t,
                               std::string const& prefix = "x") {
    if (t.is_gen()) {
      return prefix + std::to_string(t.generator());
    }
    auto side = [&](SQTerm const& s) {
      return s.is_gen() ? to_string(s, prefix)
                        : "(" + to_string(s, prefix) + ")";
    };
    return side(t.left()) + " " + op_symbol(t.op()) + " " + side(t.right());
  }

  // Replaces generator g by images[g - 1].
  inline SQTerm substitute(SQTerm const& t, std::vector<SQTerm> const& images) {
    std::unordered_map<void const*, SQTerm> memo;
    std::function<SQTerm(SQTerm const&)> go = [&](SQTerm const& s) {
      if (s.is_gen()) {
        return images.at(s.generator() - 1);
      }
      auto it = memo.find(s.id());
      if (it != memo.end()) {
        return it->second;
      }
      SQTerm r = SQTerm::make(s.op(), go(s.left()), go(s.right()));
      memo.emplace(s.id(), r);
      return r;
    };
    return go(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Action of SB_n
  ////////////////////////////////////////////////////////////////////////

  // Images of x_1..x_n under the word, composed like the free-group
  // representations: the last letter acts on the generators first.
  //   s_i:    x_i -> x_{i+1},          x_{i+1} -> x_i * x_{i+1}
  //   s_i^-1: x_i -> x_{i+1} *~ x_i,   x_{i+1} -> x_i
  //   t_i:    x_i -> x_i o_l x_{i+1},  x_{i+1} -> x_i o_r x_{i+1}
  inline std::vector<SQTerm> sq_phi_word(BraidWord const& w) {
    if (!w.is_tau_positive()) {
      throw PreconditionError("sq_phi_word: word contains tau^-1");
    }
    std::vector<SQTerm> img;
    for (int g = 1; g <= w.strands(); ++g) {
      img.push_back(SQTerm::gen(g));
    }
    for (Letter l : w) {
      SQTerm a = img[l.index - 1], b = img[l.index];
      if (l.is_sigma() && l.exp > 0) {
        img[l.index - 1] = b;
        img[l.index]     = a * b;
      } else if (l.is_sigma()) {
        img[l.index - 1] = SQTerm::make(SQOp::starbar, b, a);
        img[l.index]     = a;
      } else {
        img[l.index - 1] = SQTerm::make(SQOp::circ_l, a, b);
        img[l.index]     = SQTerm::make(SQOp::circ_r, a, b);
      }
    }
    return img;
  }

  struct SQPresentation {
    int                                   rank = 0;
    std::vector<std::pair<SQTerm, SQTerm>> relations;
  };

  // <x_1..x_n | x_i = Phi(w)(x_i)>, omitting relations that hold trivially.
  inline SQPresentation fundamental_singquandle(BraidWord const& w) {
    SQPresentation p;
    p.rank   = w.strands();
    auto img = sq_phi_word(w);
    for (int g = 1; g <= p.rank; ++g) {
      SQTerm x = SQTerm::gen(g);
      if (!(img[g - 1] == x)) {
        p.relations.emplace_back(x, img[g - 1]);
      }
    }
    return p;
  }

  inline std::string to_string(SQPresentation const& p,
                               std::string const& prefix = "x") {
    std::string out = "<";
    for (int g = 1; g <= p.rank; ++g) {
      out += (g > 1 ? ", " : " ") + prefix + std::to_string(g);
    }
    out += " |";
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
      out += (r ? ", " : " ") + to_string(p.relations[r].first, prefix)
             + " = " + to_string(p.relations[r].second, prefix);
    }
    return out + " >";
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite models
  ////////////////////////////////////////////////////////////////////////

  class FiniteSingquandle {
   public:
    FiniteSingquandle() = default;

    // Tables are row-major, entry [x * q + y] is x op y, elements 0..q-1.
    FiniteSingquandle(int              q,
                      std::vector<int> star,
                      std::vector<int> circ_l,
                      std::vector<int> circ_r)
        : q_(q),
          star_(std::move(star)),
          circ_l_(std::move(circ_l)),
          circ_r_(std::move(circ_r)),
          starbar_(q * q, -1) {
      std::size_t cells = static_cast<std::size_t>(q) * q;
      if (q < 1 || star_.size() != cells || circ_l_.size() != cells
          || circ_r_.size() != cells) {
        throw PreconditionError("FiniteSingquandle: table size mismatch");
      }
      for (auto const* t : {&star_, &circ_l_, &circ_r_}) {
        for (int v : *t) {
          if (v < 0 || v >= q) {
            throw RangeError("FiniteSingquandle: table entry out of range");
          }
        }
      }
      for (int y = 0; y < q; ++y) {
        for (int x = 0; x < q; ++x) {
          int& slot = starbar_[star_[x * q + y] * q + y];
          if (slot != -1) {
            throw PreconditionError(
                "FiniteSingquandle: right translation by "
                + std::to_string(y) + " is not a bijection");
          }
          slot = x;
        }
      }
    }

    int order() const noexcept {
      return q_;
    }
    std::vector<int> const& star_table() const noexcept {
      return star_;
    }
    std::vector<int> const& circ_l_table() const noexcept {
      return circ_l_;
    }
    std::vector<int> const& circ_r_table() const noexcept {
      return circ_r_;
    }

    int star(int x, int y) const {
      return star_[x * q_ + y];
    }
    int starbar(int x, int y) const {
      return starbar_[x * q_ + y];
    }
    int circ_l(int x, int y) const {
      return circ_l_[x * q_ + y];
    }
    int circ_r(int x, int y) const {
      return circ_r_[x * q_ + y];
    }

    int apply(SQOp op, int x, int y) const {
      switch (op) {
        case SQOp::star: return star(x, y);
        case SQOp::starbar: return starbar(x, y);
        case SQOp::circ_l: return circ_l(x, y);
        case SQOp::circ_r: return circ_r(x, y);
      }
      return -1;
    }

    friend bool operator==(FiniteSingquandle const& a,
                           FiniteSingquandle const& b) {
      return a.q_ == b.q_ && a.star_ == b.star_ && a.circ_l_ == b.circ_l_
             && a.circ_r_ == b.circ_r_;
    }
    friend bool operator<(FiniteSingquandle const& a,
                          FiniteSingquandle const& b) {
      return std::tie(a.q_, a.star_, a.circ_l_, a.circ_r_)
             < std::tie(b.q_, b.star_, b.circ_l_, b.circ_r_);
    }

   private:
    int              q_ = 0;
    std::vector<int> star_, circ_l_, circ_r_, starbar_;
  };

  // Names of the axioms that fail (empty when the model is a singquandle).
  inline std::vector<std::string> failed_axioms(FiniteSingquandle const& m) {
    int const                q = m.order();
    std::vector<std::string> bad;
    auto                     note = [&bad](char const* name) {
      if (std::find(bad.begin(), bad.end(), name) == bad.end()) {
        bad.emplace_back(name);
      }
    };
    for (int x = 0; x < q; ++x) {
      if (m.star(x, x) != x) {
        note("Q1");
      }
    }
    // Q2 is enforced by the constructor (starbar exists).
    for (int x = 0; x < q; ++x) {
      for (int y = 0; y < q; ++y) {
        if (m.circ_r(x, y) != m.circ_l(y, m.star(x, y))) {
          note("re4");
        }
        if (m.star(m.circ_l(x, y), m.circ_r(x, y))
            != m.circ_r(y, m.star(x, y))) {
          note("re5");
        }
        for (int z = 0; z < q; ++z) {
          if (m.star(m.star(x, y), z) != m.star(m.star(x, z), m.star(y, z))) {
            note("Q3");
          }
          if (m.star(m.circ_l(x, y), z)
              != m.circ_l(m.star(x, z), m.star(y, z))) {
            note("re1-l");
          }
          if (m.star(m.circ_r(x, y), z)
              != m.circ_r(m.star(x, z), m.star(y, z))) {
            note("re1-r");
          }
          if (m.starbar(m.circ_l(x, y), z)
              != m.circ_l(m.starbar(x, z), m.starbar(y, z))) {
            note("re2-l");
          }
          if (m.starbar(m.circ_r(x, y), z)
              != m.circ_r(m.starbar(x, z), m.starbar(y, z))) {
            note("re2-r");
          }
          if (m.star(m.starbar(y, m.circ_l(x, z)), x)
              != m.starbar(m.star(y, m.circ_r(x, z)), z)) {
            note("re3");
          }
        }
      }
    }
    return bad;
  }

  inline bool is_singquandle(FiniteSingquandle const& m) {
    return failed_axioms(m).empty();
  }

  // Evaluates a term; assignment[g - 1] is the value of x_g.
  inline int eval_term(FiniteSingquandle const& m,
                       SQTerm const&            t,
                       std::vector<int> const&  assignment) {
    std::unordered_map<void const*, int> memo;
    std::function<int(SQTerm const&)>    go = [&](SQTerm const& s) {
      if (s.is_gen()) {
        return assignment.at(s.generator() - 1);
      }
      auto it = memo.find(s.id());
      if (it != memo.end()) {
        return it->second;
      }
      int v = m.apply(s.op(), go(s.left()), go(s.right()));
      memo.emplace(s.id(), v);
      return v;
    };
    return go(t);
  }

  // A batch of terms flattened into straight-line code over shared
  // subterms, for evaluating the same terms under many assignments.
  class TermProgram {
   public:
    explicit TermProgram(std::vector<SQTerm> const& roots) {
      std::unordered_map<void const*, int> slot;
      std::function<int(SQTerm const&)>    visit = [&](SQTerm const& t) {
        auto it = slot.find(t.id());
        if (it != slot.end()) {
          return it->second;
        }
        Step st{};
        if (t.is_gen()) {
          st.gen = t.generator();
        } else {
          st.op    = t.op();
          st.left  = visit(t.left());
          st.right = visit(t.right());
        }
        steps_.push_back(st);
        int s = static_cast<int>(steps_.size()) - 1;
        slot.emplace(t.id(), s);
        return s;
      };
      for (auto const& r : roots) {
        roots_.push_back(visit(r));
      }
    }

    std::size_t size() const noexcept {
      return steps_.size();
    }

    // Values of the roots; assignment[g - 1] is the value of x_g.
    void run(FiniteSingquandle const& m,
             std::vector<int> const&  assignment,
             std::vector<int>&        out) const {
      scratch_.resize(steps_.size());
      for (std::size_t k = 0; k < steps_.size(); ++k) {
        Step const& st = steps_[k];
        scratch_[k]    = st.gen > 0 ? assignment.at(st.gen - 1)
                                    : m.apply(st.op, scratch_[st.left],
                                              scratch_[st.right]);
      }
      out.resize(roots_.size());
      for (std::size_t k = 0; k < roots_.size(); ++k) {
        out[k] = scratch_[roots_[k]];
      }
    }

   private:
    struct Step {
      int  gen = 0;
      SQOp op  = SQOp::star;
      int  left = 0, right = 0;
    };
    std::vector<Step>        steps_;
    std::vector<int>         roots_;
    mutable std::vector<int> scratch_;
  };

  inline std::uint64_t count_sq_colorings(SQPresentation const&    p,
                                          FiniteSingquandle const& m,
                                          std::uint64_t budget = 50'000'000) {
    int const     q     = m.order();
    std::uint64_t total = 1;
    for (int g = 0; g < p.rank; ++g) {
      total *= q;
      if (total > budget) {
        throw BudgetExceeded("count_sq_colorings: too many assignments");
      }
    }
    std::vector<SQTerm> sides;
    for (auto const& [l, r] : p.relations) {
      sides.push_back(l);
      sides.push_back(r);
    }
    TermProgram      prog(sides);
    std::vector<int> a(p.rank, 0), v;
    std::uint64_t    count = 0;
    for (std::uint64_t c = 0; c < total; ++c) {
      std::uint64_t code = c;
      for (int g = 0; g < p.rank; ++g) {
        a[g] = static_cast<int>(code % q);
        code /= q;
      }
      prog.run(m, a, v);
      bool ok = true;
      for (std::size_t k = 0; k < v.size() && ok; k += 2) {
        ok = v[k] == v[k + 1];
      }
      count += ok;
    }
    return count;
  }

  // Relations of SB_n whose two sides act differently on some assignment
  // in the model, one entry per relation.
  inline std::vector<MonoidRelation> sq_relation_failures(
      FiniteSingquandle const& m, int n) {
    std::vector<MonoidRelation> bad;
    std::uint64_t               total = 1;
    for (int g = 0; g < n; ++g) {
      total *= m.order();
    }
    for (auto& rel : sb_relations(n)) {
      auto lhs = sq_phi_word(rel.lhs), rhs = sq_phi_word(rel.rhs);
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
      TermProgram      prog(lhs);
      std::vector<int> a(n), v;
      bool             ok = true;
      for (std::uint64_t c = 0; c < total && ok; ++c) {
        std::uint64_t code = c;
        for (int g = 0; g < n; ++g) {
          a[g] = static_cast<int>(code % m.order());
          code /= m.order();
        }
        prog.run(m, a, v);
        ok = std::equal(v.begin(), v.begin() + n, v.begin() + n);
      }
      if (!ok) {
        bad.push_back(std::move(rel));
      }
    }
    return bad;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // All quandle operations on {0..q-1}: column y is a permutation fixing
    // y, and right self-distributivity holds.
    inline std::vector<std::vector<int>> enumerate_quandles(int q) {
      std::vector<std::vector<std::vector<int>>> perms(q);
      for (int y = 0; y < q; ++y) {
        std::vector<int> p(q);
        std::iota(p.begin(), p.end(), 0);
        do {
          if (p[y] == y) {
            perms[y].push_back(p);
          }
        } while (std::next_permutation(p.begin(), p.end()));
      }
      std::vector<std::vector<int>> out;
      std::vector<int>              star(q * q, -1);
      auto consistent = [&](int upto) {
        // Q3 for every triple whose columns are all chosen.
        for (int y = 0; y <= upto; ++y) {
          for (int z = 0; z <= upto; ++z) {
            int yz = star[y * q + z];
            if (yz > upto) {
              continue;
            }
            for (int x = 0; x < q; ++x) {
              int xy = star[x * q + y], xz = star[x * q + z];
              if (star[xy * q + z] != star[xz * q + yz]) {
                return false;
              }
            }
          }
        }
        return true;
      };
      std::function<void(int)> choose = [&](int y) {
        if (y == q) {
          out.push_back(star);
          return;
        }
        for (auto const& p : perms[y]) {
          for (int x = 0; x < q; ++x) {
            star[x * q + y] = p[x];
          }
          if (consistent(y)) {
            choose(y + 1);
          }
        }
        for (int x = 0; x < q; ++x) {
          star[x * q + y] = -1;
        }
      };
      choose(0);
      return out;
    }

    // Extensions of a quandle by o_l (o_r is then forced by re4).
    inline void extend_quandle(int                             q,
                               std::vector<int> const&         star,
                               std::vector<FiniteSingquandle>& out,
                               std::size_t                     max_models) {
      std::vector<int> starbar(q * q);
      for (int y = 0; y < q; ++y) {
        for (int x = 0; x < q; ++x) {
          starbar[star[x * q + y] * q + y] = x;
        }
      }
      auto S  = [&](int x, int y) { return star[x * q + y]; };
      auto SB = [&](int x, int y) { return starbar[x * q + y]; };
      auto cell = [q](int x, int y) { return x * q + y; };
      // Every axiom instance touches a fixed set of o_l cells once o_r is
      // rewritten as x o_r y = y o_l (x * y); bucket the instances by the
      // last of those cells so each is checked as soon as it is decided.
      using Check = std::function<bool(std::vector<int> const&)>;
      std::vector<std::vector<Check>> bucket(q * q);
      auto add = [&](std::vector<int> cells, Check c) {
        bucket[*std::max_element(cells.begin(), cells.end())].push_back(
            std::move(c));
      };
      for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
          int const xy = S(x, y);
          int const rxy = cell(y, xy);  // cell of x o_r y
          // re5: (x o_l y) * (x o_r y) = y o_r (x * y)
          int const r2 = cell(xy, S(y, xy));
          add({cell(x, y), rxy, r2}, [=](std::vector<int> const& L) {
            return S(L[cell(x, y)], L[rxy]) == L[r2];
          });
          for (int z = 0; z < q; ++z) {
            int const xz = S(x, z), yz = S(y, z);
            int const bxz = SB(x, z), byz = SB(y, z);
            // re1: (x o y) * z = (x*z) o (y*z)
            add({cell(x, y), cell(xz, yz)}, [=](std::vector<int> const& L) {
              return S(L[cell(x, y)], z) == L[cell(xz, yz)];
            });
            int const rz = cell(yz, S(xz, yz));
            add({rxy, rz}, [=](std::vector<int> const& L) {
              return S(L[rxy], z) == L[rz];
            });
            // re2: (x o y) *~ z = (x *~ z) o (y *~ z)
            add({cell(x, y), cell(bxz, byz)},
                [=](std::vector<int> const& L) {
                  return SB(L[cell(x, y)], z) == L[cell(bxz, byz)];
                });
            int const rbz = cell(byz, S(bxz, byz));
            add({rxy, rbz}, [=](std::vector<int> const& L) {
              return SB(L[rxy], z) == L[rbz];
            });
          }
        }
      }
      for (int x = 0; x < q; ++x) {
        for (int z = 0; z < q; ++z) {
          int const lxz = cell(x, z), rxz = cell(z, S(x, z));
          for (int y = 0; y < q; ++y) {
            // re3: (y *~ (x o_l z)) * x = (y * (x o_r z)) *~ z
            add({lxz, rxz}, [=](std::vector<int> const& L) {
              return S(SB(y, L[lxz]), x) == SB(S(y, L[rxz]), z);
            });
          }
        }
      }
      std::vector<int>         L(q * q, 0);
      std::function<void(int)> fill = [&](int c) {
        if (c == q * q) {
          std::vector<int> R(q * q);
          for (int x = 0; x < q; ++x) {
            for (int y = 0; y < q; ++y) {
              R[cell(x, y)] = L[cell(y, S(x, y))];
            }
          }
          if (out.size() >= max_models) {
            throw BudgetExceeded("enumerate_singquandles: more than "
                                 + std::to_string(max_models) + " models");
          }
          out.emplace_back(q, star, L, R);
          return;
        }
        for (int v = 0; v < q; ++v) {
          L[c] = v;
          bool ok = true;
          for (auto const& check : bucket[c]) {
            if (!check(L)) {
              ok = false;
              break;
            }
          }
          if (ok) {
            fill(c + 1);
          }
        }
      };
      fill(0);
    }
  }  // namespace detail

  inline constexpr int         max_census_order  = 5;
  inline constexpr std::size_t default_max_models = 1'000'000;

  // Every singquandle on {0..q-1}, as raw tables in lexicographic order.
  // Order 4 already admits 4^16 models over the trivial quandle, so the
  // model budget is what stops the search in practice.
  inline std::vector<FiniteSingquandle> enumerate_singquandles(
      int q, std::size_t max_models = default_max_models) {
    if (q < 1) {
      throw RangeError("enumerate_singquandles: order must be positive");
    }
    if (q > max_census_order) {
      throw BudgetExceeded("enumerate_singquandles: order "
                           + std::to_string(q) + " exceeds the search budget "
                           + std::to_string(max_census_order));
    }
    std::vector<FiniteSingquandle> out;
    for (auto const& star : detail::enumerate_quandles(q)) {
      detail::extend_quandle(q, star, out, max_models);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Relabels elements by the permutation p (x -> p[x]).
  inline FiniteSingquandle relabel(FiniteSingquandle const& m,
                                   std::vector<int> const&  p) {
    int const        q = m.order();
    std::vector<int> s(q * q), l(q * q), r(q * q);
    for (int x = 0; x < q; ++x) {
      for (int y = 0; y < q; ++y) {
        s[p[x] * q + p[y]] = p[m.star(x, y)];
        l[p[x] * q + p[y]] = p[m.circ_l(x, y)];
        r[p[x] * q + p[y]] = p[m.circ_r(x, y)];
      }
    }
    return FiniteSingquandle(q, s, l, r);
  }

  // One representative (the least relabeling) per isomorphism class.
  inline std::vector<FiniteSingquandle> up_to_isomorphism(
      std::vector<FiniteSingquandle> const& models) {
    std::vector<FiniteSingquandle> out;
    for (auto const& m : models) {
      std::vector<int> p(m.order());
      std::iota(p.begin(), p.end(), 0);
      FiniteSingquandle best = m;
      do {
        FiniteSingquandle c = relabel(m, p);
        if (c < best) {
          best = c;
        }
      } while (std::next_permutation(p.begin(), p.end()));
      if (std::find(out.begin(), out.end(), best) == out.end()) {
        out.push_back(best);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // {"order": q, "star": [...], "circ_l": [...], "circ_r": [...]}
  inline nlohmann::json to_json(FiniteSingquandle const& m) {
    return {{"order", m.order()},
            {"star", m.star_table()},
            {"circ_l", m.circ_l_table()},
            {"circ_r", m.circ_r_table()}};
  }

  inline FiniteSingquandle model_from_json(nlohmann::json const& j) {
    try {
      return FiniteSingquandle(j.at("order").get<int>(),
                               j.at("star").get<std::vector<int>>(),
                               j.at("circ_l").get<std::vector<int>>(),
                               j.at("circ_r").get<std::vector<int>>());
    } catch (nlohmann::json::exception const& e) {
      throw SyntaxError(std::string("singquandle JSON: ") + e.what());
    }
  }

}  // namespace singbraid

#endif  // SINGBRAID_SINGQUANDLE_HPP
