#ifndef SINGBRAID_PUREBRAID_HPP
#define SINGBRAID_PUREBRAID_HPP

// The singular pure braid group SP_n = ker(SG_n -> S_n): generators a_ij,
// b_ij, Schreier coset representatives, Reidemeister-Schreier rewriting,
// the conjugation table, combing in P_n and the relation families.
//
// Conjugation convention: x^g = g^-1 x g.

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"
#include "singbraid/oracle.hpp"
#include "singbraid/presentation.hpp"
#include "singbraid/words.hpp"

namespace singbraid {

  enum class GenKind { a, b };

  struct PureGen {
    GenKind kind = GenKind::a;
    int     i    = 1;
    int     j    = 2;

    friend bool operator==(PureGen const&, PureGen const&) = default;
    friend auto operator<=>(PureGen const&, PureGen const&) = default;
  };

  inline int pair_count(int n) {
    return n * (n - 1) / 2;
  }

  // 1-based position of (i, j) in (1,2), (1,3), ..., (1,n), (2,3), ...
  inline int pair_position(int i, int j, int n) {
    return (i - 1) * n - (i - 1) * i / 2 + (j - i);
  }

  inline void check_pure_gen(PureGen g, int n) {
    if (g.i < 1 || g.i >= g.j || g.j > n) {
      throw RangeError("pure generator indices (" + std::to_string(g.i) + ","
                       + std::to_string(g.j) + ") out of range for "
                       + std::to_string(n) + " strands");
    }
  }

  // a_ij come first, then b_ij, each block in lexicographic order.
  inline int gen_index(PureGen g, int n) {
    check_pure_gen(g, n);
    return pair_position(g.i, g.j, n)
           + (g.kind == GenKind::b ? pair_count(n) : 0);
  }

  inline PureGen gen_at(int index, int n) {
    int     N = pair_count(n);
    PureGen g{index > N ? GenKind::b : GenKind::a, 1, 2};
    int     pos = index > N ? index - N : index;
    for (g.i = 1; g.i < n; ++g.i) {
      int row = n - g.i;
      if (pos <= row) {
        g.j = g.i + pos;
        return g;
      }
      pos -= row;
    }
    throw RangeError("pure generator number out of range");
  }

  inline std::string gen_name(PureGen g, int n) {
    std::string k = g.kind == GenKind::a ? "a" : "b";
    if (n >= 10) {
      return k + "_" + std::to_string(g.i) + "_" + std::to_string(g.j);
    }
    return k + std::to_string(g.i) + std::to_string(g.j);
  }

  inline std::vector<PureGen> pure_generators(int n) {
    std::vector<PureGen> out;
    for (GenKind k : {GenKind::a, GenKind::b}) {
      for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          out.push_back({k, i, j});
        }
      }
    }
    return out;
  }

  inline std::vector<std::string> pure_gen_names(int n) {
    std::vector<std::string> out;
    for (auto g : pure_generators(n)) {
      out.push_back(gen_name(g, n));
    }
    return out;
  }

  // A reduced word in a_ij^{+-1}, b_ij^{+-1}, stored as a free word of rank
  // n(n-1) over the generator numbering above.
  class PureWord {
   public:
    PureWord() = default;

    explicit PureWord(int strands)
        : n_(strands), w_(2 * pair_count(strands)) {}

    PureWord(int strands, FreeWord w) : n_(strands), w_(std::move(w)) {
      if (w_.rank() != 2 * pair_count(n_)) {
        throw PreconditionError("PureWord: rank does not match strands");
      }
    }

    static PureWord gen(PureGen g, int n, int exp = 1) {
      return PureWord(
          n, FreeWord::generator(2 * pair_count(n), gen_index(g, n), exp));
    }

    int strands() const noexcept {
      return n_;
    }
    FreeWord const& word() const noexcept {
      return w_;
    }
    std::size_t size() const noexcept {
      return w_.size();
    }
    bool empty() const noexcept {
      return w_.empty();
    }

    std::vector<std::pair<PureGen, int>> letters() const {
      std::vector<std::pair<PureGen, int>> out;
      for (int l : w_.letters()) {
        out.emplace_back(gen_at(std::abs(l), n_), l > 0 ? 1 : -1);
      }
      return out;
    }

    bool mentions(PureGen g) const {
      return w_.mentions(gen_index(g, n_));
    }

    bool a_only() const {
      int N = pair_count(n_);
      return std::all_of(w_.letters().begin(), w_.letters().end(),
                         [N](int l) { return std::abs(l) <= N; });
    }

    PureWord inverse() const {
      return PureWord(n_, w_.inverse());
    }
    PureWord pow(int k) const {
      return PureWord(n_, w_.pow(k));
    }

    PureWord& operator*=(PureWord const& v) {
      if (v.n_ != n_) {
        throw PreconditionError("PureWord: strand-count mismatch");
      }
      w_ *= v.w_;
      return *this;
    }
    friend PureWord operator*(PureWord u, PureWord const& v) {
      u *= v;
      return u;
    }

    friend bool operator==(PureWord const&, PureWord const&) = default;

   private:
    int      n_ = 2;
    FreeWord w_{2};
  };

  inline PureWord pa(int i, int j, int n, int exp = 1) {
    return PureWord::gen({GenKind::a, i, j}, n, exp);
  }
  inline PureWord pb(int i, int j, int n, int exp = 1) {
    return PureWord::gen({GenKind::b, i, j}, n, exp);
  }

  // [x, y] = x^-1 y^-1 x y
  inline PureWord commutator(PureWord const& x, PureWord const& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  inline std::string to_string(PureWord const& w) {
    return to_string(w.word(), pure_gen_names(w.strands()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid words of the generators
  ////////////////////////////////////////////////////////////////////////

  // a_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, and b_ij the
  // same with t_i s_i in the middle.
  inline BraidWord gen_word(PureGen g, int n) {
    check_pure_gen(g, n);
    BraidWord w(n);
    for (int k = g.j - 1; k > g.i; --k) {
      w.push_back(Letter::sigma(k));
    }
    w.push_back(g.kind == GenKind::a ? Letter::sigma(g.i) : Letter::tau(g.i));
    w.push_back(Letter::sigma(g.i));
    for (int k = g.i + 1; k < g.j; ++k) {
      w.push_back(Letter::sigma(k, -1));
    }
    return w;
  }

  inline BraidWord expand(PureWord const& w) {
    BraidWord out(w.strands());
    for (auto [g, e] : w.letters()) {
      BraidWord gw = gen_word(g, w.strands());
      out *= e > 0 ? gw : invert(gw);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Schreier sets
  ////////////////////////////////////////////////////////////////////////

  enum class SchreierKind { lambda, m };

  // m_kl = s_{k-1} ... s_l (lambda) or n_kl = s_{k-1}^-1 ... s_l^-1 (m);
  // empty when l = k.
  inline BraidWord schreier_factor(int k, int l, int n, SchreierKind kind) {
    BraidWord w(n);
    int       e = kind == SchreierKind::lambda ? 1 : -1;
    for (int s = k - 1; s >= l; --s) {
      w.push_back(Letter::sigma(s, e));
    }
    return w;
  }

  // prod_{k=2}^n factor(k, js[k]); js is indexed by k.
  inline BraidWord schreier_element(std::vector<int> const& js,
                                    int                     n,
                                    SchreierKind            kind) {
    BraidWord w(n);
    for (int k = 2; k <= n; ++k) {
      w *= schreier_factor(k, js[k], n, kind);
    }
    return w;
  }

  // All n! representatives, lexicographic in (j_2, ..., j_n).
  inline std::vector<BraidWord> schreier_set(int n, SchreierKind kind) {
    if (n < 2) {
      throw RangeError("schreier_set: n must be at least 2");
    }
    std::vector<BraidWord> out;
    std::vector<int>       js(n + 1, 1);
    while (true) {
      out.push_back(schreier_element(js, n, kind));
      int k = n;
      while (k >= 2 && js[k] == k) {
        js[k] = 1;
        --k;
      }
      if (k < 2) {
        break;
      }
      ++js[k];
    }
    return out;
  }

  // M_{n,m} = M_n \ (M_m \ {e}), the elements of M_m read on n strands.
  inline std::vector<BraidWord> m_subset(int n, int m) {
    if (m <= 1 || m >= n) {
      throw RangeError("m_subset: need 1 < m < n");
    }
    std::set<std::vector<Letter>> small;
    for (auto const& w : schreier_set(m, SchreierKind::m)) {
      if (!w.empty()) {
        small.insert(w.letters());
      }
    }
    std::vector<BraidWord> out;
    for (auto const& w : schreier_set(n, SchreierKind::m)) {
      if (!small.count(w.letters())) {
        out.push_back(w);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugation by sigma_k
  ////////////////////////////////////////////////////////////////////////

  struct TableRow {
    std::string label;  // ct1 .. ct61
    PureWord    value;
  };

  // The word for s_k^-eps g s_k^eps.
  inline TableRow conj_row(PureGen g, int k, int eps, int n) {
    check_pure_gen(g, n);
    if (k < 1 || k > n - 1 || (eps != 1 && eps != -1)) {
      throw RangeError("conj_by_sigma: bad sigma index or exponent");
    }
    int const  i = g.i, j = g.j;
    auto       same = [&](int p, int q) { return PureWord::gen({g.kind, p, q}, n); };
    PureWord   x    = PureWord::gen(g, n);
    if (k != i - 1 && k != i && k != j - 1 && k != j) {
      return {"ct1", x};
    }
    if (j == i + 1 && k == i) {
      return {"ct2", x};
    }
    if (k == i - 1) {
      return eps > 0 ? TableRow{"ct3", same(i - 1, j)}
                     : TableRow{"ct31", pa(i, j, n, -1) * same(i - 1, j)
                                            * pa(i, j, n)};
    }
    if (k == i) {
      return eps > 0 ? TableRow{"ct4", pa(i, j, n) * same(i + 1, j)
                                           * pa(i, j, n, -1)}
                     : TableRow{"ct41", same(i + 1, j)};
    }
    if (k == j - 1) {
      return eps > 0 ? TableRow{"ct5", same(i, j - 1)}
                     : TableRow{"ct51", pa(j - 1, j, n) * same(i, j - 1)
                                            * pa(j - 1, j, n, -1)};
    }
    // k == j <= n - 1
    return eps > 0 ? TableRow{"ct6", pa(j, j + 1, n, -1) * same(i, j + 1)
                                         * pa(j, j + 1, n)}
                   : TableRow{"ct61", same(i, j + 1)};
  }

  inline PureWord conj_by_sigma(PureGen g, int k, int eps, int n) {
    return conj_row(g, k, eps, n).value;
  }

  // s_k^-eps w s_k^eps, letter by letter.
  inline PureWord conj_word_by_sigma(PureWord const& w, int k, int eps) {
    PureWord out(w.strands());
    for (auto [g, e] : w.letters()) {
      out *= conj_by_sigma(g, k, eps, w.strands()).pow(e);
    }
    return out;
  }

  // w^g = g^-1 w g for a sigma-only braid word g.
  inline PureWord conj_by_braid(PureWord w, BraidWord const& g) {
    if (!g.is_sigma_only()) {
      throw PreconditionError("conj_by_braid: conjugator contains tau");
    }
    for (Letter l : g) {
      w = conj_word_by_sigma(w, l.index, l.exp);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reidemeister-Schreier rewriting into a_ij, b_ij
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Coset state r = m_{2,j_2} ... m_{n,j_n} in Lambda_n.
    struct LambdaState {
      int              n;
      std::vector<int> js;  // js[k], 2 <= k <= n

      explicit LambdaState(int strands) : n(strands), js(strands + 1) {
        for (int k = 0; k <= n; ++k) {
          js[k] = k;
        }
      }

      BraidWord word(int upto) const {
        BraidWord w(n);
        for (int k = 2; k <= upto; ++k) {
          w *= schreier_factor(k, js[k], n, SchreierKind::lambda);
        }
        return w;
      }

      bool is_identity() const {
        for (int k = 2; k <= n; ++k) {
          if (js[k] != k) {
            return false;
          }
        }
        return true;
      }
    };

    // r s_k = gamma r'; updates the state to r' and returns gamma.
    inline PureWord push_sigma(LambdaState& r, int k) {
      for (int p = r.n; p >= 2; --p) {
        int j = r.js[p];
        if (j == p) {
          if (k == p - 1) {
            r.js[p] = p - 1;
            return PureWord(r.n);
          }
          continue;
        }
        if (k <= j - 2) {
          continue;
        }
        if (k == j - 1) {
          r.js[p] = j - 1;
          return PureWord(r.n);
        }
        if (k == j) {
          // m_{p,j} s_j = a_{jp} m_{p,j+1}; move a_{jp} past m_2..m_{p-1}.
          PureWord gamma = conj_by_braid(pa(j, p, r.n), invert(r.word(p - 1)));
          r.js[p] = j + 1;
          return gamma;
        }
        // j < k <= p - 1: m_{p,j} s_k = s_{k-1} m_{p,j}
        --k;
      }
      throw std::logic_error("push_sigma: fell through the coset factors");
    }

    class LambdaIndex {
     public:
      explicit LambdaIndex(int n) {
        LambdaState s(n);
        std::vector<int> js(n + 1, 1);
        while (true) {
          s.js = js;
          for (int k = 0; k < 2 && k <= n; ++k) {
            s.js[k] = k;
          }
          by_perm_.emplace(pi_image(s.word(n)), s.js);
          int k = n;
          while (k >= 2 && js[k] == k) {
            js[k] = 1;
            --k;
          }
          if (k < 2) {
            break;
          }
          ++js[k];
        }
      }

      std::vector<int> const& find(Perm const& p) const {
        return by_perm_.at(p);
      }

     private:
      std::map<Perm, std::vector<int>> by_perm_;
    };

    // r s_k^-1 = gamma^-1 r'' where r'' s_k = gamma r.
    inline PureWord pull_sigma(LambdaState& r, LambdaIndex const& index,
                               int k) {
      Perm        target = pi_image(r.word(r.n))
                    * Perm::transposition(r.n, k, k + 1);
      LambdaState prev(r.n);
      prev.js            = index.find(target);
      LambdaState probe  = prev;
      PureWord    gamma  = push_sigma(probe, k);
      if (probe.js != r.js) {
        throw std::logic_error("pull_sigma: coset bookkeeping mismatch");
      }
      r = prev;
      return gamma.inverse();
    }
  }  // namespace detail

  inline PureWord rs_rewrite(BraidWord const& w) {
    if (!in_pure_subgroup(w)) {
      throw PreconditionError("rs_rewrite: word is not in the pure subgroup");
    }
    int const           n = w.strands();
    detail::LambdaState r(n);
    detail::LambdaIndex index(n);
    PureWord            out(n);
    for (Letter l : w) {
      int k = l.index;
      if (l.is_sigma() && l.exp > 0) {
        out *= detail::push_sigma(r, k);
      } else if (l.is_sigma()) {
        out *= detail::pull_sigma(r, index, k);
      } else if (l.exp > 0) {
        // t_k = b_{k,k+1} s_k^-1
        out *= conj_by_braid(pb(k, k + 1, n), invert(r.word(n)));
        out *= detail::pull_sigma(r, index, k);
      } else {
        // t_k^-1 = s_k b_{k,k+1}^-1
        out *= detail::push_sigma(r, k);
        out *= conj_by_braid(pb(k, k + 1, n, -1), invert(r.word(n)));
      }
    }
    if (!r.is_identity()) {
      throw std::logic_error("rs_rewrite: final coset is not trivial");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Combing: P_n = U_n x| (U_{n-1} x| ... x| U_2)
  ////////////////////////////////////////////////////////////////////////

  // a_pq^-eps a_sj a_pq^eps for q < j, as a word in U_j.
  inline PureWord conj_in_u(int p, int q, int s, int j, int eps, int n) {
    PureWord x = pa(s, j, n);
    if (s == q || s == p) {
      PureWord c = (pa(p, j, n) * pa(q, j, n)).pow(eps);
      return c * x * c.inverse();
    }
    if (p < s && s < q) {
      PureWord c = commutator(pa(p, j, n, -eps), pa(q, j, n, -eps)).pow(eps);
      return c * x * c.inverse();
    }
    return x;
  }

  // Returns (u_n, u_{n-1}, ..., u_2) with u_j a word in a_1j, ..., a_{j-1,j}
  // and w equal to u_n u_{n-1} ... u_2 in P_n.
  inline std::vector<PureWord> comb(BraidWord const& w) {
    if (!w.is_sigma_only() || !in_pure_subgroup(w)) {
      throw PreconditionError("comb: word is not a classical pure braid");
    }
    int const n    = w.strands();
    int const rank = 2 * pair_count(n);
    PureWord  v    = rs_rewrite(w);
    std::vector<PureWord> parts;
    for (int j = n; j >= 2; --j) {
      FreeWord                             u(rank);
      std::vector<std::pair<PureGen, int>> rest;
      auto letters = v.letters();
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        auto [g, e] = *it;
        if (g.j == j) {
          u = FreeWord::generator(rank, gen_index(g, n), e) * u;
          continue;
        }
        // y u y^-1 with y = a_pq^e, i.e. conjugation with eps = -e.
        FreeEndo act = FreeEndo::identity(rank);
        for (int s = 1; s < j; ++s) {
          act.set_image(gen_index({GenKind::a, s, j}, n),
                        conj_in_u(g.i, g.j, s, j, -e, n).word());
        }
        u = act.apply(u);
        rest.insert(rest.begin(), *it);
      }
      parts.emplace_back(n, u);
      PureWord next(n);
      for (auto [g, e] : rest) {
        next *= PureWord::gen(g, n, e);
      }
      v = next;
    }
    return parts;
  }

  inline PureWord comb_product(std::vector<PureWord> const& parts, int n) {
    PureWord out(n);
    for (auto const& u : parts) {
      out *= u;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relation families
  ////////////////////////////////////////////////////////////////////////

  struct PureRelation {
    std::string      family;
    std::vector<int> indices;
    int              eps = 0;  // 0 when the family has no sign
    PureWord         lhs;
    PureWord         rhs;

    FreeWord relator() const {
      return (lhs * rhs.inverse()).word();
    }
  };

  inline std::string describe(PureRelation const& r) {
    std::string s = r.family + "(";
    for (std::size_t k = 0; k < r.indices.size(); ++k) {
      s += (k ? "," : "") + std::to_string(r.indices[k]);
    }
    s += ")";
    if (r.eps != 0) {
      s += r.eps > 0 ? " eps=+1" : " eps=-1";
    }
    return s;
  }

  namespace detail {
    // x^-eps y x^eps
    inline PureWord conj_eps(PureWord const& x, PureWord const& y, int eps) {
      return x.pow(-eps) * y * x.pow(eps);
    }

    // k < i < m < j, or m < k (with i < m, k < j).
    inline bool far_apart(int i, int m, int k, int j) {
      return (k < i && i < m && m < j) || m < k;
    }

    template <typename F>
    void for_quadruples(int n, F&& f) {
      for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
          for (int m = k + 1; m <= n; ++m) {
            for (int j = m + 1; j <= n; ++j) {
              f(i, k, m, j);
            }
          }
        }
      }
    }

    template <typename F>
    void for_triples(int n, F&& f) {
      for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
          for (int j = k + 1; j <= n; ++j) {
            f(i, k, j);
          }
        }
      }
    }

    template <typename F>
    void for_far_pairs(int n, F&& f) {
      for (int i = 1; i <= n; ++i) {
        for (int m = i + 1; m <= n; ++m) {
          for (int k = 1; k <= n; ++k) {
            for (int j = k + 1; j <= n; ++j) {
              if (far_apart(i, m, k, j)) {
                f(i, m, k, j);
              }
            }
          }
        }
      }
    }
  }  // namespace detail

  // Every legal instantiation of the defining relations of SP_n, in family
  // order dr-0, dr-1, dr-11, dr-2, dr-21, dr-3, dr-31, dr-4, dr-41, dr-5,
  // dr-51, dr-6, plast, last.
  inline std::vector<PureRelation> sp_relations(int n) {
    if (n < 2) {
      throw RangeError("sp_relations: n must be at least 2");
    }
    using detail::conj_eps;
    std::vector<PureRelation> out;
    auto a = [n](int p, int q) { return pa(p, q, n); };
    auto b = [n](int p, int q) { return pb(p, q, n); };
    auto add = [&out](std::string f, std::vector<int> idx, int eps,
                      PureWord lhs, PureWord rhs) {
      out.push_back({std::move(f), std::move(idx), eps, std::move(lhs),
                     std::move(rhs)});
    };
    int const signs[] = {1, -1};

    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        add("dr-0", {i, j}, 0, a(i, j) * b(i, j), b(i, j) * a(i, j));
      }
    }
    for (auto [name, mid] :
         {std::pair{"dr-1", GenKind::a}, std::pair{"dr-11", GenKind::b}}) {
      detail::for_triples(n, [&](int i, int k, int j) {
        PureWord x = PureWord::gen({mid, k, j}, n);
        for (int e : signs) {
          PureWord c = (a(i, j) * a(k, j)).pow(e);
          add(name, {i, k, j}, e, conj_eps(a(i, k), x, e),
              c * x * c.inverse());
        }
      });
    }
    for (auto [name, mid] :
         {std::pair{"dr-2", GenKind::a}, std::pair{"dr-21", GenKind::b}}) {
      detail::for_triples(n, [&](int k, int m, int j) {
        PureWord x = PureWord::gen({mid, k, j}, n);
        for (int e : signs) {
          PureWord c = (a(k, j) * a(m, j)).pow(e);
          add(name, {k, m, j}, e, conj_eps(a(k, m), x, e),
              c * x * c.inverse());
        }
      });
    }
    for (auto [name, mid] :
         {std::pair{"dr-3", GenKind::a}, std::pair{"dr-31", GenKind::b}}) {
      detail::for_quadruples(n, [&](int i, int k, int m, int j) {
        PureWord x = PureWord::gen({mid, k, j}, n);
        for (int e : signs) {
          PureWord c
              = commutator(pa(i, j, n, -e), pa(m, j, n, -e)).pow(e);
          add(name, {i, k, m, j}, e, conj_eps(a(i, m), x, e),
              c * x * c.inverse());
        }
      });
    }
    struct Far {
      char const* name;
      GenKind     outer, mid;
    };
    for (Far f : {Far{"dr-4", GenKind::a, GenKind::a},
                  Far{"dr-41", GenKind::a, GenKind::b},
                  Far{"dr-5", GenKind::b, GenKind::a},
                  Far{"dr-51", GenKind::b, GenKind::b}}) {
      detail::for_far_pairs(n, [&](int i, int m, int k, int j) {
        PureWord y = PureWord::gen({f.outer, i, m}, n);
        PureWord x = PureWord::gen({f.mid, k, j}, n);
        for (int e : signs) {
          add(f.name, {i, m, k, j}, e, conj_eps(y, x, e), x);
        }
      });
    }
    detail::for_triples(n, [&](int i, int j, int k) {
      PureWord x = a(i, k) * a(j, k);
      for (int e : signs) {
        add("dr-6", {i, j, k}, e, conj_eps(b(i, j), x, e), x);
      }
    });
    for (auto [name, mid] :
         {std::pair{"plast", GenKind::a}, std::pair{"last", GenKind::b}}) {
      detail::for_quadruples(n, [&](int i, int k, int m, int j) {
        PureWord x = pa(m, j, n, -1) * PureWord::gen({mid, k, j}, n)
                     * a(m, j);
        for (int e : signs) {
          add(name, {i, k, m, j}, e, conj_eps(b(i, m), x, e), x);
        }
      });
    }
    return out;
  }

  // Relators lhs rhs^-1, dropping exact repeats.
  inline GroupPresentation presentation_of(std::vector<PureRelation> const& rels,
                                           int n, bool a_only = false) {
    GroupPresentation p;
    p.generators = pure_gen_names(n);
    if (a_only) {
      p.generators.resize(pair_count(n));
    }
    std::set<FreeWord> seen;
    for (auto const& r : rels) {
      FreeWord w = r.relator();
      if (a_only) {
        w = FreeWord(pair_count(n), w.letters());
      }
      if (!w.empty() && seen.insert(w).second) {
        p.add_relator(std::move(w));
      }
    }
    return p;
  }

  inline GroupPresentation sp_presentation(int n) {
    return presentation_of(sp_relations(n), n);
  }

  // Defining relations of P_n; with co_form the conjugation-form relations
  // are produced instead.
  inline std::vector<PureRelation> pn_relations(int n, bool co_form = false) {
    if (n < 2) {
      throw RangeError("pn_relations: n must be at least 2");
    }
    std::vector<PureRelation> out;
    auto a = [n](int p, int q) { return pa(p, q, n); };
    auto add = [&out](std::string f, std::vector<int> idx, int eps,
                      PureWord lhs, PureWord rhs) {
      out.push_back({std::move(f), std::move(idx), eps, std::move(lhs),
                     std::move(rhs)});
    };
    if (!co_form) {
      detail::for_triples(n, [&](int i, int k, int j) {
        add("re2", {i, k, j}, 0, a(i, k) * a(i, j) * a(k, j),
            a(k, j) * a(i, k) * a(i, j));
      });
      detail::for_triples(n, [&](int k, int m, int j) {
        add("re3", {k, m, j}, 0, a(m, j) * a(k, m) * a(k, j),
            a(k, j) * a(m, j) * a(k, m));
      });
      detail::for_quadruples(n, [&](int i, int k, int m, int j) {
        PureWord c = a(k, m) * a(k, j) * a(k, m).inverse();
        add("re4", {i, k, m, j}, 0, c * a(i, m), a(i, m) * c);
      });
      detail::for_far_pairs(n, [&](int i, int m, int k, int j) {
        add("re1", {i, m, k, j}, 0, a(k, j) * a(i, m), a(i, m) * a(k, j));
      });
      return out;
    }
    for (int e : {1, -1}) {
      detail::for_triples(n, [&](int i, int k, int j) {
        PureWord c = (a(i, j) * a(k, j)).pow(e);
        add("co1", {i, k, j}, e, detail::conj_eps(a(i, k), a(k, j), e),
            c * a(k, j) * c.inverse());
      });
      detail::for_triples(n, [&](int k, int m, int j) {
        PureWord c = (a(k, j) * a(m, j)).pow(e);
        add("co2", {k, m, j}, e, detail::conj_eps(a(k, m), a(k, j), e),
            c * a(k, j) * c.inverse());
      });
      detail::for_quadruples(n, [&](int i, int k, int m, int j) {
        PureWord c = commutator(pa(i, j, n, -e), pa(m, j, n, -e)).pow(e);
        add("co3", {i, k, m, j}, e, detail::conj_eps(a(i, m), a(k, j), e),
            c * a(k, j) * c.inverse());
      });
      detail::for_far_pairs(n, [&](int i, int m, int k, int j) {
        add("co4", {i, m, k, j}, e, detail::conj_eps(a(i, m), a(k, j), e),
            a(k, j));
      });
    }
    return out;
  }

  inline GroupPresentation pn_presentation(int n, bool co_form = false) {
    return presentation_of(pn_relations(n, co_form), n, true);
  }

  ////////////////////////////////////////////////////////////////////////
  // The full twist and the center
  ////////////////////////////////////////////////////////////////////////

  // (s_1 s_2 ... s_{n-1})^n
  inline BraidWord delta(int n) {
    BraidWord w(n);
    for (int r = 0; r < n; ++r) {
      for (int i = 1; i < n; ++i) {
        w.push_back(Letter::sigma(i));
      }
    }
    return w;
  }

  // a_1k a_2k ... a_{k-1,k}
  inline PureWord delta_k(int k, int n) {
    if (k < 2 || k > n) {
      throw RangeError("delta_k: need 2 <= k <= n");
    }
    PureWord w(n);
    for (int i = 1; i < k; ++i) {
      w *= pa(i, k, n);
    }
    return w;
  }

  // delta_lo delta_{lo+1} ... delta_hi
  inline PureWord delta_range(int lo, int hi, int n) {
    PureWord w(n);
    for (int k = lo; k <= hi; ++k) {
      w *= delta_k(k, n);
    }
    return w;
  }

  // <A, D | R_2, [D, a] (a in A)> where A is every generator but a_12, R_2
  // the relators not mentioning a_12 and D stands for the full twist.
  inline GroupPresentation center_presentation(int n) {
    if (n < 3) {
      throw RangeError("center_presentation: n must be at least 3");
    }
    int const         rank = 2 * pair_count(n);
    GroupPresentation sp   = sp_presentation(n);
    GroupPresentation p;
    for (int g = 2; g <= rank; ++g) {
      p.generators.push_back(sp.generators[g - 1]);
    }
    p.generators.push_back("D");
    for (auto const& r : sp.relators) {
      if (r.mentions(1)) {
        continue;
      }
      std::vector<int> letters;
      for (int l : r.letters()) {
        letters.push_back(l > 0 ? l - 1 : l + 1);
      }
      p.add_relator(FreeWord(rank, letters));
    }
    for (int g = 1; g < rank; ++g) {
      FreeWord d = FreeWord::generator(rank, rank);
      FreeWord x = FreeWord::generator(rank, g);
      p.add_relator(d.inverse() * x.inverse() * d * x);
    }
    return p;
  }

  // An equation between braid words with a label, for oracle sweeps.
  struct BraidIdentity {
    std::string label;
    std::string detail;
    BraidWord   lhs;
    BraidWord   rhs;
  };

  inline BraidIdentity conjugation_identity(std::string label,
                                            std::string detail,
                                            PureWord const& x,
                                            PureWord const& g) {
    // x^g = x
    BraidWord ex = expand(x), eg = expand(g);
    return {std::move(label), std::move(detail), invert(eg) * ex * eg, ex};
  }

  // The commutation identities behind the center decomposition, plus
  // D g = g D for every generator g.
  inline std::vector<BraidIdentity> center_identities(int n) {
    if (n < 3) {
      throw RangeError("center_identities: n must be at least 3");
    }
    std::vector<BraidIdentity> out;
    auto tag = [n](PureWord const& x) { return to_string(x); };
    for (int j = 3; j <= n; ++j) {
      PureWord g1 = pa(2, j, n, -1) * pa(1, j, n, -1) * delta_range(3, j, n);
      PureWord g2 = pa(1, j, n, -1) * delta_range(3, j, n);
      for (auto x : {pa(1, j, n), pb(1, j, n)}) {
        out.push_back(conjugation_identity("cent1", tag(x), x, g1));
      }
      for (auto x : {pa(2, j, n), pb(2, j, n)}) {
        out.push_back(conjugation_identity("cent2", tag(x), x, g2));
      }
      for (int k = 3; k < j; ++k) {
        PureWord g3 = delta_range(k, j, n);
        for (auto x : {pa(k, j, n), pb(k, j, n)}) {
          out.push_back(conjugation_identity("cent3", tag(x), x, g3));
        }
      }
    }
    for (int j = 3; j <= n; ++j) {
      for (int k = 2; k < j; ++k) {
        for (int i = 1; i < k; ++i) {
          for (auto g : {pa(i, k, n), pb(i, k, n)}) {
            out.push_back(conjugation_identity(
                "cl2", "delta_" + std::to_string(j) + " by " + tag(g),
                delta_k(j, n), g));
          }
        }
      }
    }
    BraidWord d = delta(n);
    for (auto g : pure_generators(n)) {
      BraidWord gw = gen_word(g, n);
      out.push_back({"central", gen_name(g, n), d * gw, gw * d});
    }
    return out;
  }

  // Every row of the conjugation table at n strands.
  inline std::vector<BraidIdentity> conjugation_table_identities(int n) {
    std::vector<BraidIdentity> out;
    for (auto g : pure_generators(n)) {
      for (int k = 1; k < n; ++k) {
        for (int e : {1, -1}) {
          TableRow  row = conj_row(g, k, e, n);
          BraidWord s(n, {Letter::sigma(k, e)});
          out.push_back({row.label,
                         gen_name(g, n) + " k=" + std::to_string(k)
                             + (e > 0 ? " eps=+1" : " eps=-1"),
                         invert(s) * gen_word(g, n) * s, expand(row.value)});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Camomile-type decomposition
  ////////////////////////////////////////////////////////////////////////

  struct PetalMatch {
    PureGen   target;
    bool      found = false;
    BraidWord conjugator;  // m with target = m^-1 g0 m
    PureGen   source;      // g0 in SP_k
  };

  struct CamomileReport {
    int                     n = 0, k = 0;
    std::vector<PetalMatch> generators;
    bool                    union_ok = false;
    std::vector<std::string> union_detail;
    std::size_t             relators_total   = 0;
    std::size_t             relators_matched = 0;

    bool generators_ok() const {
      return std::all_of(generators.begin(), generators.end(),
                         [](PetalMatch const& m) { return m.found; });
    }
  };

  inline PureWord widen(PureWord const& w, int n) {
    PureWord out(n);
    for (auto [g, e] : w.letters()) {
      out *= PureWord::gen(g, n, e);
    }
    return out;
  }

  namespace detail {
    inline bool shortlex_less(BraidWord const& u, BraidWord const& v) {
      if (u.size() != v.size()) {
        return u.size() < v.size();
      }
      return u.letters() < v.letters();
    }
  }  // namespace detail

  // (i) each generator of SP_n as m^-1 g0 m with m in M_{n,k} and g0 a
  // generator of SP_k (searched shortest m first, oracle-verified); the
  // generator union over the petals m in {e, s_{n-1}^-1,
  // s_{n-1}^-1 s_{n-2}^-1}; (ii) the relators of SP_n that are literally
  // (up to cyclic permutation and inversion) conjugates of SP_k relators.
  inline CamomileReport camomile_check(int n, int k) {
    if (n < 3 || k < 2 || k >= n) {
      throw RangeError("camomile_check: need 2 <= k < n");
    }
    CamomileReport rep;
    rep.n = n;
    rep.k = k;
    std::vector<BraidWord> ms = m_subset(n, k);
    std::stable_sort(ms.begin(), ms.end(), detail::shortlex_less);
    std::vector<PureGen> small = pure_generators(k);
    for (PureGen g : pure_generators(n)) {
      PetalMatch match{g, false, BraidWord(n), g};
      BraidWord  target = gen_word(g, n);
      for (auto const& m : ms) {
        for (PureGen g0 : small) {
          if (g0.kind != g.kind) {
            continue;
          }
          BraidWord cand = invert(m) * gen_word(g0, n) * m;
          if (sg_identity_holds(cand, target)) {
            match = {g, true, m, g0};
            break;
          }
        }
        if (match.found) {
          break;
        }
      }
      rep.generators.push_back(match);
    }

    // Generator union over three petals.
    std::vector<BraidWord> petals{BraidWord(n),
                                  BraidWord(n, {Letter::sigma(n - 1, -1)}),
                                  BraidWord(n, {Letter::sigma(n - 1, -1),
                                                Letter::sigma(n - 2, -1)})};
    std::set<PureGen> covered;
    bool              all_single = true;
    for (auto const& m : petals) {
      for (PureGen g0 : pure_generators(n - 1)) {
        PureWord img = conj_by_braid(PureWord::gen(g0, n), m);
        auto     letters = img.letters();
        bool     ok = letters.size() == 1 && letters[0].second == 1
                  && sg_identity_holds(invert(m) * gen_word(g0, n) * m,
                                       gen_word(letters[0].first, n));
        if (!ok) {
          all_single = false;
          rep.union_detail.push_back("petal " + to_string(m) + ": "
                                     + gen_name(g0, n) + " -> "
                                     + to_string(img) + " (not a generator)");
          continue;
        }
        covered.insert(letters[0].first);
      }
    }
    auto all = pure_generators(n);
    rep.union_ok = all_single && covered == std::set<PureGen>(all.begin(),
                                                              all.end());

    // Literal relator matches.
    std::set<FreeWord> petal_relators;
    std::vector<PureWord> small_relators;
    for (auto const& r : sp_relations(k)) {
      small_relators.push_back(widen(PureWord(k, r.relator()), n));
    }
    for (auto const& m : ms) {
      for (auto const& r : small_relators) {
        petal_relators.insert(relator_canonical(conj_by_braid(r, m).word()));
      }
    }
    for (auto const& r : sp_relations(n)) {
      FreeWord w = r.relator();
      if (w.empty()) {
        continue;
      }
      ++rep.relators_total;
      if (petal_relators.count(relator_canonical(w))) {
        ++rep.relators_matched;
      }
    }
    return rep;
  }

}  // namespace singbraid

#endif  // SINGBRAID_PUREBRAID_HPP
