#ifndef SINGBRAID_INVARIANTS_HPP
#define SINGBRAID_INVARIANTS_HPP

// Groups of closed singular braids and the tools used to tell them apart:
// Tietze simplification, abelianization, coset enumeration and counting
// homomorphisms into small finite groups.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "singbraid/errors.hpp"
#include "singbraid/free_group.hpp"
#include "singbraid/presentation.hpp"
#include "singbraid/represent.hpp"
#include "singbraid/words.hpp"

namespace singbraid {

  // <x_1..x_n | x_i^-1 Psi(b)(x_i)>, trivial relators omitted.
  inline GroupPresentation group_of_braid(RepId const& rep, BraidWord const& b) {
    GroupPresentation p   = GroupPresentation::free(b.strands());
    FreeEndo          img = phi_word(rep, b);
    for (int g = 1; g <= b.strands(); ++g) {
      FreeWord r = FreeWord::generator(b.strands(), g, -1) * img.image(g);
      if (!r.empty()) {
        p.add_relator(std::move(r));
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Rewrites w over a new alphabet; images[g - 1] is the word for g.
    inline FreeWord map_word(FreeWord const&              w,
                             std::vector<FreeWord> const& images,
                             int                          rank) {
      FreeWord out(rank);
      for (int l : w.letters()) {
        out = out * (l > 0 ? images[l - 1] : images[-l - 1].inverse());
      }
      return out;
    }

    // Cyclically reduced, nonempty, one per relator_canonical class, sorted
    // by (length, canonical form).
    inline void tidy_relators(GroupPresentation& p) {
      std::vector<std::pair<FreeWord, FreeWord>> keyed;
      for (auto const& r : p.relators) {
        FreeWord c = cyclic_reduce(r);
        if (c.empty()) {
          continue;
        }
        FreeWord key = relator_canonical(c);
        bool     dup = std::any_of(keyed.begin(), keyed.end(),
                                   [&](auto const& k) { return k.first == key; });
        if (!dup) {
          keyed.emplace_back(std::move(key), std::move(c));
        }
      }
      std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
        return std::pair(a.first.size(), a.first)
               < std::pair(b.first.size(), b.first);
      });
      p.relators.clear();
      for (auto& [key, r] : keyed) {
        p.relators.push_back(std::move(r));
      }
    }

    inline int occurrences(FreeWord const& w, int g) {
      int c = 0;
      for (int l : w.letters()) {
        c += std::abs(l) == g;
      }
      return c;
    }
  }  // namespace detail

  inline constexpr int default_tietze_budget = 1000;

  // Repeatedly drops a generator that occurs exactly once in some relator,
  // taking the shortest such relator and the lowest such generator first.
  inline GroupPresentation tietze_simplify(GroupPresentation p,
                                           int budget = default_tietze_budget) {
    detail::tidy_relators(p);
    for (int move = 0; move < budget; ++move) {
      int         pick_r = -1, pick_g = 0;
      for (std::size_t r = 0; r < p.relators.size() && pick_r < 0; ++r) {
        for (int g = 1; g <= p.rank(); ++g) {
          if (detail::occurrences(p.relators[r], g) == 1) {
            pick_r = static_cast<int>(r);
            pick_g = g;
            break;
          }
        }
      }
      if (pick_r < 0) {
        break;
      }
      // r = u g^e v  gives  g = (u^-1 v^-1)^e
      auto const& rl = p.relators[pick_r].letters();
      std::size_t at = 0;
      while (std::abs(rl[at]) != pick_g) {
        ++at;
      }
      int const rank = p.rank();
      FreeWord  u(rank, std::vector<int>(rl.begin(), rl.begin() + at));
      FreeWord  v(rank, std::vector<int>(rl.begin() + at + 1, rl.end()));
      FreeWord  value = (u.inverse() * v.inverse()).pow(rl[at] > 0 ? 1 : -1);

      std::vector<FreeWord> images;
      for (int g = 1; g <= rank; ++g) {
        int shifted = g < pick_g ? g : g - 1;
        images.push_back(g == pick_g ? FreeWord(rank - 1)
                                     : FreeWord::generator(rank - 1, shifted));
      }
      images[pick_g - 1] = detail::map_word(value, images, rank - 1);

      GroupPresentation next;
      for (int g = 1; g <= rank; ++g) {
        if (g != pick_g) {
          next.generators.push_back(p.generators[g - 1]);
        }
      }
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (static_cast<int>(r) != pick_r) {
          next.relators.push_back(
              detail::map_word(p.relators[r], images, rank - 1));
        }
      }
      p = std::move(next);
      detail::tidy_relators(p);
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  struct AbelianInvariants {
    int                    free_rank = 0;
    std::vector<long long> torsion;  // d_1 | d_2 | ..., each >= 2

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  inline std::string to_string(AbelianInvariants const& a) {
    std::string out;
    if (a.free_rank > 0) {
      out = "Z";
      if (a.free_rank > 1) {
        out += "^" + std::to_string(a.free_rank);
      }
    }
    for (long long d : a.torsion) {
      out += (out.empty() ? "" : " + ") + std::string("Z_") + std::to_string(d);
    }
    return out.empty() ? "1" : out;
  }

  // Diagonal of the Smith normal form (nonzero entries only).
  inline std::vector<long long> smith_diagonal(
      std::vector<std::vector<long long>> m) {
    std::vector<long long> diag;
    std::size_t const      rows = m.size();
    std::size_t const      cols = rows ? m[0].size() : 0;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      for (;;) {
        // Pivot: nonzero entry of least absolute value.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (m[i][j] != 0
                && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
              pr = i;
              pc = j;
            }
          }
        }
        if (pr == rows) {
          return diag;
        }
        std::swap(m[t], m[pr]);
        for (auto& row : m) {
          std::swap(row[t], row[pc]);
        }
        long long const p     = m[t][t];
        bool            clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          long long q = m[i][t] / p;
          for (std::size_t j = t; j < cols; ++j) {
            m[i][j] -= q * m[t][j];
          }
          clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          long long q = m[t][j] / p;
          for (std::size_t i = t; i < rows; ++i) {
            m[i][j] -= q * m[i][t];
          }
          clean = clean && m[t][j] == 0;
        }
        if (!clean) {
          continue;
        }
        // The pivot must divide the rest of the block.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % p != 0) {
              for (std::size_t k = t; k < cols; ++k) {
                m[t][k] += m[i][k];
              }
              divides = false;
              break;
            }
          }
        }
        if (divides) {
          diag.push_back(std::llabs(p));
          break;
        }
      }
    }
    return diag;
  }

  inline AbelianInvariants abelianization(GroupPresentation const& p) {
    std::vector<std::vector<long long>> m;
    for (auto const& r : p.relators) {
      m.push_back(r.exponent_sums());
    }
    auto              diag = smith_diagonal(std::move(m));
    AbelianInvariants a;
    a.free_rank = p.rank() - static_cast<int>(diag.size());
    for (long long d : diag) {
      if (d > 1) {
        a.torsion.push_back(d);
      }
    }
    std::sort(a.torsion.begin(), a.torsion.end());
    return a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    class CosetTable {
     public:
      CosetTable(int rank, std::size_t cap) : cols_(2 * rank), cap_(cap) {
        add_row();
      }

      static int column(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
      }
      static int inverse_column(int c) {
        return c ^ 1;
      }

      bool overflow() const noexcept {
        return overflow_;
      }
      std::size_t size() const noexcept {
        return parent_.size();
      }
      bool alive(int c) const {
        return parent_[c] == c;
      }
      int entry(int c, int col) const {
        return table_[c * cols_ + col];
      }

      std::size_t live_count() const {
        std::size_t n = 0;
        for (std::size_t c = 0; c < size(); ++c) {
          n += alive(static_cast<int>(c));
        }
        return n;
      }

      bool define(int c, int col) {
        if (size() >= cap_) {
          overflow_ = true;
          return false;
        }
        int d = add_row();
        set(c, col, d);
        return true;
      }

      // Traces w from c forwards and backwards, filling in at most one gap
      // per pass; records coincidences and deductions.
      bool scan_and_fill(int c, std::vector<int> const& w) {
        if (w.empty()) {
          return true;
        }
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
          while (i <= j && entry(f, column(w[i])) >= 0) {
            f = entry(f, column(w[i]));
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j >= i && entry(b, inverse_column(column(w[j]))) >= 0) {
            b = entry(b, inverse_column(column(w[j])));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return true;
          }
          if (i == j) {
            set(f, column(w[i]), b);
            return true;
          }
          if (!define(f, column(w[i]))) {
            return false;
          }
        }
      }

     private:
      int add_row() {
        int c = static_cast<int>(parent_.size());
        parent_.push_back(c);
        table_.insert(table_.end(), cols_, -1);
        return c;
      }

      void set(int c, int col, int d) {
        table_[c * cols_ + col]                     = d;
        table_[d * cols_ + inverse_column(col)]     = c;
      }

      int rep(int c) {
        int r = c;
        while (parent_[r] != r) {
          r = parent_[r];
        }
        while (parent_[c] != r) {
          int next   = parent_[c];
          parent_[c] = r;
          c          = next;
        }
        return r;
      }

      void merge(int a, int b, std::vector<int>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent_[b] = a;
        queue.push_back(b);
      }

      void coincidence(int a, int b) {
        std::vector<int> queue;
        merge(a, b, queue);
        for (std::size_t k = 0; k < queue.size(); ++k) {
          int e = queue[k];
          for (int x = 0; x < cols_; ++x) {
            int f = entry(e, x);
            if (f < 0) {
              continue;
            }
            table_[f * cols_ + inverse_column(x)] = -1;
            int e1 = rep(e), f1 = rep(f);
            if (entry(e1, x) >= 0) {
              merge(f1, entry(e1, x), queue);
            } else if (entry(f1, inverse_column(x)) >= 0) {
              merge(e1, entry(f1, inverse_column(x)), queue);
            } else {
              set(e1, x, f1);
            }
          }
        }
      }

      int              cols_;
      std::size_t      cap_;
      bool             overflow_ = false;
      std::vector<int> parent_;
      std::vector<int> table_;
    };
  }  // namespace detail

  // Index of the subgroup generated by subgroup_gens, or nullopt when the
  // enumeration does not close within max_cosets.
  inline std::optional<std::size_t> todd_coxeter(
      GroupPresentation const&     p,
      std::vector<FreeWord> const& subgroup_gens,
      std::size_t                  max_cosets) {
    if (max_cosets < 1) {
      throw PreconditionError("todd_coxeter: max_cosets must be positive");
    }
    if (p.rank() == 0) {
      return 1;
    }
    detail::CosetTable t(p.rank(), max_cosets);
    for (auto const& h : subgroup_gens) {
      if (!t.scan_and_fill(0, h.letters())) {
        return std::nullopt;
      }
    }
    int const cols = 2 * p.rank();
    for (std::size_t c = 0; c < t.size(); ++c) {
      int const cc = static_cast<int>(c);
      for (auto const& r : p.relators) {
        if (!t.alive(cc)) {
          break;
        }
        if (!t.scan_and_fill(cc, r.letters())) {
          return std::nullopt;
        }
      }
      for (int x = 0; x < cols && t.alive(cc); ++x) {
        if (t.entry(cc, x) < 0 && !t.define(cc, x)) {
          return std::nullopt;
        }
      }
    }
    // Closed table: every live row is complete and every relator loops.
    for (std::size_t c = 0; c < t.size(); ++c) {
      int const cc = static_cast<int>(c);
      if (!t.alive(cc)) {
        continue;
      }
      for (int x = 0; x < cols; ++x) {
        if (t.entry(cc, x) < 0 || !t.alive(t.entry(cc, x))) {
          return std::nullopt;
        }
      }
      for (auto const& r : p.relators) {
        int d = cc;
        for (int l : r.letters()) {
          d = t.entry(d, detail::CosetTable::column(l));
        }
        if (d != cc) {
          return std::nullopt;
        }
      }
    }
    return t.live_count();
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups and homomorphism counts
  ////////////////////////////////////////////////////////////////////////

  class FiniteGroupModel {
   public:
    // Closure of the given permutations of {0..degree-1}; element 0 is the
    // identity and elements are listed in breadth-first order.
    static FiniteGroupModel generated_by(std::string                   name,
                                         int                           degree,
                                         std::vector<std::vector<int>> gens,
                                         std::size_t max_order = 5040) {
      FiniteGroupModel g;
      g.name_ = std::move(name);
      std::vector<int> id(degree);
      std::iota(id.begin(), id.end(), 0);
      std::map<std::vector<int>, int> index;
      std::vector<std::vector<int>>   elems{id};
      index[id] = 0;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        for (auto const& s : gens) {
          std::vector<int> prod(degree);
          for (int x = 0; x < degree; ++x) {
            prod[x] = s[elems[k][x]];
          }
          if (index.emplace(prod, static_cast<int>(elems.size())).second) {
            elems.push_back(prod);
            if (elems.size() > max_order) {
              throw BudgetExceeded("FiniteGroupModel: group too large");
            }
          }
        }
      }
      int const n = static_cast<int>(elems.size());
      g.mul_.assign(n * n, 0);
      g.inv_.assign(n, 0);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          // a then b, acting on the right
          std::vector<int> prod(degree);
          for (int x = 0; x < degree; ++x) {
            prod[x] = elems[b][elems[a][x]];
          }
          int ab           = index.at(prod);
          g.mul_[a * n + b] = ab;
          if (ab == 0) {
            g.inv_[a] = b;
          }
        }
      }
      g.order_ = n;
      return g;
    }

    static FiniteGroupModel cyclic(int k) {
      if (k < 1) {
        throw RangeError("cyclic group order must be positive");
      }
      std::vector<int> r(k);
      for (int x = 0; x < k; ++x) {
        r[x] = (x + 1) % k;
      }
      return generated_by("z" + std::to_string(k), k, {r});
    }

    static FiniteGroupModel symmetric(int m) {
      if (m < 1 || m > 7) {
        throw RangeError("symmetric group degree must be in 1..7");
      }
      std::vector<std::vector<int>> gens;
      for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> s(m);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[i], s[i + 1]);
        gens.push_back(s);
      }
      return generated_by("s" + std::to_string(m), m, gens);
    }

    static FiniteGroupModel dihedral(int k) {
      if (k < 3) {
        throw RangeError("dihedral group needs at least 3 vertices");
      }
      std::vector<int> r(k), f(k);
      for (int x = 0; x < k; ++x) {
        r[x] = (x + 1) % k;
        f[x] = (k - x) % k;
      }
      return generated_by("d" + std::to_string(k), k, {r, f});
    }

    // z<k> | s<m> | d<k>
    static FiniteGroupModel named(std::string const& s) {
      if (s.size() >= 2 && s.size() <= 4
          && s.find_first_not_of("0123456789", 1) == std::string::npos) {
        int k = std::stoi(s.substr(1));
        switch (s[0]) {
          case 'z': return cyclic(k);
          case 's': return symmetric(k);
          case 'd': return dihedral(k);
          default: break;
        }
      }
      throw SyntaxError("unknown finite group '" + s + "'");
    }

    std::string const& name() const noexcept {
      return name_;
    }
    int order() const noexcept {
      return order_;
    }
    int mul(int a, int b) const {
      return mul_[a * order_ + b];
    }
    int inv(int a) const {
      return inv_[a];
    }

   private:
    std::string      name_;
    int              order_ = 0;
    std::vector<int> mul_, inv_;
  };

  inline constexpr std::uint64_t default_hom_budget = 100'000'000;

  // Assignments of generators to group elements killing every relator.
  // Each relator is checked as soon as its last generator is assigned.
  inline std::uint64_t count_homs(GroupPresentation const& p,
                                  FiniteGroupModel const&  g,
                                  std::uint64_t budget = default_hom_budget) {
    std::uint64_t space = 1;
    for (int k = 0; k < p.rank(); ++k) {
      space *= static_cast<std::uint64_t>(g.order());
      if (space > budget) {
        throw BudgetExceeded("count_homs: " + std::to_string(g.order()) + "^"
                             + std::to_string(p.rank())
                             + " assignments exceed the budget");
      }
    }
    std::vector<std::vector<FreeWord const*>> due(p.rank() + 1);
    for (auto const& r : p.relators) {
      int last = 0;
      for (int l : r.letters()) {
        last = std::max(last, std::abs(l));
      }
      due[last].push_back(&r);
    }
    for (auto const* r : due[0]) {
      if (!r->empty()) {
        return 0;
      }
    }
    std::vector<int> val(p.rank() + 1, 0);
    auto             holds = [&](FreeWord const& r) {
      int e = 0;
      for (int l : r.letters()) {
        e = g.mul(e, l > 0 ? val[l] : g.inv(val[-l]));
      }
      return e == 0;
    };
    std::uint64_t                  count = 0;
    std::function<void(int)> assign = [&](int k) {
      if (k > p.rank()) {
        ++count;
        return;
      }
      for (int a = 0; a < g.order(); ++a) {
        val[k] = a;
        bool ok = true;
        for (auto const* r : due[k]) {
          if (!holds(*r)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          assign(k + 1);
        }
      }
    };
    assign(1);
    return count;
  }

}  // namespace singbraid

#endif  // SINGBRAID_INVARIANTS_HPP
