// Brute-force reference implementations for the unit tests.
//
// Nothing here uses the library's bit tables or search code: groups are plain
// multiplication tables, subsets are std::set<int>, families are sets of
// sets. Slow on purpose.

#ifndef LAMBDAX_TESTS_ORACLES_HPP_
#define LAMBDAX_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

  using Table  = std::vector<std::vector<int>>;
  using Subset = std::set<int>;
  using Family = std::set<Subset>;

  inline int identity(Table const& t) {
    int n = int(t.size());
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n; ++x) {
        ok = ok && t[e][x] == x && t[x][e] == x;
      }
      if (ok) {
        return e;
      }
    }
    return -1;
  }

  inline int inverse(Table const& t, int x) {
    int e = identity(t);
    for (int y = 0; y < int(t.size()); ++y) {
      if (t[x][y] == e) {
        return y;
      }
    }
    return -1;
  }

  inline int element_order(Table const& t, int x) {
    int e = identity(t), k = 1, p = x;
    while (p != e) {
      p = t[p][x];
      ++k;
    }
    return k;
  }

  inline Subset from_mask(std::uint64_t m) {
    Subset s;
    for (int i = 0; m != 0; ++i, m >>= 1) {
      if (m & 1) {
        s.insert(i);
      }
    }
    return s;
  }

  inline std::uint64_t to_mask(Subset const& s) {
    std::uint64_t m = 0;
    for (int i : s) {
      m |= std::uint64_t(1) << i;
    }
    return m;
  }

  inline Subset all_elements(Table const& t) {
    Subset s;
    for (int i = 0; i < int(t.size()); ++i) {
      s.insert(i);
    }
    return s;
  }

  // xA
  inline Subset left_shift(Table const& t, int x, Subset const& a) {
    Subset r;
    for (int y : a) {
      r.insert(t[x][y]);
    }
    return r;
  }

  inline Subset right_shift(Table const& t, Subset const& a, int x) {
    Subset r;
    for (int y : a) {
      r.insert(t[y][x]);
    }
    return r;
  }

  inline Subset complement(Table const& t, Subset const& a) {
    Subset r;
    for (int i = 0; i < int(t.size()); ++i) {
      if (!a.count(i)) {
        r.insert(i);
      }
    }
    return r;
  }

  inline bool closed_subgroup(Table const& t, Subset const& h) {
    if (h.empty()) {
      return false;
    }
    for (int a : h) {
      for (int b : h) {
        if (!h.count(t[a][b])) {
          return false;
        }
      }
    }
    return true;  // finite: closed and nonempty is a subgroup
  }

  // Every subset tested for closure; |X| <= 16.
  inline std::vector<Subset> subgroups(Table const& t) {
    std::vector<Subset> out;
    std::uint64_t const n = t.size();
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      auto s = from_mask(m);
      if (closed_subgroup(t, s)) {
        out.push_back(s);
      }
    }
    return out;
  }

  inline bool is_normal(Table const& t, Subset const& h) {
    for (int x = 0; x < int(t.size()); ++x) {
      if (left_shift(t, x, h) != right_shift(t, h, x)) {
        return false;
      }
    }
    return true;
  }

  // K = H± \ H for subgroups H ⊂ H± of index 2, straight from the definition
  inline std::set<Subset> two_cogroups(Table const& t) {
    std::set<Subset> out;
    auto             subs = subgroups(t);
    for (auto const& big : subs) {
      for (auto const& small : subs) {
        if (2 * small.size() != big.size()) {
          continue;
        }
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
          continue;
        }
        Subset k;
        std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                            std::inserter(k, k.end()));
        out.insert(k);
      }
    }
    return out;
  }

  inline std::set<Subset> maximal_two_cogroups(Table const& t) {
    auto             all = two_cogroups(t);
    std::set<Subset> out;
    for (auto const& k : all) {
      bool maximal = true;
      for (auto const& k2 : all) {
        if (k2 != k && std::includes(k2.begin(), k2.end(), k.begin(), k.end())) {
          maximal = false;
        }
      }
      if (maximal) {
        out.insert(k);
      }
    }
    return out;
  }

  inline Subset fix_minus(Table const& t, Subset const& a) {
    Subset r, c = complement(t, a);
    for (int x = 0; x < int(t.size()); ++x) {
      if (left_shift(t, x, a) == c) {
        r.insert(x);
      }
    }
    return r;
  }

  inline Subset conjugate(Table const& t, int x, Subset const& a) {
    return right_shift(t, left_shift(t, x, a), inverse(t, x));
  }

  // {x : x^{-1}S ∈ fam}
  inline Subset phi(Table const& t, Family const& fam, Subset const& s) {
    Subset r;
    for (int x = 0; x < int(t.size()); ++x) {
      if (fam.count(left_shift(t, inverse(t, x), s))) {
        r.insert(x);
      }
    }
    return r;
  }

  inline Family power_set(Table const& t) {
    Family f;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << t.size()); ++m) {
      f.insert(from_mask(m));
    }
    return f;
  }

  // A ∘ B = {S : Φ_B(S) ∈ A}
  inline Family circ(Table const& t, Family const& a, Family const& b) {
    Family r;
    for (auto const& s : power_set(t)) {
      if (a.count(phi(t, b, s))) {
        r.insert(s);
      }
    }
    return r;
  }

  inline bool linked(Family const& f) {
    for (auto const& a : f) {
      for (auto const& b : f) {
        bool meet = std::any_of(a.begin(), a.end(), [&](int x) { return b.count(x); });
        if (!meet) {
          return false;
        }
      }
    }
    return true;
  }

  // Linked and no subset can be added.
  inline bool maximal_linked(Table const& t, Family const& f) {
    if (!linked(f)) {
      return false;
    }
    for (auto const& s : power_set(t)) {
      if (f.count(s)) {
        continue;
      }
      Family g = f;
      g.insert(s);
      if (linked(g)) {
        return false;
      }
    }
    return true;
  }

  // All maximal linked systems on n points: every family of subsets is
  // tested, n <= 4 (2^16 families).
  inline std::vector<Family> all_mls(int n) {
    std::vector<Subset> subsets;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
      subsets.push_back(from_mask(m));
    }
    Table trivial(n, std::vector<int>(n, 0));  // only its size is used
    std::vector<Family> out;
    std::uint64_t const families = std::uint64_t(1) << subsets.size();
    for (std::uint64_t code = 0; code < families; ++code) {
      Family f;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        if ((code >> i) & 1) {
          f.insert(subsets[i]);
        }
      }
      if (maximal_linked(trivial, f)) {
        out.push_back(f);
      }
    }
    return out;
  }

  // Self-dual monotone families on n points, one choice per complementary
  // pair; n <= 5 (2^16 choice vectors).
  inline std::uint64_t count_self_dual_monotone(int n) {
    std::uint64_t const full  = (std::uint64_t(1) << n) - 1;
    std::uint64_t const pairs = std::uint64_t(1) << (n - 1);
    std::uint64_t       count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << pairs); ++code) {
      // member(A): pair rep is the smaller of A and X\A
      auto member = [&](std::uint64_t a) {
        std::uint64_t rep = std::min(a, a ^ full);
        std::uint64_t idx = rep;  // reps are exactly 0 .. pairs-1 by value
        bool          bit = (code >> idx) & 1;
        return rep == a ? bit : !bit;
      };
      bool ok = true;
      for (std::uint64_t a = 0; a <= full && ok; ++a) {
        if (!member(a)) {
          continue;
        }
        for (int i = 0; i < n && ok; ++i) {
          ok = member(a | (std::uint64_t(1) << i));
        }
      }
      count += ok;
    }
    return count;
  }

  // Two-sided minimal ideal of a finite semigroup: the smallest S^1 x S^1.
  inline std::set<int> minimal_ideal(Table const& s) {
    int const     n = int(s.size());
    std::set<int> best;
    for (int x = 0; x < n; ++x) {
      std::set<int> j{x};
      for (int a = 0; a < n; ++a) {
        j.insert(s[a][x]);
        j.insert(s[x][a]);
        for (int b = 0; b < n; ++b) {
          j.insert(s[s[a][x]][b]);
        }
      }
      if (best.empty() || j.size() < best.size()) {
        best = j;
      }
    }
    return best;
  }

  // Isomorphism by trying every bijection; n <= 8.
  inline bool isomorphic_by_permutation(Table const& a, Table const& b) {
    int const n = int(a.size());
    if (int(b.size()) != n) {
      return false;
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          ok = p[a[x][y]] == b[p[x]][p[y]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  // |hom(G, C_m)| by backtracking over images of all elements.
  inline std::uint64_t hom_count_cyclic(Table const& t, int m) {
    int const        n = int(t.size());
    std::vector<int> img(n, -1);
    img[identity(t)]  = 0;
    std::uint64_t count = 0;
    std::function<void(int)> go = [&](int x) {
      if (x == n) {
        ++count;
        return;
      }
      if (img[x] >= 0) {
        go(x + 1);
        return;
      }
      for (int v = 0; v < m; ++v) {
        img[x]  = v;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
          for (int b = 0; b < n && ok; ++b) {
            if (img[a] >= 0 && img[b] >= 0 && img[t[a][b]] >= 0) {
              ok = (img[a] + img[b]) % m == img[t[a][b]];
            }
          }
        }
        if (ok) {
          go(x + 1);
        }
      }
      img[x] = -1;
    };
    go(0);
    return count;
  }

}  // namespace oracle

#endif  // LAMBDAX_TESTS_ORACLES_HPP_
