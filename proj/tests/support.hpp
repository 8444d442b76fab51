#ifndef LAMBDAX_TESTS_SUPPORT_HPP_
#define LAMBDAX_TESTS_SUPPORT_HPP_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lambdax/cli.hpp"
#include "lambdax/group.hpp"
#include "oracles.hpp"

namespace test_support {

  inline oracle::Table table_of(lambdax::FiniteGroup const& g) {
    oracle::Table t(g.order(), std::vector<int>(g.order()));
    for (lambdax::Elem a = 0; a < g.order(); ++a) {
      for (lambdax::Elem b = 0; b < g.order(); ++b) {
        t[a][b] = int(g.mul(a, b));
      }
    }
    return t;
  }

  inline std::vector<lambdax::FiniteGroup> catalog_groups(std::size_t max_order) {
    std::vector<lambdax::FiniteGroup> out;
    for (auto const& spec : lambdax::catalog()) {
      auto g = lambdax::parse_spec(spec);
      if (g.order() <= max_order) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  // Closure of a set of permutations under composition, as a Cayley table.
  // (p*q)(i) = p(q(i)).
  inline oracle::Table permutation_group(std::vector<std::vector<int>> const& gens) {
    using Perm = std::vector<int>;
    int const        deg = int(gens.front().size());
    Perm             id(deg);
    for (int i = 0; i < deg; ++i) {
      id[i] = i;
    }
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (auto const& g : gens) {
        Perm p(deg);
        for (int k = 0; k < deg; ++k) {
          p[k] = elems[i][g[k]];
        }
        if (!index.count(p)) {
          index[p] = int(elems.size());
          elems.push_back(p);
        }
      }
    }
    int const     n = int(elems.size());
    oracle::Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        Perm p(deg);
        for (int k = 0; k < deg; ++k) {
          p[k] = elems[a][elems[b][k]];
        }
        t[a][b] = index.at(p);
      }
    }
    return t;
  }

  // Every equivariant, monotone, symmetric map on the subsets of g, by
  // backtracking over the values on orbit representatives of the shift
  // action. `sink` sees each map indexed by mask.
  inline std::size_t for_each_ems_map(
      lambdax::FiniteGroup const&                          g,
      std::function<void(std::vector<lambdax::Mask> const&)> const& sink) {
    using lambdax::Elem;
    using lambdax::Mask;
    std::size_t const n     = g.order();
    std::size_t const sz    = std::size_t(1) << n;
    Mask const        unset = ~Mask(0);
    std::vector<Mask> reps;
    std::vector<bool> covered(sz, false);
    for (Mask a = 0; a < sz; ++a) {
      if (!covered[a]) {
        reps.push_back(a);
        for (Elem x = 0; x < n; ++x) {
          covered[g.shift(x, a)] = true;
        }
      }
    }
    std::vector<Mask> f(sz, unset);
    std::size_t       found = 0;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == reps.size()) {
        for (Mask a = 0; a < sz; ++a) {
          for (std::size_t k = 0; k < n; ++k) {
            if ((f[a] & ~f[a | (Mask(1) << k)]) != 0) {
              return;
            }
          }
        }
        ++found;
        sink(f);
        return;
      }
      if (f[reps[i]] != unset) {
        go(i + 1);
        return;
      }
      for (Mask v = 0; v < sz; ++v) {
        auto saved = f;
        bool ok    = true;
        for (Elem x = 0; x < n && ok; ++x) {
          Mask a = g.shift(x, reps[i]), fx = g.shift(x, v);
          Mask ca = a ^ g.all(), cfx = fx ^ g.all();
          ok = (f[a] == unset || f[a] == fx) && (f[ca] == unset || f[ca] == cfx);
          f[a]  = fx;
          f[ca] = cfx;
        }
        if (ok) {
          go(i + 1);
        }
        f = saved;
      }
    };
    go(0);
    return found;
  }

}  // namespace test_support

#endif  // LAMBDAX_TESTS_SUPPORT_HPP_
