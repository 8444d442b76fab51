#include "iso_search.hpp"

#include <algorithm>
#include <map>

namespace lambdax::detail {

  namespace {

    using Table = std::vector<std::uint32_t>;

    std::size_t closure_size(std::size_t                       n,
                             Table const&                      t,
                             std::vector<std::uint32_t> const& gens,
                             std::vector<char>&                seen) {
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<std::uint32_t> queue;
      for (auto g : gens) {
        if (!seen[g]) {
          seen[g] = 1;
          queue.push_back(g);
        }
      }
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto g : gens) {
          auto w = t[queue[i] * n + g];
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      return queue.size();
    }

    struct Searcher {
      std::size_t                       n;
      Table const&                      t1;
      Table const&                      t2;
      std::vector<std::uint64_t> const& key1;
      std::vector<std::uint64_t> const& key2;
      std::uint64_t                     budget;
      std::uint64_t                     nodes = 0;
      std::vector<std::uint32_t>        gens;
      std::map<std::uint64_t, std::vector<std::uint32_t>> by_key2;

      bool out_of_budget = false;

      // Propagates the partial map along right multiplication by the first
      // `t + 1` generators. Returns false on a contradiction.
      bool propagate(std::size_t                 t,
                     std::vector<std::int64_t>&  f,
                     std::vector<char>&          used,
                     std::vector<std::uint32_t>& mapped) const {
        for (std::size_t i = 0; i < mapped.size(); ++i) {
          auto u = mapped[i];
          for (std::size_t j = 0; j <= t; ++j) {
            auto g  = gens[j];
            auto w  = t1[u * n + g];
            auto w2 = t2[std::size_t(f[u]) * n + std::size_t(f[g])];
            if (f[w] < 0) {
              if (used[w2] || key1[w] != key2[w2]) {
                return false;
              }
              f[w]     = w2;
              used[w2] = 1;
              mapped.push_back(w);
            } else if (std::uint32_t(f[w]) != w2) {
              return false;
            }
          }
        }
        return true;
      }

      bool run(std::size_t                 t,
               std::vector<std::int64_t>&  f,
               std::vector<char>&          used,
               std::vector<std::uint32_t>& mapped) {
        if (t == gens.size()) {
          return mapped.size() == n;
        }
        auto g  = gens[t];
        auto it = by_key2.find(key1[g]);
        if (it == by_key2.end()) {
          return false;
        }
        for (auto c : it->second) {
          if (used[c]) {
            continue;
          }
          if (++nodes > budget) {
            out_of_budget = true;
            return false;
          }
          auto f2      = f;
          auto used2   = used;
          auto mapped2 = mapped;
          f2[g]        = c;
          used2[c]     = 1;
          mapped2.push_back(g);
          if (propagate(t, f2, used2, mapped2) && run(t + 1, f2, used2, mapped2)) {
            f      = std::move(f2);
            used   = std::move(used2);
            mapped = std::move(mapped2);
            return true;
          }
          if (out_of_budget) {
            return false;
          }
        }
        return false;
      }
    };

  }  // namespace

  SearchResult isomorphism_search(std::size_t                       n,
                                  std::vector<std::uint32_t> const& t1,
                                  std::vector<std::uint32_t> const& t2,
                                  std::vector<std::uint64_t> const& key1,
                                  std::vector<std::uint64_t> const& key2,
                                  std::uint64_t                     budget) {
    SearchResult result;
    if (n == 0) {
      result.verdict = SearchVerdict::yes;
      return result;
    }
    {
      auto a = key1, b = key2;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return result;
      }
    }
    std::map<std::uint64_t, std::size_t> class_size;
    for (auto k : key1) {
      ++class_size[k];
    }

    Searcher s{n, t1, t2, key1, key2, budget, 0, {}, {}};
    for (std::uint32_t x = 0; x < n; ++x) {
      s.by_key2[key2[x]].push_back(x);
    }

    // Greedy generating set: largest closure gain, then rarest invariant.
    std::vector<char> covered(n, 0), scratch(n, 0);
    std::size_t       covered_count = 0;
    while (covered_count < n) {
      std::vector<std::uint32_t> cand;
      for (std::uint32_t x = 0; x < n; ++x) {
        if (!covered[x]) {
          cand.push_back(x);
        }
      }
      std::stable_sort(cand.begin(), cand.end(), [&](auto x, auto y) {
        return class_size[key1[x]] < class_size[key1[y]];
      });
      if (cand.size() > 64) {
        cand.resize(64);
      }
      std::uint32_t best      = cand.front();
      std::size_t   best_gain = 0;
      for (auto x : cand) {
        auto trial = s.gens;
        trial.push_back(x);
        auto size = closure_size(n, t1, trial, scratch);
        if (size > best_gain) {
          best_gain = size;
          best      = x;
        }
      }
      s.gens.push_back(best);
      covered_count = closure_size(n, t1, s.gens, covered);
    }

    std::vector<std::int64_t>  f(n, -1);
    std::vector<char>          used(n, 0);
    std::vector<std::uint32_t> mapped;
    if (s.run(0, f, used, mapped)) {
      result.verdict = SearchVerdict::yes;
      result.map.assign(f.begin(), f.end());
      return result;
    }
    result.verdict = s.out_of_budget ? SearchVerdict::budget : SearchVerdict::no;
    return result;
  }

}  // namespace lambdax::detail
