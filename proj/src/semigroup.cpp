#include "lambdax/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "iso_search.hpp"

namespace lambdax {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  struct FiniteSemigroup::Memo {
    std::shared_mutex                                    lock;
    std::unordered_map<std::uint64_t, element_type>      products;
  };

  FiniteSemigroup::FiniteSemigroup(std::size_t size, std::vector<element_type> table)
      : _size(size), _table(std::move(table)) {
    if (_table.size() != size * size) {
      throw std::invalid_argument("semigroup table has the wrong size");
    }
    for (auto v : _table) {
      if (v >= size) {
        throw std::invalid_argument("semigroup table entry out of range");
      }
    }
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t size, Mul mul) : _size(size) {
    if (size <= kMaterializeLimit) {
      _table.resize(size * size);
      for (element_type a = 0; a < size; ++a) {
        for (element_type b = 0; b < size; ++b) {
          auto v = mul(a, b);
          if (v >= size) {
            throw std::invalid_argument("product out of range");
          }
          _table[std::size_t(a) * size + b] = v;
        }
      }
    } else {
      _mul  = std::move(mul);
      _memo = std::make_unique<Memo>();
    }
  }

  FiniteSemigroup::~FiniteSemigroup()                                 = default;
  FiniteSemigroup::FiniteSemigroup(FiniteSemigroup&&) noexcept        = default;
  FiniteSemigroup& FiniteSemigroup::operator=(FiniteSemigroup&&) noexcept = default;

  FiniteSemigroup::element_type FiniteSemigroup::slow_mul(element_type a,
                                                          element_type b) const {
    std::uint64_t key = (std::uint64_t(a) << 32) | b;
    {
      std::shared_lock guard(_memo->lock);
      auto             it = _memo->products.find(key);
      if (it != _memo->products.end()) {
        return it->second;
      }
    }
    // computed outside the lock; a duplicate computation stores the same value
    auto v = _mul(a, b);
    std::unique_lock guard(_memo->lock);
    _memo->products.emplace(key, v);
    return v;
  }

  std::vector<FiniteSemigroup::element_type> const& FiniteSemigroup::table() const {
    if (!materialized()) {
      throw std::logic_error("semigroup is not materialized");
    }
    return _table;
  }

  bool FiniteSemigroup::check_associative(std::uint64_t seed) const {
    if (_size <= 512) {
      for (element_type a = 0; a < _size; ++a) {
        for (element_type b = 0; b < _size; ++b) {
          auto ab = mul(a, b);
          for (element_type c = 0; c < _size; ++c) {
            if (mul(ab, c) != mul(a, mul(b, c))) {
              return false;
            }
          }
        }
      }
      return true;
    }
    std::mt19937_64                             rng(seed);
    std::uniform_int_distribution<element_type> pick(0, element_type(_size - 1));
    for (int i = 0; i < 100'000; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
        return false;
      }
    }
    return true;
  }

  FiniteSemigroup left_zero_semigroup(std::size_t k) {
    std::vector<SemigroupElement> t(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        t[a * k + b] = SemigroupElement(a);
      }
    }
    return FiniteSemigroup(k, std::move(t));
  }

  FiniteSemigroup group_semigroup(FiniteGroup const& g) {
    std::size_t const             n = g.order();
    std::vector<SemigroupElement> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = g.mul(a, b);
      }
    }
    return FiniteSemigroup(n, std::move(t));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& s, FiniteSemigroup const& t) {
    std::size_t const m = t.size();
    return FiniteSemigroup(s.size() * m, [&s, &t, m](SemigroupElement x, SemigroupElement y) {
      return SemigroupElement(s.mul(SemigroupElement(x / m), SemigroupElement(y / m)) * m
                              + t.mul(SemigroupElement(x % m), SemigroupElement(y % m)));
    });
  }

  FiniteSemigroup restrict_to(FiniteSemigroup const& s, ElementSet const& elements) {
    std::unordered_map<SemigroupElement, SemigroupElement> local;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      local[elements[i]] = SemigroupElement(i);
    }
    std::size_t const             k = elements.size();
    std::vector<SemigroupElement> t(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto it = local.find(s.mul(elements[i], elements[j]));
        if (it == local.end()) {
          throw std::invalid_argument("subset is not closed under multiplication");
        }
        t[i * k + j] = it->second;
      }
    }
    return FiniteSemigroup(k, std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and subgroups
  ////////////////////////////////////////////////////////////////////////

  ElementSet idempotents(FiniteSemigroup const& s) {
    ElementSet out;
    for (SemigroupElement x = 0; x < s.size(); ++x) {
      if (s.mul(x, x) == x) {
        out.push_back(x);
      }
    }
    if (out.empty() && s.size() > 0) {
      throw std::logic_error("finite semigroup without idempotents");
    }
    return out;
  }

  ElementSet left_multiples(FiniteSemigroup const& s, SemigroupElement x) {
    std::vector<char> seen(s.size(), 0);
    ElementSet        out;
    for (SemigroupElement y = 0; y < s.size(); ++y) {
      auto v = s.mul(y, x);
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {

    // Descends x -> y ∈ Sx with |Sy| < |Sx|; a full sweep without descent
    // certifies that Sx is a minimal left ideal.
    ElementSet some_minimal_left_ideal(FiniteSemigroup const& s) {
      auto l = left_multiples(s, 0);
      while (true) {
        bool descended = false;
        for (auto y : l) {
          auto ly = left_multiples(s, y);
          if (ly.size() < l.size()) {
            l         = std::move(ly);
            descended = true;
            break;
          }
        }
        if (!descended) {
          return l;
        }
      }
    }

  }  // namespace

  ElementSet minimal_ideal(FiniteSemigroup const& s) {
    if (s.size() == 0) {
      return {};
    }
    auto              l = some_minimal_left_ideal(s);
    std::vector<char> seen(s.size(), 0);
    ElementSet        out;
    for (auto x : l) {
      for (SemigroupElement y = 0; y < s.size(); ++y) {
        auto v = s.mul(x, y);
        if (!seen[v]) {
          seen[v] = 1;
          out.push_back(v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElementSet> minimal_left_ideals(FiniteSemigroup const& s) {
    auto                    k = minimal_ideal(s);
    std::vector<char>       covered(s.size(), 0);
    std::vector<ElementSet> out;
    for (auto x : k) {
      if (covered[x]) {
        continue;
      }
      auto l = left_multiples(s, x);
      for (auto y : l) {
        covered[y] = 1;
      }
      out.push_back(std::move(l));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  namespace {
    ElementSet unit_group_elements(FiniteSemigroup const& s, SemigroupElement e);
  }

  ElementSet maximal_subgroup_elements(FiniteSemigroup const& s, SemigroupElement e) {
    if (s.mul(e, e) != e) {
      throw std::invalid_argument("maximal_subgroup needs an idempotent");
    }
    return unit_group_elements(s, e);
  }

  namespace {

    ElementSet unit_group_elements(FiniteSemigroup const& s, SemigroupElement e) {
      std::vector<char> seen(s.size(), 0);
      ElementSet        ese;
      for (SemigroupElement x = 0; x < s.size(); ++x) {
        auto v = s.mul(s.mul(e, x), e);
        if (!seen[v]) {
          seen[v] = 1;
          ese.push_back(v);
        }
      }
      std::sort(ese.begin(), ese.end());
      ElementSet units{e};
      for (auto x : ese) {
        if (x == e) {
          continue;
        }
        bool unit = std::any_of(ese.begin(), ese.end(), [&](auto y) {
          return s.mul(x, y) == e && s.mul(y, x) == e;
        });
        if (unit) {
          units.push_back(x);
        }
      }
      return units;
    }

  }  // namespace

  MaximalSubgroup maximal_subgroup(FiniteSemigroup const& s, SemigroupElement e) {
    if (s.mul(e, e) != e) {
      throw std::invalid_argument("maximal_subgroup needs an idempotent");
    }
    auto units = unit_group_elements(s, e);
    if (units.size() > kMaxGroupOrder) {
      throw GroupError(GroupError::Kind::too_large,
                       "maximal subgroup of order " + std::to_string(units.size())
                           + " exceeds the group size cap");
    }
    std::unordered_map<SemigroupElement, Elem> local;
    for (std::size_t i = 0; i < units.size(); ++i) {
      local[units[i]] = Elem(i);
    }
    std::vector<std::vector<Elem>> t(units.size(), std::vector<Elem>(units.size()));
    for (std::size_t i = 0; i < units.size(); ++i) {
      for (std::size_t j = 0; j < units.size(); ++j) {
        auto it = local.find(s.mul(units[i], units[j]));
        if (it == local.end()) {
          throw std::logic_error("H_e is not closed");
        }
        t[i][j] = it->second;
      }
    }
    return {FiniteGroup(t), units};
  }

  ReesDecomposition rees_decompose(FiniteSemigroup const& s,
                                   ElementSet const&      minimal_left_ideal) {
    auto const& l = minimal_left_ideal;
    ElementSet  e;
    for (auto x : l) {
      if (s.mul(x, x) == x) {
        e.push_back(x);
      }
    }
    if (e.empty()) {
      throw std::logic_error("minimal left ideal without idempotents");
    }
    for (auto x : e) {
      for (auto y : e) {
        if (s.mul(x, y) != x) {
          throw std::logic_error("idempotents of a minimal left ideal are not "
                                 "left zeros");
        }
      }
    }
    auto units = maximal_subgroup_elements(s, e.front());
    if (e.size() * units.size() != l.size()) {
      throw std::logic_error("|E(L)| * |H_e| != |L|");
    }
    ReesDecomposition r{e.size(), std::nullopt, e, units, {}};
    if (units.size() <= kMaxGroupOrder) {
      r.group = maximal_subgroup(s, e.front()).group;
    }
    std::vector<SemigroupElement> image;
    for (auto x : r.left_zeros) {
      for (auto y : r.group_elements) {
        r.pairing.push_back(s.mul(x, y));
      }
    }
    image = r.pairing;
    std::sort(image.begin(), image.end());
    if (image != l) {
      throw std::logic_error("E(L) x H_e -> L is not a bijection");
    }
    return r;
  }

  std::optional<std::vector<std::uint64_t>>
  abelian_invariants_of(FiniteSemigroup const& s, ElementSet const& h) {
    for (auto a : h) {
      for (auto b : h) {
        if (s.mul(a, b) != s.mul(b, a)) {
          return std::nullopt;
        }
      }
    }
    SemigroupElement const e = h.front();
    std::map<std::uint64_t, std::uint64_t> by_order;  // order -> count
    for (auto a : h) {
      std::uint64_t k = 1;
      for (auto p = a; p != e; p = s.mul(p, a)) {
        ++k;
      }
      ++by_order[k];
    }
    // N(d) = #{a : a^d = 1} = ∏ gcd(d, n_i) for the invariants n_i
    auto count_dividing = [&](std::uint64_t d) {
      std::uint64_t c = 0;
      for (auto const& [k, cnt] : by_order) {
        c += d % k == 0 ? cnt : 0;
      }
      return c;
    };
    std::vector<std::uint64_t> out;
    std::uint64_t              rest = h.size();
    for (std::uint64_t p = 2; rest > 1; ++p) {
      if (rest % p != 0) {
        continue;
      }
      while (rest % p == 0) {
        rest /= p;
      }
      // rank of the p-layers: #{i : e_i >= k} = log_p N(p^k) - log_p N(p^{k-1})
      std::vector<std::size_t> layers;
      std::size_t              prev = 0;
      for (std::uint64_t pk = p;; pk *= p) {
        std::size_t lg = 0;
        for (auto c = count_dividing(pk); c > 1; c /= p) {
          ++lg;
        }
        if (lg == prev) {
          break;
        }
        layers.push_back(lg - prev);
        prev = lg;
      }
      for (std::size_t k = 0; k < layers.size(); ++k) {
        std::size_t exact = layers[k] - (k + 1 < layers.size() ? layers[k + 1] : 0);
        std::uint64_t q   = 1;
        for (std::size_t i = 0; i <= k; ++i) {
          q *= p;
        }
        out.insert(out.end(), exact, q);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::uint64_t> semigroup_keys(FiniteSemigroup const& s) {
      std::size_t const          n = s.size();
      std::vector<std::uint64_t> keys(n);
      std::vector<std::uint32_t> stamp(n, 0), pos(n, 0);
      std::uint32_t              clock = 0;
      for (SemigroupElement x = 0; x < n; ++x) {
        // index and period of the monogenic subsemigroup
        ++clock;
        SemigroupElement p     = x;
        std::uint64_t    index = 0, period = 0;
        for (std::uint32_t i = 1;; ++i) {
          if (stamp[p] == clock) {
            index  = pos[p];
            period = i - pos[p];
            break;
          }
          stamp[p] = clock;
          pos[p]   = i;
          p        = s.mul(p, x);
        }
        ++clock;
        std::uint64_t right = 0, left = 0;
        for (SemigroupElement y = 0; y < n; ++y) {
          auto v = s.mul(x, y);
          if (stamp[v] != clock) {
            stamp[v] = clock;
            ++right;
          }
        }
        ++clock;
        for (SemigroupElement y = 0; y < n; ++y) {
          auto v = s.mul(y, x);
          if (stamp[v] != clock) {
            stamp[v] = clock;
            ++left;
          }
        }
        keys[x] = (std::uint64_t(s.mul(x, x) == x) << 60) | (index << 45)
                  | (period << 30) | (right << 15) | left;
      }
      return keys;
    }

  }  // namespace

  IsomorphismResult semigroup_isomorphic(FiniteSemigroup const& s1,
                                         FiniteSemigroup const& s2,
                                         std::uint64_t          budget) {
    IsomorphismResult r;
    if (s1.size() != s2.size()) {
      return r;
    }
    if (s1.size() > kMaterializeLimit) {
      r.verdict = Tri::indeterminate;
      return r;
    }
    auto e1 = idempotents(s1), e2 = idempotents(s2);
    if (e1.size() != e2.size()) {
      return r;
    }
    auto search = detail::isomorphism_search(s1.size(),
                                             s1.table(),
                                             s2.table(),
                                             semigroup_keys(s1),
                                             semigroup_keys(s2),
                                             budget);
    switch (search.verdict) {
      case detail::SearchVerdict::yes:
        r.verdict = Tri::yes;
        r.map     = std::move(search.map);
        break;
      case detail::SearchVerdict::no:
        r.verdict = Tri::no;
        break;
      case detail::SearchVerdict::budget:
        r.verdict = Tri::indeterminate;
        break;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // End(T_K) and wreath products
  ////////////////////////////////////////////////////////////////////////

  EndTK end_tk(FiniteGroup const& g, TwoCogroup const& k, std::size_t budget) {
    auto              family = twin_sets_for(g, k);
    std::size_t const t      = family.sets.size();
    std::size_t const r      = family.orbits.size();
    std::size_t       total  = 1;
    for (std::size_t i = 0; i < r; ++i) {
      if (total > budget / t) {
        throw std::length_error("End(T_K) exceeds the size budget");
      }
      total *= t;
    }

    std::map<Mask, std::uint32_t> id;
    for (std::size_t i = 0; i < t; ++i) {
      id[family.sets[i]] = std::uint32_t(i);
    }
    // every twin set as x * rep_i with x ∈ Stab(K)
    std::vector<std::uint32_t> orbit_of(t);
    std::vector<Elem>          mover(t);
    for (std::size_t i = 0; i < r; ++i) {
      Mask rep = family.orbits[i].front();
      for (Mask m = k.stab; m != 0; m &= m - 1) {
        Elem x   = Elem(__builtin_ctzll(m));
        auto a   = id.at(g.shift(x, rep));
        orbit_of[a] = std::uint32_t(i);
        mover[a]    = x;
      }
    }
    std::vector<std::uint32_t> rep_id(r);
    for (std::size_t i = 0; i < r; ++i) {
      rep_id[i] = id.at(family.orbits[i].front());
    }

    if (total > kMaterializeLimit) {
      throw std::length_error("End(T_K) too large to materialize");
    }
    std::vector<EndoMap> maps(total);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> choice(r);
      for (std::size_t i = 0, c = code; i < r; ++i, c /= t) {
        choice[i] = std::uint32_t(c % t);
      }
      auto& images = maps[code].images;
      images.resize(t);
      for (std::size_t a = 0; a < t; ++a) {
        Mask target = family.sets[choice[orbit_of[a]]];
        images[a]   = id.at(g.shift(mover[a], target));
      }
    }
    auto encode = [&](std::vector<std::uint32_t> const& images) {
      std::size_t code = 0;
      for (std::size_t i = r; i-- > 0;) {
        code = code * t + images[rep_id[i]];
      }
      return SemigroupElement(code);
    };
    FiniteSemigroup sg(total, [&maps, &encode, t](SemigroupElement f, SemigroupElement h) {
      std::vector<std::uint32_t> comp(t);
      for (std::size_t a = 0; a < t; ++a) {
        comp[a] = maps[f].images[maps[h].images[a]];
      }
      return encode(comp);
    });

    EndTK out{std::move(family),
              std::size_t(popcount(k.stab) / popcount(k.kk)),
              r,
              std::move(maps),
              std::move(sg),
              std::move(orbit_of)};
    return out;
  }

  ElementSet single_orbit_maps(EndTK const& e) {
    ElementSet out;
    for (SemigroupElement f = 0; f < e.maps.size(); ++f) {
      auto const& im = e.maps[f].images;
      bool        one = std::all_of(im.begin(), im.end(), [&](auto a) {
        return e.orbit_of[a] == e.orbit_of[im.front()];
      });
      if (one) {
        out.push_back(f);
      }
    }
    return out;
  }

  FiniteSemigroup wreath_product(FiniteGroup const& h, std::size_t a_size, std::size_t budget) {
    if (a_size == 0) {
      throw std::invalid_argument("wreath product needs a nonempty set");
    }
    std::size_t const hn = h.order();
    std::size_t       hpow = 1, fpow = 1;
    for (std::size_t i = 0; i < a_size; ++i) {
      hpow *= hn;
      fpow *= a_size;
      if (hpow * fpow > budget) {
        throw std::length_error("wreath product exceeds the size budget");
      }
    }
    auto decode = [=](SemigroupElement id, std::vector<Elem>& hv, std::vector<std::size_t>& fv) {
      std::size_t hc = id % hpow, fc = id / hpow;
      for (std::size_t a = 0; a < a_size; ++a) {
        hv[a] = Elem(hc % hn);
        hc /= hn;
        fv[a] = fc % a_size;
        fc /= a_size;
      }
    };
    auto mul = [=, &h](SemigroupElement x, SemigroupElement y) {
      std::vector<Elem>        h1(a_size), h2(a_size);
      std::vector<std::size_t> f1(a_size), f2(a_size);
      decode(x, h1, f1);
      decode(y, h2, f2);
      std::size_t hc = 0, fc = 0;
      for (std::size_t a = a_size; a-- > 0;) {
        hc = hc * hn + h.mul(h1[f2[a]], h2[a]);
        fc = fc * a_size + f1[f2[a]];
      }
      return SemigroupElement(fc * hpow + hc);
    };
    return FiniteSemigroup(hpow * fpow, mul);
  }

}  // namespace lambdax
