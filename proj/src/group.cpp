#include "lambdax/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "iso_search.hpp"
#include "json.hpp"

namespace lambdax {

  namespace {

    std::string triple(std::size_t i, std::size_t j, std::size_t k) {
      std::ostringstream os;
      os << "(" << i << "," << j << "," << k << ")";
      return os.str();
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> const& table,
                           std::vector<std::string>              names,
                           std::string                           label)
      : _n(table.size()), _label(std::move(label)) {
    using K = GroupError::Kind;
    if (_n == 0) {
      throw GroupError(K::malformed, "empty Cayley table");
    }
    if (_n > kMaxGroupOrder) {
      throw GroupError(K::too_large,
                       "group order " + std::to_string(_n) + " exceeds "
                           + std::to_string(kMaxGroupOrder));
    }
    if (!names.empty() && names.size() != _n) {
      throw GroupError(K::malformed, "names list has the wrong length");
    }
    std::size_t const n = _n;
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw GroupError(K::malformed,
                         "row " + std::to_string(i) + " has wrong length");
      }
      for (auto v : table[i]) {
        if (v >= n) {
          throw GroupError(K::malformed,
                           "entry out of range in row " + std::to_string(i));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<char> row(n, 0), col(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[table[i][j]]++) {
          throw GroupError(K::not_latin,
                           "row " + std::to_string(i) + " is not a permutation");
        }
        if (col[table[j][i]]++) {
          throw GroupError(K::not_latin, "column " + std::to_string(i)
                                             + " is not a permutation");
        }
      }
    }
    std::size_t e = n;
    for (std::size_t i = 0; i < n && e == n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = table[i][j] == j && table[j][i] == j;
      }
      if (ok) {
        e = i;
      }
    }
    if (e == n) {
      throw GroupError(K::no_identity, "no two-sided identity element");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto ij = table[i][j];
        for (std::size_t k = 0; k < n; ++k) {
          if (table[ij][k] != table[i][table[j][k]]) {
            throw GroupError(K::not_associative,
                             "associativity fails at " + triple(i, j, k));
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n && !found; ++j) {
        found = table[i][j] == e && table[j][i] == e;
      }
      if (!found) {
        throw GroupError(K::no_inverse,
                         "element " + std::to_string(i) + " has no inverse");
      }
    }

    // identity first, the rest in their original order
    _renumbering.assign(n, 0);
    std::vector<Elem> old_of(n);
    {
      Elem next = 1;
      for (std::size_t i = 0; i < n; ++i) {
        _renumbering[i] = (i == e) ? 0 : next++;
        old_of[_renumbering[i]] = Elem(i);
      }
    }
    _table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        _table[i * n + j] = std::uint8_t(
            _renumbering[table[old_of[i]][old_of[j]]]);
      }
    }
    _names.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      _names[i] = names.empty() ? std::to_string(i) : names[old_of[i]];
    }

    _inv.resize(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (mul(a, b) == 0) {
          _inv[a] = b;
          break;
        }
      }
    }
    _elt_order.resize(n);
    for (Elem a = 0; a < n; ++a) {
      std::size_t k = 1;
      for (Elem p = a; p != 0; p = mul(p, a)) {
        ++k;
      }
      _elt_order[a] = k;
    }
    _abelian = true;
    for (Elem a = 0; a < n && _abelian; ++a) {
      for (Elem b = 0; b < n && _abelian; ++b) {
        _abelian = mul(a, b) == mul(b, a);
      }
    }

    _bytes = (n + 7) / 8;
    _lshift.assign(n * _bytes * 256, 0);
    _rshift.assign(n * _bytes * 256, 0);
    for (Elem x = 0; x < n; ++x) {
      for (std::size_t b = 0; b < _bytes; ++b) {
        for (std::size_t v = 0; v < 256; ++v) {
          Mask l = 0, r = 0;
          for (std::size_t j = 0; j < 8; ++j) {
            std::size_t y = 8 * b + j;
            if (((v >> j) & 1) && y < n) {
              l |= Mask(1) << mul(x, Elem(y));
              r |= Mask(1) << mul(Elem(y), x);
            }
          }
          _lshift[(x * _bytes + b) * 256 + v] = l;
          _rshift[(x * _bytes + b) * 256 + v] = r;
        }
      }
    }
  }

  std::string FiniteGroup::name(Elem x) const {
    return _names.at(x);
  }

  Mask FiniteGroup::product(Mask a, Mask b) const noexcept {
    Mask r = 0;
    for (; a != 0; a &= a - 1) {
      r |= shift(Elem(__builtin_ctzll(a)), b);
    }
    return r;
  }

  Mask FiniteGroup::inverse_set(Mask a) const noexcept {
    Mask r = 0;
    for (; a != 0; a &= a - 1) {
      r |= Mask(1) << _inv[__builtin_ctzll(a)];
    }
    return r;
  }

  Mask FiniteGroup::generated(Mask gens) const noexcept {
    Mask h = gens | 1;
    while (true) {
      Mask next = product(h, h) | h;
      if (next == h) {
        return h;
      }
      h = next;
    }
  }

  bool FiniteGroup::is_subgroup(Mask a) const noexcept {
    return (a & 1) && product(a, a) == a;
  }

  bool FiniteGroup::is_normal(Mask a) const noexcept {
    if (!is_subgroup(a)) {
      return false;
    }
    for (Elem x = 0; x < _n; ++x) {
      if (conjugate(x, a) != a) {
        return false;
      }
    }
    return true;
  }

  Mask FiniteGroup::center() const noexcept {
    Mask z = 0;
    for (Elem a = 0; a < _n; ++a) {
      bool central = true;
      for (Elem b = 0; b < _n && central; ++b) {
        central = mul(a, b) == mul(b, a);
      }
      if (central) {
        z |= Mask(1) << a;
      }
    }
    return z;
  }

  Mask FiniteGroup::derived_subgroup() const noexcept {
    Mask c = 1;
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = 0; b < _n; ++b) {
        c |= Mask(1) << mul(mul(_inv[a], _inv[b]), mul(a, b));
      }
    }
    return generated(c);
  }

  std::vector<std::vector<Elem>> FiniteGroup::table() const {
    std::vector<std::vector<Elem>> t(_n, std::vector<Elem>(_n));
    for (Elem i = 0; i < _n; ++i) {
      for (Elem j = 0; j < _n; ++j) {
        t[i][j] = mul(i, j);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups and homomorphisms
  ////////////////////////////////////////////////////////////////////////

  Subgroup make_subgroup(FiniteGroup const& g, Mask members) {
    if ((members & ~g.all()) != 0 || !g.is_subgroup(members)) {
      throw GroupError(GroupError::Kind::not_subgroup,
                       "subset is not a subgroup");
    }
    Subgroup s;
    s.members = members;
    s.order   = std::size_t(popcount(members));
    s.index   = g.order() / s.order;
    s.normal  = g.is_normal(members);
    return s;
  }

  bool is_homomorphism(FiniteGroup const&       source,
                       FiniteGroup const&       target,
                       std::vector<Elem> const& images) {
    if (images.size() != source.order()) {
      return false;
    }
    for (auto v : images) {
      if (v >= target.order()) {
        return false;
      }
    }
    for (Elem x = 0; x < source.order(); ++x) {
      for (Elem y = 0; y < source.order(); ++y) {
        if (images[source.mul(x, y)] != target.mul(images[x], images[y])) {
          return false;
        }
      }
    }
    return true;
  }

  SubgroupGroup subgroup_group(FiniteGroup const& g, Mask members) {
    if (!g.is_subgroup(members)) {
      throw GroupError(GroupError::Kind::not_subgroup,
                       "subset is not a subgroup");
    }
    std::vector<Elem> emb;
    std::vector<Elem> local(g.order(), 0);
    for (Elem x = 0; x < g.order(); ++x) {
      if ((members >> x) & 1) {
        local[x] = Elem(emb.size());
        emb.push_back(x);
      }
    }
    std::size_t const              k = emb.size();
    std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
    std::vector<std::string>       names(k);
    for (std::size_t i = 0; i < k; ++i) {
      names[i] = g.name(emb[i]);
      for (std::size_t j = 0; j < k; ++j) {
        t[i][j] = local[g.mul(emb[i], emb[j])];
      }
    }
    return {FiniteGroup(t, names), emb};
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
    std::set<Mask>    found{Mask(1)};
    std::vector<Mask> queue{Mask(1)};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Mask h = queue[i];
      for (Elem x = 0; x < g.order(); ++x) {
        if ((h >> x) & 1) {
          continue;
        }
        Mask k = g.generated(h | (Mask(1) << x));
        if (found.insert(k).second) {
          queue.push_back(k);
        }
      }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto m : found) {
      out.push_back(make_subgroup(g, m));
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.order < b.order;
    });
    return out;
  }

  Quotient quotient(FiniteGroup const& g, Subgroup const& n) {
    if (!g.is_normal(n.members)) {
      throw GroupError(GroupError::Kind::not_normal,
                       "quotient by a non-normal subgroup");
    }
    std::vector<Mask> cosets;
    std::vector<Elem> reps;
    std::vector<Elem> which(g.order(), 0);
    Mask              covered = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if ((covered >> x) & 1) {
        continue;
      }
      Mask c = g.shift(x, n.members);
      for (Mask m = c; m != 0; m &= m - 1) {
        which[__builtin_ctzll(m)] = Elem(cosets.size());
      }
      covered |= c;
      cosets.push_back(c);
      reps.push_back(x);
    }
    std::size_t const              k = cosets.size();
    std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
    std::vector<std::string>       names(k);
    for (std::size_t i = 0; i < k; ++i) {
      names[i] = g.name(reps[i]) + "N";
      for (std::size_t j = 0; j < k; ++j) {
        t[i][j] = which[g.mul(reps[i], reps[j])];
      }
    }
    FiniteGroup q(t, names);
    return {std::move(q), GroupHom{which, k}, cosets};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  GroupFingerprint fingerprint(FiniteGroup const& g) {
    GroupFingerprint fp;
    fp.order   = g.order();
    fp.abelian = g.is_abelian();
    for (Elem x = 0; x < g.order(); ++x) {
      ++fp.order_histogram[g.element_order(x)];
    }
    fp.center_order  = std::size_t(popcount(g.center()));
    fp.derived_order = std::size_t(popcount(g.derived_subgroup()));
    return fp;
  }

  namespace {

    std::vector<std::uint64_t> element_keys(FiniteGroup const& g) {
      std::size_t const          n = g.order();
      std::vector<std::uint64_t> roots(n, 0), keys(n);
      for (Elem x = 0; x < n; ++x) {
        ++roots[g.mul(x, x)];
      }
      for (Elem x = 0; x < n; ++x) {
        std::uint64_t centralizer = 0;
        for (Elem y = 0; y < n; ++y) {
          centralizer += g.mul(x, y) == g.mul(y, x);
        }
        keys[x] = (std::uint64_t(g.element_order(x)) << 32)
                  | (centralizer << 16) | roots[x];
      }
      return keys;
    }

    std::vector<std::uint32_t> flat_table(FiniteGroup const& g) {
      std::size_t const          n = g.order();
      std::vector<std::uint32_t> t(n * n);
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          t[i * n + j] = g.mul(i, j);
        }
      }
      return t;
    }

  }  // namespace

  std::optional<std::vector<Elem>> find_isomorphism(FiniteGroup const& g,
                                                    FiniteGroup const& h) {
    if (!(fingerprint(g) == fingerprint(h))) {
      return std::nullopt;
    }
    auto r = detail::isomorphism_search(g.order(),
                                        flat_table(g),
                                        flat_table(h),
                                        element_keys(g),
                                        element_keys(h),
                                        std::uint64_t(50'000'000));
    if (r.verdict == detail::SearchVerdict::budget) {
      throw std::runtime_error("group isomorphism search exhausted its budget");
    }
    if (r.verdict == detail::SearchVerdict::no) {
      return std::nullopt;
    }
    return std::vector<Elem>(r.map.begin(), r.map.end());
  }

  bool isomorphic(FiniteGroup const& g, FiniteGroup const& h) {
    auto fg = fingerprint(g);
    if (!(fg == fingerprint(h))) {
      return false;
    }
    if (fg.abelian) {
      // element-order counts determine a finite abelian group
      return true;
    }
    return find_isomorphism(g, h).has_value();
  }

  std::vector<std::uint64_t> abelian_invariants(FiniteGroup const& g) {
    if (!g.is_abelian()) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "abelian_invariants of a non-abelian group");
    }
    std::vector<std::uint64_t> out;
    std::size_t                rest = g.order();
    for (std::size_t p = 2; rest > 1; ++p) {
      if (rest % p != 0) {
        continue;
      }
      while (rest % p == 0) {
        rest /= p;
      }
      // d[i] = log_p #{x : x^{p^i} = e}
      std::vector<std::size_t> d{0};
      for (std::uint64_t pk = p;; pk *= p) {
        std::size_t count = 0;
        for (Elem x = 0; x < g.order(); ++x) {
          count += pk % g.element_order(x) == 0;
        }
        std::size_t lg = 0;
        for (std::size_t c = count; c > 1; c /= p) {
          ++lg;
        }
        if (lg == d.back()) {
          break;
        }
        d.push_back(lg);
      }
      // number of factors of order >= p^i is d[i] - d[i-1]
      std::vector<std::size_t> at_least;
      for (std::size_t i = 1; i < d.size(); ++i) {
        at_least.push_back(d[i] - d[i - 1]);
      }
      for (std::size_t i = 0; i < at_least.size(); ++i) {
        std::size_t next  = i + 1 < at_least.size() ? at_least[i + 1] : 0;
        std::size_t exact = at_least[i] - next;
        std::uint64_t q   = 1;
        for (std::size_t j = 0; j <= i; ++j) {
          q *= p;
        }
        out.insert(out.end(), exact, q);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism counts
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<Elem> greedy_generators(FiniteGroup const& g) {
      std::vector<Elem> by_order(g.order());
      std::iota(by_order.begin(), by_order.end(), 0);
      std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
        return g.element_order(a) > g.element_order(b);
      });
      std::vector<Elem> gens;
      Mask              h = 1;
      for (auto x : by_order) {
        if (!((h >> x) & 1)) {
          gens.push_back(x);
          h = g.generated(h | (Mask(1) << x));
        }
      }
      return gens;
    }

    // counts homomorphisms g -> Z/m by backtracking over generator images
    std::uint64_t count_homs_to_cyclic(FiniteGroup const& g, std::uint64_t m) {
      auto                     gens = greedy_generators(g);
      std::vector<std::int64_t> f(g.order(), -1);
      std::uint64_t            total = 0;

      std::function<void(std::size_t, std::vector<std::int64_t>&)> rec
          = [&](std::size_t t, std::vector<std::int64_t>& map) {
              if (t == gens.size()) {
                ++total;
                return;
              }
              std::uint64_t ord = g.element_order(gens[t]);
              for (std::uint64_t c = 0; c < m; ++c) {
                if ((c * ord) % m != 0) {
                  continue;
                }
                auto trial = map;
                if (trial[gens[t]] >= 0) {
                  continue;
                }
                trial[gens[t]] = std::int64_t(c);
                // propagate along right multiplication by assigned gens
                std::vector<Elem> mapped;
                for (Elem x = 0; x < g.order(); ++x) {
                  if (trial[x] >= 0) {
                    mapped.push_back(x);
                  }
                }
                bool ok = true;
                for (std::size_t i = 0; i < mapped.size() && ok; ++i) {
                  for (std::size_t j = 0; j <= t && ok; ++j) {
                    Elem w = g.mul(mapped[i], gens[j]);
                    auto v = std::int64_t(
                        (std::uint64_t(trial[mapped[i]])
                         + std::uint64_t(trial[gens[j]]))
                        % m);
                    if (trial[w] < 0) {
                      trial[w] = v;
                      mapped.push_back(w);
                    } else {
                      ok = trial[w] == v;
                    }
                  }
                }
                if (ok) {
                  rec(t + 1, trial);
                }
              }
            };
      f[0] = 0;
      rec(0, f);
      return total;
    }

  }  // namespace

  std::uint64_t hom_count_to_cyclic2(FiniteGroup const& g, unsigned k) {
    if (k > 16) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "hom_count_to_cyclic2 supports k <= 16");
    }
    std::uint64_t const m = std::uint64_t(1) << k;
    if (g.is_abelian()) {
      std::uint64_t r = 1;
      for (auto q : abelian_invariants(g)) {
        r *= std::gcd(q, m);
      }
      return r;
    }
    return count_homs_to_cyclic(g, m);
  }

  ////////////////////////////////////////////////////////////////////////
  // Finitely generated abelian groups
  ////////////////////////////////////////////////////////////////////////

  void validate(FgAbelianPresentation const& p) {
    auto const& t = p.torsion_factors;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < 2) {
        throw GroupError(GroupError::Kind::bad_argument,
                         "torsion factors must be at least 2");
      }
      if (i + 1 < t.size() && t[i + 1] % t[i] != 0) {
        throw GroupError(GroupError::Kind::bad_argument,
                         "torsion factors must form a divisibility chain");
      }
    }
  }

  namespace {

    using u128 = unsigned __int128;

    u128 checked_mul(u128 a, u128 b) {
      if (a != 0 && b > (~u128(0)) / a) {
        throw GroupError(GroupError::Kind::bad_argument,
                         "q-count overflows 128 bits");
      }
      return a * b;
    }

    u128 fg_hom_count(FgAbelianPresentation const& p, unsigned k) {
      u128 r = 1;
      for (unsigned i = 0; i < p.free_rank; ++i) {
        r = checked_mul(r, u128(1) << k);
      }
      for (auto m : p.torsion_factors) {
        r = checked_mul(r, std::gcd(m, std::uint64_t(1) << k));
      }
      return r;
    }

  }  // namespace

  QCount fg_abelian_q(FgAbelianPresentation const& p,
                      std::optional<unsigned>      k) {
    validate(p);
    QCount out;
    if (!k.has_value()) {
      // C_{2^infinity} is not finitely generated, so it is never a quotient
      // of a finitely generated group.
      out.symbolic = true;
      out.marker   = "zero";
      return out;
    }
    if (*k == 0 || *k > 63) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "k must lie in 1..63");
    }
    u128 diff = fg_hom_count(p, *k) - fg_hom_count(p, *k - 1);
    u128 q    = diff >> (*k - 1);
    if (q > u128(~std::uint64_t(0))) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "q-count does not fit in 64 bits");
    }
    out.value = std::uint64_t(q);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup make_cyclic(std::size_t n) {
    if (n == 0) {
      throw GroupError(GroupError::Kind::bad_argument, "C_0 is not a group");
    }
    if (n > kMaxGroupOrder) {
      throw GroupError(GroupError::Kind::too_large, "cyclic group too large");
    }
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = Elem((i + j) % n);
      }
    }
    return FiniteGroup(t, {}, "C" + std::to_string(n));
  }

  namespace {

    std::string power_name(std::size_t i, bool b) {
      std::string s;
      if (i == 1) {
        s = "a";
      } else if (i > 1) {
        s = "a^" + std::to_string(i);
      }
      if (b) {
        s += "b";
      }
      return s.empty() ? "e" : s;
    }

  }  // namespace

  FiniteGroup make_dihedral(std::size_t two_n) {
    if (two_n == 0 || two_n % 2 != 0) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "dihedral order must be even and positive");
    }
    if (two_n > kMaxGroupOrder) {
      throw GroupError(GroupError::Kind::too_large, "dihedral group too large");
    }
    std::size_t const n = two_n / 2;
    // a^i b^j has index i + n*j; b a = a^{-1} b
    std::vector<std::vector<Elem>> t(two_n, std::vector<Elem>(two_n));
    std::vector<std::string>       names(two_n);
    for (std::size_t x = 0; x < two_n; ++x) {
      std::size_t i = x % n, j = x / n;
      names[x]      = power_name(i, j);
      for (std::size_t y = 0; y < two_n; ++y) {
        std::size_t k = y % n, l = y / n;
        std::size_t e = j ? (i + n - k) % n : (i + k) % n;
        t[x][y]       = Elem(e + n * ((j + l) % 2));
      }
    }
    return FiniteGroup(t, names, "D" + std::to_string(two_n));
  }

  FiniteGroup make_generalized_quaternion(std::size_t two_pow) {
    if (two_pow != 8 && two_pow != 16 && two_pow != 32 && two_pow != 64) {
      throw GroupError(GroupError::Kind::bad_argument,
                       "generalized quaternion order must be 8, 16, 32 or 64");
    }
    std::size_t const n = two_pow / 2;  // order of a
    std::size_t const h = n / 2;        // b^2 = a^h
    std::vector<std::vector<Elem>> t(two_pow, std::vector<Elem>(two_pow));
    std::vector<std::string>       names(two_pow);
    for (std::size_t x = 0; x < two_pow; ++x) {
      std::size_t i = x % n, j = x / n;
      names[x]      = power_name(i, j);
      for (std::size_t y = 0; y < two_pow; ++y) {
        std::size_t k = y % n, l = y / n;
        std::size_t e, f;
        if (j == 0) {
          e = (i + k) % n;
          f = l;
        } else if (l == 0) {
          e = (i + n - k) % n;
          f = 1;
        } else {
          e = (i + n - k + h) % n;
          f = 0;
        }
        t[x][y] = Elem(e + n * f);
      }
    }
    return FiniteGroup(t, names, "Q" + std::to_string(two_pow));
  }

  FiniteGroup make_alternating4() {
    using Perm = std::array<int, 4>;
    std::vector<Perm> perms;
    Perm              p{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          inversions += p[i] > p[j];
        }
      }
      if (inversions % 2 == 0) {
        perms.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](Perm const& q) {
      return Elem(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::size_t const              n = perms.size();
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    std::vector<std::string>       names(n);
    for (std::size_t x = 0; x < n; ++x) {
      // cycle notation
      std::string       s;
      std::vector<char> seen(4, 0);
      for (int i = 0; i < 4; ++i) {
        if (seen[i] || perms[x][i] == i) {
          continue;
        }
        s += "(";
        for (int j = i; !seen[j]; j = perms[x][j]) {
          seen[j] = 1;
          s += char('0' + j);
        }
        s += ")";
      }
      names[x] = s.empty() ? "e" : s;
      for (std::size_t y = 0; y < n; ++y) {
        Perm r;  // first y, then x
        for (int i = 0; i < 4; ++i) {
          r[i] = perms[x][perms[y][i]];
        }
        t[x][y] = index(r);
      }
    }
    return FiniteGroup(t, names, "A4");
  }

  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
    std::size_t const a = g.order(), b = h.order();
    if (a * b > kMaxGroupOrder) {
      throw GroupError(GroupError::Kind::too_large,
                       "direct product exceeds order "
                           + std::to_string(kMaxGroupOrder));
    }
    std::vector<std::vector<Elem>> t(a * b, std::vector<Elem>(a * b));
    std::vector<std::string>       names(a * b);
    for (std::size_t x = 0; x < a * b; ++x) {
      names[x] = "(" + g.name(Elem(x / b)) + "," + h.name(Elem(x % b)) + ")";
      for (std::size_t y = 0; y < a * b; ++y) {
        t[x][y] = Elem(g.mul(Elem(x / b), Elem(y / b)) * b
                       + h.mul(Elem(x % b), Elem(y % b)));
      }
    }
    return FiniteGroup(t, names, g.label() + "x" + h.label());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley documents
  ////////////////////////////////////////////////////////////////////////

  FiniteGroup from_cayley_json(std::string const& text) {
    using K = GroupError::Kind;
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw GroupError(K::malformed, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc.contains("table")) {
      throw GroupError(K::malformed, "document needs \"order\" and \"table\"");
    }
    if (!doc["order"].is_number_unsigned()) {
      throw GroupError(K::malformed, "\"order\" must be a positive integer");
    }
    auto n = doc["order"].get<std::size_t>();
    if (n > kMaxGroupOrder) {
      throw GroupError(K::too_large, "order exceeds " + std::to_string(kMaxGroupOrder));
    }
    auto const& rows = doc["table"];
    if (!rows.is_array() || rows.size() != n) {
      throw GroupError(K::malformed, "\"table\" must have \"order\" rows");
    }
    std::vector<std::vector<Elem>> t;
    for (auto const& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw GroupError(K::malformed, "every row must have \"order\" entries");
      }
      std::vector<Elem> r;
      for (auto const& v : row) {
        if (!v.is_number_unsigned()) {
          throw GroupError(K::malformed, "table entries must be non-negative integers");
        }
        auto x = v.get<std::uint64_t>();
        if (x >= n) {
          throw GroupError(K::malformed, "table entry out of range");
        }
        r.push_back(Elem(x));
      }
      t.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (doc.contains("names")) {
      auto const& ns = doc["names"];
      if (!ns.is_array() || ns.size() != n) {
        throw GroupError(K::malformed, "\"names\" must have \"order\" strings");
      }
      for (auto const& s : ns) {
        if (!s.is_string()) {
          throw GroupError(K::malformed, "\"names\" entries must be strings");
        }
        names.push_back(s.get<std::string>());
      }
    }
    return FiniteGroup(t, names);
  }

  std::string to_cayley_json(FiniteGroup const& g) {
    nlohmann::json doc;
    doc["order"] = g.order();
    doc["table"] = g.table();
    doc["names"] = g.names();
    return doc.dump();
  }

}  // namespace lambdax
