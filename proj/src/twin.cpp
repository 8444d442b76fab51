#include "lambdax/twin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lambdax {

  FixSets fix_operators(FiniteGroup const& g, Mask a) {
    FixSets    out{0, 0, 0};
    Mask const comp = g.all() & ~a;
    for (Elem x = 0; x < g.order(); ++x) {
      Mask xa = g.shift(x, a);
      if (xa == a) {
        out.fix |= Mask(1) << x;
      }
      if (xa == comp) {
        out.fix_minus |= Mask(1) << x;
      }
    }
    out.fix_pm = out.fix | out.fix_minus;
    return out;
  }

  bool is_twin(FiniteGroup const& g, Mask a) {
    return fix_operators(g, a).fix_minus != 0;
  }

  bool is_pretwin(FiniteGroup const& g, Mask a) {
    Mask const comp = g.all() & ~a;
    bool       below = false, above = false;
    for (Elem x = 0; x < g.order(); ++x) {
      Mask xa = g.shift(x, a);
      below   = below || (xa & ~comp) == 0;
      above   = above || (comp & ~xa) == 0;
    }
    return below && above;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2-cogroups
  ////////////////////////////////////////////////////////////////////////

  bool is_2cogroup(FiniteGroup const& g, Mask k) {
    if (k == 0 || (k & ~g.all()) != 0) {
      return false;
    }
    for (Mask m = k; m != 0; m &= m - 1) {
      Elem x  = Elem(__builtin_ctzll(m));
      Mask xk = g.shift(x, k);
      if (xk != g.rshift(k, x) || !g.is_subgroup(xk) || (xk & k) != 0) {
        return false;
      }
    }
    return true;
  }

  TwoCogroup make_2cogroup(FiniteGroup const& g, Mask k) {
    if (!is_2cogroup(g, k)) {
      throw std::invalid_argument("subset is not a 2-cogroup");
    }
    TwoCogroup c;
    c.k   = k;
    c.kk  = g.product(k, k);
    c.kpm = c.k | c.kk;
    c.stab = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (g.conjugate(x, k) == k) {
        c.stab |= Mask(1) << x;
      }
    }
    c.index = g.order() / std::size_t(popcount(k));
    return c;
  }

  std::vector<TwoCogroup> enumerate_2cogroups(FiniteGroup const& g) {
    auto           subs = all_subgroups(g);
    std::set<Mask> found;
    for (auto const& hpm : subs) {
      for (auto const& h : subs) {
        if (2 * h.order == hpm.order && (h.members & ~hpm.members) == 0) {
          found.insert(hpm.members & ~h.members);
        }
      }
    }
    std::vector<TwoCogroup> out;
    for (auto k : found) {
      out.push_back(make_2cogroup(g, k));
    }
    for (auto& c : out) {
      c.maximal = std::none_of(out.begin(), out.end(), [&](auto const& d) {
        return d.k != c.k && (c.k & ~d.k) == 0;
      });
    }
    return out;
  }

  std::vector<TwoCogroup> maximal_2cogroups(FiniteGroup const& g) {
    auto all = enumerate_2cogroups(g);
    std::erase_if(all, [](auto const& c) { return !c.maximal; });
    return all;
  }

  ////////////////////////////////////////////////////////////////////////
  // Characteristic groups
  ////////////////////////////////////////////////////////////////////////

  std::optional<CharType> classify_unique_involution_2group(FiniteGroup const& h) {
    std::size_t const n = h.order();
    if (n < 2 || (n & (n - 1)) != 0) {
      return std::nullopt;
    }
    std::size_t involutions = 0;
    bool        cyclic      = false;
    for (Elem x = 0; x < n; ++x) {
      involutions += h.element_order(x) == 2;
      cyclic = cyclic || h.element_order(x) == n;
    }
    if (involutions != 1) {
      return std::nullopt;
    }
    if (cyclic) {
      return CharType{'C', n};
    }
    if (n < 8 || n > kMaxGroupOrder || !isomorphic(h, make_generalized_quaternion(n))) {
      return std::nullopt;
    }
    return CharType{'Q', n};
  }

  CharacteristicGroup characteristic_group(FiniteGroup const& g,
                                           TwoCogroup const&  k) {
    auto sg    = subgroup_group(g, k.stab);
    Mask local = 0;
    for (Elem i = 0; i < sg.embedding.size(); ++i) {
      if ((k.kk >> sg.embedding[i]) & 1) {
        local |= Mask(1) << i;
      }
    }
    auto q    = quotient(sg.group, make_subgroup(sg.group, local));
    auto type = classify_unique_involution_2group(q.group);
    if (!type) {
      throw std::logic_error("characteristic group is neither cyclic nor "
                             "generalized quaternion 2-group");
    }
    return {std::move(q.group), *type};
  }

  std::vector<CogroupOrbit> cogroup_orbits(FiniteGroup const& g) {
    auto                      maxes = maximal_2cogroups(g);
    std::set<Mask>            done;
    std::vector<CogroupOrbit> out;
    for (auto const& c : maxes) {
      if (done.count(c.k)) {
        continue;
      }
      std::set<Mask> conj;
      for (Elem x = 0; x < g.order(); ++x) {
        conj.insert(g.conjugate(x, c.k));
      }
      CogroupOrbit orbit;
      for (auto m : conj) {
        done.insert(m);
        auto it = std::find_if(maxes.begin(), maxes.end(),
                               [m](auto const& d) { return d.k == m; });
        if (it == maxes.end()) {
          throw std::logic_error("conjugate of a maximal 2-cogroup is not maximal");
        }
        orbit.members.push_back(*it);
      }
      orbit.representative = orbit.members.front();
      orbit.type           = characteristic_group(g, orbit.representative).type;
      out.push_back(std::move(orbit));
    }
    return out;
  }

  std::vector<TwoCogroup> selector(std::vector<CogroupOrbit> const& orbits) {
    std::vector<TwoCogroup> out;
    for (auto const& o : orbits) {
      out.push_back(o.representative);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // T_K
  ////////////////////////////////////////////////////////////////////////

  TwinFamily twin_sets_for(FiniteGroup const& g, TwoCogroup const& k) {
    auto maxes = maximal_2cogroups(g);
    if (std::none_of(maxes.begin(), maxes.end(),
                     [&](auto const& c) { return c.k == k.k; })) {
      throw std::invalid_argument("twin_sets_for needs a maximal 2-cogroup");
    }
    TwinFamily tf;
    tf.cogroup = k;
    Mask covered = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (!((covered >> x) & 1)) {
        tf.transversal.push_back(x);
        covered |= g.rshift(k.kpm, x);
      }
    }
    std::size_t const s = tf.transversal.size();
    for (Mask e = 0; e < (Mask(1) << s); ++e) {
      Mask a = 0;
      for (std::size_t i = 0; i < s; ++i) {
        a |= g.rshift(((e >> i) & 1) ? k.kk : k.k, tf.transversal[i]);
      }
      tf.sets.push_back(a);
    }
    std::sort(tf.sets.begin(), tf.sets.end());

    std::vector<Mask> scan;
    for (Mask a = 0; a <= g.all(); ++a) {
      if (popcount(a) * 2 == int(g.order()) && fix_operators(g, a).fix_minus == k.k) {
        scan.push_back(a);
      }
    }
    if (scan != tf.sets) {
      throw std::logic_error("transversal construction of T_K disagrees with "
                             "the Fix- scan");
    }

    std::size_t const h = std::size_t(popcount(k.stab) / popcount(k.kk));
    std::set<Mask>    seen;
    for (auto a : tf.sets) {
      if (seen.count(a)) {
        continue;
      }
      std::set<Mask> orbit;
      for (Mask m = k.stab; m != 0; m &= m - 1) {
        orbit.insert(g.shift(Elem(__builtin_ctzll(m)), a));
      }
      if (orbit.size() != h) {
        throw std::logic_error("Stab(K) does not act freely on T_K");
      }
      seen.insert(orbit.begin(), orbit.end());
      tf.orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return tf;
  }

  std::map<std::string, std::size_t> q_counts(FiniteGroup const& g) {
    std::map<std::string, std::size_t> q;
    for (auto const& o : cogroup_orbits(g)) {
      ++q[o.type.tag()];
    }
    return q;
  }

  ////////////////////////////////////////////////////////////////////////
  // Twinic check, realization, Odd
  ////////////////////////////////////////////////////////////////////////

  TwinicCheck is_trivially_twinic(FiniteGroup const& g) {
    std::size_t const n = g.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem ai = g.inv(a), bi = g.inv(b);
        Mask gens = (Mask(1) << g.mul(b, a)) | (Mask(1) << g.mul(b, ai))
                    | (Mask(1) << g.mul(bi, a)) | (Mask(1) << g.mul(bi, ai));
        Mask s = gens;
        for (std::size_t step = 0; step < n; ++step) {
          Mask next = s | g.product(s, gens);
          if (next == s) {
            break;
          }
          s = next;
        }
        if (!((s >> g.mul(a, b)) & 1)) {
          return {false, std::make_pair(a, b)};
        }
      }
    }
    return {true, std::nullopt};
  }

  RealizationReport cogroup_realization(FiniteGroup const& g) {
    if (g.order() > kMaxPipelineOrder) {
      throw std::invalid_argument("cogroup_realization needs order <= 16");
    }
    std::set<Mask> realized;
    for (Mask a = 0; a <= g.all(); ++a) {
      Mask fm = fix_operators(g, a).fix_minus;
      if (fm != 0) {
        realized.insert(fm);
      }
    }
    RealizationReport r;
    for (auto const& c : enumerate_2cogroups(g)) {
      (realized.count(c.k) ? r.realized : r.unrealized).push_back(c.k);
    }
    return r;
  }

  Subgroup odd_subgroup_direct(FiniteGroup const& g) {
    Subgroup best = make_subgroup(g, 1);
    auto     subs = all_subgroups(g);
    for (auto const& s : subs) {
      if (s.normal && s.order % 2 == 1 && s.order > best.order) {
        best = s;
      }
    }
    for (auto const& s : subs) {
      if (s.normal && s.order % 2 == 1 && (s.members & ~best.members) != 0) {
        throw std::logic_error("normal odd subgroups have no largest element");
      }
    }
    return best;
  }

  Subgroup odd_subgroup(FiniteGroup const& g) {
    Mask odd = g.all();
    for (auto const& c : maximal_2cogroups(g)) {
      odd &= c.kk;
    }
    auto direct = odd_subgroup_direct(g);
    if (direct.members != odd) {
      throw std::logic_error("intersection of KK over maximal 2-cogroups "
                             "differs from the largest normal odd subgroup");
    }
    return make_subgroup(g, odd);
  }

}  // namespace lambdax
