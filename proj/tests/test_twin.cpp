#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "doctest.h"
#include "lambdax/structure.hpp"
#include "lambdax/twin.hpp"
#include "support.hpp"

using namespace lambdax;
using test_support::catalog_groups;
using test_support::table_of;

namespace {

  Mask cyclic_subgroup(FiniteGroup const& g, Elem x) {
    return g.generated(Mask(1) << x);
  }

}  // namespace

TEST_CASE("fix operators") {
  auto c4 = make_cyclic(4);
  auto f  = fix_operators(c4, 0b0011);
  CHECK(f.fix == 0b0001);
  CHECK(f.fix_minus == 0b0100);
  CHECK(f.fix_pm == 0b0101);
  auto e = fix_operators(c4, 0);
  CHECK(e.fix == c4.all());
  CHECK(e.fix_minus == 0);

  auto q8 = make_generalized_quaternion(8);
  for (Elem x = 0; x < 8; ++x) {
    if (q8.element_order(x) == 4) {
      Mask i  = cyclic_subgroup(q8, x);
      auto fi = fix_operators(q8, i);
      CHECK(fi.fix == i);
      CHECK(fi.fix_minus == (q8.all() & ~i));
    }
  }
}

TEST_CASE("twin and pretwin sets") {
  auto c4 = make_cyclic(4);
  CHECK(is_twin(c4, 0b0011));
  for (auto const& g : catalog_groups(12)) {
    CAPTURE(g.label());
    for (Mask a = 0; a <= g.all(); ++a) {
      if (2 * std::size_t(popcount(a)) != g.order()) {
        CHECK(!is_twin(g, a));
      }
      CHECK(is_twin(g, a) == is_pretwin(g, a));
    }
  }
}

TEST_CASE("Fix± is a subgroup; twin iff Fix has index 2 in it") {
  std::mt19937_64 rng(3);
  for (auto const& g : catalog_groups(16)) {
    CAPTURE(g.label());
    auto const  t     = table_of(g);
    bool const  small = g.order() <= 8;
    std::size_t count = small ? (std::size_t(1) << g.order()) : 10000;
    for (std::size_t i = 0; i < count; ++i) {
      Mask a   = small ? Mask(i) : (rng() & g.all());
      auto f   = fix_operators(g, a);
      auto pm  = oracle::from_mask(f.fix_pm);
      REQUIRE(oracle::closed_subgroup(t, pm));
      bool index2 = popcount(f.fix_pm) == 2 * popcount(f.fix);
      CHECK(is_twin(g, a) == index2);
      CHECK(f.fix_minus == oracle::to_mask(oracle::fix_minus(t, oracle::from_mask(a))));
    }
  }
}

TEST_CASE("Fix⁻(xA) = x Fix⁻(A) x⁻¹") {
  for (auto const& g : catalog_groups(8)) {
    for (Mask a = 0; a <= g.all(); ++a) {
      auto fm = fix_operators(g, a).fix_minus;
      for (Elem x = 0; x < g.order(); ++x) {
        CHECK(fix_operators(g, g.shift(x, a)).fix_minus == g.conjugate(x, fm));
      }
    }
  }
}

TEST_CASE("2-cogroups against the definition") {
  auto c4   = make_cyclic(4);
  auto cogs = enumerate_2cogroups(c4);
  std::set<Mask> ks;
  for (auto const& c : cogs) {
    ks.insert(c.k);
    CHECK(c.maximal);
  }
  CHECK(ks == std::set<Mask>{0b0100, 0b1010});
  CHECK(enumerate_2cogroups(make_cyclic(9)).empty());
  CHECK(enumerate_2cogroups(make_cyclic(1)).empty());

  for (auto const& g : catalog_groups(16)) {
    CAPTURE(g.label());
    auto const t = table_of(g);
    std::set<Mask> got, got_max, want, want_max;
    for (auto const& c : enumerate_2cogroups(g)) {
      got.insert(c.k);
      if (c.maximal) {
        got_max.insert(c.k);
      }
      CHECK(is_2cogroup(g, c.k));
      CHECK((c.kk & c.k) == 0);
      CHECK(g.is_subgroup(c.kk));
      for (Mask m = c.k; m != 0; m &= m - 1) {
        Elem x = Elem(__builtin_ctzll(m));
        CHECK(g.shift(x, c.k) == c.kk);
        CHECK(g.rshift(c.k, x) == c.kk);
      }
      // KK is normal in Stab(K)
      for (Mask m = c.stab; m != 0; m &= m - 1) {
        CHECK(g.conjugate(Elem(__builtin_ctzll(m)), c.kk) == c.kk);
      }
    }
    if (g.order() <= 12) {
      for (auto const& k : oracle::two_cogroups(t)) {
        want.insert(oracle::to_mask(k));
      }
      for (auto const& k : oracle::maximal_two_cogroups(t)) {
        want_max.insert(oracle::to_mask(k));
      }
      CHECK(got == want);
      CHECK(got_max == want_max);
    }
  }
}

TEST_CASE("maximal 2-cogroups of Q8 and A4") {
  auto q8   = make_generalized_quaternion(8);
  auto maxq = maximal_2cogroups(q8);
  CHECK(maxq.size() == 4);
  std::set<Mask> ks;
  for (auto const& c : maxq) {
    ks.insert(c.k);
  }
  Mask minus_one = q8.center() & ~Mask(1);
  CHECK(ks.count(minus_one));
  for (Elem x = 0; x < 8; ++x) {
    if (q8.element_order(x) == 4) {
      CHECK(ks.count(q8.all() & ~cyclic_subgroup(q8, x)));
    }
  }
  auto all = enumerate_2cogroups(q8);
  CHECK(std::any_of(all.begin(), all.end(), [&](auto const& c) { return c.k == minus_one; }));

  auto a4   = make_alternating4();
  auto maxa = maximal_2cogroups(a4);
  CHECK(maxa.size() == 3);
  Mask klein = 0;
  for (auto const& s : all_subgroups(a4)) {
    if (s.order == 4) {
      klein = s.members;
    }
  }
  for (auto const& c : maxa) {
    CHECK(popcount(c.k) == 2);
    CHECK((c.k & ~klein) == 0);
  }
}

TEST_CASE("cogroup orbits") {
  for (auto const& g : catalog_groups(16)) {
    if (!g.is_abelian()) {
      continue;
    }
    for (auto const& o : cogroup_orbits(g)) {
      CHECK(o.members.size() == 1);
    }
  }
  auto a4 = cogroup_orbits(make_alternating4());
  REQUIRE(a4.size() == 1);
  CHECK(a4[0].members.size() == 3);

  // D8: K0 = D8 \ C4, K_{1,b} ~ K_{1,a²b}, K_{1,ab} ~ K_{1,a³b}, K_{2,b}, K_{2,ab}
  auto d8 = make_dihedral(8);
  auto od = cogroup_orbits(d8);
  CHECK(od.size() == 5);
  std::multiset<std::size_t> sizes;
  for (auto const& o : od) {
    sizes.insert(o.members.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 2, 2});
  // representatives are the smallest masks of their orbits
  for (auto const& g : catalog_groups(16)) {
    for (auto const& o : cogroup_orbits(g)) {
      for (auto const& k : o.members) {
        CHECK(o.representative.k <= k.k);
      }
    }
  }
}

TEST_CASE("characteristic groups") {
  auto q8 = make_generalized_quaternion(8);
  auto k0 = make_2cogroup(q8, q8.center() & ~Mask(1));
  auto h  = characteristic_group(q8, k0);
  CHECK(h.type == CharType{'Q', 8});
  CHECK(isomorphic(h.group, q8));

  auto a4 = make_alternating4();
  for (auto const& c : maximal_2cogroups(a4)) {
    CHECK(characteristic_group(a4, c).type == CharType{'C', 2});
  }
  auto c4 = make_cyclic(4);
  auto k  = make_2cogroup(c4, 0b0100);
  CHECK(k.stab == c4.all());
  CHECK(k.kk == 0b0001);
  CHECK(characteristic_group(c4, k).type == CharType{'C', 4});

  // every maximal K of every catalog group: a 2-group with one involution
  for (auto const& g : catalog_groups(16)) {
    CAPTURE(g.label());
    for (auto const& c : maximal_2cogroups(g)) {
      auto       ch = characteristic_group(g, c);
      auto const t  = table_of(ch.group);
      std::size_t involutions = 0;
      for (int x = 0; x < int(ch.group.order()); ++x) {
        involutions += oracle::element_order(t, x) == 2;
      }
      CHECK(involutions == 1);
      CHECK((ch.group.order() & (ch.group.order() - 1)) == 0);
      CHECK(ch.type.order == ch.group.order());
      bool cyclic = false;
      for (int x = 0; x < int(ch.group.order()); ++x) {
        cyclic = cyclic || std::size_t(oracle::element_order(t, x)) == ch.group.order();
      }
      CHECK((ch.type.family == 'C') == cyclic);
      // |H(K)| divides |X/K|, with equality for normal K
      std::size_t xk = g.order() / std::size_t(popcount(c.k));
      CHECK(xk % ch.group.order() == 0);
      bool normal = true;
      for (Elem x = 0; x < g.order(); ++x) {
        normal = normal && g.conjugate(x, c.k) == c.k;
      }
      if (normal) {
        CHECK(xk == ch.group.order());
      }
    }
  }
  CHECK(!classify_unique_involution_2group(make_cyclic(6)));
  CHECK(!classify_unique_involution_2group(make_dihedral(8)));
  CHECK(classify_unique_involution_2group(make_generalized_quaternion(16))
        == CharType{'Q', 16});
}

TEST_CASE("T_K: size, free orbits, Fix⁻ scan") {
  auto q8 = make_generalized_quaternion(8);
  auto t0 = twin_sets_for(q8, make_2cogroup(q8, q8.center() & ~Mask(1)));
  CHECK(t0.sets.size() == 16);
  CHECK(t0.orbits.size() == 2);
  for (auto const& c : maximal_2cogroups(make_alternating4())) {
    auto tf = twin_sets_for(make_alternating4(), c);
    CHECK(tf.sets.size() == 8);
    CHECK(tf.orbits.size() == 4);
  }
  // {a} ⊂ {a, ab} in C2xC2: a 2-cogroup, not maximal
  auto v4 = parse_spec("C2xC2");
  auto k1 = make_2cogroup(v4, 0b0010);
  CHECK(!k1.maximal);
  CHECK_THROWS_AS(twin_sets_for(v4, k1), std::invalid_argument);

  for (auto const& g : catalog_groups(16)) {
    CAPTURE(g.label());
    auto const t = table_of(g);
    for (auto const& c : maximal_2cogroups(g)) {
      auto        tf = twin_sets_for(g, c);
      std::size_t q  = g.order() / std::size_t(popcount(c.kpm));
      CHECK(tf.sets.size() == (std::size_t(1) << q));
      std::size_t h = std::size_t(popcount(c.stab) / popcount(c.kk));
      for (auto const& o : tf.orbits) {
        CHECK(o.size() == h);
      }
      if (g.order() <= 8) {
        std::vector<Mask> scan;
        for (Mask a = 0; a <= g.all(); ++a) {
          if (oracle::to_mask(oracle::fix_minus(t, oracle::from_mask(a))) == c.k) {
            scan.push_back(a);
          }
        }
        CHECK(scan == tf.sets);
      }
    }
  }
}

TEST_CASE("selector twin families differ across orbits") {
  for (auto const& g : catalog_groups(16)) {
    std::set<std::vector<Mask>> seen;
    for (auto const& k : selector(cogroup_orbits(g))) {
      CHECK(seen.insert(twin_sets_for(g, k).sets).second);
    }
  }
}

TEST_CASE("q counts") {
  auto c2c4 = q_counts(parse_spec("C2xC4"));
  CHECK(c2c4["C2"] == 3);
  CHECK(c2c4["C4"] == 2);
  auto q8 = q_counts(make_generalized_quaternion(8));
  CHECK(q8["Q8"] == 1);
  CHECK(q8["C2"] == 3);
  CHECK(q_counts(make_cyclic(1)).empty());

  // orbit census, the hom-count formula and the count of quotients
  // isomorphic to C_{2^k} all agree on abelian groups
  for (auto const& g : catalog_groups(16)) {
    if (!g.is_abelian()) {
      continue;
    }
    CAPTURE(g.label());
    auto census = q_counts(g);
    CHECK(census == hom_formula_q(g));
    std::map<std::string, std::size_t> quotients;
    for (auto const& s : all_subgroups(g)) {
      std::size_t idx = s.index;
      if (idx < 2 || (idx & (idx - 1)) != 0) {
        continue;
      }
      if (isomorphic(quotient(g, s).group, make_cyclic(idx))) {
        ++quotients["C" + std::to_string(idx)];
      }
    }
    CHECK(census == quotients);
  }
}

TEST_CASE("trivially twinic check") {
  for (auto const& g : catalog_groups(16)) {
    CAPTURE(g.label());
    auto start = std::chrono::steady_clock::now();
    auto r     = is_trivially_twinic(g);
    auto secs  = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.trivially_twinic);
    CHECK(!r.witness);
    CHECK(secs < 1.0);
  }
}

TEST_CASE("cogroup realization diagnostics") {
  for (auto const& g : catalog_groups(12)) {
    auto r = cogroup_realization(g);
    CHECK(r.realized.size() + r.unrealized.size() == enumerate_2cogroups(g).size());
    // maximal 2-cogroups are always realized: T_K is nonempty
    for (auto const& c : maximal_2cogroups(g)) {
      CHECK(std::find(r.realized.begin(), r.realized.end(), c.k) != r.realized.end());
    }
  }
}

TEST_CASE("Odd from maximal 2-cogroups matches the direct search") {
  for (auto const& g : catalog_groups(16)) {
    CHECK(odd_subgroup(g).members == odd_subgroup_direct(g).members);
  }
}
