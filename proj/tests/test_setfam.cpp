#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lambdax/setfam.hpp"
#include "support.hpp"

using namespace lambdax;
using test_support::table_of;

namespace {

  oracle::Family to_oracle(FamilyOfSets const& f) {
    oracle::Family out;
    for (auto m : f.members()) {
      out.insert(oracle::from_mask(m));
    }
    return out;
  }

  FamilyOfSets from_oracle(std::size_t n, oracle::Family const& f) {
    FamilyOfSets out(n);
    for (auto const& s : f) {
      out.insert(oracle::to_mask(s));
    }
    return out;
  }

  MlsSignature majority_c3(FiniteGroup const& c3) {
    FamilyOfSets f(3);
    for (Mask a = 0; a <= c3.all(); ++a) {
      if (popcount(a) >= 2) {
        f.insert(a);
      }
    }
    return to_signature(f);
  }

}  // namespace

TEST_CASE("shift") {
  auto c4 = make_cyclic(4);
  for (Mask a = 0; a < 16; ++a) {
    CHECK(shift(c4, 0, a) == a);
  }
  CHECK(shift(c4, 2, 0b0011) == 0b1100);
  for (Elem x = 0; x < 4; ++x) {
    CHECK(shift(c4, x, c4.all()) == c4.all());
  }
  for (auto const& g : test_support::catalog_groups(16)) {
    auto const t = table_of(g);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      Mask a = rng() & g.all();
      Elem x = Elem(rng() % g.order());
      CHECK(g.shift(x, a) == oracle::to_mask(oracle::left_shift(t, int(x), oracle::from_mask(a))));
      CHECK(g.rshift(a, x) == oracle::to_mask(oracle::right_shift(t, oracle::from_mask(a), int(x))));
    }
  }
}

TEST_CASE("linked and maximal linked families") {
  auto c3 = make_cyclic(3);
  CHECK(is_maximal_linked(to_family(majority_c3(c3))));
  for (Mask a = 1; a < 7; ++a) {
    CHECK(!is_linked(FamilyOfSets(3, {a, Mask(7 & ~a)})));
  }
  for (auto const& g : test_support::catalog_groups(6)) {
    for (Elem x = 0; x < g.order(); ++x) {
      auto u = to_family(principal_ultrafilter(g, x));
      CHECK(is_maximal_linked(u));
      CHECK(oracle::maximal_linked(table_of(g), to_oracle(u)));
    }
  }
  // a linked but not maximal family
  FamilyOfSets f(3, {0b111, 0b011});
  CHECK(is_linked(f));
  CHECK(!is_maximal_linked(f));
}

TEST_CASE("MLS counts against exhaustive oracles") {
  std::uint64_t const expected[] = {1, 2, 4, 12, 81, 2646};
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    auto count = [&](MlsOrder o) {
      MlsEnumOptions opts;
      opts.order = o;
      return enumerate_mls(n, [](MlsSignature const&) {}, opts);
    };
    CHECK(count(MlsOrder::balanced_last) == expected[n - 1]);
    CHECK(count(MlsOrder::lexicographic) == expected[n - 1]);
    if (n <= 5) {
      CHECK(oracle::count_self_dual_monotone(int(n)) == expected[n - 1]);
    }
  }
  // every family of subsets of a 4-set, tested for maximal linkedness
  for (int n = 1; n <= 4; ++n) {
    auto                 ref = oracle::all_mls(n);
    std::set<oracle::Family> want(ref.begin(), ref.end());
    std::set<oracle::Family> got;
    for (auto const& s : enumerate_mls(make_cyclic(std::size_t(n)))) {
      got.insert(to_oracle(to_family(s)));
    }
    CHECK(got == want);
  }
  auto one = enumerate_mls(make_cyclic(1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].contains(1));
  CHECK(!one[0].contains(0));
}

TEST_CASE("both enumeration orders emit the same systems") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<MlsSignature> a, b;
    MlsEnumOptions         oa, ob;
    oa.order = MlsOrder::balanced_last;
    ob.order = MlsOrder::lexicographic;
    enumerate_mls(n, [&](MlsSignature const& s) { a.insert(s); }, oa);
    enumerate_mls(n, [&](MlsSignature const& s) { b.insert(s); }, ob);
    CHECK(a == b);
  }
}

TEST_CASE("enumeration budget") {
  MlsEnumOptions opts;
  opts.budget       = 10;
  std::size_t seen  = 0;
  try {
    enumerate_mls(5, [&](MlsSignature const&) { ++seen; }, opts);
    FAIL("budget not enforced");
  } catch (MlsBudgetExceeded const& e) {
    CHECK(e.count() == 10);
    CHECK(seen == 10);
  }
}

TEST_CASE("signatures: self-duality, monotonicity and membership") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const full = full_mask(n);
    for (auto const& s : enumerate_mls(make_cyclic(n))) {
      CHECK(s.contains(full));
      CHECK(!s.contains(0));
      for (Mask a = 1; a < full; ++a) {
        CHECK(s.contains(a) != s.contains(a ^ full));
        if (s.contains(a)) {
          for (std::size_t i = 0; i < n; ++i) {
            CHECK(s.contains(a | (Mask(1) << i)));
          }
        }
      }
      CHECK(to_signature(to_family(s)) == s);
    }
  }
  auto c4 = make_cyclic(4);
  auto u  = principal_ultrafilter(c4, 2);
  for (Mask a = 0; a < 16; ++a) {
    CHECK(u.contains(a) == bool((a >> 2) & 1));
  }
  auto maj = majority_c3(make_cyclic(3));
  CHECK(mls_contains(maj, 0b011));
  CHECK(!mls_contains(maj, 0b100));
}

TEST_CASE("signature hex and stream round trip") {
  auto systems = enumerate_mls(make_cyclic(5));
  for (auto const& s : systems) {
    CHECK(MlsSignature::from_hex(5, s.hex()) == s);
  }
  std::stringstream ss;
  write_mls_stream(ss, 5, systems);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header == "n=5 pairs=16");
  CHECK(read_mls_stream(ss) == systems);
  std::stringstream bad("n=5 pairs=16\nzz\n");
  CHECK_THROWS(read_mls_stream(bad));
}

TEST_CASE("circ against the set-of-sets oracle") {
  for (auto const& g : test_support::catalog_groups(4)) {
    CAPTURE(g.label());
    auto const t       = table_of(g);
    auto const systems = enumerate_mls(g);
    for (auto const& a : systems) {
      for (auto const& b : systems) {
        auto want = oracle::circ(t, to_oracle(to_family(a)), to_oracle(to_family(b)));
        CHECK(to_oracle(to_family(circ(g, a, b))) == want);
        CHECK(circ(g, to_family(a), to_family(b)) == from_oracle(g.order(), want));
      }
    }
  }
}

TEST_CASE("principal ultrafilters multiply like the group") {
  for (auto const& g : test_support::catalog_groups(8)) {
    for (Elem x = 0; x < g.order(); ++x) {
      for (Elem y = 0; y < g.order(); ++y) {
        CHECK(circ(g, principal_ultrafilter(g, x), principal_ultrafilter(g, y))
              == principal_ultrafilter(g, g.mul(x, y)));
      }
    }
  }
}

TEST_CASE("majority on C3 is a right zero") {
  auto c3  = make_cyclic(3);
  auto maj = majority_c3(c3);
  for (auto const& a : enumerate_mls(c3)) {
    CHECK(circ(c3, a, maj) == maj);
  }
  for (Mask a = 0; a < 8; ++a) {
    Mask want = popcount(a) >= 2 ? Mask(7) : Mask(0);
    CHECK(phi(c3, maj, a) == want);
  }
}

TEST_CASE("circ is associative on λ(C4) and λ(C2xC2)") {
  for (auto spec : {"C4", "C2xC2"}) {
    auto g       = parse_spec(spec);
    auto systems = enumerate_mls(g);
    for (auto const& a : systems) {
      for (auto const& b : systems) {
        auto ab = circ(g, a, b);
        for (auto const& c : systems) {
          CHECK(circ(g, ab, c) == circ(g, a, circ(g, b, c)));
        }
      }
    }
  }
}

TEST_CASE("phi: identity, equivariance and the oracle") {
  for (auto const& g : test_support::catalog_groups(6)) {
    auto const t = table_of(g);
    auto const e = principal_ultrafilter(g, 0);
    for (Mask a = 0; a <= g.all(); ++a) {
      CHECK(phi(g, e, a) == a);
    }
    for (auto const& s : enumerate_mls(g)) {
      auto f = phi_table(g, s);
      for (Mask a = 0; a <= g.all(); ++a) {
        CHECK(f[a] == oracle::to_mask(oracle::phi(t, to_oracle(to_family(s)),
                                                  oracle::from_mask(a))));
        for (Elem x = 0; x < g.order(); ++x) {
          CHECK(f[g.shift(x, a)] == g.shift(x, f[a]));
        }
      }
    }
  }
}

TEST_CASE("phi_inverse") {
  auto              c4 = make_cyclic(4);
  std::vector<Mask> id(16);
  for (Mask a = 0; a < 16; ++a) {
    id[a] = a;
  }
  CHECK(phi_inverse(c4, id) == to_family(principal_ultrafilter(c4, 0)));
  for (auto const& s : enumerate_mls(c4)) {
    CHECK(to_signature(phi_inverse(c4, phi_table(c4, s))) == s);
  }
  // constant X is equivariant, so it is accepted and gives every subset
  std::vector<Mask> const_x(16, c4.all());
  CHECK(phi_inverse(c4, const_x).size() == 16);
  // constant {e} is not
  std::vector<Mask> const_e(16, Mask(1));
  CHECK_THROWS_AS(phi_inverse(c4, const_e), EquivarianceError);
  CHECK_THROWS_AS(phi_inverse(c4, std::vector<Mask>(3)), std::invalid_argument);
}

TEST_CASE("Φ is a bijective circ-homomorphism onto monotone symmetric equivariant maps") {
  for (auto const& g : test_support::catalog_groups(4)) {
    CAPTURE(g.label());
    auto const systems = enumerate_mls(g);
    std::set<std::vector<Mask>> images;
    for (auto const& a : systems) {
      auto fa = phi_table(g, a);
      images.insert(fa);
      for (auto const& b : systems) {
        auto fb  = phi_table(g, b);
        auto fab = phi_table(g, circ(g, a, b));
        for (Mask s = 0; s <= g.all(); ++s) {
          CHECK(fab[s] == fa[fb[s]]);
        }
      }
    }
    CHECK(images.size() == systems.size());

    std::size_t found = test_support::for_each_ems_map(
        g, [&](std::vector<Mask> const& f) { CHECK(images.count(f) == 1); });
    CHECK(found == systems.size());
  }
}

TEST_CASE("maximal linked iff phi is monotone and symmetric, |X| <= 4") {
  for (auto const& g : test_support::catalog_groups(4)) {
    std::size_t const sz = std::size_t(1) << g.order();
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << sz); ++code) {
      FamilyOfSets fam(g.order());
      for (Mask a = 0; a < sz; ++a) {
        if ((code >> a) & 1) {
          fam.insert(a);
        }
      }
      auto f    = phi_table(g, fam);
      bool mono = true, sym = true;
      for (Mask a = 0; a < sz; ++a) {
        sym = sym && f[a ^ g.all()] == (f[a] ^ g.all());
        for (Mask b = 0; b < sz; ++b) {
          if ((a & ~b) == 0) {
            mono = mono && (f[a] & ~f[b]) == 0;
          }
        }
      }
      CHECK(is_maximal_linked(fam) == (mono && sym));
    }
  }
}

TEST_CASE("Φ homomorphism on random triples for |X| = 5, 6") {
  std::mt19937_64 rng(11);
  for (auto spec : {"C5", "C6", "D6"}) {
    auto g = parse_spec(spec);
    for (int i = 0; i < 4000; ++i) {
      auto a  = random_mls(g.order(), rng);
      auto b  = random_mls(g.order(), rng);
      Mask s  = rng() & g.all();
      CHECK(phi(g, circ(g, a, b), s) == phi(g, a, phi(g, b, s)));
      CHECK(is_maximal_linked(to_family(a)));
    }
  }
}
