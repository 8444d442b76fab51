#include "lambdax/setfam.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lambdax {

  namespace {

    void check_width(std::size_t n) {
      if (n == 0 || n > kMaxPipelineOrder) {
        throw std::invalid_argument("set width must lie in 1.."
                                    + std::to_string(kMaxPipelineOrder));
      }
    }

    std::size_t words_for(std::size_t bits) {
      return (bits + 63) / 64;
    }

    // Partial assignment of a self-dual monotone family. state[A] is
    // +1 (member), -1 (non-member) or 0 (undecided).
    class Builder {
     public:
      explicit Builder(std::size_t n)
          : _n(n), _full(full_mask(n)), _state(std::size_t(1) << n, 0) {
        _state[_full] = 1;
        _state[0]     = -1;
      }

      std::size_t mark() const noexcept {
        return _trail.size();
      }

      void undo(std::size_t m) noexcept {
        while (_trail.size() > m) {
          Mask a = _trail.back();
          _trail.pop_back();
          _state[a]         = 0;
          _state[a ^ _full] = 0;
        }
      }

      int state(Mask a) const noexcept {
        return _state[a];
      }

      // Puts A and all of its supersets in; rolls back and returns false if
      // some superset is already out.
      bool assign(Mask a) {
        std::size_t m    = mark();
        Mask        rest = _full & ~a;
        Mask        sub  = rest;
        while (true) {
          Mask s = a | sub;
          if (_state[s] < 0) {
            undo(m);
            return false;
          }
          if (_state[s] == 0) {
            _state[s]         = 1;
            _state[s ^ _full] = -1;
            _trail.push_back(s);
          }
          if (sub == 0) {
            break;
          }
          sub = (sub - 1) & rest;
        }
        return true;
      }

      MlsSignature signature() const {
        MlsSignature s(_n);
        for (Mask p = 0; p < (Mask(1) << (_n - 1)); ++p) {
          s.set_bit(p, _state[p] > 0);
        }
        return s;
      }

     private:
      std::size_t       _n;
      Mask              _full;
      std::vector<int8_t> _state;
      std::vector<Mask> _trail;
    };

    std::vector<Mask> pair_order(std::size_t n, MlsOrder order) {
      std::vector<Mask> pairs(std::size_t(1) << (n - 1));
      std::iota(pairs.begin(), pairs.end(), Mask(0));
      if (order == MlsOrder::lexicographic) {
        return pairs;
      }
      auto key = [n](Mask p) {
        int  k        = popcount(p);
        int  m        = std::min<int>(k, int(n) - k);
        bool balanced = 2 * std::size_t(k) == n;
        return std::pair<int, int>(balanced ? 1 : 0, -m);
      };
      std::stable_sort(pairs.begin(), pairs.end(), [&](Mask a, Mask b) {
        return key(a) < key(b);
      });
      return pairs;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // MlsSignature
  ////////////////////////////////////////////////////////////////////////

  MlsSignature::MlsSignature(std::size_t n) : _n(n) {
    check_width(n);
    _words.assign(words_for(std::size_t(1) << (n - 1)), 0);
  }

  std::string MlsSignature::hex() const {
    static char const digits[] = "0123456789abcdef";
    std::size_t const bits     = pair_count();
    std::size_t const nibbles  = (bits + 3) / 4;
    std::string       out(nibbles, '0');
    for (std::size_t i = 0; i < nibbles; ++i) {
      unsigned v = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        std::size_t b = 4 * i + j;
        if (b < bits && bit(b)) {
          v |= 1u << j;
        }
      }
      out[nibbles - 1 - i] = digits[v];
    }
    return out;
  }

  MlsSignature MlsSignature::from_hex(std::size_t n, std::string_view text) {
    MlsSignature      s(n);
    std::size_t const bits    = s.pair_count();
    std::size_t const nibbles = (bits + 3) / 4;
    if (text.size() != nibbles) {
      throw std::invalid_argument("signature has wrong length for n="
                                  + std::to_string(n));
    }
    for (std::size_t i = 0; i < nibbles; ++i) {
      char     c = text[nibbles - 1 - i];
      unsigned v;
      if (c >= '0' && c <= '9') {
        v = unsigned(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        v = unsigned(c - 'a' + 10);
      } else if (c >= 'A' && c <= 'F') {
        v = unsigned(c - 'A' + 10);
      } else {
        throw std::invalid_argument("bad hex digit in signature");
      }
      for (std::size_t j = 0; j < 4; ++j) {
        std::size_t b = 4 * i + j;
        if ((v >> j) & 1) {
          if (b >= bits) {
            throw std::invalid_argument("signature has stray high bits");
          }
          s.set_bit(b, true);
        }
      }
    }
    return s;
  }

  std::size_t MlsSignature::hash() const noexcept {
    std::size_t h = _n;
    for (auto w : _words) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // FamilyOfSets
  ////////////////////////////////////////////////////////////////////////

  FamilyOfSets::FamilyOfSets(std::size_t n) : _n(n) {
    check_width(n);
    _words.assign(words_for(std::size_t(1) << n), 0);
  }

  FamilyOfSets::FamilyOfSets(std::size_t n, std::vector<Mask> const& members)
      : FamilyOfSets(n) {
    for (auto a : members) {
      if ((a & ~full_mask(n)) != 0) {
        throw std::invalid_argument("member outside the ambient set");
      }
      insert(a);
    }
  }

  std::size_t FamilyOfSets::size() const noexcept {
    std::size_t s = 0;
    for (auto w : _words) {
      s += std::size_t(__builtin_popcountll(w));
    }
    return s;
  }

  std::vector<Mask> FamilyOfSets::members() const {
    std::vector<Mask> out;
    for (Mask a = 0; a < (Mask(1) << _n); ++a) {
      if (contains(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  FamilyOfSets to_family(MlsSignature const& s) {
    FamilyOfSets f(s.width());
    for (Mask a = 0; a < (Mask(1) << s.width()); ++a) {
      if (s.contains(a)) {
        f.insert(a);
      }
    }
    return f;
  }

  MlsSignature to_signature(FamilyOfSets const& f) {
    if (!is_maximal_linked(f)) {
      throw std::invalid_argument("family is not maximal linked");
    }
    MlsSignature s(f.width());
    for (Mask p = 0; p < s.pair_count(); ++p) {
      s.set_bit(p, f.contains(p));
    }
    return s;
  }

  bool is_linked(FamilyOfSets const& f) {
    Mask const full = full_mask(f.width());
    // A member is disjoint from another iff some subset of its complement
    // is a member.
    for (Mask a = 0; a <= full; ++a) {
      if (!f.contains(a)) {
        continue;
      }
      Mask rest = full & ~a;
      Mask sub  = rest;
      while (true) {
        if (f.contains(sub)) {
          return false;
        }
        if (sub == 0) {
          break;
        }
        sub = (sub - 1) & rest;
      }
    }
    return true;
  }

  bool is_maximal_linked(FamilyOfSets const& f) {
    Mask const full = full_mask(f.width());
    for (Mask a = 0; a <= full; ++a) {
      if (f.contains(a) == f.contains(a ^ full)) {
        return false;
      }
    }
    return is_linked(f);
  }

  MlsSignature principal_ultrafilter(FiniteGroup const& g, Elem x) {
    MlsSignature s(g.order());
    for (Mask p = 0; p < s.pair_count(); ++p) {
      s.set_bit(p, (p >> x) & 1);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t enumerate_mls(std::size_t n,
                              std::function<void(MlsSignature const&)> const& sink,
                              MlsEnumOptions options) {
    check_width(n);
    Builder           b(n);
    auto const        pairs = pair_order(n, options.order);
    std::uint64_t     count = 0;
    Mask const        full  = full_mask(n);

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      while (i < pairs.size() && b.state(pairs[i]) != 0) {
        ++i;
      }
      if (i == pairs.size()) {
        if (count == options.budget) {
          throw MlsBudgetExceeded(count);
        }
        ++count;
        sink(b.signature());
        return;
      }
      for (Mask a : {pairs[i], pairs[i] ^ full}) {
        std::size_t m = b.mark();
        if (b.assign(a)) {
          rec(i + 1);
          b.undo(m);
        }
      }
    };
    rec(0);
    return count;
  }

  std::vector<MlsSignature> enumerate_mls(FiniteGroup const& g,
                                          MlsEnumOptions     options) {
    std::vector<MlsSignature> out;
    enumerate_mls(
        g.order(), [&](MlsSignature const& s) { out.push_back(s); }, options);
    std::sort(out.begin(), out.end());
    return out;
  }

  void write_mls_stream(std::ostream&                    os,
                        std::size_t                      n,
                        std::vector<MlsSignature> const& systems) {
    os << "n=" << n << " pairs=" << (std::size_t(1) << (n - 1)) << "\n";
    for (auto const& s : systems) {
      os << s.hex() << "\n";
    }
  }

  std::vector<MlsSignature> read_mls_stream(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) {
      throw std::invalid_argument("empty MLS stream");
    }
    std::size_t n = 0, pairs = 0;
    if (std::sscanf(header.c_str(), "n=%zu pairs=%zu", &n, &pairs) != 2
        || n == 0 || n > kMaxPipelineOrder
        || pairs != (std::size_t(1) << (n - 1))) {
      throw std::invalid_argument("bad MLS stream header: " + header);
    }
    std::vector<MlsSignature> out;
    std::string               line;
    while (std::getline(is, line)) {
      if (!line.empty()) {
        out.push_back(MlsSignature::from_hex(n, line));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The operation and the function representation
  ////////////////////////////////////////////////////////////////////////

  Mask phi(FiniteGroup const& g, MlsSignature const& a, Mask s) {
    Mask r = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (a.contains(g.shift(g.inv(x), s))) {
        r |= Mask(1) << x;
      }
    }
    return r;
  }

  Mask phi(FiniteGroup const& g, FamilyOfSets const& a, Mask s) {
    Mask r = 0;
    for (Elem x = 0; x < g.order(); ++x) {
      if (a.contains(g.shift(g.inv(x), s))) {
        r |= Mask(1) << x;
      }
    }
    return r;
  }

  std::vector<Mask> phi_table(FiniteGroup const& g, MlsSignature const& a) {
    std::vector<Mask> t(std::size_t(1) << g.order());
    for (Mask s = 0; s < t.size(); ++s) {
      t[s] = phi(g, a, s);
    }
    return t;
  }

  std::vector<Mask> phi_table(FiniteGroup const& g, FamilyOfSets const& a) {
    std::vector<Mask> t(std::size_t(1) << g.order());
    for (Mask s = 0; s < t.size(); ++s) {
      t[s] = phi(g, a, s);
    }
    return t;
  }

  MlsSignature circ(FiniteGroup const&  g,
                    MlsSignature const& a,
                    MlsSignature const& b) {
    if (a.width() != g.order() || b.width() != g.order()) {
      throw std::invalid_argument("circ: width mismatch");
    }
    MlsSignature r(g.order());
    for (Mask p = 0; p < r.pair_count(); ++p) {
      r.set_bit(p, a.contains(phi(g, b, p)));
    }
    return r;
  }

  FamilyOfSets circ(FiniteGroup const&  g,
                    FamilyOfSets const& a,
                    FamilyOfSets const& b) {
    if (a.width() != g.order() || b.width() != g.order()) {
      throw std::invalid_argument("circ: width mismatch");
    }
    FamilyOfSets r(g.order());
    for (Mask s = 0; s <= g.all(); ++s) {
      if (a.contains(phi(g, b, s))) {
        r.insert(s);
      }
    }
    return r;
  }

  FamilyOfSets phi_inverse(FiniteGroup const& g, std::vector<Mask> const& f) {
    if (f.size() != (std::size_t(1) << g.order())) {
      throw std::invalid_argument("phi_inverse: map must cover every subset");
    }
    for (Mask a = 0; a <= g.all(); ++a) {
      for (Elem x = 0; x < g.order(); ++x) {
        if (f[g.shift(x, a)] != g.shift(x, f[a])) {
          throw EquivarianceError(x, a);
        }
      }
    }
    FamilyOfSets out(g.order());
    for (Mask a = 0; a <= g.all(); ++a) {
      if (f[a] & 1) {
        out.insert(a);
      }
    }
    return out;
  }

  MlsSignature random_mls(std::size_t n, std::mt19937_64& rng) {
    check_width(n);
    Builder           b(n);
    std::vector<Mask> pairs(std::size_t(1) << (n - 1));
    std::iota(pairs.begin(), pairs.end(), Mask(0));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    Mask const full = full_mask(n);
    for (auto p : pairs) {
      if (b.state(p) != 0) {
        continue;
      }
      Mask first = (rng() & 1) ? p : p ^ full;
      if (!b.assign(first)) {
        b.assign(first ^ full);
      }
    }
    return b.signature();
  }

}  // namespace lambdax
