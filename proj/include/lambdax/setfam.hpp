#ifndef LAMBDAX_SETFAM_HPP_
#define LAMBDAX_SETFAM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lambdax/group.hpp"

namespace lambdax {

  //! A maximal linked system on an n-element set.
  //!
  //! One choice bit per complementary pair {A, X\A}. The pair is identified
  //! by its smaller mask, which is the one with bit n-1 clear, so pair ids
  //! run over 0 .. 2^{n-1}-1 and membership is a single bit lookup.
  class MlsSignature {
   public:
    MlsSignature() = default;
    explicit MlsSignature(std::size_t n);

    std::size_t width() const noexcept {
      return _n;
    }

    std::size_t pair_count() const noexcept {
      return std::size_t(1) << (_n - 1);
    }

    bool bit(Mask pair) const noexcept {
      return (_words[pair >> 6] >> (pair & 63)) & 1;
    }

    void set_bit(Mask pair, bool value) noexcept {
      if (value) {
        _words[pair >> 6] |= std::uint64_t(1) << (pair & 63);
      } else {
        _words[pair >> 6] &= ~(std::uint64_t(1) << (pair & 63));
      }
    }

    bool contains(Mask a) const noexcept {
      return ((a >> (_n - 1)) & 1) ? !bit(a ^ full_mask(_n)) : bit(a);
    }

    std::vector<std::uint64_t> const& words() const noexcept {
      return _words;
    }

    //! Big-endian hex of the choice vector (pair 0 is the lowest bit).
    std::string           hex() const;
    static MlsSignature   from_hex(std::size_t n, std::string_view text);

    bool operator==(MlsSignature const&) const = default;
    auto operator<=>(MlsSignature const&) const = default;

    std::size_t hash() const noexcept;

   private:
    std::size_t                _n = 0;
    std::vector<std::uint64_t> _words;
  };

  struct MlsSignatureHash {
    std::size_t operator()(MlsSignature const& s) const noexcept {
      return s.hash();
    }
  };

  //! A general family of subsets of an n-element set (n <= 16).
  class FamilyOfSets {
   public:
    FamilyOfSets() = default;
    explicit FamilyOfSets(std::size_t n);
    FamilyOfSets(std::size_t n, std::vector<Mask> const& members);

    std::size_t width() const noexcept {
      return _n;
    }

    bool contains(Mask a) const noexcept {
      return (_words[a >> 6] >> (a & 63)) & 1;
    }

    void insert(Mask a) noexcept {
      _words[a >> 6] |= std::uint64_t(1) << (a & 63);
    }

    void erase(Mask a) noexcept {
      _words[a >> 6] &= ~(std::uint64_t(1) << (a & 63));
    }

    std::size_t       size() const noexcept;
    std::vector<Mask> members() const;

    bool operator==(FamilyOfSets const&) const = default;

   private:
    std::size_t                _n = 0;
    std::vector<std::uint64_t> _words;
  };

  FamilyOfSets to_family(MlsSignature const& s);
  //! Throws std::invalid_argument unless f is maximal linked.
  MlsSignature to_signature(FamilyOfSets const& f);

  bool is_linked(FamilyOfSets const& f);
  bool is_maximal_linked(FamilyOfSets const& f);

  inline Mask shift(FiniteGroup const& g, Elem x, Mask a) noexcept {
    return g.shift(x, a);
  }

  inline bool mls_contains(MlsSignature const& s, Mask a) noexcept {
    return s.contains(a);
  }

  MlsSignature principal_ultrafilter(FiniteGroup const& g, Elem x);

  // Pair orderings for the enumerator.
  enum class MlsOrder {
    balanced_last,  // descending min(|A|, |X\A|), balanced pairs at the end
    lexicographic   // ascending pair id
  };

  class MlsBudgetExceeded : public std::runtime_error {
   public:
    explicit MlsBudgetExceeded(std::uint64_t count)
        : std::runtime_error("enumeration budget exceeded after "
                             + std::to_string(count) + " systems"),
          _count(count) {}

    std::uint64_t count() const noexcept {
      return _count;
    }

   private:
    std::uint64_t _count;
  };

  struct MlsEnumOptions {
    MlsOrder      order  = MlsOrder::balanced_last;
    std::uint64_t budget = ~std::uint64_t(0);  // max systems emitted
  };

  //! Streams every maximal linked system on an n-element set to `sink`.
  //! Returns the number emitted; throws MlsBudgetExceeded when the budget
  //! would be exceeded.
  std::uint64_t enumerate_mls(std::size_t                                   n,
                              std::function<void(MlsSignature const&)> const& sink,
                              MlsEnumOptions options = {});

  //! All maximal linked systems on the elements of g, sorted.
  std::vector<MlsSignature> enumerate_mls(FiniteGroup const& g,
                                          MlsEnumOptions     options = {});

  void write_mls_stream(std::ostream&                    os,
                        std::size_t                      n,
                        std::vector<MlsSignature> const& systems);
  std::vector<MlsSignature> read_mls_stream(std::istream& is);

  //! A ∘ B = {S : {x : x^{-1}S ∈ B} ∈ A}.
  MlsSignature circ(FiniteGroup const&  g,
                    MlsSignature const& a,
                    MlsSignature const& b);
  FamilyOfSets circ(FiniteGroup const&  g,
                    FamilyOfSets const& a,
                    FamilyOfSets const& b);

  //! {x : x^{-1}S ∈ A}
  Mask phi(FiniteGroup const& g, MlsSignature const& a, Mask s);
  Mask phi(FiniteGroup const& g, FamilyOfSets const& a, Mask s);

  // phi over every subset, indexed by mask.
  std::vector<Mask> phi_table(FiniteGroup const& g, MlsSignature const& a);
  std::vector<Mask> phi_table(FiniteGroup const& g, FamilyOfSets const& a);

  class EquivarianceError : public std::invalid_argument {
   public:
    EquivarianceError(Elem x, Mask a)
        : std::invalid_argument("map is not equivariant at x="
                                + std::to_string(x)
                                + ", A=" + std::to_string(a)),
          element(x),
          set(a) {}

    Elem element;
    Mask set;
  };

  //! {A : e ∈ f(A)} for an equivariant f given on all 2^n subsets.
  FamilyOfSets phi_inverse(FiniteGroup const& g, std::vector<Mask> const& f);

  //! A uniformly seeded (not uniformly distributed) maximal linked system.
  MlsSignature random_mls(std::size_t n, std::mt19937_64& rng);

}  // namespace lambdax

#endif  // LAMBDAX_SETFAM_HPP_
