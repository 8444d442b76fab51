#ifndef LAMBDAX_SEMIGROUP_HPP_
#define LAMBDAX_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lambdax/group.hpp"
#include "lambdax/twin.hpp"

namespace lambdax {

  constexpr std::size_t kMaterializeLimit = 4096;

  //! A finite semigroup on the ids 0 .. size-1.
  //!
  //! Up to kMaterializeLimit elements the multiplication is stored as a
  //! table; larger semigroups keep the callable and memoize products.
  class FiniteSemigroup {
   public:
    using element_type = std::uint32_t;
    using Mul          = std::function<element_type(element_type, element_type)>;

    FiniteSemigroup(std::size_t size, std::vector<element_type> table);
    FiniteSemigroup(std::size_t size, Mul mul);

    ~FiniteSemigroup();
    FiniteSemigroup(FiniteSemigroup&&) noexcept;
    FiniteSemigroup& operator=(FiniteSemigroup&&) noexcept;

    std::size_t size() const noexcept {
      return _size;
    }

    bool materialized() const noexcept {
      return !_table.empty() || _size == 0;
    }

    element_type mul(element_type a, element_type b) const {
      if (!_table.empty()) {
        return _table[std::size_t(a) * _size + b];
      }
      return slow_mul(a, b);
    }

    //! Throws std::logic_error unless materialized.
    std::vector<element_type> const& table() const;

    //! Exhaustive up to 512 elements, 10^5 random triples beyond.
    bool check_associative(std::uint64_t seed = 1) const;

   private:
    element_type slow_mul(element_type a, element_type b) const;

    struct Memo;
    std::size_t               _size;
    std::vector<element_type> _table;
    Mul                       _mul;
    std::unique_ptr<Memo>     _memo;
  };

  using SemigroupElement = FiniteSemigroup::element_type;
  using ElementSet       = std::vector<SemigroupElement>;  // sorted ids

  FiniteSemigroup left_zero_semigroup(std::size_t k);
  FiniteSemigroup group_semigroup(FiniteGroup const& g);
  //! Componentwise product; element (a, b) has id a * |t| + b.
  FiniteSemigroup direct_product(FiniteSemigroup const& s,
                                 FiniteSemigroup const& t);
  //! The subsemigroup on `elements` (closed, sorted); ids follow the order.
  FiniteSemigroup restrict_to(FiniteSemigroup const& s,
                              ElementSet const&      elements);

  ElementSet idempotents(FiniteSemigroup const& s);

  //! S·x
  ElementSet left_multiples(FiniteSemigroup const& s, SemigroupElement x);

  ElementSet              minimal_ideal(FiniteSemigroup const& s);
  std::vector<ElementSet> minimal_left_ideals(FiniteSemigroup const& s);

  struct MaximalSubgroup {
    FiniteGroup group;     // identity is the idempotent
    ElementSet  elements;  // ids in s; elements[i] is group element i
  };

  //! H_e. Throws std::invalid_argument for a non-idempotent e and
  //! GroupError when |H_e| exceeds kMaxGroupOrder.
  MaximalSubgroup maximal_subgroup(FiniteSemigroup const& s,
                                   SemigroupElement       e);

  //! The ids of H_e with e first; no size cap.
  ElementSet maximal_subgroup_elements(FiniteSemigroup const& s,
                                       SemigroupElement       e);

  //! Prime-power invariants of an abelian H_e read off element orders;
  //! nullopt if H_e is not commutative. Works past the group size cap.
  std::optional<std::vector<std::uint64_t>>
  abelian_invariants_of(FiniteSemigroup const& s, ElementSet const& h);

  struct ReesDecomposition {
    std::size_t                left_zero_count = 0;
    std::optional<FiniteGroup> group;  // empty past kMaxGroupOrder
    ElementSet      left_zeros;  // E(L)
    ElementSet      group_elements;
    // pairing[i * |H| + j] = left_zeros[i] * group_elements[j]
    std::vector<SemigroupElement> pairing;
  };

  //! Throws std::logic_error if the Rees structure fails.
  ReesDecomposition rees_decompose(FiniteSemigroup const& s,
                                   ElementSet const&      minimal_left_ideal);

  enum class Tri { yes, no, indeterminate };

  struct IsomorphismResult {
    Tri                           verdict = Tri::no;
    std::vector<SemigroupElement> map;
  };

  IsomorphismResult semigroup_isomorphic(FiniteSemigroup const& s1,
                                         FiniteSemigroup const& s2,
                                         std::uint64_t budget = 20'000'000);

  //! Equivariant self-map of T_K, stored by twin-set index.
  struct EndoMap {
    std::vector<std::uint32_t> images;
  };

  struct EndTK {
    TwinFamily           family;
    std::size_t          h_order     = 0;  // |H(K)|
    std::size_t          orbit_count = 0;  // |[T_K]|
    std::vector<EndoMap> maps;
    FiniteSemigroup      semigroup;  // f * g = f ∘ g
    // orbit index of each twin set
    std::vector<std::uint32_t> orbit_of;
  };

  //! End(T_K), enumerated from arbitrary images of orbit representatives.
  EndTK end_tk(FiniteGroup const& g,
               TwoCogroup const&  k,
               std::size_t        budget = 65536);

  //! Maps of End(T_K) whose image lies in one Stab(K)-orbit.
  ElementSet single_orbit_maps(EndTK const& e);

  //! H ≀ A^A with (h,f)*(h',f') = (h'', f∘f'), h''(a) = h(f'(a)) h'(a).
  FiniteSemigroup wreath_product(FiniteGroup const& h,
                                 std::size_t        a_size,
                                 std::size_t        budget = 1'000'000);

}  // namespace lambdax

#endif  // LAMBDAX_SEMIGROUP_HPP_
