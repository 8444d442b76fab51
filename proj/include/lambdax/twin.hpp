#ifndef LAMBDAX_TWIN_HPP_
#define LAMBDAX_TWIN_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdax/group.hpp"

// Twin sets, 2-cogroups and characteristic groups of a finite group.
//
// Every finite group is torsion, so its twinic ideal is trivial and every
// notion relative to an ideal collapses to the plain one. Nothing here is
// parametrized by an ideal.

namespace lambdax {

  struct FixSets {
    Mask fix;        // {x : xA = A}
    Mask fix_minus;  // {x : xA = X\A}
    Mask fix_pm;     // union of the two
  };

  FixSets fix_operators(FiniteGroup const& g, Mask a);

  bool is_twin(FiniteGroup const& g, Mask a);
  //! xA ⊂ X\A ⊂ yA for some x, y
  bool is_pretwin(FiniteGroup const& g, Mask a);

  struct TwinSet {
    Mask    mask;
    FixSets fix;
  };

  struct TwoCogroup {
    Mask        k;       // K
    Mask        kk;      // KK, a subgroup
    Mask        kpm;     // K ∪ KK
    Mask        stab;    // {x : xKx^{-1} = K}
    std::size_t index;   // |X| / |K|
    bool        maximal = false;
  };

  bool is_2cogroup(FiniteGroup const& g, Mask k);
  TwoCogroup make_2cogroup(FiniteGroup const& g, Mask k);

  //! All 2-cogroups, as H±\H over subgroup pairs of index 2. Sorted by mask.
  std::vector<TwoCogroup> enumerate_2cogroups(FiniteGroup const& g);
  std::vector<TwoCogroup> maximal_2cogroups(FiniteGroup const& g);

  // C_{2^k} or Q_{2^k}.
  struct CharType {
    char        family = 'C';  // 'C' or 'Q'
    std::size_t order  = 1;

    std::string tag() const {
      return std::string(1, family) + std::to_string(order);
    }

    auto operator<=>(CharType const&) const = default;
  };

  struct CharacteristicGroup {
    FiniteGroup group;  // Stab(K)/KK
    CharType    type;
  };

  //! Throws std::logic_error if Stab(K)/KK is not a 2-group with a unique
  //! involution; that cannot happen for a maximal K.
  CharacteristicGroup characteristic_group(FiniteGroup const& g,
                                           TwoCogroup const&  k);

  // Classifies a 2-group with one involution; nullopt for anything else.
  std::optional<CharType> classify_unique_involution_2group(FiniteGroup const& h);

  struct CogroupOrbit {
    TwoCogroup              representative;  // smallest mask in the orbit
    std::vector<TwoCogroup> members;
    CharType                type;
  };

  //! Conjugacy orbits of the maximal 2-cogroups, ordered by representative.
  //! The representatives form the canonical selector.
  std::vector<CogroupOrbit> cogroup_orbits(FiniteGroup const& g);
  std::vector<TwoCogroup>   selector(std::vector<CogroupOrbit> const& orbits);

  //! T_K for a maximal 2-cogroup K.
  struct TwinFamily {
    TwoCogroup                     cogroup;
    std::vector<Elem>              transversal;  // of the cosets K±x
    std::vector<Mask>              sets;         // sorted
    std::vector<std::vector<Mask>> orbits;       // Stab(K)-orbits, sorted
  };

  //! Builds T_K from a transversal and checks it against a Fix⁻ scan.
  //! Throws std::invalid_argument when K is not maximal.
  TwinFamily twin_sets_for(FiniteGroup const& g, TwoCogroup const& k);

  //! Orbit counts keyed by characteristic type tag ("C2", "Q8", ...).
  std::map<std::string, std::size_t> q_counts(FiniteGroup const& g);

  struct TwinicCheck {
    bool                            trivially_twinic = true;
    std::optional<std::pair<Elem, Elem>> witness;  // (a, b) on failure
  };

  //! ab ∈ <ba, ba^{-1}, b^{-1}a, b^{-1}a^{-1}> for all a, b.
  TwinicCheck is_trivially_twinic(FiniteGroup const& g);

  // 2-cogroups that occur as Fix⁻(A) for some A, and those that do not.
  struct RealizationReport {
    std::vector<Mask> realized;
    std::vector<Mask> unrealized;
  };

  RealizationReport cogroup_realization(FiniteGroup const& g);

  // The largest normal odd-order subgroup by a direct search over normal
  // subgroups; odd_subgroup computes it from the maximal 2-cogroups.
  Subgroup odd_subgroup_direct(FiniteGroup const& g);

}  // namespace lambdax

#endif  // LAMBDAX_TWIN_HPP_
