#ifndef LAMBDAX_STRUCTURE_HPP_
#define LAMBDAX_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lambdax/group.hpp"
#include "lambdax/semigroup.hpp"
#include "lambdax/setfam.hpp"
#include "lambdax/twin.hpp"

namespace lambdax {

  //! 2^m x C2^a x C4^b x ... x Q8^c, normalized.
  struct TypeExpr {
    std::size_t                     m = 0;
    std::map<CharType, std::size_t> factors;  // (family, order) -> exponent

    //! "2^2 x C2^5", "2 x C2^3 x Q8", "1" for the trivial type.
    std::string str() const;
    //! The group factor alone.
    std::string group_str() const;
    //! Order of the group factor.
    std::uint64_t group_order() const;

    //! Accepts the output of str() and group_str(); also "x" without
    //! spaces. Throws std::invalid_argument.
    static TypeExpr parse(std::string_view text);

    bool operator==(TypeExpr const&) const = default;
  };

  //! Writes h as a product of cyclic prime-power groups and at most one
  //! generalized quaternion factor; nullopt if no such form is found.
  std::optional<TypeExpr> describe_group(FiniteGroup const& h);

  //! The group ∏ factors, built as a direct product of cyclic and
  //! quaternion groups in the normalized order.
  FiniteGroup realize_type_group(TypeExpr const& t);

  struct OrbitSummary {
    Mask        k = 0;          // representative
    std::size_t conjugates = 0;
    std::size_t cosets = 0;     // |X/K±|
    std::size_t h_order = 0;    // |H(K)|
    std::size_t t_size = 0;     // |T_K|
    std::size_t t_orbits = 0;   // |[T_K]|
    CharType    type;

    bool operator==(OrbitSummary const&) const = default;
  };

  struct MSummand {
    Mask        k = 0;
    std::size_t orbit_size_T = 0;  // |[T_K]|

    bool operator==(MSummand const&) const = default;
  };

  struct StructureReport {
    std::string                        group;
    std::map<std::string, std::size_t> q;
    std::size_t                        m = 0;
    std::vector<MSummand>              m_summands;
    std::string                        min_left_ideal;
    std::string                        max_subgroup;
    std::uint64_t                      idempotents = 0;
    std::string                        provenance;
    std::vector<std::string>           notes;
    std::vector<OrbitSummary>          per_orbit;

    bool operator==(StructureReport const&) const = default;
  };

  std::string     report_to_json(StructureReport const& r, int indent = 2);
  //! Throws std::invalid_argument on a malformed document.
  StructureReport report_from_json(std::string const& text);

  //! Checks the internal invariants of a report; returns the violations.
  std::vector<std::string> report_violations(StructureReport const& r);

  //! q(g, C_{2^k}) = (|hom(g, C_{2^k})| - |hom(g, C_{2^{k-1}})|) / 2^{k-1}
  //! for abelian g. Throws std::invalid_argument otherwise.
  std::map<std::string, std::size_t> hom_formula_q(FiniteGroup const& g);

  //! From the maximal 2-cogroup orbits. Needs |g| <= 16.
  StructureReport analyze_structural(FiniteGroup const& g);

  class BruteBudgetExceeded : public std::runtime_error {
   public:
    explicit BruteBudgetExceeded(std::string const& what)
        : std::runtime_error(what) {}
  };

  //! λ(g) as a materialized semigroup.
  struct BruteLambda {
    std::vector<MlsSignature> systems;  // sorted; ids follow this order
    FiniteSemigroup           lambda;
    ElementSet                min_ideal;
    ElementSet                min_left_ideal;  // the one containing the
                                               // smallest id of K(λ)
  };

  //! `budget` bounds |λ(g)|. Throws BruteBudgetExceeded.
  BruteLambda brute_lambda(FiniteGroup const& g, std::uint64_t budget = 4096);

  StructureReport analyze_brute(FiniteGroup const& g, std::uint64_t budget = 4096);

  //! 2^m x ∏ H(K) as a semigroup: left zeros times the group.
  FiniteSemigroup structural_semigroup(FiniteGroup const& g);
  //! Left zeros times one group semigroup per factor; ids nest left to right.
  FiniteSemigroup type_semigroup(TypeExpr const& t);

  struct CrossCheck {
    bool            agree = false;
    Tri             isomorphism = Tri::no;
    StructureReport structural;
    StructureReport brute;
    StructureReport combined;  // provenance "both(+agree)" or "both(+disagree)"
  };

  CrossCheck cross_check(FiniteGroup const& g, std::uint64_t budget = 4096);

  //! The two-condition test for membership of l in K(λ(g)).
  bool min_ideal_membership(FiniteGroup const& g, MlsSignature const& l);

  //! A maximal X-invariant linked system, by greedy completion over
  //! X-orbits of subsets in descending size (then ascending mask).
  FamilyOfSets maximal_invariant_linked(FiniteGroup const& g);

  //! Representative twin sets A_K: the smallest mask of T_K for each
  //! selector K.
  std::vector<Mask> selector_twin_sets(FiniteGroup const& g);

  //! An idempotent e of λ(g) in K(λ(g)), from the projection construction.
  //! Throws std::logic_error if e∘e != e.
  MlsSignature build_projection_idempotent(FiniteGroup const& g);

  //! λ(g)∘e for the projection idempotent e, enumerated directly: one
  //! element per choice of images B_K ∈ T_K of the A_K.
  struct RealizedIdeal {
    MlsSignature              idempotent;
    std::vector<MlsSignature> elements;  // sorted
    FiniteSemigroup           semigroup;  // ids follow `elements`
  };

  RealizedIdeal realize_min_left_ideal(FiniteGroup const& g,
                                       std::size_t        max_size = 4096);

  //! Report read off a realized ideal: Rees decomposition plus
  //! describe_group. Provenance "realized".
  StructureReport analyze_realized(FiniteGroup const& g, RealizedIdeal const& r);

  //! A row of the published table of minimal left ideals.
  struct ReferenceRow {
    std::string   label;  // as printed, e.g. "C2+C4"
    std::string   spec;   // parse_spec input
    std::uint64_t idempotents;
    std::string   max_subgroup;
    std::string   min_left_ideal;
  };

  std::vector<ReferenceRow> const& reference_table();

  //! Structural report for a row, with brute provenance where |X| <= 6 and
  //! "table-discrepancy" notes wherever a column differs.
  StructureReport table_row_report(ReferenceRow const& row, FiniteGroup const& g);

}  // namespace lambdax

#endif  // LAMBDAX_STRUCTURE_HPP_
