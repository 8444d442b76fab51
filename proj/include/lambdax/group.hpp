#ifndef LAMBDAX_GROUP_HPP_
#define LAMBDAX_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambdax {

  using Elem = std::uint32_t;
  // Subsets of a group are bit vectors; bit i <=> element i.
  using Mask = std::uint64_t;

  constexpr std::size_t kMaxGroupOrder    = 64;
  constexpr std::size_t kMaxPipelineOrder = 16;

  inline int popcount(Mask m) noexcept {
    return __builtin_popcountll(m);
  }

  inline Mask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
  }

  class GroupError : public std::runtime_error {
   public:
    enum class Kind {
      malformed,
      too_large,
      not_latin,
      no_identity,
      not_associative,
      no_inverse,
      not_subgroup,
      not_normal,
      bad_argument
    };

    GroupError(Kind k, std::string const& msg)
        : std::runtime_error(msg), _kind(k) {}

    Kind kind() const noexcept {
      return _kind;
    }

   private:
    Kind _kind;
  };

  //! A finite group given by its Cayley table.
  //!
  //! Element 0 is always the identity. The constructor validates the table
  //! exhaustively (Latin square, identity, associativity, inverses) and
  //! renumbers the elements so that the identity comes first; the applied
  //! permutation is available from renumbering().
  class FiniteGroup {
   public:
    FiniteGroup(std::vector<std::vector<Elem>> const& table,
                std::vector<std::string>              names = {},
                std::string                           label = {});

    std::size_t order() const noexcept {
      return _n;
    }

    Elem mul(Elem a, Elem b) const noexcept {
      return _table[a * _n + b];
    }

    Elem inv(Elem a) const noexcept {
      return _inv[a];
    }

    static constexpr Elem identity() noexcept {
      return 0;
    }

    Mask all() const noexcept {
      return full_mask(_n);
    }

    // new index of the element that had index i in the input table
    std::vector<Elem> const& renumbering() const noexcept {
      return _renumbering;
    }

    std::string const& label() const noexcept {
      return _label;
    }

    void set_label(std::string label) {
      _label = std::move(label);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string name(Elem x) const;

    std::size_t element_order(Elem x) const noexcept {
      return _elt_order[x];
    }

    bool is_abelian() const noexcept {
      return _abelian;
    }

    //! xA
    Mask shift(Elem x, Mask a) const noexcept {
      Mask const* t = &_lshift[std::size_t(x) * _bytes * 256];
      Mask        r = 0;
      for (std::size_t b = 0; b < _bytes; ++b, a >>= 8) {
        r |= t[b * 256 + (a & 0xff)];
      }
      return r;
    }

    //! Ax
    Mask rshift(Mask a, Elem x) const noexcept {
      Mask const* t = &_rshift[std::size_t(x) * _bytes * 256];
      Mask        r = 0;
      for (std::size_t b = 0; b < _bytes; ++b, a >>= 8) {
        r |= t[b * 256 + (a & 0xff)];
      }
      return r;
    }

    Mask conjugate(Elem x, Mask a) const noexcept {
      return rshift(shift(x, a), _inv[x]);
    }

    Mask product(Mask a, Mask b) const noexcept;
    Mask inverse_set(Mask a) const noexcept;

    Mask generated(Mask gens) const noexcept;
    bool is_subgroup(Mask a) const noexcept;
    bool is_normal(Mask a) const noexcept;

    Mask center() const noexcept;
    Mask derived_subgroup() const noexcept;

    std::vector<std::vector<Elem>> table() const;

    bool operator==(FiniteGroup const& that) const noexcept {
      return _n == that._n && _table == that._table;
    }

   private:
    std::size_t               _n;
    std::size_t               _bytes;
    std::vector<std::uint8_t> _table;
    std::vector<Elem>         _inv;
    std::vector<std::size_t>  _elt_order;
    std::vector<Mask>         _lshift;
    std::vector<Mask>         _rshift;
    std::vector<Elem>         _renumbering;
    std::vector<std::string>  _names;
    std::string               _label;
    bool                      _abelian;
  };

  struct Subgroup {
    Mask        members = 0;
    std::size_t order   = 0;
    std::size_t index   = 0;
    bool        normal  = false;
  };

  // Validates and fills the cached fields.
  Subgroup make_subgroup(FiniteGroup const& g, Mask members);

  struct GroupHom {
    std::vector<Elem> images;
    std::size_t       target_order = 0;
  };

  bool is_homomorphism(FiniteGroup const&       source,
                       FiniteGroup const&       target,
                       std::vector<Elem> const& images);

  struct Quotient {
    FiniteGroup       group;
    GroupHom          projection;
    std::vector<Mask> cosets;  // coset i of the quotient as a subset of g
  };

  // A subgroup as a group in its own right, with the inclusion map.
  struct SubgroupGroup {
    FiniteGroup       group;
    std::vector<Elem> embedding;
  };

  FiniteGroup make_cyclic(std::size_t n);
  FiniteGroup make_dihedral(std::size_t two_n);
  FiniteGroup make_generalized_quaternion(std::size_t two_pow);
  FiniteGroup make_alternating4();
  FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h);

  //! Loads { "order": n, "table": [[...]], "names": [...] }.
  FiniteGroup from_cayley_json(std::string const& text);
  std::string to_cayley_json(FiniteGroup const& g);

  SubgroupGroup subgroup_group(FiniteGroup const& g, Mask members);

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g);

  Quotient quotient(FiniteGroup const& g, Subgroup const& n);

  // Invariants used to reject isomorphism cheaply.
  struct GroupFingerprint {
    std::size_t                   order;
    bool                          abelian;
    std::map<std::size_t, size_t> order_histogram;
    std::size_t                   center_order;
    std::size_t                   derived_order;

    bool operator==(GroupFingerprint const&) const = default;
  };

  GroupFingerprint fingerprint(FiniteGroup const& g);

  std::optional<std::vector<Elem>> find_isomorphism(FiniteGroup const& g,
                                                    FiniteGroup const& h);
  bool                             isomorphic(FiniteGroup const& g,
                                              FiniteGroup const& h);

  // Prime-power orders of the cyclic factors of an abelian group, ascending.
  std::vector<std::uint64_t> abelian_invariants(FiniteGroup const& g);

  //! |hom(g, C_{2^k})|.
  std::uint64_t hom_count_to_cyclic2(FiniteGroup const& g, unsigned k);

  //! The largest normal subgroup of odd order.
  Subgroup odd_subgroup(FiniteGroup const& g);

  struct FgAbelianPresentation {
    unsigned                   free_rank = 0;
    std::vector<std::uint64_t> torsion_factors;  // m_i | m_{i+1}, m_i >= 2
  };

  void validate(FgAbelianPresentation const& p);

  // Result of fg_abelian_q. For the infinite index only a marker is known.
  struct QCount {
    bool          symbolic = false;
    std::uint64_t value    = 0;
    std::string   marker;  // "zero" or "positive" when symbolic
  };

  // k == std::nullopt stands for C_{2^infinity}.
  QCount fg_abelian_q(FgAbelianPresentation const& p,
                      std::optional<unsigned>      k);

}  // namespace lambdax

#endif  // LAMBDAX_GROUP_HPP_
