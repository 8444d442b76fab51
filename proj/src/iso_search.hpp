#ifndef LAMBDAX_SRC_ISO_SEARCH_HPP_
#define LAMBDAX_SRC_ISO_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lambdax::detail {

  enum class SearchVerdict { yes, no, budget };

  struct SearchResult {
    SearchVerdict              verdict = SearchVerdict::no;
    std::vector<std::uint32_t> map;  // filled when verdict == yes
  };

  // Searches for a bijection f with f(x*y) = f(x)*f(y) between two magmas
  // given by flat n*n tables. `key1`/`key2` are per-element invariants that
  // any isomorphism must preserve; they only prune. Candidate images are
  // chosen for a generating set of the first magma and extended along
  // right multiplication. `budget` bounds the number of search nodes.
  SearchResult isomorphism_search(std::size_t                       n,
                                  std::vector<std::uint32_t> const& t1,
                                  std::vector<std::uint32_t> const& t2,
                                  std::vector<std::uint64_t> const& key1,
                                  std::vector<std::uint64_t> const& key2,
                                  std::uint64_t                     budget);

}  // namespace lambdax::detail

#endif  // LAMBDAX_SRC_ISO_SEARCH_HPP_
