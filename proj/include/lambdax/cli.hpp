#ifndef LAMBDAX_CLI_HPP_
#define LAMBDAX_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lambdax/group.hpp"

namespace lambdax {

  constexpr int kExitOk       = 0;
  constexpr int kExitDisagree = 2;  // cross-check disagreement or invariant failure
  constexpr int kExitBudget   = 3;
  constexpr int kExitInput    = 4;

  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t pos, std::string const& msg)
        : std::invalid_argument("at " + std::to_string(pos) + ": " + msg),
          _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  //! "C<n>", "D<2n>", "Q<8|16|32>", "A4", each optionally "^k", joined by
  //! "x"; or "file:<path>" holding a Cayley JSON document.
  //! Throws ParseError, GroupError (size cap, bad table) or
  //! std::runtime_error (unreadable file).
  FiniteGroup parse_spec(std::string_view text);

  //! Specs of the built-in catalog, ascending order.
  std::vector<std::string> const& catalog();

  struct AnalyzeFlags {
    bool          brute  = false;
    bool          json   = false;
    std::uint64_t budget = 4096;
    std::uint64_t seed   = 1;
  };

  int cmd_analyze(std::string const&  spec,
                  AnalyzeFlags const& flags,
                  std::ostream&       out,
                  std::ostream&       err);

  int cmd_table(bool json, std::ostream& out, std::ostream& err);

  struct MlsCountFlags {
    std::optional<std::string> out_file;
    std::uint64_t              budget = ~std::uint64_t(0);
  };

  int cmd_mls_count(std::string const&   spec,
                    MlsCountFlags const& flags,
                    std::ostream&        out,
                    std::ostream&        err);

}  // namespace lambdax

#endif  // LAMBDAX_CLI_HPP_
