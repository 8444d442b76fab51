#include "lambdax/cli.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lambdax/setfam.hpp"
#include "lambdax/structure.hpp"

namespace lambdax {

  ////////////////////////////////////////////////////////////////////////
  // Group specs
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::size_t read_number(std::string_view text, std::size_t& i) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == start) {
        throw ParseError(start, "expected a number");
      }
      if (i - start > 6) {
        throw ParseError(start, "number too large");
      }
      return std::stoul(std::string(text.substr(start, i - start)));
    }

    FiniteGroup parse_factor(std::string_view text, std::size_t& i) {
      if (i >= text.size()) {
        throw ParseError(i, "expected a group factor");
      }
      std::size_t const start = i;
      char const        c     = text[i++];
      try {
        switch (c) {
          case 'C': {
            auto n = read_number(text, i);
            if (n == 0) {
              throw ParseError(start + 1, "C0 is not a group");
            }
            return make_cyclic(n);
          }
          case 'D': {
            auto n = read_number(text, i);
            if (n == 0 || n % 2 != 0) {
              throw ParseError(start + 1, "dihedral order must be even");
            }
            return make_dihedral(n);
          }
          case 'Q': {
            auto n = read_number(text, i);
            if (n != 8 && n != 16 && n != 32) {
              throw ParseError(start + 1, "quaternion order must be 8, 16 or 32");
            }
            return make_generalized_quaternion(n);
          }
          case 'A': {
            auto n = read_number(text, i);
            if (n != 4) {
              throw ParseError(start + 1, "only A4 is supported");
            }
            return make_alternating4();
          }
          default:
            throw ParseError(start, std::string("unknown group family '") + c + "'");
        }
      } catch (GroupError const& e) {
        if (e.kind() == GroupError::Kind::too_large) {
          throw;
        }
        throw ParseError(start, e.what());
      }
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw std::runtime_error("cannot read " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

  }  // namespace

  FiniteGroup parse_spec(std::string_view text) {
    if (text.substr(0, 5) == "file:") {
      auto path = std::string(text.substr(5));
      if (path.empty()) {
        throw ParseError(5, "empty file name");
      }
      auto g = from_cayley_json(read_file(path));
      if (g.label().empty()) {
        g.set_label(path);
      }
      return g;
    }
    if (text.empty()) {
      throw ParseError(0, "empty group spec");
    }
    std::optional<FiniteGroup> g;
    std::size_t                i = 0;
    while (true) {
      auto f   = parse_factor(text, i);
      auto pow = std::size_t(1);
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t at = i;
        pow            = read_number(text, i);
        if (pow == 0) {
          throw ParseError(at, "exponent must be positive");
        }
      }
      for (std::size_t k = 0; k < pow; ++k) {
        g = g ? direct_product(*g, f) : f;
      }
      if (i == text.size()) {
        break;
      }
      if (text[i] != 'x') {
        throw ParseError(i, std::string("unexpected '") + text[i] + "'");
      }
      ++i;
    }
    g->set_label(std::string(text));
    return std::move(*g);
  }

  std::vector<std::string> const& catalog() {
    static std::vector<std::string> const specs = {
        "C1",  "C2",     "C3",  "C4",       "C2xC2", "C5",    "C6",    "D6",
        "C7",  "C8",     "C2xC4", "C2xC2xC2", "D8",  "Q8",    "C9",    "C3xC3",
        "C10", "D10",    "C11", "C12",      "C2xC6", "D12",  "A4",    "C13",
        "C14", "D14",    "C15", "C16",      "C2xC8", "C4xC4", "C2xC2xC4",
        "C2^4", "D16",   "Q16", "C2xD8",    "C2xQ8",
    };
    return specs;
  }

  ////////////////////////////////////////////////////////////////////////
  // analyze
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void print_report(std::ostream& out, StructureReport const& r, std::size_t order) {
      out << "group        " << r.group << " (order " << order << ")\n"
          << "|E(L)|       " << r.idempotents << '\n'
          << "H_e          " << r.max_subgroup << '\n'
          << "L            " << r.min_left_ideal << '\n'
          << "provenance   " << r.provenance << '\n';
      if (!r.q.empty()) {
        out << "q           ";
        for (auto const& [tag, c] : r.q) {
          out << ' ' << tag << '=' << c;
        }
        out << '\n';
      }
      if (!r.per_orbit.empty()) {
        out << "orbits of maximal 2-cogroups\n";
        for (auto const& o : r.per_orbit) {
          std::ostringstream k;
          k << "0x" << std::hex << o.k;
          out << "  K=" << std::left << std::setw(8) << k.str() << std::right
              << " conjugates " << o.conjugates << "  |X/K±| " << o.cosets
              << "  H(K) " << o.type.tag() << "  |T_K| " << o.t_size
              << "  |[T_K]| " << o.t_orbits << '\n';
        }
      }
      for (auto const& n : r.notes) {
        out << "note: " << n << '\n';
      }
    }

    // Random A∘e must pass the membership test.
    bool spot_check(FiniteGroup const& g, std::uint64_t seed, std::string& note) {
      auto            e = build_projection_idempotent(g);
      std::mt19937_64 rng(seed);
      int const       samples = 4;
      if (!min_ideal_membership(g, e)) {
        note = "spot-check: projection idempotent fails the membership test";
        return false;
      }
      for (int i = 0; i < samples; ++i) {
        auto a = random_mls(g.order(), rng);
        if (!min_ideal_membership(g, circ(g, a, e))) {
          note = "spot-check: A∘e outside K(λ(X)) for A = " + a.hex();
          return false;
        }
      }
      note = "spot-check: e and " + std::to_string(samples)
             + " random A∘e pass the membership test (seed "
             + std::to_string(seed) + ")";
      return true;
    }

  }  // namespace

  int cmd_analyze(std::string const&  spec,
                  AnalyzeFlags const& flags,
                  std::ostream&       out,
                  std::ostream&       err) {
    std::optional<FiniteGroup> g;
    try {
      g = parse_spec(spec);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    if (g->order() > kMaxPipelineOrder) {
      err << "error: analysis needs |X| <= " << kMaxPipelineOrder << ", got "
          << g->order() << '\n';
      return kExitInput;
    }

    int  code   = kExitOk;
    auto report = analyze_structural(*g);
    if (flags.brute) {
      try {
        auto c = cross_check(*g, flags.budget);
        report = c.combined;
        if (!c.agree) {
          code = kExitDisagree;
        }
      } catch (BruteBudgetExceeded const& e) {
        report.notes.push_back(std::string("brute path skipped: ") + e.what());
        code = kExitBudget;
      }
    }
    for (auto const& v : report_violations(report)) {
      report.notes.push_back("invariant violation: " + v);
      code = kExitDisagree;
    }
    if (g->is_abelian() && hom_formula_q(*g) != report.q) {
      report.notes.push_back("invariant violation: orbit census q differs from "
                             "the hom-count formula");
      code = kExitDisagree;
    }
    if (g->order() <= 8) {
      std::string note;
      if (!spot_check(*g, flags.seed, note)) {
        code = kExitDisagree;
      }
      report.notes.push_back(note);
    }

    if (flags.json) {
      out << report_to_json(report) << '\n';
    } else {
      print_report(out, report, g->order());
    }
    return code;
  }

  ////////////////////////////////////////////////////////////////////////
  // table
  ////////////////////////////////////////////////////////////////////////

  int cmd_table(bool json, std::ostream& out, std::ostream& err) {
    std::vector<StructureReport> reports;
    try {
      for (auto const& row : reference_table()) {
        reports.push_back(table_row_report(row, parse_spec(row.spec)));
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitDisagree;
    }
    if (json) {
      auto arr = nlohmann::json::array();
      for (auto const& r : reports) {
        arr.push_back(nlohmann::json::parse(report_to_json(r)));
      }
      out << arr.dump(2) << '\n';
      return kExitOk;
    }
    out << std::left << std::setw(8) << "X" << std::setw(9) << "|E(L)|"
        << std::setw(20) << "H_e" << std::setw(24) << "L" << "provenance\n";
    for (auto const& r : reports) {
      out << std::setw(8) << r.group << std::setw(9) << r.idempotents
          << std::setw(20) << r.max_subgroup << std::setw(24) << r.min_left_ideal
          << r.provenance << '\n';
      for (auto const& n : r.notes) {
        out << "        " << n << '\n';
      }
    }
    out << std::right;
    return kExitOk;
  }

  ////////////////////////////////////////////////////////////////////////
  // mls-count
  ////////////////////////////////////////////////////////////////////////

  int cmd_mls_count(std::string const&   spec,
                    MlsCountFlags const& flags,
                    std::ostream&        out,
                    std::ostream&        err) {
    std::optional<FiniteGroup> g;
    try {
      g = parse_spec(spec);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    if (g->order() > 7) {
      err << "error: mls-count needs |X| <= 7\n";
      return kExitInput;
    }
    std::vector<MlsSignature> kept;
    MlsEnumOptions            opts;
    opts.budget = flags.budget;
    auto sink   = [&](MlsSignature const& s) {
      if (flags.out_file) {
        kept.push_back(s);
      }
    };
    int           code = kExitOk;
    std::uint64_t count = 0;
    try {
      count = enumerate_mls(g->order(), sink, opts);
      out << count << '\n';
    } catch (MlsBudgetExceeded const& e) {
      count = e.count();
      out << count << " partial\n";
      code = kExitBudget;
    }
    if (flags.out_file) {
      std::ofstream f(*flags.out_file);
      if (!f) {
        err << "error: cannot write " << *flags.out_file << '\n';
        return kExitInput;
      }
      write_mls_stream(f, g->order(), kept);
    }
    return code;
  }

}  // namespace lambdax
