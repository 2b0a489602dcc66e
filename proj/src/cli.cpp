#include "pedalwords/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "pedalwords/bijection.hpp"
#include "pedalwords/counting.hpp"
#include "pedalwords/records.hpp"
#include "pedalwords/svg.hpp"

namespace pedalwords::cli {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CountArgs {
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t chi_n = 0;
  std::uint64_t phi_n = 0;
  bool has_psi = false;
  bool has_chi = false;
  bool has_phi = false;
};

struct EnumerateArgs {
  int n = 0;
  std::int64_t limit = -1;
  std::string format = "records";
  bool force = false;
};

struct MapArgs {
  std::string triple;
  int n = 0;
  bool has_n = false;
  std::string word;
  std::string itinerary;
};

struct VerifyArgs {
  int max_n = 0;
  std::string expected_path;
  bool deep = false;
};

struct RenderArgs {
  std::string triple;
  int iterations = 0;
  std::string out_path = "-";
};

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = int(a.has_psi) + int(a.has_chi) + int(a.has_phi);
  if (modes != 1) {
    err << "count: give exactly one of --k/--m/--n, --chi N, or --phi N\n";
    return kExitUsage;
  }
  if (a.has_psi) {
    out << counting::psi(a.k, a.m, a.n) << "\n";
  } else if (a.has_chi) {
    out << counting::chi_mobius(a.chi_n) << "\n";
  } else {
    out << counting::phi(a.phi_n) << "\n";
  }
  return kExitSuccess;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n > bijection::kDefaultEnumerationBound && !a.force) {
    err << "enumerate: n=" << a.n << " exceeds the practical bound "
        << bijection::kDefaultEnumerationBound << " (4^n candidates); pass --force to proceed\n";
    return kExitUsage;
  }
  std::int64_t emitted = 0;
  std::int64_t total = 0;
  bijection::for_each_periodic_triangle(a.n, [&](const bijection::PeriodicTriangle& t) {
    ++total;
    if (a.limit >= 0 && emitted >= a.limit) return;
    ++emitted;
    if (a.format == "records") {
      out << records::record_line(t) << "\n";
    } else if (a.format == "words") {
      out << records::word_field(bijection::eta(t.itinerary)) << "\n";
    } else {
      out << pedal::format_triple(t.triple) << "\n";
    }
  });
  err << "total " << total << "\n";
  return kExitSuccess;
}

std::string full_record(const bijection::PeriodicTriangle& t) { return records::record_line(t); }

int cmd_map(const MapArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = int(!a.triple.empty()) + int(!a.word.empty()) + int(!a.itinerary.empty());
  if (modes != 1) {
    err << "map: give exactly one of --triple (with --n), --word, or --itinerary\n";
    return kExitUsage;
  }
  if (!a.triple.empty()) {
    if (!a.has_n) {
      err << "map: --triple requires --n\n";
      return kExitUsage;
    }
    const pedal::SortedTriple p = pedal::parse_sorted_triple(a.triple);
    const pedal::PeriodResult period = pedal::exact_pedal_period(p, a.n);
    if (period.kind == pedal::PeriodResult::Kind::Degenerate) {
      throw DegenerateError("pedal iterate " + std::to_string(period.steps) + " is right-angled");
    }
    if (!(period == pedal::PeriodResult::period(a.n))) {
      std::string detail = period.kind == pedal::PeriodResult::Kind::Period
                               ? "exact pedal period is " + std::to_string(period.steps)
                               : "no return to the triple within " + std::to_string(a.n) + " steps";
      throw NotPeriodicError("triple does not have exact pedal period " + std::to_string(a.n) +
                             ": " + detail);
    }
    const bijection::ColumnWord w = bijection::itinerary(p, a.n);
    out << full_record(bijection::PeriodicTriangle{p, a.n, w}) << "\n";
    return kExitSuccess;
  }
  if (!a.word.empty()) {
    const words::Word2D w = records::parse_word_field(a.word, 2);
    out << full_record(bijection::word_to_triangle(w)) << "\n";
    return kExitSuccess;
  }
  const bijection::ColumnWord w = bijection::ColumnWord::parse(a.itinerary);
  if (!bijection::is_column_word_admissible(w)) {
    throw NotInDomainError("itinerary is not admissible (imprimitive or within {1,2}^n)");
  }
  out << full_record(bijection::word_to_triangle(bijection::eta(w))) << "\n";
  return kExitSuccess;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  bool all_pass = true;
  const auto report = [&](const std::string& row, bool pass, const std::string& detail = "") {
    out << (pass ? "PASS  " : "FAIL  ") << row;
    if (!pass && !detail.empty()) out << "  [" << detail << "]";
    out << "\n";
    all_pass = all_pass && pass;
  };

  for (int n = 1; n <= a.max_n; ++n) {
    const counting::Count via_mobius = counting::chi_mobius(static_cast<std::uint64_t>(n));
    const counting::Count via_ie = counting::chi_inclusion_exclusion(static_cast<std::uint64_t>(n));
    const counting::Count via_psi = counting::psi(2, 2, static_cast<std::uint64_t>(n));
    const bool pass = via_mobius == via_ie && via_mobius == via_psi;
    std::ostringstream row;
    row << "identity n=" << n << " chi=" << via_mobius;
    std::ostringstream detail;
    if (!pass) {
      detail << "mobius=" << via_mobius << " inclusion-exclusion=" << via_ie
             << " psi2(2,n)=" << via_psi;
    }
    report(row.str(), pass, detail.str());
  }

  if (!a.expected_path.empty()) {
    const std::vector<records::FixtureEntry> entries = records::load_fixture(a.expected_path);
    std::size_t passed = 0;
    std::vector<std::string> failures;
    for (const records::FixtureEntry& e : entries) {
      Integer observed;
      std::string label = records::fixture_kind_name(e.kind);
      switch (e.kind) {
        case records::FixtureEntry::Kind::Psi2Row2:
          observed = counting::psi(2, 2, e.indices[0]);
          label += " n=" + std::to_string(e.indices[0]);
          break;
        case records::FixtureEntry::Kind::Chi:
          observed = counting::chi_mobius(e.indices[0]);
          label += " n=" + std::to_string(e.indices[0]);
          break;
        case records::FixtureEntry::Kind::PsiTable:
          observed = counting::psi(2, e.indices[0], e.indices[1]);
          label += " m=" + std::to_string(e.indices[0]) + " n=" + std::to_string(e.indices[1]);
          break;
      }
      if (observed == e.expected) {
        ++passed;
      } else {
        std::ostringstream f;
        f << label << " expected " << e.expected << " observed " << observed;
        failures.push_back(f.str());
      }
    }
    std::ostringstream row;
    row << "fixture " << passed << "/" << entries.size() << " rows";
    report(row.str(), passed == entries.size());
    for (const std::string& f : failures) {
      out << "      " << f << "\n";
    }
  }

  if (a.deep) {
    const int deep_max = std::min(a.max_n, 8);
    for (int n = 1; n <= deep_max; ++n) {
      std::set<pedal::SortedTriple> distinct;
      std::int64_t count = 0;
      bool invariants = true;
      bijection::for_each_periodic_triangle(n, [&](const bijection::PeriodicTriangle& t) {
        ++count;
        // word_to_triangle already validates period and itinerary; re-check
        // the fixed-point identity and primitivity here, plus distinctness.
        const pedal::AffineMap3 map = bijection::branch_composition(t.itinerary);
        invariants = invariants && map.apply(t.triple.vec()) == t.triple.vec();
        invariants = invariants && words::is_primitive_2d(bijection::eta(t.itinerary));
        invariants = invariants && distinct.insert(t.triple).second;
      });
      const counting::Count expected = counting::chi_mobius(static_cast<std::uint64_t>(n));
      const bool pass = invariants && counting::Count(count) == expected;
      std::ostringstream row;
      row << "deep n=" << n << " enumerated=" << count;
      std::ostringstream detail;
      if (!pass) {
        detail << "expected " << expected << (invariants ? "" : "; invariant violation");
      }
      report(row.str(), pass, detail.str());
    }
  }

  out << "RESULT " << (all_pass ? "PASS" : "FAIL") << "\n";
  if (!all_pass) {
    err << "verification failed\n";
    return kExitDomain;
  }
  return kExitSuccess;
}

int cmd_render(const RenderArgs& a, std::ostream& out, std::ostream& err) {
  svg::RenderSpec spec{pedal::parse_sorted_triple(a.triple), a.iterations};
  const std::string document = svg::render_svg(spec);
  if (a.out_path == "-") {
    out << document;
    return kExitSuccess;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    err << "render: cannot open '" << a.out_path << "' for writing\n";
    return kExitUsage;
  }
  file << document;
  return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bijection between primitive two-row binary words and triangles of"
               " exact pedal period n"};
  app.name("pedalwords");
  app.require_subcommand(1);

  CountArgs count_args;
  CLI::App* count = app.add_subcommand(
      "count", "Evaluate the counting formulas (psi, chi, phi) exactly");
  CLI::Option* opt_k = count->add_option("--k", count_args.k, "Alphabet size for psi(k,m,n)")
                           ->check(CLI::PositiveNumber);
  CLI::Option* opt_m = count->add_option("--m", count_args.m, "Row count for psi(k,m,n)")
                           ->check(CLI::PositiveNumber);
  CLI::Option* opt_n = count->add_option("--n", count_args.n, "Column count for psi(k,m,n)")
                           ->check(CLI::PositiveNumber);
  CLI::Option* opt_chi = count->add_option("--chi", count_args.chi_n,
                                           "Triangles of exact pedal period N")
                             ->check(CLI::PositiveNumber);
  CLI::Option* opt_phi = count->add_option("--phi", count_args.phi_n,
                                           "Triangles similar to their N-th pedal triangle")
                             ->check(CLI::PositiveNumber);

  EnumerateArgs enum_args;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Stream every triangle of exact pedal period n with its coding");
  enumerate->add_option("--n", enum_args.n, "Exact pedal period")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--limit", enum_args.limit, "Print at most this many records");
  enumerate->add_option("--format", enum_args.format, "Output fields per record")
      ->check(CLI::IsMember({"records", "words", "triples"}));
  enumerate->add_flag("--force", enum_args.force, "Allow n above the practical bound");

  MapArgs map_args;
  CLI::App* map = app.add_subcommand(
      "map", "Map one object across the bijection (triple, word, or itinerary)");
  map->add_option("--triple", map_args.triple, "Angle triple a,b,c (reduced fractions)");
  CLI::Option* map_n = map->add_option("--n", map_args.n, "Expected exact pedal period")
                           ->check(CLI::PositiveNumber);
  map->add_option("--word", map_args.word, "Two-row binary word row1/row2");
  map->add_option("--itinerary", map_args.itinerary, "Branch itinerary over {0,1,2,3}");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the counting identities, fixtures, and (with --deep) the bijection");
  verify->add_option("--max-n", verify_args.max_n, "Check identities for n = 1..N")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--expected", verify_args.expected_path,
                     "Tab-separated expected-values fixture file");
  verify->add_flag("--deep", verify_args.deep,
                   "Also enumerate and validate all triangles for n <= min(N, 8)");

  RenderArgs render_args;
  CLI::App* render = app.add_subcommand(
      "render", "Draw iterated pedal triangles as a standalone SVG document");
  render->add_option("--triple", render_args.triple, "Angle triple a,b,c")->required();
  render->add_option("--iterations", render_args.iterations, "Number of pedal iterations (0..16)")
      ->required()
      ->check(CLI::Range(0, svg::kMaxIterations));
  render->add_option("--out", render_args.out_path, "Output path ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  count_args.has_psi = opt_k->count() > 0 || opt_m->count() > 0 || opt_n->count() > 0;
  count_args.has_chi = opt_chi->count() > 0;
  count_args.has_phi = opt_phi->count() > 0;
  if (count_args.has_psi && (opt_k->count() == 0 || opt_m->count() == 0 || opt_n->count() == 0)) {
    err << "count: --k, --m, and --n must be given together\n";
    return kExitUsage;
  }
  map_args.has_n = map_n->count() > 0;

  try {
    if (count->parsed()) return cmd_count(count_args, out, err);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, out, err);
    if (map->parsed()) return cmd_map(map_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (render->parsed()) return cmd_render(render_args, out, err);
  } catch (const FormatError& e) {
    err << "error: Format: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotPeriodicError& e) {
    err << "error: NotPeriodic: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotInDomainError& e) {
    err << "error: NotPrimitive: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DegenerateError& e) {
    err << "error: Degenerate: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pedalwords::cli
