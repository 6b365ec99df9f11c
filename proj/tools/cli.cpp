#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "kdual/bar.hpp"
#include "kdual/corpus.hpp"
#include "kdual/duality.hpp"
#include "kdual/errors.hpp"
#include "kdual/hochschild.hpp"
#include "kdual/io.hpp"

namespace kdual::cli {

namespace {

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> corpus;
  std::string window;
  std::string field;
  std::string format = "text";
  std::string out;
  std::string expect;
  std::string kind;
  int sphere = 0;
};

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  std::string text;
  int code = kOk;
};

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + what + " '" + s + "'");
  return v;
}

DegreeRange parse_window(const Options& o) {
  if (o.window.empty()) throw ParseError("--window LO:HI is required for this computation");
  auto colon = o.window.find(':', 1);
  if (colon == std::string::npos) throw ParseError("--window expects LO:HI, got '" + o.window + "'");
  DegreeRange r{parse_int(o.window.substr(0, colon), "window bound"),
                parse_int(o.window.substr(colon + 1), "window bound")};
  if (r.lo > r.hi) throw ParseError("--window " + o.window + " is empty");
  return r;
}

std::optional<FieldSpec> requested_field(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  try {
    return FieldSpec::parse(o.field);
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
}

std::vector<DGAlgebra> load_algebras(const Options& o) {
  const auto field = requested_field(o);
  std::vector<DGAlgebra> out;
  for (const auto& path : o.files) {
    DGAlgebra a = parse_dga_file(path);
    if (field && !(a.field() == *field))
      throw ParseError(path + " is over " + a.field().name() + " but --field " + field->name() + " was given");
    auto report = validate_dga(a);
    if (!report.ok()) throw ValidationFailure(path + " is not a valid DGA:\n" + report.summary());
    if (a.name().empty()) a = a.renamed(path);
    out.push_back(std::move(a));
  }
  for (const auto& name : o.corpus) out.push_back(corpus_algebra(name, field.value_or(FieldSpec())));
  return out;
}

DGAlgebra one_algebra(const Options& o) {
  auto all = load_algebras(o);
  if (all.size() != 1) throw ParseError("expected exactly one algebra (a DGA file or --corpus NAME)");
  return all.front();
}

Outcome check_expectation(const Options& o, const BettiTable& table) {
  if (o.expect.empty()) return {};
  std::ifstream in(o.expect, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + o.expect + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  BettiTable expected = parse_table_csv(text);
  for (int n = table.window().lo; n <= table.window().hi; ++n) {
    auto it = expected.entries().find(n);
    if (it == expected.entries().end())
      throw ParseError(o.expect + " has no row for degree " + std::to_string(n));
    std::size_t want = it->second;
    if (table.at(n) != want)
      return {"mismatch against " + o.expect + " in degree " + std::to_string(n) + ": computed " +
                  std::to_string(table.at(n)) + ", expected " + std::to_string(want),
              kVerdictFail};
  }
  return {};
}

struct Emitted {
  std::string report;
  int code = kOk;
  std::string diagnostic;
};

Emitted table_result(const Options& o, const std::string& kind, const DGAlgebra& a, BettiTable table,
                     std::string provenance) {
  TableReport r{kind, a.name(), a.field().name(), std::move(table), std::move(provenance)};
  Outcome check = check_expectation(o, r.table);
  return {emit_table(r, parse_report_format(o.format)), check.code, check.text};
}

Emitted duality_result(const Options& o, const DualityReport& r) {
  Emitted e{emit_report(r, parse_report_format(o.format)), kOk, {}};
  if (r.hypothesis_violated) {
    e.code = kHypothesisViolation;
    e.diagnostic = r.notes.empty() ? "hypothesis violated" : r.notes.front();
  } else if (!r.pass) {
    e.code = kVerdictFail;
    e.diagnostic = r.kind + " check failed" +
                   (r.first_mismatch ? " in degree " + std::to_string(*r.first_mismatch) : std::string());
  }
  return e;
}

Emitted run_validate(const Options& o) {
  const auto field = requested_field(o);
  const ReportFormat format = parse_report_format(o.format);
  std::vector<std::pair<std::string, ValidationReport>> results;
  for (const auto& path : o.files) {
    DGAlgebra a = parse_dga_file(path);
    if (field && !(a.field() == *field))
      throw ParseError(path + " is over " + a.field().name() + " but --field " + field->name() + " was given");
    results.emplace_back(path, validate_dga(a));
  }
  for (const auto& name : o.corpus)
    results.emplace_back(name, validate_dga(corpus_algebra(name, field.value_or(FieldSpec()))));
  if (results.empty()) throw ParseError("validate needs a DGA file or --corpus NAME");

  bool ok = true;
  std::ostringstream text;
  if (format == ReportFormat::csv) text << "algebra,law,degree,witness";
  for (const auto& [name, report] : results) {
    ok = ok && report.ok();
    if (format == ReportFormat::csv) {
      for (const auto& v : report.violations) text << "\n" << name << "," << v.law << "," << v.degree << "," << v.witness;
    } else if (format == ReportFormat::text) {
      if (report.ok()) text << name << ": ok\n";
      else text << name << ": " << report.violations.size() << " violation(s)\n" << report.summary() << "\n";
    }
  }
  if (format == ReportFormat::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& [name, report] : results) {
      nlohmann::json violations = nlohmann::json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"law", v.law}, {"degree", v.degree}, {"witness", v.witness}, {"message", v.message}});
      doc.push_back({{"algebra", name}, {"ok", report.ok()}, {"violations", violations}});
    }
    text << doc.dump(2);
  }
  return {text.str(), ok ? kOk : kValidationFailure, ok ? "" : "validation failed"};
}

Emitted run_corpus(const Options& o) {
  const auto field = requested_field(o).value_or(FieldSpec());
  if (o.corpus.empty()) {
    std::ostringstream text;
    for (const auto& name : corpus_names()) text << name << "  " << corpus_get(name, field).description << "\n";
    return {text.str(), kOk, {}};
  }
  if (o.corpus.size() != 1) throw ParseError("corpus shows one entry at a time");
  const std::string& name = o.corpus.front();
  CorpusEntry entry = corpus_get(name, field);
  if (o.kind.empty()) {
    std::ostringstream text;
    text << entry.name << ": " << entry.description << "\n";
    text << "default window [" << entry.default_window.lo << "," << entry.default_window.hi << "], word length <= "
         << entry.default_window.word_bound << "\n";
    for (const auto& [kind, table] : entry.expected)
      text << kind << " on [" << table.table.window().lo << "," << table.table.window().hi << "]: " << table.provenance
           << "\n";
    return {text.str(), kOk, {}};
  }
  ExpectedTable t = corpus_expected(name, o.kind, field);
  TableReport r{o.kind, name, field.name(), t.table, t.provenance};
  return {emit_table(r, parse_report_format(o.format)), kOk, {}};
}

Emitted dispatch(const std::string& command, const Options& o) {
  if (command == "validate") return run_validate(o);
  if (command == "corpus") return run_corpus(o);
  if (command == "free-loop") {
    const DegreeRange w = parse_window(o);
    return duality_result(o, free_loop_profile(o.sphere, TruncationWindow{w.lo, w.hi, 0, true}));
  }
  if (command == "shuffle-check") {
    auto all = load_algebras(o);
    if (all.size() != 2) throw ParseError("shuffle-check needs exactly two algebras");
    const DegreeRange w = parse_window(o);
    return duality_result(o, shuffle_monoidality_check(all[0], all[1], TruncationWindow{w.lo, w.hi, 0, true}));
  }

  const DGAlgebra a = one_algebra(o);
  const DegreeRange w = parse_window(o);
  if (command == "homology")
    return table_result(o, "homology", a, algebra_homology(a, TruncationWindow::exact(w.lo, w.hi)),
                        "homology of the underlying complex");
  if (command == "bar") {
    const TruncationWindow cw = certify_window(a, w.lo, w.hi);
    auto bar = bar_construction(a, cw);
    return table_result(o, "bar", a, homology_dimensions(bar.complex(), cw),
                        "normalized bar construction, words of length <= " + std::to_string(cw.word_bound));
  }
  if (command == "koszul-dual") {
    const DGAlgebra da = koszul_dual_covering(a, {0, 0});
    const TruncationWindow cw = certify_window(da, w.lo, w.hi);
    return table_result(o, kKindKoszulDual, a, algebra_homology(da, cw),
                        "homology of the linear dual of the certified truncated bar construction");
  }
  if (command == "hh") {
    const TruncationWindow cw = certify_window(a, w.lo, w.hi);
    return table_result(o, kKindHH, a, hh_dimensions(a, cw),
                        "normalized Hochschild complex, words of length <= " + std::to_string(cw.word_bound));
  }
  if (command == "duality-check") return duality_result(o, verify_thh_duality(a, TruncationWindow{w.lo, w.hi, 0, true}));
  if (command == "double-centralizer") return duality_result(o, double_centralizer_report(a, certify_window(a, w.lo, w.hi)));
  throw ParseError("unknown command '" + command + "'");
}

// "--window -10:10" would read the bound as an option; glue it to the flag.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--window" && i + 1 < args.size()) {
      out.push_back("--window=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homological algebra for Koszul duality and Hochschild homology of DGAs", "kdual"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "check the DGA laws"},
      {"homology", "homology of the algebra's underlying complex"},
      {"bar", "homology of the bar construction B(k, A, k)"},
      {"koszul-dual", "homology of the Koszul dual; the window is in degrees of the dual"},
      {"hh", "Hochschild homology"},
      {"duality-check", "compare D(HH(A)) with HH of the opposite Koszul dual"},
      {"double-centralizer", "compare H(A) with H(D(D(A)))"},
      {"shuffle-check", "shuffle map and Kunneth check for two algebras"},
      {"corpus", "list built-in algebras or print a shipped expected table"},
      {"free-loop", "Hochschild homology of the loop-space model against the free loop space of S^n"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("files", o.files, "DGA documents (JSON)");
    sub->add_option("--corpus", o.corpus, "built-in algebra by name (repeatable)");
    sub->add_option("--window", o.window, "degree window LO:HI");
    sub->add_option("--field", o.field, "Q or Fp:P (for --corpus; checked against files)");
    sub->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", o.out, "write the report to this file instead of standard output");
    if (std::string(c.name) == "corpus") sub->add_option("--kind", o.kind, "expected table kind");
    if (std::string(c.name) == "free-loop") sub->add_option("--sphere,-n", o.sphere, "sphere dimension n >= 2")->required();
    if (std::string(c.name) != "validate" && std::string(c.name) != "corpus")
      sub->add_option("--expect", o.expect, "CSV table the result must equal (exit 4 otherwise)");
  }

  std::vector<std::string> args = normalize(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kdual: " << e.what() << "\n";
    return kParseError;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    Emitted result = dispatch(command, o);
    if (o.out.empty()) {
      out << result.report;
      if (!result.report.empty() && result.report.back() != '\n') out << "\n";
    } else {
      std::ofstream file(o.out, std::ios::binary);
      if (!file) throw ParseError("cannot write '" + o.out + "'");
      file << result.report;
    }
    if (!result.diagnostic.empty()) err << "kdual: " << result.diagnostic << "\n";
    return result.code;
  } catch (const ValidationFailure& e) {
    err << "kdual: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const WindowError& e) {
    err << "kdual: " << e.what() << "\n";
    return kWindowNotCertifiable;
  } catch (const BoundednessError& e) {
    err << "kdual: " << e.what() << "\n";
    return kWindowNotCertifiable;
  } catch (const ParseError& e) {
    err << "kdual: " << e.what() << "\n";
    return kParseError;
  } catch (const LookupError& e) {
    err << "kdual: " << e.what() << "\n";
    return kParseError;
  } catch (const FieldError& e) {
    err << "kdual: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "kdual: internal error: " << e.what() << "\n";
    return kValidationFailure;
  }
}

}  // namespace kdual::cli
