#pragma once

#include <string>

#include "kdual/chain_complex.hpp"
#include "kdual/dga.hpp"
#include "kdual/report.hpp"

namespace kdual {

/// DGA documents are JSON:
///   {
///     "field": "Q" | "Fp:P",
///     "connectivity": "simply_coconnective" | "connective",
///     "name": "...",                                  (optional)
///     "basis": [{"name": "1", "degree": 0}, ...],
///     "unit": "1",
///     "products": [{"left": "x", "right": "y",
///                   "result": [{"basis": "z", "coeff": "1/2"}]}, ...],
///     "differential": [{"on": "x", "result": [...]}, ...]
///   }
/// Coefficients are integers or decimal strings "n" / "p/q". Unlisted
/// products and differentials are zero; products with the unit default to
/// the identity. Errors raise ParseError prefixed "line L, column C:".
DGAlgebra parse_dga(const std::string& text);
/// Reads and parses a file; an unreadable file is a ParseError.
DGAlgebra parse_dga_file(const std::string& path);
/// The document for a complete algebra (truncated ones raise Error).
std::string write_dga(const DGAlgebra& a);

enum class ReportFormat { text, csv, json };
ReportFormat parse_report_format(const std::string& text);

/// A single Betti table with what it measures and how it was computed.
struct TableReport {
  std::string kind;
  std::string subject;
  std::string field;
  BettiTable table;
  std::string provenance;

  bool operator==(const TableReport&) const = default;
};

/// csv: "degree,dimension" then one row per degree, ascending, LF-separated,
/// no trailing newline. json: sorted keys. text: a human-readable table.
std::string emit_table(const TableReport& r, ReportFormat format);
/// csv columns are degree,left,right.
std::string emit_report(const DualityReport& r, ReportFormat format);

/// Inverses of the json emitters.
TableReport parse_table_report(const std::string& json_text);
DualityReport parse_duality_report(const std::string& json_text);

}  // namespace kdual
