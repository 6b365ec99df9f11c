#include "kdual/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "corpus_data.hpp"
#include "kdual/bar.hpp"
#include "kdual/errors.hpp"

namespace kdual {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw LookupError("unknown corpus entry '" + context + "'");
  return value;
}

DGAlgebra exterior(const FieldSpec& f, int n, const std::string& name) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  b.add_basis("x", -n);
  b.set_name(name);
  return std::move(b).build();
}

std::string power_label(const std::string& x, int k) {
  return k == 1 ? x : x + "^" + std::to_string(k);
}

// k[x]/x^top, |x| = -n.
DGAlgebra truncated_polynomial(const FieldSpec& f, int n, int top, const std::string& name) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  std::vector<std::size_t> power(static_cast<std::size_t>(top));
  for (int k = 1; k < top; ++k) power[static_cast<std::size_t>(k)] = b.add_basis(power_label("x", k), -n * k);
  for (int i = 1; i < top; ++i)
    for (int j = 1; i + j < top; ++j)
      b.add_product(power[static_cast<std::size_t>(i)], power[static_cast<std::size_t>(j)],
                    power[static_cast<std::size_t>(i + j)], mpq_class(1));
  b.set_name(name);
  return std::move(b).build();
}

DGAlgebra square_zero(const FieldSpec& f, int g, int d, const std::string& name) {
  DGAlgebraBuilder b(f, Connectivity::simply_coconnective);
  b.set_unit(b.add_basis("1", 0));
  for (int i = 1; i <= g; ++i) b.add_basis("e" + std::to_string(i), d);
  b.set_name(name);
  return std::move(b).build();
}

// k<y>, |y| = e > 0, exact on degrees up to range.hi.
DGAlgebra free_polynomial(const FieldSpec& f, int e, const DegreeRange& range, const std::string& name) {
  const int top = std::max(range.hi, e);
  DGAlgebraBuilder b(f, Connectivity::connective);
  std::vector<std::size_t> power{b.add_basis("1", 0)};
  b.set_unit(power[0]);
  for (int k = 1; k * e <= top; ++k) power.push_back(b.add_basis(power_label("y", k), k * e));
  const int count = static_cast<int>(power.size());
  std::size_t dropped = 0;
  for (int i = 1; i < count; ++i)
    for (int j = 1; j < count; ++j) {
      if (i + j < count)
        b.add_product(power[static_cast<std::size_t>(i)], power[static_cast<std::size_t>(j)],
                      power[static_cast<std::size_t>(i + j)], mpq_class(1));
      else
        ++dropped;
    }
  b.set_exact_range({0, top});
  b.set_dropped_products(dropped);
  b.set_recipe([f, e, name](const DegreeRange& r) { return free_polynomial(f, e, r, name); });
  b.set_name(name);
  return std::move(b).build();
}

struct ManifestRecord {
  std::string name;
  std::string kind;
  std::string field;
  TruncationWindow window;
  std::string file;
  std::string provenance;
};

const std::vector<ManifestRecord>& manifest() {
  static std::vector<ManifestRecord> records;
  static std::once_flag once;
  std::call_once(once, [] {
    const std::string* text = nullptr;
    for (const auto& file : detail::embedded_expected_files())
      if (file.name == "manifest.json") text = &file.content;
    if (!text) throw Error("expected-table manifest is missing from the build");
    for (const auto& item : nlohmann::json::parse(*text)) {
      ManifestRecord r;
      r.name = item.at("name").get<std::string>();
      r.kind = item.at("kind").get<std::string>();
      r.field = item.at("field").get<std::string>();
      r.window = TruncationWindow::exact(item.at("window").at(0).get<int>(), item.at("window").at(1).get<int>());
      r.file = item.at("file").get<std::string>();
      r.provenance = item.at("provenance").get<std::string>();
      records.push_back(std::move(r));
    }
  });
  return records;
}

const std::string& embedded(const std::string& file) {
  for (const auto& f : detail::embedded_expected_files())
    if (f.name == file) return f.content;
  throw LookupError("expected table file '" + file + "' is missing from the build");
}

ExpectedTable load(const ManifestRecord& r) {
  return {parse_table_csv(embedded(r.file), r.window), r.provenance};
}

std::string describe(const std::string& name) {
  const auto parts = split(name, ':');
  if (name == "unit") return "the ground field";
  if (parts[0] == "sphere-odd") return "exterior algebra on x of degree -" + parts[1] + ", cochains of S^" + parts[1];
  if (parts[0] == "sphere-even")
    return "k[x]/x^2 with |x| = -" + parts[1] + ", cochains of S^" + parts[1];
  if (name == "proj-plane-like") return "k[x]/x^3 with |x| = -2";
  if (parts[0] == "poly")
    return "free algebra on y of degree " + std::to_string(parse_int(parts[1], name) - 1) +
           ", chains on the loop space of S^" + parts[1];
  return "square-zero algebra on " + parts[1] + " generators of degree " + parts[2];
}

}  // namespace

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& r : manifest())
    if (r.kind != kKindFreeLoop && std::find(out.begin(), out.end(), r.name) == out.end())
      out.push_back(r.name);
  return out;
}

DGAlgebra corpus_algebra(const std::string& name, const FieldSpec& field) {
  const auto parts = split(name, ':');
  auto unknown = [&name] { return LookupError("unknown corpus entry '" + name + "'"); };
  if (name == "unit") return unit_algebra(field);
  if (name == "proj-plane-like") return truncated_polynomial(field, 2, 3, name);
  if (parts.size() == 2 && parts[0] == "sphere-odd") {
    int n = parse_int(parts[1], name);
    if (n < 3 || n % 2 == 0) throw unknown();
    return exterior(field, n, name);
  }
  if (parts.size() == 2 && parts[0] == "sphere-even") {
    int n = parse_int(parts[1], name);
    if (n < 2 || n % 2 != 0) throw unknown();
    return truncated_polynomial(field, n, 2, name);
  }
  if (parts.size() == 2 && parts[0] == "poly") {
    int n = parse_int(parts[1], name);
    if (n < 2) throw unknown();
    return free_polynomial(field, n - 1, {0, 12}, name);
  }
  if (parts.size() == 3 && parts[0] == "sq0") {
    int g = parse_int(parts[1], name);
    int d = parse_int(parts[2], name);
    if (g < 1 || d > -2) throw unknown();
    return square_zero(field, g, d, name);
  }
  throw unknown();
}

CorpusEntry corpus_get(const std::string& name, const FieldSpec& field) {
  CorpusEntry entry;
  entry.algebra = corpus_algebra(name, field);
  entry.name = name;
  entry.description = describe(name);
  const bool connective = entry.algebra.connectivity() == Connectivity::connective;
  DegreeRange window = connective ? DegreeRange{0, 12} : DegreeRange{-12, 0};
  for (const auto& r : manifest()) {
    if (r.name != name) continue;
    if (r.kind == kKindHH) window = r.window.range();
    if (r.field == field.name()) entry.expected.emplace(r.kind, load(r));
  }
  entry.default_window = certify_window(entry.algebra, window.lo, window.hi);
  return entry;
}

ExpectedTable corpus_expected(const std::string& name, const std::string& kind, const FieldSpec& field) {
  for (const auto& r : manifest())
    if (r.name == name && r.kind == kind && r.field == field.name()) return load(r);
  throw LookupError("no expected '" + kind + "' table for '" + name + "' over " + field.name());
}

BettiTable free_loop_closed_form(int n, const TruncationWindow& w) {
  if (n < 2) throw LookupError("free loop profile needs n >= 2");
  std::map<int, std::size_t> entries;
  for (int m = w.lo; m <= w.hi; ++m) {
    std::size_t dim = 0;
    if (m >= 0) {
      if (n % 2 == 1) {
        dim = (m % (n - 1) == 0 ? 1 : 0) + (m >= n && (m - n) % (n - 1) == 0 ? 1 : 0);
      } else {
        // 1 in degree 0 and in degrees (2k+1)(n-1) and (2k+1)(n-1) + 1.
        const int r = m % (2 * (n - 1));
        dim = (m == 0 || r == n - 1 || (r == n % (2 * (n - 1)) && m >= n)) ? 1 : 0;
      }
    }
    entries[m] = dim;
  }
  return BettiTable(w, std::move(entries));
}

namespace {

std::map<int, std::size_t> parse_csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "degree,dimension")
    throw ParseError("line 1: expected header 'degree,dimension'");
  std::map<int, std::size_t> entries;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto cells = split(line, ',');
    int degree = 0;
    long dim = -1;
    auto bad = [&] { return ParseError("line " + std::to_string(lineno) + ": bad row '" + line + "'"); };
    if (cells.size() != 2) throw bad();
    auto r1 = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), degree);
    auto r2 = std::from_chars(cells[1].data(), cells[1].data() + cells[1].size(), dim);
    if (r1.ec != std::errc() || r1.ptr != cells[0].data() + cells[0].size() || r2.ec != std::errc() ||
        r2.ptr != cells[1].data() + cells[1].size() || dim < 0)
      throw bad();
    if (!entries.emplace(degree, static_cast<std::size_t>(dim)).second)
      throw ParseError("line " + std::to_string(lineno) + ": repeated degree " + std::to_string(degree));
  }
  return entries;
}

}  // namespace

BettiTable parse_table_csv(const std::string& text, TruncationWindow window) {
  return BettiTable(window, parse_csv_rows(text));
}

BettiTable parse_table_csv(const std::string& text) {
  auto entries = parse_csv_rows(text);
  if (entries.empty()) throw ParseError("table has no rows");
  auto w = TruncationWindow::exact(entries.begin()->first, entries.rbegin()->first);
  return BettiTable(w, std::move(entries));
}

}  // namespace kdual
