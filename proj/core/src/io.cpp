#include "kdual/io.hpp"

#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kdual/errors.hpp"

namespace kdual {

using nlohmann::json;

namespace {

// Input iterator that counts consumed bytes, so SAX events know where they are.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* p, std::size_t* consumed) : p_(p), consumed_(consumed) {}
  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    ++*consumed_;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const CountingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_;
  std::size_t* consumed_;
};

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_at(const std::string& text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

std::string where(const Position& p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": ";
}

// Records the position of every value by JSON pointer; the DOM comes from json::parse.
class PositionRecorder : public nlohmann::json_sax<json> {
 public:
  PositionRecorder(const std::string& text, const std::size_t& consumed) : text_(text), consumed_(consumed) {}

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override {
    record();
    stack_.push_back({false, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    advance();
    return true;
  }
  bool start_array(std::size_t) override {
    record();
    stack_.push_back({true, 0, {}});
    return true;
  }
  bool end_array() override {
    stack_.pop_back();
    advance();
    return true;
  }
  bool parse_error(std::size_t offset, const std::string&, const nlohmann::detail::exception& e) override {
    std::string message = e.what();
    // drop the library's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix
    auto colon = message.find(": ");
    if (colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError(where(position_at(text_, offset == 0 ? 0 : offset - 1)) + message);
  }

  const std::map<std::string, Position>& positions() const { return positions_; }

 private:
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
  };

  std::string pointer() const {
    std::string out;
    for (const auto& f : stack_) out += "/" + (f.array ? std::to_string(f.index) : f.key);
    return out;
  }
  void record() {
    // The lexer has consumed the first character of the value (or all of a scalar).
    positions_.emplace(pointer(), position_at(text_, consumed_ == 0 ? 0 : consumed_ - 1));
  }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool scalar() {
    record();
    advance();
    return true;
  }

  const std::string& text_;
  const std::size_t& consumed_;
  std::vector<Frame> stack_;
  std::map<std::string, Position> positions_;
};

class DocumentReader {
 public:
  explicit DocumentReader(const std::string& text) : text_(text) {
    std::size_t consumed = 0;
    PositionRecorder recorder(text_, consumed);
    CountingIterator first(text_.data(), &consumed);
    CountingIterator last(text_.data() + text_.size(), &consumed);
    json::sax_parse(first, last, &recorder);
    positions_ = recorder.positions();
    doc_ = json::parse(text_);
  }

  const json& doc() const { return doc_; }

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    std::string p = pointer;
    while (true) {
      auto it = positions_.find(p);
      if (it != positions_.end()) throw ParseError(where(it->second) + message);
      if (p.empty()) break;
      p = p.substr(0, p.rfind('/'));
    }
    throw ParseError(message);
  }

  const json& member(const json& obj, const std::string& pointer, const std::string& key) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, "missing key '" + key + "'");
    return *it;
  }

  std::string string_at(const json& v, const std::string& pointer) const {
    if (!v.is_string()) fail(pointer, "expected a string");
    return v.get<std::string>();
  }

  const json& array_at(const json& v, const std::string& pointer) const {
    if (!v.is_array()) fail(pointer, "expected an array");
    return v;
  }

 private:
  const std::string& text_;
  std::map<std::string, Position> positions_;
  json doc_;
};

mpq_class coefficient(const DocumentReader& r, const json& v, const std::string& pointer, const FieldSpec& field) {
  try {
    if (v.is_number_integer()) return Scalar(field, mpq_class(v.dump())).value();
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>()).value();
  } catch (const Error& e) {
    r.fail(pointer, e.what());
  }
  r.fail(pointer, "coefficient must be an integer or a string \"n\" or \"p/q\"");
}

}  // namespace

DGAlgebra parse_dga(const std::string& text) {
  const DocumentReader r(text);
  const json& doc = r.doc();
  if (!doc.is_object()) r.fail("", "a DGA document must be a JSON object");

  static const char* known[] = {"field", "connectivity", "name", "basis", "unit", "products", "differential"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) r.fail("/" + it.key(), "unknown key '" + it.key() + "'");
  }

  FieldSpec field;
  try {
    field = FieldSpec::parse(r.string_at(r.member(doc, "", "field"), "/field"));
  } catch (const FieldError& e) {
    r.fail("/field", e.what());
  }
  Connectivity conn = Connectivity::simply_coconnective;
  try {
    conn = parse_connectivity(r.string_at(r.member(doc, "", "connectivity"), "/connectivity"));
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind("line ", 0) == 0) throw;
    r.fail("/connectivity", e.what());
  }

  DGAlgebraBuilder b(field, conn);
  if (doc.contains("name")) b.set_name(r.string_at(doc["name"], "/name"));
  const json& basis = r.array_at(r.member(doc, "", "basis"), "/basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string p = "/basis/" + std::to_string(i);
    const std::string name = r.string_at(r.member(basis[i], p, "name"), p + "/name");
    const json& degree = r.member(basis[i], p, "degree");
    if (!degree.is_number_integer()) r.fail(p + "/degree", "degree must be an integer");
    if (b.find(name)) r.fail(p + "/name", "duplicate basis element '" + name + "'");
    b.add_basis(name, degree.get<int>());
  }
  auto lookup = [&](const json& v, const std::string& p) {
    const std::string name = r.string_at(v, p);
    auto idx = b.find(name);
    if (!idx) r.fail(p, "unknown basis element '" + name + "'");
    return *idx;
  };
  b.set_unit(lookup(r.member(doc, "", "unit"), "/unit"));

  auto read_result = [&](const json& entry, const std::string& p, auto&& add) {
    const json& result = r.array_at(r.member(entry, p, "result"), p + "/result");
    for (std::size_t k = 0; k < result.size(); ++k) {
      const std::string q = p + "/result/" + std::to_string(k);
      std::size_t target = lookup(r.member(result[k], q, "basis"), q + "/basis");
      add(target, coefficient(r, r.member(result[k], q, "coeff"), q + "/coeff", field));
    }
  };
  if (doc.contains("products")) {
    const json& products = r.array_at(doc["products"], "/products");
    for (std::size_t i = 0; i < products.size(); ++i) {
      const std::string p = "/products/" + std::to_string(i);
      std::size_t left = lookup(r.member(products[i], p, "left"), p + "/left");
      std::size_t right = lookup(r.member(products[i], p, "right"), p + "/right");
      read_result(products[i], p, [&](std::size_t k, const mpq_class& c) { b.add_product(left, right, k, c); });
    }
  }
  if (doc.contains("differential")) {
    const json& diff = r.array_at(doc["differential"], "/differential");
    for (std::size_t i = 0; i < diff.size(); ++i) {
      const std::string p = "/differential/" + std::to_string(i);
      std::size_t on = lookup(r.member(diff[i], p, "on"), p + "/on");
      read_result(diff[i], p, [&](std::size_t k, const mpq_class& c) { b.add_differential(on, k, c); });
    }
  }
  return std::move(b).build();
}

DGAlgebra parse_dga_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return parse_dga(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string write_dga(const DGAlgebra& a) {
  if (!a.finite_total_dimension())
    throw Error("only complete algebras of finite total dimension can be written");
  json doc = json::object();
  doc["field"] = a.field().name();
  doc["connectivity"] = to_string(a.connectivity());
  if (!a.name().empty()) doc["name"] = a.name();
  json basis = json::array();
  for (const auto& e : a.basis()) basis.push_back({{"name", e.label}, {"degree", e.degree}});
  doc["basis"] = basis;
  doc["unit"] = a.label(a.unit());
  auto result = [&](const LinearCombination& c) {
    json out = json::array();
    for (const auto& t : c) out.push_back({{"basis", a.label(t.index)}, {"coeff", t.coeff.value().get_str()}});
    return out;
  };
  json products = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a.is_unit(i) || a.is_unit(j)) continue;
      const auto& c = a.product(i, j);
      if (!c.empty()) products.push_back({{"left", a.label(i)}, {"right", a.label(j)}, {"result", result(c)}});
    }
  doc["products"] = products;
  json diff = json::array();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a.differential(i).empty()) diff.push_back({{"on", a.label(i)}, {"result", result(a.differential(i))}});
  doc["differential"] = diff;
  return doc.dump(2);
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "text") return ReportFormat::text;
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw ParseError("unknown format '" + text + "' (expected text, csv or json)");
}

namespace {

json window_json(const TruncationWindow& w) {
  return {{"lo", w.lo}, {"hi", w.hi}, {"word_bound", w.word_bound}, {"certified", w.certified}};
}

TruncationWindow window_from(const json& j) {
  return {j.at("lo").get<int>(), j.at("hi").get<int>(), j.at("word_bound").get<std::size_t>(),
          j.at("certified").get<bool>()};
}

json rows_json(const BettiTable& t) {
  json rows = json::array();
  for (const auto& [d, k] : t.entries()) rows.push_back({{"degree", d}, {"dimension", k}});
  return rows;
}

BettiTable table_from(const json& rows, const TruncationWindow& w) {
  std::map<int, std::size_t> entries;
  for (const auto& row : rows) entries[row.at("degree").get<int>()] = row.at("dimension").get<std::size_t>();
  return BettiTable(w, std::move(entries));
}

std::string window_text(const TruncationWindow& w) {
  std::ostringstream out;
  out << "[" << w.lo << "," << w.hi << "]";
  if (w.word_bound) out << " (word length <= " << w.word_bound << ")";
  return out.str();
}

template <class F>
json parse_report_json(const std::string& text, F&& body) {
  try {
    json doc = json::parse(text);
    body(doc);
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string emit_table(const TableReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: {
      std::string out = "degree,dimension";
      for (const auto& [d, k] : r.table.entries()) out += "\n" + std::to_string(d) + "," + std::to_string(k);
      return out;
    }
    case ReportFormat::json: {
      json doc = {{"kind", r.kind},
                  {"subject", r.subject},
                  {"field", r.field},
                  {"window", window_json(r.table.window())},
                  {"provenance", r.provenance},
                  {"table", rows_json(r.table)}};
      return doc.dump(2);
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << r.kind << " of " << r.subject << " over " << r.field << " on " << window_text(r.table.window())
          << "\n";
      out << std::setw(8) << "degree" << std::setw(12) << "dimension" << "\n";
      for (const auto& [d, k] : r.table.entries()) out << std::setw(8) << d << std::setw(12) << k << "\n";
      if (!r.provenance.empty()) out << "computed by: " << r.provenance << "\n";
      return out.str();
    }
  }
  return {};
}

std::string emit_report(const DualityReport& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: {
      std::string out = "degree,left,right";
      for (int n = r.window.lo; n <= r.window.hi; ++n) {
        auto cell = [n](const BettiTable& t) {
          auto it = t.entries().find(n);
          return it == t.entries().end() ? std::string() : std::to_string(it->second);
        };
        out += "\n" + std::to_string(n) + "," + cell(r.left) + "," + cell(r.right);
      }
      return out;
    }
    case ReportFormat::json: {
      json doc = {{"kind", r.kind},
                  {"window", window_json(r.window)},
                  {"pass", r.pass},
                  {"first_mismatch", r.first_mismatch ? json(*r.first_mismatch) : json(nullptr)},
                  {"hypothesis_violated", r.hypothesis_violated},
                  {"checks", r.checks},
                  {"notes", r.notes},
                  {"left",
                   {{"provenance", r.left_provenance},
                    {"window", window_json(r.left.window())},
                    {"table", rows_json(r.left)}}},
                  {"right",
                   {{"provenance", r.right_provenance},
                    {"window", window_json(r.right.window())},
                    {"table", rows_json(r.right)}}}};
      return doc.dump(2);
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << r.kind << " on " << window_text(r.window) << ": " << (r.pass ? "PASS" : "FAIL");
      if (r.first_mismatch) out << " (first mismatch in degree " << *r.first_mismatch << ")";
      if (r.hypothesis_violated) out << " (hypothesis violated)";
      out << "\n" << std::setw(8) << "degree" << std::setw(8) << "left" << std::setw(8) << "right" << "\n";
      for (int n = r.window.lo; n <= r.window.hi; ++n) {
        auto cell = [n](const BettiTable& t) {
          auto it = t.entries().find(n);
          return it == t.entries().end() ? std::string("-") : std::to_string(it->second);
        };
        out << std::setw(8) << n << std::setw(8) << cell(r.left) << std::setw(8) << cell(r.right) << "\n";
      }
      out << "left:  " << r.left_provenance << "\n";
      out << "right: " << r.right_provenance << "\n";
      for (const auto& [name, ok] : r.checks) out << "check " << name << ": " << (ok ? "yes" : "no") << "\n";
      for (const auto& note : r.notes) out << "note: " << note << "\n";
      return out.str();
    }
  }
  return {};
}

TableReport parse_table_report(const std::string& text) {
  TableReport r;
  parse_report_json(text, [&](const json& doc) {
    r.kind = doc.at("kind").get<std::string>();
    r.subject = doc.at("subject").get<std::string>();
    r.field = doc.at("field").get<std::string>();
    r.provenance = doc.at("provenance").get<std::string>();
    r.table = table_from(doc.at("table"), window_from(doc.at("window")));
  });
  return r;
}

DualityReport parse_duality_report(const std::string& text) {
  DualityReport r;
  parse_report_json(text, [&](const json& doc) {
    r.kind = doc.at("kind").get<std::string>();
    r.window = window_from(doc.at("window"));
    r.pass = doc.at("pass").get<bool>();
    if (!doc.at("first_mismatch").is_null()) r.first_mismatch = doc.at("first_mismatch").get<int>();
    r.hypothesis_violated = doc.at("hypothesis_violated").get<bool>();
    r.checks = doc.at("checks").get<std::map<std::string, bool>>();
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    const json& left = doc.at("left");
    const json& right = doc.at("right");
    r.left_provenance = left.at("provenance").get<std::string>();
    r.right_provenance = right.at("provenance").get<std::string>();
    r.left = table_from(left.at("table"), window_from(left.at("window")));
    r.right = table_from(right.at("table"), window_from(right.at("window")));
  });
  return r;
}

}  // namespace kdual
