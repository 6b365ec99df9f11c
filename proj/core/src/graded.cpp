#include "kdual/graded.hpp"

#include "kdual/errors.hpp"

namespace kdual {

namespace {

int sat_add(int a, int k) {
  if (a <= DegreeRange::kMin) return DegreeRange::kMin;
  if (a >= DegreeRange::kMax) return DegreeRange::kMax;
  return std::clamp(a + k, DegreeRange::kMin, DegreeRange::kMax);
}

int sat_neg(int a) {
  if (a <= DegreeRange::kMin) return DegreeRange::kMax;
  if (a >= DegreeRange::kMax) return DegreeRange::kMin;
  return -a;
}

std::string bound(int a) {
  if (a <= DegreeRange::kMin) return "-inf";
  if (a >= DegreeRange::kMax) return "inf";
  return std::to_string(a);
}

}  // namespace

DegreeRange DegreeRange::widened(int k) const { return {sat_add(lo, -k), sat_add(hi, k)}; }

DegreeRange DegreeRange::negated() const { return {sat_neg(hi), sat_neg(lo)}; }

std::string to_string(const DegreeRange& r) { return "[" + bound(r.lo) + "," + bound(r.hi) + "]"; }

std::size_t GradedBasis::add(int n, std::string label) {
  auto& idx = index_[n];
  if (idx.count(label)) throw LookupError("duplicate label '" + label + "' in degree " + std::to_string(n));
  auto& list = labels_[n];
  idx.emplace(label, list.size());
  list.push_back(std::move(label));
  return list.size() - 1;
}

std::size_t GradedBasis::dim(int n) const {
  auto it = labels_.find(n);
  return it == labels_.end() ? 0 : it->second.size();
}

const std::vector<std::string>& GradedBasis::labels(int n) const {
  static const std::vector<std::string> empty;
  auto it = labels_.find(n);
  return it == labels_.end() ? empty : it->second;
}

std::optional<std::size_t> GradedBasis::index_of(int n, const std::string& label) const {
  auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  auto jt = it->second.find(label);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::vector<int> GradedBasis::degrees() const {
  std::vector<int> out;
  for (const auto& [n, list] : labels_)
    if (!list.empty()) out.push_back(n);
  return out;
}

std::size_t GradedBasis::total_dimension() const {
  std::size_t n = 0;
  for (const auto& [d, list] : labels_) n += list.size();
  return n;
}

}  // namespace kdual
