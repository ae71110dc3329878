#include "core/ground.hpp"

#include <algorithm>
#include <unordered_set>

#include "core/errors.hpp"

namespace incdec {

GroundSet::GroundSet(int size) : n(size) {
  if (n < 1 || n > kMaxGroundSize) {
    fail(ErrorKind::Input, "ground set size must be in [1, " +
                               std::to_string(kMaxGroundSize) + "], got " +
                               std::to_string(n));
  }
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
}

GroundSet::GroundSet(int size, std::vector<std::string> element_labels)
    : GroundSet(size) {
  if (!element_labels.empty()) {
    if (static_cast<int>(element_labels.size()) != n) {
      fail(ErrorKind::Input, "expected " + std::to_string(n) + " labels, got " +
                                 std::to_string(element_labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : element_labels) {
      if (!seen.insert(l).second) fail(ErrorKind::Input, "duplicate label \"" + l + "\"");
    }
    labels = std::move(element_labels);
  }
}

int GroundSet::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) fail(ErrorKind::Input, "unknown element label \"" + label + "\"");
  return static_cast<int>(it - labels.begin());
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (Subset t = s; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

bool subset_seq_less(Subset a, Subset b) {
  while (a != 0 && b != 0) {
    int ea = std::countr_zero(a);
    int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

void check_subset(const GroundSet& ground, Subset s) {
  if ((s & ~full_mask(ground.n)) != 0) {
    fail(ErrorKind::Input, "subset mask has bits outside the ground set");
  }
}

std::vector<std::string> subset_labels(const GroundSet& ground, Subset s) {
  std::vector<std::string> out;
  for (int e : subset_elements(s)) out.push_back(ground.labels[e]);
  return out;
}

std::string subset_braced(const GroundSet& ground, Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ";";
    out += ground.labels[e];
    first = false;
  }
  return out + "}";
}

Subset subset_from_labels(const GroundSet& ground, const std::vector<std::string>& labels) {
  Subset s = 0;
  for (const auto& l : labels) s |= bit(ground.index_of(l));
  return s;
}

}  // namespace incdec
