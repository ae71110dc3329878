#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace incdec {

// Characteristic vector over element indices 0..n-1; bit i is element i.
using Subset = std::uint32_t;

// Hard limit implied by the 32-bit subset mask; every enumeration cap sits
// far below it.
inline constexpr int kMaxGroundSize = 25;

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;

  GroundSet() = default;
  explicit GroundSet(int n);                                   // labels e0..e{n-1}
  GroundSet(int n, std::vector<std::string> element_labels);   // validated

  int index_of(const std::string& label) const;  // input error when unknown
  bool same_as(const GroundSet& other) const {
    return n == other.n && labels == other.labels;
  }
};

inline Subset bit(int e) { return Subset{1} << e; }
inline Subset full_mask(int n) { return n == 0 ? 0 : (Subset{1} << n) - 1; }
inline bool contains(Subset s, int e) { return (s >> e) & 1u; }
inline int card(Subset s) { return std::popcount(s); }
inline Subset complement(int n, Subset s) { return full_mask(n) & ~s; }

std::vector<int> subset_elements(Subset s);

// Orders subsets by their ascending element sequence, so {e0,e3} precedes
// {e1,e2}. Used wherever a canonical witness is reported.
bool subset_seq_less(Subset a, Subset b);

void check_subset(const GroundSet& ground, Subset s);  // input error on stray bits

std::vector<std::string> subset_labels(const GroundSet& ground, Subset s);
std::string subset_braced(const GroundSet& ground, Subset s);  // "{a;b}"
Subset subset_from_labels(const GroundSet& ground, const std::vector<std::string>& labels);

}  // namespace incdec
