#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/set_function.hpp"

namespace incdec {

// Output permutation: positions[j] is the element at position j (0-based).
struct Ordering {
  std::vector<int> positions;

  int n() const { return static_cast<int>(positions.size()); }
  Subset prefix(int k) const;  // first k elements as a mask
  Ordering reversed() const;
};

// Comparison deciding whether the prefix side wins a marginal tie: with Le
// the element goes to the suffix on equality, with Lt to the prefix.
enum class Prec { Le, Lt };

Prec flipped(Prec prec);
std::string prec_name(Prec prec);

// Resolves argmax ties between elements. Priority ranks carry over verbatim
// between mirrored runs, which the reversal check requires.
struct TieBreak {
  enum class Kind { MinIndex, MaxIndex, Priority };
  Kind kind = Kind::MinIndex;
  // Distinct elements, best first; anything unlisted follows in index order.
  std::vector<int> priority;

  static TieBreak min_index() { return TieBreak{}; }
  static TieBreak max_index() { return TieBreak{Kind::MaxIndex, {}}; }
  static TieBreak by_priority(std::vector<int> ranking);

  // True when candidate beats incumbent on a tie.
  bool prefers(int candidate, int incumbent) const;
  std::string describe(const GroundSet& ground) const;
};

struct TraceStep {
  int iteration = 0;  // 1-based
  int chosen = -1;
  char side = 'H';
  Value phi;
  Value h_marginal;
  Value g_marginal;
  Subset prefix_set = 0;  // H_i
  Subset suffix_set = 0;  // G_i
};

struct DoubleGreedyTrace {
  std::vector<TraceStep> steps;
};

struct DoubleGreedyResult {
  Ordering ordering;
  DoubleGreedyTrace trace;
};

// Standard marginal-gain greedy; ties by TieBreak.
Ordering greedy_order(const Oracle& oracle, const TieBreak& tie = TieBreak::min_index());

// Builds prefix (under h) and suffix (under g) simultaneously, always taking
// the element whose larger marginal is maximal. Requires normalized handles
// unless auto_normalize is set.
DoubleGreedyResult double_greedy(const Oracle& g, const Oracle& h, Prec prec = Prec::Le,
                                 const TieBreak& tie = TieBreak::min_index(),
                                 bool auto_normalize = false);

// The two equally likely outcomes of the coin-flip strategy; expectations
// downstream are exact two-term averages, no sampling.
struct RandomizedPair {
  Ordering order_h;
  Ordering order_g_reversed;
};

RandomizedPair randomized_pair(const Oracle& g, const Oracle& h,
                               const TieBreak& tie = TieBreak::min_index());

struct OptRow {
  Value value;
  Subset witness = 0;  // smallest maximizer in element-sequence order
};

// Exact optimum per cardinality k = 0..n.
struct OptProfile {
  std::vector<OptRow> by_size;

  int n() const { return static_cast<int>(by_size.size()) - 1; }
};

OptProfile opt_profile(const Objective& objective, int cap = 20);

struct BestOrderingResult {
  Ordering ordering;  // smallest minimizer in element-sequence order
  ValueOrInf ratio;
};

// Exhaustive min over all n! orderings of max_k OPT_k / f(prefix_k), with
// exactness-preserving pruning on partial maxima.
BestOrderingResult best_ordering(const Objective& objective, int cap = 9);

}  // namespace incdec
