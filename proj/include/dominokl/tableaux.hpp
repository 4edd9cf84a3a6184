#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dominokl/partitions.hpp"

namespace dkl {

struct Square {
  int row = 0;  // 1-based
  int col = 0;

  auto operator<=>(const Square&) const = default;
  std::string toString() const {
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
  }
};

// A square (i,j) is variable when i+j ≡ r (mod 2), fixed otherwise.
// Each domino covers one square of each class; moving through a cycle
// keeps every fixed square's label and reshuffles the variable ones.
bool isVariable(Square s, int rank);

struct Domino {
  int label = 0;
  Square first, second;  // sorted lexicographically; always adjacent

  auto operator<=>(const Domino&) const = default;
};

// A standard domino tableau of rank r: the staircase core carries label 0,
// the non-core squares of the shape are tiled by dominoes with distinct
// positive labels increasing along rows and columns. Completed tableaux
// (SDT_r) carry labels exactly 1..n; insertion intermediates may hold any
// distinct label set.
class DominoTableau {
 public:
  DominoTableau() = default;
  static DominoTableau coreOnly(int rank);
  // Builds and checks structure + standardness; throws on violations.
  static DominoTableau fromDominoes(int rank, const std::vector<Domino>& dominoes);

  int rank() const { return rank_; }
  int dominoCount() const { return static_cast<int>(dominoes_.size()); }
  Partition shape() const;
  const Partition& core() const { return core_; }

  // Label of an in-shape square (0 on the core). Throws outside the shape.
  int labelAt(Square s) const;
  bool inShape(Square s) const;
  bool inCore(Square s) const;
  // 0 above/left of the diagram or on the core, +infinity (a large
  // sentinel) outside the shape with positive coordinates.
  int boundaryLabel(Square s) const;

  const std::vector<Domino>& dominoes() const { return dominoes_; }  // sorted by label
  std::vector<int> labels() const;
  bool hasLabel(int label) const;
  const Domino& domino(int label) const;
  Square fixedSquare(int label) const;
  Square variableSquare(int label) const;

  // Same rank, every domino reflected across the diagonal.
  DominoTableau transpose() const;

  bool operator==(const DominoTableau&) const = default;
  bool operator<(const DominoTableau& o) const;

  std::string key() const;      // compact canonical key, usable for grouping
  std::string toGrid() const;   // human-readable label grid, '.' on the core

 private:
  int rank_ = 0;
  Partition core_;
  std::vector<std::vector<int>> rows_;  // labels; 0 on core squares
  std::vector<Domino> dominoes_;
};

// All invariants of a completed tableau: exact core, adjacent dominoes,
// standardness, and labels exactly 1..n. Returns false instead of
// throwing, so arbitrary candidate data can be tested.
bool validateTableau(int rank, const std::vector<Domino>& dominoes);
bool isComplete(const DominoTableau& t);  // labels are exactly 1..n

// SDT_r(p) in a deterministic order; r is forced by the shape. Empty when
// the non-core square count is odd.
std::vector<DominoTableau> enumerateTableaux(const Partition& p);

// All of SDT_r(n), grouped by shape in canonical partition order.
std::vector<DominoTableau> enumerateTableaux(int n, int rank);

struct Cycle {
  std::vector<int> labels;  // sorted
  bool open = false;
  bool coreOpen = false;
  std::optional<Square> sb;  // square vacated by moving through (open only)
  std::optional<Square> sf;  // square claimed
};

// The partition of the dominoes of T into cycles, ordered by smallest
// label. Open cycles carry s_b and s_f; core-open means s_b touches the
// core (for r=0: s_b = (1,1)).
std::vector<Cycle> cycles(const DominoTableau& t);

// Moving through a single cycle. Closed cycles keep the shape; open ones
// trade s_b for s_f. Core-open cycles are rejected: moving them does not
// preserve the rank.
DominoTableau moveThrough(const DominoTableau& t, const Cycle& c);

// Moving through a set of non-core open cycles (any subset of OC*(T));
// the result is order-independent. Rejects closed or core-open members.
DominoTableau moveThroughSet(const DominoTableau& t, const std::vector<Cycle>& cs);

// Convenience: cycles selected by label membership.
const Cycle& cycleOf(const std::vector<Cycle>& cs, int label);
std::vector<Cycle> openNonCoreCycles(const DominoTableau& t);

struct ExtendedCycle {
  std::vector<Cycle> inFirst;   // open cycles from T in this group
  std::vector<Cycle> inSecond;  // open cycles from T2
  bool coreOpen = false;        // the group touches a core-open cycle
};

// Extended open cycles of T relative to a same-shape T2: connected
// components of the graph on the cycles of both tableaux, linked across
// the pair whenever two cycles share a square. Components with an open
// member are returned; moving through the non-core ones (both sides at
// once) again yields a same-shape pair.
std::vector<ExtendedCycle> extendedOpenCycles(const DominoTableau& t, const DominoTableau& t2);

}  // namespace dkl
