#pragma once

#include <set>
#include <string>
#include <vector>

#include "dominokl/hecke.hpp"
#include "dominokl/partitions.hpp"

namespace dkl {

// Two-row symbol of defect t = |top| - |bottom| and residue epsilon; the
// residue is display data (only epsilon = 0 vs != 0 branches any logic)
// but is kept exact. Rows hold the integer parts and strictly increase.
struct Symbol {
  long long epsNum = 0, epsDen = 1;
  std::vector<long long> top;     // lambda_i + eps displayed on the top row
  std::vector<long long> bottom;  // mu_i

  int defect() const { return static_cast<int>(top.size() - bottom.size()); }
  bool epsZero() const { return epsNum == 0; }
  bool operator==(const Symbol&) const = default;
  std::string toString() const;
};

// Minimal representative of the shift-equivalence class: strip leading
// (0,0) column pairs produced by the shift and renumber downward.
Symbol normalizeSymbol(Symbol s);
// The shift itself (top gains a leading eps-entry, bottom a leading 0).
Symbol shiftSymbol(const Symbol& s);

// p -> Lambda_p: split the padded beta-set into even and odd parts.
Symbol partitionToSymbol(const Partition& p, const WeightParams& wp);
// Lambda -> (d,f).
Bipartition symbolToBipartition(const Symbol& s);
// Composition inverse for defect r+1.
Partition bipartitionToPartition(const Bipartition& bp, int r);

// Tensoring with sign on each parameter set.
Bipartition signOnBipartition(const Bipartition& bp);  // (d,f) -> (f^t, d^t)
Symbol signOnSymbol(const Symbol& s);                  // complementation

// Truncated induction on shapes: p^I always, plus p^II exactly when
// p_l = p_{l+1}, p_l + r - l is even and epsilon = 0.
std::vector<Partition> truncatedInductionShapes(const Partition& p, int l,
                                                const WeightParams& wp);

// The shape set of the induced cell: {p^I} for every member, plus p^II for
// members with p_l = p_{l+1} and p_l + r - l even (no epsilon condition:
// this is the tableau-orbit description).
std::set<std::vector<int>> inducedShapeSet(const std::set<std::vector<int>>& shapes, int l,
                                           int r);

// A constructible module as a sorted multiset of rank-r shapes.
using ShapeMultiset = std::vector<std::vector<int>>;

// All constructible shape-multisets of W_n for the regime of wp: closure
// of the W_0 module under summand-wise truncated induction from every
// W_m x S_l and summand-wise transpose.
std::set<ShapeMultiset> constructibleSet(int n, const WeightParams& wp);

}  // namespace dkl
