#pragma once

#include <string>
#include <vector>

#include "dominokl/signed_perm.hpp"
#include "dominokl/tableaux.hpp"

namespace dkl {

struct TableauPair {
  DominoTableau left;   // insertion tableau S_r(x)
  DominoTableau right;  // recording tableau T_r(x)

  bool operator==(const TableauPair&) const = default;
};

// One insertion step: adds the domino for a signed value into the left
// tableau. Positive values start as a horizontal domino at the end of the
// first row of the smaller-labels subtableau, negatives as a vertical
// domino at the end of the first column; displaced larger labels are then
// re-added in increasing order, translating to the end of the next
// row/column when fully covered and twisting when half covered.
DominoTableau insertValue(const DominoTableau& t, int signedValue);

// The rank-r generalized Robinson-Schensted map. The right tableau records
// with label k the two squares added at step k.
TableauPair gR(const SignedPermutation& w, int rank);

// Per-step snapshots of the pair, for tracing.
std::vector<TableauPair> gRTrace(const SignedPermutation& w, int rank);

// The inverse map; rejects pairs that are not same-shape same-rank valid
// standard tableaux or that are not in the image of gR.
SignedPermutation gRInverse(const TableauPair& pair);

}  // namespace dkl
