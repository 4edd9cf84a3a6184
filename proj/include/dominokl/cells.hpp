#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dominokl/characters.hpp"
#include "dominokl/hecke.hpp"
#include "dominokl/rs.hpp"
#include "dominokl/symbols.hpp"

namespace dkl {

// A combinatorial left cell of rank r: members grouped by right tableau
// (irreducible) or by the moving-through orbit of right tableaux
// (reducible). The representing set carries one tableau per shape.
struct CombinatorialCell {
  bool irreducible = true;
  int rank = 0;
  std::vector<int> members;             // element ids, sorted
  std::vector<DominoTableau> tableaux;  // representing set, sorted
};

std::vector<CombinatorialCell> combinatorialCells(const WGroup& W, int rank, bool irreducible);

// Multiset of shapes of the representing set (distinct by construction).
std::vector<std::vector<int>> predictedModule(const CombinatorialCell& c);

// |c1 ∩ c2^{-1}|, computed by explicit inversion and cross-checked against
// the shape-matching count (and against 2^m over extended open cycles for
// reducible cells with a same-shape pair). Throws if the routes disagree.
long long intersectionCount(const WGroup& W, const CombinatorialCell& c1,
                            const CombinatorialCell& c2);

struct CheckOutcome {
  bool pass = true;
  std::string detail;  // first mismatch witness, empty when passing
};

// Are the shape sets of these combinatorial cells pairwise disjoint?
// Used per KL cell by the disjoint-shapes check; also usable directly as
// a diagnostic on candidate unions.
CheckOutcome disjointShapesDiagnostic(const std::vector<CombinatorialCell>& parts);

struct ConjectureReport {
  bool match = false;
  int klCells = 0;
  int combCells = 0;
  std::string firstDiff;
  std::optional<CheckOutcome> disjointShapes;  // only for integer s
};

struct ModulesReport {
  bool allMatch = false;
  int cellsChecked = 0;
  std::vector<std::string> mismatches;
};

struct HomReport {
  bool match = false;
  long long total = 0;  // sum of the Hom matrix, should be |W|
  std::string firstDiff;
};

struct VerificationReport {
  int n = 0;
  long long a = 1, b = 1;
  WeightParams wp;
  std::optional<ConjectureReport> conjecture;
  std::optional<ModulesReport> modules;
  std::optional<HomReport> hom;
  std::optional<PropertyReport> properties;
  std::optional<long long> totalMs;  // only with an explicit timings request

  bool pass() const;
};

// Shared state for the verification operations at one (n, a, b).
class Verifier {
 public:
  Verifier(int n, Weight wt, std::string cacheDir = "", int maxNkl = 5);

  const WGroup& group() const { return W_; }
  const WeightParams& params() const { return wp_; }
  const KLTable& table();
  const CellPartition& leftCells();
  const std::vector<CombinatorialCell>& combCells();
  const CharacterTable& characterTable();

  ConjectureReport verifyConjecture();
  ModulesReport verifyModuleStructure();
  HomReport verifyHomDims();
  PropertyReport verifyProperties(int maxNAsymptotic = 3);
  CheckOutcome verifyDisjointShapes();

  // Constructible closure equals the set of cell-module shape multisets.
  CheckOutcome verifyConstructible();

  VerificationReport runAll(bool withProperties = true, int maxNAsymptotic = 3);

 private:
  const WGroup& W_;
  Weight wt_;
  WeightParams wp_;
  std::string cacheDir_;
  int maxNkl_;
  std::optional<KLTable> table_;
  std::optional<CellPartition> left_;
  std::optional<std::vector<CombinatorialCell>> comb_;
  std::optional<CharacterTable> chars_;

  // Per KL-cell right-tableau data, used by several checks.
  std::vector<DominoTableau> distinctRightTableaux(const std::vector<int>& cell);
  std::vector<std::int64_t> cellCharacter(int blockIndex);
};

}  // namespace dkl
