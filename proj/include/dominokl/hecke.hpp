#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dominokl/laurent.hpp"
#include "dominokl/signed_perm.hpp"

namespace dkl {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight function L on W_n: L(t) = b, L(s_i) = a, both positive.
struct Weight {
  long long a = 1;
  long long b = 1;
};

// The combinatorial parameters derived from s = b/a: the rank r of the
// tableau regime and the residue epsilon, kept as an exact rational.
struct WeightParams {
  long long a = 1, b = 1;
  bool integerS = false;
  int r = 0;
  long long epsNum = 0, epsDen = 1;  // epsilon = s - floor(s), reduced

  bool epsZero() const { return epsNum == 0; }
  std::string sString() const;    // "3/2" or "2"
  std::string epsString() const;  // "1/2" or "0"
};
WeightParams weightParams(long long a, long long b);

// Finitely supported element of the Hecke algebra in the T-basis:
// element id -> coefficient.
using HeckeElt = std::map<int, Laurent>;

// The Kazhdan-Lusztig data of (W_n, L): the polynomials p(y,x) with
// C_x = T_x + sum_{y<x} p(y,x) T_y, bar-invariant and with p(y,x) in
// strictly negative degrees. Rows are solved triangularly along the
// Bruhat order from bar-expansions of the T-basis.
class KLTable {
 public:
  // cacheDir (optional): reuse/write the textual p-table cache. Loaded
  // tables are verified symbolically (bar-invariance, triangularity,
  // negative degrees) before being trusted.
  KLTable(const WGroup& W, Weight wt, int maxN = 5, const std::string& cacheDir = "");

  const WGroup& group() const { return W_; }
  Weight weight() const { return wt_; }
  int genWeightOf(int g) const { return static_cast<int>(g == 0 ? wt_.b : wt_.a); }

  const Laurent& p(int y, int x) const;
  const std::map<int, Laurent>& pRow(int x) const { return pRows_[x]; }

  // T-basis operations.
  HeckeElt tMultiplyGen(int g, const HeckeElt& h) const;  // T_g * h
  HeckeElt tMultiply(const HeckeElt& h1, const HeckeElt& h2) const;
  HeckeElt bar(const HeckeElt& h) const;
  HeckeElt cElt(int x) const;  // C_x written in the T-basis

  // Expansion of C_g C_x in the C-basis, for a generator g (this is all
  // the cell preorder needs).
  const std::map<int, Laurent>& hGenRow(int g, int x) const;

  // Expansion of C_x C_y in the C-basis (arbitrary pair).
  std::map<int, Laurent> hRow(int x, int y) const;

  // Textual cache of the p-table, one file per (n,a,b).
  bool loadCache(const std::string& path);
  void saveCache(const std::string& path) const;
  static std::string cacheFileName(int n, Weight wt);

 private:
  const WGroup& W_;
  Weight wt_;
  std::vector<std::map<int, Laurent>> barRows_;  // bar(T_x) in the T-basis
  std::vector<std::map<int, Laurent>> pRows_;    // y -> p(y,x), y < x
  mutable std::vector<std::vector<std::map<int, Laurent>>> hGen_;  // [g][x]
  mutable std::vector<std::vector<bool>> hGenDone_;

  void buildBarRows();
  void solveP();
  bool verifyTable() const;
  bool loadCacheImpl(const std::string& path);
};

struct CellPartition {
  enum class Side { Left, Right, TwoSided };
  Side side = Side::Left;
  std::vector<std::vector<int>> blocks;  // each sorted by id; blocks by least member
  std::vector<int> blockOf;              // element id -> block index

  // preorder on blocks: leq(i,j) means members of block i are <= members
  // of block j in the side's preorder.
  std::vector<std::vector<bool>> reachable;  // reachable[j][i]: i <= j
  bool leq(int bi, int bj) const { return reachable[bj][bi]; }
  int blockCount() const { return static_cast<int>(blocks.size()); }
};

CellPartition klCells(const KLTable& t, CellPartition::Side side);

// Matrices of the generators acting on the left cell module specialized
// at v = 1 (group action; generator g = identity - matrix of C_g).
using IntMatrix = std::vector<std::vector<std::int64_t>>;
std::map<int, IntMatrix> cellModuleMatrices(const KLTable& t, const CellPartition& left,
                                            int blockIndex);

struct AsymptoticData {
  std::vector<int> aVal;                                   // a(z)
  std::vector<int> delta;                                  // Delta(z)
  std::vector<std::int64_t> nz;                            // n_z
  std::map<std::tuple<int, int, int>, std::int64_t> gamma; // (x,y,z) -> gamma_{x,y,z}
  std::vector<int> duflo;                                  // sorted ids of D

  std::int64_t gammaAt(int x, int y, int z) const {
    auto it = gamma.find({x, y, z});
    return it == gamma.end() ? 0 : it->second;
  }
};

// Needs the full h-table; mandatory up to n=3, opt-in n=4 via maxN.
AsymptoticData asymptoticData(const KLTable& t, int maxN = 3);

struct PropertyCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // first counterexample, empty when pass
};
struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool allPass() const;
};

// Lusztig's P1-P11, P13, P14 evaluated on the computed data; failures are
// report content, not errors. P12 (a-values in parabolic subgroups) and
// P15 (the two-indeterminate identity) are out of scope: the first needs
// a generic parabolic engine, the second a second variable.
PropertyReport checkProperties(const KLTable& t, const AsymptoticData& ad);

}  // namespace dkl
