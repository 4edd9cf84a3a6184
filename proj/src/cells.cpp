#include "dominokl/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dkl {

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<CombinatorialCell> combinatorialCells(const WGroup& W, int rank, bool irreducible) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  int N = W.size();
  std::vector<DominoTableau> right(N);
  std::map<std::string, int> tabIndex;  // tableau key -> dense index
  std::vector<DominoTableau> tabs;
  std::vector<int> tabOf(N);
  for (int x = 0; x < N; ++x) {
    right[x] = gR(W.element(x), rank).right;
    auto [it, fresh] = tabIndex.emplace(right[x].key(), static_cast<int>(tabs.size()));
    if (fresh) tabs.push_back(right[x]);
    tabOf[x] = it->second;
  }

  int T = static_cast<int>(tabs.size());
  DSU dsu(T);
  if (!irreducible) {
    for (int i = 0; i < T; ++i)
      for (const auto& c : openNonCoreCycles(tabs[i])) {
        DominoTableau moved = moveThrough(tabs[i], c);
        auto it = tabIndex.find(moved.key());
        if (it == tabIndex.end())
          throw std::logic_error("moving through left the set of right tableaux");
        dsu.unite(i, it->second);
      }
  }

  std::map<int, CombinatorialCell> cells;
  for (int i = 0; i < T; ++i) {
    auto& cell = cells[dsu.find(i)];
    cell.irreducible = irreducible;
    cell.rank = rank;
    cell.tableaux.push_back(tabs[i]);
  }
  for (int x = 0; x < N; ++x) cells[dsu.find(tabOf[x])].members.push_back(x);

  std::vector<CombinatorialCell> out;
  for (auto& [root, cell] : cells) {
    std::sort(cell.members.begin(), cell.members.end());
    std::sort(cell.tableaux.begin(), cell.tableaux.end());
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(), [](const CombinatorialCell& a, const CombinatorialCell& b) {
    return a.members[0] < b.members[0];
  });
  return out;
}

std::vector<std::vector<int>> predictedModule(const CombinatorialCell& c) {
  std::vector<std::vector<int>> shapes;
  for (const auto& t : c.tableaux) shapes.push_back(t.shape().parts());
  std::sort(shapes.begin(), shapes.end());
  for (size_t i = 0; i + 1 < shapes.size(); ++i)
    if (shapes[i] == shapes[i + 1])
      throw std::logic_error("representing set with repeated shapes");
  return shapes;
}

long long intersectionCount(const WGroup& W, const CombinatorialCell& c1,
                            const CombinatorialCell& c2) {
  if (c1.rank != c2.rank) throw std::invalid_argument("rank mismatch");
  std::vector<bool> inC2(W.size(), false);
  for (int x : c2.members) inC2[x] = true;
  long long direct = 0;
  for (int x : c1.members)
    if (inC2[W.inverseOf(x)]) ++direct;

  // Shape-matching count M.
  std::set<std::vector<int>> shapes2;
  for (const auto& t : c2.tableaux) shapes2.insert(t.shape().parts());
  long long m = 0;
  for (const auto& t : c1.tableaux)
    if (shapes2.count(t.shape().parts())) ++m;
  if (direct != m)
    throw std::logic_error("intersection count disagrees with the shape-matching count: " +
                           std::to_string(direct) + " vs " + std::to_string(m));

  if (!c1.irreducible && !c2.irreducible && m > 0) {
    // Pick any same-shape pair and compare with 2^(extended cycles).
    for (const auto& t : c1.tableaux)
      for (const auto& t2 : c2.tableaux)
        if (t.shape() == t2.shape()) {
          int ext = 0;
          for (const auto& ec : extendedOpenCycles(t, t2))
            if (!ec.coreOpen) ++ext;
          long long expect = 1LL << ext;
          if (direct != expect)
            throw std::logic_error("intersection count disagrees with 2^m over extended cycles");
          return direct;
        }
  }
  return direct;
}

bool VerificationReport::pass() const {
  if (conjecture && !conjecture->match) return false;
  if (conjecture && conjecture->disjointShapes && !conjecture->disjointShapes->pass) return false;
  if (modules && !modules->allMatch) return false;
  if (hom && !hom->match) return false;
  if (properties && !properties->allPass()) return false;
  return true;
}

Verifier::Verifier(int n, Weight wt, std::string cacheDir, int maxNkl)
    : W_(wgroup(n)), wt_(wt), wp_(weightParams(wt.a, wt.b)), cacheDir_(std::move(cacheDir)),
      maxNkl_(maxNkl) {}

const KLTable& Verifier::table() {
  if (!table_) table_.emplace(W_, wt_, maxNkl_, cacheDir_);
  return *table_;
}

const CellPartition& Verifier::leftCells() {
  if (!left_) left_ = klCells(table(), CellPartition::Side::Left);
  return *left_;
}

const std::vector<CombinatorialCell>& Verifier::combCells() {
  if (!comb_) comb_ = combinatorialCells(W_, wp_.r, !wp_.integerS);
  return *comb_;
}

const CharacterTable& Verifier::characterTable() {
  if (!chars_) chars_.emplace(W_.n());
  return *chars_;
}

std::vector<DominoTableau> Verifier::distinctRightTableaux(const std::vector<int>& cell) {
  std::map<std::string, DominoTableau> seen;
  for (int x : cell) {
    DominoTableau t = gR(W_.element(x), wp_.r).right;
    seen.emplace(t.key(), std::move(t));
  }
  std::vector<DominoTableau> out;
  for (auto& [k, t] : seen) out.push_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

ConjectureReport Verifier::verifyConjecture() {
  ConjectureReport rep;
  const CellPartition& kl = leftCells();
  const auto& comb = combCells();
  rep.klCells = kl.blockCount();
  rep.combCells = static_cast<int>(comb.size());

  std::vector<std::vector<int>> klBlocks = kl.blocks;
  std::vector<std::vector<int>> combBlocks;
  for (const auto& c : comb) combBlocks.push_back(c.members);
  std::sort(klBlocks.begin(), klBlocks.end());
  std::sort(combBlocks.begin(), combBlocks.end());
  rep.match = klBlocks == combBlocks;
  if (!rep.match) {
    // Minimal witness: the smallest element whose two blocks differ, and
    // the smallest partner separating them.
    for (int x = 0; x < W_.size() && rep.firstDiff.empty(); ++x) {
      std::vector<int> a = kl.blocks[kl.blockOf[x]];
      std::vector<int> bvec;
      for (const auto& c : comb)
        if (std::binary_search(c.members.begin(), c.members.end(), x)) bvec = c.members;
      if (a == bvec) continue;
      std::vector<int> diff;
      std::set_symmetric_difference(a.begin(), a.end(), bvec.begin(), bvec.end(),
                                    std::back_inserter(diff));
      int w2 = diff.empty() ? x : diff[0];
      std::ostringstream out;
      out << "w=" << W_.element(x).toString() << " w'=" << W_.element(w2).toString()
          << "\nT_r(w):\n" << gR(W_.element(x), wp_.r).right.toGrid() << "T_r(w'):\n"
          << gR(W_.element(w2), wp_.r).right.toGrid();
      rep.firstDiff = out.str();
    }
  }
  if (wp_.integerS) rep.disjointShapes = verifyDisjointShapes();
  return rep;
}

CheckOutcome disjointShapesDiagnostic(const std::vector<CombinatorialCell>& parts) {
  CheckOutcome out;
  std::set<std::vector<int>> seen;
  for (const auto& c : parts)
    for (const auto& t : c.tableaux) {
      auto sp = t.shape().parts();
      if (!seen.insert(sp).second) {
        out.pass = false;
        out.detail = "shape " + Partition(sp).toString() +
                     " shared by two combinatorial cells";
        return out;
      }
    }
  return out;
}

CheckOutcome Verifier::verifyDisjointShapes() {
  CheckOutcome out;
  if (!wp_.integerS) return out;  // vacuous for non-integer s
  const CellPartition& kl = leftCells();
  const auto& comb = combCells();
  for (int b = 0; b < kl.blockCount() && out.pass; ++b) {
    // Combinatorial cells meeting this KL cell; their shape sets must be
    // pairwise disjoint.
    std::vector<CombinatorialCell> parts;
    for (const auto& c : comb)
      for (int x : c.members)
        if (kl.blockOf[x] == b) {
          parts.push_back(c);
          break;
        }
    out = disjointShapesDiagnostic(parts);
    if (!out.pass) out.detail += " inside one KL cell";
  }
  return out;
}

std::vector<std::int64_t> Verifier::cellCharacter(int blockIndex) {
  auto mats = cellModuleMatrices(table(), leftCells(), blockIndex);
  return moduleCharacter(mats, W_.n(), characterTable().classes());
}

ModulesReport Verifier::verifyModuleStructure() {
  ModulesReport rep;
  const CellPartition& kl = leftCells();
  const CharacterTable& ct = characterTable();
  rep.cellsChecked = kl.blockCount();
  rep.allMatch = true;
  for (int b = 0; b < kl.blockCount(); ++b) {
    const auto& cell = kl.blocks[b];
    std::vector<DominoTableau> tabs = distinctRightTableaux(cell);

    // Predicted: shapes of the distinct right tableaux (multiplicity-free).
    std::vector<std::vector<int>> predicted;
    for (const auto& t : tabs) predicted.push_back(t.shape().parts());
    std::sort(predicted.begin(), predicted.end());

    // Computed: decompose the cell character, map bipartitions to shapes.
    std::vector<std::vector<int>> computed;
    bool multiplicityFree = true;
    try {
      auto chi = cellCharacter(b);
      for (auto [row, mult] : ct.decompose(chi)) {
        if (mult != 1) multiplicityFree = false;
        Partition p = bipartitionToPartition(ct.rowLabel(row), wp_.r);
        for (std::int64_t i = 0; i < mult; ++i) computed.push_back(p.parts());
      }
    } catch (const std::exception& e) {
      rep.allMatch = false;
      rep.mismatches.push_back("cell " + std::to_string(b) + ": " + e.what());
      continue;
    }
    std::sort(computed.begin(), computed.end());

    bool ok = multiplicityFree && predicted == computed;
    // Per-tableau element counts equal the constituent degrees.
    if (ok) {
      std::map<std::string, int> fibre;
      for (int x : cell) ++fibre[gR(W_.element(x), wp_.r).right.key()];
      for (const auto& t : tabs) {
        Symbol s = partitionToSymbol(t.shape(), wp_);
        Bipartition bp = symbolToBipartition(s);
        if (fibre[t.key()] != ct.degree(bp)) {
          ok = false;
          rep.mismatches.push_back("cell " + std::to_string(b) + ": fibre of " +
                                   t.shape().toString() + " is " +
                                   std::to_string(fibre[t.key()]) + ", degree is " +
                                   std::to_string(ct.degree(bp)));
          break;
        }
      }
    } else {
      std::ostringstream out;
      out << "cell " << b << ": predicted";
      for (const auto& sp : predicted) out << " " << Partition(sp).toString();
      out << " computed";
      for (const auto& sp : computed) out << " " << Partition(sp).toString();
      if (!multiplicityFree) out << " (not multiplicity-free)";
      rep.mismatches.push_back(out.str());
    }
    if (!ok) rep.allMatch = false;
  }
  return rep;
}

HomReport Verifier::verifyHomDims() {
  HomReport rep;
  const CellPartition& kl = leftCells();
  const CharacterTable& ct = characterTable();
  int B = kl.blockCount();
  std::vector<std::vector<std::int64_t>> chi(B);
  for (int b = 0; b < B; ++b) chi[b] = cellCharacter(b);

  std::int64_t order = ct.groupOrder();
  rep.match = true;
  rep.total = 0;
  for (int b1 = 0; b1 < B && rep.match; ++b1)
    for (int b2 = 0; b2 < B; ++b2) {
      std::int64_t num = 0;
      for (size_t c = 0; c < ct.classes().size(); ++c)
        num += ct.classes()[c].size * chi[b1][c] * chi[b2][c];
      if (num % order != 0) {
        rep.match = false;
        rep.firstDiff = "non-integer Hom dimension";
        break;
      }
      std::int64_t hom = num / order;
      // Explicit inversion count.
      std::vector<bool> in2(W_.size(), false);
      for (int x : kl.blocks[b2]) in2[x] = true;
      std::int64_t inter = 0;
      std::int64_t involutions = 0;
      for (int x : kl.blocks[b1]) {
        if (in2[W_.inverseOf(x)]) ++inter;
        if (b1 == b2 && W_.inverseOf(x) == x) ++involutions;
      }
      rep.total += inter;
      if (hom != inter) {
        rep.match = false;
        rep.firstDiff = "dim Hom(" + std::to_string(b1) + "," + std::to_string(b2) + ") = " +
                        std::to_string(hom) + " but |C ∩ C'^{-1}| = " + std::to_string(inter);
        break;
      }
      if (b1 == b2 && inter != involutions) {
        rep.match = false;
        rep.firstDiff = "diagonal intersection differs from the involution count in cell " +
                        std::to_string(b1);
        break;
      }
    }
  if (rep.match && rep.total != static_cast<std::int64_t>(W_.size())) {
    rep.match = false;
    rep.firstDiff = "total intersection sum " + std::to_string(rep.total) + " != |W|";
  }
  return rep;
}

PropertyReport Verifier::verifyProperties(int maxNAsymptotic) {
  AsymptoticData ad = asymptoticData(table(), maxNAsymptotic);
  return checkProperties(table(), ad);
}

CheckOutcome Verifier::verifyConstructible() {
  CheckOutcome out;
  std::set<ShapeMultiset> expected = constructibleSet(W_.n(), wp_);
  std::set<ShapeMultiset> computed;
  const CellPartition& kl = leftCells();
  for (int b = 0; b < kl.blockCount(); ++b) {
    ShapeMultiset shapes;
    for (const auto& t : distinctRightTableaux(kl.blocks[b]))
      shapes.push_back(t.shape().parts());
    std::sort(shapes.begin(), shapes.end());
    computed.insert(std::move(shapes));
  }
  if (expected != computed) {
    out.pass = false;
    std::ostringstream msg;
    msg << "constructible closure has " << expected.size() << " multisets, cells give "
        << computed.size();
    out.detail = msg.str();
  }
  return out;
}

VerificationReport Verifier::runAll(bool withProperties, int maxNAsymptotic) {
  VerificationReport rep;
  rep.n = W_.n();
  rep.a = wt_.a;
  rep.b = wt_.b;
  rep.wp = wp_;
  rep.conjecture = verifyConjecture();
  rep.modules = verifyModuleStructure();
  rep.hom = verifyHomDims();
  if (withProperties && W_.n() <= maxNAsymptotic)
    rep.properties = verifyProperties(maxNAsymptotic);
  return rep;
}

}  // namespace dkl
