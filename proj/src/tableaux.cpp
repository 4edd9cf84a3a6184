#include "dominokl/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dkl {

namespace {

constexpr int kInfinity = 1 << 30;

bool adjacent(Square a, Square b) {
  return std::abs(a.row - b.row) + std::abs(a.col - b.col) == 1;
}

// Rebuild the row grid from a square -> label map; throws unless the
// squares form a Young diagram.
std::vector<std::vector<int>> gridFrom(const std::map<Square, int>& labels) {
  int maxRow = 0;
  for (const auto& [s, l] : labels) maxRow = std::max(maxRow, s.row);
  std::vector<int> rowLen(maxRow + 1, 0);
  for (const auto& [s, l] : labels) rowLen[s.row] = std::max(rowLen[s.row], s.col);
  std::vector<std::vector<int>> rows;
  int cells = 0;
  for (int i = 1; i <= maxRow; ++i) {
    if (i > 1 && rowLen[i] > rowLen[i - 1])
      throw std::invalid_argument("squares do not form a Young diagram");
    rows.emplace_back(rowLen[i], -1);
    cells += rowLen[i];
  }
  if (cells != static_cast<int>(labels.size()))
    throw std::invalid_argument("squares do not form a Young diagram");
  for (const auto& [s, l] : labels) rows[s.row - 1][s.col - 1] = l;
  return rows;
}

}  // namespace

bool isVariable(Square s, int rank) { return ((s.row + s.col) - rank) % 2 == 0; }

DominoTableau DominoTableau::coreOnly(int rank) {
  if (rank < 0) throw std::invalid_argument("rank must be non-negative");
  DominoTableau t;
  t.rank_ = rank;
  t.core_ = Partition::staircase(rank);
  for (int i = 1; i <= rank; ++i) t.rows_.emplace_back(t.core_.part(i), 0);
  return t;
}

DominoTableau DominoTableau::fromDominoes(int rank, const std::vector<Domino>& dominoes) {
  DominoTableau t = coreOnly(rank);
  std::map<Square, int> labels;
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= t.core_.part(i); ++j) labels[{i, j}] = 0;
  t.dominoes_ = dominoes;
  std::set<int> seen;
  for (auto& d : t.dominoes_) {
    if (d.second < d.first) std::swap(d.first, d.second);
    if (!adjacent(d.first, d.second)) throw std::invalid_argument("domino squares not adjacent");
    if (d.label < 1) throw std::invalid_argument("domino labels must be positive");
    if (!seen.insert(d.label).second) throw std::invalid_argument("duplicate domino label");
    for (Square s : {d.first, d.second}) {
      if (s.row < 1 || s.col < 1) throw std::invalid_argument("square out of the quadrant");
      if (!labels.emplace(s, d.label).second) throw std::invalid_argument("overlapping dominoes");
    }
  }
  std::sort(t.dominoes_.begin(), t.dominoes_.end(),
            [](const Domino& a, const Domino& b) { return a.label < b.label; });
  t.rows_ = gridFrom(labels);

  // Standardness: weak increase along rows and columns; an equal neighbor
  // is necessarily the second square of the same domino.
  Partition shape = t.shape();
  for (int i = 1; i <= shape.rows(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) {
      int l = t.labelAt({i, j});
      for (Square nb : {Square{i, j + 1}, Square{i + 1, j}})
        if (t.inShape(nb) && t.labelAt(nb) < l)
          throw std::invalid_argument("labels do not increase along rows and columns");
    }
  return t;
}

Partition DominoTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

bool DominoTableau::inShape(Square s) const {
  return s.row >= 1 && s.col >= 1 && s.row <= static_cast<int>(rows_.size()) &&
         s.col <= static_cast<int>(rows_[s.row - 1].size());
}

bool DominoTableau::inCore(Square s) const { return core_.contains(s.row, s.col); }

int DominoTableau::labelAt(Square s) const {
  if (!inShape(s)) throw std::out_of_range("labelAt: square outside the shape");
  return rows_[s.row - 1][s.col - 1];
}

int DominoTableau::boundaryLabel(Square s) const {
  if (s.row < 1 || s.col < 1) return 0;
  if (inCore(s)) return 0;
  if (!inShape(s)) return kInfinity;
  return rows_[s.row - 1][s.col - 1];
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  for (const auto& d : dominoes_) out.push_back(d.label);
  return out;
}

bool DominoTableau::hasLabel(int label) const {
  Domino probe{label, {0, 0}, {0, 0}};
  return std::binary_search(dominoes_.begin(), dominoes_.end(), probe,
                            [](const Domino& a, const Domino& b) { return a.label < b.label; });
}

const Domino& DominoTableau::domino(int label) const {
  Domino probe{label, {0, 0}, {0, 0}};
  auto it = std::lower_bound(dominoes_.begin(), dominoes_.end(), probe,
                             [](const Domino& a, const Domino& b) { return a.label < b.label; });
  if (it == dominoes_.end() || it->label != label)
    throw std::out_of_range("no such domino label");
  return *it;
}

Square DominoTableau::fixedSquare(int label) const {
  const Domino& d = domino(label);
  return isVariable(d.first, rank_) ? d.second : d.first;
}

Square DominoTableau::variableSquare(int label) const {
  const Domino& d = domino(label);
  return isVariable(d.first, rank_) ? d.first : d.second;
}

DominoTableau DominoTableau::transpose() const {
  std::vector<Domino> ds;
  for (const auto& d : dominoes_)
    ds.push_back({d.label, {d.first.col, d.first.row}, {d.second.col, d.second.row}});
  return fromDominoes(rank_, ds);
}

bool DominoTableau::operator<(const DominoTableau& o) const {
  if (rank_ != o.rank_) return rank_ < o.rank_;
  Partition a = shape(), b = o.shape();
  if (lexBefore(a, b)) return true;
  if (lexBefore(b, a)) return false;
  return rows_ < o.rows_;
}

std::string DominoTableau::key() const {
  std::ostringstream out;
  out << 'r' << rank_;
  for (const auto& row : rows_) {
    out << '|';
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
  }
  return out.str();
}

std::string DominoTableau::toGrid() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      if (row[j] == 0) out << "·";
      else out << row[j];
    }
    out << '\n';
  }
  return out.str();
}

bool isComplete(const DominoTableau& t) {
  int n = t.dominoCount();
  for (int k = 0; k < n; ++k)
    if (t.dominoes()[k].label != k + 1) return false;
  return true;
}

bool validateTableau(int rank, const std::vector<Domino>& dominoes) {
  try {
    DominoTableau t = DominoTableau::fromDominoes(rank, dominoes);
    return isComplete(t);
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<DominoTableau> enumerateTableaux(const Partition& p) {
  auto rc = rankAndCore(p);
  int n = rc.dominoes;
  std::vector<DominoTableau> out;
  if ((p.size() - rc.core.size()) % 2 != 0) return out;

  std::vector<int> rowLen(p.rows() + 2, 0);
  for (int i = 1; i <= rc.core.rows(); ++i) rowLen[i] = rc.core.part(i);
  std::vector<Domino> acc;

  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(DominoTableau::fromDominoes(rc.rank, acc));
      return;
    }
    for (int i = 1; i <= p.rows(); ++i) {
      int j = rowLen[i] + 1;
      // Horizontal at (i, j), (i, j+1).
      if (j + 1 <= p.part(i) && (i == 1 || rowLen[i - 1] >= j + 1)) {
        acc.push_back({next, {i, j}, {i, j + 1}});
        rowLen[i] += 2;
        self(self, next + 1);
        rowLen[i] -= 2;
        acc.pop_back();
      }
      // Vertical at (i, j), (i+1, j).
      if (rowLen[i + 1] == j - 1 && j <= p.part(i) && j <= p.part(i + 1) &&
          (i == 1 || rowLen[i - 1] >= j)) {
        acc.push_back({next, {i, j}, {i + 1, j}});
        rowLen[i] += 1;
        rowLen[i + 1] += 1;
        self(self, next + 1);
        rowLen[i] -= 1;
        rowLen[i + 1] -= 1;
        acc.pop_back();
      }
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DominoTableau> enumerateTableaux(int n, int rank) {
  std::vector<DominoTableau> out;
  for (const auto& p : rankPartitions(n, rank))
    for (auto& t : enumerateTableaux(p)) out.push_back(std::move(t));
  return out;
}

namespace {

// The image D'(k): the domino keeping the fixed square of D(k), with the
// other end moved to the unique variable neighbor (other than the current
// one) compatible with the surrounding labels.
Square pivotTarget(const DominoTableau& t, int label) {
  Square f = t.fixedSquare(label);
  Square v = t.variableSquare(label);
  std::vector<Square> fits;
  for (Square c : {Square{f.row - 1, f.col}, Square{f.row + 1, f.col},
                   Square{f.row, f.col - 1}, Square{f.row, f.col + 1}}) {
    if (c == v || c.row < 1 || c.col < 1 || t.inCore(c)) continue;
    bool ok = true;
    Square region[2] = {f, c};
    for (Square sq : region) {
      Square nbs[4] = {{sq.row - 1, sq.col},
                       {sq.row + 1, sq.col},
                       {sq.row, sq.col - 1},
                       {sq.row, sq.col + 1}};
      for (Square nb : nbs) {
        if (nb == f || nb == c || nb == v) continue;
        int m = t.boundaryLabel(nb);
        bool before = nb.row < sq.row || nb.col < sq.col;
        if (before ? !(m < label) : !(m > label)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) fits.push_back(c);
  }
  if (fits.size() != 1) {
    std::ostringstream err;
    err << "cycle pivot not determined for label " << label << " (" << fits.size()
        << " fits) in\n"
        << t.toGrid();
    throw std::logic_error(err.str());
  }
  return fits[0];
}

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Cycle> cycles(const DominoTableau& t) {
  const auto& ds = t.dominoes();
  int n = static_cast<int>(ds.size());
  std::map<int, Square> target;
  std::map<Square, int> variableOwner;
  std::map<int, int> pos;  // label -> index
  for (int i = 0; i < n; ++i) {
    variableOwner[t.variableSquare(ds[i].label)] = ds[i].label;
    pos[ds[i].label] = i;
  }
  DSU dsu(n);
  for (int i = 0; i < n; ++i) {
    int k = ds[i].label;
    target[k] = pivotTarget(t, k);
    auto it = variableOwner.find(target[k]);
    if (it != variableOwner.end()) dsu.unite(i, pos[it->second]);
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[dsu.find(i)].push_back(ds[i].label);

  std::vector<Cycle> out;
  for (auto& [root, labels] : classes) {
    Cycle c;
    c.labels = labels;
    std::sort(c.labels.begin(), c.labels.end());
    std::set<Square> vacated, claimed;
    for (int k : c.labels) vacated.insert(t.variableSquare(k));
    for (int k : c.labels) claimed.insert(target[k]);
    std::set<Square> sb, sf;
    for (Square s : vacated)
      if (!claimed.count(s)) sb.insert(s);
    for (Square s : claimed)
      if (!vacated.count(s)) sf.insert(s);
    if (sb.empty() && sf.empty()) {
      c.open = false;
    } else {
      if (sb.size() != 1 || sf.size() != 1)
        throw std::logic_error("open cycle without a unique boundary pair");
      c.open = true;
      c.sb = *sb.begin();
      c.sf = *sf.begin();
      if (t.rank() == 0) {
        c.coreOpen = (*c.sb == Square{1, 1});
      } else {
        Square b = *c.sb;
        c.coreOpen = t.inCore({b.row - 1, b.col}) || t.inCore({b.row + 1, b.col}) ||
                     t.inCore({b.row, b.col - 1}) || t.inCore({b.row, b.col + 1});
      }
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.labels[0] < b.labels[0]; });
  return out;
}

const Cycle& cycleOf(const std::vector<Cycle>& cs, int label) {
  for (const auto& c : cs)
    if (std::binary_search(c.labels.begin(), c.labels.end(), label)) return c;
  throw std::invalid_argument("no cycle contains this label");
}

std::vector<Cycle> openNonCoreCycles(const DominoTableau& t) {
  std::vector<Cycle> out;
  for (auto& c : cycles(t))
    if (c.open && !c.coreOpen) out.push_back(std::move(c));
  return out;
}

namespace {

DominoTableau applyMoves(const DominoTableau& t, const std::vector<Cycle>& cs) {
  std::map<int, std::pair<Square, Square>> moved;
  for (const auto& c : cs)
    for (int k : c.labels) moved[k] = {t.fixedSquare(k), pivotTarget(t, k)};
  std::vector<Domino> ds;
  for (const auto& d : t.dominoes()) {
    auto it = moved.find(d.label);
    if (it == moved.end()) ds.push_back(d);
    else ds.push_back({d.label, it->second.first, it->second.second});
  }
  return DominoTableau::fromDominoes(t.rank(), ds);
}

void checkIsCycleOf(const DominoTableau& t, const Cycle& c) {
  for (const auto& known : cycles(t))
    if (known.labels == c.labels) return;
  throw std::invalid_argument("not a cycle of this tableau");
}

}  // namespace

DominoTableau moveThrough(const DominoTableau& t, const Cycle& c) {
  checkIsCycleOf(t, c);
  if (c.open && c.coreOpen)
    throw std::invalid_argument("moving through a core-open cycle does not preserve the rank");
  return applyMoves(t, {c});
}

DominoTableau moveThroughSet(const DominoTableau& t, const std::vector<Cycle>& cs) {
  std::set<int> seen;
  for (const auto& c : cs) {
    checkIsCycleOf(t, c);
    if (!c.open || c.coreOpen)
      throw std::invalid_argument("moveThroughSet: only non-core open cycles are allowed");
    for (int k : c.labels)
      if (!seen.insert(k).second) throw std::invalid_argument("duplicate cycle in set");
  }
  return applyMoves(t, cs);
}

std::vector<ExtendedCycle> extendedOpenCycles(const DominoTableau& t, const DominoTableau& t2) {
  if (t.rank() != t2.rank()) throw std::invalid_argument("rank mismatch");
  if (!(t.shape() == t2.shape())) throw std::invalid_argument("shape mismatch");
  auto a = cycles(t);
  auto b = cycles(t2);
  int na = static_cast<int>(a.size());
  int total = na + static_cast<int>(b.size());
  DSU dsu(total);
  auto squaresOf = [](const DominoTableau& tab, const Cycle& c) {
    std::set<Square> out;
    for (int k : c.labels) {
      out.insert(tab.domino(k).first);
      out.insert(tab.domino(k).second);
    }
    return out;
  };
  std::map<Square, int> ownerInB;
  for (int j = 0; j < static_cast<int>(b.size()); ++j)
    for (Square s : squaresOf(t2, b[j])) ownerInB[s] = j;
  for (int i = 0; i < na; ++i)
    for (Square s : squaresOf(t, a[i])) {
      auto it = ownerInB.find(s);
      if (it != ownerInB.end()) dsu.unite(i, na + it->second);
    }
  std::map<int, ExtendedCycle> comps;
  std::map<int, bool> hasOpen;
  for (int i = 0; i < na; ++i) {
    int root = dsu.find(i);
    if (a[i].open) {
      comps[root].inFirst.push_back(a[i]);
      hasOpen[root] = true;
      if (a[i].coreOpen) comps[root].coreOpen = true;
    }
  }
  for (int j = 0; j < static_cast<int>(b.size()); ++j) {
    int root = dsu.find(na + j);
    if (b[j].open) {
      comps[root].inSecond.push_back(b[j]);
      hasOpen[root] = true;
      if (b[j].coreOpen) comps[root].coreOpen = true;
    }
  }
  std::vector<ExtendedCycle> out;
  for (auto& [root, ec] : comps)
    if (hasOpen[root]) out.push_back(std::move(ec));
  return out;
}

}  // namespace dkl
