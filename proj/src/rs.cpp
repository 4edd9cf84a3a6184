#include "dominokl/rs.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace dkl {

namespace {

bool isHorizontal(const Domino& d) { return d.first.row == d.second.row; }

// Occupancy bookkeeping for one insertion in progress.
struct Board {
  std::set<Square> occ;

  bool covered(Square s) const { return occ.count(s) != 0; }
  void place(Square a, Square b) {
    if (!occ.insert(a).second || !occ.insert(b).second)
      throw std::logic_error("insertion placed a domino on an occupied square");
  }
  int rowLen(int i) const {
    int len = 0;
    while (covered({i, len + 1})) ++len;
    return len;
  }
  int colLen(int j) const {
    int len = 0;
    while (covered({len + 1, j})) ++len;
    return len;
  }
  int rowCount(int i) const {
    int c = 0;
    for (Square s : occ)
      if (s.row == i) ++c;
    return c;
  }
  int colCount(int j) const {
    int c = 0;
    for (Square s : occ)
      if (s.col == j) ++c;
    return c;
  }
};

}  // namespace

DominoTableau insertValue(const DominoTableau& t, int signedValue) {
  int v = std::abs(signedValue);
  if (v == 0) throw std::invalid_argument("insertValue: value must be nonzero");
  if (t.hasLabel(v)) throw std::invalid_argument("insertValue: label already present");

  std::vector<Domino> smaller, larger;
  for (const auto& d : t.dominoes()) (d.label < v ? smaller : larger).push_back(d);

  Board board;
  std::vector<Domino> placed;
  for (int i = 1; i <= t.core().rows(); ++i)
    for (int j = 1; j <= t.core().part(i); ++j) board.occ.insert({i, j});
  for (const auto& d : smaller) {
    board.place(d.first, d.second);
    placed.push_back(d);
  }

  // The new domino enters at the end of row 1 (positive) or column 1
  // (negative) of the smaller-labels subtableau.
  if (signedValue > 0) {
    int c = board.rowLen(1);
    Domino d{v, {1, c + 1}, {1, c + 2}};
    board.place(d.first, d.second);
    placed.push_back(d);
  } else {
    int c = board.colLen(1);
    Domino d{v, {c + 1, 1}, {c + 2, 1}};
    board.place(d.first, d.second);
    placed.push_back(d);
  }

  for (const auto& d : larger) {
    bool c1 = board.covered(d.first);
    bool c2 = board.covered(d.second);
    Domino moved = d;
    if (!c1 && !c2) {
      // stays put
    } else if (c1 && c2) {
      if (isHorizontal(d)) {
        int i = d.first.row + 1;
        int len = board.rowCount(i);
        if (board.rowLen(i) != len)
          throw std::logic_error("insertion: bumped into a ragged row");
        moved = {d.label, {i, len + 1}, {i, len + 2}};
      } else {
        int j = d.first.col + 1;
        int len = board.colCount(j);
        if (board.colLen(j) != len)
          throw std::logic_error("insertion: bumped into a ragged column");
        moved = {d.label, {len + 1, j}, {len + 2, j}};
      }
    } else {
      if (!c1 || c2) throw std::logic_error("insertion: half cover not on the leading square");
      if (isHorizontal(d)) {
        // horizontal (i,j),(i,j+1) with (i,j) covered twists to vertical
        moved = {d.label, d.second, {d.second.row + 1, d.second.col}};
      } else {
        // vertical (i,j),(i+1,j) with (i,j) covered twists to horizontal
        moved = {d.label, d.second, {d.second.row, d.second.col + 1}};
      }
    }
    board.place(moved.first, moved.second);
    placed.push_back(moved);
  }
  return DominoTableau::fromDominoes(t.rank(), placed);
}

namespace {

std::vector<Square> addedSquares(const DominoTableau& before, const DominoTableau& after) {
  std::set<Square> pre;
  Partition ps = before.shape();
  for (int i = 1; i <= ps.rows(); ++i)
    for (int j = 1; j <= ps.part(i); ++j) pre.insert({i, j});
  std::vector<Square> out;
  Partition qs = after.shape();
  for (int i = 1; i <= qs.rows(); ++i)
    for (int j = 1; j <= qs.part(i); ++j)
      if (!pre.count({i, j})) out.push_back({i, j});
  return out;
}

}  // namespace

std::vector<TableauPair> gRTrace(const SignedPermutation& w, int rank) {
  DominoTableau left = DominoTableau::coreOnly(rank);
  std::vector<Domino> record;
  std::vector<TableauPair> steps;
  for (int k = 1; k <= w.n(); ++k) {
    DominoTableau next = insertValue(left, w.window()[k - 1]);
    auto added = addedSquares(left, next);
    if (added.size() != 2)
      throw std::logic_error("insertion did not add exactly one domino of squares");
    record.push_back({k, added[0], added[1]});
    left = std::move(next);
    steps.push_back({left, DominoTableau::fromDominoes(rank, record)});
  }
  if (steps.empty()) steps.push_back({left, DominoTableau::coreOnly(rank)});
  return steps;
}

TableauPair gR(const SignedPermutation& w, int rank) { return gRTrace(w, rank).back(); }

namespace {

// Everything needed to undo the last insertion into S: the inserted signed
// value and the tableau before it.
struct UndoResult {
  int signedValue = 0;
  DominoTableau before;
};

using SquareSet = std::set<Square>;

SquareSet squaresOf(const DominoTableau& t) {
  SquareSet out;
  Partition p = t.shape();
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.insert({i, j});
  return out;
}

// DFS over the possible pre-insertion positions of the labels above v,
// processed in decreasing order. sigma/v fixed by the caller; every leaf
// candidate is verified by replaying the forward insertion.
struct Unwinder {
  const DominoTableau& S;
  int v;
  int sigma;
  SquareSet preShape;             // shape of the sought S_{k-1}
  std::vector<int> labelsAbove;   // descending
  std::map<int, Domino> chosen;   // label -> pre-insertion position
  SquareSet fixedSquares;         // squares of labels < v (immutable between steps)
  std::vector<UndoResult> found;

  Unwinder(const DominoTableau& s, int value, int sign) : S(s), v(value), sigma(sign) {}

  // Squares of all labels < b (plus v itself when b > v) at S-positions,
  // together with the core: the state the forward pass saw before
  // re-adding label b.
  SquareSet stateBefore(int b) const {
    SquareSet out;
    for (int i = 1; i <= S.core().rows(); ++i)
      for (int j = 1; j <= S.core().part(i); ++j) out.insert({i, j});
    for (const auto& d : S.dominoes())
      if (d.label < b) {
        out.insert(d.first);
        out.insert(d.second);
      }
    return out;
  }

  bool overlapsChosen(const Domino& p) const {
    for (const auto& [l, d] : chosen)
      for (Square s : {d.first, d.second})
        if (s == p.first || s == p.second) return true;
    return false;
  }

  bool insidePreShape(const Domino& p) const {
    return preShape.count(p.first) && preShape.count(p.second);
  }

  bool overlapsFixed(const Domino& p) const {
    return fixedSquares.count(p.first) || fixedSquares.count(p.second);
  }

  void tryLeaf() {
    std::vector<Domino> ds;
    for (const auto& d : S.dominoes()) {
      if (d.label < v) ds.push_back(d);
      else if (d.label > v) ds.push_back(chosen.at(d.label));
    }
    try {
      DominoTableau cand = DominoTableau::fromDominoes(S.rank(), ds);
      if (squaresOf(cand) != preShape) return;
      DominoTableau replay = insertValue(cand, sigma * v);
      if (replay == S) found.push_back({sigma * v, cand});
    } catch (const std::exception&) {
      // not a valid pre-tableau; dead branch
    }
  }

  void step(size_t idx) {
    if (!found.empty()) return;  // first hit wins; uniqueness checked by tests
    if (idx == labelsAbove.size()) {
      tryLeaf();
      return;
    }
    int b = labelsAbove[idx];
    SquareSet state = stateBefore(b);
    const Domino& c = S.domino(b);
    auto consider = [&](const Domino& p) {
      if (!insidePreShape(p) || overlapsFixed(p) || overlapsChosen(p)) return;
      chosen[b] = p;
      step(idx + 1);
      chosen.erase(b);
    };

    // (a) stayed put
    consider(c);
    // (b) translated back up a row: c sits at the end of its row in state
    if (isHorizontal(c) && c.first.row >= 2) {
      int i = c.first.row;
      int len = 0;
      while (state.count({i, len + 1})) ++len;
      if (c.first.col == len + 1) {
        for (int j = 1; state.count({i - 1, j + 1}); ++j)
          if (state.count({i - 1, j}))
            consider({b, {i - 1, j}, {i - 1, j + 1}});
      }
    }
    // (c) translated back left a column
    if (!isHorizontal(c) && c.first.col >= 2) {
      int j = c.first.col;
      int len = 0;
      while (state.count({len + 1, j})) ++len;
      if (c.first.row == len + 1) {
        for (int i = 1; state.count({i + 1, j - 1}); ++i)
          if (state.count({i, j - 1}))
            consider({b, {i, j - 1}, {i + 1, j - 1}});
      }
    }
    // (d) twisted from horizontal: vertical (i,j+1),(i+1,j+1) came from
    // (i,j),(i,j+1) with (i,j) covered and (i,j+1) free
    if (!isHorizontal(c) && c.first.col >= 2) {
      Square p1{c.first.row, c.first.col - 1};
      if (state.count(p1) && !state.count(c.first)) consider({b, p1, c.first});
    }
    // (e) twisted from vertical: horizontal (i+1,j),(i+1,j+1) came from
    // (i,j),(i+1,j) with (i,j) covered and (i+1,j) free
    if (isHorizontal(c) && c.first.row >= 2) {
      Square p1{c.first.row - 1, c.first.col};
      if (state.count(p1) && !state.count(c.first)) consider({b, p1, c.first});
    }
  }
};

UndoResult unInsertStep(const DominoTableau& S, const std::vector<Square>& removed) {
  SquareSet pre = squaresOf(S);
  for (Square s : removed) {
    if (!pre.erase(s)) throw std::invalid_argument("recording squares outside the shape");
  }
  for (int v : S.labels()) {
    SquareSet below;  // squares of labels < v plus the core
    for (int i = 1; i <= S.core().rows(); ++i)
      for (int j = 1; j <= S.core().part(i); ++j) below.insert({i, j});
    for (const auto& d : S.dominoes())
      if (d.label < v) {
        below.insert(d.first);
        below.insert(d.second);
      }
    const Domino& dv = S.domino(v);
    for (int sigma : {+1, -1}) {
      // The inserted domino never moves, so its position must be the
      // entry position for its sign.
      Square a, b;
      if (sigma > 0) {
        int len = 0;
        while (below.count({1, len + 1})) ++len;
        a = {1, len + 1};
        b = {1, len + 2};
      } else {
        int len = 0;
        while (below.count({len + 1, 1})) ++len;
        a = {len + 1, 1};
        b = {len + 2, 1};
      }
      if (!(dv.first == a && dv.second == b)) continue;
      Unwinder u(S, v, sigma);
      u.preShape = pre;
      u.fixedSquares = below;
      for (const auto& d : S.dominoes())
        if (d.label > v) u.labelsAbove.push_back(d.label);
      std::sort(u.labelsAbove.rbegin(), u.labelsAbove.rend());
      u.step(0);
      if (!u.found.empty()) return u.found.front();
    }
  }
  throw std::invalid_argument("pair is not in the image of the insertion map");
}

}  // namespace

SignedPermutation gRInverse(const TableauPair& pair) {
  if (pair.left.rank() != pair.right.rank())
    throw std::invalid_argument("gRInverse: rank mismatch");
  if (!(pair.left.shape() == pair.right.shape()))
    throw std::invalid_argument("gRInverse: shape mismatch");
  if (!isComplete(pair.left) || !isComplete(pair.right))
    throw std::invalid_argument("gRInverse: labels must be exactly 1..n");
  int n = pair.left.dominoCount();
  if (pair.right.dominoCount() != n) throw std::invalid_argument("gRInverse: size mismatch");

  DominoTableau S = pair.left;
  std::vector<int> window(n, 0);
  for (int k = n; k >= 1; --k) {
    const Domino& rec = pair.right.domino(k);
    UndoResult undo = unInsertStep(S, {rec.first, rec.second});
    window[k - 1] = undo.signedValue;
    S = std::move(undo.before);
  }
  if (S.dominoCount() != 0) throw std::logic_error("gRInverse: leftover dominoes");
  return SignedPermutation(std::move(window));
}

}  // namespace dkl
