#include <doctest.h>

#include <stdexcept>
#include <map>
#include <set>

#include "dominokl/rs.hpp"

using namespace dkl;

namespace {

SignedPermutation negated(const SignedPermutation& w) {
  std::vector<int> v = w.window();
  for (int& x : v) x = -x;
  return SignedPermutation(std::move(v));  // w * w_0 (w_0 is central)
}

}  // namespace

TEST_CASE("signed permutation basics") {
  auto e = SignedPermutation::identity(3);
  auto w = SignedPermutation::parse("-3 1 -2");
  CHECK(w.toString() == "-3 1 -2");
  CHECK(compose(w, w.inverse()) == e);
  CHECK(compose(w.inverse(), w) == e);
  CHECK(compose(e, w) == w);

  auto t = SignedPermutation::parse("-1");
  CHECK(compose(t, t) == SignedPermutation::identity(1));

  // closure of the generators gives the whole of W_2
  std::set<std::vector<int>> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(2)};
  seen.insert(frontier[0].window());
  while (!frontier.empty()) {
    auto w2 = frontier.back();
    frontier.pop_back();
    for (int g = 0; g < 2; ++g) {
      auto next = leftGen(g, w2);
      if (seen.insert(next.window()).second) frontier.push_back(next);
    }
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("length statistics") {
  CHECK(lengthStats(SignedPermutation::identity(3)) == LengthStats{0, 0, 0});
  CHECK(lengthStats(SignedPermutation::parse("-1")) == LengthStats{1, 1, 0});
  auto w0 = SignedPermutation::longestElement(2);
  auto st = lengthStats(w0);
  CHECK(st.ell == 4);
  CHECK(st.ell_t == 2);
  CHECK(st.ell_s == 2);
  CHECK(compose(w0, w0) == SignedPermutation::identity(2));

  // BFS distances over the Cayley graph agree with the formula on W_3
  const WGroup& W = wgroup(3);
  std::vector<int> dist(W.size(), -1);
  std::vector<int> todo{W.identityId()};
  dist[W.identityId()] = 0;
  for (size_t i = 0; i < todo.size(); ++i) {
    int x = todo[i];
    for (int g = 0; g < W.numGens(); ++g) {
      int y = W.leftMul(g, x);
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        todo.push_back(y);
      }
    }
  }
  for (int x = 0; x < W.size(); ++x) CHECK(dist[x] == W.length(x));
}

TEST_CASE("bruhat order on W_2 matches the subword oracle") {
  const WGroup& W = wgroup(2);
  // subword property: y <= x iff some reduced word of x has a subword for y.
  // Brute force: generate all subwords of one reduced word of x and reduce.
  for (int x = 0; x < W.size(); ++x) {
    auto word = W.reducedWord(x);
    std::set<int> below;
    int m = static_cast<int>(word.size());
    for (int mask = 0; mask < (1 << m); ++mask) {
      int cur = W.identityId();
      for (int i = m - 1; i >= 0; --i)
        if (mask & (1 << i)) cur = W.leftMul(word[i], cur);
      below.insert(cur);
    }
    for (int y = 0; y < W.size(); ++y) CHECK(W.bruhatLeq(y, x) == (below.count(y) != 0));
  }
  CHECK(W.bruhatLeq(W.identityId(), W.longestId()));
}

TEST_CASE("golden insertions") {
  auto p12 = gR(SignedPermutation::parse("1 2"), 0);
  CHECK(p12.left == p12.right);
  CHECK(p12.left == DominoTableau::fromDominoes(0, {{1, {1, 1}, {1, 2}}, {2, {1, 3}, {1, 4}}}));

  auto pm1 = gR(SignedPermutation::parse("-1"), 0);
  CHECK(pm1.left == pm1.right);
  CHECK(pm1.left == DominoTableau::fromDominoes(0, {{1, {1, 1}, {2, 1}}}));

  auto empty = gR(SignedPermutation(std::vector<int>{}), 2);
  CHECK(empty.left == DominoTableau::coreOnly(2));
  CHECK(empty.right == DominoTableau::coreOnly(2));
}

TEST_CASE("bijectivity on small groups") {
  for (int n = 0; n <= 3; ++n) {
    const WGroup& W = wgroup(n);
    for (int r = 0; r <= 3; ++r) {
      std::set<std::pair<std::string, std::string>> images;
      for (int x = 0; x < W.size(); ++x) {
        auto pair = gR(W.element(x), r);
        CHECK(pair.left.shape() == pair.right.shape());
        CHECK(isComplete(pair.left));
        CHECK(isComplete(pair.right));
        images.insert({pair.left.key(), pair.right.key()});
      }
      CHECK(images.size() == static_cast<size_t>(W.size()));  // injective
      long long sumSquares = 0;
      for (const auto& p : rankPartitions(n, r)) {
        long long c = static_cast<long long>(enumerateTableaux(p).size());
        sumSquares += c * c;
      }
      CHECK(sumSquares == W.size());  // image is exactly the same-shape pairs
    }
  }
}

TEST_CASE("roundtrip through the inverse") {
  for (int n = 0; n <= 3; ++n) {
    const WGroup& W = wgroup(n);
    for (int r = 0; r <= 2; ++r)
      for (int x = 0; x < W.size(); ++x) {
        auto pair = gR(W.element(x), r);
        CHECK(gRInverse(pair) == W.element(x));
      }
  }
  CHECK(gRInverse({DominoTableau::coreOnly(1), DominoTableau::coreOnly(1)}) ==
        SignedPermutation(std::vector<int>{}));
}

TEST_CASE("inverse permutation swaps the tableaux") {
  const WGroup& W = wgroup(4);
  for (int r = 0; r <= 3; ++r)
    for (int x = 0; x < W.size(); ++x) {
      auto pair = gR(W.element(x), r);
      auto swapped = gR(W.element(W.inverseOf(x)), r);
      CHECK(swapped.left == pair.right);
      CHECK(swapped.right == pair.left);
    }
}

TEST_CASE("longest element duality: T_r(w w0) is the transpose of T_r(w)") {
  const WGroup& W = wgroup(4);
  for (int r = 0; r <= 2; ++r)
    for (int x = 0; x < W.size(); ++x) {
      auto pair = gR(W.element(x), r);
      auto dual = gR(negated(W.element(x)), r);
      CHECK(dual.right == pair.right.transpose());
    }
}

TEST_CASE("appending n, n-1, ..., m+1 places horizontal dominoes on the first rows") {
  for (int r = 0; r <= 2; ++r)
    for (int m = 0; m <= 3; ++m) {
      const WGroup& Wm = wgroup(m);
      for (int l = 1; l <= 2; ++l) {
        int n = m + l;
        for (int xi = 0; xi < Wm.size(); ++xi) {
          std::vector<int> window = Wm.element(xi).window();
          for (int v = n; v > m; --v) window.push_back(v);
          DominoTableau parent = gR(Wm.element(xi), r).right;
          DominoTableau child = gR(SignedPermutation(window), r).right;
          // dominoes 1..m unchanged, m+i horizontal at the end of row i
          for (int k = 1; k <= m; ++k) CHECK(child.domino(k) == parent.domino(k));
          Partition ps = parent.shape();
          for (int i = 1; i <= l; ++i) {
            const Domino& d = child.domino(m + i);
            CHECK(d.first == Square{i, ps.part(i) + 1});
            CHECK(d.second == Square{i, ps.part(i) + 2});
          }
        }
      }
    }
}

TEST_CASE("insertion traces") {
  auto steps = gRTrace(SignedPermutation::parse("2 -1"), 0);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].left == DominoTableau::fromDominoes(0, {{2, {1, 1}, {1, 2}}}));
  CHECK(steps[1].left == DominoTableau::fromDominoes(0, {{1, {1, 1}, {2, 1}}, {2, {1, 2}, {2, 2}}}));
  CHECK(steps[1].right ==
        DominoTableau::fromDominoes(0, {{1, {1, 1}, {1, 2}}, {2, {2, 1}, {2, 2}}}));
}

TEST_CASE("gRInverse rejects malformed pairs") {
  auto a = gR(SignedPermutation::parse("1 2"), 0);
  auto b = gR(SignedPermutation::parse("-1 -2"), 0);
  CHECK_THROWS_AS(gRInverse({a.left, b.right}), std::invalid_argument);
}
