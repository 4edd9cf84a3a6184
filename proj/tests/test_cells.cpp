#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dominokl/cells.hpp"
#include "dominokl/json_io.hpp"

using namespace dkl;

TEST_CASE("combinatorial cells of W_1 at rank 0") {
  const WGroup& W = wgroup(1);
  auto irr = combinatorialCells(W, 0, true);
  REQUIRE(irr.size() == 2);
  std::set<Partition> shapes;
  for (const auto& c : irr) {
    REQUIRE(c.tableaux.size() == 1);
    shapes.insert(c.tableaux[0].shape());
  }
  CHECK(shapes == std::set<Partition>{Partition({2}), Partition({1, 1})});

  // the lone open cycle of each tableau is core-open, so the reducible
  // partition is the same two singletons
  auto red = combinatorialCells(W, 0, false);
  CHECK(red.size() == 2);
}

TEST_CASE("reducible cells of W_2 at rank 0 (the s=1 regime)") {
  const WGroup& W = wgroup(2);
  auto red = combinatorialCells(W, 0, false);
  REQUIRE(red.size() == 4);
  std::multiset<size_t> sizes;
  for (const auto& c : red) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 1, 3, 3});
  // {e} and {w_0} are their own cells
  for (const auto& c : red)
    if (c.members.size() == 1) {
      int x = c.members[0];
      CHECK((x == W.identityId() || x == W.longestId()));
    }
}

TEST_CASE("reducible cells refine into irreducible ones") {
  for (int n = 1; n <= 5; ++n) {
    const WGroup& W = wgroup(n);
    for (int r = 0; r <= 3; ++r) {
      auto irr = combinatorialCells(W, r, true);
      auto red = combinatorialCells(W, r, false);
      // both genuinely partition W
      auto checkPartition = [&](const std::vector<CombinatorialCell>& cells) {
        std::set<int> seen;
        for (const auto& c : cells)
          for (int x : c.members) CHECK(seen.insert(x).second);
        CHECK(static_cast<int>(seen.size()) == W.size());
      };
      checkPartition(irr);
      checkPartition(red);
      // each irreducible cell lies inside one reducible cell
      for (const auto& ic : irr) {
        std::set<int> owners;
        for (const auto& rc : red)
          if (std::binary_search(rc.members.begin(), rc.members.end(), ic.members[0]))
            for (int x : ic.members) {
              CHECK(std::binary_search(rc.members.begin(), rc.members.end(), x));
              owners.insert(&rc - red.data());
            }
        CHECK(owners.size() == 1);
      }
      // irreducible cells biject with tableaux
      int tabs = 0;
      for (const auto& p : rankPartitions(n, r)) tabs += static_cast<int>(enumerateTableaux(p).size());
      CHECK(static_cast<int>(irr.size()) == tabs);
    }
  }
}

TEST_CASE("predicted modules") {
  const WGroup& W = wgroup(2);
  for (int r = 0; r <= 1; ++r) {
    for (const auto& c : combinatorialCells(W, r, true)) CHECK(predictedModule(c).size() == 1);
    for (const auto& c : combinatorialCells(W, r, false)) {
      int k = static_cast<int>(openNonCoreCycles(c.tableaux[0]).size());
      CHECK(predictedModule(c).size() == (size_t{1} << k));
    }
  }
}

TEST_CASE("intersection counts agree across all three routes") {
  for (int n = 1; n <= 3; ++n) {
    const WGroup& W = wgroup(n);
    for (int r = 0; r <= 2; ++r)
      for (bool irr : {true, false}) {
        auto cells = combinatorialCells(W, r, irr);
        long long total = 0;
        // intersectionCount throws if the subset/shape/extended-cycle
        // routes ever disagree
        for (const auto& c1 : cells)
          for (const auto& c2 : cells) total += intersectionCount(W, c1, c2);
        CHECK(total == W.size());
      }
  }
}

TEST_CASE("diagonal intersections count involutions") {
  const WGroup& W = wgroup(3);
  for (int r = 0; r <= 1; ++r)
    for (bool irr : {true, false})
      for (const auto& c : combinatorialCells(W, r, irr)) {
        long long involutions = 0;
        for (int x : c.members)
          if (W.inverseOf(x) == x) ++involutions;
        CHECK(intersectionCount(W, c, c) == involutions);
      }
}

TEST_CASE("disjoint-shapes diagnostic flags an artificial union") {
  const WGroup& W = wgroup(2);
  auto irr = combinatorialCells(W, 0, true);
  // two distinct cells with the same tableau shape (2,2)
  std::vector<CombinatorialCell> sharing;
  for (const auto& c : irr)
    if (c.tableaux[0].shape() == Partition({2, 2})) sharing.push_back(c);
  REQUIRE(sharing.size() == 2);
  auto bad = disjointShapesDiagnostic(sharing);
  CHECK_FALSE(bad.pass);
  auto fine = disjointShapesDiagnostic({irr[0]});
  CHECK(fine.pass);
}

TEST_CASE("conjecture holds on W_2 at the known weights") {
  for (auto [a, b] : {std::pair<long long, long long>{1, 1}, {1, 3}, {2, 5}, {2, 1}, {1, 2}}) {
    Verifier v(2, {a, b});
    auto rep = v.verifyConjecture();
    INFO("a=", a, " b=", b, " diff=", rep.firstDiff);
    CHECK(rep.match);
    if (v.params().integerS) {
      REQUIRE(rep.disjointShapes.has_value());
      CHECK(rep.disjointShapes->pass);
    }
  }
}

TEST_CASE("module structure on W_2") {
  for (auto [a, b] : {std::pair<long long, long long>{2, 1}, {1, 1}, {1, 2}, {2, 5}}) {
    Verifier v(2, {a, b});
    auto rep = v.verifyModuleStructure();
    INFO("a=", a, " b=", b,
         " first=", rep.mismatches.empty() ? std::string("-") : rep.mismatches[0]);
    CHECK(rep.allMatch);
  }
}

TEST_CASE("hom dimensions on W_2") {
  for (auto [a, b] : {std::pair<long long, long long>{1, 1}, {1, 2}, {2, 5}}) {
    Verifier v(2, {a, b});
    auto rep = v.verifyHomDims();
    INFO("a=", a, " b=", b, " diff=", rep.firstDiff);
    CHECK(rep.match);
    CHECK(rep.total == 8);
  }
}

TEST_CASE("constructible closure equals the cell shape multisets on W_2") {
  for (auto [a, b] : {std::pair<long long, long long>{2, 1}, {1, 1}, {2, 3}, {1, 2}, {1, 3}}) {
    Verifier v(2, {a, b});
    auto out = v.verifyConstructible();
    INFO("a=", a, " b=", b, " detail=", out.detail);
    CHECK(out.pass);
  }
}

TEST_CASE("full report on W_2 serializes deterministically") {
  Verifier v(2, {1, 1});
  auto rep = v.runAll(false);
  CHECK(rep.pass());
  Json j = toJson(rep);
  CHECK(j.begin().key() == "params");
  CHECK(j["conjecture"]["match"] == true);
  CHECK(j["timings"].is_null());
  // a second run produces byte-identical output
  Verifier v2(2, {1, 1});
  CHECK(toJson(v2.runAll(false)).dump(2) == j.dump(2));
  CHECK(reportCsvRow(rep).find("FAIL") == std::string::npos);
}

TEST_CASE("json serializations") {
  Laurent p = Laurent::monomial(1, -2) + Laurent::monomial(3, 0);
  CHECK(toJson(p).dump() == "[[-2,1],[0,3]]");
  CHECK(toJson(Partition({4, 3, 3, 1})).dump() == "[4,3,3,1]");
  CHECK(toJson(Bipartition{Partition({1, 1}), Partition({2})}).dump() ==
        "{\"d\":[1,1],\"f\":[2]}");
  // tableau round-trip across every shape of a small group
  for (const auto& t : enumerateTableaux(3, 1)) CHECK(tableauFromJson(toJson(t)) == t);
  // dominoes are listed by label with lexicographically sorted squares
  auto j = toJson(gR(SignedPermutation::parse("2 -1 3"), 0).right);
  int last = 0;
  for (const auto& d : j["dominoes"]) {
    CHECK(d["label"].get<int>() == last + 1);
    last = d["label"].get<int>();
    CHECK(d["squares"][0] <= d["squares"][1]);
  }
}

TEST_CASE("trivial and sign cells carry the predicted one-dimensional modules") {
  Verifier v(2, {1, 2});
  const auto& kl = v.leftCells();
  const auto& W = v.group();
  CharacterTable ct(2);
  for (int b = 0; b < kl.blockCount(); ++b) {
    if (kl.blocks[b] == std::vector<int>{W.identityId()}) {
      auto mats = cellModuleMatrices(v.table(), kl, b);
      auto chi = moduleCharacter(mats, 2, ct.classes());
      for (auto val : chi) CHECK(val == 1);  // trivial character
    }
    if (kl.blocks[b] == std::vector<int>{W.longestId()}) {
      auto mats = cellModuleMatrices(v.table(), kl, b);
      auto chi = moduleCharacter(mats, 2, ct.classes());
      CHECK(chi == ct.row(Bipartition{Partition{}, Partition({1, 1})}));  // sign
    }
  }
}
