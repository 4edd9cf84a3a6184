#include <doctest.h>

#include <random>
#include <set>

#include "dominokl/partitions.hpp"

using namespace dkl;

namespace {

// Independent oracle: strip removable dominoes greedily; the terminal
// shape is the 2-core whatever the removal order.
Partition deletionCore(Partition p, std::mt19937* rng = nullptr) {
  while (true) {
    std::vector<std::pair<int, bool>> moves;  // (row, horizontal?)
    for (int i = 1; i <= p.rows(); ++i) {
      if (p.part(i) >= 2 && p.part(i) - 2 >= p.part(i + 1)) moves.push_back({i, true});
      if (p.part(i) >= 1 && p.part(i) == p.part(i + 1) && p.part(i + 1) - 1 >= p.part(i + 2))
        moves.push_back({i, false});
    }
    if (moves.empty()) return p;
    auto [row, horizontal] = rng ? moves[(*rng)() % moves.size()] : moves.front();
    std::vector<int> parts = p.parts();
    if (horizontal) {
      parts[row - 1] -= 2;
    } else {
      parts[row - 1] -= 1;
      parts[row] -= 1;
    }
    p = Partition(parts);
  }
}

}  // namespace

TEST_CASE("rank and core worked examples") {
  auto rc = rankAndCore(Partition({4, 3, 3, 1}));
  CHECK(rc.rank == 2);
  CHECK(rc.core == Partition({2, 1}));
  CHECK(rc.dominoes == 4);

  auto empty = rankAndCore(Partition{});
  CHECK(empty.rank == 0);
  CHECK(empty.core == Partition{});
  CHECK(empty.dominoes == 0);

  auto one = rankAndCore(Partition({1}));
  CHECK(one.rank == 1);
  CHECK(one.core == Partition({1}));
  CHECK(one.dominoes == 0);
}

TEST_CASE("rank agrees with the greedy deletion oracle") {
  std::mt19937 rng(20240811);
  for (int m = 0; m <= 14; ++m)
    for (const auto& p : partitionsOf(m)) {
      Partition core = deletionCore(p);
      auto rc = rankAndCore(p);
      CHECK(core == rc.core);
      // order independence: a few random deletion orders
      for (int trial = 0; trial < 3; ++trial) CHECK(deletionCore(p, &rng) == core);
      CHECK(p.size() == 2 * rc.dominoes + rc.rank * (rc.rank + 1) / 2);
    }
}

TEST_CASE("transpose examples and involution") {
  CHECK(Partition({4, 3, 2, 2}).transpose() == Partition({4, 4, 2, 1}));
  CHECK(Partition{}.transpose() == Partition{});
  CHECK(Partition({3}).transpose() == Partition({1, 1, 1}));
  for (int m = 0; m <= 16; ++m)
    for (const auto& p : partitionsOf(m)) {
      CHECK(p.transpose().transpose() == p);
      CHECK(rankAndCore(p.transpose()).rank == rankAndCore(p).rank);
    }
}

TEST_CASE("rank partition enumeration") {
  auto two0 = rankPartitions(2, 0);
  std::vector<Partition> expected = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                     Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
  CHECK(two0 == expected);
  for (const auto& p : two0) CHECK(rankAndCore(p).core == Partition{});

  CHECK(rankPartitions(0, 2) == std::vector<Partition>{Partition({2, 1})});

  auto four2 = rankPartitions(4, 2);
  bool found = false;
  for (const auto& p : four2) found |= (p == Partition({4, 3, 2, 2}));
  CHECK(found);
}

TEST_CASE("bipartition enumeration") {
  auto one = enumerateBipartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Bipartition{Partition({1}), Partition{}});
  CHECK(one[1] == Bipartition{Partition{}, Partition({1})});
  CHECK(enumerateBipartitions(2).size() == 5);

  bool found = false;
  for (const auto& bp : enumerateBipartitions(4))
    found |= (bp == Bipartition{Partition({1, 1, 1}), Partition({1})});
  CHECK(found);
}

TEST_CASE("P_r(n) and P^2(n) are equinumerous") {
  for (int n = 0; n <= 8; ++n) {
    size_t bps = enumerateBipartitions(n).size();
    for (int r = 0; r <= 5; ++r) CHECK(rankPartitions(n, r).size() == bps);
  }
}
