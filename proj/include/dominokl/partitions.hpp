#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dkl {

// An integer partition: weakly decreasing positive parts. The empty
// partition is allowed. Coordinates throughout the library are 1-based:
// row i from the top, column j from the left, so the diagram of (2,1)
// has squares (1,1),(1,2),(2,1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // The staircase (r, r-1, ..., 1); r = 0 gives the empty partition.
  static Partition staircase(int r);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const;  // number of squares

  // 1-based row length; 0 past the last row.
  int part(int i) const;
  // 1-based column length; 0 past the last column.
  int colLength(int j) const;
  bool contains(int i, int j) const;

  Partition transpose() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;  // container order only
  std::string toString() const;  // e.g. "[4,3,3,1]"

 private:
  std::vector<int> parts_;
};

// Canonical order used by every enumeration: descending lexicographic on
// parts, so (4) < (3,1) < (2,2) < ... reads as (4) first.
bool lexBefore(const Partition& a, const Partition& b);

struct RankDecomposition {
  int rank = 0;
  Partition core;
  int dominoes = 0;  // n with |p| = 2n + rank(rank+1)/2

  bool operator==(const RankDecomposition&) const = default;
};

// Rank and 2-core of a partition via the parity classes of beta-numbers.
// The 2-core of any partition is a staircase; rank = its side length.
RankDecomposition rankAndCore(const Partition& p);

struct Bipartition {
  Partition d;
  Partition f;

  bool operator==(const Bipartition&) const = default;
  std::string toString() const;  // e.g. "([1,1,1],[1])"
};

// All partitions of m, canonical order.
std::vector<Partition> partitionsOf(int m);

// P_r(n): partitions of 2n + r(r+1)/2 whose 2-core is the rank-r
// staircase, canonical order.
std::vector<Partition> rankPartitions(int n, int r);

// P^2(n): ordered pairs (d,f) with |d|+|f| = n; |d| descending, then
// canonical order on d, then on f.
std::vector<Bipartition> enumerateBipartitions(int n);

}  // namespace dkl
