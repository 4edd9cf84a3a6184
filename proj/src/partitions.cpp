#include "dominokl/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dkl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::staircase(int r) {
  std::vector<int> parts;
  for (int i = r; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::out_of_range("row index is 1-based");
  return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::colLength(int j) const {
  if (j < 1) throw std::out_of_range("column index is 1-based");
  int len = 0;
  while (len < rows() && parts_[len] >= j) ++len;
  return len;
}

bool Partition::contains(int i, int j) const {
  return i >= 1 && j >= 1 && i <= rows() && parts_[i - 1] >= j;
}

Partition Partition::transpose() const {
  std::vector<int> cols;
  int width = parts_.empty() ? 0 : parts_[0];
  for (int j = 1; j <= width; ++j) cols.push_back(colLength(j));
  return Partition(std::move(cols));
}

std::string Partition::toString() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

bool lexBefore(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

RankDecomposition rankAndCore(const Partition& p) {
  int k = p.rows();
  // Beta-numbers p_i + (k - i) split by parity; sliding each class down
  // to its minimal configuration leaves the beta-set of the 2-core.
  std::vector<int> evens, odds;
  for (int i = 1; i <= k; ++i) {
    int beta = p.part(i) + (k - i);
    (beta % 2 == 0 ? evens : odds).push_back(beta);
  }
  std::vector<int> coreBeta;
  for (size_t i = 0; i < evens.size(); ++i) coreBeta.push_back(2 * static_cast<int>(i));
  for (size_t i = 0; i < odds.size(); ++i) coreBeta.push_back(2 * static_cast<int>(i) + 1);
  std::sort(coreBeta.rbegin(), coreBeta.rend());
  std::vector<int> coreParts;
  for (int i = 1; i <= k; ++i) {
    int part = coreBeta[i - 1] - (k - i);
    if (part > 0) coreParts.push_back(part);
  }
  Partition core(std::move(coreParts));
  int r = core.rows();
  if (core != Partition::staircase(r)) throw std::logic_error("2-core is not a staircase");
  RankDecomposition out;
  out.rank = r;
  out.dominoes = (p.size() - core.size()) / 2;
  out.core = std::move(core);
  return out;
}

std::string Bipartition::toString() const { return "(" + d.toString() + "," + f.toString() + ")"; }

namespace {

void partitionsRec(int m, int maxPart, std::vector<int>& acc, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int next = std::min(m, maxPart); next >= 1; --next) {
    acc.push_back(next);
    partitionsRec(m - next, next, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitionsOf(int m) {
  if (m < 0) throw std::invalid_argument("partitionsOf: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  partitionsRec(m, m == 0 ? 1 : m, acc, out);
  return out;
}

std::vector<Partition> rankPartitions(int n, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("rankPartitions: negative argument");
  int total = 2 * n + r * (r + 1) / 2;
  std::vector<Partition> out;
  for (auto& p : partitionsOf(total)) {
    auto rc = rankAndCore(p);
    if (rc.rank == r) out.push_back(p);
  }
  return out;
}

std::vector<Bipartition> enumerateBipartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerateBipartitions: negative size");
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (auto& d : partitionsOf(k))
      for (auto& f : partitionsOf(n - k)) out.push_back(Bipartition{d, f});
  return out;
}

}  // namespace dkl
