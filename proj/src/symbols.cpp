#include "dominokl/symbols.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dkl {

std::string Symbol::toString() const {
  std::ostringstream out;
  auto entry = [&](long long v, bool withEps) {
    if (!withEps || epsNum == 0) return std::to_string(v);
    return std::to_string(v) + "+" + std::to_string(epsNum) + "/" + std::to_string(epsDen);
  };
  out << "(";
  for (size_t i = 0; i < top.size(); ++i) out << (i ? " " : "") << entry(top[i], true);
  out << " | ";
  for (size_t i = 0; i < bottom.size(); ++i) out << (i ? " " : "") << entry(bottom[i], false);
  out << ")";
  return out.str();
}

namespace {

void checkSymbol(const Symbol& s) {
  auto strictlyIncreasing = [](const std::vector<long long>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] >= v[i + 1]) return false;
    return v.empty() || v[0] >= 0;
  };
  if (!strictlyIncreasing(s.top) || !strictlyIncreasing(s.bottom))
    throw std::invalid_argument("symbol rows must be strictly increasing and non-negative");
  if (s.defect() < 0) throw std::invalid_argument("symbol defect must be non-negative here");
}

}  // namespace

Symbol shiftSymbol(const Symbol& s) {
  checkSymbol(s);
  Symbol out = s;
  out.top.clear();
  out.bottom.clear();
  out.top.push_back(0);
  for (size_t i = 0; i < s.top.size(); ++i) out.top.push_back(s.top[i] + 1);
  out.bottom.push_back(0);
  for (size_t i = 0; i < s.bottom.size(); ++i) out.bottom.push_back(s.bottom[i] + 1);
  return out;
}

Symbol normalizeSymbol(Symbol s) {
  checkSymbol(s);
  auto shiftedForm = [](const std::vector<long long>& v) {
    if (v.empty() || v[0] != 0) return false;
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i] < 1) return false;
    return true;
  };
  while (shiftedForm(s.top) && shiftedForm(s.bottom)) {
    std::vector<long long> t(s.top.begin() + 1, s.top.end());
    std::vector<long long> b(s.bottom.begin() + 1, s.bottom.end());
    for (auto& v : t) --v;
    for (auto& v : b) --v;
    s.top = std::move(t);
    s.bottom = std::move(b);
  }
  return s;
}

Symbol partitionToSymbol(const Partition& p, const WeightParams& wp) {
  auto rc = rankAndCore(p);
  int k = p.rows();
  // p-sharp: pad with one zero when rank and part count share parity.
  int kk = (rc.rank % 2 == k % 2) ? k + 1 : k;
  std::vector<long long> beta;
  for (int i = 1; i <= kk; ++i) beta.push_back(p.part(i) + (kk - i));
  std::vector<long long> lambda, mu;
  for (long long b : beta) {
    if (b % 2 == 0) lambda.push_back(b / 2);
    else mu.push_back((b - 1) / 2);
  }
  std::sort(lambda.begin(), lambda.end());
  std::sort(mu.begin(), mu.end());
  Symbol s;
  s.epsNum = wp.epsNum;
  s.epsDen = wp.epsDen;
  s.top = std::move(lambda);
  s.bottom = std::move(mu);
  if (s.defect() != rc.rank + 1)
    throw std::logic_error("symbol defect does not equal rank + 1");
  return s;
}

Bipartition symbolToBipartition(const Symbol& s) {
  checkSymbol(s);
  auto collect = [](const std::vector<long long>& v) {
    std::vector<int> parts;
    for (size_t i = 0; i < v.size(); ++i) {
      long long val = v[i] - static_cast<long long>(i);
      if (val < 0) throw std::invalid_argument("symbol row is not increasing fast enough");
      if (val > 0) parts.push_back(static_cast<int>(val));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
  };
  return Bipartition{collect(s.top), collect(s.bottom)};
}

Partition bipartitionToPartition(const Bipartition& bp, int r) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  int t = r + 1;
  int nd = bp.d.rows(), nf = bp.f.rows();
  int bottomLen = std::max(nf, nd - t);
  int topLen = bottomLen + t;
  Symbol s;
  for (int i = 1; i <= topLen; ++i)
    s.top.push_back(bp.d.part(topLen - i + 1) + (i - 1));
  for (int i = 1; i <= bottomLen; ++i)
    s.bottom.push_back(bp.f.part(bottomLen - i + 1) + (i - 1));
  // invert partitionToSymbol: interleave the doubled rows as beta-numbers
  std::vector<long long> beta;
  for (long long l : s.top) beta.push_back(2 * l);
  for (long long m : s.bottom) beta.push_back(2 * m + 1);
  std::sort(beta.rbegin(), beta.rend());
  int kk = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= kk; ++i) {
    long long part = beta[i - 1] - (kk - i);
    if (part < 0) throw std::logic_error("negative part reconstructing partition");
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  Partition p(std::move(parts));
  if (rankAndCore(p).rank != r) throw std::logic_error("reconstructed partition has wrong rank");
  return p;
}

Bipartition signOnBipartition(const Bipartition& bp) {
  return Bipartition{bp.f.transpose(), bp.d.transpose()};
}

Symbol signOnSymbol(const Symbol& s) {
  checkSymbol(s);
  long long tau = 0;
  if (!s.top.empty()) tau = std::max(tau, s.top.back());
  if (!s.bottom.empty()) tau = std::max(tau, s.bottom.back());
  std::vector<bool> inTop(tau + 1, false), inBottom(tau + 1, false);
  for (long long m : s.bottom) inTop[tau - m] = true;    // entries to EXCLUDE from top
  for (long long l : s.top) inBottom[tau - l] = true;    // entries to exclude from bottom
  Symbol out;
  out.epsNum = s.epsNum;
  out.epsDen = s.epsDen;
  for (long long v = 0; v <= tau; ++v) {
    if (!inTop[v]) out.top.push_back(v);
    if (!inBottom[v]) out.bottom.push_back(v);
  }
  return normalizeSymbol(out);
}

std::vector<Partition> truncatedInductionShapes(const Partition& p, int l,
                                                const WeightParams& wp) {
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  auto rc = rankAndCore(p);
  if (rc.rank != wp.r) throw std::invalid_argument("partition rank does not match the weight");
  int r = wp.r;
  std::vector<int> parts;
  for (int i = 1; i <= std::max(l + 1, p.rows()); ++i) parts.push_back(p.part(i));

  std::vector<int> pI = parts;
  for (int i = 0; i < l; ++i) pI[i] += 2;
  std::vector<Partition> out{Partition(pI)};

  bool twoOutputs = parts[l - 1] == parts[l] && ((parts[l - 1] + r - l) % 2 == 0) &&
                    wp.epsZero();
  if (twoOutputs) {
    std::vector<int> pII = parts;
    for (int i = 0; i + 1 < l; ++i) pII[i] += 2;
    pII[l - 1] += 1;
    pII[l] += 1;
    out.push_back(Partition(pII));
  }
  for (const auto& q : out)
    if (rankAndCore(q).rank != r) throw std::logic_error("induced shape changed rank");
  return out;
}

std::set<std::vector<int>> inducedShapeSet(const std::set<std::vector<int>>& shapes, int l,
                                           int r) {
  std::set<std::vector<int>> out;
  for (const auto& sp : shapes) {
    Partition p(sp);
    std::vector<int> parts;
    for (int i = 1; i <= std::max(l + 1, p.rows()); ++i) parts.push_back(p.part(i));
    std::vector<int> pI = parts;
    for (int i = 0; i < l; ++i) pI[i] += 2;
    out.insert(Partition(pI).parts());
    if (parts[l - 1] == parts[l] && ((parts[l - 1] + r - l) % 2 == 0)) {
      std::vector<int> pII = parts;
      for (int i = 0; i + 1 < l; ++i) pII[i] += 2;
      pII[l - 1] += 1;
      pII[l] += 1;
      out.insert(Partition(pII).parts());
    }
  }
  return out;
}

std::set<ShapeMultiset> constructibleSet(int n, const WeightParams& wp) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Partition core = Partition::staircase(wp.r);
  std::vector<std::set<ShapeMultiset>> level(n + 1);
  level[0].insert(ShapeMultiset{core.parts()});

  auto addWithTranspose = [](std::set<ShapeMultiset>& dst, const ShapeMultiset& m) {
    dst.insert(m);
    ShapeMultiset t;
    for (const auto& sp : m) t.push_back(Partition(sp).transpose().parts());
    std::sort(t.begin(), t.end());
    dst.insert(t);
  };

  for (int total = 1; total <= n; ++total) {
    for (int m = 0; m < total; ++m) {
      int l = total - m;
      for (const auto& c : level[m]) {
        ShapeMultiset induced;
        for (const auto& sp : c)
          for (const auto& q : truncatedInductionShapes(Partition(sp), l, wp))
            induced.push_back(q.parts());
        std::sort(induced.begin(), induced.end());
        addWithTranspose(level[total], induced);
      }
    }
  }
  return level[n];
}

}  // namespace dkl
