#include "dominokl/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dkl {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Centralizer order of a signed cycle type (alpha, beta) in W_n.
std::int64_t centralizerOrder(const Partition& alpha, const Partition& beta) {
  auto contrib = [](const Partition& p) {
    std::map<int, int> mult;
    for (int part : p.parts()) ++mult[part];
    std::int64_t z = 1;
    for (auto [k, m] : mult) {
      for (int i = 0; i < m; ++i) z *= 2 * k;
      z *= factorial(m);
    }
    return z;
  };
  return contrib(alpha) * contrib(beta);
}

// Representative: blocks of consecutive values, positive cycles first.
SignedPermutation classRepresentative(int n, const Partition& alpha, const Partition& beta) {
  std::vector<int> window(n);
  int base = 0;
  auto placeCycle = [&](int k, bool negative) {
    // cycle base+1 -> base+2 -> ... -> base+k -> ±(base+1)
    for (int i = 1; i < k; ++i) window[base + i - 1] = base + i + 1;
    window[base + k - 1] = negative ? -(base + 1) : (base + 1);
    base += k;
  };
  for (int k : alpha.parts()) placeCycle(k, false);
  for (int k : beta.parts()) placeCycle(k, true);
  return SignedPermutation(window);
}

std::vector<int> wordFor(const SignedPermutation& w0) {
  SignedPermutation w = w0;
  std::vector<int> word;
  int guard = 0;
  while (!w.isIdentity()) {
    int ell = lengthStats(w).ell;
    int n = w.n();
    bool moved = false;
    for (int g = 0; g < n; ++g) {
      SignedPermutation gw = leftGen(g, w);
      if (lengthStats(gw).ell < ell) {
        word.push_back(g);
        w = gw;
        moved = true;
        break;
      }
    }
    if (!moved || ++guard > 10000) throw std::logic_error("descent stripping failed");
  }
  return word;
}

// Border strips of size k removable from p, via beta-numbers: each gives
// (resulting partition, height).
std::vector<std::pair<Partition, int>> stripRemovals(const Partition& p, int k) {
  std::vector<std::pair<Partition, int>> out;
  int m = p.rows() + k;  // enough beta-numbers
  std::vector<int> beta;
  for (int i = 1; i <= m; ++i) beta.push_back(p.part(i) + (m - i));
  std::vector<bool> present(p.part(1) + m + 1, false);
  for (int b : beta) present[b] = true;
  for (int b : beta) {
    if (b - k < 0 || present[b - k]) continue;
    // height: number of beta-numbers strictly between b-k and b
    int height = 0;
    for (int c : beta)
      if (c > b - k && c < b) ++height;
    std::vector<int> nb = beta;
    for (int& c : nb)
      if (c == b) c = b - k;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
      int part = nb[i - 1] - (m - i);
      if (part > 0) parts.push_back(part);
    }
    out.push_back({Partition(std::move(parts)), height});
  }
  return out;
}

struct MNKey {
  std::vector<int> d, f;
  size_t cycleIdx;
  bool operator<(const MNKey& o) const {
    return std::tie(d, f, cycleIdx) < std::tie(o.d, o.f, o.cycleIdx);
  }
};

// Cycles processed one at a time: (length, negative?).
std::int64_t mnValue(const Partition& d, const Partition& f,
                     const std::vector<std::pair<int, bool>>& cycles, size_t idx,
                     std::map<MNKey, std::int64_t>& memo) {
  if (idx == cycles.size()) return (d.rows() == 0 && f.rows() == 0) ? 1 : 0;
  MNKey key{d.parts(), f.parts(), idx};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto [k, negative] = cycles[idx];
  std::int64_t total = 0;
  for (const auto& [rest, height] : stripRemovals(d, k)) {
    std::int64_t sign = (height % 2 == 0) ? 1 : -1;
    total += sign * mnValue(rest, f, cycles, idx + 1, memo);
  }
  for (const auto& [rest, height] : stripRemovals(f, k)) {
    std::int64_t sign = (height % 2 == 0) ? 1 : -1;
    if (negative) sign = -sign;
    total += sign * mnValue(d, rest, cycles, idx + 1, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

std::vector<ConjugacyClass> conjugacyClasses(int n) {
  if (n < 1) throw std::invalid_argument("conjugacyClasses: n must be >= 1");
  std::vector<ConjugacyClass> out;
  std::int64_t order = (std::int64_t{1} << n) * factorial(n);
  std::int64_t total = 0;
  for (int k = n; k >= 0; --k)
    for (const auto& alpha : partitionsOf(k))
      for (const auto& beta : partitionsOf(n - k)) {
        ConjugacyClass c;
        c.positiveType = alpha;
        c.negativeType = beta;
        c.size = order / centralizerOrder(alpha, beta);
        c.word = wordFor(classRepresentative(n, alpha, beta));
        total += c.size;
        out.push_back(std::move(c));
      }
  if (total != order) throw std::logic_error("class sizes do not sum to |W|");
  return out;
}

CharacterTable::CharacterTable(int n, int maxN) : n_(n) {
  if (n < 1) throw std::invalid_argument("CharacterTable: n must be >= 1");
  if (n > maxN)
    throw ResourceError("character table for n=" + std::to_string(n) + " exceeds bound");
  classes_ = conjugacyClasses(n);
  rows_ = enumerateBipartitions(n);
  for (const auto& bp : rows_) {
    std::vector<std::int64_t> row;
    for (const auto& cls : classes_) {
      std::vector<std::pair<int, bool>> cycles;
      for (int k : cls.positiveType.parts()) cycles.push_back({k, false});
      for (int k : cls.negativeType.parts()) cycles.push_back({k, true});
      std::map<MNKey, std::int64_t> localMemo;
      row.push_back(mnValue(bp.d, bp.f, cycles, 0, localMemo));
    }
    table_.push_back(std::move(row));
  }
}

const std::vector<std::int64_t>& CharacterTable::row(const Bipartition& bp) const {
  return table_[rowIndex(bp)];
}

int CharacterTable::rowIndex(const Bipartition& bp) const {
  for (size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == bp) return static_cast<int>(i);
  throw std::invalid_argument("no such bipartition row");
}

std::int64_t CharacterTable::degree(const Bipartition& bp) const {
  const auto& r = row(bp);
  // identity class is (1^n, ()): find it
  for (size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].size == 1 && classes_[c].negativeType.rows() == 0) return r[c];
  throw std::logic_error("identity class not found");
}

std::int64_t CharacterTable::groupOrder() const {
  return (std::int64_t{1} << n_) * factorial(n_);
}

std::map<int, std::int64_t> CharacterTable::decompose(
    const std::vector<std::int64_t>& chi) const {
  if (chi.size() != classes_.size()) throw std::invalid_argument("character length mismatch");
  std::map<int, std::int64_t> out;
  std::int64_t order = groupOrder();
  for (size_t i = 0; i < rows_.size(); ++i) {
    std::int64_t num = 0;
    for (size_t c = 0; c < classes_.size(); ++c)
      num += classes_[c].size * chi[c] * table_[i][c];
    if (num % order != 0) throw std::invalid_argument("non-integer multiplicity");
    std::int64_t mult = num / order;
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult > 0) out[static_cast<int>(i)] = mult;
  }
  return out;
}

std::string CharacterTable::toCsv() const {
  std::ostringstream out;
  out << "bipartition";
  for (const auto& c : classes_) out << ",\"" << c.label() << ":" << c.size << "\"";
  out << "\n";
  for (size_t i = 0; i < rows_.size(); ++i) {
    out << '"' << rows_[i].toString() << '"';
    for (auto v : table_[i]) out << "," << v;
    out << "\n";
  }
  return out.str();
}

namespace {

IntMatrix matMul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool isIdentity(const IntMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

std::vector<std::int64_t> moduleCharacter(const std::map<int, IntMatrix>& gens, int n,
                                          const std::vector<ConjugacyClass>& classes) {
  if (static_cast<int>(gens.size()) != n) throw std::invalid_argument("need n generator matrices");
  size_t dim = gens.at(0).size();
  // Defining relations: involutions, braid of order 4 for (t,s_1), order 3
  // for adjacent s_i, commuting otherwise.
  for (const auto& [g, m] : gens)
    if (!isIdentity(matMul(m, m)))
      throw std::invalid_argument("generator matrix is not an involution");
  auto braidOk = [&](int g1, int g2, int order) {
    IntMatrix a = gens.at(g1), b = gens.at(g2);
    IntMatrix lhs = a, rhs = b;
    for (int i = 1; i < order; ++i) {
      lhs = matMul(lhs, i % 2 == 1 ? b : a);
      rhs = matMul(rhs, i % 2 == 1 ? a : b);
    }
    return lhs == rhs;
  };
  for (int g1 = 0; g1 < n; ++g1)
    for (int g2 = g1 + 1; g2 < n; ++g2) {
      int order = (g1 == 0 && g2 == 1) ? 4 : (g2 == g1 + 1 ? 3 : 2);
      if (!braidOk(g1, g2, order))
        throw std::invalid_argument("generator matrices violate a braid relation");
    }

  std::vector<std::int64_t> chi;
  for (const auto& cls : classes) {
    IntMatrix m(dim, std::vector<std::int64_t>(dim, 0));
    for (size_t i = 0; i < dim; ++i) m[i][i] = 1;
    for (int g : cls.word) m = matMul(m, gens.at(g));
    std::int64_t tr = 0;
    for (size_t i = 0; i < dim; ++i) tr += m[i][i];
    chi.push_back(tr);
  }
  return chi;
}

std::int64_t sytCount(const Partition& p) {
  // n! / product of hooks; computed multiplicatively to stay in range.
  int n = p.size();
  std::vector<std::int64_t> hooks;
  Partition t = p.transpose();
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      hooks.push_back((p.part(i) - j) + (t.part(j) - i) + 1);
  // divide n! by hooks with exact arithmetic
  std::vector<std::int64_t> numer;
  for (int i = 2; i <= n; ++i) numer.push_back(i);
  for (std::int64_t h : hooks) {
    for (auto& x : numer) {
      std::int64_t g = std::gcd(x, h);
      x /= g;
      h /= g;
      if (h == 1) break;
    }
    if (h != 1) throw std::logic_error("hook length division failed");
  }
  std::int64_t out = 1;
  for (auto x : numer) out *= x;
  return out;
}

}  // namespace dkl
