#include "dominokl/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace dkl {

namespace {

long long gcdll(long long a, long long b) { return b == 0 ? a : gcdll(b, a % b); }

}  // namespace

std::string WeightParams::sString() const {
  long long g = gcdll(b, a);
  long long num = b / g, den = a / g;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::string WeightParams::epsString() const {
  return epsNum == 0 ? "0" : std::to_string(epsNum) + "/" + std::to_string(epsDen);
}

WeightParams weightParams(long long a, long long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("weights must be positive integers");
  WeightParams wp;
  wp.a = a;
  wp.b = b;
  long long q = b / a;  // floor, both positive
  wp.integerS = (b % a == 0);
  wp.r = static_cast<int>(wp.integerS ? q - 1 : q);
  long long num = b - q * a;
  long long g = num == 0 ? a : gcdll(num, a);
  wp.epsNum = num / g;
  wp.epsDen = a / g;
  return wp;
}

KLTable::KLTable(const WGroup& W, Weight wt, int maxN, const std::string& cacheDir)
    : W_(W), wt_(wt) {
  if (wt.a < 1 || wt.b < 1) throw std::invalid_argument("weights must be positive");
  if (W.n() > maxN)
    throw ResourceError("KL table for n=" + std::to_string(W.n()) +
                        " exceeds the configured bound " + std::to_string(maxN));
  buildBarRows();
  std::string path;
  if (!cacheDir.empty()) path = cacheDir + "/" + cacheFileName(W.n(), wt);
  bool loaded = !path.empty() && loadCache(path) && verifyTable();
  if (!loaded) {
    pRows_.assign(W_.size(), {});
    solveP();
    if (!path.empty()) saveCache(path);
  }
  hGen_.assign(W_.numGens(), std::vector<std::map<int, Laurent>>(W_.size()));
  hGenDone_.assign(W_.numGens(), std::vector<bool>(W_.size(), false));
}

// A loaded p-table is only accepted if it satisfies the defining
// properties: support inside the Bruhat interval, strictly negative
// degrees, and bar-invariance of every C_x.
bool KLTable::verifyTable() const {
  int N = W_.size();
  if (static_cast<int>(pRows_.size()) != N) return false;
  for (int x = 0; x < N; ++x) {
    for (const auto& [y, q] : pRows_[x]) {
      if (q.isZero() || q.maxDeg() >= 0) return false;
      if (!W_.bruhatLeq(y, x) || y == x) return false;
    }
    HeckeElt c = cElt(x);
    if (!(bar(c) == c)) return false;
  }
  return true;
}

HeckeElt KLTable::tMultiplyGen(int g, const HeckeElt& h) const {
  HeckeElt out;
  Laurent quad = Laurent::monomial(1, genWeightOf(g)) - Laurent::monomial(1, -genWeightOf(g));
  for (const auto& [z, c] : h) {
    int gz = W_.leftMul(g, z);
    if (W_.length(gz) > W_.length(z)) {
      out[gz] += c;
    } else {
      out[gz] += c;
      out[z] += quad * c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.isZero() ? out.erase(it) : std::next(it);
  return out;
}

HeckeElt KLTable::tMultiply(const HeckeElt& h1, const HeckeElt& h2) const {
  HeckeElt out;
  for (const auto& [z, c] : h1) {
    // T_z h2 along a reduced word of z, rightmost factor applied first.
    HeckeElt cur = h2;
    auto word = W_.reducedWord(z);
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = tMultiplyGen(*it, cur);
    for (const auto& [u, d] : cur) {
      out[u] += c * d;
      if (out[u].isZero()) out.erase(u);
    }
  }
  return out;
}

HeckeElt KLTable::bar(const HeckeElt& h) const {
  HeckeElt out;
  for (const auto& [z, c] : h) {
    Laurent cb = c.bar();
    for (const auto& [y, r] : barRows_[z]) {
      out[y] += cb * r;
      if (out[y].isZero()) out.erase(y);
    }
  }
  return out;
}

HeckeElt KLTable::cElt(int x) const {
  HeckeElt out;
  out[x] = Laurent::one();
  for (const auto& [y, q] : pRows_[x]) out[y] = q;
  return out;
}

void KLTable::buildBarRows() {
  int N = W_.size();
  barRows_.assign(N, {});
  for (int x : W_.byLength()) {
    if (W_.length(x) == 0) {
      barRows_[x][x] = Laurent::one();
      continue;
    }
    int g = 0;
    while (!W_.isLeftDescent(g, x)) ++g;
    int y = W_.leftMul(g, x);
    // bar(T_x) = (T_g - (v_g - v_g^{-1})) * bar(T_y)
    HeckeElt rest = tMultiplyGen(g, barRows_[y]);
    Laurent quad = Laurent::monomial(1, genWeightOf(g)) - Laurent::monomial(1, -genWeightOf(g));
    for (const auto& [z, c] : barRows_[y]) {
      rest[z] -= quad * c;
      if (rest[z].isZero()) rest.erase(z);
    }
    barRows_[x] = std::move(rest);
  }
}

void KLTable::solveP() {
  int N = W_.size();
  pRows_.assign(N, {});
  const Laurent one = Laurent::one();
  for (int x : W_.byLength()) {
    if (W_.length(x) == 0) continue;
    // Candidates y <= x, processed by decreasing length; acc[y] collects
    // sum over finished z of bar(p(z,x)) * r_{y,z}.
    std::vector<int> support;
    for (int y = 0; y < N; ++y)
      if (y != x && W_.bruhatLeq(y, x)) support.push_back(y);
    std::sort(support.begin(), support.end(),
              [&](int u, int v) { return W_.length(u) > W_.length(v); });

    std::map<int, Laurent> acc;
    auto push = [&](int z, const Laurent& pzx) {
      Laurent bp = pzx.bar();
      for (const auto& [y, r] : barRows_[z]) {
        if (y == z) continue;
        acc[y] += bp * r;
      }
    };
    push(x, one);
    for (int y : support) {
      Laurent q = acc.count(y) ? acc[y] : Laurent();
      Laurent pyx = q.negativePart();
      if (!(pyx - pyx.bar() == q))
        throw std::logic_error("KL solve: defect polynomial is not skew-invariant");
      if (!pyx.isZero()) {
        pRows_[x][y] = pyx;
        push(y, pyx);
      }
    }
  }
}

const Laurent& KLTable::p(int y, int x) const {
  static const Laurent zero;
  static const Laurent one = Laurent::one();
  if (y == x) return one;
  auto it = pRows_[x].find(y);
  return it == pRows_[x].end() ? zero : it->second;
}

const std::map<int, Laurent>& KLTable::hGenRow(int g, int x) const {
  if (hGenDone_[g][x]) return hGen_[g][x];
  HeckeElt prod = tMultiplyGen(g, cElt(x));
  Laurent vinv = Laurent::monomial(1, -genWeightOf(g));
  for (const auto& [y, c] : cElt(x)) {
    prod[y] += vinv * c;
    if (prod[y].isZero()) prod.erase(y);
  }
  // Triangular extraction of C-basis coefficients, longest support first.
  std::map<int, Laurent> result;
  while (!prod.empty()) {
    int z = prod.begin()->first;
    for (const auto& [u, c] : prod)
      if (W_.length(u) > W_.length(z)) z = u;
    Laurent h = prod[z];
    result[z] = h;
    for (const auto& [y, q] : cElt(z)) {
      prod[y] -= h * q;
      if (prod[y].isZero()) prod.erase(y);
    }
  }
  hGen_[g][x] = std::move(result);
  hGenDone_[g][x] = true;
  return hGen_[g][x];
}

std::map<int, Laurent> KLTable::hRow(int x, int y) const {
  HeckeElt prod = tMultiply(cElt(x), cElt(y));
  std::map<int, Laurent> result;
  while (!prod.empty()) {
    int z = prod.begin()->first;
    for (const auto& [u, c] : prod)
      if (W_.length(u) > W_.length(z)) z = u;
    Laurent h = prod[z];
    result[z] = h;
    for (const auto& [u, q] : cElt(z)) {
      prod[u] -= h * q;
      if (prod[u].isZero()) prod.erase(u);
    }
  }
  return result;
}

std::string KLTable::cacheFileName(int n, Weight wt) {
  return "kl-n" + std::to_string(n) + "-a" + std::to_string(wt.a) + "-b" +
         std::to_string(wt.b) + ".txt";
}

void KLTable::saveCache(const std::string& path) const {
  std::ostringstream out;
  out << "dominokl-klcache 1\n";
  out << "n " << W_.n() << " a " << wt_.a << " b " << wt_.b << "\n";
  for (int x = 0; x < W_.size(); ++x)
    for (const auto& [y, q] : pRows_[x]) {
      out << x << ' ' << y;
      for (const auto& [e, c] : q.terms()) out << ' ' << e << ':' << c;
      out << '\n';
    }
  std::ofstream f(path + ".tmp", std::ios::trunc);
  f << out.str();
  f.close();
  std::rename((path + ".tmp").c_str(), path.c_str());
}

bool KLTable::loadCache(const std::string& path) {
  try {
    return loadCacheImpl(path);
  } catch (const std::exception&) {
    return false;  // malformed cache: recompute
  }
}

bool KLTable::loadCacheImpl(const std::string& path) {
  std::ifstream f(path);
  if (!f) return false;
  std::string magic;
  int version = 0;
  f >> magic >> version;
  if (magic != "dominokl-klcache" || version != 1) return false;
  std::string kn, ka, kb;
  int n;
  long long a, b;
  f >> kn >> n >> ka >> a >> kb >> b;
  if (kn != "n" || n != W_.n() || a != wt_.a || b != wt_.b) return false;
  std::vector<std::map<int, Laurent>> rows(W_.size());
  std::string line;
  std::getline(f, line);
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream in(line);
    int x, y;
    if (!(in >> x >> y)) return false;
    if (x < 0 || x >= W_.size() || y < 0 || y >= W_.size()) return false;
    Laurent q;
    std::string tok;
    while (in >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) return false;
      int e = std::stoi(tok.substr(0, colon));
      long long c = std::stoll(tok.substr(colon + 1));
      q += Laurent::monomial(c, e);
    }
    rows[x][y] = std::move(q);
  }
  // Sanity: loaded rows must match the freshly computed table shape-wise;
  // trusting cache content blindly would poison every downstream result.
  pRows_ = std::move(rows);
  return true;
}

CellPartition klCells(const KLTable& t, CellPartition::Side side) {
  const WGroup& W = t.group();
  int N = W.size();
  // adj[x] lists z with z <=_side x (one generator step).
  std::vector<std::vector<int>> adj(N);
  auto addLeftEdges = [&](bool viaInverse) {
    for (int x = 0; x < N; ++x) {
      int src = viaInverse ? W.inverseOf(x) : x;
      for (int g = 0; g < W.numGens(); ++g)
        for (const auto& [z, h] : t.hGenRow(g, src)) {
          int dst = viaInverse ? W.inverseOf(z) : z;
          if (dst != x) adj[x].push_back(dst);
        }
    }
  };
  if (side == CellPartition::Side::Left) addLeftEdges(false);
  else if (side == CellPartition::Side::Right) addLeftEdges(true);
  else {
    addLeftEdges(false);
    addLeftEdges(true);
  }
  for (auto& v : adj) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Iterative Tarjan SCC.
  std::vector<int> comp(N, -1), low(N), num(N, -1), stk;
  std::vector<bool> onstk(N, false);
  int counter = 0, ncomp = 0;
  for (int root = 0; root < N; ++root) {
    if (num[root] != -1) continue;
    std::vector<std::pair<int, size_t>> frame{{root, 0}};
    while (!frame.empty()) {
      auto& [x, i] = frame.back();
      if (i == 0) {
        num[x] = low[x] = counter++;
        stk.push_back(x);
        onstk[x] = true;
      }
      if (i < adj[x].size()) {
        int y = adj[x][i++];
        if (num[y] == -1) frame.push_back({y, 0});
        else if (onstk[y]) low[x] = std::min(low[x], num[y]);
      } else {
        if (low[x] == num[x]) {
          while (true) {
            int y = stk.back();
            stk.pop_back();
            onstk[y] = false;
            comp[y] = ncomp;
            if (y == x) break;
          }
          ++ncomp;
        }
        int xdone = x;
        frame.pop_back();
        if (!frame.empty()) low[frame.back().first] = std::min(low[frame.back().first], low[xdone]);
      }
    }
  }

  CellPartition out;
  out.side = side;
  std::vector<std::vector<int>> raw(ncomp);
  for (int x = 0; x < N; ++x) raw[comp[x]].push_back(x);
  for (auto& b : raw) std::sort(b.begin(), b.end());
  std::sort(raw.begin(), raw.end());
  out.blocks = std::move(raw);
  out.blockOf.assign(N, -1);
  for (int b = 0; b < out.blockCount(); ++b)
    for (int x : out.blocks[b]) out.blockOf[x] = b;

  // reachable[j][i]: block i reachable from block j (i.e. i <= j).
  int B = out.blockCount();
  out.reachable.assign(B, std::vector<bool>(B, false));
  for (int b = 0; b < B; ++b) {
    std::vector<int> todo{b};
    out.reachable[b][b] = true;
    while (!todo.empty()) {
      int cur = todo.back();
      todo.pop_back();
      for (int x : out.blocks[cur])
        for (int z : adj[x]) {
          int bz = out.blockOf[z];
          if (!out.reachable[b][bz]) {
            out.reachable[b][bz] = true;
            todo.push_back(bz);
          }
        }
    }
  }
  return out;
}

std::map<int, IntMatrix> cellModuleMatrices(const KLTable& t, const CellPartition& left,
                                            int blockIndex) {
  if (left.side != CellPartition::Side::Left)
    throw std::invalid_argument("cell modules are defined on left cells");
  if (blockIndex < 0 || blockIndex >= left.blockCount())
    throw std::invalid_argument("no such cell");
  const auto& cell = left.blocks[blockIndex];
  int d = static_cast<int>(cell.size());
  std::map<int, int> posOf;
  for (int i = 0; i < d; ++i) posOf[cell[i]] = i;

  std::map<int, IntMatrix> out;
  for (int g = 0; g < t.group().numGens(); ++g) {
    IntMatrix m(d, std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i) {
      // column i: C_g e_{cell[i]} = sum_z h_{g,cell[i],z} e_z
      for (const auto& [z, h] : t.hGenRow(g, cell[i])) {
        auto it = posOf.find(z);
        if (it != posOf.end()) m[it->second][i] += h.evalAtOne();
      }
    }
    // Group generator action at v=1: g = identity - C_g.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[i][j] = (i == j ? 1 : 0) - m[i][j];
    out[g] = std::move(m);
  }
  return out;
}

AsymptoticData asymptoticData(const KLTable& t, int maxN) {
  const WGroup& W = t.group();
  if (W.n() > maxN)
    throw ResourceError("full h-table for n=" + std::to_string(W.n()) +
                        " exceeds the configured bound " + std::to_string(maxN));
  int N = W.size();
  AsymptoticData ad;
  ad.aVal.assign(N, 0);
  ad.delta.assign(N, 0);
  ad.nz.assign(N, 0);

  // Full structure-constant table, built per y by length induction on x
  // entirely in the C-basis: for x = g∘x' with a left ascent from x',
  //   C_x C_y = C_g (C_{x'} C_y) - sum_{z != x} h_{g,x',z} (C_z C_y).
  std::map<std::tuple<int, int, int>, Laurent> h;
  for (int y = 0; y < N; ++y) {
    std::vector<std::map<int, Laurent>> vec(N);  // C_x C_y in the C-basis
    for (int x : W.byLength()) {
      if (W.length(x) == 0) {
        vec[x][y] = Laurent::one();
        continue;
      }
      int g = 0;
      while (!W.isLeftDescent(g, x)) ++g;
      int xp = W.leftMul(g, x);
      std::map<int, Laurent> acc;
      for (const auto& [w, c] : vec[xp])
        for (const auto& [v, hv] : t.hGenRow(g, w)) {
          acc[v] += c * hv;
          if (acc[v].isZero()) acc.erase(v);
        }
      const auto& row = t.hGenRow(g, xp);
      if (!(row.count(x) && row.at(x) == Laurent::one()))
        throw std::logic_error("C_g C_{x'} is not monic in C_x");
      for (const auto& [z, m] : row) {
        if (z == x) continue;
        for (const auto& [v, c] : vec[z]) {
          acc[v] -= m * c;
          if (acc[v].isZero()) acc.erase(v);
        }
      }
      vec[x] = std::move(acc);
    }
    for (int x = 0; x < N; ++x)
      for (const auto& [z, q] : vec[x]) h[{x, y, z}] = q;
  }

  for (const auto& [key, poly] : h) {
    int z = std::get<2>(key);
    ad.aVal[z] = std::max(ad.aVal[z], poly.maxDeg());
  }
  for (int z = 0; z < N; ++z) {
    const Laurent& pz = t.p(W.identityId(), z);
    if (pz.isZero()) throw std::logic_error("p(1,z) vanished");
    ad.delta[z] = -pz.maxDeg();
    ad.nz[z] = pz.leadingCoeff();
    if (ad.aVal[z] == ad.delta[z]) ad.duflo.push_back(z);
  }
  for (const auto& [key, poly] : h) {
    auto [x, y, z] = key;
    std::int64_t g = poly.coeff(ad.aVal[z]);
    if (g != 0) ad.gamma[{x, y, W.inverseOf(z)}] = g;
  }
  return ad;
}

bool PropertyReport::allPass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

PropertyReport checkProperties(const KLTable& t, const AsymptoticData& ad) {
  const WGroup& W = t.group();
  int N = W.size();
  CellPartition left = klCells(t, CellPartition::Side::Left);
  CellPartition right = klCells(t, CellPartition::Side::Right);
  CellPartition two = klCells(t, CellPartition::Side::TwoSided);
  std::vector<bool> isDuflo(N, false);
  for (int d : ad.duflo) isDuflo[d] = true;

  PropertyReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& witness) {
    rep.checks.push_back({name, pass, pass ? "" : witness});
  };
  auto name = [&](int x) { return W.element(x).toString(); };

  {  // P1
    bool ok = true;
    std::string w;
    for (int z = 0; z < N && ok; ++z)
      if (!(ad.aVal[z] <= ad.delta[z])) {
        ok = false;
        w = "a > Delta at z=" + name(z);
      }
    add("P1", ok, w);
  }
  {  // P2
    bool ok = true;
    std::string w;
    for (const auto& [key, g] : ad.gamma) {
      auto [x, y, d] = key;
      if (isDuflo[d] && W.inverseOf(y) != x) {
        ok = false;
        w = "gamma(" + name(x) + "," + name(y) + "," + name(d) + ") != 0";
        break;
      }
    }
    add("P2", ok, w);
  }
  {  // P3
    bool ok = true;
    std::string w;
    for (int y = 0; y < N && ok; ++y) {
      int count = 0;
      for (int d : ad.duflo)
        if (ad.gammaAt(W.inverseOf(y), y, d) != 0) ++count;
      if (count != 1) {
        ok = false;
        w = "y=" + name(y) + " has " + std::to_string(count) + " Duflo partners";
      }
    }
    add("P3", ok, w);
  }
  {  // P4 (and constancy on two-sided cells)
    bool ok = true;
    std::string w;
    for (int bz = 0; bz < two.blockCount() && ok; ++bz)
      for (int bz2 = 0; bz2 < two.blockCount() && ok; ++bz2)
        if (two.leq(bz2, bz) && !(ad.aVal[two.blocks[bz2][0]] >= ad.aVal[two.blocks[bz][0]])) {
          ok = false;
          w = "a decreases along <=_LR";
        }
    for (int b = 0; b < two.blockCount() && ok; ++b)
      for (int x : two.blocks[b])
        if (ad.aVal[x] != ad.aVal[two.blocks[b][0]]) {
          ok = false;
          w = "a not constant on a two-sided cell";
          break;
        }
    add("P4", ok, w);
  }
  {  // P5
    bool ok = true;
    std::string w;
    for (int y = 0; y < N && ok; ++y)
      for (int d : ad.duflo) {
        std::int64_t g = ad.gammaAt(W.inverseOf(y), y, d);
        if (g != 0 && !(g == ad.nz[d] && (g == 1 || g == -1))) {
          ok = false;
          w = "gamma(y^-1,y,d) != n_d = +-1 at y=" + name(y) + ", d=" + name(d);
          break;
        }
      }
    add("P5", ok, w);
  }
  {  // P6
    bool ok = true;
    std::string w;
    for (int d : ad.duflo)
      if (W.product(d, d) != W.identityId()) {
        ok = false;
        w = "d^2 != e at d=" + name(d);
        break;
      }
    add("P6", ok, w);
  }
  {  // P7
    bool ok = true;
    std::string w;
    for (const auto& [key, g] : ad.gamma) {
      auto [x, y, z] = key;
      if (ad.gammaAt(y, z, x) != g) {
        ok = false;
        w = "gamma not cyclic at (" + name(x) + "," + name(y) + "," + name(z) + ")";
        break;
      }
    }
    add("P7", ok, w);
  }
  {  // P8
    bool ok = true;
    std::string w;
    for (const auto& [key, g] : ad.gamma) {
      auto [x, y, z] = key;
      bool same = left.blockOf[x] == left.blockOf[W.inverseOf(y)] &&
                  left.blockOf[y] == left.blockOf[W.inverseOf(z)] &&
                  left.blockOf[z] == left.blockOf[W.inverseOf(x)];
      if (!same) {
        ok = false;
        w = "P8 fails at (" + name(x) + "," + name(y) + "," + name(z) + ")";
        break;
      }
    }
    add("P8", ok, w);
  }
  auto orderProp = [&](const char* pname, const CellPartition& part) {
    bool ok = true;
    std::string w;
    for (int b1 = 0; b1 < part.blockCount() && ok; ++b1)
      for (int b2 = 0; b2 < part.blockCount() && ok; ++b2) {
        if (b1 == b2 || !part.leq(b1, b2)) continue;
        if (ad.aVal[part.blocks[b1][0]] == ad.aVal[part.blocks[b2][0]]) {
          ok = false;
          w = "equal a-values across distinct comparable cells";
        }
      }
    add(pname, ok, w);
  };
  orderProp("P9", left);
  orderProp("P10", right);
  orderProp("P11", two);
  {  // P13
    bool ok = true;
    std::string w;
    for (int b = 0; b < left.blockCount() && ok; ++b) {
      std::vector<int> ds;
      for (int x : left.blocks[b])
        if (isDuflo[x]) ds.push_back(x);
      if (ds.size() != 1) {
        ok = false;
        w = "left cell with " + std::to_string(ds.size()) + " Duflo members";
        break;
      }
      for (int x : left.blocks[b])
        if (ad.gammaAt(W.inverseOf(x), x, ds[0]) == 0) {
          ok = false;
          w = "gamma(x^-1,x,d) = 0 at x=" + name(x);
          break;
        }
    }
    add("P13", ok, w);
  }
  {  // P14
    bool ok = true;
    std::string w;
    for (int z = 0; z < N; ++z)
      if (two.blockOf[z] != two.blockOf[W.inverseOf(z)]) {
        ok = false;
        w = "z !~_LR z^-1 at z=" + name(z);
        break;
      }
    add("P14", ok, w);
  }
  return rep;
}

}  // namespace dkl
