#include "dominokl/signed_perm.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dkl {

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<bool> seen(window_.size(), false);
  for (int v : window_) {
    int a = std::abs(v);
    if (a < 1 || a > n() || seen[a - 1])
      throw std::invalid_argument("window is not a signed permutation");
    seen[a - 1] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::longestElement(int n) {
  if (n < 1) throw std::invalid_argument("longestElement: n must be >= 1");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = -(i + 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::apply(int v) const {
  int a = std::abs(v);
  if (a < 1 || a > n()) throw std::out_of_range("apply: value out of range");
  return v > 0 ? window_[a - 1] : -window_[a - 1];
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(n());
  for (int i = 1; i <= n(); ++i) {
    int v = window_[i - 1];
    w[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

bool SignedPermutation::isIdentity() const {
  for (int i = 1; i <= n(); ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

std::string SignedPermutation::toString() const {
  std::string s;
  for (size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(window_[i]);
  }
  return s;
}

SignedPermutation SignedPermutation::parse(const std::string& text, int expectN) {
  std::istringstream in(text);
  std::vector<int> w;
  int v;
  while (in >> v) w.push_back(v);
  if (expectN >= 0 && static_cast<int>(w.size()) != expectN)
    throw std::invalid_argument("parse: wrong window size");
  return SignedPermutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.n() != y.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(x.n());
  for (int i = 1; i <= x.n(); ++i) w[i - 1] = y.apply(x.apply(i));
  return SignedPermutation(std::move(w));
}

LengthStats lengthStats(const SignedPermutation& w) {
  LengthStats st;
  const auto& v = w.window();
  int n = w.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) ++st.ell;
    if (v[i] < 0) {
      st.ell += -v[i];
      ++st.ell_t;
    }
  }
  st.ell_s = st.ell - st.ell_t;
  return st;
}

SignedPermutation leftGen(int g, const SignedPermutation& w) {
  std::vector<int> v = w.window();
  if (g == 0) {
    for (auto& x : v)
      if (std::abs(x) == 1) x = -x;
  } else {
    for (auto& x : v) {
      if (std::abs(x) == g) x = x > 0 ? g + 1 : -(g + 1);
      else if (std::abs(x) == g + 1) x = x > 0 ? g : -g;
    }
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation rightGen(const SignedPermutation& w, int g) {
  std::vector<int> v = w.window();
  if (g == 0) v[0] = -v[0];
  else std::swap(v[g - 1], v[g]);
  return SignedPermutation(std::move(v));
}

WGroup::WGroup(int n) : n_(n) {
  if (n < 0 || n > 8) throw std::invalid_argument("WGroup: n out of supported range");
  // Enumerate all windows in lexicographic order.
  std::vector<int> values;
  for (int i = 1; i <= n; ++i) {
    values.push_back(-i);
    values.push_back(i);
  }
  std::sort(values.begin(), values.end());
  std::vector<int> acc;
  std::vector<bool> used(n + 1, false);
  std::vector<std::vector<int>> windows;
  // DFS in value order yields windows in lexicographic order.
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(acc.size()) == n) {
      windows.push_back(acc);
      return;
    }
    for (int v : values) {
      if (used[std::abs(v)]) continue;
      used[std::abs(v)] = true;
      acc.push_back(v);
      self(self);
      acc.pop_back();
      used[std::abs(v)] = false;
    }
  };
  rec(rec);
  for (auto& w : windows) elems_.emplace_back(std::move(w));

  int N = size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[elems_[i].window()] = i;
  auto lookup = [&](const SignedPermutation& w) { return index.at(w.window()); };

  int gens = numGens();
  leftTable_.assign(gens, std::vector<int>(N));
  rightTable_.assign(gens, std::vector<int>(N));
  invTable_.resize(N);
  len_.resize(N);
  lenT_.resize(N);
  for (int x = 0; x < N; ++x) {
    for (int g = 0; g < gens; ++g) {
      leftTable_[g][x] = lookup(leftGen(g, elems_[x]));
      rightTable_[g][x] = lookup(rightGen(elems_[x], g));
    }
    invTable_[x] = lookup(elems_[x].inverse());
    auto st = lengthStats(elems_[x]);
    len_[x] = st.ell;
    lenT_[x] = st.ell_t;
  }
  idId_ = lookup(SignedPermutation::identity(n));
  w0Id_ = n >= 1 ? lookup(SignedPermutation::longestElement(n)) : idId_;

  byLength_.resize(N);
  std::iota(byLength_.begin(), byLength_.end(), 0);
  std::stable_sort(byLength_.begin(), byLength_.end(),
                   [&](int a, int b) { return len_[a] < len_[b]; });
  buildBruhat();
}

int WGroup::id(const SignedPermutation& w) const {
  // Binary search over the lexicographically sorted element list.
  auto it = std::lower_bound(elems_.begin(), elems_.end(), w,
                             [](const SignedPermutation& a, const SignedPermutation& b) {
                               return a.window() < b.window();
                             });
  if (it == elems_.end() || !(*it == w)) throw std::invalid_argument("id: element not in group");
  return static_cast<int>(it - elems_.begin());
}

int WGroup::product(int x, int y) const { return id(compose(elems_[x], elems_[y])); }

void WGroup::buildBruhat() {
  int N = size();
  int words = (N + 63) / 64;
  bruhat_.assign(N, std::vector<uint64_t>(words, 0));
  auto set = [&](int x, int y) { bruhat_[x][y >> 6] |= (uint64_t{1} << (y & 63)); };
  auto get = [&](int x, int y) {
    return (bruhat_[x][y >> 6] >> (y & 63)) & 1;
  };
  // Lifting property: pick g with g·x < x; then y <= x iff
  // (g·y < y ? g·y <= g·x : y <= g·x).
  for (int x : byLength_) {
    set(x, x);
    if (len_[x] == 0) continue;
    int g = 0;
    while (!isLeftDescent(g, x)) ++g;
    int gx = leftMul(g, x);
    for (int y = 0; y < N; ++y) {
      if (y == x) continue;
      int gy = leftMul(g, y);
      bool leq = (len_[gy] < len_[y]) ? get(gx, gy) : get(gx, y);
      if (leq) set(x, y);
    }
  }
}

bool WGroup::bruhatLeq(int y, int x) const {
  return (bruhat_[x][y >> 6] >> (y & 63)) & 1;
}

std::vector<int> WGroup::reducedWord(int x) const {
  std::vector<int> word;
  while (len_[x] > 0) {
    int g = 0;
    while (!isLeftDescent(g, x)) ++g;
    word.push_back(g);
    x = leftMul(g, x);
  }
  return word;
}

const WGroup& wgroup(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<WGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<WGroup>(n)).first;
  return *it->second;
}

}  // namespace dkl
