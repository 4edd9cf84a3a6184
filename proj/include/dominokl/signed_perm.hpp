#pragma once

#include <string>
#include <vector>

namespace dkl {

// An element of the hyperoctahedral group W_n in window (one-line)
// notation: w = (w_1,...,w_n) with |w_1|,...,|w_n| a permutation of 1..n.
// As a signed map, w(i) = w_i and w(-i) = -w_i.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  // w_0 = (-1,-2,...,-n), the longest element.
  static SignedPermutation longestElement(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int apply(int v) const;  // signed evaluation, v in {±1..±n}

  SignedPermutation inverse() const;
  bool isIdentity() const;

  bool operator==(const SignedPermutation&) const = default;
  bool operator<(const SignedPermutation& o) const { return window_ < o.window_; }

  std::string toString() const;                       // "-3 1 -2"
  static SignedPermutation parse(const std::string&, int expectN = -1);

 private:
  std::vector<int> window_;
};

// x then y as signed maps: (compose(x,y))(i) = y(x(i)).
SignedPermutation compose(const SignedPermutation& x, const SignedPermutation& y);

struct LengthStats {
  int ell = 0;    // Coxeter length
  int ell_t = 0;  // occurrences of the sign generator t in any reduced word
  int ell_s = 0;  // occurrences of the type-A generators

  bool operator==(const LengthStats&) const = default;
};

// ell = inversions of the signed window plus the sum of |w_i| over
// negative entries; ell_t = number of negative entries.
LengthStats lengthStats(const SignedPermutation& w);

// Generators indexed 0..n-1: 0 is the sign generator t, i >= 1 is s_i
// (the transposition of i, i+1). Left action g∘w, right action w∘g.
SignedPermutation leftGen(int g, const SignedPermutation& w);
SignedPermutation rightGen(const SignedPermutation& w, int g);

// The whole group W_n, with element ids in window-lexicographic order and
// the tables the Hecke engine needs. Immutable once built.
class WGroup {
 public:
  explicit WGroup(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int numGens() const { return n_ == 0 ? 0 : n_; }

  const SignedPermutation& element(int id) const { return elems_[id]; }
  int id(const SignedPermutation& w) const;
  int identityId() const { return idId_; }
  int longestId() const { return w0Id_; }

  int leftMul(int g, int x) const { return leftTable_[g][x]; }
  int rightMul(int x, int g) const { return rightTable_[g][x]; }
  int inverseOf(int x) const { return invTable_[x]; }
  int product(int x, int y) const;  // x then y (compose)

  int length(int x) const { return len_[x]; }
  int lengthT(int x) const { return lenT_[x]; }
  // A left descent: ell(g∘x) < ell(x).
  bool isLeftDescent(int g, int x) const { return len_[leftMul(g, x)] < len_[x]; }
  bool isRightDescent(int x, int g) const { return len_[rightMul(x, g)] < len_[x]; }

  // ids sorted by (length, id); positions of each length stratum.
  const std::vector<int>& byLength() const { return byLength_; }

  bool bruhatLeq(int y, int x) const;

  // A fixed reduced word for x (generator indices), built by greedy left
  // descent stripping: x = g1 g2 ... gk.
  std::vector<int> reducedWord(int x) const;

 private:
  int n_;
  std::vector<SignedPermutation> elems_;
  std::vector<std::vector<int>> leftTable_, rightTable_;
  std::vector<int> invTable_, len_, lenT_;
  std::vector<int> byLength_;
  int idId_ = 0, w0Id_ = 0;
  std::vector<std::vector<uint64_t>> bruhat_;  // bitset rows: bruhat_[x] holds y <= x

  void buildBruhat();
};

// Shared per-n instances (the tables are pure data).
const WGroup& wgroup(int n);

}  // namespace dkl
