#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dkl {

// Sparse Laurent polynomial in v over Z: sorted (exponent, coefficient)
// pairs, no zero coefficients. The unique normalized form makes equality
// structural.
class Laurent {
 public:
  Laurent() = default;
  static Laurent monomial(std::int64_t coeff, int exp);
  static Laurent one() { return monomial(1, 0); }

  bool isZero() const { return terms_.empty(); }
  const std::vector<std::pair<int, std::int64_t>>& terms() const { return terms_; }

  // Degree conventions: maxDeg of 0 is INT_MIN-like sentinel via isZero().
  int maxDeg() const;
  int minDeg() const;
  std::int64_t coeff(int exp) const;
  std::int64_t constTerm() const { return coeff(0); }
  std::int64_t evalAtOne() const;
  std::int64_t leadingCoeff() const;

  Laurent bar() const;      // v -> v^{-1}
  Laurent shifted(int k) const;  // * v^k
  Laurent negativePart() const;  // strictly negative exponents

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent&) const = default;

  std::string toString() const;  // e.g. "v^-2 + 3"

 private:
  std::vector<std::pair<int, std::int64_t>> terms_;
  void normalize();
};

}  // namespace dkl
