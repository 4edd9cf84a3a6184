#include "dominokl/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dkl {

void Laurent::normalize() {
  std::sort(terms_.begin(), terms_.end());
  size_t w = 0;
  for (size_t i = 0; i < terms_.size();) {
    int exp = terms_[i].first;
    std::int64_t c = 0;
    while (i < terms_.size() && terms_[i].first == exp) c += terms_[i++].second;
    if (c != 0) terms_[w++] = {exp, c};
  }
  terms_.resize(w);
}

Laurent Laurent::monomial(std::int64_t coeff, int exp) {
  Laurent p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

int Laurent::maxDeg() const {
  if (isZero()) throw std::logic_error("maxDeg of zero polynomial");
  return terms_.back().first;
}

int Laurent::minDeg() const {
  if (isZero()) throw std::logic_error("minDeg of zero polynomial");
  return terms_.front().first;
}

std::int64_t Laurent::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair<int, std::int64_t>{exp, 0},
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  return (it != terms_.end() && it->first == exp) ? it->second : 0;
}

std::int64_t Laurent::evalAtOne() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::int64_t Laurent::leadingCoeff() const {
  if (isZero()) throw std::logic_error("leadingCoeff of zero polynomial");
  return terms_.back().second;
}

Laurent Laurent::bar() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_.push_back({-e, c});
  std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

Laurent Laurent::shifted(int k) const {
  Laurent p = *this;
  for (auto& [e, c] : p.terms_) e += k;
  return p;
}

Laurent Laurent::negativePart() const {
  Laurent p;
  for (const auto& [e, c] : terms_)
    if (e < 0) p.terms_.push_back({e, c});
  return p;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) terms_.push_back({e, -c});
  normalize();
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.terms_.push_back({ea + eb, ca * cb});
  p.normalize();
  return p;
}

std::string Laurent::toString() const {
  if (isZero()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!s.empty()) {
      s += c > 0 ? " + " : " - ";
      c = std::abs(c);
    }
    if (e == 0) s += std::to_string(c);
    else {
      if (c != 1 && c != -1) s += std::to_string(c) + "*";
      else if (c == -1) s += "-";
      s += "v";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace dkl
