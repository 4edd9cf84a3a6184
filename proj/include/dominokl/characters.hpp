#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dominokl/hecke.hpp"
#include "dominokl/partitions.hpp"
#include "dominokl/signed_perm.hpp"

namespace dkl {

// Conjugacy classes of W_n are indexed by pairs of partitions: the cycle
// types of positive and negative signed cycles.
struct ConjugacyClass {
  Partition positiveType;
  Partition negativeType;
  std::int64_t size = 0;
  std::vector<int> word;  // representative as generator indices (0 = t)

  std::string label() const { return positiveType.toString() + negativeType.toString(); }
};

std::vector<ConjugacyClass> conjugacyClasses(int n);

// Exact irreducible character table of W_n, rows indexed by bipartitions
// (d,f) in canonical order, columns by conjugacy classes. Computed by the
// Murnaghan-Nakayama recursion for the wreath product; the trivial module
// is [(n),()] and [(d,f)] ⊗ sgn = [(f^t,d^t)].
class CharacterTable {
 public:
  explicit CharacterTable(int n, int maxN = 8);

  int n() const { return n_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Bipartition>& rows() const { return rows_; }
  const std::vector<std::int64_t>& row(const Bipartition& bp) const;
  std::int64_t degree(const Bipartition& bp) const;
  std::int64_t groupOrder() const;

  // Multiplicities of each irreducible in a character vector; throws on
  // non-integer or negative multiplicities (a genuine character never
  // produces those).
  std::map<int, std::int64_t> decompose(const std::vector<std::int64_t>& chi) const;
  const Bipartition& rowLabel(int i) const { return rows_[i]; }
  int rowIndex(const Bipartition& bp) const;

  std::string toCsv() const;

 private:
  int n_;
  std::vector<ConjugacyClass> classes_;
  std::vector<Bipartition> rows_;
  std::vector<std::vector<std::int64_t>> table_;
};

// Character of a module given by generator matrices: traces along the
// class representative words. Checks the defining relations of W_n first.
std::vector<std::int64_t> moduleCharacter(const std::map<int, IntMatrix>& gens, int n,
                                          const std::vector<ConjugacyClass>& classes);

// Number of standard Young tableaux (hook length count), exact.
std::int64_t sytCount(const Partition& p);

}  // namespace dkl
