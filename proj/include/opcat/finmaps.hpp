#pragma once

#include <string>
#include <vector>

#include "opcat/error.hpp"

namespace opcat {

// A map {1..n} -> {1..m} between finite sets, stored 1-based.
struct FinMap {
  int n = 0;  // domain size
  int m = 0;  // codomain size
  std::vector<int> table;

  int operator()(int i) const { return table[i - 1]; }
};

bool operator==(const FinMap& a, const FinMap& b);
inline bool operator!=(const FinMap& a, const FinMap& b) { return !(a == b); }
std::string encode(const FinMap& f);

void validate(const FinMap& f);
FinMap identityMap(int n);
// g after f: (g . f)(i) = g(f(i)).
FinMap composeMap(const FinMap& g, const FinMap& f);

// Decoration flags of a finite map.
struct MapFlags {
  bool surjective = false;
  bool injective = false;
  bool orderPreserving = false;   // weakly monotone
  bool minFiberOrdered = false;   // surjective with min f^-1(i) increasing in i
  bool endpointPreserving = false;  // f(1) = 1 and f(n) = m
  bool basepointPreserving = false;  // f(1) = 1
};

MapFlags classify(const FinMap& f);

// An ordered surjection (min-fiber condition) with a grading on the codomain.
struct GradedSurjection {
  FinMap map;
  std::vector<int> grading;  // size m, nonnegative
};

bool operator==(const GradedSurjection& a, const GradedSurjection& b);
inline bool operator!=(const GradedSurjection& a, const GradedSurjection& b) { return !(a == b); }
std::string encode(const GradedSurjection& f);

void validate(const GradedSurjection& f);
GradedSurjection identityGOS(int n);

// Composite h . f with grading g(i) = g_h(i) + sum over j in h^-1(i) of g_f(j).
GradedSurjection composeGOS(const GradedSurjection& h, const GradedSurjection& f);

// Unique factorization of a surjection as (bijection) . (ordered surjection).
struct FSFactorization {
  FinMap permutation;  // m -> m bijection
  FinMap ordered;      // n -> m with the min-fiber condition
};
FSFactorization factorFS(const FinMap& f);

// All surjections n -> m satisfying the min-fiber condition.
std::vector<FinMap> allOrderedSurjections(int n, int m);
// All surjections n -> m.
std::vector<FinMap> allSurjections(int n, int m);
// All maps n -> m.
std::vector<FinMap> allMaps(int n, int m);
// All gradings of length m with entries in 0..maxGrade.
std::vector<std::vector<int>> allGradings(int m, int maxGrade);

}  // namespace opcat
