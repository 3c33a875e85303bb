#include "opcat/finmaps.hpp"

#include <algorithm>

#include "opcat/util.hpp"

namespace opcat {

bool operator==(const FinMap& a, const FinMap& b) {
  return a.n == b.n && a.m == b.m && a.table == b.table;
}

std::string encode(const FinMap& f) {
  Encoder e;
  e.num(f.n).num(f.m);
  for (int x : f.table) e.num(x);
  return e.key();
}

void validate(const FinMap& f) {
  require(f.n >= 0 && f.m >= 0, "negative set size");
  require(static_cast<int>(f.table.size()) == f.n, "map table has wrong size");
  for (int x : f.table) require(x >= 1 && x <= f.m, "map value out of range");
}

FinMap identityMap(int n) {
  FinMap f;
  f.n = f.m = n;
  f.table.resize(n);
  for (int i = 0; i < n; ++i) f.table[i] = i + 1;
  return f;
}

FinMap composeMap(const FinMap& g, const FinMap& f) {
  if (f.m != g.n) throw SizeMismatch("composeMap: codomain/domain mismatch");
  FinMap out;
  out.n = f.n;
  out.m = g.m;
  out.table.resize(f.n);
  for (int i = 1; i <= f.n; ++i) out.table[i - 1] = g(f(i));
  return out;
}

MapFlags classify(const FinMap& f) {
  MapFlags fl;
  std::vector<int> hits(f.m, 0);
  for (int x : f.table) ++hits[x - 1];
  fl.surjective = std::all_of(hits.begin(), hits.end(), [](int h) { return h > 0; });
  fl.injective = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
  fl.orderPreserving = true;
  for (int i = 2; i <= f.n; ++i)
    if (f(i - 1) > f(i)) fl.orderPreserving = false;
  fl.minFiberOrdered = fl.surjective;
  if (fl.surjective) {
    std::vector<int> firstHit(f.m, 0);
    for (int i = f.n; i >= 1; --i) firstHit[f(i) - 1] = i;
    for (int j = 1; j < f.m; ++j)
      if (firstHit[j - 1] >= firstHit[j]) fl.minFiberOrdered = false;
  }
  fl.basepointPreserving = f.n >= 1 && f(1) == 1;
  fl.endpointPreserving = f.n >= 1 && f(1) == 1 && f(f.n) == f.m;
  return fl;
}

bool operator==(const GradedSurjection& a, const GradedSurjection& b) {
  return a.map == b.map && a.grading == b.grading;
}

std::string encode(const GradedSurjection& f) {
  Encoder e;
  e.str(encode(f.map));
  e.tag('g');
  for (int x : f.grading) e.num(x);
  return e.key();
}

void validate(const GradedSurjection& f) {
  validate(f.map);
  MapFlags fl = classify(f.map);
  require(fl.surjective, "graded surjection must be surjective");
  require(fl.minFiberOrdered, "graded surjection must satisfy the min-fiber condition");
  require(static_cast<int>(f.grading.size()) == f.map.m, "grading has wrong size");
  for (int x : f.grading) require(x >= 0, "negative grading");
}

GradedSurjection identityGOS(int n) {
  GradedSurjection f;
  f.map = identityMap(n);
  f.grading.assign(n, 0);
  return f;
}

GradedSurjection composeGOS(const GradedSurjection& h, const GradedSurjection& f) {
  if (f.map.m != h.map.n) throw SizeMismatch("composeGOS: codomain/domain mismatch");
  GradedSurjection out;
  out.map = composeMap(h.map, f.map);
  out.grading.assign(h.map.m, 0);
  for (int i = 1; i <= h.map.m; ++i) {
    int g = h.grading[i - 1];
    for (int j = 1; j <= h.map.n; ++j)
      if (h.map(j) == i) g += f.grading[j - 1];
    out.grading[i - 1] = g;
  }
  return out;
}

FSFactorization factorFS(const FinMap& f) {
  MapFlags fl = classify(f);
  require(fl.surjective, "factorFS: map must be surjective");
  // Order the codomain by first occurrence; the ordered part is f followed
  // by the inverse relabeling.
  std::vector<int> firstHit(f.m, 0);
  for (int i = f.n; i >= 1; --i) firstHit[f(i) - 1] = i;
  std::vector<int> byFirst(f.m);
  for (int j = 0; j < f.m; ++j) byFirst[j] = j + 1;
  std::sort(byFirst.begin(), byFirst.end(),
            [&](int a, int b) { return firstHit[a - 1] < firstHit[b - 1]; });
  FSFactorization out;
  out.permutation.n = out.permutation.m = f.m;
  out.permutation.table.resize(f.m);
  std::vector<int> rankOf(f.m, 0);
  for (int r = 0; r < f.m; ++r) {
    out.permutation.table[r] = byFirst[r];  // permutation(rank) = original label
    rankOf[byFirst[r] - 1] = r + 1;
  }
  out.ordered.n = f.n;
  out.ordered.m = f.m;
  out.ordered.table.resize(f.n);
  for (int i = 1; i <= f.n; ++i) out.ordered.table[i - 1] = rankOf[f(i) - 1];
  return out;
}

std::vector<FinMap> allMaps(int n, int m) {
  std::vector<FinMap> out;
  forEachFunction(n, m, [&](const std::vector<int>& f0) {
    FinMap f;
    f.n = n;
    f.m = m;
    f.table.resize(n);
    for (int i = 0; i < n; ++i) f.table[i] = f0[i] + 1;
    out.push_back(f);
  });
  return out;
}

std::vector<FinMap> allSurjections(int n, int m) {
  std::vector<FinMap> out;
  for (auto& f : allMaps(n, m))
    if (classify(f).surjective) out.push_back(f);
  return out;
}

std::vector<FinMap> allOrderedSurjections(int n, int m) {
  std::vector<FinMap> out;
  for (auto& f : allMaps(n, m))
    if (classify(f).minFiberOrdered) out.push_back(f);
  return out;
}

std::vector<std::vector<int>> allGradings(int m, int maxGrade) {
  std::vector<std::vector<int>> out;
  forEachFunction(m, maxGrade + 1, [&](const std::vector<int>& g) { out.push_back(g); });
  return out;
}

}  // namespace opcat
