#include "opcat/twolevel.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/util.hpp"

namespace opcat {

bool operator==(const TwoLevelTree& a, const TwoLevelTree& b) {
  return a.target == b.target && a.uppers == b.uppers && a.leafIdx == b.leafIdx;
}

std::string encode(const TwoLevelTree& t) {
  Encoder e;
  e.tag('T').str(encode(t.target));
  e.tag('U').num(static_cast<long long>(t.uppers.size()));
  for (const auto& u : t.uppers) e.str(encode(u));
  e.tag('L');
  for (int x : t.leafIdx) e.num(x);
  return e.key();
}

int positionCount(const TwoLevelTree& t) {
  int m = 0;
  for (const auto& u : t.uppers) m += catArity(u);
  return m;
}

void validate(const TwoLevelTree& t) {
  validate(t.target);
  const int n = catArity(t.target);
  require(static_cast<int>(t.uppers.size()) == n, "one upper operation per slot required");
  for (int i = 0; i < n; ++i) {
    const Operation& u = t.uppers[i];
    if (u.family != t.target.family) throw ColorMismatch("upper family differs from target");
    validate(u);
    if (outColor(u) != inColor(t.target, i + 1))
      throw ColorMismatch("upper output colour does not match slot colour");
  }
  const int m = positionCount(t);
  require(static_cast<int>(t.leafIdx.size()) == m, "leaf indexing has wrong size");
  require(isPermutation1(t.leafIdx), "leaf indexing is not a permutation of 1..m");
  int pos = 0;
  for (const auto& u : t.uppers) {
    int prev = 0;
    for (int k = 0; k < catArity(u); ++k, ++pos) {
      require(t.leafIdx[pos] > prev, "labels must increase within each upper block");
      prev = t.leafIdx[pos];
    }
  }
  if (!allowsPermutation(t.target.family)) {
    for (int k = 0; k < m; ++k)
      require(t.leafIdx[k] == k + 1, "this family admits only order-preserving indexings");
  }
}

Operation sourceOf2(const TwoLevelTree& t) {
  const int m = positionCount(t);
  if (isTable(t.target.family)) return tableOp(t.target.family, m);
  Operation composed = catCompose(t.target, t.uppers);
  // Slot at position k ends up as slot leafIdx[k].
  std::vector<int> newOfOld(m);
  for (int k = 0; k < m; ++k) newOfOld[k] = t.leafIdx[k] - 1;
  return reorderCatSlots(composed, newOfOld);
}

TwoLevelTree identity2(const Operation& p) {
  TwoLevelTree t;
  t.target = p;
  const int n = catArity(p);
  for (int i = 1; i <= n; ++i) t.uppers.push_back(identityOp(p.family, inColor(p, i)));
  t.leafIdx.resize(n);
  std::iota(t.leafIdx.begin(), t.leafIdx.end(), 1);
  return t;
}

namespace {

// Offsets of each upper block in the position order.
std::vector<int> blockOffsets(const std::vector<Operation>& uppers) {
  std::vector<int> off(uppers.size() + 1, 0);
  for (size_t i = 0; i < uppers.size(); ++i) off[i + 1] = off[i] + catArity(uppers[i]);
  return off;
}

}  // namespace

TwoLevelTree compose2(const TwoLevelTree& f, const TwoLevelTree& g) {
  if (sourceOf2(f) != g.target) throw Mismatch("compose2: source of f differs from target of g");
  const auto fOff = blockOffsets(f.uppers);
  const auto gOff = blockOffsets(g.uppers);

  TwoLevelTree out;
  out.target = f.target;
  for (size_t l = 0; l < f.uppers.size(); ++l) {
    // Children fed into the slots of f's l-th upper, in slot order.
    std::vector<Operation> children;
    std::vector<int> labels;  // labels carried by the children's slots
    for (int tpos = fOff[l]; tpos < fOff[l + 1]; ++tpos) {
      int j = f.leafIdx[tpos];  // which upper of g lands here
      children.push_back(g.uppers[j - 1]);
      for (int u = gOff[j - 1]; u < gOff[j]; ++u) labels.push_back(g.leafIdx[u]);
    }
    Operation raw = catCompose(f.uppers[l], children);
    // Reorder the slots of the contracted upper so labels increase.
    std::vector<int> rank(labels.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::sort(rank.begin(), rank.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> newOfOld(labels.size());
    for (size_t r = 0; r < rank.size(); ++r) newOfOld[rank[r]] = static_cast<int>(r);
    out.uppers.push_back(reorderCatSlots(raw, newOfOld));
    std::vector<int> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    out.leafIdx.insert(out.leafIdx.end(), sorted.begin(), sorted.end());
  }
  return out;
}

FinMap cardinality(const TwoLevelTree& t) {
  FinMap f;
  f.n = positionCount(t);
  f.m = static_cast<int>(t.uppers.size());
  f.table.resize(f.n);
  const auto off = blockOffsets(t.uppers);
  for (int i = 0; i < f.m; ++i)
    for (int k = off[i]; k < off[i + 1]; ++k) f.table[t.leafIdx[k] - 1] = i + 1;
  return f;
}

TwoLevelTree fiber(const TwoLevelTree& g, const TwoLevelTree& f, int i) {
  if (i < 1 || i > static_cast<int>(f.uppers.size()))
    throw IndexOutOfRange("fiber: index out of range");
  if (sourceOf2(f) != g.target) throw Mismatch("fiber: morphisms are not composable");
  const auto fOff = blockOffsets(f.uppers);
  const auto gOff = blockOffsets(g.uppers);
  TwoLevelTree out;
  out.target = f.uppers[i - 1];
  std::vector<int> labels;
  for (int tpos = fOff[i - 1]; tpos < fOff[i]; ++tpos) {
    int j = f.leafIdx[tpos];
    out.uppers.push_back(g.uppers[j - 1]);
    for (int u = gOff[j - 1]; u < gOff[j]; ++u) labels.push_back(g.leafIdx[u]);
  }
  // Shift labels through the order-preserving bijection onto 1..k.
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  out.leafIdx.resize(labels.size());
  for (size_t k = 0; k < labels.size(); ++k) {
    int r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), labels[k]) -
                             sorted.begin());
    out.leafIdx[k] = r + 1;
  }
  return out;
}

}  // namespace opcat
