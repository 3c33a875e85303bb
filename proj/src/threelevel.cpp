#include "opcat/threelevel.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/util.hpp"

namespace opcat {

namespace {

bool planarLowerSlot(Family f) { return f == Family::UAs || f == Family::As; }

struct Shell {
  Operation lower;
  int ls = 1;  // 1-based
  std::vector<Operation> uppers;
  std::vector<int> leafIdx;
};

std::vector<int> blockOffsets(const std::vector<Operation>& uppers) {
  std::vector<int> off(uppers.size() + 1, 0);
  for (size_t i = 0; i < uppers.size(); ++i) off[i + 1] = off[i] + catArity(uppers[i]);
  return off;
}

int shellPositions(const Shell& s) {
  int m = catArity(s.lower) - 1;
  for (const auto& u : s.uppers) m += catArity(u);
  return m;
}

// Index of the first upper position in the shell layout.
int upperBase(const Shell& s) { return s.ls - 1; }

// Position of lower slot t (1-based, t != ls) in the shell layout.
int lowerPosition(const Shell& s, int t) {
  int nUpper = 0;
  for (const auto& u : s.uppers) nUpper += catArity(u);
  return t < s.ls ? t - 1 : (s.ls - 1) + nUpper + (t - s.ls - 1);
}

void validateShell(const Shell& s, Family family, const Color& middleOut,
                   const std::vector<Color>& middleIn) {
  require(s.lower.family == family, "lower family mismatch");
  validate(s.lower);
  const int k = catArity(s.lower);
  require(k >= 1, "lower operation must have a slot for the middle");
  if (planarLowerSlot(family)) {
    require(s.ls >= 1 && s.ls <= k, "lower slot out of range");
  } else {
    require(s.ls == 1, "symmetric families attach the middle at the first slot");
  }
  if (inColor(s.lower, s.ls) != middleOut)
    throw ColorMismatch("middle output colour does not fit the lower slot");
  require(s.uppers.size() == middleIn.size(), "one upper operation per middle slot required");
  for (size_t i = 0; i < s.uppers.size(); ++i) {
    const Operation& u = s.uppers[i];
    if (u.family != family) throw ColorMismatch("upper family mismatch");
    validate(u);
    if (outColor(u) != middleIn[i])
      throw ColorMismatch("upper output colour does not match middle slot");
  }
  const int m = shellPositions(s);
  require(static_cast<int>(s.leafIdx.size()) == m, "leaf indexing has wrong size");
  require(isPermutation1(s.leafIdx), "leaf indexing is not a permutation");
  // Per-block increasing for the uppers.
  const auto off = blockOffsets(s.uppers);
  for (size_t i = 0; i < s.uppers.size(); ++i) {
    int prev = 0;
    for (int u = off[i]; u < off[i + 1]; ++u) {
      int label = s.leafIdx[upperBase(s) + u];
      require(label > prev, "labels must increase within each upper block");
      prev = label;
    }
  }
  // Increasing along the lower's own slots (the sequence skips the middle).
  int prev = 0;
  for (int t = 1; t <= k; ++t) {
    if (t == s.ls) continue;
    int label = s.leafIdx[lowerPosition(s, t)];
    require(label > prev, "labels must increase along the lower slots");
    prev = label;
  }
  if (!allowsPermutation(family)) {
    for (int p = 0; p < m; ++p)
      require(s.leafIdx[p] == p + 1, "this family admits only order-preserving indexings");
  }
}

// Labels attached to the slots of each upper of a shell.
std::vector<std::vector<int>> upperLabels(const Shell& s) {
  const auto off = blockOffsets(s.uppers);
  std::vector<std::vector<int>> out(s.uppers.size());
  for (size_t i = 0; i < s.uppers.size(); ++i)
    for (int u = off[i]; u < off[i + 1]; ++u)
      out[i].push_back(s.leafIdx[upperBase(s) + u]);
  return out;
}

// Composition of shells; g's middle is the source, f's evaluation the target.
Shell composeShells(const Shell& f, const Shell& g, Family family) {
  const auto fUpperLabels = upperLabels(f);

  Shell out;
  // Uppers: contract each upper block of g with the f-uppers fed into it.
  std::vector<std::vector<int>> newUpperLabelBlocks;
  const auto gOff = blockOffsets(g.uppers);
  for (size_t i = 0; i < g.uppers.size(); ++i) {
    std::vector<Operation> children;
    std::vector<int> labels;
    for (int u = gOff[i]; u < gOff[i + 1]; ++u) {
      int j = g.leafIdx[upperBase(g) + u];
      children.push_back(f.uppers[j - 1]);
      labels.insert(labels.end(), fUpperLabels[j - 1].begin(), fUpperLabels[j - 1].end());
    }
    Operation raw = catCompose(g.uppers[i], children);
    std::vector<int> rank(labels.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::sort(rank.begin(), rank.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> newOfOld(labels.size());
    for (size_t r = 0; r < rank.size(); ++r) newOfOld[rank[r]] = static_cast<int>(r);
    out.uppers.push_back(reorderCatSlots(raw, newOfOld));
    std::sort(labels.begin(), labels.end());
    newUpperLabelBlocks.push_back(labels);
  }

  // Lower: fill g's lower with the f-uppers fed into its slots, keep a hole
  // for the middle, then plug the whole thing into f's lower.
  const int kg = catArity(g.lower);
  std::vector<Operation> parts;
  std::vector<std::vector<int>> partLabels;  // labels per part slot list
  for (int t = 1; t <= kg; ++t) {
    if (t == g.ls) {
      parts.push_back(identityOp(family, inColor(g.lower, t)));
      partLabels.push_back({0});  // sentinel for the hole
    } else {
      int j = g.leafIdx[lowerPosition(g, t)];
      parts.push_back(f.uppers[j - 1]);
      partLabels.push_back(fUpperLabels[j - 1]);
    }
  }
  Operation filled = catCompose(g.lower, parts);
  int holeInFilled = 0;
  for (int t = 1; t < g.ls; ++t) holeInFilled += catArity(parts[t - 1]);

  Operation lowerRaw = catComposeAt(f.lower, f.ls, filled);
  const int kf = catArity(f.lower);
  // Slot labels of lowerRaw in its own slot order (0 marks the hole).
  std::vector<int> rawLabels;
  for (int t = 1; t < f.ls; ++t) rawLabels.push_back(f.leafIdx[lowerPosition(f, t)]);
  for (const auto& pl : partLabels) rawLabels.insert(rawLabels.end(), pl.begin(), pl.end());
  for (int t = f.ls + 1; t <= kf; ++t) rawLabels.push_back(f.leafIdx[lowerPosition(f, t)]);
  const int holeGlobal0 = (f.ls - 1) + holeInFilled;

  std::vector<int> lowerLabelOrder;  // labels of the new lower slots, skipping the hole
  if (planarLowerSlot(family)) {
    out.lower = lowerRaw;
    out.ls = holeGlobal0 + 1;
    for (size_t p = 0; p < rawLabels.size(); ++p)
      if (static_cast<int>(p) != holeGlobal0) lowerLabelOrder.push_back(rawLabels[p]);
  } else {
    // Hole becomes slot 1; remaining slots sorted by label.
    std::vector<int> others;
    for (size_t p = 0; p < rawLabels.size(); ++p)
      if (static_cast<int>(p) != holeGlobal0) others.push_back(static_cast<int>(p));
    std::sort(others.begin(), others.end(),
              [&](int a, int b) { return rawLabels[a] < rawLabels[b]; });
    std::vector<int> newOfOld(rawLabels.size());
    newOfOld[holeGlobal0] = 0;
    for (size_t r = 0; r < others.size(); ++r) newOfOld[others[r]] = static_cast<int>(r) + 1;
    out.lower = reorderCatSlots(lowerRaw, newOfOld);
    out.ls = 1;
    for (int p : others) lowerLabelOrder.push_back(rawLabels[p]);
  }

  // Assemble the leaf indexing in the shell layout of the result.
  const int kOut = catArity(out.lower);
  out.leafIdx.clear();
  for (int t = 1; t < out.ls; ++t) out.leafIdx.push_back(lowerLabelOrder[t - 1]);
  for (const auto& block : newUpperLabelBlocks)
    out.leafIdx.insert(out.leafIdx.end(), block.begin(), block.end());
  for (int t = out.ls + 1; t <= kOut; ++t) out.leafIdx.push_back(lowerLabelOrder[t - 2]);
  return out;
}

Shell shellOf(const ThreeLevelTree& t) { return Shell{t.lower, t.lowerSlot, t.uppers, t.leafIdx}; }
Shell shellOf(const UMorphism& u) { return Shell{u.lower, u.lowerSlot, u.uppers, u.leafIdx}; }

}  // namespace

bool operator==(const ThreeLevelTree& a, const ThreeLevelTree& b) {
  return a.lower == b.lower && a.lowerSlot == b.lowerSlot && a.middle == b.middle &&
         a.uppers == b.uppers && a.leafIdx == b.leafIdx;
}

bool operator==(const UMorphism& a, const UMorphism& b) {
  return a.lower == b.lower && a.lowerSlot == b.lowerSlot && a.middleArity == b.middleArity &&
         a.middleOut == b.middleOut && a.middleIn == b.middleIn && a.uppers == b.uppers &&
         a.leafIdx == b.leafIdx;
}

bool operator==(const UObject& a, const UObject& b) {
  return a.family == b.family && a.out == b.out && a.in == b.in;
}

std::string encode(const ThreeLevelTree& t) {
  Encoder e;
  e.tag('B').str(encode(t.lower)).num(t.lowerSlot);
  e.tag('M').str(encode(t.middle));
  e.tag('U').num(static_cast<long long>(t.uppers.size()));
  for (const auto& u : t.uppers) e.str(encode(u));
  e.tag('L');
  for (int x : t.leafIdx) e.num(x);
  return e.key();
}

std::string encode(const UMorphism& u) {
  Encoder e;
  e.tag('B').str(encode(u.lower)).num(u.lowerSlot);
  e.tag('M').num(u.middleArity).num(u.middleOut.size).num(u.middleOut.genus);
  for (const auto& c : u.middleIn) e.num(c.size).num(c.genus);
  e.tag('U').num(static_cast<long long>(u.uppers.size()));
  for (const auto& up : u.uppers) e.str(encode(up));
  e.tag('L');
  for (int x : u.leafIdx) e.num(x);
  return e.key();
}

std::string encode(const UObject& o) {
  Encoder e;
  e.str(familyName(o.family));
  e.num(o.out.size).num(o.out.genus);
  for (const auto& c : o.in) e.num(c.size).num(c.genus);
  return e.key();
}

int positionCount(const ThreeLevelTree& t) { return shellPositions(shellOf(t)); }
int positionCount(const UMorphism& u) { return shellPositions(shellOf(u)); }

void validate(const ThreeLevelTree& t) {
  validate(t.middle);
  std::vector<Color> middleIn;
  for (int i = 1; i <= catArity(t.middle); ++i) middleIn.push_back(inColor(t.middle, i));
  validateShell(shellOf(t), t.middle.family, outColor(t.middle), middleIn);
}

void validate(const UMorphism& u) {
  require(static_cast<int>(u.middleIn.size()) == u.middleArity,
          "middle colour tuple has wrong size");
  validateShell(shellOf(u), u.lower.family, u.middleOut, u.middleIn);
}

Operation targetOf3(const ThreeLevelTree& t) {
  Operation mid = catCompose(t.middle, t.uppers);
  Operation raw = catComposeAt(t.lower, t.lowerSlot, mid);
  const int m = positionCount(t);
  std::vector<int> newOfOld(m);
  for (int k = 0; k < m; ++k) newOfOld[k] = t.leafIdx[k] - 1;
  return reorderCatSlots(raw, newOfOld);
}

UObject uObjectOf(const Operation& p) {
  UObject o;
  o.family = p.family;
  o.out = outColor(p);
  for (int i = 1; i <= catArity(p); ++i) o.in.push_back(inColor(p, i));
  return o;
}

UObject sourceOfU(const UMorphism& u) {
  UObject o;
  o.family = u.lower.family;
  o.out = u.middleOut;
  o.in = u.middleIn;
  return o;
}

UObject targetOfU(const UMorphism& u) {
  UObject o;
  o.family = u.lower.family;
  o.out = outColor(u.lower);
  const int m = positionCount(u);
  o.in.assign(m, Color{});
  Shell s = shellOf(u);
  const int k = catArity(u.lower);
  for (int t = 1; t <= k; ++t) {
    if (t == u.lowerSlot) continue;
    o.in[u.leafIdx[lowerPosition(s, t)] - 1] = inColor(u.lower, t);
  }
  const auto off = blockOffsets(u.uppers);
  for (size_t i = 0; i < u.uppers.size(); ++i)
    for (int x = off[i]; x < off[i + 1]; ++x) {
      int pos = upperBase(s) + x;
      o.in[u.leafIdx[pos] - 1] = inColor(u.uppers[i], x - off[i] + 1);
    }
  return o;
}

ThreeLevelTree identity3(const Operation& p) {
  ThreeLevelTree t;
  t.lower = identityOp(p.family, outColor(p));
  t.lowerSlot = 1;
  t.middle = p;
  for (int i = 1; i <= catArity(p); ++i) t.uppers.push_back(identityOp(p.family, inColor(p, i)));
  t.leafIdx.resize(catArity(p));
  std::iota(t.leafIdx.begin(), t.leafIdx.end(), 1);
  return t;
}

UMorphism identityU(const UObject& o) {
  UMorphism u;
  u.lower = identityOp(o.family, o.out);
  u.lowerSlot = 1;
  u.middleArity = static_cast<int>(o.in.size());
  u.middleOut = o.out;
  u.middleIn = o.in;
  for (const auto& c : o.in) u.uppers.push_back(identityOp(o.family, c));
  u.leafIdx.resize(o.in.size());
  std::iota(u.leafIdx.begin(), u.leafIdx.end(), 1);
  return u;
}

ThreeLevelTree compose3(const ThreeLevelTree& f, const ThreeLevelTree& g) {
  if (targetOf3(g) != f.middle) throw Mismatch("compose3: target of g differs from source of f");
  Shell s = composeShells(shellOf(f), shellOf(g), f.middle.family);
  ThreeLevelTree out;
  out.lower = s.lower;
  out.lowerSlot = s.ls;
  out.middle = g.middle;
  out.uppers = s.uppers;
  out.leafIdx = s.leafIdx;
  return out;
}

UMorphism composeU(const UMorphism& f, const UMorphism& g) {
  if (!(targetOfU(g) == sourceOfU(f)))
    throw Mismatch("composeU: target of g differs from source of f");
  Shell s = composeShells(shellOf(f), shellOf(g), f.lower.family);
  UMorphism out;
  out.lower = s.lower;
  out.lowerSlot = s.ls;
  out.middleArity = g.middleArity;
  out.middleOut = g.middleOut;
  out.middleIn = g.middleIn;
  out.uppers = s.uppers;
  out.leafIdx = s.leafIdx;
  return out;
}

UMorphism toU(const ThreeLevelTree& t) {
  UMorphism u;
  u.lower = t.lower;
  u.lowerSlot = t.lowerSlot;
  u.middleArity = catArity(t.middle);
  u.middleOut = outColor(t.middle);
  for (int i = 1; i <= u.middleArity; ++i) u.middleIn.push_back(inColor(t.middle, i));
  u.uppers = t.uppers;
  u.leafIdx = t.leafIdx;
  return u;
}

ThreeLevelTree liftU(const Operation& source, const UMorphism& u) {
  if (source.family != u.lower.family) throw ColorMismatch("liftU: family mismatch");
  if (catArity(source) != u.middleArity)
    throw ColorMismatch("liftU: source arity does not match the middle slot");
  if (outColor(source) != u.middleOut)
    throw ColorMismatch("liftU: source output colour does not match");
  for (int i = 1; i <= u.middleArity; ++i)
    if (inColor(source, i) != u.middleIn[i - 1])
      throw ColorMismatch("liftU: source input colours do not match");
  ThreeLevelTree t;
  t.lower = u.lower;
  t.lowerSlot = u.lowerSlot;
  t.middle = source;
  t.uppers = u.uppers;
  t.leafIdx = u.leafIdx;
  validate(t);
  return t;
}

bool isActive3(const ThreeLevelTree& t) { return isIdentityOp(t.lower); }

bool isRPositive3(const ThreeLevelTree& t) {
  for (const auto& u : t.uppers)
    if (catArity(u) == 0) return false;
  return true;
}

bool isActiveU(const UMorphism& u) { return isIdentityOp(u.lower); }

bool isRPositiveU(const UMorphism& u) {
  for (const auto& up : u.uppers)
    if (catArity(up) == 0) return false;
  return true;
}

}  // namespace opcat
