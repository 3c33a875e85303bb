#include "opcat/operads.hpp"

#include <algorithm>
#include <numeric>

#include "opcat/util.hpp"

namespace opcat {

const char* familyName(Family f) {
  switch (f) {
    case Family::UCom: return "uCom";
    case Family::Com: return "Com";
    case Family::UAs: return "uAs";
    case Family::As: return "As";
    case Family::POp: return "pOp";
    case Family::SOp: return "sOp";
    case Family::COp: return "cOp";
    case Family::MOp: return "mOp";
    case Family::MOpG: return "mOpG";
    case Family::Free: return "free";
  }
  return "?";
}

Family familyFromName(const std::string& s) {
  for (Family f : {Family::UCom, Family::Com, Family::UAs, Family::As, Family::POp, Family::SOp,
                   Family::COp, Family::MOp, Family::MOpG, Family::Free})
    if (s == familyName(f)) return f;
  throw ParseError("unknown operad family: " + s);
}

bool isTable(Family f) {
  return f == Family::UCom || f == Family::Com || f == Family::UAs || f == Family::As;
}
bool isGraph(Family f) {
  return f == Family::POp || f == Family::SOp || f == Family::COp || f == Family::MOp ||
         f == Family::MOpG;
}
bool isRooted(Family f) { return f == Family::POp || f == Family::SOp; }
bool allowsPermutation(Family f) { return !(f == Family::UAs || f == Family::As); }

bool operator==(const FreeTree& a, const FreeTree& b) {
  if (a.gen != b.gen || a.label != b.label || a.kids.size() != b.kids.size()) return false;
  for (size_t i = 0; i < a.kids.size(); ++i)
    if (!(a.kids[i] == b.kids[i])) return false;
  return true;
}

int freeArity(const FreeTree& t) {
  if (t.isLeafNode()) return 1;
  int n = 0;
  for (const auto& k : t.kids) n += freeArity(k);
  return n;
}

FreeTree freeUnit() {
  FreeTree t;
  t.label = 1;
  return t;
}

FreeTree freeGenerator(const std::string& name, int arity) {
  FreeTree t;
  t.gen = name;
  for (int i = 1; i <= arity; ++i) {
    FreeTree leaf;
    leaf.label = i;
    t.kids.push_back(leaf);
  }
  return t;
}

namespace {

void collectLabels(const FreeTree& t, std::vector<int>& out) {
  if (t.isLeafNode()) {
    out.push_back(t.label);
    return;
  }
  for (const auto& k : t.kids) collectLabels(k, out);
}

void relabelLeaves(FreeTree& t, const std::vector<int>& newOfOld /* 1-based */) {
  if (t.isLeafNode()) {
    t.label = newOfOld[t.label - 1];
    return;
  }
  for (auto& k : t.kids) relabelLeaves(k, newOfOld);
}

void encodeFree(const FreeTree& t, Encoder& e) {
  if (t.isLeafNode()) {
    e.tag('l').num(t.label);
    return;
  }
  e.tag('(').str(t.gen).num(static_cast<long long>(t.kids.size()));
  for (const auto& k : t.kids) encodeFree(k, e);
  e.tag(')');
}

void validateFree(const FreeTree& t) {
  std::vector<int> labels;
  collectLabels(t, labels);
  std::sort(labels.begin(), labels.end());
  for (size_t i = 0; i < labels.size(); ++i)
    require(labels[i] == static_cast<int>(i) + 1, "free tree leaf labels are not 1..n");
}

// Replaces the leaf labeled `at` by q whose labels are shifted by at-1;
// labels above `at` in p shift by arity(q)-1.
FreeTree graft(const FreeTree& p, int at, const FreeTree& q, int qArity) {
  if (p.isLeafNode()) {
    if (p.label != at) {
      FreeTree leaf = p;
      if (leaf.label > at) leaf.label += qArity - 1;
      return leaf;
    }
    FreeTree sub = q;
    std::vector<int> shift(qArity);
    for (int j = 1; j <= qArity; ++j) shift[j - 1] = at + j - 1;
    relabelLeaves(sub, shift);
    return sub;
  }
  FreeTree out;
  out.gen = p.gen;
  for (const auto& k : p.kids) out.kids.push_back(graft(k, at, q, qArity));
  return out;
}

bool rootedValid(const GenusGraph& g) {
  if (g.leafCount() == 0) return false;
  if (g.shape.slot[g.shape.leaves[0]] != 0) return false;
  DfsResult r = dfs(g.shape, 0);
  if (static_cast<int>(r.vertexOrder.size()) != g.vertexCount()) return false;
  for (auto& [parentHalf, childHalf] : r.treeEdges)
    if (g.shape.slot[childHalf] != 0) return false;
  return true;
}

bool planarLeafOrder(const GenusGraph& g) {
  DfsResult r = dfs(g.shape, 0);
  if (r.leafOrder.size() != g.shape.leaves.size()) return false;
  for (size_t i = 0; i < r.leafOrder.size(); ++i)
    if (r.leafOrder[i] != g.shape.leaves[i]) return false;
  return true;
}

}  // namespace

Operation tableOp(Family f, int arity) {
  require(isTable(f), "tableOp: family is not table-based");
  Operation op;
  op.family = f;
  op.arity = arity;
  validate(op);
  return op;
}

Operation graphOp(Family f, GenusGraph g) {
  require(isGraph(f), "graphOp: family is not graph-based");
  Operation op;
  op.family = f;
  op.graph = normalizeHalfEdges(g);
  validate(op);
  return op;
}

Operation freeOp(FreeTree t) {
  Operation op;
  op.family = Family::Free;
  op.tree = std::move(t);
  validate(op);
  return op;
}

bool operator==(const Operation& a, const Operation& b) {
  if (a.family != b.family) return false;
  if (isTable(a.family)) return a.arity == b.arity;
  if (isGraph(a.family)) return a.graph == b.graph;
  return a.tree == b.tree;
}

std::string encode(const Operation& op) {
  Encoder e;
  e.str(familyName(op.family));
  if (isTable(op.family)) {
    e.num(op.arity);
  } else if (isGraph(op.family)) {
    e.str(encode(op.graph));
  } else {
    encodeFree(op.tree, e);
  }
  return e.key();
}

void validate(const Operation& op) {
  if (isTable(op.family)) {
    require(op.arity >= 0, "negative arity");
    if (op.family == Family::Com || op.family == Family::As)
      require(op.arity >= 1, "Com/As exclude arity 0");
    return;
  }
  if (op.family == Family::Free) {
    validateFree(op.tree);
    return;
  }
  validate(op.graph);
  require(isConnected(op.graph.shape.base), "graph operation must be connected");
  switch (op.family) {
    case Family::POp:
      require(betti(op.graph) == 0, "pOp payload must be a tree");
      require(totalGenus(op.graph) == 0, "pOp payload carries no genus");
      require(rootedValid(op.graph), "pOp payload must be rooted at leaf 0");
      require(planarLeafOrder(op.graph), "pOp leaf order must be the planar order");
      break;
    case Family::SOp:
      require(betti(op.graph) == 0, "sOp payload must be a tree");
      require(totalGenus(op.graph) == 0, "sOp payload carries no genus");
      require(rootedValid(op.graph), "sOp payload must be rooted at leaf 0");
      break;
    case Family::COp:
      require(betti(op.graph) == 0, "cOp payload must be a tree");
      require(totalGenus(op.graph) == 0, "cOp payload carries no genus");
      require(op.graph.leafCount() >= 1, "cOp payload needs a marked 0-th leaf");
      break;
    case Family::MOp:
      for (int x : op.graph.genus) require(x == 0, "mOp payload carries no genus");
      break;
    case Family::MOpG:
      break;
    default:
      break;
  }
}

int arity(const Operation& op) {
  if (isTable(op.family)) return op.arity;
  if (op.family == Family::Free) return freeArity(op.tree);
  if (op.graph.leafCount() == 0)
    throw NotApplicable("leafless graph operation has no grafting arity");
  return op.graph.leafCount() - 1;
}

Operation composeAt(const Operation& p, int i, const Operation& q) {
  if (p.family != q.family) throw ColorMismatch("composeAt: mixed families");
  const int n = arity(p);
  if (i < 1 || i > n) throw SlotOutOfRange("composeAt: slot out of range");
  if (isTable(p.family)) {
    return tableOp(p.family, n + arity(q) - 1);
  }
  if (p.family == Family::Free) {
    Operation out;
    out.family = Family::Free;
    out.tree = graft(p.tree, i, q.tree, freeArity(q.tree));
    return out;
  }
  // Graph families: glue leaf i of p to leaf 0 of q.
  const GenusGraph& gp = p.graph;
  const GenusGraph& gq = q.graph;
  const int hp = gp.shape.base.halfEdgeCount();
  GenusGraph out;
  out.shape.base.vertexCount = gp.vertexCount() + gq.vertexCount();
  out.shape.base.inv = gp.shape.base.inv;
  out.shape.base.adj = gp.shape.base.adj;
  out.shape.slot = gp.shape.slot;
  for (int h = 0; h < gq.shape.base.halfEdgeCount(); ++h) {
    out.shape.base.inv.push_back(hp + gq.shape.base.inv[h]);
    out.shape.base.adj.push_back(gp.vertexCount() + gq.shape.base.adj[h]);
    out.shape.slot.push_back(gq.shape.slot[h]);
  }
  int a = gp.shape.leaves[i];
  int b = hp + gq.shape.leaves[0];
  out.shape.base.inv[a] = b;
  out.shape.base.inv[b] = a;
  out.shape.leaves.clear();
  out.shape.leaves.push_back(gp.shape.leaves[0]);
  for (int k = 1; k < i; ++k) out.shape.leaves.push_back(gp.shape.leaves[k]);
  for (int k = 1; k < gq.leafCount(); ++k) out.shape.leaves.push_back(hp + gq.shape.leaves[k]);
  for (int k = i + 1; k < gp.leafCount(); ++k) out.shape.leaves.push_back(gp.shape.leaves[k]);
  out.genus = gp.genus;
  out.genus.insert(out.genus.end(), gq.genus.begin(), gq.genus.end());
  Operation res;
  res.family = p.family;
  res.graph = normalizeVertexOrderByDfs(normalizeHalfEdges(out), 0);
  validate(res);
  return res;
}

Operation symAct(const Operation& p, const std::vector<int>& sigma) {
  const int n = arity(p);
  if (static_cast<int>(sigma.size()) != n || !isPermutation1(sigma))
    throw BadPermutation("symAct: not a permutation of 1..arity");
  if (p.family == Family::UCom || p.family == Family::Com) return p;
  bool identity = true;
  for (int j = 1; j <= n; ++j)
    if (sigma[j - 1] != j) identity = false;
  if (p.family == Family::UAs || p.family == Family::As) {
    if (!identity) throw BadPermutation("symAct: uAs/As carry no symmetric structure");
    return p;
  }
  if (identity) return p;
  if (p.family == Family::Free) {
    // The leaf labeled j is relabeled sigma(j).
    Operation out = p;
    relabelLeaves(out.tree, sigma);
    return out;
  }
  Operation out = p;
  if (out.family == Family::POp) out.family = Family::SOp;
  for (int j = 1; j <= n; ++j) out.graph.shape.leaves[sigma[j - 1]] = p.graph.shape.leaves[j];
  validate(out);
  return out;
}

Operation promote(const Operation& op, Family to) {
  require(isGraph(op.family) && isGraph(to), "promote: graph families only");
  Operation out = op;
  out.family = to;
  validate(out);
  return out;
}

int catArity(const Operation& op) {
  if (isTable(op.family)) return op.arity;
  if (op.family == Family::Free) return freeArity(op.tree);
  return op.graph.vertexCount();
}

Color inColor(const Operation& op, int i) {
  if (i < 1 || i > catArity(op)) throw SlotOutOfRange("inColor: slot out of range");
  if (!isGraph(op.family)) return Color{};
  int v = i - 1;
  return Color{op.graph.shape.degree(v),
               op.family == Family::MOpG ? op.graph.genus[v] : -1};
}

Color outColor(const Operation& op) {
  if (!isGraph(op.family)) return Color{};
  return Color{op.graph.leafCount(),
               op.family == Family::MOpG ? totalGenus(op.graph) : -1};
}

Operation identityOp(Family f, Color c) {
  if (isTable(f)) return tableOp(f, 1);
  if (f == Family::Free) return freeOp(freeUnit());
  require(c.size >= 0, "identityOp: graph families need a colour");
  return graphOp(f, corolla(c.size, c.genus < 0 ? 0 : c.genus));
}

bool isIdentityOp(const Operation& op) {
  if (isTable(op.family)) return op.arity == 1;
  if (op.family == Family::Free) return op.tree.isLeafNode();
  if (op.graph.vertexCount() != 1) return false;
  for (int i = 0; i < op.graph.leafCount(); ++i)
    if (op.graph.shape.slot[op.graph.shape.leaves[i]] != i) return false;
  return edgeCount(op.graph.shape.base) == 0;
}

Operation catCompose(const Operation& op, const std::vector<Operation>& parts) {
  const int n = catArity(op);
  if (static_cast<int>(parts.size()) != n)
    throw ArityMismatch("catCompose: wrong number of parts");
  for (const auto& q : parts)
    if (q.family != op.family) throw ColorMismatch("catCompose: mixed families");
  if (isTable(op.family)) {
    int total = 0;
    for (const auto& q : parts) total += q.arity;
    return tableOp(op.family, total);
  }
  if (op.family == Family::Free) {
    // Graft everything at the leaves, relabeling blocks consecutively.
    FreeTree acc = op.tree;
    int offset = 0;
    for (int i = 0; i < n; ++i) {
      // After grafting earlier parts, the former leaf i+1 is now labeled
      // offset + 1.
      acc = graft(acc, offset + 1, parts[i].tree, freeArity(parts[i].tree));
      offset += freeArity(parts[i].tree);
    }
    Operation out;
    out.family = Family::Free;
    out.tree = acc;
    validate(out);
    return out;
  }
  std::vector<GenusGraph> graphs;
  graphs.reserve(parts.size());
  for (const auto& q : parts) {
    if (q.graph.leafCount() != op.graph.shape.degree(static_cast<int>(graphs.size())))
      throw ArityMismatch("catCompose: part leaf count differs from vertex degree");
    graphs.push_back(q.graph);
  }
  GenusGraph composed = insert(op.graph, graphs, op.family != Family::MOp);
  Operation out;
  out.family = op.family;
  out.graph = composed;
  validate(out);
  return out;
}

Operation catComposeAt(const Operation& op, int i, const Operation& part) {
  const int n = catArity(op);
  if (i < 1 || i > n) throw SlotOutOfRange("catComposeAt: slot out of range");
  std::vector<Operation> parts;
  parts.reserve(n);
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      parts.push_back(part);
    } else {
      parts.push_back(identityOp(op.family, inColor(op, j)));
    }
  }
  return catCompose(op, parts);
}

Operation reorderCatSlots(const Operation& op, const std::vector<int>& newOfOld) {
  if (static_cast<int>(newOfOld.size()) != catArity(op))
    throw BadPermutation("reorderCatSlots: wrong size");
  if (!isPermutation0(newOfOld)) throw BadPermutation("reorderCatSlots: not a permutation");
  if (isTable(op.family)) return op;
  if (op.family == Family::Free) {
    Operation out = op;
    std::vector<int> shift(newOfOld.size());
    for (size_t k = 0; k < newOfOld.size(); ++k) shift[k] = newOfOld[k] + 1;
    relabelLeaves(out.tree, shift);
    return out;
  }
  Operation out = op;
  out.graph = reorderVertices(op.graph, newOfOld);
  return out;
}

bool OperadHandle::admits(const Operation& op) const {
  if (op.family != family) return false;
  try {
    validate(op);
  } catch (const Error&) {
    return false;
  }
  if (nu && isTable(family) && op.arity == 0) return false;
  return true;
}

OperadHandle nuRestrict(const OperadHandle& h) { return OperadHandle{h.family, true}; }

}  // namespace opcat
