#include "opcat/halfedge.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "opcat/util.hpp"

namespace opcat {

int OperadicGraph::degree(int v) const {
  int d = 0;
  for (int u : base.adj)
    if (u == v) ++d;
  return d;
}

std::vector<int> OperadicGraph::halfEdgesAt(int v) const {
  std::vector<int> at;
  for (int h = 0; h < base.halfEdgeCount(); ++h)
    if (base.adj[h] == v) at.push_back(h);
  std::sort(at.begin(), at.end(), [&](int a, int b) { return slot[a] < slot[b]; });
  return at;
}

int OperadicGraph::halfEdgeAt(int v, int s) const {
  for (int h = 0; h < base.halfEdgeCount(); ++h)
    if (base.adj[h] == v && slot[h] == s) return h;
  throw IndexOutOfRange("no half-edge at requested (vertex, slot)");
}

void validate(const HalfEdgeGraph& g) {
  const int H = g.halfEdgeCount();
  require(static_cast<int>(g.adj.size()) == H, "adj and inv sizes differ");
  require(g.vertexCount >= 0, "negative vertex count");
  for (int h = 0; h < H; ++h) {
    require(g.inv[h] >= 0 && g.inv[h] < H, "involution out of range");
    require(g.inv[g.inv[h]] == h, "inv is not an involution");
    require(g.adj[h] >= 0 && g.adj[h] < g.vertexCount, "adjacency out of range");
  }
}

void validate(const OperadicGraph& g) {
  validate(g.base);
  const int H = g.base.halfEdgeCount();
  require(static_cast<int>(g.slot.size()) == H, "slot table has wrong size");
  // Per vertex, slots must be 0..deg-1 exactly once.
  std::vector<std::vector<int>> seen(g.base.vertexCount);
  for (int h = 0; h < H; ++h) seen[g.base.adj[h]].push_back(g.slot[h]);
  for (auto& s : seen) {
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
      require(s[i] == static_cast<int>(i), "slot order is not a bijection onto 0..deg-1");
  }
  int leafTotal = 0;
  for (int h = 0; h < H; ++h)
    if (g.base.isLeaf(h)) ++leafTotal;
  require(static_cast<int>(g.leaves.size()) == leafTotal, "leaf order has wrong size");
  std::vector<char> used(H, 0);
  for (int h : g.leaves) {
    require(h >= 0 && h < H && g.base.isLeaf(h), "leaf order names a non-leaf");
    require(!used[h], "leaf repeated in leaf order");
    used[h] = 1;
  }
}

void validate(const GenusGraph& g) {
  validate(g.shape);
  require(static_cast<int>(g.genus.size()) == g.vertexCount(), "genus table has wrong size");
  for (int x : g.genus) require(x >= 0, "negative genus");
}

int componentCount(const HalfEdgeGraph& g) {
  std::vector<int> parent(g.vertexCount);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < g.halfEdgeCount(); ++h) {
    if (!g.isLeaf(h) && h < g.inv[h]) {
      int a = find(g.adj[h]), b = find(g.adj[g.inv[h]]);
      if (a != b) parent[a] = b;
    }
  }
  int c = 0;
  for (int v = 0; v < g.vertexCount; ++v)
    if (find(v) == v) ++c;
  return c;
}

bool isConnected(const HalfEdgeGraph& g) { return componentCount(g) <= 1; }

int edgeCount(const HalfEdgeGraph& g) {
  int e = 0;
  for (int h = 0; h < g.halfEdgeCount(); ++h)
    if (!g.isLeaf(h)) ++e;
  return e / 2;
}

int betti(const HalfEdgeGraph& g) {
  return edgeCount(g) - g.vertexCount + componentCount(g);
}

int totalGenus(const GenusGraph& g) {
  int s = betti(g);
  for (int x : g.genus) s += x;
  return s;
}

GenusGraph buildGraph(int vertexCount, const std::vector<std::pair<VS, VS>>& edges,
                      const std::vector<VS>& leavesInOrder, const std::vector<int>& genus) {
  GenusGraph g;
  g.shape.base.vertexCount = vertexCount;
  g.genus = genus;
  auto addHalf = [&](const VS& vs) {
    g.shape.base.adj.push_back(vs.first);
    g.shape.slot.push_back(vs.second);
    g.shape.base.inv.push_back(static_cast<int>(g.shape.base.inv.size()));
    return static_cast<int>(g.shape.base.inv.size()) - 1;
  };
  for (const auto& [a, b] : edges) {
    int ha = addHalf(a), hb = addHalf(b);
    g.shape.base.inv[ha] = hb;
    g.shape.base.inv[hb] = ha;
  }
  for (const auto& vs : leavesInOrder) g.shape.leaves.push_back(addHalf(vs));
  g = normalizeHalfEdges(g);
  validate(g);
  return g;
}

GenusGraph corolla(int leafCnt, int genus) {
  std::vector<int> perm(leafCnt);
  std::iota(perm.begin(), perm.end(), 0);
  return corollaWithSlots(perm, genus);
}

GenusGraph corollaWithSlots(const std::vector<int>& leafPerm, int genus) {
  const int n = static_cast<int>(leafPerm.size());
  if (!isPermutation0(leafPerm)) throw BadPermutation("corolla leaf order is not a permutation");
  GenusGraph g;
  g.shape.base.vertexCount = 1;
  g.shape.base.inv.resize(n);
  g.shape.base.adj.assign(n, 0);
  g.shape.slot.resize(n);
  std::iota(g.shape.base.inv.begin(), g.shape.base.inv.end(), 0);
  std::iota(g.shape.slot.begin(), g.shape.slot.end(), 0);
  g.shape.leaves.resize(n);
  for (int i = 0; i < n; ++i) g.shape.leaves[i] = leafPerm[i];
  g.genus = {genus};
  return g;
}

GenusGraph normalizeHalfEdges(const GenusGraph& g) {
  const int H = g.shape.base.halfEdgeCount();
  // New index: half-edges sorted by (vertex, slot).
  std::vector<int> order(H);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.shape.base.adj[a] != g.shape.base.adj[b])
      return g.shape.base.adj[a] < g.shape.base.adj[b];
    return g.shape.slot[a] < g.shape.slot[b];
  });
  std::vector<int> newOf(H);
  for (int i = 0; i < H; ++i) newOf[order[i]] = i;
  GenusGraph out;
  out.shape.base.vertexCount = g.shape.base.vertexCount;
  out.shape.base.inv.resize(H);
  out.shape.base.adj.resize(H);
  out.shape.slot.resize(H);
  for (int h = 0; h < H; ++h) {
    out.shape.base.inv[newOf[h]] = newOf[g.shape.base.inv[h]];
    out.shape.base.adj[newOf[h]] = g.shape.base.adj[h];
    out.shape.slot[newOf[h]] = g.shape.slot[h];
  }
  out.shape.leaves.resize(g.shape.leaves.size());
  for (size_t i = 0; i < g.shape.leaves.size(); ++i)
    out.shape.leaves[i] = newOf[g.shape.leaves[i]];
  out.genus = g.genus;
  return out;
}

bool operator==(const GenusGraph& a, const GenusGraph& b) {
  return a.shape.base.vertexCount == b.shape.base.vertexCount &&
         a.shape.base.inv == b.shape.base.inv && a.shape.base.adj == b.shape.base.adj &&
         a.shape.slot == b.shape.slot && a.shape.leaves == b.shape.leaves && a.genus == b.genus;
}

std::string encode(const GenusGraph& g) {
  Encoder e;
  e.tag('V').num(g.vertexCount());
  for (int x : g.genus) e.num(x);
  e.tag('I');
  for (int h : g.shape.base.inv) e.num(h);
  e.tag('A');
  for (int v : g.shape.base.adj) e.num(v);
  e.tag('S');
  for (int s : g.shape.slot) e.num(s);
  e.tag('L');
  for (int h : g.shape.leaves) e.num(h);
  return e.key();
}

GenusGraph reorderVertices(const GenusGraph& g, const std::vector<int>& newOfOld) {
  require(static_cast<int>(newOfOld.size()) == g.vertexCount(), "relabeling has wrong size");
  if (!isPermutation0(newOfOld)) throw BadPermutation("vertex relabeling is not a permutation");
  GenusGraph out = g;
  for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h)
    out.shape.base.adj[h] = newOfOld[g.shape.base.adj[h]];
  out.genus.assign(g.vertexCount(), 0);
  for (int v = 0; v < g.vertexCount(); ++v) out.genus[newOfOld[v]] = g.genus[v];
  return normalizeHalfEdges(out);
}

GenusGraph insert(const GenusGraph& p, const std::vector<GenusGraph>& parts, bool checkGenus) {
  const int n = p.vertexCount();
  if (static_cast<int>(parts.size()) != n)
    throw ArityMismatch("insert: number of parts differs from number of vertices");
  std::vector<int> vertexBase(n + 1, 0);   // vertex index offsets per part
  std::vector<int> halfBase(n + 1, 0);     // half-edge index offsets per part
  for (int v = 0; v < n; ++v) {
    const GenusGraph& q = parts[v];
    if (q.leafCount() != p.shape.degree(v))
      throw ArityMismatch("insert: part leaf count differs from vertex degree");
    if (checkGenus && totalGenus(q) != p.genus[v])
      throw GenusMismatch("insert: part total genus differs from vertex genus");
    vertexBase[v + 1] = vertexBase[v] + q.vertexCount();
    halfBase[v + 1] = halfBase[v] + q.shape.base.halfEdgeCount();
  }

  GenusGraph out;
  out.shape.base.vertexCount = vertexBase[n];
  const int H = halfBase[n];
  out.shape.base.inv.resize(H);
  out.shape.base.adj.resize(H);
  out.shape.slot.resize(H);
  out.genus.resize(vertexBase[n]);
  for (int v = 0; v < n; ++v) {
    const GenusGraph& q = parts[v];
    for (int h = 0; h < q.shape.base.halfEdgeCount(); ++h) {
      out.shape.base.adj[halfBase[v] + h] = vertexBase[v] + q.shape.base.adj[h];
      out.shape.slot[halfBase[v] + h] = q.shape.slot[h];
      out.shape.base.inv[halfBase[v] + h] = halfBase[v] + q.shape.base.inv[h];  // leaves fixed up below
    }
    for (int u = 0; u < q.vertexCount(); ++u) out.genus[vertexBase[v] + u] = q.genus[u];
  }

  // Glue: the slot-k half-edge of p's vertex v corresponds to leaf k of
  // parts[v].  Edges of p pair those leaves; leaves of p survive in order.
  auto glued = [&](int pHalf) {  // part half-edge replacing a half-edge of p
    int v = p.shape.base.adj[pHalf];
    int k = p.shape.slot[pHalf];
    return halfBase[v] + parts[v].shape.leaves[k];
  };
  for (int h = 0; h < p.shape.base.halfEdgeCount(); ++h) {
    if (!p.shape.base.isLeaf(h) && h < p.shape.base.inv[h]) {
      int a = glued(h), b = glued(p.shape.base.inv[h]);
      out.shape.base.inv[a] = b;
      out.shape.base.inv[b] = a;
    }
  }
  out.shape.leaves.resize(p.leafCount());
  for (int i = 0; i < p.leafCount(); ++i) out.shape.leaves[i] = glued(p.shape.leaves[i]);
  return normalizeHalfEdges(out);
}

GenusGraph insertAtVertex(const GenusGraph& p, int v, const GenusGraph& part, bool checkGenus) {
  if (v < 0 || v >= p.vertexCount()) throw SlotOutOfRange("insertAtVertex: bad vertex");
  std::vector<GenusGraph> parts;
  parts.reserve(p.vertexCount());
  for (int u = 0; u < p.vertexCount(); ++u) {
    if (u == v) {
      parts.push_back(part);
    } else {
      parts.push_back(corolla(p.shape.degree(u), p.genus[u]));
    }
  }
  return insert(p, parts, checkGenus);
}

DfsResult dfs(const OperadicGraph& g, int startLeaf) {
  if (startLeaf < 0 || startLeaf >= static_cast<int>(g.leaves.size()))
    throw IndexOutOfRange("dfs: start leaf out of range");
  DfsResult r;
  r.entryHalfEdge.assign(g.base.vertexCount, -1);
  std::vector<char> visited(g.base.vertexCount, 0);

  // Walk from vertex v entered through half-edge entry.
  std::function<void(int, int)> walk = [&](int v, int entry) {
    visited[v] = 1;
    r.vertexOrder.push_back(v);
    r.entryHalfEdge[v] = entry;
    auto at = g.halfEdgesAt(v);
    const int d = static_cast<int>(at.size());
    const int s0 = g.slot[entry];
    for (int step = 1; step < d; ++step) {
      int h = at[(s0 + step) % d];
      if (h == entry) continue;
      if (g.base.isLeaf(h)) {
        r.leafOrder.push_back(h);
      } else {
        int far = g.base.inv[h];
        int w = g.base.adj[far];
        if (!visited[w]) {
          r.treeEdges.emplace_back(h, far);
          walk(w, far);
        }
      }
    }
  };

  int h0 = g.leaves[startLeaf];
  r.leafOrder.push_back(h0);
  walk(g.base.adj[h0], h0);
  return r;
}

std::vector<int> dfsOrder(const OperadicGraph& g, int startLeaf) {
  DfsResult r = dfs(g, startLeaf);
  if (static_cast<int>(r.vertexOrder.size()) != g.base.vertexCount)
    throw Disconnected("dfsOrder: graph is not connected");
  return r.vertexOrder;
}

GenusGraph normalizeVertexOrderByDfs(const GenusGraph& g, int startLeaf) {
  std::vector<int> order = dfsOrder(g.shape, startLeaf);
  std::vector<int> newOfOld(order.size());
  for (size_t i = 0; i < order.size(); ++i) newOfOld[order[i]] = static_cast<int>(i);
  return reorderVertices(g, newOfOld);
}

CanonicalResult canonicalForm(const GenusGraph& g) {
  validate(g);
  const int n = g.vertexCount();
  std::vector<int> best;
  std::vector<int> bestOrder;
  std::vector<int> cur(n, -1);
  std::vector<char> used(n, 0);

  // Branch and bound over vertex orders; the token stream of a prefix is a
  // prefix of the full stream, so lexicographic pruning is sound.
  std::function<void(int, std::vector<int>&)> rec = [&](int pos, std::vector<int>& prefixTokens) {
    if (pos == n) {
      if (best.empty() || prefixTokens < best) {
        best = prefixTokens;
        bestOrder = cur;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      cur[pos] = v;
      used[v] = 1;
      // Emit tokens for v at position pos.
      size_t mark = prefixTokens.size();
      std::vector<int> posOf(n, -1);
      for (int i = 0; i <= pos; ++i) posOf[cur[i]] = i;
      auto at = g.shape.halfEdgesAt(v);
      prefixTokens.push_back(g.genus[v]);
      prefixTokens.push_back(static_cast<int>(at.size()));
      const int H = g.shape.base.halfEdgeCount();
      std::vector<int> leafIndexOf(H, -1);
      for (size_t i = 0; i < g.shape.leaves.size(); ++i)
        leafIndexOf[g.shape.leaves[i]] = static_cast<int>(i);
      for (int h : at) {
        if (g.shape.base.isLeaf(h)) {
          prefixTokens.push_back(-1);
          prefixTokens.push_back(leafIndexOf[h]);
        } else {
          int far = g.shape.base.inv[h];
          int w = g.shape.base.adj[far];
          if ((posOf[w] >= 0 && posOf[w] < pos) ||
              (w == v && g.shape.slot[far] < g.shape.slot[h])) {
            prefixTokens.push_back(-2);
            prefixTokens.push_back(posOf[w]);
            prefixTokens.push_back(g.shape.slot[far]);
          } else {
            prefixTokens.push_back(-3);
          }
        }
      }
      bool prune = false;
      if (!best.empty()) {
        // Compare the produced prefix with the best stream.
        if (prefixTokens.size() <= best.size()) {
          auto mismatch = std::mismatch(prefixTokens.begin(), prefixTokens.end(), best.begin());
          if (mismatch.first == prefixTokens.end()) {
            prune = false;  // equal so far
          } else {
            prune = *mismatch.first > *mismatch.second;
          }
        }
      }
      if (!prune) rec(pos + 1, prefixTokens);
      prefixTokens.resize(mark);
      used[v] = 0;
      cur[pos] = -1;
    }
  };

  std::vector<int> tokens;
  rec(0, tokens);

  std::vector<int> newOfOld(n);
  for (int pos = 0; pos < n; ++pos) newOfOld[bestOrder[pos]] = pos;
  CanonicalResult res;
  res.canon = reorderVertices(g, newOfOld);
  res.newOfOld = newOfOld;
  res.key = encode(res.canon);
  return res;
}

bool isomorphic(const GenusGraph& a, const GenusGraph& b) {
  if (a.vertexCount() != b.vertexCount() ||
      a.shape.base.halfEdgeCount() != b.shape.base.halfEdgeCount() ||
      a.leafCount() != b.leafCount())
    return false;
  return canonicalForm(a).key == canonicalForm(b).key;
}

bool isomorphicBruteForce(const GenusGraph& a, const GenusGraph& b) {
  if (a.vertexCount() != b.vertexCount() || a.leafCount() != b.leafCount()) return false;
  bool found = false;
  forEachPermutation(a.vertexCount(), [&](const std::vector<int>& perm) {
    if (found) return;
    if (reorderVertices(a, perm) == normalizeHalfEdges(b)) found = true;
  });
  return found;
}

}  // namespace opcat
