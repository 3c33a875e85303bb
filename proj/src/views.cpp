#include "opcat/views.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "opcat/util.hpp"

namespace opcat {

namespace {

// ---- planar tree shapes ----

struct TreeShape;
using Kid = std::optional<TreeShape>;  // nullopt marks an input leaf

struct TreeShape {
  std::vector<Kid> kids;
};

using ShapeKey = std::pair<int, int>;  // (input leaves, vertices)
std::map<ShapeKey, std::vector<TreeShape>>& shapeMemo() {
  static std::map<ShapeKey, std::vector<TreeShape>> memo;
  return memo;
}

const std::vector<TreeShape>& shapesLV(int leaves, int vertices);

// Children lists consuming exactly `leaves` inputs whose subtrees hold
// exactly `vertices` vertices in total.
std::vector<std::vector<Kid>> kidLists(int leaves, int vertices) {
  std::vector<std::vector<Kid>> out;
  if (leaves == 0 && vertices == 0) {
    out.push_back({});
    return out;
  }
  if (leaves < 0 || vertices < 0) return out;
  // First child an input leaf.
  if (leaves >= 1) {
    for (auto& rest : kidLists(leaves - 1, vertices)) {
      std::vector<Kid> lst;
      lst.push_back(std::nullopt);
      lst.insert(lst.end(), rest.begin(), rest.end());
      out.push_back(std::move(lst));
    }
  }
  // First child a subtree.
  for (int l = 0; l <= leaves; ++l)
    for (int v = 1; v <= vertices; ++v) {
      const auto& subs = shapesLV(l, v);
      if (subs.empty()) continue;
      auto rests = kidLists(leaves - l, vertices - v);
      for (const auto& sub : subs)
        for (const auto& rest : rests) {
          std::vector<Kid> lst;
          lst.push_back(sub);
          lst.insert(lst.end(), rest.begin(), rest.end());
          out.push_back(std::move(lst));
        }
    }
  return out;
}

const std::vector<TreeShape>& shapesLV(int leaves, int vertices) {
  ShapeKey key{leaves, vertices};
  auto it = shapeMemo().find(key);
  if (it != shapeMemo().end()) return it->second;
  std::vector<TreeShape> out;
  if (vertices >= 1) {
    for (auto& kids : kidLists(leaves, vertices - 1)) {
      TreeShape s;
      s.kids = std::move(kids);
      out.push_back(std::move(s));
    }
  }
  return shapeMemo()[key] = std::move(out);
}

struct ShapeBuild {
  std::vector<std::pair<VS, VS>> edges;
  std::vector<VS> leaves;  // planar order, root leaf first
  int nextVertex = 0;
};

// One prefix walk records vertices, edges and leaves in planar order.
void layoutShapePrefix(const TreeShape& s, int v, ShapeBuild& b) {
  int slot = 1;
  for (const auto& k : s.kids) {
    if (!k) {
      b.leaves.push_back({v, slot++});
    } else {
      int child = b.nextVertex++;
      b.edges.push_back({{v, slot++}, {child, 0}});
      layoutShapePrefix(*k, child, b);
    }
  }
}

Operation shapeToOp(const TreeShape& s) {
  ShapeBuild b;
  int root = b.nextVertex++;
  b.leaves.push_back({root, 0});  // root leaf
  layoutShapePrefix(s, root, b);
  GenusGraph g = buildGraph(b.nextVertex, b.edges, b.leaves, std::vector<int>(b.nextVertex, 0));
  return graphOp(Family::POp, g);
}

// ---- connected subsets and partitions ----

std::vector<std::vector<int>> connectedSubsets(const GenusGraph& g) {
  const int n = g.vertexCount();
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    // Connectivity of the induced subgraph.
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) verts.push_back(v);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{verts[0]};
    seen[verts[0]] = 1;
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h) {
        if (g.shape.base.adj[h] != v || g.shape.base.isLeaf(h)) continue;
        int w = g.shape.base.adj[g.shape.base.inv[h]];
        if ((mask & (1 << w)) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (count == static_cast<int>(verts.size())) out.push_back(verts);
  }
  return out;
}

// All partitions of `verts` into connected blocks of g.
void connectedPartitionsRec(const GenusGraph& g, std::vector<int> remaining,
                            std::vector<std::vector<int>>& acc,
                            std::vector<std::vector<std::vector<int>>>& out) {
  if (remaining.empty()) {
    out.push_back(acc);
    return;
  }
  // The block containing the smallest remaining vertex.
  int anchor = remaining[0];
  auto subs = connectedSubsets(g);
  for (const auto& block : subs) {
    if (std::find(block.begin(), block.end(), anchor) == block.end()) continue;
    bool inside = std::all_of(block.begin(), block.end(), [&](int v) {
      return std::find(remaining.begin(), remaining.end(), v) != remaining.end();
    });
    if (!inside) continue;
    std::vector<int> rest;
    for (int v : remaining)
      if (std::find(block.begin(), block.end(), v) == block.end()) rest.push_back(v);
    acc.push_back(block);
    connectedPartitionsRec(g, rest, acc, out);
    acc.pop_back();
  }
}

// ---- label assignments ----

// All ways to distribute {1..m} over blocks of the given sizes, each block
// listed in increasing order.
void forEachBlockAssignment(const std::vector<int>& sizes,
                            const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  int m = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::vector<int>> blocks(sizes.size());
  std::function<void(size_t, std::vector<int>&)> rec = [&](size_t bi, std::vector<int>& rem) {
    if (bi == sizes.size()) {
      fn(blocks);
      return;
    }
    const int k = sizes[bi];
    // Choose k of the remaining labels, in increasing order.
    std::vector<int> idx(k);
    std::function<void(int, int)> choose = [&](int start, int depth) {
      if (depth == k) {
        std::vector<int> rest;
        blocks[bi].clear();
        std::vector<char> take(rem.size(), 0);
        for (int t = 0; t < k; ++t) take[idx[t]] = 1;
        for (size_t t = 0; t < rem.size(); ++t)
          (take[t] ? blocks[bi] : rest).push_back(rem[t]);
        rec(bi + 1, rest);
        return;
      }
      for (int i = start; i < static_cast<int>(rem.size()); ++i) {
        idx[depth] = i;
        choose(i + 1, depth + 1);
      }
    };
    choose(0, 0);
  };
  rec(0, pool);
}

void forEachComposition(int total, int parts, int lo,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(parts, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts) {
      if (left == 0) fn(cur);
      return;
    }
    for (int v = lo; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) fn(cur);
    return;
  }
  rec(0, total);
}

std::vector<std::vector<int>> allPermutations(int n) {
  std::vector<std::vector<int>> out;
  forEachPermutation(n, [&](const std::vector<int>& p) {
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = p[i] + 1;
    out.push_back(q);
  });
  return out;
}

}  // namespace

std::vector<Operation> allTableOps(Family f, int maxArity, bool nu) {
  std::vector<Operation> out;
  int lo = (f == Family::Com || f == Family::As || nu) ? 1 : 0;
  for (int a = lo; a <= maxArity; ++a) out.push_back(tableOp(f, a));
  return out;
}

std::vector<Operation> allPlanarOps(int inputs, int maxVertices) {
  std::vector<Operation> out;
  for (int v = 1; v <= maxVertices; ++v)
    for (const auto& s : shapesLV(inputs, v)) out.push_back(shapeToOp(s));
  return out;
}

std::vector<Operation> allSymOps(int inputs, int maxVertices) {
  std::vector<Operation> out;
  auto perms = allPermutations(inputs);
  for (const auto& planar : allPlanarOps(inputs, maxVertices)) {
    Operation base = promote(planar, Family::SOp);
    for (const auto& perm : perms) out.push_back(symAct(base, perm));
  }
  return out;
}

std::vector<GenusGraph> allGenusGraphs(int leafCount, int maxVertices, int maxEdges,
                                       int maxTotalGenus) {
  std::vector<GenusGraph> out;
  std::set<std::string> seen;
  for (int V = 1; V <= maxVertices; ++V) {
    for (int E = 0; E <= maxEdges; ++E) {
      const int H = leafCount + 2 * E;
      // Degree tuples.
      std::vector<int> deg(V, 0);
      std::function<void(int, int)> degRec = [&](int v, int left) {
        if (v == V) {
          if (left != 0) return;
          // Slot universe: (vertex, slot) pairs flattened.
          std::vector<int> vertexOf(H);
          {
            int h = 0;
            for (int w = 0; w < V; ++w)
              for (int s = 0; s < deg[w]; ++s) vertexOf[h++] = w;
          }
          // Involutions with exactly leafCount fixed points.
          std::vector<int> mate(H, -1);
          std::function<void(int, int)> pairRec = [&](int freeLeaves, int pairsLeft) {
            int h = 0;
            while (h < H && mate[h] != -1) ++h;
            if (h == H) {
              if (freeLeaves != 0 || pairsLeft != 0) return;
              // Assemble the graph.
              std::vector<std::pair<VS, VS>> edges;
              std::vector<VS> leaves;
              std::vector<int> slotOf(H);
              {
                int x = 0;
                for (int w = 0; w < V; ++w)
                  for (int s = 0; s < deg[w]; ++s) slotOf[x++] = s;
              }
              for (int a = 0; a < H; ++a) {
                if (mate[a] == a) leaves.push_back({vertexOf[a], slotOf[a]});
                else if (a < mate[a])
                  edges.push_back({{vertexOf[a], slotOf[a]}, {vertexOf[mate[a]], slotOf[mate[a]]}});
              }
              GenusGraph g0 = buildGraph(V, edges, leaves, std::vector<int>(V, 0));
              if (!isConnected(g0.shape.base)) return;
              int b = betti(g0.shape.base);
              if (b > maxTotalGenus) return;
              // All genus vectors within the remaining budget.
              std::vector<int> gen(V, 0);
              std::function<void(int, int)> genRec = [&](int w, int budget) {
                if (w == V) {
                  GenusGraph g = g0;
                  g.genus = gen;
                  if (seen.insert(encode(g)).second) out.push_back(g);
                  return;
                }
                for (int x = 0; x <= budget; ++x) {
                  gen[w] = x;
                  genRec(w + 1, budget - x);
                }
              };
              genRec(0, maxTotalGenus - b);
              return;
            }
            if (freeLeaves > 0) {
              mate[h] = h;
              pairRec(freeLeaves - 1, pairsLeft);
              mate[h] = -1;
            }
            if (pairsLeft > 0) {
              for (int h2 = h + 1; h2 < H; ++h2) {
                if (mate[h2] != -1) continue;
                mate[h] = h2;
                mate[h2] = h;
                pairRec(freeLeaves, pairsLeft - 1);
                mate[h] = -1;
                mate[h2] = -1;
              }
            }
          };
          pairRec(leafCount, E);
          return;
        }
        int lo = V >= 2 ? 1 : 0;
        for (int d = lo; d <= left; ++d) {
          deg[v] = d;
          degRec(v + 1, left - d);
        }
      };
      degRec(0, H);
    }
  }
  return out;
}

std::vector<TwoLevelTree> homTableC(Family f, int n, int m, bool nu) {
  std::vector<TwoLevelTree> out;
  int lo = (f == Family::Com || f == Family::As || nu) ? 1 : 0;
  const bool free = allowsPermutation(f);
  forEachComposition(n, m, lo, [&](const std::vector<int>& sizes) {
    TwoLevelTree t;
    t.target = tableOp(f, m);
    for (int s : sizes) t.uppers.push_back(tableOp(f, s));
    if (!free) {
      t.leafIdx.resize(n);
      std::iota(t.leafIdx.begin(), t.leafIdx.end(), 1);
      out.push_back(t);
      return;
    }
    forEachBlockAssignment(sizes, [&](const std::vector<std::vector<int>>& blocks) {
      t.leafIdx.clear();
      for (const auto& b : blocks) t.leafIdx.insert(t.leafIdx.end(), b.begin(), b.end());
      out.push_back(t);
    });
  });
  return out;
}

std::vector<ThreeLevelTree> homTableTw(Family f, const Operation& source, int targetArity) {
  std::vector<ThreeLevelTree> out;
  const int a = catArity(source);
  const int lo = (f == Family::Com || f == Family::As) ? 1 : 0;
  const bool planar = (f == Family::UAs || f == Family::As);
  for (int k = 1; k <= targetArity + 1; ++k) {
    if (k - 1 > targetArity) break;
    forEachComposition(targetArity - (k - 1), a, lo, [&](const std::vector<int>& sizes) {
      for (int ls = 1; ls <= (planar ? k : 1); ++ls) {
        ThreeLevelTree t;
        t.lower = tableOp(f, k);
        t.lowerSlot = ls;
        t.middle = source;
        for (int s : sizes) t.uppers.push_back(tableOp(f, s));
        if (planar) {
          t.leafIdx.resize(targetArity);
          std::iota(t.leafIdx.begin(), t.leafIdx.end(), 1);
          out.push_back(t);
          continue;
        }
        // Symmetric: blocks are the uppers then the k-1 lower slots.
        std::vector<int> blockSizes = sizes;
        blockSizes.push_back(k - 1);
        forEachBlockAssignment(blockSizes, [&](const std::vector<std::vector<int>>& blocks) {
          t.leafIdx.clear();
          for (const auto& b : blocks) t.leafIdx.insert(t.leafIdx.end(), b.begin(), b.end());
          out.push_back(t);
        });
      }
    });
  }
  return out;
}

std::vector<UMorphism> homTableU(Family f, int middleArity, int targetArity) {
  std::vector<UMorphism> out;
  for (const auto& t : homTableTw(f, tableOp(f, middleArity), targetArity)) out.push_back(toU(t));
  // Distinct three-level trees over a single middle operation strip to
  // distinct enveloping morphisms, so no deduplication is needed.
  return out;
}

// ---- graph families ----

std::vector<TwoLevelTree> graphHom(const Operation& p, const Operation& q) {
  std::vector<TwoLevelTree> out;
  if (p.family != q.family || !isGraph(p.family)) return out;
  const GenusGraph& gp = p.graph;
  const GenusGraph& gq = q.graph;
  const int np = gp.vertexCount(), nq = gq.vertexCount();
  if (gp.leafCount() != gq.leafCount()) return out;

  forEachFunction(nq, np, [&](const std::vector<int>& phi) {
    // Blocks must be nonempty.
    std::vector<std::vector<int>> block(np);
    for (int v = 0; v < nq; ++v) block[phi[v]].push_back(v);
    for (int l = 0; l < np; ++l)
      if (block[l].empty()) return;

    // chi: half-edge of p -> half-edge of q.
    const int Hp = gp.shape.base.halfEdgeCount();
    std::vector<int> chi(Hp, -1);

    // Leaves of p map to the same-index leaves of q.
    for (int j = 0; j < gp.leafCount(); ++j) {
      int hp = gp.shape.leaves[j];
      int hq = gq.shape.leaves[j];
      if (phi[gq.shape.base.adj[hq]] != gp.shape.base.adj[hp]) return;
      chi[hp] = hq;
    }

    // Group the edges of p by block pair, and the candidate edges of q.
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> pEdges, qEdges;
    for (int h = 0; h < Hp; ++h) {
      if (gp.shape.base.isLeaf(h) || h > gp.shape.base.inv[h]) continue;
      int a = gp.shape.base.adj[h], b = gp.shape.base.adj[gp.shape.base.inv[h]];
      auto key = std::minmax(a, b);
      pEdges[{key.first, key.second}].push_back({h, gp.shape.base.inv[h]});
    }
    for (int h = 0; h < gq.shape.base.halfEdgeCount(); ++h) {
      if (gq.shape.base.isLeaf(h) || h > gq.shape.base.inv[h]) continue;
      int a = phi[gq.shape.base.adj[h]], b = phi[gq.shape.base.adj[gq.shape.base.inv[h]]];
      auto key = std::minmax(a, b);
      qEdges[{key.first, key.second}].push_back({h, gq.shape.base.inv[h]});
    }
    // Crossing q-edges must be matched exactly; internal ones may stay.
    for (auto& [key, qs] : qEdges) {
      if (key.first == key.second) continue;
      if (pEdges[{key.first, key.second}].size() != qs.size()) return;
    }
    for (auto& [key, ps] : pEdges) {
      auto it = qEdges.find(key);
      size_t avail = it == qEdges.end() ? 0 : it->second.size();
      if (avail < ps.size()) return;
    }

    // Enumerate matchings bundle by bundle.
    std::vector<std::pair<int, int>> bundleKeysv;
    for (auto& [key, ps] : pEdges) bundleKeysv.push_back(key);

    std::function<void(size_t)> matchBundle = [&](size_t bi) {
      if (bi == bundleKeysv.size()) {
        // chi complete; cut edges of q are exactly the chi-image edges.
        std::vector<char> cut(gq.shape.base.halfEdgeCount(), 0);
        for (int h = 0; h < Hp; ++h)
          if (!gp.shape.base.isLeaf(h)) cut[chi[h]] = 1;
        // Build each part.
        std::vector<GenusGraph> parts(np);
        std::vector<std::vector<int>> partVertexOf(np);  // q vertex -> index inside part
        std::vector<int> inPartIndex(nq, -1), partOf(nq, -1);
        for (int l = 0; l < np; ++l)
          for (size_t u = 0; u < block[l].size(); ++u) {
            inPartIndex[block[l][u]] = static_cast<int>(u);
            partOf[block[l][u]] = l;
          }
        for (int l = 0; l < np; ++l) {
          GenusGraph part;
          part.shape.base.vertexCount = static_cast<int>(block[l].size());
          std::vector<int> halfNew(gq.shape.base.halfEdgeCount(), -1);
          for (int h = 0; h < gq.shape.base.halfEdgeCount(); ++h) {
            if (partOf[gq.shape.base.adj[h]] != l) continue;
            halfNew[h] = static_cast<int>(part.shape.base.adj.size());
            part.shape.base.adj.push_back(inPartIndex[gq.shape.base.adj[h]]);
            part.shape.slot.push_back(gq.shape.slot[h]);
            part.shape.base.inv.push_back(-1);
          }
          for (int h = 0; h < gq.shape.base.halfEdgeCount(); ++h) {
            if (halfNew[h] < 0) continue;
            int m = gq.shape.base.inv[h];
            bool leaf = gq.shape.base.isLeaf(h) || cut[h] || partOf[gq.shape.base.adj[m]] != l;
            part.shape.base.inv[halfNew[h]] = leaf ? halfNew[h] : halfNew[m];
          }
          // Leaf order from the slots of p's vertex l.
          auto at = gp.shape.halfEdgesAt(l);
          for (int hp : at) part.shape.leaves.push_back(halfNew[chi[hp]]);
          for (int v : block[l]) part.genus.push_back(gq.genus[v]);
          part = normalizeHalfEdges(part);
          if (!isConnected(part.shape.base)) return;
          if (p.family == Family::MOpG && totalGenus(part) != gp.genus[l]) return;
          parts[l] = part;
        }
        TwoLevelTree t;
        t.target = p;
        bool ok = true;
        for (int l = 0; l < np && ok; ++l) {
          Operation u;
          u.family = p.family;
          u.graph = parts[l];
          try {
            validate(u);
          } catch (const Error&) {
            ok = false;
          }
          t.uppers.push_back(u);
        }
        if (!ok) return;
        for (int l = 0; l < np; ++l)
          for (int v : block[l]) t.leafIdx.push_back(v + 1);
        try {
          validate(t);
        } catch (const Error&) {
          return;
        }
        if (sourceOf2(t) != q) return;
        out.push_back(t);
        return;
      }
      auto key = bundleKeysv[bi];
      auto& ps = pEdges[key];
      auto& qs = qEdges[key];
      // Choose |ps| of the q-edges and a bijection with orientations.
      std::vector<int> sel(qs.size(), 0);
      std::vector<int> order(ps.size());
      std::function<void(size_t)> chooseRec = [&](size_t pi) {
        if (pi == ps.size()) {
          matchBundle(bi + 1);
          return;
        }
        auto [hpA, hpB] = ps[pi];
        for (size_t qi = 0; qi < qs.size(); ++qi) {
          if (sel[qi]) continue;
          auto [hqA, hqB] = qs[qi];
          sel[qi] = 1;
          // Two orientations; for cross-block edges only one matches phi.
          for (int o = 0; o < 2; ++o) {
            int x = o == 0 ? hqA : hqB;
            int y = o == 0 ? hqB : hqA;
            if (phi[gq.shape.base.adj[x]] != gp.shape.base.adj[hpA]) continue;
            if (phi[gq.shape.base.adj[y]] != gp.shape.base.adj[hpB]) continue;
            chi[hpA] = x;
            chi[hpB] = y;
            chooseRec(pi + 1);
            chi[hpA] = chi[hpB] = -1;
          }
          sel[qi] = 0;
        }
      };
      chooseRec(0);
    };
    matchBundle(0);
  });
  return out;
}

namespace {

// Pools of candidate uppers for one vertex of p.
std::vector<Operation> upperPool(Family fam, int leafCount, int vertexGenus,
                                 const GraphFromBounds& b) {
  std::vector<Operation> out;
  std::set<std::string> seen;
  if (fam == Family::POp || fam == Family::SOp) {
    if (leafCount == 0) return out;
    for (const auto& op : allPlanarOps(leafCount - 1, b.maxVerticesPerUpper)) {
      if (fam == Family::POp) {
        out.push_back(op);
      } else {
        Operation base = promote(op, Family::SOp);
        for (const auto& perm : allPermutations(leafCount - 1)) out.push_back(symAct(base, perm));
      }
    }
    return out;
  }
  int genusCap = fam == Family::MOpG ? vertexGenus : b.maxGenusPerUpper;
  for (const auto& g0 : allGenusGraphs(leafCount, b.maxVerticesPerUpper, b.maxEdgesPerUpper,
                                       genusCap)) {
    if (fam == Family::MOpG && totalGenus(g0) != vertexGenus) continue;
    if (fam == Family::MOp) {
      bool zero = std::all_of(g0.genus.begin(), g0.genus.end(), [](int x) { return x == 0; });
      if (!zero) continue;
    }
    if (fam == Family::COp && betti(g0) != 0) continue;
    // All leaf orders.
    std::vector<int> perm(leafCount);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      GenusGraph g = g0;
      for (int i = 0; i < leafCount; ++i) g.shape.leaves[i] = g0.shape.leaves[perm[i]];
      Operation u;
      u.family = fam;
      u.graph = g;
      try {
        validate(u);
      } catch (const Error&) {
        continue;
      }
      if (seen.insert(encode(u)).second) out.push_back(u);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace

std::vector<TwoLevelTree> graphMorphismsFrom(const Operation& p, const GraphFromBounds& b) {
  std::vector<TwoLevelTree> out;
  const int n = catArity(p);
  std::vector<std::vector<Operation>> pools;
  for (int v = 0; v < n; ++v)
    pools.push_back(upperPool(p.family, p.graph.shape.degree(v), p.graph.genus[v], b));
  std::vector<int> pick(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      TwoLevelTree t;
      t.target = p;
      std::vector<int> sizes;
      for (int i = 0; i < n; ++i) {
        t.uppers.push_back(pools[i][pick[i]]);
        sizes.push_back(catArity(t.uppers.back()));
      }
      if (b.allLabelings) {
        forEachBlockAssignment(sizes, [&](const std::vector<std::vector<int>>& blocks) {
          t.leafIdx.clear();
          for (const auto& blk : blocks) t.leafIdx.insert(t.leafIdx.end(), blk.begin(), blk.end());
          out.push_back(t);
        });
      } else {
        t.leafIdx.clear();
        int m = std::accumulate(sizes.begin(), sizes.end(), 0);
        t.leafIdx.resize(m);
        std::iota(t.leafIdx.begin(), t.leafIdx.end(), 1);
        out.push_back(t);
      }
      return;
    }
    for (size_t i = 0; i < pools[v].size(); ++i) {
      pick[v] = static_cast<int>(i);
      rec(v + 1);
    }
  };
  for (int v = 0; v < n; ++v)
    if (pools[v].empty()) return out;
  rec(0);
  return out;
}

std::vector<TwoLevelTree> graphIsosFrom(const Operation& p) {
  std::vector<TwoLevelTree> out;
  const int n = catArity(p);
  std::vector<std::vector<Operation>> pools(n);
  for (int v = 0; v < n; ++v) {
    const int d = p.graph.shape.degree(v);
    const int g = p.family == Family::MOpG ? p.graph.genus[v] : 0;
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (isRooted(p.family) && perm[0] != 0) continue;
      if (p.family == Family::POp) {
        bool id = true;
        for (int i = 0; i < d; ++i)
          if (perm[i] != i) id = false;
        if (!id) continue;
      }
      Operation u;
      u.family = p.family;
      u.graph = corollaWithSlots(perm, g);
      pools[v].push_back(u);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<int> pick(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      TwoLevelTree t;
      t.target = p;
      for (int i = 0; i < n; ++i) t.uppers.push_back(pools[i][pick[i]]);
      forEachBlockAssignment(std::vector<int>(n, 1),
                             [&](const std::vector<std::vector<int>>& blocks) {
                               t.leafIdx.clear();
                               for (const auto& blk : blocks) t.leafIdx.push_back(blk[0]);
                               out.push_back(t);
                             });
      return;
    }
    for (size_t i = 0; i < pools[v].size(); ++i) {
      pick[v] = static_cast<int>(i);
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

bool isDfsObject(const Operation& p) {
  if (!isGraph(p.family) || p.graph.leafCount() == 0) return false;
  try {
    auto order = dfsOrder(p.graph.shape, 0);
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] != static_cast<int>(i)) return false;
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

NormalizeResult normalizeByDfs(const Operation& p) {
  auto order = dfsOrder(p.graph.shape, 0);
  std::vector<int> newOfOld(order.size());
  for (size_t i = 0; i < order.size(); ++i) newOfOld[order[i]] = static_cast<int>(i);
  NormalizeResult res;
  res.rep = p;
  res.rep.graph = reorderVertices(p.graph, newOfOld);
  // Isomorphism: identity corollas, labels carrying the relabeling.
  TwoLevelTree iso;
  iso.target = p;
  for (int v = 0; v < catArity(p); ++v)
    iso.uppers.push_back(identityOp(p.family, inColor(p, v + 1)));
  iso.leafIdx.resize(order.size());
  for (size_t v = 0; v < order.size(); ++v) iso.leafIdx[v] = newOfOld[v] + 1;
  res.iso = iso;
  return res;
}

}  // namespace

NormalizeResult normalizeD(const Operation& p) {
  if (p.family != Family::POp) throw NotApplicable("normalizeD expects a planar tree operation");
  return normalizeByDfs(p);
}

NormalizeResult normalizeDprime(const Operation& p) {
  if (p.family != Family::SOp && p.family != Family::POp)
    throw NotApplicable("normalizeDprime expects a rooted tree operation");
  return normalizeByDfs(p);
}

bool isZObject(const Operation& p) {
  if (!isGraph(p.family) || p.graph.leafCount() == 0) return false;
  const GenusGraph& g = p.graph;
  int h0 = g.shape.leaves[0];
  if (g.shape.base.adj[h0] != 0 || g.shape.slot[h0] != 0) return false;
  DfsResult r = dfs(g.shape, 0);
  if (static_cast<int>(r.vertexOrder.size()) != g.vertexCount()) return false;
  for (size_t i = 0; i < r.vertexOrder.size(); ++i)
    if (r.vertexOrder[i] != static_cast<int>(i)) return false;
  for (auto& [parentHalf, childHalf] : r.treeEdges) {
    if (g.shape.slot[childHalf] != 0 || g.shape.slot[parentHalf] == 0) return false;
  }
  return true;
}

bool anchorLeafOrder(GenusGraph& g) {
  if (g.leafCount() == 0 || !isConnected(g.shape.base)) return false;
  DfsResult r = dfs(g.shape, 0);
  if (r.leafOrder.size() != g.shape.leaves.size()) return false;
  g.shape.leaves = r.leafOrder;
  return true;
}

bool isZMorphism(const TwoLevelTree& f) {
  if (!isZObject(f.target)) return false;
  Operation src = sourceOf2(f);
  if (!isZObject(src)) return false;
  for (const auto& u : f.uppers) {
    GenusGraph g = u.graph;
    DfsResult r = dfs(g.shape, 0);
    if (r.leafOrder != g.shape.leaves) return false;
  }
  return true;
}

std::vector<TwoLevelTree> zMorphismsFrom(const Operation& p, const GraphFromBounds& b) {
  std::vector<TwoLevelTree> out;
  if (!isZObject(p)) throw NotApplicable("zMorphismsFrom expects an anchored object");
  const int n = catArity(p);
  // Pools: uppers with the traversal leaf order, any starting leaf.
  std::vector<std::vector<Operation>> pools(n);
  for (int v = 0; v < n; ++v) {
    std::set<std::string> seen;
    const int d = p.graph.shape.degree(v);
    int genusCap = p.family == Family::MOpG ? p.graph.genus[v] : b.maxGenusPerUpper;
    for (const auto& g0 : allGenusGraphs(d, b.maxVerticesPerUpper, b.maxEdgesPerUpper, genusCap)) {
      if (p.family == Family::MOpG && totalGenus(g0) != p.graph.genus[v]) continue;
      for (int start = 0; start < d; ++start) {
        GenusGraph g = g0;
        std::rotate(g.shape.leaves.begin(), g.shape.leaves.begin() + start, g.shape.leaves.end());
        if (!anchorLeafOrder(g)) continue;
        g = normalizeVertexOrderByDfs(g, 0);
        Operation u;
        u.family = p.family;
        u.graph = g;
        try {
          validate(u);
        } catch (const Error&) {
          continue;
        }
        if (seen.insert(encode(u)).second) pools[v].push_back(u);
      }
    }
    if (pools[v].empty()) return out;
  }
  std::vector<int> pick(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<Operation> uppers;
      std::vector<GenusGraph> graphs;
      for (int i = 0; i < n; ++i) {
        uppers.push_back(pools[i][pick[i]]);
        graphs.push_back(uppers.back().graph);
      }
      GenusGraph composite;
      try {
        composite = insert(p.graph, graphs, p.family == Family::MOpG);
      } catch (const Error&) {
        return;
      }
      // Vertex order of the source forced by the traversal.
      std::vector<int> order;
      try {
        order = dfsOrder(composite.shape, 0);
      } catch (const Error&) {
        return;
      }
      std::vector<int> rank(order.size());
      for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
      // Per-block ranks must increase along each part's own vertex order;
      // reorder parts accordingly.
      TwoLevelTree t;
      t.target = p;
      int base = 0;
      for (int i = 0; i < n; ++i) {
        const int sz = graphs[i].vertexCount();
        std::vector<int> local(sz);
        std::iota(local.begin(), local.end(), 0);
        std::sort(local.begin(), local.end(),
                  [&](int a, int c) { return rank[base + a] < rank[base + c]; });
        std::vector<int> newOfOld(sz);
        for (int r = 0; r < sz; ++r) newOfOld[local[r]] = r;
        Operation u = uppers[i];
        u.graph = reorderVertices(u.graph, newOfOld);
        t.uppers.push_back(u);
        std::vector<int> labels;
        for (int r = 0; r < sz; ++r) labels.push_back(rank[base + local[r]] + 1);
        t.leafIdx.insert(t.leafIdx.end(), labels.begin(), labels.end());
        base += sz;
      }
      try {
        validate(t);
      } catch (const Error&) {
        return;
      }
      if (!isZMorphism(t)) return;
      out.push_back(t);
      return;
    }
    for (size_t i = 0; i < pools[v].size(); ++i) {
      pick[v] = static_cast<int>(i);
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<TwoLevelTree> dMorphismsFrom(const Operation& p, int maxTargetVertices) {
  std::vector<TwoLevelTree> out;
  if (p.family != Family::POp || !isDfsObject(p))
    throw NotApplicable("dMorphismsFrom expects a traversal-ordered planar tree");
  const int n = catArity(p);
  std::vector<std::vector<Operation>> pools(n);
  for (int v = 0; v < n; ++v) {
    int d = p.graph.shape.degree(v);
    if (d == 0) return out;
    pools[v] = allPlanarOps(d - 1, maxTargetVertices);
  }
  std::vector<int> pick(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      int total = 0;
      std::vector<GenusGraph> graphs;
      std::vector<Operation> uppers;
      for (int i = 0; i < n; ++i) {
        uppers.push_back(pools[i][pick[i]]);
        graphs.push_back(uppers.back().graph);
        total += graphs.back().vertexCount();
      }
      if (total > maxTargetVertices) return;
      GenusGraph composite = insert(p.graph, graphs, true);
      auto order = dfsOrder(composite.shape, 0);
      std::vector<int> rank(order.size());
      for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
      TwoLevelTree t;
      t.target = p;
      t.uppers = uppers;
      int base = 0;
      for (int i = 0; i < n; ++i) {
        for (int u = 0; u < graphs[i].vertexCount(); ++u)
          t.leafIdx.push_back(rank[base + u] + 1);
        base += graphs[i].vertexCount();
      }
      validate(t);
      out.push_back(t);
      return;
    }
    for (size_t i = 0; i < pools[v].size(); ++i) {
      pick[v] = static_cast<int>(i);
      rec(v + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<ThreeLevelTree> twGraphMorphismsFrom(const Operation& source, const TwGraphBounds& b) {
  std::vector<ThreeLevelTree> out;
  if (source.family != Family::SOp)
    throw NotApplicable("twGraphMorphismsFrom supports rooted tree operations");
  const int n = catArity(source);
  // Lower pool: operations whose first vertex degree matches the source
  // output colour.
  std::vector<Operation> lowers;
  const int need = outColor(source).size;
  for (int inputs = 0; inputs + 1 <= b.maxTargetDegree; ++inputs)
    for (const auto& op : allSymOps(inputs, b.maxLowerVertices))
      if (op.graph.shape.degree(0) == need) lowers.push_back(op);
  std::vector<std::vector<Operation>> pools(n);
  for (int v = 0; v < n; ++v) {
    int d = source.graph.shape.degree(v);
    if (d == 0) return out;
    pools[v] = [&] {
      std::vector<Operation> res;
      for (const auto& op : allSymOps(d - 1, b.maxUpperVertices)) res.push_back(op);
      return res;
    }();
  }
  std::vector<int> pick(n, 0);
  for (const auto& lower : lowers) {
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        ThreeLevelTree t;
        t.lower = lower;
        t.lowerSlot = 1;
        t.middle = source;
        std::vector<int> sizes;
        int m = catArity(lower) - 1;
        for (int i = 0; i < n; ++i) {
          t.uppers.push_back(pools[i][pick[i]]);
          sizes.push_back(catArity(t.uppers.back()));
          m += sizes.back();
        }
        if (m + lower.graph.leafCount() > b.maxTargetDegree) return;
        auto emit = [&](const std::vector<int>& idx) {
          t.leafIdx = idx;
          try {
            validate(t);
          } catch (const Error&) {
            return;
          }
          out.push_back(t);
        };
        if (b.allLabelings) {
          std::vector<int> blockSizes = sizes;
          blockSizes.push_back(catArity(lower) - 1);
          forEachBlockAssignment(blockSizes, [&](const std::vector<std::vector<int>>& blocks) {
            std::vector<int> idx;
            for (const auto& blk : blocks) idx.insert(idx.end(), blk.begin(), blk.end());
            emit(idx);
          });
        } else {
          std::vector<int> idx(m);
          std::iota(idx.begin(), idx.end(), 1);
          emit(idx);
        }
        return;
      }
      for (size_t i = 0; i < pools[v].size(); ++i) {
        pick[v] = static_cast<int>(i);
        rec(v + 1);
      }
    };
    rec(0);
  }
  return out;
}

namespace {

// Restriction of g to a vertex set, with cut and outer boundary half-edges
// as leaves ordered by the supplied list of g-half-edges.
GenusGraph restrictRegion(const GenusGraph& g, const std::vector<int>& verts,
                          const std::vector<int>& boundary) {
  GenusGraph part;
  part.shape.base.vertexCount = static_cast<int>(verts.size());
  std::vector<int> inIndex(g.vertexCount(), -1);
  for (size_t i = 0; i < verts.size(); ++i) inIndex[verts[i]] = static_cast<int>(i);
  std::vector<int> halfNew(g.shape.base.halfEdgeCount(), -1);
  for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h) {
    if (inIndex[g.shape.base.adj[h]] < 0) continue;
    halfNew[h] = static_cast<int>(part.shape.base.adj.size());
    part.shape.base.adj.push_back(inIndex[g.shape.base.adj[h]]);
    part.shape.slot.push_back(g.shape.slot[h]);
    part.shape.base.inv.push_back(-1);
  }
  std::set<int> boundarySet(boundary.begin(), boundary.end());
  for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h) {
    if (halfNew[h] < 0) continue;
    int m = g.shape.base.inv[h];
    bool leaf = g.shape.base.isLeaf(h) || boundarySet.count(h) ||
                inIndex[g.shape.base.adj[m]] < 0;
    part.shape.base.inv[halfNew[h]] = leaf ? halfNew[h] : halfNew[m];
  }
  for (int h : boundary) part.shape.leaves.push_back(halfNew[h]);
  for (int v : verts) part.genus.push_back(g.genus[v]);
  return normalizeHalfEdges(part);
}

// Half-edges at region vertices that are leaves of g or cross out of the
// region.
std::vector<int> regionBoundary(const GenusGraph& g, const std::vector<int>& verts) {
  std::set<int> inside(verts.begin(), verts.end());
  std::vector<int> boundary;
  for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h) {
    if (!inside.count(g.shape.base.adj[h])) continue;
    if (g.shape.base.isLeaf(h) || !inside.count(g.shape.base.adj[g.shape.base.inv[h]]))
      boundary.push_back(h);
  }
  return boundary;
}

}  // namespace

std::vector<ThreeLevelTree> twGraphMorphismsInto(
    const Operation& target,
    const std::function<bool(int, int)>& admit) {
  std::vector<ThreeLevelTree> out;
  if (target.family != Family::SOp)
    throw NotApplicable("twGraphMorphismsInto supports rooted tree operations");
  const GenusGraph& g = target.graph;
  DfsResult walk = dfs(g.shape, 0);
  // Parent half-edge of each vertex (toward the root).
  std::vector<int> upHalf(g.vertexCount(), -1);
  upHalf[g.shape.base.adj[g.shape.leaves[0]]] = g.shape.leaves[0];
  for (auto& [ph, ch] : walk.treeEdges) upHalf[g.shape.base.adj[ch]] = ch;

  for (const auto& region : connectedSubsets(g)) {
    std::set<int> inR(region.begin(), region.end());
    auto boundary = regionBoundary(g, region);
    // Upward boundary half: the up half of the region vertex nearest the root.
    int top = -1;
    for (int v : region) {
      int ph = upHalf[v];
      int pv = g.shape.base.isLeaf(ph) ? -1 : g.shape.base.adj[g.shape.base.inv[ph]];
      if (pv < 0 || !inR.count(pv)) {
        top = v;
        break;
      }
    }
    if (top < 0) continue;
    const int upB = upHalf[top];
    std::vector<int> restBase;
    for (int h : boundary)
      if (h != upB) restBase.push_back(h);
    std::sort(restBase.begin(), restBase.end());

    // Partitions of the region, computed on its restriction.
    GenusGraph sub;
    {
      std::vector<int> bd = regionBoundary(g, region);
      sub = restrictRegion(g, region, bd);
    }
    std::vector<std::vector<std::vector<int>>> partitions;
    {
      std::vector<std::vector<int>> acc;
      std::vector<int> all(region.size());
      std::iota(all.begin(), all.end(), 0);
      connectedPartitionsRec(sub, all, acc, partitions);
    }

    for (const auto& partition : partitions) {
      const int sourceVertices = static_cast<int>(partition.size());
      const int sourceInputs = static_cast<int>(boundary.size()) - 1;
      if (admit && !admit(sourceVertices, sourceInputs)) continue;

      // Orderings of the contracted outer slots beyond the upward half.
      std::vector<int> rest = restBase;
      std::vector<int> order(partition.size());
      do {
        std::vector<int> bnd;
        bnd.push_back(upB);
        bnd.insert(bnd.end(), rest.begin(), rest.end());

        // Outer operation: target with the region contracted to vertex 0.
        GenusGraph outer;
        {
          std::vector<int> keep;
          for (int v = 0; v < g.vertexCount(); ++v)
            if (!inR.count(v)) keep.push_back(v);
          outer.shape.base.vertexCount = 1 + static_cast<int>(keep.size());
          std::vector<int> newV(g.vertexCount(), -1);
          for (size_t i = 0; i < keep.size(); ++i) newV[keep[i]] = static_cast<int>(i) + 1;
          std::vector<int> halfNew(g.shape.base.halfEdgeCount(), -1);
          auto addHalf = [&](int v, int s) {
            outer.shape.base.adj.push_back(v);
            outer.shape.slot.push_back(s);
            outer.shape.base.inv.push_back(static_cast<int>(outer.shape.base.inv.size()));
            return static_cast<int>(outer.shape.base.inv.size()) - 1;
          };
          for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h)
            if (newV[g.shape.base.adj[h]] > 0)
              halfNew[h] = addHalf(newV[g.shape.base.adj[h]], g.shape.slot[h]);
          // Boundary halves become the slots of the contracted vertex.
          for (size_t s = 0; s < bnd.size(); ++s)
            halfNew[bnd[s]] = addHalf(0, static_cast<int>(s));
          for (int h = 0; h < g.shape.base.halfEdgeCount(); ++h) {
            if (halfNew[h] < 0 || g.shape.base.isLeaf(h)) continue;
            int m = g.shape.base.inv[h];
            if (halfNew[m] >= 0 &&
                !(inR.count(g.shape.base.adj[h]) && inR.count(g.shape.base.adj[m]))) {
              outer.shape.base.inv[halfNew[h]] = halfNew[m];
            }
          }
          for (int j = 0; j < g.leafCount(); ++j)
            outer.shape.leaves.push_back(halfNew[g.shape.leaves[j]]);
          for (int v : keep) outer.genus.push_back(g.genus[v]);
          outer.genus.insert(outer.genus.begin(), 0);
          outer = normalizeHalfEdges(outer);
        }
        Operation lowerOp;
        lowerOp.family = Family::SOp;
        lowerOp.graph = outer;
        try {
          validate(lowerOp);
        } catch (const Error&) {
          continue;
        }

        // Inner region with the chosen boundary order.
        GenusGraph W = restrictRegion(g, region, bnd);
        DfsResult wWalk = dfs(W.shape, 0);
        std::vector<int> wUp(W.vertexCount(), -1);
        wUp[W.shape.base.adj[W.shape.leaves[0]]] = W.shape.leaves[0];
        for (auto& [ph, ch] : wWalk.treeEdges) wUp[W.shape.base.adj[ch]] = ch;

        // Up half and free boundary of each part.
        std::vector<std::vector<int>> partUpAndRest(partition.size());
        bool bad = false;
        for (size_t pi = 0; pi < partition.size() && !bad; ++pi) {
          std::set<int> inP(partition[pi].begin(), partition[pi].end());
          int topW = -1;
          for (int v : partition[pi]) {
            int ph = wUp[v];
            int pv = W.shape.base.isLeaf(ph) ? -1 : W.shape.base.adj[W.shape.base.inv[ph]];
            if (pv < 0 || !inP.count(pv)) {
              topW = v;
              break;
            }
          }
          if (topW < 0) {
            bad = true;
            break;
          }
          std::vector<int> bd;
          bd.push_back(wUp[topW]);
          std::vector<int> others;
          for (int h : regionBoundary(W, partition[pi]))
            if (h != wUp[topW]) others.push_back(h);
          std::sort(others.begin(), others.end());
          bd.insert(bd.end(), others.begin(), others.end());
          partUpAndRest[pi] = bd;
        }
        if (bad) continue;

        // Enumerate the slot orders of each contracted middle vertex and
        // the order of the middle vertices themselves.
        std::function<void(size_t, std::vector<std::vector<int>>&)> perPart =
            [&](size_t pi, std::vector<std::vector<int>>& partBoundary) {
              if (pi == partition.size()) {
                std::iota(order.begin(), order.end(), 0);
                do {
                  // Middle graph: one vertex per part in the chosen order.
                  GenusGraph mid;
                  mid.shape.base.vertexCount = static_cast<int>(partition.size());
                  std::vector<int> partOf(W.vertexCount(), -1);
                  for (size_t k = 0; k < order.size(); ++k)
                    for (int v : partition[order[k]]) partOf[v] = static_cast<int>(k);
                  std::vector<int> halfNewW(W.shape.base.halfEdgeCount(), -1);
                  for (size_t k = 0; k < order.size(); ++k) {
                    const auto& bd = partBoundary[order[k]];
                    for (size_t s = 0; s < bd.size(); ++s) {
                      halfNewW[bd[s]] = static_cast<int>(mid.shape.base.adj.size());
                      mid.shape.base.adj.push_back(static_cast<int>(k));
                      mid.shape.slot.push_back(static_cast<int>(s));
                      mid.shape.base.inv.push_back(
                          static_cast<int>(mid.shape.base.inv.size()));
                    }
                  }
                  for (int h = 0; h < W.shape.base.halfEdgeCount(); ++h) {
                    if (halfNewW[h] < 0 || W.shape.base.isLeaf(h)) continue;
                    int m = W.shape.base.inv[h];
                    if (halfNewW[m] >= 0 &&
                        partOf[W.shape.base.adj[h]] != partOf[W.shape.base.adj[m]]) {
                      mid.shape.base.inv[halfNewW[h]] = halfNewW[m];
                    }
                  }
                  for (int j = 0; j < W.leafCount(); ++j)
                    mid.shape.leaves.push_back(halfNewW[W.shape.leaves[j]]);
                  mid.genus.assign(partition.size(), 0);
                  mid = normalizeHalfEdges(mid);
                  Operation middleOp;
                  middleOp.family = Family::SOp;
                  middleOp.graph = mid;
                  try {
                    validate(middleOp);
                  } catch (const Error&) {
                    continue;
                  }
                  std::vector<Operation> uppers;
                  std::vector<int> leafIdx;
                  bool ok = true;
                  for (size_t k = 0; k < order.size() && ok; ++k) {
                    std::vector<int> verts = partition[order[k]];
                    std::sort(verts.begin(), verts.end());
                    GenusGraph partG = restrictRegion(W, verts, partBoundary[order[k]]);
                    Operation u;
                    u.family = Family::SOp;
                    u.graph = partG;
                    try {
                      validate(u);
                    } catch (const Error&) {
                      ok = false;
                      break;
                    }
                    uppers.push_back(u);
                    for (int v : verts) leafIdx.push_back(region[v] + 1);
                  }
                  if (!ok) continue;
                  ThreeLevelTree t;
                  t.lower = lowerOp;
                  t.lowerSlot = 1;
                  t.middle = middleOp;
                  t.uppers = uppers;
                  t.leafIdx = leafIdx;
                  for (int v = 0; v < g.vertexCount(); ++v)
                    if (!inR.count(v)) t.leafIdx.push_back(v + 1);
                  try {
                    validate(t);
                  } catch (const Error&) {
                    continue;
                  }
                  if (targetOf3(t) != target) continue;
                  out.push_back(t);
                } while (std::next_permutation(order.begin(), order.end()));
                return;
              }
              std::vector<int> others(partUpAndRest[pi].begin() + 1, partUpAndRest[pi].end());
              std::sort(others.begin(), others.end());
              do {
                std::vector<int> bd;
                bd.push_back(partUpAndRest[pi][0]);
                bd.insert(bd.end(), others.begin(), others.end());
                partBoundary.push_back(bd);
                perPart(pi + 1, partBoundary);
                partBoundary.pop_back();
              } while (std::next_permutation(others.begin(), others.end()));
            };
        std::vector<std::vector<int>> chosen;
        perPart(0, chosen);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  return out;
}

}  // namespace opcat
