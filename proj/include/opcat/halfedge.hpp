#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opcat/error.hpp"

namespace opcat {

// A graph with half-edges: a finite vertex set, a finite set of half-edges,
// an involution pairing half-edges into edges (fixed points are leaves), and
// an adjacency map sending each half-edge to its vertex.
//
// Vertices are 0..vertexCount-1, half-edges 0..inv.size()-1.
struct HalfEdgeGraph {
  int vertexCount = 0;
  std::vector<int> inv;  // involution; inv[h] == h marks a leaf
  std::vector<int> adj;  // half-edge -> vertex

  int halfEdgeCount() const { return static_cast<int>(inv.size()); }
  bool isLeaf(int h) const { return inv[h] == h; }
};

// Adds to a half-edge graph: a total slot order at every vertex, and an
// order on the leaves.  The vertex order is the index order 0..n-1 (the
// k-th vertex in the 1-based order of the interfaces is vertex k-1 here).
struct OperadicGraph {
  HalfEdgeGraph base;
  std::vector<int> slot;    // half-edge -> position among the half-edges at its vertex
  std::vector<int> leaves;  // leaf order: leaves[i] is the i-th leaf (0-based)

  int degree(int v) const;
  // Half-edges at v listed by slot.
  std::vector<int> halfEdgesAt(int v) const;
  // Half-edge sitting at (vertex, slot).
  int halfEdgeAt(int v, int s) const;
};

// An operadic graph together with a genus label on every vertex.
struct GenusGraph {
  OperadicGraph shape;
  std::vector<int> genus;

  int vertexCount() const { return shape.base.vertexCount; }
  int leafCount() const { return static_cast<int>(shape.leaves.size()); }
};

void validate(const HalfEdgeGraph& g);
void validate(const OperadicGraph& g);
void validate(const GenusGraph& g);

int componentCount(const HalfEdgeGraph& g);
bool isConnected(const HalfEdgeGraph& g);
int edgeCount(const HalfEdgeGraph& g);

// First Betti number |E| - |V| + #components.
int betti(const HalfEdgeGraph& g);
inline int betti(const GenusGraph& g) { return betti(g.shape.base); }

// Sum of vertex genera plus the Betti number of the underlying graph.
int totalGenus(const GenusGraph& g);

// Assembles a graph from explicit (vertex, slot) incidences.  Slots at each
// vertex must come out dense 0..deg-1.
using VS = std::pair<int, int>;
GenusGraph buildGraph(int vertexCount, const std::vector<std::pair<VS, VS>>& edges,
                      const std::vector<VS>& leavesInOrder, const std::vector<int>& genus);

// Corolla: a single vertex, no edges, leaf i at slot i, the given genus.
GenusGraph corolla(int leafCnt, int genus = 0);
// Corolla whose i-th leaf sits at slot leafPerm[i].
GenusGraph corollaWithSlots(const std::vector<int>& leafPerm, int genus = 0);

// Renumbers half-edges into the canonical (vertex, slot)-major order.  All
// constructors in this library return graphs in this normal form, so
// structural equality is memberwise equality.
GenusGraph normalizeHalfEdges(const GenusGraph& g);

bool operator==(const GenusGraph& a, const GenusGraph& b);
inline bool operator!=(const GenusGraph& a, const GenusGraph& b) { return !(a == b); }

// Deterministic structural key (graphs must be half-edge normalized).
std::string encode(const GenusGraph& g);

// Relabels vertices: old vertex v becomes newOfOld[v].
GenusGraph reorderVertices(const GenusGraph& g, const std::vector<int>& newOfOld);

// Simultaneous insertion of parts[v] into every vertex v of p.  Leaf k of
// parts[v] takes the place of the slot-k half-edge of vertex v; edges of p
// glue the corresponding leaves of the parts, outer leaves of p keep their
// order.  The vertex order of the result is the concatenation order of the
// parts.  Genus condition (checked when checkGenus): the genus of vertex v
// equals the total genus of parts[v].
GenusGraph insert(const GenusGraph& p, const std::vector<GenusGraph>& parts,
                  bool checkGenus = true);

// insert with identity corollas everywhere except position v (0-based).
GenusGraph insertAtVertex(const GenusGraph& p, int v, const GenusGraph& part,
                          bool checkGenus = true);

// Depth-first traversal record.  The walk enters a vertex through a
// half-edge and continues through the remaining slots in increasing slot
// order, cyclically from the entry slot, descending across edges whose far
// vertex is unvisited.
struct DfsResult {
  std::vector<int> vertexOrder;          // vertices in first-visit order
  std::vector<int> leafOrder;            // leaves (as half-edges) in traversal order
  std::vector<std::pair<int, int>> treeEdges;  // traversed edges as (parent half-edge, child half-edge)
  std::vector<int> entryHalfEdge;        // per vertex: half-edge it was entered through
};

DfsResult dfs(const OperadicGraph& g, int startLeaf);

// Vertex visit order of the traversal starting at the given leaf index.
// Throws Disconnected when some vertex is unreachable.
std::vector<int> dfsOrder(const OperadicGraph& g, int startLeaf);

// Reorders vertices so that the traversal from the given leaf visits them
// in index order.
GenusGraph normalizeVertexOrderByDfs(const GenusGraph& g, int startLeaf = 0);

struct CanonicalResult {
  GenusGraph canon;
  std::vector<int> newOfOld;  // relabeling applied to reach the canonical form
  std::string key;
};

// Isomorphism-class representative: the vertex relabeling with the
// lexicographically least structural encoding (genus, leaf order and slot
// structure are preserved exactly; only the vertex order varies).
CanonicalResult canonicalForm(const GenusGraph& g);

bool isomorphic(const GenusGraph& a, const GenusGraph& b);

// Reference oracle: tries every vertex bijection.
bool isomorphicBruteForce(const GenusGraph& a, const GenusGraph& b);

}  // namespace opcat
