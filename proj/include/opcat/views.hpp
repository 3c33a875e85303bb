#pragma once

#include <functional>
#include <vector>

#include "opcat/threelevel.hpp"
#include "opcat/twolevel.hpp"

namespace opcat {

// ---- operation enumeration ----

// Table operations up to the arity bound (respecting the family's base
// arity and the unit restriction).
std::vector<Operation> allTableOps(Family f, int maxArity, bool nu = false);

// Planar rooted tree operations with the given input count and at most
// maxVertices vertices; vertex order is the traversal order from the root.
std::vector<Operation> allPlanarOps(int inputs, int maxVertices);

// Rooted tree operations with arbitrary input indexing.
std::vector<Operation> allSymOps(int inputs, int maxVertices);

// Connected genus graphs with the prescribed leaf count: every slot
// structure appears (enumeration runs over involutions of the slot set),
// leaves ordered by half-edge index.  Results are deduplicated exactly.
std::vector<GenusGraph> allGenusGraphs(int leafCount, int maxVertices, int maxEdges,
                                       int maxTotalGenus);

// ---- table-family hom-sets ----

// 2-level trees with source arity n and target arity m.
std::vector<TwoLevelTree> homTableC(Family f, int n, int m, bool nu = false);

// 3-level trees out of `source` whose target has the given arity.
std::vector<ThreeLevelTree> homTableTw(Family f, const Operation& source, int targetArity);

// Enveloping morphisms out of the single-coloured object of the given arity.
std::vector<UMorphism> homTableU(Family f, int middleArity, int targetArity);

// ---- graph-family hom-sets ----

// Morphisms out of p in the opposite category with both endpoints fixed:
// all 2-level trees with target p and source q.  Complete.
std::vector<TwoLevelTree> graphHom(const Operation& p, const Operation& q);

struct GraphFromBounds {
  int maxVerticesPerUpper = 2;
  int maxEdgesPerUpper = 2;
  int maxGenusPerUpper = 3;
  bool allLabelings = true;  // otherwise only the block-sequential indexing
};

// Morphisms out of p in the opposite category, uppers within the bounds.
std::vector<TwoLevelTree> graphMorphismsFrom(const Operation& p, const GraphFromBounds& b);

// Isomorphisms out of p in the opposite category: all 2-level trees with
// target p whose uppers are corollas.
std::vector<TwoLevelTree> graphIsosFrom(const Operation& p);

// ---- distinguished subcategories of the graph categories ----

// Objects whose vertex order is the traversal order from leaf 0.
bool isDfsObject(const Operation& p);

struct NormalizeResult {
  Operation rep;      // the normal-form object
  TwoLevelTree iso;   // 2-level tree with target p and source rep
};

// Planar-tree normal form: vertex order renumbered by traversal.
NormalizeResult normalizeD(const Operation& p);
// Same with arbitrary input indexing retained.
NormalizeResult normalizeDprime(const Operation& p);

// Anchored objects: leaf 0 at slot 0 of the first vertex, traversal vertex
// order, and each traversal tree edge joining a slot-0 half-edge (child
// side) to a non-slot-0 half-edge (parent side).
bool isZObject(const Operation& p);
// Morphisms between anchored objects whose inserted parts carry the
// traversal leaf order.
bool isZMorphism(const TwoLevelTree& f);

// An anchored replacement for a graph operation together with the
// connecting isomorphism, when one exists within slot rotations.
bool anchorLeafOrder(GenusGraph& g);

// Every part normalized to the traversal leaf order; labels forced by the
// traversal of the composite.
std::vector<TwoLevelTree> zMorphismsFrom(const Operation& p, const GraphFromBounds& b);

// Morphisms out of p in the full-subcategory view on traversal-ordered
// planar trees: tuples of traversal-normal planar operations.
std::vector<TwoLevelTree> dMorphismsFrom(const Operation& p, int maxTargetVertices);

// ---- morphisms out of an operation in the twisted category, graph case ----

struct TwGraphBounds {
  int maxLowerVertices = 2;
  int maxUpperVertices = 2;
  int maxTargetDegree = 12;  // vertices + leaves of the target
  bool allLabelings = true;
};

std::vector<ThreeLevelTree> twGraphMorphismsFrom(const Operation& source, const TwGraphBounds& b);

// All decompositions of `target` as a twisted-category morphism out of some
// source: every 3-level tree with the given target.  The filter receives the
// number of source vertices and the number of source input leaves before the
// (factorial) slot-order expansion and can prune source classes early.
std::vector<ThreeLevelTree> twGraphMorphismsInto(
    const Operation& target,
    const std::function<bool(int sourceVertices, int sourceInputs)>& admit = {});

}  // namespace opcat
