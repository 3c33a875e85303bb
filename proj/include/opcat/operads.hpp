#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opcat/halfedge.hpp"

namespace opcat {

// Concrete operad families.
//
// Table families are determined by an arity: UCom/UAs have one operation per
// arity n >= 0, Com/As one per arity n >= 1.  UAs/As carry trivial planar
// structure, so only order-preserving leaf indexings are admissible in the
// tree categories built on them; UCom/Com admit arbitrary indexings.
//
// Graph families carry a GenusGraph payload whose leaves are indexed from 0
// (leaf 0 is the distinguished one; for rooted families it is the root):
//   POp   planar rooted trees, leaf order = traversal order from the root
//   SOp   rooted trees with an arbitrary order on input leaves
//   COp   trees without a root; slot orders are read cyclically with a
//         marked 0 slot (the marked representative is the stored data)
//   MOp   arbitrary connected graphs, genus ignored
//   MOpG  connected graphs with a genus map, genus respected by insertion
//
// Free is the free symmetric operad on named generators; its operations are
// generator-marked planar trees with indexed leaves.
enum class Family { UCom, Com, UAs, As, POp, SOp, COp, MOp, MOpG, Free };

const char* familyName(Family f);
Family familyFromName(const std::string& s);
bool isTable(Family f);
bool isGraph(Family f);
bool isRooted(Family f);  // leaf 0 is an output and slot 0 points at it
// Leaf indexings of tree-category morphisms may permute; false for UAs/As.
bool allowsPermutation(Family f);

// A tree of a free symmetric operad: either a generator node with children,
// or a leaf carrying a 1-based label.
struct FreeTree {
  std::string gen;  // empty on leaves
  int label = 0;
  std::vector<FreeTree> kids;

  bool isLeafNode() const { return gen.empty() && kids.empty(); }
};

bool operator==(const FreeTree& a, const FreeTree& b);
inline bool operator!=(const FreeTree& a, const FreeTree& b) { return !(a == b); }
int freeArity(const FreeTree& t);

// Leaf of the free unit tree; p composed with it anywhere is p.
FreeTree freeUnit();
// Generator corolla with leaves labeled 1..arity in planar order.
FreeTree freeGenerator(const std::string& name, int arity);

// One element of a concrete set-operad.
struct Operation {
  Family family = Family::UCom;
  int arity = 0;     // table payload
  GenusGraph graph;  // graph payload
  FreeTree tree;     // free payload
};

Operation tableOp(Family f, int arity);
Operation graphOp(Family f, GenusGraph g);
Operation freeOp(FreeTree t);

bool operator==(const Operation& a, const Operation& b);
inline bool operator!=(const Operation& a, const Operation& b) { return !(a == b); }
std::string encode(const Operation& op);

// Validates family-specific payload invariants.
void validate(const Operation& op);

// Operadic arity: inputs of the operation under the grafting composition.
// Table: the arity; graph: leaf count - 1 (leaf 0 is the output); free:
// number of leaf labels.
int arity(const Operation& op);

// p composed with q at input i (1-based): graft q's output into the i-th
// input of p.  Graph families glue leaf i of p to leaf 0 of q and renumber
// the vertex order by traversal from leaf 0.
Operation composeAt(const Operation& p, int i, const Operation& q);

// Symmetric group action on inputs: the input indexed j becomes indexed
// sigma(j) (1-based one-line notation), so symAct(symAct(p, s), t) equals
// symAct(p, t o s).  Commutative table families are fixed; UAs/As reject
// non-identity sigma.
Operation symAct(const Operation& p, const std::vector<int>& sigma);

// Views a graph operation as a member of a larger graph family (pOp inside
// sOp, trees inside mOp, ...).  Validity under the new family is enforced.
Operation promote(const Operation& op, Family to);

// ---- encoding-operad view (used by the tree categories) ----
//
// The same payloads also compose by substitution into vertices: an
// operation with n vertices accepts n arguments, argument colours are the
// per-vertex profiles, and the output colour is the outer profile.  Table
// families have catArity = arity.

int catArity(const Operation& op);

// Colour of a slot: (leaf count, genus) profile for graph families; table
// and free families are single-coloured, encoded as (-1, -1).
struct Color {
  int size = -1;
  int genus = -1;
  bool operator==(const Color& o) const { return size == o.size && genus == o.genus; }
  bool operator!=(const Color& o) const { return !(*this == o); }
};

Color inColor(const Operation& op, int i);  // 1-based slot
Color outColor(const Operation& op);

// Identity operation of the given colour.
Operation identityOp(Family f, Color c = Color{});
bool isIdentityOp(const Operation& op);

// Substitutes parts[i] into slot i+1 of op under the vertex-insertion
// composition; vertex order of the result is the concatenation order.
// For table families this is arity bookkeeping; free families graft at
// leaves (their category slots are the leaf inputs).
Operation catCompose(const Operation& op, const std::vector<Operation>& parts);

// Substitution into a single category slot (1-based); other slots keep
// identity operations.
Operation catComposeAt(const Operation& op, int i, const Operation& part);

// Renames the category slots: old slot k+1 becomes newOfOld[k]+1.  Graph
// families reorder the vertex order, free families relabel leaves, table
// families are unchanged.
Operation reorderCatSlots(const Operation& op, const std::vector<int>& newOfOld);

// Handle describing one operad (family plus unit restriction); the nu
// restriction rejects arity-0 operations in enumeration and membership.
struct OperadHandle {
  Family family = Family::UCom;
  bool nu = false;

  bool admits(const Operation& op) const;
};

inline OperadHandle handle(Family f) { return OperadHandle{f, false}; }
OperadHandle nuRestrict(const OperadHandle& h);

}  // namespace opcat
