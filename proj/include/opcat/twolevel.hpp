#pragma once

#include <vector>

#include "opcat/finmaps.hpp"
#include "opcat/operads.hpp"

namespace opcat {

// A morphism q -> p of the tree category built on an operad: the target
// operation p at the root, one upper operation per category slot of p, and
// an indexing of the upper slots by 1..m (m the category arity of the
// source) that increases within each upper block.  The source is the
// substitution composite with the indexing applied.
struct TwoLevelTree {
  Operation target;
  std::vector<Operation> uppers;
  std::vector<int> leafIdx;
};

bool operator==(const TwoLevelTree& a, const TwoLevelTree& b);
inline bool operator!=(const TwoLevelTree& a, const TwoLevelTree& b) { return !(a == b); }
std::string encode(const TwoLevelTree& t);

void validate(const TwoLevelTree& t);

// Number of upper slots (the category arity of the source).
int positionCount(const TwoLevelTree& t);

Operation sourceOf2(const TwoLevelTree& t);

// Identity morphism at p: identity operations above every slot.
TwoLevelTree identity2(const Operation& p);

// Composite of f: q -> p with g: r -> q, a morphism r -> p.
TwoLevelTree compose2(const TwoLevelTree& f, const TwoLevelTree& g);

// The finite map {1..m} -> {1..n} whose fiber over i is the set of labels
// above the i-th upper slot.
FinMap cardinality(const TwoLevelTree& t);

// The i-th fiber (1-based) of g relative to f, where g and f are composable
// as in compose2(f, g): the restriction of the composite picture to the
// i-th upper slot of f, labels renormalized order-preservingly.
TwoLevelTree fiber(const TwoLevelTree& g, const TwoLevelTree& f, int i);

}  // namespace opcat
