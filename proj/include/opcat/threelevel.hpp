#pragma once

#include <vector>

#include "opcat/operads.hpp"

namespace opcat {

// A morphism of the twisted-arrow style category of an operad: a lower
// operation below the source operation (the middle), one upper operation per
// category slot of the middle, and an indexing of all outer slots.  The
// middle hangs from the lowerSlot-th slot of the lower operation; families
// with a symmetric structure normalize lowerSlot to 1, the planar table
// families keep it as data.
//
// Position order of the outer slots: lower slots below lowerSlot, the upper
// blocks in slot order, then the lower slots above lowerSlot.  The target is
// the full evaluation with slot k renamed to leafIdx[k].
struct ThreeLevelTree {
  Operation lower;
  int lowerSlot = 1;
  Operation middle;
  std::vector<Operation> uppers;
  std::vector<int> leafIdx;
};

// The same data without the middle operation: a morphism of the enveloping
// category.  Objects there are colour tuples; the middle slot keeps only its
// arity and colour profile.
struct UMorphism {
  Operation lower;
  int lowerSlot = 1;
  int middleArity = 0;
  Color middleOut;
  std::vector<Color> middleIn;
  std::vector<Operation> uppers;
  std::vector<int> leafIdx;
};

// Colour tuple naming an object of the enveloping category.
struct UObject {
  Family family = Family::UCom;
  Color out;
  std::vector<Color> in;
};

bool operator==(const ThreeLevelTree& a, const ThreeLevelTree& b);
inline bool operator!=(const ThreeLevelTree& a, const ThreeLevelTree& b) { return !(a == b); }
bool operator==(const UMorphism& a, const UMorphism& b);
inline bool operator!=(const UMorphism& a, const UMorphism& b) { return !(a == b); }
bool operator==(const UObject& a, const UObject& b);
inline bool operator!=(const UObject& a, const UObject& b) { return !(a == b); }

std::string encode(const ThreeLevelTree& t);
std::string encode(const UMorphism& u);
std::string encode(const UObject& o);

void validate(const ThreeLevelTree& t);
void validate(const UMorphism& u);

int positionCount(const ThreeLevelTree& t);
int positionCount(const UMorphism& u);

Operation targetOf3(const ThreeLevelTree& t);
// Source and target objects of an enveloping-category morphism.
UObject sourceOfU(const UMorphism& u);
UObject targetOfU(const UMorphism& u);
UObject uObjectOf(const Operation& p);

ThreeLevelTree identity3(const Operation& p);
UMorphism identityU(const UObject& o);

// Composite of f with g, where the source of f is the target of g.
ThreeLevelTree compose3(const ThreeLevelTree& f, const ThreeLevelTree& g);
UMorphism composeU(const UMorphism& f, const UMorphism& g);

// Forgets the middle marking.
UMorphism toU(const ThreeLevelTree& t);
// The unique morphism with the given source operation over u.
ThreeLevelTree liftU(const Operation& source, const UMorphism& u);

// Wide-subcategory predicates.
bool isActive3(const ThreeLevelTree& t);   // lower is an identity operation
bool isRPositive3(const ThreeLevelTree& t);  // all non-source slots have arity > 0
bool isActiveU(const UMorphism& u);
bool isRPositiveU(const UMorphism& u);

}  // namespace opcat
