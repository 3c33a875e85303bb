#pragma once

#include <string>
#include <vector>

#include "opcat/finmaps.hpp"

namespace opcat {

// A 2-dimensional cobordism between indexed circle families, recorded by its
// connected components: which source and target circles each component
// touches and its genus.  Diffeomorphism classes of connected orientable
// surfaces with boundary are exactly (genus, boundary count), so this data
// determines the cobordism.
struct Cobordism {
  struct Component {
    std::vector<int> S;  // source circles, 1-based, increasing
    std::vector<int> T;  // target circles, 1-based, increasing
    int genus = 0;
  };
  int sourceCircles = 0;
  int targetCircles = 0;
  std::vector<Component> components;
};

bool operator==(const Cobordism& a, const Cobordism& b);
inline bool operator!=(const Cobordism& a, const Cobordism& b) { return !(a == b); }
std::string encode(const Cobordism& f);

void validate(const Cobordism& f);

// Every component has nonempty target boundary.
bool isNC(const Cobordism& f);
// Every component touches the source (morphisms out of nonempty circle
// families decompose through the source; those out of the empty family are
// trivial).
bool touchesSource(const Cobordism& f);

int eulerChar(const Cobordism::Component& c);
int eulerChar(const Cobordism& f);

Cobordism identityCob(int n);

// h after f, glueing along the middle circles; genus of each merged
// component recovered from Euler characteristic additivity.
Cobordism composeCob(const Cobordism& h, const Cobordism& f);

// The cobordism with one component per codomain element: S = f^-1(i),
// T = {i}, genus = grading(i).
Cobordism phi(const GradedSurjection& f);

// The opposite-direction image: the cobordism from the codomain of h to its
// domain with components ({t}, h^-1(t), grading(t)).
Cobordism phiOp(const GradedSurjection& h);

// Unique factorization of a cobordism without closed-off targets as a
// single-target genus-0 splitter followed by a phiOp image.
struct GOSFactorization {
  Cobordism splitter;
  GradedSurjection graded;
};
GOSFactorization factorViaGOS(const Cobordism& f);

// A connected orientable surface with indexed boundary circles.
struct Surface {
  int genus = 0;
  int boundary = 0;
};

bool operator==(const Surface& a, const Surface& b);
inline bool operator!=(const Surface& a, const Surface& b) { return !(a == b); }
std::string encode(const Surface& x);

// Extends a surface by a cobordism out of its boundary; Disconnects when
// the result is not connected.
Surface csAction(const Surface& x, const Cobordism& f);

// All cobordisms n -> m within the genus bound per component.
struct CobBounds {
  int maxComponentGenus = 2;
  bool requireNC = false;
  bool requireSourceTouch = true;
  bool allowClosedTargets = true;  // components with empty target
};
std::vector<Cobordism> allCobordisms(int n, int m, const CobBounds& b);

// All single-target genus-0 splitters out of n circles.
std::vector<Cobordism> allSplitters(int n, int middle);

}  // namespace opcat
