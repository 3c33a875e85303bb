#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "opcat/cobordism.hpp"
#include "opcat/threelevel.hpp"
#include "opcat/twolevel.hpp"

namespace opcat {

// An explicitly materialized truncation of a category: finitely many
// objects, finitely many morphisms, composition total only where both
// factors and the composite lie inside the truncation.
class SmallCat {
 public:
  struct Mor {
    int src = -1;
    int dst = -1;
    std::string key;
  };

  int addObject(const std::string& key, int degree = 0);
  int addMorphism(int src, int dst, const std::string& key);
  void setIdentity(int obj, int mor);
  // fn(f, g) with f after g must return the morphism index, or -1 when the
  // composite lies outside the truncation.
  void setCompose(std::function<int(int, int)> fn);

  int objectCount() const { return static_cast<int>(objects_.size()); }
  int morCount() const { return static_cast<int>(mors_.size()); }
  const std::string& objectKey(int o) const { return objects_[o]; }
  int objectDegree(int o) const { return degrees_[o]; }
  const Mor& mor(int m) const { return mors_[m]; }
  int findObject(const std::string& key) const;
  int findMorphism(const std::string& key) const;
  int identity(int obj) const { return identities_[obj]; }
  const std::vector<int>& hom(int src, int dst) const;
  std::vector<int> morphismsFrom(int src) const;

  // f after g; -1 when not composable inside the truncation.
  int compose(int f, int g) const;

  // Checks identity laws and associativity wherever all composites exist.
  void checkCategoryLaws() const;

 private:
  std::vector<std::string> objects_;
  std::vector<int> degrees_;
  std::vector<Mor> mors_;
  std::unordered_map<std::string, int> objIndex_, morIndex_;
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::vector<int> identities_;
  std::function<int(int, int)> composeFn_;
  mutable std::map<std::pair<int, int>, int> composeMemo_;
};

// A functor between truncations, tabulated on objects and morphisms.
struct FiniteFunctor {
  const SmallCat* src = nullptr;
  const SmallCat* dst = nullptr;
  std::vector<int> objMap;
  std::vector<int> morMap;
};

// Checks functoriality wherever composites exist on both sides.
void checkFunctorLaws(const FiniteFunctor& F);

// ---- concrete truncations ----

// Twisted category of a table family: objects are arities 0..maxArity,
// morphisms all three-level trees with target arity within the bound.
struct TwTableCat {
  SmallCat cat;
  std::vector<Operation> objectOps;        // per object
  std::vector<ThreeLevelTree> morphisms;   // per morphism index
};
TwTableCat buildTwTableCat(Family f, int maxArity);

// Enveloping category of a table family.
struct UTableCat {
  SmallCat cat;
  std::vector<UMorphism> morphisms;
};
UTableCat buildUTableCat(Family f, int maxArity);

// The forgetful functor from the twisted truncation to the enveloping one.
FiniteFunctor twToU(const TwTableCat& tw, const UTableCat& u);

// Wide subcategory of a twisted truncation on morphisms whose non-source
// slots all have positive arity.
TwTableCat buildTwTableRPositive(Family f, int maxArity);

// Inclusion of the positive-arity wide subcategory.
FiniteFunctor rPositiveInclusion(const TwTableCat& sub, const TwTableCat& full);

// Connected surfaces with nonempty boundary; morphisms are the cobordisms
// with nonempty per-component source and target boundary.
struct NcCSCat {
  SmallCat cat;
  std::vector<Surface> objects;
  std::vector<Cobordism> morphisms;
};
NcCSCat buildNcCSCat(int maxGenus, int maxBoundary, int maxComponentGenus);

struct NcCobCat {
  SmallCat cat;
  std::vector<Cobordism> morphisms;
};
NcCobCat buildNcCobCat(int maxCircles, int maxComponentGenus);

// Boundary projection.
FiniteFunctor csToCob(const NcCSCat& cs, const NcCobCat& cob);

}  // namespace opcat
