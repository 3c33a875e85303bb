#include <set>

#include "doctest.h"
#include "opcat/cobordism.hpp"
#include "opcat/util.hpp"

using namespace opcat;

namespace {

GradedSurjection gos(int n, int m, std::vector<int> table, std::vector<int> grading) {
  GradedSurjection f;
  f.map.n = n;
  f.map.m = m;
  f.map.table = std::move(table);
  f.grading = std::move(grading);
  validate(f);
  return f;
}

Cobordism pants() {
  Cobordism f;
  f.sourceCircles = 2;
  f.targetCircles = 1;
  f.components = {{{1, 2}, {1}, 0}};
  return f;
}

Cobordism copants() {
  Cobordism f;
  f.sourceCircles = 1;
  f.targetCircles = 2;
  f.components = {{{1}, {1, 2}, 0}};
  return f;
}

}  // namespace

TEST_CASE("graded surjection composition follows the grading sum") {
  GradedSurjection f = gos(3, 2, {1, 1, 2}, {1, 0});
  GradedSurjection h = gos(2, 1, {1, 1}, {2});
  GradedSurjection c = composeGOS(h, f);
  CHECK(c.map.table == std::vector<int>{1, 1, 1});
  CHECK(c.grading == std::vector<int>{3});

  // Identities are neutral.
  CHECK(composeGOS(identityGOS(2), f) == f);
  CHECK(composeGOS(f, identityGOS(3)) == f);

  // Exhaustive associativity at small sizes and gradings.
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= m; ++k)
        for (const auto& fm : allOrderedSurjections(n, m))
          for (const auto& hm : allOrderedSurjections(m, k))
            for (const auto& km : allOrderedSurjections(k, 1))
              for (const auto& gf : allGradings(m, 1))
                for (const auto& gh : allGradings(k, 1))
                  for (const auto& gk : allGradings(1, 1)) {
                    GradedSurjection a{fm, gf}, b{hm, gh}, c2{km, gk};
                    CHECK(composeGOS(composeGOS(c2, b), a) ==
                          composeGOS(c2, composeGOS(b, a)));
                  }
}

TEST_CASE("classification flags") {
  CHECK(classify(identityMap(3)).orderPreserving);
  CHECK(classify(identityMap(3)).minFiberOrdered);
  FinMap constant{3, 1, {1, 1, 1}};
  auto fl = classify(constant);
  CHECK(fl.surjective);
  CHECK_FALSE(fl.injective);
  FinMap swap2{2, 2, {2, 1}};
  auto fs = classify(swap2);
  CHECK(fs.surjective);
  CHECK_FALSE(fs.minFiberOrdered);
}

TEST_CASE("surjections factor uniquely through ordered surjections") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& f : allSurjections(n, m)) {
        auto [perm, ordered] = factorFS(f);
        CHECK(classify(ordered).minFiberOrdered);
        CHECK(classify(perm).injective);
        CHECK(composeMap(perm, ordered) == f);
        // Uniqueness: any other (permutation, ordered) pair with the same
        // composite coincides.
        int count = 0;
        for (const auto& p2 : allMaps(m, m)) {
          if (!classify(p2).injective) continue;
          for (const auto& o2 : allOrderedSurjections(n, m))
            if (composeMap(p2, o2) == f) ++count;
        }
        CHECK(count == 1);
      }
}

TEST_CASE("Euler characteristic bookkeeping of composition") {
  // Pants then a genus handle: (2->1, g 0) then (1->1, g 1) gives genus 1.
  Cobordism handle;
  handle.sourceCircles = handle.targetCircles = 1;
  handle.components = {{{1}, {1}, 1}};
  Cobordism c = composeCob(handle, pants());
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].genus == 1);
  CHECK(c.components[0].S == std::vector<int>{1, 2});

  // Copants then pants close a cycle of circles: genus 1.
  Cobordism cp = composeCob(pants(), copants());
  REQUIRE(cp.components.size() == 1);
  CHECK(cp.components[0].genus == 1);
  CHECK(cp.sourceCircles == 1);
  CHECK(cp.targetCircles == 1);

  // Cylinders compose to cylinders.
  CHECK(composeCob(identityCob(3), identityCob(3)) == identityCob(3));

  // Additivity on exhaustive small cases.
  CobBounds b;
  b.maxComponentGenus = 1;
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (int k = 0; k <= 2; ++k)
        for (const auto& f : allCobordisms(n, m, b))
          for (const auto& h : allCobordisms(m, k, b)) {
            Cobordism c2 = composeCob(h, f);
            CHECK(eulerChar(c2) == eulerChar(f) + eulerChar(h));
            for (const auto& comp : c2.components) CHECK(comp.genus >= 0);
          }
}

TEST_CASE("phi is functorial") {
  CHECK(phi(identityGOS(3)) == identityCob(3));
  GradedSurjection f = gos(3, 1, {1, 1, 1}, {2});
  Cobordism cf = phi(f);
  REQUIRE(cf.components.size() == 1);
  CHECK(cf.components[0].S == std::vector<int>{1, 2, 3});
  CHECK(cf.components[0].T == std::vector<int>{1});
  CHECK(cf.components[0].genus == 2);

  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m)
      for (int k = 1; k <= m; ++k)
        for (const auto& fm : allOrderedSurjections(n, m))
          for (const auto& hm : allOrderedSurjections(m, k))
            for (const auto& gf : allGradings(m, 1))
              for (const auto& gh : allGradings(k, 1)) {
                GradedSurjection a{fm, gf}, h{hm, gh};
                CHECK(phi(composeGOS(h, a)) == composeCob(phi(h), phi(a)));
              }
}

TEST_CASE("factorization through graded surjections") {
  // A phi-op image factors with singleton splitter fibers.
  GradedSurjection h = gos(3, 2, {1, 2, 2}, {1, 0});
  Cobordism f = phiOp(h);
  auto [splitter, graded] = factorViaGOS(f);
  for (const auto& c : splitter.components) {
    CHECK(c.S.size() == 1);
    CHECK(c.genus == 0);
  }
  CHECK(composeCob(phiOp(graded), splitter) == f);

  // Identity factors as (identity, identity).
  auto idFact = factorViaGOS(identityCob(2));
  CHECK(idFact.splitter == identityCob(2));
  CHECK(idFact.graded == identityGOS(2));

  CHECK_THROWS_AS(factorViaGOS(Cobordism{1, 0, {{{1}, {}, 0}}}), NotNC);

  // Exhaustive uniqueness: every valid factor pair of an nc-cobordism
  // coincides with the computed one.
  CobBounds b;
  b.maxComponentGenus = 2;
  b.requireNC = true;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (const auto& f2 : allCobordisms(n, m, b)) {
        auto fact = factorViaGOS(f2);
        CHECK(composeCob(phiOp(fact.graded), fact.splitter) == f2);
        int found = 0;
        for (int middle = 1; middle <= n; ++middle)
          for (const auto& s : allSplitters(n, middle))
            for (const auto& u : allOrderedSurjections(m, middle))
              for (const auto& grading : allGradings(middle, 2)) {
                GradedSurjection g2{u, grading};
                if (composeCob(phiOp(g2), s) == f2) ++found;
              }
        CHECK(found == 1);
      }
}

TEST_CASE("surface extension") {
  Surface hemisphere{0, 1};
  // One-holed torus glued on: genus grows by the component genus.
  Cobordism t;
  t.sourceCircles = 1;
  t.targetCircles = 2;
  t.components = {{{1}, {1, 2}, 1}};
  Surface y = csAction(hemisphere, t);
  CHECK(y == Surface{1, 2});

  CHECK(csAction(Surface{2, 3}, identityCob(3)) == Surface{2, 3});

  // Capping off all boundaries yields a closed surface.
  Cobordism cap;
  cap.sourceCircles = 1;
  cap.targetCircles = 0;
  cap.components = {{{1}, {}, 0}};
  CHECK(csAction(hemisphere, cap) == Surface{0, 0});

  // A component missing the surface disconnects.
  Cobordism disk;
  disk.sourceCircles = 1;
  disk.targetCircles = 2;
  disk.components = {{{1}, {1}, 0}, {{}, {2}, 0}};
  CHECK_THROWS_AS(csAction(hemisphere, disk), Disconnects);
}
