#include <map>
#include <set>

#include "doctest.h"
#include "opcat/views.hpp"
#include "opcat/util.hpp"

using namespace opcat;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent oracle: monotone endpoint-preserving maps between chains,
// counted by direct enumeration.
long long countMonotoneEpMaps(int s, int t) {
  if (s == 0) return t == 0 ? 1 : 0;
  long long count = 0;
  std::vector<int> f(s, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == s) {
      if (f[0] == 1 && f[s - 1] == t) ++count;
      return;
    }
    for (int v = (i ? f[i - 1] : 1); v <= t; ++v) {
      f[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return count;
}

Operation pTree(int i) {
  // Two-vertex rooted tree: root with two inputs, the first carrying a
  // vertex with i inputs, the second an input leaf.
  std::vector<VS> leaves;
  leaves.push_back({0, 0});
  for (int k = 1; k <= i; ++k) leaves.push_back({1, k});
  leaves.push_back({0, 2});
  GenusGraph g = buildGraph(2, {{{0, 1}, {1, 0}}}, leaves, {0, 0});
  return promote(graphOp(Family::POp, g), Family::SOp);
}

Operation idCorolla(int inputs) {
  return promote(graphOp(Family::POp, corolla(inputs + 1)), Family::SOp);
}

}  // namespace

TEST_CASE("hom counts: commutative family matches all finite maps") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m) {
      long long expect = 1;
      for (int i = 0; i < n; ++i) expect *= m;
      auto homs = homTableC(Family::UCom, n, m);
      CHECK(static_cast<long long>(homs.size()) == expect);
      // Each is a valid morphism with the right cardinality map, pairwise
      // distinct.
      std::set<std::string> keys;
      for (const auto& h : homs) {
        validate(h);
        CHECK(sourceOf2(h) == tableOp(Family::UCom, n));
        keys.insert(encode(h));
      }
      CHECK(keys.size() == homs.size());
    }
}

TEST_CASE("hom counts: planar unital family matches interval maps") {
  for (int n = 0; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m) {
      auto homs = homTableC(Family::UAs, n, m);
      CHECK(static_cast<long long>(homs.size()) == countMonotoneEpMaps(m + 1, n + 1));
    }
}

TEST_CASE("hom counts: twisted category of the planar unital family") {
  // Hom(e_a, e_b) matches the monotone maps between chains of sizes a+1 and
  // b+1; equivalently the count for p_a = e_{a+1} uses chains of sizes a+2
  // and b+2.
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      auto homs = homTableTw(Family::UAs, tableOp(Family::UAs, a), b);
      CHECK(static_cast<long long>(homs.size()) == countMonotoneMaps(a + 1, b + 1));
      for (const auto& t : homs) CHECK(targetOf3(t) == tableOp(Family::UAs, b));
    }
}

TEST_CASE("hom counts: twisted category of the commutative family") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      auto homs = homTableTw(Family::UCom, tableOp(Family::UCom, a), b);
      long long expect = 1;
      for (int i = 0; i < b; ++i) expect *= (a + 1);
      CHECK(static_cast<long long>(homs.size()) == expect);
    }
}

TEST_CASE("hom counts: ordinal injections for the non-unital planar family") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto homs = homTableTw(Family::As, tableOp(Family::As, a), b);
      CHECK(static_cast<long long>(homs.size()) == binom(b + 1, a + 1));
    }
}

TEST_CASE("exhaustive associativity at small arities") {
  for (Family f : {Family::UCom, Family::UAs}) {
    std::map<std::pair<int, int>, std::vector<TwoLevelTree>> hom;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b) hom[{a, b}] = homTableC(f, a, b);
    long long checked = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          for (int d = 0; d <= 3; ++d)
            for (const auto& h : hom[{c, d}])      // h: c -> d
              for (const auto& g : hom[{b, c}])    // g: b -> c
                for (const auto& e : hom[{a, b}])  // e: a -> b
                {
                  TwoLevelTree left = compose2(compose2(h, g), e);
                  TwoLevelTree right = compose2(h, compose2(g, e));
                  if (!(left == right)) {
                    REQUIRE(left == right);
                  }
                  ++checked;
                }
    CHECK(checked > 0);
  }
}

TEST_CASE("fiber functoriality on exhaustive small chains") {
  // Fibers of a composite agree with composites of fibers.
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (const auto& f : homTableC(Family::UCom, b, c))
          for (const auto& g : homTableC(Family::UCom, a, b)) {
            for (int i = 1; i <= c; ++i) {
              TwoLevelTree big = fiber(g, f, i);
              // Composite route: fibers of f over the identity are the
              // single-slot restrictions, so check source consistency.
              CHECK(catArity(sourceOf2(big)) ==
                    [&] {
                      int cnt = 0;
                      FinMap cf = cardinality(f);
                      FinMap cg = cardinality(g);
                      for (int x = 1; x <= cg.n; ++x)
                        if (cf(cg(x)) == i) ++cnt;
                      return cnt;
                    }());
            }
            // Morphisms are determined by their fibers over the target.
            TwoLevelTree fg = compose2(f, g);
            CHECK(cardinality(fg) == composeMap(cardinality(f), cardinality(g)));
          }
}

TEST_CASE("planar tree enumeration") {
  // One shape with a single vertex per input count.
  CHECK(allPlanarOps(0, 1).size() == 1);
  CHECK(allPlanarOps(3, 1).size() == 1);
  // Two-vertex planar trees with two inputs: the vertex split and the slot
  // of the child vary.
  auto two = allPlanarOps(2, 2);
  for (const auto& op : two) validate(op);
  std::set<std::string> keys;
  for (const auto& op : two) keys.insert(encode(op));
  CHECK(keys.size() == two.size());
  // Symmetric variants multiply by the input permutations.
  CHECK(allSymOps(2, 2).size() == two.size() * 2);
}

TEST_CASE("genus graph enumeration is complete on slot structures") {
  // Single vertex, one loop, no leaves: slot pairings of the loop.
  auto graphs = allGenusGraphs(0, 1, 1, 1);
  // Vertex with no half-edges (genus 0 or 1) plus the loop with genus 0.
  int loops = 0;
  for (const auto& g : graphs)
    if (edgeCount(g.shape.base) == 1) ++loops;
  CHECK(loops == 1);

  // Two leaves on up to two vertices, a single edge.
  auto pool = allGenusGraphs(2, 2, 1, 0);
  for (const auto& g : pool) {
    validate(g);
    CHECK(isConnected(g.shape.base));
    CHECK(totalGenus(g) <= 0);
  }
  // Slot interleavings are distinguished.
  std::set<std::string> keys;
  for (const auto& g : pool) keys.insert(encode(g));
  CHECK(keys.size() == pool.size());
}

TEST_CASE("traversal-ordered planar subcategory") {
  auto pool = allPlanarOps(3, 3);
  for (const auto& op : pool) CHECK(isDfsObject(op));

  // Reordering vertices breaks the property; normalizeD restores it.
  for (const auto& op : pool) {
    if (catArity(op) < 2) continue;
    Operation moved = op;
    std::vector<int> perm(catArity(op));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[1]);
    moved.graph = reorderVertices(op.graph, perm);
    CHECK_FALSE(isDfsObject(moved));
    NormalizeResult nr = normalizeD(moved);
    CHECK(isDfsObject(nr.rep));
    CHECK(nr.rep == op);
    CHECK(sourceOf2(nr.iso) == nr.rep);
    CHECK(nr.iso.target == moved);
  }
}

TEST_CASE("morphisms out of an object in the traversal-ordered view") {
  // From the 2-vertex chain tree.
  Operation p = allPlanarOps(1, 2)[1];  // a two-vertex shape
  REQUIRE(catArity(p) == 2);
  auto homs = dMorphismsFrom(p, 4);
  CHECK(!homs.empty());
  std::set<std::string> keys;
  for (const auto& h : homs) {
    validate(h);
    CHECK(isDfsObject(sourceOf2(h)));
    keys.insert(encode(h));
  }
  CHECK(keys.size() == homs.size());
}

TEST_CASE("anchored objects and morphisms") {
  // A corolla with leaf 0 at slot 0 is anchored.
  Operation c = graphOp(Family::MOpG, corolla(2, 0));
  CHECK(isZObject(c));

  // Two-vertex graph, anchored: leaf 0 at the first vertex slot 0, the tree
  // edge entered through the child's slot 0.
  GenusGraph g = buildGraph(2, {{{0, 1}, {1, 0}}}, {{0, 0}, {1, 1}}, {0, 0});
  Operation z = graphOp(Family::MOpG, g);
  CHECK(isZObject(z));

  // Same graph with the edge at the child's slot 1 is not anchored.
  GenusGraph bad = buildGraph(2, {{{0, 1}, {1, 1}}}, {{0, 0}, {1, 0}}, {0, 0});
  CHECK_FALSE(isZObject(graphOp(Family::MOpG, bad)));

  GraphFromBounds b;
  b.maxVerticesPerUpper = 2;
  b.maxEdgesPerUpper = 2;
  b.maxGenusPerUpper = 1;
  auto zs = zMorphismsFrom(z, b);
  CHECK(!zs.empty());
  for (const auto& m : zs) {
    CHECK(isZMorphism(m));
    CHECK(isZObject(sourceOf2(m)));
  }
  // Anchored endomorphisms are trivial: the only morphism with the same
  // source and target is the identity.
  int endos = 0;
  for (const auto& m : zs)
    if (sourceOf2(m) == z) ++endos;
  CHECK(endos == 1);
}

TEST_CASE("isomorphisms out of a graph object") {
  GenusGraph g = buildGraph(2, {{{0, 1}, {1, 0}}}, {{0, 0}, {1, 1}}, {1, 0});
  Operation p = graphOp(Family::MOpG, g);
  auto isos = graphIsosFrom(p);
  // Corolla insertions with slot permutations and vertex reindexings.
  CHECK(!isos.empty());
  std::set<std::string> sources;
  for (const auto& f : isos) {
    validate(f);
    for (const auto& u : f.uppers) CHECK(u.graph.vertexCount() == 1);
    sources.insert(encode(sourceOf2(f)));
  }
  // Vertex 0 has degree 2 (2 slot orders), vertex 1 degree 2 (2 orders),
  // and the vertex order can be swapped: 8 morphisms.
  CHECK(isos.size() == 8);
}

TEST_CASE("fixed-endpoint graph hom enumeration") {
  // Hom(p, q) by fiber maps agrees with a filter over graphMorphismsFrom.
  GenusGraph pg = buildGraph(1, {}, {{0, 0}, {0, 1}}, {1});
  Operation p = graphOp(Family::MOpG, pg);  // one vertex of genus 1, 2 leaves
  GraphFromBounds b;
  b.maxVerticesPerUpper = 2;
  b.maxEdgesPerUpper = 2;
  b.maxGenusPerUpper = 1;
  auto all = graphMorphismsFrom(p, b);
  std::map<std::string, int> byTarget;
  for (const auto& f : all) byTarget[encode(sourceOf2(f))]++;
  int pairsChecked = 0;
  std::set<std::string> seenTargets;
  for (const auto& f : all) {
    Operation q = sourceOf2(f);
    if (!seenTargets.insert(encode(q)).second) continue;
    auto fixed = graphHom(p, q);
    CHECK(static_cast<int>(fixed.size()) == byTarget[encode(q)]);
    if (++pairsChecked > 25) break;
  }
  CHECK(pairsChecked > 5);
}

TEST_CASE("twisted-category morphisms on rooted trees") {
  Operation id2 = idCorolla(2);
  TwGraphBounds b;
  b.maxLowerVertices = 2;
  b.maxUpperVertices = 2;
  b.maxTargetDegree = 9;
  auto from = twGraphMorphismsFrom(id2, b);
  CHECK(!from.empty());
  std::set<std::string> targets;
  for (const auto& t : from) targets.insert(encode(targetOf3(t)));

  // p_3 is reachable from id2 and its decompositions find exactly the
  // morphisms that the forward enumeration found.
  Operation p3 = pTree(3);
  CHECK(targets.count(encode(p3)) == 1);
  int forward = 0;
  for (const auto& t : from)
    if (targetOf3(t) == p3) ++forward;
  auto into = twGraphMorphismsInto(p3);
  int fromId2 = 0;
  for (const auto& t : into) {
    CHECK(targetOf3(t) == p3);
    if (t.middle == id2) ++fromId2;
  }
  CHECK(fromId2 == forward);
  // Two morphisms forming one orbit under the slot-swap automorphism of id2.
  CHECK(fromId2 == 2);

  // Corollas with other input counts never receive a morphism from id2.
  for (const auto& t : from) {
    Operation tgt = targetOf3(t);
    if (tgt.graph.vertexCount() == 1) CHECK(arity(tgt) == 2);
  }
}
