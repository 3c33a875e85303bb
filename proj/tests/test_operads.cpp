#include "doctest.h"
#include "opcat/operads.hpp"
#include "opcat/util.hpp"

using namespace opcat;

namespace {

Operation planarCorolla(int inputs) { return graphOp(Family::POp, corolla(inputs + 1)); }

Operation randomTableOp(Rng& rng, Family f, int maxArity) {
  int lo = (f == Family::Com || f == Family::As) ? 1 : 0;
  return tableOp(f, randInt(rng, lo, maxArity));
}

// Random planar operation with the given number of inputs.
Operation randomPlanarOp(Rng& rng, int inputs, int depth = 0) {
  if (depth > 2 || inputs == 0 || randInt(rng, 0, 1) == 0) return planarCorolla(inputs);
  // Split inputs across a corolla of smaller arity with one subtree.
  int c = randInt(rng, 1, inputs);
  Operation root = planarCorolla(c);
  Operation sub = randomPlanarOp(rng, inputs - c + 1, depth + 1);
  return composeAt(root, randInt(rng, 1, c), sub);
}

std::vector<int> randomPermutation1(Rng& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[randInt(rng, 0, i)]);
  return p;
}

}  // namespace

TEST_CASE("table composition adds arities") {
  Operation e2 = tableOp(Family::UCom, 2);
  Operation e3 = tableOp(Family::UCom, 3);
  CHECK(composeAt(e2, 1, e3) == tableOp(Family::UCom, 4));
  CHECK_THROWS_AS(composeAt(e2, 3, e3), SlotOutOfRange);
  CHECK_THROWS_AS(composeAt(e2, 0, e3), SlotOutOfRange);
}

TEST_CASE("planar grafting matches the expected tree") {
  Operation c2 = planarCorolla(2);
  Operation c3 = planarCorolla(3);
  Operation g = composeAt(c2, 1, c3);
  // Root with 2 slots whose first child carries 3 leaves.
  CHECK(g.graph.vertexCount() == 2);
  CHECK(arity(g) == 4);
  // Root is the vertex entered from leaf 0 and the child hangs from slot 1.
  GenusGraph expect = buildGraph(
      2, {{{0, 1}, {1, 0}}},
      {{0, 0}, {1, 1}, {1, 2}, {1, 3}, {0, 2}}, {0, 0});
  CHECK(g.graph == normalizeVertexOrderByDfs(expect, 0));
}

TEST_CASE("grafting associativity and parallel commutation") {
  Rng rng(101);
  for (Family f : {Family::UCom, Family::UAs}) {
    for (int it = 0; it < 1000; ++it) {
      Operation p = randomTableOp(rng, f, 5);
      if (arity(p) == 0) continue;
      Operation q = randomTableOp(rng, f, 5);
      Operation r = randomTableOp(rng, f, 5);
      int i = randInt(rng, 1, arity(p));
      if (arity(q) >= 1) {
        int j = randInt(rng, 1, arity(q));
        CHECK(composeAt(composeAt(p, i, q), i + j - 1, r) ==
              composeAt(p, i, composeAt(q, j, r)));
      }
      if (arity(p) >= 2) {
        int j2 = randInt(rng, 1, arity(p));
        if (j2 != i) {
          int a = std::min(i, j2), b = std::max(i, j2);
          Operation left = composeAt(composeAt(p, a, q), b + arity(q) - 1, r);
          Operation right = composeAt(composeAt(p, b, r), a, q);
          CHECK(left == right);
        }
      }
    }
  }
  // Graph families: planar trees.
  for (int it = 0; it < 1000; ++it) {
    Operation p = randomPlanarOp(rng, randInt(rng, 2, 4));
    Operation q = randomPlanarOp(rng, randInt(rng, 1, 3));
    Operation r = randomPlanarOp(rng, randInt(rng, 0, 3));
    int i = randInt(rng, 1, arity(p));
    int j = randInt(rng, 1, arity(q));
    CHECK(composeAt(composeAt(p, i, q), i + j - 1, r) == composeAt(p, i, composeAt(q, j, r)));
    if (arity(p) >= 2) {
      int j2 = randInt(rng, 1, arity(p));
      if (j2 != i) {
        int a = std::min(i, j2), b = std::max(i, j2);
        CHECK(composeAt(composeAt(p, a, q), b + arity(q) - 1, r) ==
              composeAt(composeAt(p, b, r), a, q));
      }
    }
  }
}

TEST_CASE("free operad composition and units") {
  Operation f = freeOp(freeGenerator("f", 2));
  Operation g = freeOp(freeGenerator("g", 3));
  Operation u = freeOp(freeUnit());
  CHECK(arity(composeAt(f, 1, g)) == 4);
  CHECK(composeAt(f, 1, u) == f);
  CHECK(composeAt(f, 2, u) == f);
  CHECK(composeAt(u, 1, f) == f);
  // Associativity on symbols.
  Operation a = composeAt(composeAt(f, 1, g), 2, f);
  Operation b = composeAt(f, 1, composeAt(g, 2, f));
  CHECK(a == b);
}

TEST_CASE("symmetric action laws") {
  Rng rng(103);
  Operation e3 = tableOp(Family::UCom, 3);
  CHECK(symAct(e3, {1, 3, 2}) == e3);

  // Group action on graph payloads: (p^sigma)^tau = p^{tau o sigma}.
  for (int it = 0; it < 200; ++it) {
    Operation p = promote(randomPlanarOp(rng, 3), Family::SOp);
    auto sigma = randomPermutation1(rng, 3);
    auto tau = randomPermutation1(rng, 3);
    Operation lhs = symAct(symAct(p, sigma), tau);
    std::vector<int> comp(3);
    for (int j = 1; j <= 3; ++j) comp[j - 1] = tau[sigma[j - 1] - 1];
    CHECK(lhs == symAct(p, comp));
  }

  // A planar corolla moved by the transposition is not the planar corolla.
  Operation c2 = planarCorolla(2);
  Operation moved = symAct(c2, {2, 1});
  CHECK(moved.family == Family::SOp);
  CHECK(moved != graphOp(Family::SOp, c2.graph));

  CHECK_THROWS_AS(symAct(tableOp(Family::UAs, 2), std::vector<int>{2, 1}), BadPermutation);
  CHECK_THROWS_AS(symAct(e3, std::vector<int>{1, 2}), BadPermutation);
}

TEST_CASE("grafting equivariance") {
  Rng rng(107);
  for (int it = 0; it < 300; ++it) {
    Operation p = symAct(promote(randomPlanarOp(rng, 3), Family::SOp),
                         randomPermutation1(rng, 3));
    Operation q = symAct(promote(randomPlanarOp(rng, 2), Family::SOp),
                         randomPermutation1(rng, 2));
    auto sigma = randomPermutation1(rng, 3);
    auto inv = sigma;
    for (int j = 1; j <= 3; ++j) inv[sigma[j - 1] - 1] = j;
    int i = randInt(rng, 1, 3);
    // p^sigma o_i q = (p o_{inv(i)} q)^tau with tau splicing the block of q
    // into sigma at position i.
    Operation lhs = composeAt(symAct(p, sigma), i, q);
    const int m = arity(q);
    const int n = 3;
    std::vector<int> tau(n + m - 1);
    for (int w = 1; w <= n + m - 1; ++w) {
      if (w >= inv[i - 1] && w <= inv[i - 1] + m - 1) {
        tau[w - 1] = i + (w - inv[i - 1]);
      } else {
        int v = w < inv[i - 1] ? w : w - m + 1;
        tau[w - 1] = sigma[v - 1] < i ? sigma[v - 1] : sigma[v - 1] + m - 1;
      }
    }
    Operation rhs = symAct(composeAt(p, inv[i - 1], q), tau);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("identity operations and substitution units") {
  // Corollas act as units for vertex substitution.
  Operation tree = graphOp(Family::MOpG, buildGraph(2, {{{0, 1}, {1, 0}}},
                                                    {{0, 0}, {1, 1}, {1, 2}}, {1, 2}));
  CHECK(catArity(tree) == 2);
  std::vector<Operation> ids;
  for (int i = 1; i <= 2; ++i) ids.push_back(identityOp(Family::MOpG, inColor(tree, i)));
  CHECK(isIdentityOp(ids[0]));
  CHECK(catCompose(tree, ids) == tree);

  // Substituting the operation into a matching corolla is also neutral.
  Operation outer = identityOp(Family::MOpG, outColor(tree));
  CHECK(catCompose(outer, {tree}) == tree);

  for (Family f : {Family::UCom, Family::UAs}) {
    Operation e4 = tableOp(f, 4);
    Operation id = identityOp(f);
    CHECK(isIdentityOp(id));
    CHECK(catCompose(id, {e4}) == e4);
  }
}

TEST_CASE("genus additivity of grafting") {
  // Total genus adds under grafting: the new edge creates no cycle.
  Rng rng(109);
  for (int it = 0; it < 200; ++it) {
    GenusGraph a = buildGraph(1, {{{0, 1}, {0, 2}}}, {{0, 0}, {0, 3}}, {randInt(rng, 0, 2)});
    GenusGraph b = buildGraph(1, {}, {{0, 0}, {0, 1}}, {randInt(rng, 0, 2)});
    Operation pa = graphOp(Family::MOpG, a);
    Operation pb = graphOp(Family::MOpG, b);
    Operation c = composeAt(pa, randInt(rng, 1, arity(pa)), pb);
    CHECK(totalGenus(c.graph) == totalGenus(a) + totalGenus(b));
  }
}

TEST_CASE("nu restriction") {
  OperadHandle h = nuRestrict(handle(Family::UCom));
  CHECK_FALSE(h.admits(tableOp(Family::UCom, 0)));
  CHECK(h.admits(tableOp(Family::UCom, 1)));
  CHECK(h.admits(tableOp(Family::UCom, 5)));

  OperadHandle hg = nuRestrict(handle(Family::MOpG));
  CHECK(hg.admits(graphOp(Family::MOpG, corolla(2, 1))));  // arity-1 corolla of genus 1
  CHECK_FALSE(hg.admits(tableOp(Family::UCom, 1)));
}
