#include "opcat/cobordism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "opcat/util.hpp"

namespace opcat {

bool operator==(const Cobordism& a, const Cobordism& b) {
  return a.sourceCircles == b.sourceCircles && a.targetCircles == b.targetCircles &&
         encode(a) == encode(b);
}

namespace {

Cobordism sortedComponents(const Cobordism& f) {
  Cobordism out = f;
  for (auto& c : out.components) {
    std::sort(c.S.begin(), c.S.end());
    std::sort(c.T.begin(), c.T.end());
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Cobordism::Component& a, const Cobordism::Component& b) {
              auto keyA = std::make_tuple(a.S, a.T, a.genus);
              auto keyB = std::make_tuple(b.S, b.T, b.genus);
              return keyA < keyB;
            });
  return out;
}

}  // namespace

std::string encode(const Cobordism& f) {
  Cobordism s = sortedComponents(f);
  Encoder e;
  e.num(s.sourceCircles).num(s.targetCircles);
  for (const auto& c : s.components) {
    e.tag('C').num(c.genus);
    e.tag('S');
    for (int x : c.S) e.num(x);
    e.tag('T');
    for (int x : c.T) e.num(x);
  }
  return e.key();
}

void validate(const Cobordism& f) {
  require(f.sourceCircles >= 0 && f.targetCircles >= 0, "negative circle count");
  std::vector<char> src(f.sourceCircles, 0), tgt(f.targetCircles, 0);
  for (const auto& c : f.components) {
    require(c.genus >= 0, "negative genus");
    for (int x : c.S) {
      require(x >= 1 && x <= f.sourceCircles, "source circle out of range");
      require(!src[x - 1], "source circle repeated");
      src[x - 1] = 1;
    }
    for (int x : c.T) {
      require(x >= 1 && x <= f.targetCircles, "target circle out of range");
      require(!tgt[x - 1], "target circle repeated");
      tgt[x - 1] = 1;
    }
    require(!c.S.empty() || !c.T.empty(), "empty component");
  }
  for (char x : src) require(x, "source circle not covered");
  for (char x : tgt) require(x, "target circle not covered");
}

bool isNC(const Cobordism& f) {
  return std::all_of(f.components.begin(), f.components.end(),
                     [](const Cobordism::Component& c) { return !c.T.empty(); });
}

bool touchesSource(const Cobordism& f) {
  if (f.sourceCircles == 0) return f.components.empty();
  return std::all_of(f.components.begin(), f.components.end(),
                     [](const Cobordism::Component& c) { return !c.S.empty(); });
}

int eulerChar(const Cobordism::Component& c) {
  return 2 - 2 * c.genus - static_cast<int>(c.S.size() + c.T.size());
}

int eulerChar(const Cobordism& f) {
  int x = 0;
  for (const auto& c : f.components) x += eulerChar(c);
  return x;
}

Cobordism identityCob(int n) {
  Cobordism f;
  f.sourceCircles = f.targetCircles = n;
  for (int i = 1; i <= n; ++i) f.components.push_back({{i}, {i}, 0});
  return f;
}

Cobordism composeCob(const Cobordism& h, const Cobordism& f) {
  if (f.targetCircles != h.sourceCircles)
    throw SizeMismatch("composeCob: middle circle counts differ");
  const int nf = static_cast<int>(f.components.size());
  const int nh = static_cast<int>(h.components.size());
  // Union-find over the pieces, glued along middle circles.
  std::vector<int> parent(nf + nh);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> fOfMiddle(f.targetCircles, -1), hOfMiddle(f.targetCircles, -1);
  for (int i = 0; i < nf; ++i)
    for (int t : f.components[i].T) fOfMiddle[t - 1] = i;
  for (int j = 0; j < nh; ++j)
    for (int s : h.components[j].S) hOfMiddle[s - 1] = j;
  for (int m = 0; m < f.targetCircles; ++m) {
    int a = find(fOfMiddle[m]), b = find(nf + hOfMiddle[m]);
    if (a != b) parent[a] = b;
  }
  // Collect merged components.
  Cobordism out;
  out.sourceCircles = f.sourceCircles;
  out.targetCircles = h.targetCircles;
  std::vector<int> repIndex(nf + nh, -1);
  std::vector<int> chi, middles;
  for (int x = 0; x < nf + nh; ++x) {
    int r = find(x);
    if (repIndex[r] < 0) {
      repIndex[r] = static_cast<int>(out.components.size());
      out.components.push_back({});
      chi.push_back(0);
      middles.push_back(0);
    }
    int idx = repIndex[r];
    if (x < nf) {
      const auto& c = f.components[x];
      out.components[idx].S.insert(out.components[idx].S.end(), c.S.begin(), c.S.end());
      chi[idx] += eulerChar(c);
      middles[idx] += static_cast<int>(c.T.size());
    } else {
      const auto& c = h.components[x - nf];
      out.components[idx].T.insert(out.components[idx].T.end(), c.T.begin(), c.T.end());
      chi[idx] += eulerChar(c);
    }
  }
  for (size_t i = 0; i < out.components.size(); ++i) {
    auto& c = out.components[i];
    std::sort(c.S.begin(), c.S.end());
    std::sort(c.T.begin(), c.T.end());
    int b = static_cast<int>(c.S.size() + c.T.size());
    int twoG = 2 - chi[i] - b;
    if (twoG < 0 || twoG % 2 != 0)
      throw NonIntegerGenus("composeCob: Euler characteristic bookkeeping failed");
    c.genus = twoG / 2;
  }
  Cobordism s = sortedComponents(out);
  validate(s);
  return s;
}

Cobordism phi(const GradedSurjection& f) {
  validate(f);
  Cobordism out;
  out.sourceCircles = f.map.n;
  out.targetCircles = f.map.m;
  for (int i = 1; i <= f.map.m; ++i) {
    Cobordism::Component c;
    for (int j = 1; j <= f.map.n; ++j)
      if (f.map(j) == i) c.S.push_back(j);
    c.T = {i};
    c.genus = f.grading[i - 1];
    out.components.push_back(c);
  }
  return sortedComponents(out);
}

Cobordism phiOp(const GradedSurjection& h) {
  validate(h);
  Cobordism out;
  out.sourceCircles = h.map.m;
  out.targetCircles = h.map.n;
  for (int t = 1; t <= h.map.m; ++t) {
    Cobordism::Component c;
    c.S = {t};
    for (int i = 1; i <= h.map.n; ++i)
      if (h.map(i) == t) c.T.push_back(i);
    c.genus = h.grading[t - 1];
    out.components.push_back(c);
  }
  return sortedComponents(out);
}

GOSFactorization factorViaGOS(const Cobordism& f) {
  validate(f);
  if (!isNC(f)) throw NotNC("factorViaGOS: a component has empty target boundary");
  // Middle circles: one per component, ordered by the least target circle.
  std::vector<int> order(f.components.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return f.components[a].T.front() < f.components[b].T.front();
  });
  const int k = static_cast<int>(f.components.size());
  GOSFactorization out;
  out.splitter.sourceCircles = f.sourceCircles;
  out.splitter.targetCircles = k;
  out.graded.map.n = f.targetCircles;
  out.graded.map.m = k;
  out.graded.map.table.assign(f.targetCircles, 0);
  out.graded.grading.assign(k, 0);
  for (int t = 1; t <= k; ++t) {
    const auto& c = f.components[order[t - 1]];
    out.splitter.components.push_back({c.S, {t}, 0});
    for (int i : c.T) out.graded.map.table[i - 1] = t;
    out.graded.grading[t - 1] = c.genus;
  }
  validate(out.splitter);
  validate(out.graded);
  return out;
}

bool operator==(const Surface& a, const Surface& b) {
  return a.genus == b.genus && a.boundary == b.boundary;
}

std::string encode(const Surface& x) {
  Encoder e;
  e.tag('F').num(x.genus).num(x.boundary);
  return e.key();
}

Surface csAction(const Surface& x, const Cobordism& f) {
  if (f.sourceCircles != x.boundary) throw SizeMismatch("csAction: boundary count differs");
  if (!touchesSource(f) && !f.components.empty())
    throw Disconnects("csAction: a component misses the surface");
  int chi = (2 - 2 * x.genus - x.boundary) + eulerChar(f);
  int b = f.targetCircles;
  int twoG = 2 - chi - b;
  if (twoG < 0 || twoG % 2 != 0)
    throw NonIntegerGenus("csAction: Euler characteristic bookkeeping failed");
  return Surface{twoG / 2, b};
}

std::vector<Cobordism> allCobordisms(int n, int m, const CobBounds& b) {
  std::vector<Cobordism> out;
  if (n == 0) {
    // Only the trivial morphism out of the empty family.
    if (m == 0) out.push_back(Cobordism{0, 0, {}});
    return out;
  }
  // Partition the n + m circles into components: assign each circle a block
  // id; block ids are normalized by first appearance.
  const int total = n + m;
  std::vector<int> block(total, -1);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == total) {
      // Build and filter.
      Cobordism f;
      f.sourceCircles = n;
      f.targetCircles = m;
      f.components.assign(blocks, {});
      for (int x = 0; x < n; ++x) f.components[block[x]].S.push_back(x + 1);
      for (int y = 0; y < m; ++y) f.components[block[n + y]].T.push_back(y + 1);
      if (b.requireSourceTouch && !touchesSource(f)) return;
      if (b.requireNC && !isNC(f)) return;
      if (!b.allowClosedTargets) {
        for (const auto& c : f.components)
          if (c.T.empty()) return;
      }
      // All genus assignments.
      std::function<void(size_t)> genRec = [&](size_t ci) {
        if (ci == f.components.size()) {
          Cobordism s = sortedComponents(f);
          validate(s);
          out.push_back(s);
          return;
        }
        for (int g = 0; g <= b.maxComponentGenus; ++g) {
          f.components[ci].genus = g;
          genRec(ci + 1);
        }
      };
      genRec(0);
      return;
    }
    for (int x = 0; x <= blocks && x < total; ++x) {
      block[i] = x;
      rec(i + 1, std::max(blocks, x + 1));
    }
    block[i] = -1;
  };
  rec(0, 0);
  return out;
}

std::vector<Cobordism> allSplitters(int n, int middle) {
  std::vector<Cobordism> out;
  if (middle < 1 || middle > n) return out;
  // Surjective assignments of source circles to middle circles; every
  // middle circle needs a nonempty fiber.
  std::vector<int> to(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::vector<int>> fibers(middle);
      for (int x = 0; x < n; ++x) fibers[to[x]].push_back(x + 1);
      for (const auto& f : fibers)
        if (f.empty()) return;
      Cobordism s;
      s.sourceCircles = n;
      s.targetCircles = middle;
      for (int t = 1; t <= middle; ++t) s.components.push_back({fibers[t - 1], {t}, 0});
      out.push_back(sortedComponents(s));
      return;
    }
    for (int t = 0; t < middle; ++t) {
      to[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace opcat
