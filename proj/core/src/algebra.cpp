#include "kappalat/algebra.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>

#include "kappalat/irreducibles.hpp"
#include "kappalat/modularity.hpp"

namespace kappalat {

bool AlgebraModel::allowed(int a, int b) const {
  if (a < 1 || b > n_vertices || a > b) return false;
  for (const auto& f : forbidden_min)
    if (a <= f.a && f.b <= b) return false;
  return true;
}

int AlgebraModel::index_of(int a, int b) const {
  auto it = std::lower_bound(modules.begin(), modules.end(), ModInterval{a, b});
  if (it == modules.end() || !(*it == ModInterval{a, b})) return -1;
  return static_cast<int>(it - modules.begin());
}

bool AlgebraModel::hom_nonzero(int from, int to) const {
  // Hom(M[a,b], M[c,d]) ≠ 0 iff c ≤ a ≤ d ≤ b
  const ModInterval& x = modules[from];
  const ModInterval& y = modules[to];
  return y.a <= x.a && x.a <= y.b && y.b <= x.b;
}

std::string AlgebraModel::module_name(int idx) const {
  const ModInterval& m = modules[idx];
  return "M[" + std::to_string(m.a) + ".." + std::to_string(m.b) + "]";
}

AlgebraModel nakayama_algebra(int n, std::vector<ModInterval> forbidden) {
  if (n < 1) throw InvalidInterval("quiver needs at least one vertex");
  for (const auto& f : forbidden) {
    if (f.a < 1 || f.b > n || f.a > f.b)
      throw InvalidInterval("forbidden interval [" + std::to_string(f.a) +
                            "," + std::to_string(f.b) + "] out of range");
    if (f.a == f.b)
      throw InvalidInterval("forbidden interval [" + std::to_string(f.a) +
                            "," + std::to_string(f.b) +
                            "] has length 1; simples always exist");
  }

  AlgebraModel m;
  m.n_vertices = n;
  // keep the minimal forbidden intervals; containment is upward-closed
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  for (const auto& f : forbidden) {
    bool minimal = true;
    for (const auto& g : forbidden)
      if (!(g == f) && f.contains(g)) {
        minimal = false;
        break;
      }
    if (minimal) m.forbidden_min.push_back(f);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      if (m.allowed(a, b)) m.modules.push_back({a, b});
  return m;
}

namespace {

using Mask = std::uint32_t;

struct ClosureRules {
  std::vector<Mask> quot;                      // per module, its quotients
  std::vector<std::array<int, 3>> extensions;  // (i, j, middle)
  std::vector<Mask> hom_from;                  // b's with Hom(module, b) ≠ 0
};

ClosureRules closure_rules(const AlgebraModel& alg) {
  ClosureRules rules;
  int k = alg.module_count();
  rules.quot.assign(k, 0);
  rules.hom_from.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    auto [a, b] = alg.modules[i];
    for (int e = a; e <= b; ++e) {
      int q = alg.index_of(a, e);
      if (q >= 0) rules.quot[i] |= Mask{1} << q;
    }
    for (int j = 0; j < k; ++j)
      if (alg.hom_nonzero(i, j)) rules.hom_from[i] |= Mask{1} << j;
  }
  for (int i = 0; i < k; ++i) {
    auto [a, b] = alg.modules[i];
    for (int j = 0; j < k; ++j) {
      auto [c, d] = alg.modules[j];
      if (c == b + 1) {
        int mid = alg.index_of(a, d);
        if (mid >= 0) rules.extensions.push_back({i, j, mid});
      }
    }
  }
  return rules;
}

bool closed_under(const ClosureRules& rules, Mask t) {
  for (Mask rest = t; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if ((rules.quot[i] & ~t) != 0) return false;
  }
  for (const auto& [i, j, mid] : rules.extensions)
    if ((t >> i & 1) && (t >> j & 1) && !(t >> mid & 1)) return false;
  return true;
}

}  // namespace

TorsLattice torsion_classes(const AlgebraModel& alg, const Budget& budget) {
  int k = alg.module_count();
  if (k > budget.max_tors_indecomposables || k > 31)
    throw BudgetExceeded("torsion class scan needs 2^" + std::to_string(k) +
                         " subsets; cap is 2^" +
                         std::to_string(std::min(budget.max_tors_indecomposables, 31)));

  ClosureRules rules = closure_rules(alg);
  std::vector<Mask> classes;
  for (Mask t = 0; t < (Mask{1} << k); ++t)
    if (closed_under(rules, t)) classes.push_back(t);

  std::sort(classes.begin(), classes.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  int m = static_cast<int>(classes.size());

  // covers = transitive reduction of inclusion
  std::vector<CoverPair> covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || (classes[i] & ~classes[j]) != 0) continue;
      bool direct = true;
      for (int w = 0; w < m && direct; ++w)
        if (w != i && w != j && (classes[i] & ~classes[w]) == 0 &&
            (classes[w] & ~classes[j]) == 0)
          direct = false;
      if (direct) covers.emplace_back(i, j);
    }

  TorsLattice t;
  t.algebra = alg;
  t.lattice = build_lattice(m, std::move(covers));
  t.element_bricks.reserve(m);
  for (Mask c : classes) {
    Bits bs(k);
    for (int i = 0; i < k; ++i)
      if (c >> i & 1) bs.set(i);
    t.element_bricks.push_back(std::move(bs));
  }

  // Brick labelling: the unique brick of the larger class Hom-orthogonal to
  // the smaller one.
  for (auto [x, y] : t.lattice.covers()) {
    Mask smaller = classes[x], larger = classes[y];
    Mask reached = 0;
    for (Mask rest = smaller; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      reached |= rules.hom_from[i];
    }
    Mask cand = larger & ~smaller & ~reached;
    if (std::popcount(cand) != 1)
      throw LatticeError("cover brick label is not unique");
    t.cover_bricklabel.push_back(std::countr_zero(cand));
  }

  // Cross-check against the lattice-theoretic cover labels: the label of a
  // cover must be the brick of its labelling join-irreducible, which is in
  // turn the brick label of that irreducible's lower cover.
  KappaData kd = compute_kappa(t.lattice);
  const auto& cvs = t.lattice.covers();
  auto cover_index = [&](Elem a, Elem b) {
    auto it = std::lower_bound(cvs.begin(), cvs.end(), CoverPair{a, b});
    return static_cast<int>(it - cvs.begin());
  };
  for (std::size_t c = 0; c < cvs.size(); ++c) {
    Elem j = cover_label(t.lattice, kd, cvs[c].first, cvs[c].second);
    int jc = cover_index(kd.lower_of[j], j);
    if (t.cover_bricklabel[c] != t.cover_bricklabel[jc])
      throw LatticeError("brick labelling disagrees with lattice cover labels");
  }
  return t;
}

BrickQuiver brick_quiver(const AlgebraModel& alg) {
  BrickQuiver q;
  int k = alg.module_count();
  q.vertex_count = k;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && alg.hom_nonzero(i, j)) q.arrows.emplace_back(i, j);
  std::sort(q.arrows.begin(), q.arrows.end());

  std::vector<int> indeg(k, 0);
  std::vector<std::vector<int>> out(k);
  for (auto [i, j] : q.arrows) {
    out[i].push_back(j);
    ++indeg[j];
  }
  std::vector<int> stack;
  for (int i = 0; i < k; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++seen;
    for (int j : out[i])
      if (--indeg[j] == 0) stack.push_back(j);
  }
  q.acyclic = seen == k;
  return q;
}

bool is_brick_directed(const AlgebraModel& alg) {
  return brick_quiver(alg).acyclic;
}

FiniteLattice boolean_lattice(int k) {
  if (k < 0 || k > 16)
    throw BudgetExceeded("boolean lattice cap is 2^16 elements");
  int n = 1 << k;
  std::vector<CoverPair> covers;
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < k; ++i)
      if (!(s >> i & 1)) covers.emplace_back(s, s | 1 << i);
  return build_lattice(n, std::move(covers));
}

FiniteLattice chain_lattice(int m) {
  if (m < 0) throw LatticeError("chain length must be nonnegative");
  std::vector<CoverPair> covers;
  for (int i = 0; i < m; ++i) covers.emplace_back(i, i + 1);
  return build_lattice(m + 1, std::move(covers));
}

namespace {

// Binary trees with k internal nodes, encoded as preorder strings: "." for
// a leaf, "(LR)" for an internal node.
struct TreeNode {
  int left = -1, right = -1;  // -1 = leaf
};

struct TreeArena {
  std::vector<TreeNode> nodes;
  int add(int l, int r) {
    nodes.push_back({l, r});
    return static_cast<int>(nodes.size()) - 1;
  }
  std::string encode(int t) const {
    if (t < 0) return ".";
    return "(" + encode(nodes[t].left) + encode(nodes[t].right) + ")";
  }
};

void gen_trees(TreeArena& arena, int k, std::map<int, std::vector<int>>& memo) {
  if (memo.count(k)) return;
  std::vector<int> out;
  if (k == 0) {
    out.push_back(-1);
  } else {
    for (int i = 0; i < k; ++i) {
      gen_trees(arena, i, memo);
      gen_trees(arena, k - 1 - i, memo);
      // copy: arena grows while iterating
      std::vector<int> lefts = memo[i], rights = memo[k - 1 - i];
      for (int l : lefts)
        for (int r : rights) out.push_back(arena.add(l, r));
    }
  }
  memo[k] = std::move(out);
}

// All single right rotations (A·B)·C → A·(B·C) of tree t.
void rotations(TreeArena& arena, int t, std::vector<int>& out) {
  if (t < 0) return;
  int l = arena.nodes[t].left, r = arena.nodes[t].right;
  if (l >= 0) {
    int a = arena.nodes[l].left, b = arena.nodes[l].right;
    out.push_back(arena.add(a, arena.add(b, r)));
  }
  {
    std::vector<int> sub;
    rotations(arena, l, sub);
    for (int s : sub) out.push_back(arena.add(s, r));
  }
  {
    std::vector<int> sub;
    rotations(arena, r, sub);
    for (int s : sub) out.push_back(arena.add(l, s));
  }
}

}  // namespace

FiniteLattice tamari(int k) {
  if (k < 1) throw LatticeError("tamari needs at least one internal node");
  if (k > 11) throw BudgetExceeded("tamari cap is Catalan(k) <= 2^16");
  TreeArena arena;
  std::map<int, std::vector<int>> memo;
  gen_trees(arena, k, memo);
  std::vector<int> trees = memo[k];

  std::vector<std::string> codes;
  codes.reserve(trees.size());
  for (int t : trees) codes.push_back(arena.encode(t));
  std::sort(codes.begin(), codes.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < codes.size(); ++i) index[codes[i]] = static_cast<int>(i);

  std::vector<CoverPair> covers;
  for (int t : trees) {
    int from = index[arena.encode(t)];
    std::vector<int> next;
    rotations(arena, t, next);
    for (int s : next) covers.emplace_back(from, index.at(arena.encode(s)));
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return build_lattice(static_cast<int>(codes.size()), std::move(covers));
}

FiniteLattice weak_order(int n) {
  if (n < 2 || n > 6)
    throw LatticeError("weak_order supports 2 <= n <= 6");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  std::vector<CoverPair> covers;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    std::string nm;
    for (int v : perms[i]) nm += static_cast<char>('0' + v);
    names.push_back(nm);
    // right weak order: w ⋖ w·s_i when position i is an ascent
    for (int p = 0; p + 1 < n; ++p)
      if (perms[i][p] < perms[i][p + 1]) {
        std::vector<int> w = perms[i];
        std::swap(w[p], w[p + 1]);
        covers.emplace_back(static_cast<int>(i), index.at(w));
      }
  }
  return build_lattice(static_cast<int>(perms.size()), std::move(covers),
                       std::move(names));
}

FiniteLattice downset_lattice(int n_poset,
                              const std::vector<std::pair<int, int>>& less) {
  if (n_poset < 0 || n_poset > 16)
    throw BudgetExceeded("downset lattice cap is 2^16 elements");
  std::vector<std::uint32_t> below(n_poset, 0);
  for (auto [a, b] : less) {
    if (a < 0 || a >= n_poset || b < 0 || b >= n_poset || a == b)
      throw LatticeError("bad poset relation " + std::to_string(a) + "<" +
                         std::to_string(b));
    below[b] |= std::uint32_t{1} << a;
  }
  // transitive closure; detects cycles
  for (int k = 0; k < n_poset; ++k)
    for (int i = 0; i < n_poset; ++i)
      if (below[i] >> k & 1) below[i] |= below[k];
  for (int i = 0; i < n_poset; ++i)
    if (below[i] >> i & 1) throw CycleDetected("poset relations contain a cycle");

  std::vector<std::uint32_t> downsets;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n_poset); ++s) {
    bool ok = true;
    for (std::uint32_t rest = s; rest && ok;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      ok = (below[i] & ~s) == 0;
    }
    if (ok) downsets.push_back(s);
  }
  std::sort(downsets.begin(), downsets.end(), [](auto a, auto b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<std::uint32_t, int> index;
  for (std::size_t i = 0; i < downsets.size(); ++i)
    index[downsets[i]] = static_cast<int>(i);

  // downset covers add exactly one element
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i < downsets.size(); ++i)
    for (int e = 0; e < n_poset; ++e) {
      if (downsets[i] >> e & 1) continue;
      std::uint32_t bigger = downsets[i] | std::uint32_t{1} << e;
      auto it = index.find(bigger);
      if (it != index.end()) covers.emplace_back(static_cast<int>(i), it->second);
    }
  return build_lattice(static_cast<int>(downsets.size()), std::move(covers));
}

}  // namespace kappalat
