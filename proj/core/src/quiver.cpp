#include "kappalat/quiver.hpp"

#include <algorithm>

#include "kappalat/modularity.hpp"

namespace kappalat {

int LabellingQuiver::index_of(Elem v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

LabellingQuiver build_labelling_quiver(const FiniteLattice& L) {
  return build_labelling_quiver(L, compute_kappa(L));
}

LabellingQuiver build_labelling_quiver(const FiniteLattice& L,
                                       const KappaData& kd) {
  LabellingQuiver q;
  q.vertices = kd.ji;
  int v = q.vertex_count();
  q.out.assign(v, Bits(v));
  for (int ji = 0; ji < v; ++ji) {
    Elem j = q.vertices[ji];
    if (!kd.kappa[j].defined())
      throw KappaUndefined(j, kd.kappa[j].candidates, false);
    Elem kj = kd.kappa[j].image;
    for (int ii = 0; ii < v; ++ii) {
      Elem i = q.vertices[ii];
      if (i != j && !L.leq(i, kj)) {
        q.arrows.emplace_back(ii, ji);
        q.out[ii].set(ji);
      }
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());

  // Kahn acyclicity test.
  std::vector<int> indeg(v, 0);
  for (auto [i, j] : q.arrows) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < v; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    ++seen;
    for (auto j = q.out[i].find_first(); j != Bits::npos; j = q.out[i].find_next(j))
      if (--indeg[j] == 0) stack.push_back(static_cast<int>(j));
  }
  q.acyclic = seen == v;
  return q;
}

namespace {

// Reflexive-transitive closure of the arrow relation (Warshall; correct in
// the presence of cycles).
std::vector<Bits> reachability(const LabellingQuiver& q) {
  int v = q.vertex_count();
  std::vector<Bits> reach(q.out);
  for (int i = 0; i < v; ++i) reach[i].set(i);
  for (int k = 0; k < v; ++k)
    for (int i = 0; i < v; ++i)
      if (reach[i].test(k)) reach[i] |= reach[k];
  return reach;
}

struct Condensation {
  std::vector<int> scc_of;            // per vertex
  std::vector<std::vector<int>> members;
  std::vector<Bits> out;              // condensation arrows
  std::vector<int> topo;              // sources first, deterministic
};

Condensation condense(const LabellingQuiver& q, const std::vector<Bits>& reach) {
  int v = q.vertex_count();
  Condensation c;
  c.scc_of.assign(v, -1);
  for (int i = 0; i < v; ++i) {
    if (c.scc_of[i] >= 0) continue;
    int id = static_cast<int>(c.members.size());
    c.members.push_back({});
    for (int j = i; j < v; ++j)
      if (c.scc_of[j] < 0 && reach[i].test(j) && reach[j].test(i)) {
        c.scc_of[j] = id;
        c.members[id].push_back(j);
      }
  }
  int s = static_cast<int>(c.members.size());
  c.out.assign(s, Bits(s));
  for (auto [i, j] : q.arrows)
    if (c.scc_of[i] != c.scc_of[j]) c.out[c.scc_of[i]].set(c.scc_of[j]);

  std::vector<int> indeg(s, 0);
  for (int i = 0; i < s; ++i)
    for (auto j = c.out[i].find_first(); j != Bits::npos; j = c.out[i].find_next(j))
      ++indeg[j];
  std::vector<int> ready;
  for (int i = 0; i < s; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::make_heap(ready.begin(), ready.end(), std::greater<>());
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    int i = ready.back();
    ready.pop_back();
    c.topo.push_back(i);
    for (auto j = c.out[i].find_first(); j != Bits::npos; j = c.out[i].find_next(j))
      if (--indeg[j] == 0) {
        ready.push_back(static_cast<int>(j));
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
  }
  return c;
}

// Backtracking enumeration of successor-closed SCC sets, sinks decided
// first so that inclusion only needs already-decided successors.
std::uint64_t enumerate_succ(const LabellingQuiver& q, const Budget& budget,
                             const std::function<void(const Condensation&,
                                                      const Bits&)>& emit) {
  auto reach = reachability(q);
  Condensation c = condense(q, reach);
  int s = static_cast<int>(c.members.size());
  Bits chosen(s);
  std::uint64_t results = 0, nodes = 0;

  auto rec = [&](auto&& self, int idx) -> void {
    if (++nodes > budget.max_candidates)
      throw BudgetExceeded("successor-closed enumeration exceeded " +
                           std::to_string(budget.max_candidates) + " nodes");
    if (idx < 0) {
      if (results == budget.max_sets)
        throw BudgetExceeded("successor-closed enumeration exceeded " +
                             std::to_string(budget.max_sets) + " sets");
      ++results;
      emit(c, chosen);
      return;
    }
    int node = c.topo[idx];
    self(self, idx - 1);
    if (c.out[node].is_subset_of(chosen)) {
      chosen.set(node);
      self(self, idx - 1);
      chosen.reset(node);
    }
  };
  rec(rec, s - 1);
  return results;
}

}  // namespace

std::vector<SuccClosedSet> successor_closed_sets(const LabellingQuiver& q,
                                                 const Budget& budget) {
  std::vector<SuccClosedSet> sets;
  enumerate_succ(q, budget, [&](const Condensation& c, const Bits& chosen) {
    std::vector<Elem> members;
    for (auto sc = chosen.find_first(); sc != Bits::npos;
         sc = chosen.find_next(sc))
      for (int vi : c.members[sc]) members.push_back(q.vertices[vi]);
    std::sort(members.begin(), members.end());
    sets.push_back({std::move(members)});
  });
  std::sort(sets.begin(), sets.end(),
            [](const SuccClosedSet& a, const SuccClosedSet& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return sets;
}

std::uint64_t count_successor_closed_sets(const LabellingQuiver& q,
                                          const Budget& budget) {
  return enumerate_succ(q, budget, [](const Condensation&, const Bits&) {});
}

bool is_successor_closed(const LabellingQuiver& q, const SuccClosedSet& s) {
  Bits in(q.vertex_count());
  for (Elem v : s.members) {
    int vi = q.index_of(v);
    if (vi < 0) return false;
    in.set(vi);
  }
  for (auto [i, j] : q.arrows)
    if (in.test(i) && !in.test(j)) return false;
  return true;
}

SuccClosedSet phi(const FiniteLattice& L, Elem t) {
  return phi(L, build_labelling_quiver(L), t);
}

SuccClosedSet phi(const FiniteLattice& L, const LabellingQuiver& q, Elem t) {
  if (!is_left_modular_def(L, t).ok) throw NotLeftModular(t);
  SuccClosedSet s;
  for (Elem j : q.vertices)
    if (L.leq(j, t)) s.members.push_back(j);
  return s;
}

Elem psi(const FiniteLattice& L, const SuccClosedSet& s) {
  return psi(L, build_labelling_quiver(L), s);
}

Elem psi(const FiniteLattice& L, const LabellingQuiver& q,
         const SuccClosedSet& s) {
  if (!is_successor_closed(q, s))
    throw NotSuccessorClosed("set is not successor-closed in the labelling quiver");
  return L.join_set(s.members);
}

QuiverPoset quiver_poset(const LabellingQuiver& q) {
  if (!q.acyclic) throw NotAcyclic("labelling quiver has an oriented cycle");
  QuiverPoset p;
  p.vertices = q.vertices;
  p.below = reachability(q);
  return p;
}

std::uint64_t for_each_linear_extension(
    const LabellingQuiver& q, const Budget& budget,
    const std::function<bool(const LinearOrder&)>& visit) {
  if (!q.acyclic) throw NotAcyclic("labelling quiver has an oriented cycle");
  auto reach = reachability(q);
  int v = q.vertex_count();
  Bits remaining(v);
  remaining.set();
  LinearOrder order;
  order.reserve(v);
  std::uint64_t results = 0, nodes = 0;
  bool stopped = false;

  auto rec = [&](auto&& self) -> void {
    if (stopped) return;
    if (++nodes > budget.max_candidates)
      throw BudgetExceeded("linear extension enumeration exceeded " +
                           std::to_string(budget.max_candidates) + " nodes");
    if (static_cast<int>(order.size()) == v) {
      if (results == budget.max_sets)
        throw BudgetExceeded("linear extension enumeration exceeded " +
                             std::to_string(budget.max_sets) + " extensions");
      ++results;
      if (!visit(order)) stopped = true;
      return;
    }
    for (int i = 0; i < v && !stopped; ++i) {
      if (!remaining.test(i)) continue;
      // i is ⪯-minimal among the remaining vertices
      Bits lower = reach[i];
      lower &= remaining;
      if (lower.count() != 1) continue;
      remaining.reset(i);
      order.push_back(q.vertices[i]);
      self(self);
      order.pop_back();
      remaining.set(i);
    }
  };
  rec(rec);
  return results;
}

std::vector<LinearOrder> linear_extensions(const LabellingQuiver& q,
                                           const Budget& budget) {
  std::vector<LinearOrder> out;
  for_each_linear_extension(q, budget, [&](const LinearOrder& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

bool is_linear_extension(const LabellingQuiver& q, const LinearOrder& order) {
  if (!q.acyclic) throw NotAcyclic("labelling quiver has an oriented cycle");
  int v = q.vertex_count();
  if (static_cast<int>(order.size()) != v) return false;
  std::vector<int> posn(v, -1);
  for (int p = 0; p < v; ++p) {
    int vi = q.index_of(order[p]);
    if (vi < 0 || posn[vi] >= 0) return false;
    posn[vi] = p;
  }
  auto reach = reachability(q);
  for (int yi = 0; yi < v; ++yi)
    for (auto xi = reach[yi].find_first(); xi != Bits::npos;
         xi = reach[yi].find_next(xi))
      if (posn[xi] > posn[yi]) return false;  // x ⪯ y must come no later
  return true;
}

Chain extremal_chain_from_linext(const FiniteLattice& L,
                                 const LinearOrder& order) {
  KappaData kd = compute_kappa(L);
  LabellingQuiver q = build_labelling_quiver(L, kd);
  if (!is_linear_extension(q, order))
    throw NotLinearExtension("order is not a linear extension of the quiver poset");
  Chain c;
  Elem x = L.bottom();
  c.elements.push_back(x);
  for (Elem j : order) {
    Elem y = L.join(x, j);
    if (y == x)
      throw NotLinearExtension("downset joins do not form a strictly increasing chain");
    c.elements.push_back(y);
    x = y;
  }
  return c;
}

LinearOrder linext_from_extremal_chain(const FiniteLattice& L,
                                       const Chain& chain) {
  if (!is_maximal_chain(L, chain))
    throw NotExtremalChain("chain is not a maximal chain");
  KappaData kd = compute_kappa(L);
  Bits seen(L.size());
  LinearOrder order;
  for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i) {
    Elem j = cover_label(L, kd, chain.elements[i], chain.elements[i + 1]);
    if (seen.test(j)) throw NotExtremalChain("cover label repeats along chain");
    seen.set(j);
    order.push_back(j);
  }
  for (Elem j : kd.ji)
    if (!seen.test(j))
      throw NotExtremalChain("join-irreducible " + std::to_string(j) +
                             " labels no cover of the chain");
  return order;
}

}  // namespace kappalat
