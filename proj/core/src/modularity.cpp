#include "kappalat/modularity.hpp"

#include <algorithm>
#include <map>

namespace kappalat {

LmDefCheck is_left_modular_def(const FiniteLattice& L, Elem t) {
  int n = L.size();
  for (Elem y = 0; y < n; ++y) {
    const Bits& up = L.above(y);
    for (auto z = up.find_first(); z != Bits::npos; z = up.find_next(z)) {
      Elem ze = static_cast<Elem>(z);
      if (L.meet(L.join(y, t), ze) != L.join(y, L.meet(t, ze)))
        return {false, PairWitness{y, ze}};
    }
  }
  return {true, std::nullopt};
}

LmKappaCheck is_left_modular_kappa(const FiniteLattice& L, Elem t) {
  return is_left_modular_kappa(L, compute_kappa(L), t);
}

LmKappaCheck is_left_modular_kappa(const FiniteLattice& L, const KappaData& kd,
                                   Elem t) {
  for (Elem j : kd.ji) {
    if (!kd.kappa[j].defined())
      throw KappaUndefined(j, kd.kappa[j].candidates, false);
    bool below_t = L.leq(j, t);
    bool above_t = L.leq(t, kd.kappa[j].image);
    if (below_t == above_t) return {false, j};
  }
  return {true, -1};
}

LmCoverCheck is_left_modular_cover(const FiniteLattice& L, Elem t) {
  for (auto [y, z] : L.covers()) {
    bool join_eq = L.join(t, y) == L.join(t, z);
    bool meet_eq = L.meet(t, y) == L.meet(t, z);
    if (join_eq == meet_eq) return {false, CoverPair{y, z}};
  }
  return {true, std::nullopt};
}

LmReport left_modular_set(const FiniteLattice& L) {
  int n = L.size();
  LmReport r;
  Bits lm(n);
  for (Elem t = 0; t < n; ++t)
    if (is_left_modular_def(L, t).ok) {
      lm.set(t);
      r.lm_set.push_back(t);
    }

  // Bottom-to-top cover path inside lm_set.  can_reach[x]: top reachable
  // from x through covers staying in lm_set.
  Bits can_reach(n);
  if (lm.test(L.top())) {
    can_reach.set(L.top());
    const auto& topo = L.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      Elem x = *it;
      if (!lm.test(x) || can_reach.test(x)) continue;
      for (Elem y : L.upper_covers(x))
        if (can_reach.test(y)) {
          can_reach.set(x);
          break;
        }
    }
  }
  if (can_reach.test(L.bottom())) {
    r.is_lm_lattice = true;
    Chain c;
    Elem x = L.bottom();
    c.elements.push_back(x);
    while (x != L.top()) {
      for (Elem y : L.upper_covers(x))
        if (can_reach.test(y)) {
          x = y;
          break;
        }
      c.elements.push_back(x);
    }
    r.lm_chain = std::move(c);
  }

  r.closed_under_meet_join = true;
  for (std::size_t i = 0; i < r.lm_set.size() && r.closed_under_meet_join; ++i)
    for (std::size_t k = i; k < r.lm_set.size(); ++k) {
      if (!lm.test(L.meet(r.lm_set[i], r.lm_set[k])) ||
          !lm.test(L.join(r.lm_set[i], r.lm_set[k]))) {
        r.closed_under_meet_join = false;
        break;
      }
    }

  if (r.closed_under_meet_join) {
    r.distributive = true;
    for (Elem x : r.lm_set) {
      for (Elem y : r.lm_set) {
        for (Elem z : r.lm_set)
          if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
            r.distributive = false;
            break;
          }
        if (!r.distributive) break;
      }
      if (!r.distributive) break;
    }
  }
  return r;
}

Elem cover_label(const FiniteLattice& L, Elem x, Elem y) {
  return cover_label(L, compute_kappa(L), x, y);
}

Elem cover_label(const FiniteLattice& L, const KappaData& kd, Elem x, Elem y) {
  if (!L.is_cover(x, y)) throw NotACover(x, y);
  Elem found = -1;
  for (Elem j : kd.ji) {
    if (!kd.kappa[j].defined())
      throw KappaUndefined(j, kd.kappa[j].candidates, false);
    if (L.join(x, j) == y && L.meet(y, kd.kappa[j].image) == x) {
      if (found >= 0)
        throw LatticeError("cover label is not unique for " +
                           std::to_string(x) + " -| " + std::to_string(y));
      found = j;
    }
  }
  if (found < 0)
    throw LatticeError("cover " + std::to_string(x) + " -| " +
                       std::to_string(y) + " has no label");
  return found;
}

std::vector<Elem> cover_labels(const FiniteLattice& L, const KappaData& kd) {
  std::vector<Elem> labels;
  labels.reserve(L.covers().size());
  for (auto [x, y] : L.covers()) labels.push_back(cover_label(L, kd, x, y));
  return labels;
}

ExtremalityReport is_extremal_classical(const FiniteLattice& L) {
  ExtremalityReport r;
  r.length = lattice_length(L);
  r.ji_count = static_cast<int>(join_irreducibles(L).size());
  r.mi_count = static_cast<int>(meet_irreducibles(L).size());
  r.extremal = r.length == r.ji_count && r.length == r.mi_count;
  return r;
}

namespace {

// Per-element upper-cover labels, as positions into kd.ji.
struct LabelledCovers {
  std::vector<std::vector<Elem>> up;        // = upper_covers
  std::vector<std::vector<int>> up_label;   // ji positions
};

LabelledCovers labelled_covers(const FiniteLattice& L, const KappaData& kd) {
  std::vector<int> ji_pos(L.size(), -1);
  for (std::size_t i = 0; i < kd.ji.size(); ++i) ji_pos[kd.ji[i]] = static_cast<int>(i);
  LabelledCovers lc;
  lc.up.resize(L.size());
  lc.up_label.resize(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    lc.up[x] = L.upper_covers(x);
    for (Elem y : lc.up[x])
      lc.up_label[x].push_back(ji_pos[cover_label(L, kd, x, y)]);
  }
  return lc;
}

// DFS over cover paths with pairwise-distinct labels; an extremal chain is
// one using every label.  Visits chains in lexicographic order.
struct LabelDfs {
  const FiniteLattice& L;
  const LabelledCovers& lc;
  std::size_t ji_total;
  std::uint64_t budget_nodes;
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;
  std::uint64_t max_found;
  Chain path;
  Bits used;
  std::optional<Chain> first;
  bool count_all;

  LabelDfs(const FiniteLattice& L_, const LabelledCovers& lc_, std::size_t jt,
           std::uint64_t budget_nodes_, std::uint64_t max_found_, bool count_all_)
      : L(L_), lc(lc_), ji_total(jt), budget_nodes(budget_nodes_),
        max_found(max_found_), used(jt), count_all(count_all_) {}

  bool run(Elem x) {
    if (++nodes > budget_nodes)
      throw BudgetExceeded("extremal chain search exceeded " +
                           std::to_string(budget_nodes) + " nodes");
    path.elements.push_back(x);
    if (x == L.top()) {
      bool complete = used.count() == ji_total;
      if (complete) {
        if (found == max_found)
          throw BudgetExceeded("extremal chain enumeration exceeded " +
                               std::to_string(max_found));
        ++found;
        if (!first) first = path;
      }
      path.elements.pop_back();
      return complete && !count_all;
    }
    for (std::size_t i = 0; i < lc.up[x].size(); ++i) {
      int lab = lc.up_label[x][i];
      if (used.test(lab)) continue;
      used.set(lab);
      bool done = run(lc.up[x][i]);
      used.reset(lab);
      if (done) {
        path.elements.pop_back();
        return true;
      }
    }
    path.elements.pop_back();
    return false;
  }
};

// Checks one maximal chain for extremality under the bijection it forces:
// each cover of the chain must have a unique new join-irreducible below its
// upper end and a unique lost meet-irreducible above its lower end, pairing
// them; and whenever j ≰ x on the chain, x ≤ λ(j) must hold.
bool chain_forces_extremal_bijection(const FiniteLattice& L,
                                     const std::vector<Elem>& ji,
                                     const std::vector<Elem>& mi,
                                     const Chain& chain) {
  if (ji.size() != mi.size()) return false;
  std::vector<Elem> lambda(L.size(), -1);
  Bits m_used(L.size());
  for (std::size_t c = 0; c + 1 < chain.elements.size(); ++c) {
    Elem x = chain.elements[c], y = chain.elements[c + 1];
    Elem jc = -1;
    for (Elem j : ji)
      if (L.leq(j, y) && !L.leq(j, x)) {
        if (jc >= 0) return false;
        jc = j;
      }
    Elem mc = -1;
    for (Elem m : mi)
      if (L.leq(x, m) && !L.leq(y, m)) {
        if (mc >= 0) return false;
        mc = m;
      }
    if (jc < 0 || mc < 0) return false;
    if (lambda[jc] >= 0 || m_used.test(mc)) return false;
    lambda[jc] = mc;
    m_used.set(mc);
  }
  // every j transitions at exactly one cover, so λ must now be total
  for (Elem j : ji)
    if (lambda[j] < 0) return false;
  // j ≰ x ⇒ x ≤ λ(j), for every chain element x
  for (Elem j : ji) {
    Elem highest = -1;  // greatest chain element not above j
    for (auto it = chain.elements.rbegin(); it != chain.elements.rend(); ++it)
      if (!L.leq(j, *it)) {
        highest = *it;
        break;
      }
    if (highest >= 0 && !L.leq(highest, lambda[j])) return false;
  }
  return true;
}

}  // namespace

ChainLabelCheck is_extremal_chain(const FiniteLattice& L, const Chain& chain) {
  if (!is_maximal_chain(L, chain))
    throw NotMaximalChain("chain is not a maximal bottom-to-top cover path");
  KappaData kd = compute_kappa(L);
  Bits seen(L.size());
  bool repeat = false;
  for (std::size_t i = 0; i + 1 < chain.elements.size(); ++i) {
    Elem j = cover_label(L, kd, chain.elements[i], chain.elements[i + 1]);
    if (seen.test(j)) repeat = true;
    seen.set(j);
  }
  for (Elem j : kd.ji)
    if (!seen.test(j)) return {false, j};
  return {!repeat, -1};
}

ExtremalityReport is_extremal_generalized(const FiniteLattice& L,
                                          const Budget& budget) {
  ExtremalityReport r = is_extremal_classical(L);
  r.extremal = false;

  if (is_semidistributive(L).ok) {
    r.lambda_used = "kappa";
    KappaData kd = compute_kappa(L);
    LabelledCovers lc = labelled_covers(L, kd);
    LabelDfs dfs(L, lc, kd.ji.size(), budget.max_candidates, budget.max_chains,
                 false);
    dfs.run(L.bottom());
    if (dfs.first) {
      r.extremal = true;
      r.chain = dfs.first;
    }
    return r;
  }

  r.lambda_used = "induced-bijection";
  std::vector<Elem> ji = join_irreducibles(L);
  std::vector<Elem> mi = meet_irreducibles(L);
  for_each_maximal_chain(L, budget.max_chains, [&](const Chain& c) {
    if (chain_forces_extremal_bijection(L, ji, mi, c)) {
      r.extremal = true;
      r.chain = c;
      return false;
    }
    return true;
  });
  return r;
}

std::optional<Chain> find_extremal_chain(const FiniteLattice& L,
                                         const Budget& budget) {
  return is_extremal_generalized(L, budget).chain;
}

std::uint64_t count_extremal_chains(const FiniteLattice& L,
                                    const KappaData& kd,
                                    std::uint64_t max_chains) {
  LabelledCovers lc = labelled_covers(L, kd);
  LabelDfs dfs(L, lc, kd.ji.size(), ~0ull, max_chains, true);
  dfs.run(L.bottom());
  return dfs.found;
}

bool is_trim(const FiniteLattice& L) {
  return is_extremal_classical(L).extremal && left_modular_set(L).is_lm_lattice;
}

}  // namespace kappalat
