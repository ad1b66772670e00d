#ifndef KAPPALAT_QUIVER_HPP_
#define KAPPALAT_QUIVER_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "kappalat/irreducibles.hpp"
#include "kappalat/lattice.hpp"

namespace kappalat {

/*
  Labelling quiver Q_L: vertices are JI(L), with an arrow i → j precisely
  when i ≠ j and i ≰ κ(j).  May contain cycles when L is not extremal.
*/
struct LabellingQuiver {
  std::vector<Elem> vertices;                // JI(L), ascending
  std::vector<std::pair<int, int>> arrows;   // vertex-index pairs, sorted
  bool acyclic = false;
  std::vector<Bits> out;  // out[i] = direct successors of vertex i

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int index_of(Elem v) const;  // -1 when v is not a vertex
};

// Throws KappaUndefined when κ is not total.
LabellingQuiver build_labelling_quiver(const FiniteLattice& L);
LabellingQuiver build_labelling_quiver(const FiniteLattice& L,
                                       const KappaData& kd);

struct SuccClosedSet {
  std::vector<Elem> members;  // vertex element ids, ascending

  bool operator==(const SuccClosedSet&) const = default;
};

// All successor-closed vertex sets, sorted by (size, lexicographic).
// Acyclic quivers are enumerated by backtracking over a reverse-topological
// vertex order; cyclic ones are contracted to their condensation first.
// Throws BudgetExceeded past max_sets results or max_candidates nodes.
std::vector<SuccClosedSet> successor_closed_sets(const LabellingQuiver& q,
                                                 const Budget& budget = {});

std::uint64_t count_successor_closed_sets(const LabellingQuiver& q,
                                          const Budget& budget = {});

bool is_successor_closed(const LabellingQuiver& q, const SuccClosedSet& s);

// φ(t) = {j ∈ JI : j ≤ t}, defined for left modular t; ψ(S) = ∨S.
// Mutually inverse bijections LM(L) <-> succ(Q_L).
// Throws NotLeftModular / NotSuccessorClosed, KappaUndefined.
SuccClosedSet phi(const FiniteLattice& L, Elem t);
SuccClosedSet phi(const FiniteLattice& L, const LabellingQuiver& q, Elem t);
Elem psi(const FiniteLattice& L, const SuccClosedSet& s);
Elem psi(const FiniteLattice& L, const LabellingQuiver& q,
         const SuccClosedSet& s);

/*
  The poset (Q_L, ⪯) of an acyclic labelling quiver: x ⪯ y iff there is an
  oriented path from y to x.
*/
struct QuiverPoset {
  std::vector<Elem> vertices;
  std::vector<Bits> below;  // below[i] = {k : v_k ⪯ v_i} (reachable from v_i)

  bool leq(int xi, int yi) const { return below[yi].test(xi); }
};

// Throws NotAcyclic.
QuiverPoset quiver_poset(const LabellingQuiver& q);

// A linear extension, listed from ⪯-least to ⪯-greatest vertex.
using LinearOrder = std::vector<Elem>;

// All linear extensions of ⪯, in lexicographic vertex-index order.
// Throws NotAcyclic, BudgetExceeded.
std::vector<LinearOrder> linear_extensions(const LabellingQuiver& q,
                                           const Budget& budget = {});

// Streaming form: stops when the callback returns false.
std::uint64_t for_each_linear_extension(
    const LabellingQuiver& q, const Budget& budget,
    const std::function<bool(const LinearOrder&)>& visit);

bool is_linear_extension(const LabellingQuiver& q, const LinearOrder& order);

// The nested downsets of a linear extension join to an extremal chain, and
// the cover labels of an extremal chain read off a linear extension; the
// two maps are mutually inverse.  Throw NotLinearExtension /
// NotExtremalChain, KappaUndefined.
Chain extremal_chain_from_linext(const FiniteLattice& L,
                                 const LinearOrder& order);
LinearOrder linext_from_extremal_chain(const FiniteLattice& L,
                                       const Chain& chain);

}  // namespace kappalat

#endif
