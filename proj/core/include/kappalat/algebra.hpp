#ifndef KAPPALAT_ALGEBRA_HPP_
#define KAPPALAT_ALGEBRA_HPP_

#include <string>
#include <vector>

#include "kappalat/lattice.hpp"

namespace kappalat {

// A serial interval module M[a,b] over the line quiver 1 → 2 → ⋯ → n,
// with top S_a and socle S_b.
struct ModInterval {
  int a = 0, b = 0;

  bool operator==(const ModInterval&) const = default;
  auto operator<=>(const ModInterval&) const = default;
  bool contains(const ModInterval& o) const { return a <= o.a && o.b <= b; }
};

/*
  Combinatorial model of a line-quiver Nakayama algebra kA_n/I, I monomial.
  Forbidden intervals are the killed paths, closed upward under containment;
  the allowed intervals are the indecomposables, and every indecomposable is
  a brick.  Hom(M[a,b], M[c,d]) ≠ 0 iff c ≤ a ≤ d ≤ b (image M[a,d]); the
  nonsplit extensions stack M[a,b] on M[b+1,d] into M[a,d] when allowed.
*/
struct AlgebraModel {
  int n_vertices = 0;
  std::vector<ModInterval> forbidden_min;  // minimal forbidden intervals
  std::vector<ModInterval> modules;        // allowed intervals, (a,b)-ascending

  int module_count() const { return static_cast<int>(modules.size()); }
  bool allowed(int a, int b) const;
  int index_of(int a, int b) const;  // -1 when not allowed
  bool hom_nonzero(int from, int to) const;
  std::string module_name(int idx) const;  // "M[a,b]"
};

// Throws InvalidInterval for out-of-range or length-1 forbidden intervals.
AlgebraModel nakayama_algebra(int n,
                              std::vector<ModInterval> forbidden = {});

/*
  The lattice of torsion classes of an AlgebraModel.  Elements carry their
  brick-sets (closed subsets of indecomposables); covers carry the labelling
  brick, the unique brick of the larger class Hom-orthogonal to the smaller.
*/
struct TorsLattice {
  FiniteLattice lattice;
  AlgebraModel algebra;
  std::vector<Bits> element_bricks;    // per element, over module indices
  std::vector<int> cover_bricklabel;   // per cover, aligned with covers()
};

// Enumerates all subsets closed under indecomposable quotients and the
// extension rule, ordered by inclusion (element ids sorted by set size then
// bitmask).  Throws BudgetExceeded when |ind| exceeds the scan cap.
TorsLattice torsion_classes(const AlgebraModel& algebra,
                            const Budget& budget = {});

// Brick quiver Q^b(A): vertices the indecomposables, arrow X → Y for
// distinct X, Y with Hom(X,Y) ≠ 0.
struct BrickQuiver {
  std::vector<std::pair<int, int>> arrows;  // module-index pairs, sorted
  int vertex_count = 0;
  bool acyclic = false;
};

BrickQuiver brick_quiver(const AlgebraModel& algebra);
bool is_brick_directed(const AlgebraModel& algebra);

// Benchmark lattice families.
FiniteLattice boolean_lattice(int k);   // 2^k ≤ 2^16
FiniteLattice chain_lattice(int m);     // length m, m+1 elements
FiniteLattice tamari(int k);            // Catalan(k) ≤ 2^16
FiniteLattice weak_order(int n);        // 2 ≤ n ≤ 6, right weak order on S_n

// Downsets of the poset generated by the given strict relations on
// 0..n_poset-1, ordered by inclusion.  Throws CycleDetected, BudgetExceeded.
FiniteLattice downset_lattice(int n_poset,
                              const std::vector<std::pair<int, int>>& less);

}  // namespace kappalat

#endif
