#ifndef KAPPALAT_MODULARITY_HPP_
#define KAPPALAT_MODULARITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kappalat/irreducibles.hpp"
#include "kappalat/lattice.hpp"

namespace kappalat {

struct LmDefCheck {
  bool ok = false;
  std::optional<PairWitness> witness;  // least y ≤ z with (y∨t)∧z ≠ y∨(t∧z)
};

// Left modularity by definition: (y∨t)∧z = y∨(t∧z) for all y ≤ z.
LmDefCheck is_left_modular_def(const FiniteLattice& L, Elem t);

struct LmKappaCheck {
  bool ok = false;
  Elem witness_j = -1;  // least j violating "exactly one of j ≤ t, t ≤ κ(j)"
};

// κ-criterion: for every j ∈ JI exactly one of j ≤ t, t ≤ κ(j) holds.
// Throws KappaUndefined when κ is not total.
LmKappaCheck is_left_modular_kappa(const FiniteLattice& L, Elem t);
LmKappaCheck is_left_modular_kappa(const FiniteLattice& L, const KappaData& kd,
                                   Elem t);

struct LmCoverCheck {
  bool ok = false;
  std::optional<CoverPair> witness;  // least cover violating "exactly one"
};

// Cover criterion: for every cover y ⋖ z exactly one of t∨y = t∨z and
// t∧y = t∧z holds.
LmCoverCheck is_left_modular_cover(const FiniteLattice& L, Elem t);

struct LmReport {
  std::vector<Elem> lm_set;  // ascending
  bool is_lm_lattice = false;
  std::optional<Chain> lm_chain;  // maximal chain inside lm_set, when one exists
  bool closed_under_meet_join = false;
  bool distributive = false;  // of the induced sublattice; false when not closed
};

// lm_set by the definition check on each element; is_lm_lattice by graph
// search for a bottom-to-top cover path inside lm_set (an inclusion-maximal
// chain of left modular elements that is maximal in L is exactly such a
// path, so chain explosion is avoided).
LmReport left_modular_set(const FiniteLattice& L);

// The unique j ∈ JI with x∨j = y and y∧κ(j) = x, for a cover x ⋖ y of a
// semidistributive lattice.  Throws NotACover, KappaUndefined.
Elem cover_label(const FiniteLattice& L, Elem x, Elem y);
Elem cover_label(const FiniteLattice& L, const KappaData& kd, Elem x, Elem y);

// Labels for all covers, aligned with L.covers().
std::vector<Elem> cover_labels(const FiniteLattice& L, const KappaData& kd);

struct ExtremalityReport {
  int length = 0;
  int ji_count = 0;
  int mi_count = 0;
  bool extremal = false;
  std::optional<Chain> chain;  // an extremal chain, when found
  std::string lambda_used;     // "kappa" or "induced-bijection"
};

// Classical extremality: length = |JI| = |MI|.
ExtremalityReport is_extremal_classical(const FiniteLattice& L);

struct ChainLabelCheck {
  bool ok = false;
  Elem missing_j = -1;  // least j ∈ JI labelling no cover of the chain
};

// A maximal chain is extremal when every j ∈ JI labels one of its covers
// (equivalently its cover-label multiset is JI with no repeats).
// Throws NotMaximalChain, KappaUndefined.
ChainLabelCheck is_extremal_chain(const FiniteLattice& L, const Chain& chain);

// Generalized extremality: some maximal chain is extremal for a bijection
// λ: JI → MI.  On semidistributive lattices λ = κ and the search walks
// cover labels; otherwise each candidate chain forces λ completely (each
// j ∈ JI is the unique new irreducible at exactly one cover), so the
// definition is checked chain by chain.  Throws BudgetExceeded.
ExtremalityReport is_extremal_generalized(const FiniteLattice& L,
                                          const Budget& budget = {});

// Lexicographically least extremal chain, or absent.
std::optional<Chain> find_extremal_chain(const FiniteLattice& L,
                                         const Budget& budget = {});

// Counts extremal chains on a semidistributive lattice without storing them.
std::uint64_t count_extremal_chains(const FiniteLattice& L,
                                    const KappaData& kd,
                                    std::uint64_t max_chains);

// Extremal and left modular.
bool is_trim(const FiniteLattice& L);

}  // namespace kappalat

#endif
