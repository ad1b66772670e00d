#ifndef KAPPALAT_LATTICE_HPP_
#define KAPPALAT_LATTICE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kappalat/common.hpp"

namespace kappalat {

/*
  A finite lattice over elements 0..n-1.  The order relation is kept as
  dense bitset rows, and meet/join tables are precomputed eagerly at build
  time: every downstream check is table-lookup bound.  Immutable after
  construction; safe to share read-only across concurrent tasks.
*/
class FiniteLattice {
 public:
  int size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return below_[b].test(a); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool is_cover(Elem a, Elem b) const;  // a ⋖ b

  Elem meet(Elem a, Elem b) const { return meet_table_[n_ * a + b]; }
  Elem join(Elem a, Elem b) const { return join_table_[n_ * a + b]; }
  Elem meet_set(std::span<const Elem> s) const;  // meet ∅ = top
  Elem join_set(std::span<const Elem> s) const;  // join ∅ = bottom

  // {y : y ≤ x} and {y : x ≤ y} as bitset rows.
  const Bits& below(Elem x) const { return below_[x]; }
  const Bits& above(Elem x) const { return above_[x]; }

  const std::vector<CoverPair>& covers() const { return covers_; }
  const std::vector<Elem>& upper_covers(Elem x) const { return up_adj_[x]; }
  const std::vector<Elem>& lower_covers(Elem x) const { return down_adj_[x]; }

  // Elements in some fixed linear extension of the order (used by the
  // table builder and by deterministic min/max scans).
  const std::vector<Elem>& topo_order() const { return topo_; }

  const std::vector<std::string>& names() const { return names_; }
  std::string name(Elem x) const {
    return (x < static_cast<int>(names_.size()) && !names_[x].empty())
               ? names_[x]
               : std::to_string(x);
  }

 private:
  friend FiniteLattice build_lattice(int, std::vector<CoverPair>,
                                     std::vector<std::string>);
  friend FiniteLattice dual(const FiniteLattice&);

  int n_ = 0;
  Elem bottom_ = 0, top_ = 0;
  std::vector<Bits> below_, above_;
  std::vector<CoverPair> covers_;  // sorted lexicographically
  std::vector<std::vector<Elem>> up_adj_, down_adj_;
  std::vector<Elem> meet_table_, join_table_;
  std::vector<Elem> topo_;
  std::vector<std::string> names_;
};

// Validates the cover graph (acyclic, transitively reduced) and computes
// the order closure and both tables.  Throws CycleDetected, CoverNotReduced,
// NotALattice.
FiniteLattice build_lattice(int n, std::vector<CoverPair> covers,
                            std::vector<std::string> names = {});

// A chain is a strictly increasing element sequence; a maximal chain runs
// bottom to top through covers.
struct Chain {
  std::vector<Elem> elements;

  bool operator==(const Chain&) const = default;
};

bool is_chain(const FiniteLattice& L, const Chain& c);
bool is_maximal_chain(const FiniteLattice& L, const Chain& c);

// Length of the longest chain (longest path in the cover DAG).
int lattice_length(const FiniteLattice& L);

// All bottom-to-top cover paths in lexicographic order of element indices.
// Throws BudgetExceeded past max_chains.
std::vector<Chain> maximal_chains(const FiniteLattice& L,
                                  std::uint64_t max_chains = 1'000'000);

// Visits maximal chains in lexicographic order until the callback returns
// false; returns the number visited.  Throws BudgetExceeded past the cap.
std::uint64_t for_each_maximal_chain(
    const FiniteLattice& L, std::uint64_t max_chains,
    const std::function<bool(const Chain&)>& visit);

// Induced sublattice on {z : x ≤ z ≤ y}, elements renumbered in ascending
// order of their original index.  Throws NotComparable.
FiniteLattice interval(const FiniteLattice& L, Elem x, Elem y);

// Order-reversed lattice: swaps meet/join, bottom/top, reverses covers.
FiniteLattice dual(const FiniteLattice& L);

}  // namespace kappalat

#endif
