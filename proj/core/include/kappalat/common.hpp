#ifndef KAPPALAT_COMMON_HPP_
#define KAPPALAT_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace kappalat {

// Lattice elements are dense 0-based indices; names are cosmetic.
using Elem = int;
using CoverPair = std::pair<Elem, Elem>;
using Bits = boost::dynamic_bitset<std::uint64_t>;

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycleDetected : LatticeError {
  using LatticeError::LatticeError;
};

struct CoverNotReduced : LatticeError {
  Elem a, b;
  CoverNotReduced(Elem a_, Elem b_)
      : LatticeError("cover " + std::to_string(a_) + " " + std::to_string(b_) +
                     " is transitively implied"),
        a(a_), b(b_) {}
};

// A pair without a unique meet or join, reported with the offending pair.
struct NotALattice : LatticeError {
  char op;  // 'm' or 'j'
  Elem a, b;
  NotALattice(char op_, Elem a_, Elem b_, const std::string& detail)
      : LatticeError(std::string(op_ == 'm' ? "meet" : "join") + "(" +
                     std::to_string(a_) + "," + std::to_string(b_) +
                     ") is not defined: " + detail),
        op(op_), a(a_), b(b_) {}
};

struct NotComparable : LatticeError {
  NotComparable(Elem x, Elem y)
      : LatticeError("elements " + std::to_string(x) + " and " +
                     std::to_string(y) + " are not comparable") {}
};

struct ParseError : LatticeError {
  int line;
  ParseError(int line_, const std::string& what_)
      : LatticeError("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

struct BudgetExceeded : LatticeError {
  using LatticeError::LatticeError;
};

// max{x : x∧j = j_*} has no maximum; the incomparable maximal candidates are
// kept as the witness.  Signals that the lattice is not a kappa-lattice.
struct KappaUndefined : LatticeError {
  Elem j;
  std::vector<Elem> candidates;
  bool inverse;
  KappaUndefined(Elem j_, std::vector<Elem> cands, bool inverse_)
      : LatticeError(std::string(inverse_ ? "kappa^-1(" : "kappa(") +
                     std::to_string(j_) + ") undefined: no unique extremum"),
        j(j_), candidates(std::move(cands)), inverse(inverse_) {}
};

struct NotACover : LatticeError {
  NotACover(Elem x, Elem y)
      : LatticeError(std::to_string(x) + " -| " + std::to_string(y) +
                     " is not a cover relation") {}
};

struct NotMaximalChain : LatticeError {
  using LatticeError::LatticeError;
};

struct NotLeftModular : LatticeError {
  Elem t;
  explicit NotLeftModular(Elem t_)
      : LatticeError("element " + std::to_string(t_) + " is not left modular"),
        t(t_) {}
};

struct NotSuccessorClosed : LatticeError {
  using LatticeError::LatticeError;
};

struct NotAcyclic : LatticeError {
  using LatticeError::LatticeError;
};

struct NotLinearExtension : LatticeError {
  using LatticeError::LatticeError;
};

struct NotExtremalChain : LatticeError {
  using LatticeError::LatticeError;
};

struct InvalidInterval : LatticeError {
  using LatticeError::LatticeError;
};

// Enumeration caps.  Deterministic refusal beats hangs: every enumerator
// throws BudgetExceeded past its cap.
struct Budget {
  std::uint64_t max_chains = 1'000'000;      // maximal-chain enumeration
  std::uint64_t max_sets = 1'000'000;        // succ-closed sets / linear extensions
  std::uint64_t max_candidates = 1ull << 24; // backtracking nodes
  int max_tors_indecomposables = 20;         // 2^|ind| torsion scan cap

  // KAPPALAT_BUDGET=<count> overrides max_chains and max_sets.
  static Budget from_env();
};

}  // namespace kappalat

#endif
