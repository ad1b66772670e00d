#ifndef KAPPALAT_IRREDUCIBLES_HPP_
#define KAPPALAT_IRREDUCIBLES_HPP_

#include <optional>
#include <vector>

#include "kappalat/lattice.hpp"

namespace kappalat {

// Join-irreducibles: elements with exactly one lower cover (bottom is
// excluded automatically, it has none).  Meet-irreducibles dually.  In a
// finite lattice these coincide with the completely irreducible elements.
std::vector<Elem> join_irreducibles(const FiniteLattice& L);
std::vector<Elem> meet_irreducibles(const FiniteLattice& L);

struct KappaEntry {
  Elem image = -1;               // κ(j), resp. κ⁻¹(m); -1 when undefined
  std::vector<Elem> candidates;  // incomparable extremal candidates when undefined
  bool defined() const { return image >= 0; }
};

// Per-irreducible records realizing the κ/κ⁻¹ bijection:
//   κ(j)  = max{x : x ∧ j = j_*}   for j ∈ JI with unique lower cover j_*
//   κ⁻¹(m) = min{y : y ∨ m = m^*}  for m ∈ MI with unique upper cover m^*
struct KappaData {
  std::vector<Elem> ji, mi;              // ascending element ids
  std::vector<Elem> lower_of;            // j_* per element; -1 if not JI
  std::vector<Elem> upper_of;            // m^* per element; -1 if not MI
  std::vector<KappaEntry> kappa;         // indexed by element, valid on JI
  std::vector<KappaEntry> kappa_inv;     // indexed by element, valid on MI
  bool kappa_total = false;              // κ defined on all of JI
  bool kappa_inv_total = false;
  bool bijective = false;                // mutually inverse bijections JI <-> MI

  bool is_ji(Elem x) const { return lower_of[x] >= 0; }
  bool is_mi(Elem x) const { return upper_of[x] >= 0; }
};

KappaData compute_kappa(const FiniteLattice& L);

// Single-element forms; throw KappaUndefined when the extremum is missing,
// std::invalid_argument when the element is not (join|meet)-irreducible.
Elem kappa(const FiniteLattice& L, Elem j);
Elem kappa_inv(const FiniteLattice& L, Elem m);

struct SdWitness {
  bool join_law;  // true: SD∨ failed, false: SD∧ failed
  Elem x, y, z;
};

struct SdReport {
  bool ok = false;
  std::optional<SdWitness> witness;  // lexicographically least violating triple
};

// Exhaustive triple scan of both semidistributive laws.
SdReport is_semidistributive(const FiniteLattice& L);

// Exhaustive triple scan of x∧(y∨z) = (x∧y)∨(x∧z).
bool is_distributive(const FiniteLattice& L);

// κ and κ⁻¹ total and mutually inverse.
bool is_kappa_lattice(const FiniteLattice& L);
bool is_kappa_lattice(const KappaData& kd);

struct PairWitness {
  Elem x, y;
};

struct WsReport {
  bool ok = false;
  std::optional<PairWitness> witness;  // least pair x ≰ y with no separating j
};

// Whenever x ≰ y there must be j ∈ JI with j ≤ x and y ≤ κ(j).
// Throws KappaUndefined (propagated) when L is not a κ-lattice.
WsReport is_well_separated(const FiniteLattice& L);
WsReport is_well_separated(const FiniteLattice& L, const KappaData& kd);

}  // namespace kappalat

#endif
