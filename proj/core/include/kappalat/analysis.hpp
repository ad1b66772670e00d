#ifndef KAPPALAT_ANALYSIS_HPP_
#define KAPPALAT_ANALYSIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kappalat/irreducibles.hpp"
#include "kappalat/lattice.hpp"
#include "kappalat/lattice_io.hpp"
#include "kappalat/modularity.hpp"
#include "kappalat/quiver.hpp"

namespace kappalat {

/*
  Full structural report over one lattice: flags, counts, verdicts and
  re-verifiable certificates, with witnesses for every false verdict.
  Deterministic: identical input yields identical text and JSON bytes.
*/
struct AnalysisReport {
  int n = 0;
  int length = 0;

  bool semidistributive = false;
  std::optional<SdWitness> sd_witness;
  bool distributive = false;
  bool kappa_lattice = false;
  std::optional<KappaEntry> kappa_witness;  // undefined entry, when any
  Elem kappa_witness_j = -1;
  bool well_separated = false;
  std::optional<PairWitness> ws_witness;

  std::vector<Elem> ji, mi;
  LmReport lm;
  std::optional<std::uint64_t> succ_count;  // only when κ is total

  bool extremal_classical = false;
  bool extremal_generalized = false;
  std::string lambda_used;
  std::optional<Chain> extremal_chain;
  bool trim = false;

  std::vector<std::pair<Elem, Elem>> kappa_table;       // j -> κ(j), κ total only
  std::vector<std::pair<Elem, Elem>> quiver_arrows;     // element ids
  std::optional<std::vector<Elem>> spine;               // = lm_set, trim only
  std::optional<PairWitness> lm_lattice_witness;        // least non-LM element's pair
};

AnalysisReport analyze(const FiniteLattice& L, const Budget& budget = {});

std::string render_text(const AnalysisReport& r, const FiniteLattice& L);
std::string render_json(const AnalysisReport& r, const FiniteLattice& L);

/*
  Cross-check battery: replays the structural equivalences as assertions
  on one lattice, with a pass/fail/skip line per check.
*/
struct CheckResult {
  std::string name;
  enum class Status { pass, fail, skipped } status;
  std::string detail;  // witness or skip reason
};

std::vector<CheckResult> run_cross_checks(const FiniteLattice& L,
                                          const Budget& budget = {});

// DOT exports.  Hasse arrows follow the cover convention x → z for x ⋖ z;
// edges carry cover labels when the lattice is semidistributive.
std::string dot_hasse(const FiniteLattice& L);
std::string dot_labelling(const FiniteLattice& L);  // throws KappaUndefined
std::string dot_brick(const AlgebraModel& algebra);

}  // namespace kappalat

#endif
