// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Corpus: boolean k ≤ 6, chains m ≤ 12, Tamari k ≤ 5, weak order n ≤ 4, and
// line-quiver Nakayama torsion lattices (exhaustive over n ≤ 5 plus n = 6
// models within the 20-indecomposable cap).

#include <algorithm>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "kappalat/analysis.hpp"
#include "oracles.hpp"

using namespace kappalat;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (ok) {
    std::printf("PASS criterion-%d %s\n", number, title.c_str());
  } else {
    std::printf("FAIL criterion-%d %s%s%s\n", number, title.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    ++g_failures;
  }
}

FiniteLattice figure1_reference() {
  return build_lattice(5, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {1, 4}},
                       {"bot", "x", "y", "z", "top"});
}

// Unique isomorphism search between two small lattices (backtracking on the
// cover structure).
std::vector<Elem> find_isomorphism(const FiniteLattice& a,
                                   const FiniteLattice& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return {};
  int n = a.size();
  std::vector<Elem> map(n, -1), used(n, 0);
  std::function<bool(Elem)> place = [&](Elem x) {
    if (x == n) {
      for (auto [p, q] : a.covers())
        if (!b.is_cover(map[p], map[q])) return false;
      return true;
    }
    for (Elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (a.lower_covers(x).size() != b.lower_covers(y).size()) continue;
      if (a.upper_covers(x).size() != b.upper_covers(y).size()) continue;
      bool consistent = true;
      for (Elem p = 0; p < x && consistent; ++p) {
        if (a.leq(p, x) != b.leq(map[p], y)) consistent = false;
        if (a.leq(x, p) != b.leq(y, map[p])) consistent = false;
      }
      if (!consistent) continue;
      map[x] = y;
      used[y] = 1;
      if (place(x + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!place(0)) return {};
  return map;
}

}  // namespace

int main() {
  auto models = corpus::nakayama_models();
  auto sd = corpus::sd_corpus();

  criterion(1, "figure-1 reproduction from nakayama_tors --n 2",
            [&](std::string& detail) {
    TorsLattice t = torsion_classes(nakayama_algebra(2));
    FiniteLattice ref = figure1_reference();
    auto iso = find_isomorphism(t.lattice, ref);
    if (iso.empty()) {
      detail = "no isomorphism onto the reference lattice";
      return false;
    }
    AnalysisReport r = analyze(t.lattice);
    if (r.n != 5 || r.length != 3 || r.ji.size() != 3 || r.mi.size() != 3) {
      detail = "counts differ";
      return false;
    }
    if (!r.extremal_classical || !r.extremal_generalized ||
        !r.lm.is_lm_lattice || !r.lm.lm_chain) {
      detail = "verdicts differ";
      return false;
    }
    // the LM chain must map onto [bot, y, z, top] = [0, 2, 3, 4]
    std::vector<Elem> mapped;
    for (Elem x : r.lm.lm_chain->elements) mapped.push_back(iso[x]);
    if (mapped != std::vector<Elem>{0, 2, 3, 4}) {
      detail = "LM chain does not map onto [bot, y, z, top]";
      return false;
    }
    return true;
  });

  criterion(2, "three-criterion LM agreement on every SD instance",
            [&](std::string& detail) {
    for (const auto& [name, L] : sd) {
      KappaData kd = compute_kappa(L);
      for (Elem t = 0; t < L.size(); ++t) {
        bool d = is_left_modular_def(L, t).ok;
        bool k = is_left_modular_kappa(L, kd, t).ok;
        bool c = is_left_modular_cover(L, t).ok;
        if (d != k || d != c) {
          detail = name + " t=" + std::to_string(t);
          return false;
        }
      }
    }
    return true;
  });

  criterion(3, "LM iff extremal (SD); generalized iff classical (all)",
            [&](std::string& detail) {
    for (const auto& [name, L] : sd) {
      bool lm = left_modular_set(L).is_lm_lattice;
      bool cls = is_extremal_classical(L).extremal;
      bool gen = is_extremal_generalized(L).extremal;
      if (lm != cls || gen != cls) {
        detail = name;
        return false;
      }
    }
    FiniteLattice m3 = corpus::m3();
    if (is_extremal_generalized(m3).extremal !=
        is_extremal_classical(m3).extremal) {
      detail = "M3 control";
      return false;
    }
    return true;
  });

  criterion(4, "phi/psi bijection LM(L) <-> succ(Q_L) on the SD corpus",
            [&](std::string& detail) {
    for (const auto& [name, L] : sd) {
      LabellingQuiver q = build_labelling_quiver(L);
      LmReport lm = left_modular_set(L);
      auto sets = successor_closed_sets(q);
      if (sets.size() != lm.lm_set.size()) {
        detail = name + " counts differ";
        return false;
      }
      for (Elem t : lm.lm_set)
        if (psi(L, q, phi(L, q, t)) != t) {
          detail = name + " psi(phi) != id";
          return false;
        }
      for (const auto& s : sets)
        if (!(phi(L, q, psi(L, q, s)) == s)) {
          detail = name + " phi(psi) != id";
          return false;
        }
    }
    return true;
  });

  criterion(5, "linear extensions <-> extremal chains, mutually inverse",
            [&](std::string& detail) {
    Budget budget;
    budget.max_chains = 10'000'000;
    budget.max_sets = 10'000'000;
    for (const auto& [name, L] : sd) {
      if (!is_extremal_classical(L).extremal) continue;
      KappaData kd = compute_kappa(L);
      LabellingQuiver q = build_labelling_quiver(L, kd);
      bool ok = true;
      std::uint64_t exts = for_each_linear_extension(
          q, budget, [&](const LinearOrder& o) {
            Chain c = extremal_chain_from_linext(L, o);
            if (!is_extremal_chain(L, c).ok ||
                linext_from_extremal_chain(L, c) != o) {
              ok = false;
              return false;
            }
            return true;
          });
      if (!ok) {
        detail = name + " round trip failed";
        return false;
      }
      std::uint64_t chains = count_extremal_chains(L, kd, budget.max_chains);
      if (exts != chains) {
        detail = name + " extensions=" + std::to_string(exts) +
                 " chains=" + std::to_string(chains);
        return false;
      }
    }
    return true;
  });

  criterion(6, "LM(L) closed under meets/joins and distributive (SD corpus)",
            [&](std::string& detail) {
    for (const auto& [name, L] : sd) {
      LmReport lm = left_modular_set(L);
      if (!lm.closed_under_meet_join || !lm.distributive) {
        detail = name;
        return false;
      }
      // arbitrary-subset closure: windows over the lm_set, plus endpoints
      for (std::size_t i = 0; i < lm.lm_set.size(); ++i)
        for (std::size_t w = 2; w <= 5 && i + w <= lm.lm_set.size(); ++w) {
          std::span<const Elem> s(lm.lm_set.data() + i, w);
          Elem m = L.meet_set(s), j = L.join_set(s);
          if (!std::binary_search(lm.lm_set.begin(), lm.lm_set.end(), m) ||
              !std::binary_search(lm.lm_set.begin(), lm.lm_set.end(), j)) {
            detail = name + " subset closure";
            return false;
          }
        }
    }
    return true;
  });

  criterion(7, "weak_order(3) and weak_order(4) have only trivial LM elements",
            [&](std::string& detail) {
    for (int n : {3, 4}) {
      FiniteLattice w = weak_order(n);
      LmReport lm = left_modular_set(w);
      std::vector<Elem> expected{w.bottom(), w.top()};
      if (lm.lm_set != expected || lm.is_lm_lattice) {
        detail = "n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  criterion(8, "torsion lattice counts and lambda5 structure",
            [&](std::string& detail) {
    if (torsion_classes(nakayama_algebra(2)).lattice.size() != 5) {
      detail = "kA2 count";
      return false;
    }
    AlgebraModel ka3 = nakayama_algebra(3);
    TorsLattice t3 = torsion_classes(ka3);
    if (t3.lattice.size() != 14 || oracle::catalan(4) != 14 ||
        oracle::torsion_closures(ka3).size() != 14) {
      detail = "kA3 count";
      return false;
    }
    if (ka3.module_count() != 6) {  // n(n+1)/2 bricks
      detail = "kA3 brick count";
      return false;
    }
    TorsLattice l5 = torsion_classes(nakayama_algebra(3, {{1, 3}}));
    if (l5.algebra.module_count() != 5 ||
        join_irreducibles(l5.lattice).size() != 5) {
      detail = "lambda5 brick count";
      return false;
    }
    if (lattice_length(l5.lattice) != 5 ||
        !left_modular_set(l5.lattice).is_lm_lattice) {
      detail = "lambda5 length/LM";
      return false;
    }
    return true;
  });

  criterion(9, "brick-directed iff LM iff extremal iff acyclic brick quiver",
            [&](std::string& detail) {
    bool all_directed = true;
    for (const auto& [name, model] : models) {
      TorsLattice t = torsion_classes(model);
      bool directed = is_brick_directed(model);
      bool lm = left_modular_set(t.lattice).is_lm_lattice;
      bool extremal = is_extremal_classical(t.lattice).extremal;
      bool acyclic = build_labelling_quiver(t.lattice).acyclic;
      if (directed != lm || directed != extremal || directed != acyclic) {
        detail = name;
        return false;
      }
      all_directed = all_directed && directed;
    }
    if (all_directed)
      std::printf(
          "note: every line-quiver Nakayama model is brick-directed; the "
          "family admits no non-brick-directed control\n");
    return true;
  });

  criterion(10, "Hom-vanishing along descending Hasse paths",
            [&](std::string& detail) {
    for (const auto& [name, model] : models) {
      TorsLattice t = torsion_classes(model);
      const FiniteLattice& L = t.lattice;
      const auto& covers = L.covers();
      for (std::size_t lo = 0; lo < covers.size(); ++lo)
        for (std::size_t hi = 0; hi < covers.size(); ++hi) {
          if (!L.leq(covers[lo].second, covers[hi].first)) continue;
          if (model.hom_nonzero(t.cover_bricklabel[lo],
                                t.cover_bricklabel[hi])) {
            detail = name;
            return false;
          }
        }
    }
    return true;
  });

  if (g_failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
