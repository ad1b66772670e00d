#include "kappalat/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kappalat {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("KAPPALAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw LatticeError("KAPPALAT_BUDGET must be a positive integer");
    b.max_chains = v;
    b.max_sets = v;
  }
  return b;
}

AnalysisReport analyze(const FiniteLattice& L, const Budget& budget) {
  AnalysisReport r;
  r.n = L.size();
  r.length = lattice_length(L);

  SdReport sd = is_semidistributive(L);
  r.semidistributive = sd.ok;
  r.sd_witness = sd.witness;
  r.distributive = is_distributive(L);

  KappaData kd = compute_kappa(L);
  r.ji = kd.ji;
  r.mi = kd.mi;
  r.kappa_lattice = kd.bijective;
  if (!kd.kappa_total)
    for (Elem j : kd.ji)
      if (!kd.kappa[j].defined()) {
        r.kappa_witness = kd.kappa[j];
        r.kappa_witness_j = j;
        break;
      }

  if (kd.kappa_total) {
    WsReport ws = is_well_separated(L, kd);
    r.well_separated = ws.ok;
    r.ws_witness = ws.witness;
    for (Elem j : kd.ji) r.kappa_table.emplace_back(j, kd.kappa[j].image);
    LabellingQuiver q = build_labelling_quiver(L, kd);
    for (auto [i, j] : q.arrows)
      r.quiver_arrows.emplace_back(q.vertices[i], q.vertices[j]);
    r.succ_count = count_successor_closed_sets(q, budget);
  }

  r.lm = left_modular_set(L);
  if (!r.lm.is_lm_lattice)
    for (Elem t = 0; t < L.size(); ++t) {
      LmDefCheck c = is_left_modular_def(L, t);
      if (!c.ok) {
        r.lm_lattice_witness = c.witness;
        break;
      }
    }

  ExtremalityReport cls = is_extremal_classical(L);
  r.extremal_classical = cls.extremal;
  ExtremalityReport gen = is_extremal_generalized(L, budget);
  r.extremal_generalized = gen.extremal;
  r.lambda_used = gen.lambda_used;
  r.extremal_chain = gen.chain;
  r.trim = r.extremal_classical && r.lm.is_lm_lattice;
  if (r.trim) r.spine = r.lm.lm_set;
  return r;
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string elem_list(const FiniteLattice& L, const std::vector<Elem>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += L.name(v[i]);
  }
  return s.empty() ? "-" : s;
}

}  // namespace

std::string render_text(const AnalysisReport& r, const FiniteLattice& L) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "length: " << r.length << "\n";
  out << "semidistributive: " << bool_str(r.semidistributive) << "\n";
  if (r.sd_witness)
    out << "sd-witness: " << (r.sd_witness->join_law ? "join" : "meet") << " "
        << L.name(r.sd_witness->x) << " " << L.name(r.sd_witness->y) << " "
        << L.name(r.sd_witness->z) << "\n";
  out << "distributive: " << bool_str(r.distributive) << "\n";
  out << "kappa-lattice: " << bool_str(r.kappa_lattice) << "\n";
  if (r.kappa_witness) {
    out << "kappa-witness: " << L.name(r.kappa_witness_j) << " candidates";
    for (Elem c : r.kappa_witness->candidates) out << " " << L.name(c);
    out << "\n";
  }
  out << "well-separated: " << bool_str(r.well_separated) << "\n";
  if (r.ws_witness)
    out << "ws-witness: " << L.name(r.ws_witness->x) << " "
        << L.name(r.ws_witness->y) << "\n";
  out << "ji-count: " << r.ji.size() << "\n";
  out << "mi-count: " << r.mi.size() << "\n";
  out << "lm-count: " << r.lm.lm_set.size() << "\n";
  if (r.succ_count) out << "succ-count: " << *r.succ_count << "\n";
  out << "left-modular-lattice: " << bool_str(r.lm.is_lm_lattice) << "\n";
  if (r.lm_lattice_witness)
    out << "lm-witness: " << L.name(r.lm_lattice_witness->x) << " "
        << L.name(r.lm_lattice_witness->y) << "\n";
  out << "lm-closed: " << bool_str(r.lm.closed_under_meet_join) << "\n";
  out << "lm-distributive: " << bool_str(r.lm.distributive) << "\n";
  out << "extremal-classical: " << bool_str(r.extremal_classical) << "\n";
  out << "extremal-generalized: " << bool_str(r.extremal_generalized) << "\n";
  out << "lambda: " << (r.lambda_used.empty() ? "-" : r.lambda_used) << "\n";
  out << "trim: " << bool_str(r.trim) << "\n";
  out << "lm-set: " << elem_list(L, r.lm.lm_set) << "\n";
  if (r.lm.lm_chain)
    out << "lm-chain: " << elem_list(L, r.lm.lm_chain->elements) << "\n";
  if (r.extremal_chain)
    out << "extremal-chain: " << elem_list(L, r.extremal_chain->elements) << "\n";
  if (r.spine) out << "spine: " << elem_list(L, *r.spine) << "\n";
  if (r.succ_count) {
    out << "kappa:";
    for (auto [j, kj] : r.kappa_table)
      out << " " << L.name(j) << "->" << L.name(kj);
    out << "\n";
    out << "quiver-arrows:";
    for (auto [i, j] : r.quiver_arrows)
      out << " " << L.name(i) << "->" << L.name(j);
    out << "\n";
  }
  return out.str();
}

std::string render_json(const AnalysisReport& r, const FiniteLattice& L) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["report-v"] = 1;
  doc["n"] = r.n;
  doc["length"] = r.length;

  json flags;
  flags["semidistributive"] = r.semidistributive;
  flags["distributive"] = r.distributive;
  flags["kappa-lattice"] = r.kappa_lattice;
  flags["well-separated"] = r.well_separated;
  doc["flags"] = flags;

  json counts;
  counts["ji"] = r.ji.size();
  counts["mi"] = r.mi.size();
  counts["lm"] = r.lm.lm_set.size();
  if (r.succ_count)
    counts["succ"] = *r.succ_count;
  else
    counts["succ"] = nullptr;
  doc["counts"] = counts;

  json verdicts;
  verdicts["left-modular-lattice"] = r.lm.is_lm_lattice;
  verdicts["lm-closed"] = r.lm.closed_under_meet_join;
  verdicts["lm-distributive"] = r.lm.distributive;
  verdicts["extremal-classical"] = r.extremal_classical;
  verdicts["extremal-generalized"] = r.extremal_generalized;
  verdicts["trim"] = r.trim;
  doc["verdicts"] = verdicts;
  doc["lambda"] = r.lambda_used.empty() ? json(nullptr) : json(r.lambda_used);

  json certs;
  certs["lm-set"] = r.lm.lm_set;
  certs["lm-chain"] =
      r.lm.lm_chain ? json(r.lm.lm_chain->elements) : json(nullptr);
  certs["extremal-chain"] =
      r.extremal_chain ? json(r.extremal_chain->elements) : json(nullptr);
  certs["spine"] = r.spine ? json(*r.spine) : json(nullptr);
  json ktab = json::array();
  for (auto [j, kj] : r.kappa_table) ktab.push_back({j, kj});
  certs["kappa"] = r.succ_count ? ktab : json(nullptr);
  json arrows = json::array();
  for (auto [i, j] : r.quiver_arrows) arrows.push_back({i, j});
  certs["quiver-arrows"] = r.succ_count ? arrows : json(nullptr);
  doc["certificates"] = certs;

  json wit;
  wit["semidistributive"] =
      r.sd_witness ? json({{"law", r.sd_witness->join_law ? "join" : "meet"},
                           {"x", r.sd_witness->x},
                           {"y", r.sd_witness->y},
                           {"z", r.sd_witness->z}})
                   : json(nullptr);
  wit["kappa"] = r.kappa_witness
                     ? json({{"j", r.kappa_witness_j},
                             {"candidates", r.kappa_witness->candidates}})
                     : json(nullptr);
  wit["well-separated"] =
      r.ws_witness ? json({{"x", r.ws_witness->x}, {"y", r.ws_witness->y}})
                   : json(nullptr);
  wit["left-modular"] = r.lm_lattice_witness
                            ? json({{"y", r.lm_lattice_witness->x},
                                    {"z", r.lm_lattice_witness->y}})
                            : json(nullptr);
  doc["witnesses"] = wit;

  if (!L.names().empty()) {
    std::vector<std::string> names;
    for (Elem x = 0; x < L.size(); ++x) names.push_back(L.name(x));
    doc["names"] = names;
  }
  return doc.dump(2) + "\n";
}

namespace {

using Status = CheckResult::Status;

std::string pair_str(const FiniteLattice& L, Elem a, Elem b) {
  return L.name(a) + "," + L.name(b);
}

}  // namespace

std::vector<CheckResult> run_cross_checks(const FiniteLattice& L,
                                          const Budget& budget) {
  std::vector<CheckResult> out;
  auto pass = [&](const std::string& name) {
    out.push_back({name, Status::pass, ""});
  };
  auto fail = [&](const std::string& name, const std::string& detail) {
    out.push_back({name, Status::fail, detail});
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    out.push_back({name, Status::skipped, why});
  };

  SdReport sd = is_semidistributive(L);
  KappaData kd = compute_kappa(L);
  int length = lattice_length(L);

  // |JI| and |MI| bound the length from above in any finite lattice.
  if (static_cast<int>(kd.ji.size()) >= length &&
      static_cast<int>(kd.mi.size()) >= length)
    pass("ji-mi-length-bounds");
  else
    fail("ji-mi-length-bounds",
         "length=" + std::to_string(length) + " ji=" +
             std::to_string(kd.ji.size()) + " mi=" + std::to_string(kd.mi.size()));

  // semidistributive <=> kappa-lattice <=> well-separated kappa-lattice
  {
    bool ws_and_kappa = false;
    if (kd.kappa_total) {
      WsReport ws = is_well_separated(L, kd);
      ws_and_kappa = kd.bijective && ws.ok;
    }
    if (sd.ok == kd.bijective && sd.ok == ws_and_kappa)
      pass("sd-kappa-wellsep-agree");
    else
      fail("sd-kappa-wellsep-agree",
           "sd=" + bool_str(sd.ok) + " kappa=" + bool_str(kd.bijective) +
               " ws-kappa=" + bool_str(ws_and_kappa));
  }

  if (kd.bijective) {
    bool ok = true;
    std::string detail;
    for (Elem j : kd.ji) {
      Elem m = kd.kappa[j].image;
      if (L.meet(m, j) != kd.lower_of[j]) {
        ok = false;
        detail = "kappa(" + L.name(j) + ") ^ j != j_*";
        break;
      }
      if (sd.ok && L.join(m, j) != kd.upper_of[m]) {
        ok = false;
        detail = "kappa(" + L.name(j) + ") v j != kappa(j)^*";
        break;
      }
      if (kd.kappa_inv[m].image != j) {
        ok = false;
        detail = "kappa_inv(kappa(" + L.name(j) + ")) != j";
        break;
      }
    }
    if (ok)
      pass("kappa-identities");
    else
      fail("kappa-identities", detail);
  } else {
    skip("kappa-identities", "not a kappa-lattice");
  }

  if (sd.ok) {
    // Three-criterion agreement for left modularity, per element.
    bool ok = true;
    std::string detail;
    for (Elem t = 0; t < L.size() && ok; ++t) {
      bool d = is_left_modular_def(L, t).ok;
      bool k = is_left_modular_kappa(L, kd, t).ok;
      bool c = is_left_modular_cover(L, t).ok;
      if (d != k || d != c) {
        ok = false;
        detail = "t=" + L.name(t) + " def=" + bool_str(d) +
                 " kappa=" + bool_str(k) + " cover=" + bool_str(c);
      }
    }
    if (ok)
      pass("lm-three-criteria-agree");
    else
      fail("lm-three-criteria-agree", detail);
  } else {
    skip("lm-three-criteria-agree", "not semidistributive");
  }

  if (sd.ok) {
    // One-directional cover facts: label j, m = κ(j); j ≤ t forces the join
    // equality, t ≤ m forces the meet equality, and never both j ≤ t, t ≤ m.
    bool ok = true;
    std::string detail;
    for (auto [y, z] : L.covers()) {
      Elem j = cover_label(L, kd, y, z);
      Elem m = kd.kappa[j].image;
      for (Elem t = 0; t < L.size() && ok; ++t) {
        if (L.leq(j, t) && L.join(t, y) != L.join(t, z)) {
          ok = false;
          detail = "cover " + pair_str(L, y, z) + " t=" + L.name(t) + " join";
        } else if (L.leq(t, m) && L.meet(t, y) != L.meet(t, z)) {
          ok = false;
          detail = "cover " + pair_str(L, y, z) + " t=" + L.name(t) + " meet";
        } else if (L.leq(j, t) && L.leq(t, m)) {
          ok = false;
          detail = "cover " + pair_str(L, y, z) + " t=" + L.name(t) + " both";
        }
      }
      if (!ok) break;
    }
    if (ok)
      pass("cover-criterion-directions");
    else
      fail("cover-criterion-directions", detail);
  } else {
    skip("cover-criterion-directions", "not semidistributive");
  }

  if (sd.ok) {
    // Converse cover lemma: x∨j = y and y∧κ(j) = x force x ⋖ y.
    bool ok = true;
    std::string detail;
    for (Elem x = 0; x < L.size() && ok; ++x)
      for (Elem j : kd.ji) {
        Elem y = L.join(x, j);
        if (y == x) continue;
        if (L.meet(y, kd.kappa[j].image) == x && !L.is_cover(x, y)) {
          ok = false;
          detail = "x=" + L.name(x) + " j=" + L.name(j);
          break;
        }
      }
    if (ok)
      pass("cover-converse-lemma");
    else
      fail("cover-converse-lemma", detail);
  } else {
    skip("cover-converse-lemma", "not semidistributive");
  }

  LmReport lm = left_modular_set(L);
  if (sd.ok) {
    if (lm.closed_under_meet_join && lm.distributive)
      pass("lm-sublattice-distributive");
    else
      fail("lm-sublattice-distributive",
           "closed=" + bool_str(lm.closed_under_meet_join) +
               " distributive=" + bool_str(lm.distributive));
  } else {
    skip("lm-sublattice-distributive", "not semidistributive");
  }

  if (kd.bijective) {
    LabellingQuiver q = build_labelling_quiver(L, kd);
    auto sets = successor_closed_sets(q, budget);
    bool ok = sets.size() == lm.lm_set.size();
    std::string detail = "lm=" + std::to_string(lm.lm_set.size()) +
                         " succ=" + std::to_string(sets.size());
    if (ok)
      for (Elem t : lm.lm_set) {
        SuccClosedSet s = phi(L, q, t);
        if (psi(L, q, s) != t) {
          ok = false;
          detail = "psi(phi(" + L.name(t) + ")) != " + L.name(t);
          break;
        }
      }
    if (ok)
      for (const auto& s : sets) {
        Elem t = psi(L, q, s);
        if (!(phi(L, q, t) == s)) {
          ok = false;
          detail = "phi(psi(S)) != S";
          break;
        }
      }
    if (ok)
      pass("phi-psi-bijection");
    else
      fail("phi-psi-bijection", detail);
  } else {
    skip("phi-psi-bijection", "not a kappa-lattice");
  }

  ExtremalityReport cls = is_extremal_classical(L);
  ExtremalityReport gen = is_extremal_generalized(L, budget);
  if (cls.extremal == gen.extremal)
    pass("classical-iff-generalized-extremal");
  else
    fail("classical-iff-generalized-extremal",
         "classical=" + bool_str(cls.extremal) +
             " generalized=" + bool_str(gen.extremal));

  if (sd.ok) {
    if (lm.is_lm_lattice == cls.extremal)
      pass("lm-iff-extremal");
    else
      fail("lm-iff-extremal", "lm=" + bool_str(lm.is_lm_lattice) +
                                  " extremal=" + bool_str(cls.extremal));
  } else {
    skip("lm-iff-extremal", "not semidistributive");
  }

  if (sd.ok) {
    LabellingQuiver q = build_labelling_quiver(L, kd);
    if (!cls.extremal || q.acyclic)
      pass("quiver-acyclic-when-extremal");
    else
      fail("quiver-acyclic-when-extremal", "extremal but cyclic quiver");
  } else {
    skip("quiver-acyclic-when-extremal", "not semidistributive");
  }

  if (sd.ok && cls.extremal) {
    LabellingQuiver q = build_labelling_quiver(L, kd);
    bool ok = true;
    std::string detail;
    std::uint64_t exts =
        for_each_linear_extension(q, budget, [&](const LinearOrder& o) {
          Chain c = extremal_chain_from_linext(L, o);
          if (!is_extremal_chain(L, c).ok) {
            ok = false;
            detail = "chain from extension is not extremal";
            return false;
          }
          if (linext_from_extremal_chain(L, c) != o) {
            ok = false;
            detail = "round trip changed the extension";
            return false;
          }
          return true;
        });
    if (ok) {
      std::uint64_t chains = count_extremal_chains(L, kd, budget.max_chains);
      if (exts != chains) {
        ok = false;
        detail = "extensions=" + std::to_string(exts) +
                 " chains=" + std::to_string(chains);
      }
    }
    if (ok)
      pass("linext-chain-roundtrip");
    else
      fail("linext-chain-roundtrip", detail);
  } else {
    skip("linext-chain-roundtrip",
         sd.ok ? "not extremal" : "not semidistributive");
  }

  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string dot_hasse(const FiniteLattice& L) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  out << "  rankdir=BT;\n";
  for (Elem x = 0; x < L.size(); ++x)
    out << "  " << dot_quote(L.name(x)) << ";\n";

  std::vector<Elem> labels;
  KappaData kd = compute_kappa(L);
  bool labelled = is_semidistributive(L).ok && kd.kappa_total;
  if (labelled) labels = cover_labels(L, kd);
  for (std::size_t c = 0; c < L.covers().size(); ++c) {
    auto [a, b] = L.covers()[c];
    out << "  " << dot_quote(L.name(a)) << " -> " << dot_quote(L.name(b));
    if (labelled) out << " [label=" << dot_quote(L.name(labels[c])) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_labelling(const FiniteLattice& L) {
  LabellingQuiver q = build_labelling_quiver(L);
  std::ostringstream out;
  out << "digraph labelling_quiver {\n";
  for (Elem v : q.vertices) out << "  " << dot_quote(L.name(v)) << ";\n";
  for (auto [i, j] : q.arrows)
    out << "  " << dot_quote(L.name(q.vertices[i])) << " -> "
        << dot_quote(L.name(q.vertices[j])) << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_brick(const AlgebraModel& algebra) {
  BrickQuiver q = brick_quiver(algebra);
  std::ostringstream out;
  out << "digraph brick_quiver {\n";
  for (int i = 0; i < q.vertex_count; ++i)
    out << "  " << dot_quote(algebra.module_name(i)) << ";\n";
  for (auto [i, j] : q.arrows)
    out << "  " << dot_quote(algebra.module_name(i)) << " -> "
        << dot_quote(algebra.module_name(j)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace kappalat
