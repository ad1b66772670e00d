// kappalat: generate, analyze, verify and draw finite lattices.
//
// Exit codes: 0 ok, 1 verify check failure, 2 input error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kappalat/analysis.hpp"

namespace {

using namespace kappalat;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LatticeError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LatticeError("cannot open " + path + " for writing");
  out << text;
}

ModInterval parse_forbid(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw LatticeError("--forbid expects a..b, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (...) {
    throw LatticeError("--forbid expects a..b, got '" + s + "'");
  }
}

std::pair<int, int> parse_rel(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw LatticeError("--rel expects a,b, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (...) {
    throw LatticeError("--rel expects a,b, got '" + s + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite lattice analysis: left modularity, extremality, "
               "kappa maps, labelling quivers, torsion-class lattices"};
  app.require_subcommand(1);

  std::uint64_t max_chains = 0, max_sets = 0;
  app.add_option("--max-chains", max_chains, "maximal-chain enumeration cap");
  app.add_option("--max-sets", max_sets,
                 "successor-set / linear-extension enumeration cap");

  auto budget = [&]() {
    Budget b = Budget::from_env();
    if (max_chains) b.max_chains = max_chains;
    if (max_sets) b.max_sets = max_sets;
    return b;
  };

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a lattice file");
  std::string analyze_path = "-";
  std::string format = "text";
  analyze_cmd->add_option("path", analyze_path, "lattice-v1 file or -");
  analyze_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "emit a lattice-v1 file");
  std::string family;
  gen_cmd
      ->add_option("family", family,
                   "boolean|chain|downset|tamari|weak_order|nakayama_tors")
      ->required()
      ->check(CLI::IsMember({"boolean", "chain", "downset", "tamari",
                             "weak_order", "nakayama_tors"}));
  int gen_n = -1, gen_m = -1;
  std::vector<std::string> forbids, rels;
  std::string out_path = "-";
  gen_cmd->add_option("--n", gen_n, "size parameter");
  gen_cmd->add_option("--m", gen_m, "chain length");
  gen_cmd->add_option("--forbid", forbids, "forbidden path a..b (nakayama_tors)")
      ->allow_extra_args(false);
  gen_cmd->add_option("--rel", rels, "poset relation a,b (downset)")
      ->allow_extra_args(false);
  gen_cmd->add_option("out", out_path, "output file or -");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the structural cross-check battery");
  std::string verify_path = "-";
  verify_cmd->add_option("path", verify_path, "lattice-v1 file or -");

  // dot
  auto* dot_cmd = app.add_subcommand("dot", "export a DOT digraph");
  std::string dot_path, dot_kind = "hasse", dot_out = "-";
  dot_cmd->add_option("path", dot_path, "lattice-v1 file")->required();
  dot_cmd->add_option("--kind", dot_kind, "hasse|labelling|brick")
      ->check(CLI::IsMember({"hasse", "labelling", "brick"}));
  dot_cmd->add_option("out", dot_out, "output file or -");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return kExitOk;
    }
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }

  if (analyze_cmd->parsed()) {
    FiniteLattice L = parse_lattice(slurp(analyze_path));
    AnalysisReport r = analyze(L, budget());
    std::cout << (format == "json" ? render_json(r, L) : render_text(r, L));
    return kExitOk;
  }

  if (gen_cmd->parsed()) {
    auto need_n = [&](const char* fam) {
      if (gen_n < 0)
        throw LatticeError(std::string(fam) + " requires --n");
      return gen_n;
    };
    if (family == "boolean") {
      emit(out_path, serialize_lattice(boolean_lattice(need_n("boolean"))));
    } else if (family == "chain") {
      int m = gen_m >= 0 ? gen_m : need_n("chain");
      emit(out_path, serialize_lattice(chain_lattice(m)));
    } else if (family == "tamari") {
      emit(out_path, serialize_lattice(tamari(need_n("tamari"))));
    } else if (family == "weak_order") {
      emit(out_path, serialize_lattice(weak_order(need_n("weak_order"))));
    } else if (family == "downset") {
      std::vector<std::pair<int, int>> less;
      for (const auto& r : rels) less.push_back(parse_rel(r));
      emit(out_path, serialize_lattice(downset_lattice(need_n("downset"), less)));
    } else {  // nakayama_tors
      std::vector<ModInterval> forbidden;
      for (const auto& f : forbids) forbidden.push_back(parse_forbid(f));
      AlgebraModel alg = nakayama_algebra(need_n("nakayama_tors"), forbidden);
      TorsLattice t = torsion_classes(alg, budget());
      emit(out_path, serialize_tors_lattice(t));
    }
    return kExitOk;
  }

  if (verify_cmd->parsed()) {
    FiniteLattice L = parse_lattice(slurp(verify_path));
    auto results = run_cross_checks(L, budget());
    bool any_fail = false;
    for (const auto& r : results) {
      switch (r.status) {
        case CheckResult::Status::pass:
          std::cout << "PASS " << r.name << "\n";
          break;
        case CheckResult::Status::fail:
          std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
          any_fail = true;
          break;
        case CheckResult::Status::skipped:
          std::cout << "SKIP " << r.name << ": " << r.detail << "\n";
          break;
      }
    }
    return any_fail ? kExitCheckFailure : kExitOk;
  }

  if (dot_cmd->parsed()) {
    std::string text = slurp(dot_path);
    if (dot_kind == "brick") {
      TorsFileMeta meta = parse_tors_meta(text);
      if (!meta.present || meta.n == 0)
        throw LatticeError("no brick metadata in " + dot_path);
      emit(dot_out, dot_brick(nakayama_algebra(meta.n, meta.forbidden)));
    } else {
      FiniteLattice L = parse_lattice(text);
      if (dot_kind == "labelling") {
        try {
          emit(dot_out, dot_labelling(L));
        } catch (const KappaUndefined&) {
          throw LatticeError("not a kappa-lattice: labelling quiver undefined");
        }
      } else {
        emit(dot_out, dot_hasse(L));
      }
    }
    return kExitOk;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kappalat::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const kappalat::LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
