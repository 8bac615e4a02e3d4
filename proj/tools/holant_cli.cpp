// Copyright 2026 The holant-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// holant: command-line front end. Exit codes: 0 ok, 1 usage, 2 format or
// invalid input, 3 budget, 4 verification failed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "holant/apex.hpp"
#include "holant/error.hpp"
#include "holant/genus.hpp"
#include "holant/gridtiling.hpp"
#include "holant/io.hpp"
#include "holant/matchgates.hpp"
#include "holant/matching.hpp"
#include "holant/mod2k.hpp"

namespace holant {
namespace {

constexpr int kOk = 0, kUsage = 1, kFormat = 2, kBudget = 3, kVerify = 4;

struct Globals {
  bool pretty = false;
  unsigned jobs = 1;
  std::size_t max_edges = EnumerationOptions{}.max_edges;
  std::uint64_t max_nodes = TilingOptions{}.max_nodes;
};

std::string show(const Scalar& s, const Globals& g) {
  if (g.pretty) return s.pretty();
  io::Json j = io::scalar_to_json(s);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string show(const mpz_class& z, const Globals& g) { return show(Scalar(Rational(z)), g); }

EnumerationOptions enumeration(const Globals& g) { return {g.max_edges, Strategy::kSupportFirst}; }
TilingOptions tiling(const Globals& g) { return {g.max_nodes}; }

void emit(const io::Json& j, const std::string& out) {
  if (out.empty() || out == "-") std::cout << j.dump(2) << "\n";
  else io::write_json_file(out, j);
}

std::string omega_name(const std::vector<std::size_t>& omega) {
  std::string s;
  for (auto w : omega) s += std::to_string(w);
  return s.empty() ? "empty" : s;
}

EmbeddedGraph embedded_from(const SignatureGraph& g) {
  if (!g.witness) throw ValidationError("graph has no embedding");
  for (char e : g.witness->excluded)
    if (e) throw ValidationError("graph has excluded (apex) vertices; use pm apex");
  return {to_weighted_graph(g), g.witness->rotation};
}

// Compares Sig(gate) with the target on every input; prints the table on request.
int check_gate(const Gate& gate, const Signature& target, const std::string& name, bool table, const Globals& g) {
  if (gate.arity() != target.arity()) throw DimensionError("gate and target arity differ");
  if (gate.arity() > kMaxDenseArity) throw BudgetExceeded("gate arity above " + std::to_string(kMaxDenseArity));
  std::size_t total = std::size_t{1} << gate.arity(), good = 0;
  for (Bits x = 0; x < total; ++x) {
    Scalar got = gate_signature_value(gate, x, enumeration(g)), want = target.eval(x);
    good += got == want;
    if (table || got != want)
      std::cout << bits_to_string(x, gate.arity()) << " " << show(got, g) << " " << show(want, g)
                << (got == want ? "" : " MISMATCH") << "\n";
  }
  std::cout << (name.empty() ? "" : name + ": ") << good << "/" << total << " inputs match\n";
  return good == total ? kOk : kVerify;
}

int run(int argc, char** argv) {
  Globals g;
  CLI::App app{"Holant, matchgate and grid-tiling toolkit"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g.pretty, "Print integers plainly instead of p/q");
  app.add_option("--jobs", g.jobs, "Worker threads for branch evaluation")->check(CLI::Range(1u, 256u));
  app.add_option("--max-edges", g.max_edges, "Free-edge budget for exhaustive Holant enumeration");
  app.add_option("--max-nodes", g.max_nodes, "Search-node budget for tiling enumeration");
  int status = kOk;

  // holant eval FILE
  std::string file, out, name, dir, direction = "vertical", transcript;
  auto* holant_cmd = app.add_subcommand("holant", "Holant of a signature graph")->require_subcommand(1);
  holant_cmd->add_subcommand("eval", "Sum over all edge assignments")
      ->callback([&] { std::cout << show(holant(io::read_file_as(file, io::graph_from_json), enumeration(g)), g) << "\n"; })
      ->add_option("FILE", file)->required();

  // gate sig FILE
  auto* gate_cmd = app.add_subcommand("gate", "Gate operations")->require_subcommand(1);
  auto* gate_sig = gate_cmd->add_subcommand("sig", "Signature table of a gate (checked against its target, if any)");
  gate_sig->add_option("FILE", file)->required();
  gate_sig->callback([&] {
    auto gf = io::read_file_as(file, io::gate_from_json);
    if (gf.target) {
      status = check_gate(gf.gate, *gf.target, "", true, g);
      return;
    }
    Signature s = gate_signature(gf.gate, enumeration(g));
    for (Bits x = 0; x < (Bits{1} << s.arity()); ++x)
      std::cout << bits_to_string(x, s.arity()) << " " << show(s.eval(x), g) << "\n";
  });

  // matchgate verify NAME|FILE
  bool table = false;
  auto* mg_cmd = app.add_subcommand("matchgate", "Matchgate certification")->require_subcommand(1);
  auto* mg_verify = mg_cmd->add_subcommand("verify", "Compare Sig(gate) with its target on all inputs");
  mg_verify->add_option("NAME_OR_FILE", name, "GAMMA_PASS, GAMMA_PRE, GAMMA_ACT, DUMMY or a gate file")->required();
  mg_verify->add_flag("--table", table, "Print every input");
  mg_verify->callback([&] {
    if (auto n = matchgate_from_name(name)) {
      NamedMatchgate m = build_matchgate(*n);
      status = check_gate(m.gate, m.target, "", table, g);
      return;
    }
    auto gf = io::read_file_as(name, io::gate_from_json);
    if (!gf.target) throw FormatError(name + ": /: gate file has no \"target\"");
    status = check_gate(gf.gate, *gf.target, "", table, g);
  });

  // pm brute|fkt|apex FILE
  auto* pm_cmd = app.add_subcommand("pm", "Weighted perfect matchings of an all-HW=1 graph")->require_subcommand(1);
  pm_cmd->add_subcommand("brute", "Memoised exhaustive search")
      ->callback([&] {
        auto sg = io::read_file_as(file, io::graph_from_json);
        std::cout << show(perfmatch_bruteforce(to_weighted_graph(sg)), g) << "\n";
      })
      ->add_option("FILE", file)->required();
  pm_cmd->add_subcommand("fkt", "Pfaffian of a Kasteleyn orientation (needs an embedding)")
      ->callback([&] { std::cout << show(perfmatch_fkt(embedded_from(io::read_file_as(file, io::graph_from_json))), g) << "\n"; })
      ->add_option("FILE", file)->required();
  pm_cmd->add_subcommand("apex", "Planar graph plus excluded apex vertices")
      ->callback([&] {
        auto inst = apex_instance(io::read_file_as(file, io::graph_from_json));
        std::cout << show(perfmatch_apex(inst.graph, inst.apices, inst.rotation), g) << "\n";
      })
      ->add_option("FILE", file)->required();

  // perm FILE [--mod-log K]
  unsigned mod_log = 0;
  auto* perm_cmd = app.add_subcommand("perm", "Permanent of a square matrix");
  perm_cmd->add_option("FILE", file)->required();
  perm_cmd->add_option("--mod-log", mod_log, "Print the permanent modulo 2^K")->check(CLI::Range(1u, 4096u));
  perm_cmd->callback([&] {
    Scalar p = permanent(io::read_file_as(file, io::matrix_from_json));
    if (mod_log) std::cout << ModScalar::from_scalar(p, mod_log).str() << "\n";
    else std::cout << show(p, g) << "\n";
  });

  // modring A B --log M
  std::string ring_a, ring_b;
  unsigned ring_log = 0;
  auto* ring_cmd = app.add_subcommand("modring", "a+b, a*b and a^b in Z/2^m");
  ring_cmd->add_option("A", ring_a)->required();
  ring_cmd->add_option("B", ring_b)->required();
  ring_cmd->add_option("--log", ring_log, "m")->required()->check(CLI::Range(1u, 4096u));
  ring_cmd->callback([&] {
    mpz_class a, b;
    if (a.set_str(ring_a, 10) != 0 || b.set_str(ring_b, 10) != 0) throw FormatError("modring: operands must be integers");
    ModRingDemo r = mod_ring_demo(a, b, ring_log);
    std::cout << "sum=" << r.sum.str() << "\nproduct=" << r.product.str() << "\npower=" << r.power.str() << "\n";
  });

  // genus pm MODELFILE
  bool stats = false;
  auto* genus_cmd = app.add_subcommand("genus", "Graphs of bounded genus")->require_subcommand(1);
  auto* genus_pm = genus_cmd->add_subcommand("pm", "PerfMatch from a plane model");
  genus_pm->add_option("MODELFILE", file)->required();
  genus_pm->add_flag("--stats", stats, "Also print constituent and crossing counts");
  genus_pm->callback([&] {
    GenusResult r = genus_perfmatch(io::read_file_as(file, io::plane_model_from_json), g.jobs);
    std::cout << show(r.value, g) << "\n";
    if (stats)
      std::cout << "constituents=" << r.constituents << " crossings=" << r.crossings
                << " flat_vertices=" << r.flat_vertices << "\n";
  });

  // gridtiling count|parity|balance FILE
  auto parse_direction = [&] {
    if (direction == "vertical") return Direction::kVertical;
    if (direction == "horizontal") return Direction::kHorizontal;
    throw CLI::ValidationError("--direction", "expected vertical or horizontal");
  };
  auto* gt_cmd = app.add_subcommand("gridtiling", "Grid tiling instances")->require_subcommand(1);
  gt_cmd->add_subcommand("count", "Number of tilings")
      ->callback([&] { std::cout << show(count_tilings(io::read_file_as(file, io::gridtiling_from_json), tiling(g)), g) << "\n"; })
      ->add_option("FILE", file)->required();
  gt_cmd->add_subcommand("parity", "Parity of the number of tilings")
      ->callback([&] { std::cout << parity_tilings(io::read_file_as(file, io::gridtiling_from_json), tiling(g)) << "\n"; })
      ->add_option("FILE", file)->required();
  auto* gt_balance = gt_cmd->add_subcommand("balance", "Pad every cell with dummies to a balanced instance");
  gt_balance->add_option("FILE", file)->required();
  gt_balance->add_option("--direction", direction, "vertical (equal column counts) or horizontal (equal row counts)");
  gt_balance->add_option("-o,--output", out, "Output file (default: standard output)");
  gt_balance->callback([&] {
    BalanceResult b = balance(io::read_file_as(file, io::gridtiling_from_json), parse_direction());
    emit(io::gridtiling_to_json(b.instance), out);
    if (!out.empty() && out != "-") std::cout << "T=" << b.T << "\n";
  });

  // reduce clique|psub|gridtiling
  bool verify = false;
  std::size_t k = 0;
  auto* red_cmd = app.add_subcommand("reduce", "Emit reductions")->require_subcommand(1);
  auto* red_clique = red_cmd->add_subcommand("clique", "k-Clique to PartitionedSub (k! multiplier)");
  red_clique->add_option("GRAPHFILE", file)->required();
  red_clique->add_option("--k", k)->required()->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  red_clique->add_option("-o,--output", out);
  red_clique->add_flag("--verify", verify, "Check copies = k! * cliques (to standard error)");
  red_clique->callback([&] {
    ColoredGraph cg = io::read_file_as(file, io::colored_graph_from_json);
    CliqueReduction r = clique_to_psub(cg, k);
    io::Json j = io::psub_to_json(r.instance);
    j["multiplier"] = r.multiplier.get_str();
    emit(j, out);
    if (verify) {
      auto back = io::psub_from_json(io::parse_json(j.dump()));
      mpz_class copies = count_psub(back, tiling(g)), cliques = count_cliques(cg, k);
      bool ok = copies == r.multiplier * cliques;
      std::cerr << "copies=" << copies.get_str() << " cliques=" << cliques.get_str()
                << " multiplier=" << r.multiplier.get_str() << (ok ? " OK" : " MISMATCH") << "\n";
      if (!ok) status = kVerify;
    }
  });
  auto* red_psub = red_cmd->add_subcommand("psub", "PartitionedSub to GridTiling (parsimonious)");
  red_psub->add_option("PSUBFILE", file)->required();
  red_psub->add_option("-o,--output", out);
  red_psub->add_flag("--verify", verify, "Check #tilings = #copies (to standard error)");
  red_psub->callback([&] {
    PartitionedSubInstance p = io::read_file_as(file, io::psub_from_json);
    io::Json j = io::gridtiling_to_json(psub_to_gridtiling(p));
    emit(j, out);
    if (verify) {
      auto back = io::gridtiling_from_json(io::parse_json(j.dump()));
      mpz_class copies = count_psub(p, tiling(g)), tilings = count_tilings(back, tiling(g));
      bool ok = copies == tilings;
      std::cerr << "copies=" << copies.get_str() << " tilings=" << tilings.get_str() << (ok ? " OK" : " MISMATCH") << "\n";
      if (!ok) status = kVerify;
    }
  });
  auto* red_gt = red_cmd->add_subcommand("gridtiling", "GridTiling to balanced GridTiling");
  red_gt->add_option("FILE", file)->required();
  red_gt->add_option("--direction", direction, "vertical or horizontal");
  red_gt->add_option("-o,--output", out);
  red_gt->add_flag("--verify", verify, "Check the tiling count is kept (to standard error)");
  red_gt->callback([&] {
    GridTilingInstance t = io::read_file_as(file, io::gridtiling_from_json);
    Direction d = parse_direction();
    BalanceResult b = balance(t, d);
    io::Json j = io::gridtiling_to_json(b.instance);
    emit(j, out);
    if (verify) {
      auto back = io::gridtiling_from_json(io::parse_json(j.dump()));
      mpz_class before = count_tilings(t, tiling(g)), after = count_tilings(back, tiling(g));
      bool ok = before == after;
      std::cerr << "T=" << b.T << " tilings=" << before.get_str() << " balanced=" << after.get_str()
                << (ok ? " OK" : balance_keeps_tilings(t, d) ? " MISMATCH" : " CHANGED (a line holds fewer than 2 cells of C)")
                << "\n";
      if (!ok) status = kVerify;
    }
  });

  // pipeline apex|mod2k FILE
  bool abstract = false;
  unsigned modulus_log = 0;
  auto* pipe_cmd = app.add_subcommand("pipeline", "Counting pipelines for balanced grid tilings")->require_subcommand(1);
  auto* pipe_apex = pipe_cmd->add_subcommand("apex", "2^|C| apex-planar branches, combined");
  pipe_apex->add_option("FILE", file)->required();
  pipe_apex->add_flag("--verify", verify, "Print every branch and compare with the tiling count");
  pipe_apex->add_flag("--abstract", abstract, "Evaluate unflattened branch graphs by enumeration");
  pipe_apex->add_option("--emit-branches", dir, "Write each flattened branch graph to DIR");
  pipe_apex->callback([&] {
    GridTilingInstance t = io::read_file_as(file, io::gridtiling_from_json);
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      for (const auto& b : apex_branch_graphs(t, true)) {
        io::Json j = io::graph_to_json(b.graph);
        j["coefficient"] = io::scalar_to_json(b.coefficient);
        io::write_json_file(dir + "/branch_" + omega_name(b.omega) + ".json", j);
      }
    }
    ApexVerifyOptions opt;
    opt.abstract = abstract;
    opt.jobs = g.jobs;
    opt.enumeration.max_edges = std::max<std::size_t>(g.max_edges, opt.enumeration.max_edges);
    CombinedReport rep = verify_combined_gridtiling(t, opt);
    if (verify) {
      std::cout << rep.dump();
      if (!rep.ok()) status = kVerify;
    } else {
      std::cout << show(rep.rhs, g) << "\n";
    }
  });
  auto* pipe_mod = pipe_cmd->add_subcommand("mod2k", "3^|C| branches summed in Z/2^m; reads the parity");
  pipe_mod->add_option("FILE", file)->required();
  pipe_mod->add_option("--modulus-log", modulus_log, "m (default 2|C|+1)");
  pipe_mod->add_option("--emit-branches", dir, "Write each branch graph to DIR");
  pipe_mod->add_option("--transcript", transcript, "Write every branch with its exact values to FILE");
  pipe_mod->add_flag("--verify", verify, "Compare the parity with direct enumeration");
  pipe_mod->callback([&] {
    GridTilingInstance t = io::read_file_as(file, io::gridtiling_from_json);
    ModOptions opt;
    opt.modulus_log = modulus_log;
    opt.jobs = g.jobs;
    opt.keep_graphs = !dir.empty();
    ModReport rep = modulo_combination_eval(t, opt);
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      for (const auto& b : rep.branches) {
        io::Json j = io::graph_to_json(*b.graph);
        j["coefficient"] = b.coefficient.get_str();
        io::write_json_file(dir + "/branch_" + omega_name(b.omega) + ".json", j);
      }
    }
    if (!transcript.empty()) {
      std::ofstream tr(transcript, std::ios::binary);
      if (!tr) throw FormatError(transcript + ": cannot write file");
      tr << rep.dump();
    }
    if (!rep.in_range) {
      std::cout << "sum=" << rep.sum.str() << " is not in {0, M} mod 2M\n";
      status = kVerify;
      return;
    }
    std::cout << "parity=" << rep.parity << " (sum = " << (rep.parity ? "M" : "0") << " mod 2M)\n";
    if (!rep.ok()) status = kVerify;
    if (verify) {
      int want = parity_tilings(t, tiling(g));
      std::cout << "direct parity=" << want << (want == rep.parity ? " OK" : " MISMATCH") << "\n";
      if (want != rep.parity) status = kVerify;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kFormat;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kVerify;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kFormat;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFormat;
  }
  return status;
}

}  // namespace
}  // namespace holant

int main(int argc, char** argv) { return holant::run(argc, argv); }
