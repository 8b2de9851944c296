// Command line surface for the Fibonacci-sum graph library.
//
// Exit codes: 0 success, 1 bad input (domain/range errors), 2 invariant
// violation (a structural claim failed and the counterexample was printed),
// 64 usage errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibsum/automorphism.hpp"
#include "fibsum/bipartition.hpp"
#include "fibsum/cycles.hpp"
#include "fibsum/decomposition.hpp"
#include "fibsum/export.hpp"
#include "fibsum/fib.hpp"
#include "fibsum/graph.hpp"
#include "fibsum/hamilton.hpp"
#include "fibsum/simple_graph.hpp"
#include "fibsum/verify.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw fibsum::DomainError("cannot open output file: " + out_path);
  f << text;
}

std::string join(const std::vector<fibsum::Vertex>& vs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << sep;
    out << vs[i];
  }
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Fibonacci-sum graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global --format/--out may follow the subcommand

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format: text|json|dot|csv")->capture_default_str();
  app.add_option("--out", out_path, "Write output to a file instead of stdout");

  std::uint64_t n = 0;

  auto* graph_cmd = app.add_subcommand("graph", "Export the edge set of G_n");
  graph_cmd->add_option("n", n, "vertex count")->required();

  auto* degrees_cmd = app.add_subcommand("degrees", "Per-vertex closed-form degree report");
  degrees_cmd->add_option("n", n, "vertex count")->required();

  auto* pendants_cmd = app.add_subcommand("pendants", "Degree-1 vertices of G_n");
  pendants_cmd->add_option("n", n, "vertex count")->required();

  auto* bip_cmd = app.add_subcommand("bipartition", "Canonical 2-colouring: part sizes and imbalance");
  bip_cmd->add_option("n", n, "vertex count")->required();
  std::string colours_path;
  bip_cmd->add_option("--colours", colours_path, "Also write per-vertex colour CSV to this path");

  auto* ham_cmd = app.add_subcommand("hampath", "Hamiltonian path(s) of G_n, or \"none\"");
  ham_cmd->add_option("n", n, "vertex count")->required();

  auto* cycles_cmd = app.add_subcommand("cycles", "Cycle structure queries");
  std::uint64_t even_k = 0;
  bool want_girth = false, want_chords = false;
  cycles_cmd->add_option("n", n, "vertex count (required for --girth and --check-chords)");
  cycles_cmd->add_flag("--girth", want_girth, "Girth of G_n (cross-checked against search)");
  cycles_cmd->add_option("--even-cycle", even_k, "Constructed cycle of length 2k");
  cycles_cmd->add_flag("--check-chords", want_chords, "Enumerate all cycles and check chord structure");

  auto* td_cmd = app.add_subcommand("treedecomp", "Width-2 tree decomposition of G_n");
  td_cmd->add_option("n", n, "vertex count")->required();

  auto* op_cmd = app.add_subcommand("outerplanar", "Crossing-free circular order for G_n");
  op_cmd->add_option("n", n, "vertex count")->required();

  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of G_N, or the interval table");
  aut_cmd->add_option("N", n, "vertex count");
  std::uint64_t table_max = 0;
  aut_cmd->add_option("--table", table_max, "Emit lo,hi,order runs for 7 <= N <= max");

  auto* verify_cmd = app.add_subcommand("verify", "Run every oracle-equivalence suite");
  std::uint64_t vmax = 300, seed = 1729;
  verify_cmd->add_option("--max", vmax, "Sweep bound (each suite clamps to its own cap)")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for randomized spot checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  }

  if (graph_cmd->parsed()) {
    const fibsum::FibSumGraph g(n);
    if (format == "json")
      emit(fibsum::to_json(g), out_path);
    else if (format == "dot")
      emit(fibsum::to_dot(g), out_path);
    else
      emit(fibsum::to_edge_list(g), out_path);
    return 0;
  }

  if (degrees_cmd->parsed()) {
    std::ostringstream out;
    if (format == "json") {
      json j = json::array();
      for (fibsum::Vertex x = 1; x <= n; ++x) {
        const auto r = fibsum::degree_closed_form(n, x);
        j.push_back({{"x", r.x}, {"degree", r.degree}, {"k", r.k}, {"ell", r.ell}});
      }
      out << j.dump();
    } else {
      if (format == "csv") out << "vertex,degree,k,ell\n";
      for (fibsum::Vertex x = 1; x <= n; ++x) {
        const auto r = fibsum::degree_closed_form(n, x);
        const char sep = format == "csv" ? ',' : ' ';
        out << r.x << sep << r.degree << sep << r.k << sep << r.ell << '\n';
      }
    }
    emit(out.str(), out_path);
    return 0;
  }

  if (pendants_cmd->parsed()) {
    const auto ps = fibsum::pendants(n);
    if (format == "json") {
      emit(json{{"n", n}, {"pendants", ps}}.dump(), out_path);
    } else if (format == "csv") {
      std::ostringstream out;
      out << "vertex\n";
      for (auto v : ps) out << v << '\n';
      emit(out.str(), out_path);
    } else {
      emit(join(ps, " "), out_path);
    }
    return 0;
  }

  if (bip_cmd->parsed()) {
    const auto parts = fibsum::part_sizes(n);
    const auto s = fibsum::s_of(n);
    if (!colours_path.empty()) {
      std::ostringstream out;
      out << "vertex,colour\n";
      for (fibsum::Vertex x = 1; x <= n; ++x) out << x << ',' << fibsum::colour_of(x) << '\n';
      emit(out.str(), colours_path);
    }
    if (format == "text") {
      std::ostringstream out;
      out << "n=" << n << " size1=" << parts.size1 << " size0=" << parts.size0 << " S=" << s.twice
          << "/2\n";
      emit(out.str(), out_path);
    } else {
      emit(json{{"n", n}, {"size1", parts.size1}, {"size0", parts.size0}, {"S_times_2", s.twice}}.dump(),
           out_path);
    }
    return 0;
  }

  if (ham_cmd->parsed()) {
    const auto paths = fibsum::hamilton_paths(n);
    if (format == "json") {
      emit(json{{"n", n}, {"paths", paths}}.dump(), out_path);
    } else if (paths.empty()) {
      emit("none", out_path);
    } else {
      std::ostringstream out;
      for (const auto& p : paths) out << join(p, ",") << '\n';
      emit(out.str(), out_path);
    }
    return 0;
  }

  if (cycles_cmd->parsed()) {
    if (static_cast<int>(want_girth) + static_cast<int>(even_k > 0) + static_cast<int>(want_chords) != 1) {
      std::cerr << "cycles: pass exactly one of --girth, --even-cycle k, --check-chords\n";
      return 64;
    }
    json j;
    if (want_girth) {
      if (n == 0) throw fibsum::DomainError("cycles --girth: n required");
      const auto closed = fibsum::girth(n);
      if (n <= 2000) {
        const auto brute = fibsum::girth_bruteforce(n);
        if (closed != brute)
          throw fibsum::InvariantViolation("girth search disagrees with closed form at n = " +
                                           std::to_string(n));
      }
      j["n"] = n;
      if (closed)
        j["girth"] = *closed;
      else
        j["girth"] = "acyclic";
    } else if (even_k > 0) {
      const auto c = fibsum::even_cycle(even_k);
      j["k"] = even_k;
      j["n"] = fibsum::fib(static_cast<int>(2 * even_k + 3)) - 1;
      j["cycle"] = c;
    } else {
      if (n == 0) throw fibsum::DomainError("cycles --check-chords: n required");
      const auto g = fibsum::SimpleGraph::from_fib(fibsum::FibSumGraph(n));
      const auto cycles = fibsum::enumerate_cycles(g);
      json crossing = json::array();
      json chords = json::array();
      for (const auto& c : cycles) {
        for (const auto& [e1, e2] : fibsum::crossing_chords(g, c))
          crossing.push_back({{"cycle", c}, {"chords", {{e1.first, e1.second}, {e2.first, e2.second}}}});
        if (c.size() >= 6) {
          const auto chord = fibsum::four_cycle_chord(g, c);
          chords.push_back({{"cycle", c}, {"chord", {chord.first, chord.second}}});
        }
      }
      j["n"] = n;
      j["cycles"] = cycles.size();
      j["crossing_chords"] = crossing;
      j["long_cycle_chords"] = chords;
    }
    if (format == "text") {
      emit(j.dump(2), out_path);
    } else {
      emit(j.dump(), out_path);
    }
    return 0;
  }

  if (td_cmd->parsed()) {
    const auto td = fibsum::build_tree_decomposition(n);
    const auto check = fibsum::validate_tree_decomposition(fibsum::FibSumGraph(n), td);
    if (!check) throw fibsum::InvariantViolation("tree decomposition failed validation: " + check.detail);
    json j;
    j["n"] = n;
    j["width"] = td.width();
    j["bags"] = td.bags;
    auto& tree = j["tree"] = json::array();
    for (const auto& [a, b] : td.tree_edges) tree.push_back({a, b});
    emit(j.dump(), out_path);
    return 0;
  }

  if (op_cmd->parsed()) {
    const auto cert = fibsum::build_outerplanar_certificate(n);
    const auto check = fibsum::validate_outerplanar_certificate(fibsum::FibSumGraph(n), cert);
    if (!check) throw fibsum::InvariantViolation("outerplanar certificate failed validation: " + check.detail);
    if (format == "json")
      emit(json{{"n", n}, {"order", cert.order}}.dump(), out_path);
    else
      emit(join(cert.order, ","), out_path);
    return 0;
  }

  if (aut_cmd->parsed()) {
    if (table_max > 0) {
      std::ostringstream out;
      out << "lo,hi,order\n";
      for (const auto& row : fibsum::interval_report(table_max))
        out << row.lo << ',' << row.hi << ',' << row.order << '\n';
      emit(out.str(), out_path);
      return 0;
    }
    if (n == 0) throw fibsum::DomainError("aut: pass N or --table max");
    const auto group = n >= 9 ? fibsum::aut_closed_form(n) : fibsum::aut_bruteforce(n);
    json swaps = json::array();
    for (const auto& [a, b] : group.swaps) swaps.push_back({a, b});
    emit(json{{"n", n}, {"order", group.order()}, {"swaps", swaps}}.dump(), out_path);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const auto report = fibsum::run_verify(vmax, seed);
    emit(format == "json" ? fibsum::to_json(report) : fibsum::to_text(report), out_path);
    return report.pass ? 0 : 2;
  }

  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fibsum::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const fibsum::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fibsum::RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
