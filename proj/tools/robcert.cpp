// Copyright 2026 The robcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// robcert command-line tool.
//
// Exit codes: 0 Robinsonian / no obstruction / valid, 1 an obstruction was
// reported (or a certificate failed to verify), 2 input error, 3 internal
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "robcert/robcert.hpp"

namespace {

using namespace robcert;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kObstruction = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

unsigned threads() {
  unsigned n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ROBCERT_THREADS")) {
    try {
      const unsigned long cap = std::stoul(env);
      if (cap >= 1) n = std::min<unsigned long>(n, cap);
    } catch (const std::exception&) {
      throw ParseError(std::string("ROBCERT_THREADS is not a positive integer: ") + env);
    }
  }
  return n;
}

json path_json(const Path& p) { return {{"nodes", p.nodes}, {"avoids", p.avoided}}; }

json certificate_json(const Certificate& c) {
  if (const auto* r = std::get_if<RobinsonOrdering>(&c)) {
    return {{"robinsonian", true}, {"ordering", r->order}};
  }
  const auto& w = std::get<WeightedAsteroidalTriple>(c);
  return {{"robinsonian", false},
          {"wat",
           {{"triple", {w.x, w.y, w.z}}, {"paths", {path_json(w.xy), path_json(w.xz), path_json(w.yz)}}}}};
}

std::string labels_text(const std::vector<Label>& v) {
  std::string out;
  for (Label x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

int cmd_certify(const std::string& path, bool as_json) {
  const SymMatrix a = read_matrix(slurp(path));
  const Certificate c = certify(a);
  detail::ensure(verify_certificate(a, c), "certify produced a certificate that does not verify");
  if (as_json) {
    json j = certificate_json(c);
    j["verified"] = true;
    std::cout << j.dump(2) << '\n';
  } else {
    write_certificate(std::cout, c);
  }
  return is_robinsonian(c) ? kOk : kObstruction;
}

int cmd_wats(const std::string& path, bool first, bool count) {
  const SymMatrix a = read_matrix(slurp(path));
  if (count) {
    const auto n = enumerate_wat_triples(a, threads()).size();
    std::cout << n << '\n';
    return n == 0 ? kOk : kObstruction;
  }
  if (first) {
    const auto w = find_one_wat(a);
    if (!w) {
      std::cout << "A has no weighted asteroidal triple\n";
      return kOk;
    }
    write_certificate(std::cout, *w);
    return kObstruction;
  }
  const auto all = enumerate_wats(a, threads());
  if (all.empty()) {
    std::cout << "A has no weighted asteroidal triple\n";
    return kOk;
  }
  for (const auto& w : all) write_certificate(std::cout, w);
  return kObstruction;
}

void print_obstruction(const GraphObstruction& o) {
  if (const auto* c = std::get_if<Claw>(&o)) {
    std::cout << "claw: center=" << c->center << ", leaves=" << c->leaves[0] << ' ' << c->leaves[1] << ' '
              << c->leaves[2] << '\n';
  } else if (const auto* cyc = std::get_if<ChordlessCycle>(&o)) {
    std::cout << "chordless cycle: " << labels_text(cyc->cycle) << '\n';
  } else {
    const auto& at = std::get<AsteroidalTriple>(o);
    std::cout << "asteroidal triple: " << at.x << ' ' << at.y << ' ' << at.z << '\n'
              << "path " << labels_text(at.xy) << " misses " << at.z << '\n'
              << "path " << labels_text(at.xz) << " misses " << at.y << '\n'
              << "path " << labels_text(at.yz) << " misses " << at.x << '\n';
  }
}

int cmd_uig(const std::string& path) {
  std::istringstream in(slurp(path));
  const Graph g = read_graph(in);
  const auto verdict = is_unit_interval(g);
  if (const auto* r = std::get_if<RobinsonOrdering>(&verdict)) {
    detail::ensure(satisfies_three_vertex_condition(g, r->order), "ordering violates the 3-vertex condition");
    std::cout << "ordering " << labels_text(r->order) << '\n';
    return kOk;
  }
  const auto& o = std::get<GraphObstruction>(verdict);
  detail::ensure(verify_obstruction(g, o), "obstruction does not verify");
  print_obstruction(o);
  return kObstruction;
}

int cmd_gen(const std::string& kind, std::size_t n, std::uint64_t seed, std::size_t swaps, long long max_entry) {
  if (kind.rfind("graph:", 0) == 0) {
    write_graph(std::cout, gen::named_graph(kind.substr(6), n));
    return kOk;
  }
  if (kind == "robinson") {
    write_matrix(std::cout, gen::robinson(n, seed));
  } else if (kind == "perturbed") {
    write_matrix(std::cout, gen::perturbed(n, seed, swaps));
  } else if (kind == "random") {
    write_matrix(std::cout, gen::random_matrix(n, seed, max_entry));
  } else {
    throw InvalidArgument("unknown generator '" + kind + "'");
  }
  return kOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& cert_path) {
  const SymMatrix a = read_matrix(slurp(matrix_path));
  const Certificate c = read_certificate(slurp(cert_path));
  if (const auto* r = std::get_if<RobinsonOrdering>(&c)) {
    const auto verdict = verify_robinson_ordering(a, r->order);
    if (verdict.valid()) {
      std::cout << "valid Robinson ordering\n";
      return kOk;
    }
    const auto [x, y, z] = *verdict.violation;
    std::cout << "invalid: triple " << x << ' ' << y << ' ' << z << " is not Robinson\n";
    return kObstruction;
  }
  const auto verdict = verify_wat(a, std::get<WeightedAsteroidalTriple>(c));
  if (verdict.valid()) {
    std::cout << "valid weighted asteroidal triple\n";
    return kOk;
  }
  std::cout << "invalid: path " << verdict.path << " at " << verdict.edge << ": " << verdict.reason << '\n';
  return kObstruction;
}

void print_family(const char* name, const std::vector<Subset>& family) {
  std::cout << name << ' ' << family.size() << '\n';
  for (const auto& s : family) std::cout << "  {" << labels_text(s) << "}\n";
}

int cmd_submatrix(const std::string& path, bool enumerate, std::size_t bound) {
  const SymMatrix a = read_matrix(slurp(path));
  if (enumerate) {
    const auto f = enumerate_families(a, bound);
    print_family("maximal_robinsonian", f.maximal_robinsonian);
    print_family("minimal_deletions", f.minimal_deletions);
    print_family("minimal_cycles", f.minimal_cycles);
    return kOk;
  }
  const auto core = greedy_robinsonian_core(a, threads());
  std::cout << "heuristic Robinsonian core (not necessarily maximum): " << labels_text(core) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifying recognition of Robinsonian similarity matrices"};
  app.require_subcommand(1);

  std::string matrix_path, cert_path, graph_path, kind;
  bool as_json = false, first = false, all = false, count = false, greedy = false, enumerate = false;
  std::size_t n = 0, swaps = 2, bound = kDefaultFamilyBound;
  std::uint64_t seed = 0;
  long long max_entry = 3;

  auto* certify_cmd = app.add_subcommand("certify", "Robinson ordering or weighted asteroidal triple");
  certify_cmd->add_option("matrix", matrix_path, "matrix file ('-' for stdin)")->required();
  certify_cmd->add_flag("--json", as_json, "machine-readable certificate");

  auto* wats_cmd = app.add_subcommand("wats", "weighted asteroidal triples");
  wats_cmd->add_option("matrix", matrix_path, "matrix file ('-' for stdin)")->required();
  auto* first_opt = wats_cmd->add_flag("--first", first, "first triple found, with paths");
  auto* all_opt = wats_cmd->add_flag("--all", all, "every triple, with paths (default)");
  auto* count_opt = wats_cmd->add_flag("--count", count, "number of triples");
  first_opt->excludes(all_opt)->excludes(count_opt);
  all_opt->excludes(count_opt);

  auto* uig_cmd = app.add_subcommand("uig", "unit interval graph test");
  uig_cmd->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance on stdout");
  gen_cmd->add_option("kind", kind, "robinson | perturbed | random | graph:path|cycle|claw|net")->required();
  gen_cmd->add_option("-n,--size", n, "number of elements")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-s,--seed", seed, "random seed");
  gen_cmd->add_option("--swaps", swaps, "entry swaps for 'perturbed'");
  gen_cmd->add_option("--max", max_entry, "largest entry for 'random'")->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a matrix");
  verify_cmd->add_option("matrix", matrix_path, "matrix file")->required();
  verify_cmd->add_option("certificate", cert_path, "certificate file")->required();

  auto* sub_cmd = app.add_subcommand("submatrix", "Robinsonian submatrices");
  sub_cmd->add_option("matrix", matrix_path, "matrix file ('-' for stdin)")->required();
  auto* greedy_opt = sub_cmd->add_flag("--greedy", greedy, "heuristic Robinsonian core (default)");
  auto* enum_opt = sub_cmd->add_flag("--enumerate", enumerate, "exhaustive families I_A, F_A, C_A");
  greedy_opt->excludes(enum_opt);
  sub_cmd->add_option("--bound", bound, "largest size accepted by --enumerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*certify_cmd) return cmd_certify(matrix_path, as_json);
    if (*wats_cmd) return cmd_wats(matrix_path, first, count);
    if (*uig_cmd) return cmd_uig(graph_path);
    if (*gen_cmd) return cmd_gen(kind, n, seed, swaps, max_entry);
    if (*verify_cmd) return cmd_verify(matrix_path, cert_path);
    if (*sub_cmd) return cmd_submatrix(matrix_path, enumerate, bound);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
