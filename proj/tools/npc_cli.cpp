// Copyright 2026 The NPC Toolkit Authors
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


// npc: command-line front end over the JSON graph format.
//
// Exit codes: 0 success or feasible, 1 a domain-negative answer (infeasible,
// unrecoverable), 2 usage, input or internal errors. Only JSON goes to
// stdout; diagnostics go to stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "npc/codec.hpp"
#include "npc/connectivity.hpp"
#include "npc/construction.hpp"
#include "npc/errors.hpp"
#include "npc/feasibility.hpp"
#include "npc/galois.hpp"
#include "npc/graph_io.hpp"
#include "npc/simulator.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<npc::NodeId> resolve_nodes(const npc::Graph& g, const std::string& list) {
  std::vector<npc::NodeId> out;
  for (const auto& label : split_list(list)) {
    auto id = g.find_node(label);
    if (!id) throw UsageError("unknown node '" + label + "'");
    out.push_back(*id);
  }
  return out;
}

json labels(const npc::Graph& g, const std::vector<npc::EdgeId>& edges) {
  json out = json::array();
  for (auto e : edges) out.push_back(g.edge(e).label);
  return out;
}

json paths_json(const npc::Graph& g, const npc::DisjointPathSet& set) {
  json out = json::array();
  for (const auto& p : set.paths) out.push_back(npc::path_to_json(g, p));
  return out;
}

// Field from --m and the optional NPC_FIELD_POLY override (hex).
std::shared_ptr<const npc::FieldContext> make_field(unsigned m) {
  std::uint32_t poly = 0;
  if (const char* env = std::getenv("NPC_FIELD_POLY"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used, 16);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
      poly = static_cast<std::uint32_t>(value);
    } catch (const std::exception&) {
      throw UsageError(std::string("NPC_FIELD_POLY is not a hex number: ") + env);
    }
  } else {
    poly = npc::FieldContext::default_polynomial(m);
  }
  return std::make_shared<const npc::FieldContext>(m, poly);
}

std::size_t hex_digits(const npc::FieldContext& f) { return (f.bits() + 3) / 4; }

std::vector<npc::Symbol> parse_hex(const npc::FieldContext& f, const std::string& text) {
  std::string digits;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) digits.push_back(c);
  }
  const std::size_t width = hex_digits(f);
  if (digits.size() % width != 0) {
    throw UsageError("hex stream length is not a multiple of " + std::to_string(width));
  }
  std::vector<npc::Symbol> out;
  for (std::size_t i = 0; i < digits.size(); i += width) {
    const std::string chunk = digits.substr(i, width);
    if (chunk.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
      throw UsageError("invalid hex symbol '" + chunk + "'");
    }
    const auto value = std::stoul(chunk, nullptr, 16);
    if (!f.contains(static_cast<std::uint32_t>(value))) {
      throw UsageError("symbol '" + chunk + "' is outside the field");
    }
    out.push_back(static_cast<npc::Symbol>(value));
  }
  return out;
}

std::string format_hex(const npc::FieldContext& f, const std::vector<npc::Symbol>& symbols) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t width = hex_digits(f);
  std::string out;
  for (auto s : symbols) {
    for (std::size_t i = width; i-- > 0;) out.push_back(kDigits[(s >> (4 * i)) & 0xF]);
  }
  return out;
}

std::string hex_polynomial(std::uint32_t poly) {
  std::ostringstream out;
  out << "0x" << std::hex << poly;
  return out.str();
}

// ---- generate ----

struct GenerateArgs {
  std::vector<std::size_t> harary;
  std::vector<std::string> witness;
};

int cmd_generate(const GenerateArgs& args) {
  if (args.harary.empty() == args.witness.empty()) {
    throw UsageError("give exactly one of --harary or --minimal-witness");
  }
  if (!args.harary.empty()) {
    emit(npc::graph_to_json(npc::harary(args.harary[0], args.harary[1])));
    return kOk;
  }
  std::size_t n = 0;
  std::size_t k = 0;
  try {
    n = std::stoul(args.witness[0]);
    k = std::stoul(args.witness[1]);
  } catch (const std::exception&) {
    throw UsageError("--minimal-witness expects N K MODE");
  }
  auto inst = npc::build_minimal_witness(n, k, npc::parse_witness_mode(args.witness[2]));
  emit(npc::graph_to_json(inst.graph));
  return kOk;
}

// ---- connectivity ----

int cmd_connectivity(const std::string& graph_path) {
  const npc::Graph g = npc::load_graph(read_input(graph_path));
  json out;
  out["nodes"] = g.node_count();
  out["edges"] = g.edge_count();
  out["connected"] = npc::is_connected(g);
  out["min_degree"] = npc::min_degree(g);
  if (g.node_count() >= 2) {
    const auto ec = npc::edge_connectivity(g);
    out["edge_connectivity"] = ec.value;
    out["edge_cut"] = labels(g, ec.edges);
  } else {
    out["edge_connectivity"] = nullptr;
    out["edge_cut"] = json::array();
  }
  const auto vc = npc::node_connectivity(g);
  out["node_connectivity"] = vc.value;
  json cut = json::array();
  for (auto v : vc.nodes) cut.push_back(g.label(v));
  out["node_cut"] = cut;
  emit(out);
  return kOk;
}

// ---- feasibility ----

struct InstanceArgs {
  std::string graph = "-";
  std::string sources;
  std::string receivers;
  std::optional<std::size_t> k;
};

npc::ProtectionInstance load_instance(const InstanceArgs& args) {
  npc::Graph g = npc::load_graph(read_input(args.graph));
  auto sources = args.sources.empty() ? g.nodes_with_role(npc::Role::source)
                                      : resolve_nodes(g, args.sources);
  auto receivers = args.receivers.empty() ? g.nodes_with_role(npc::Role::receiver)
                                          : resolve_nodes(g, args.receivers);
  if (sources.empty() || receivers.empty()) {
    throw UsageError("no sources/receivers: pass --sources/--receivers or set node roles");
  }
  return npc::make_instance(std::move(g), std::move(sources), std::move(receivers), args.k);
}

struct FeasibilityArgs {
  InstanceArgs instance;
  bool relaxed = false;
  std::string pairing = "fixed";
  bool verify = false;
};

json report_json(const npc::ProtectionInstance& inst, const npc::FeasibilityReport& r) {
  const auto& g = inst.graph;
  json out;
  out["feasible"] = r.feasible;
  out["mode"] = std::string(npc::to_string(r.mode));
  out["k"] = inst.k;
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back({{"source", g.label(p.source)}, {"receiver", g.label(p.target)}});
  }
  out["pairs"] = pairs;
  out["paths"] = paths_json(g, r.paths);
  out["source_tree"] = labels(g, r.source_tree);
  out["receiver_tree"] = labels(g, r.receiver_tree);
  out["failure_reason"] =
      r.failure_reason ? json(std::string(npc::to_string(*r.failure_reason))) : json(nullptr);
  if (r.sufficient) {
    out["sufficient"] = {{"edge_connectivity", r.sufficient->edge_connectivity},
                         {"k_edge_connected", r.sufficient->k_edge_connected},
                         {"hamiltonian", std::string(npc::to_string(r.sufficient->hamiltonian))},
                         {"holds", std::string(npc::to_string(r.sufficient->holds()))}};
  }
  return out;
}

int cmd_feasibility(const FeasibilityArgs& args) {
  const auto inst = load_instance(args.instance);
  npc::FeasibilityOptions options;
  options.mode = args.relaxed ? npc::TreeMode::relaxed : npc::TreeMode::strict;
  if (args.pairing == "auto") {
    options.pairing = npc::Pairing::all;
  } else if (args.pairing != "fixed") {
    throw UsageError("--pairing must be auto or fixed");
  }
  const auto report = inst.sources.size() == 1 ? npc::check_single_source(inst, options)
                                               : npc::check_feasibility(inst, options);
  json out = report_json(inst, report);
  if (args.verify) {
    const auto problem = npc::verify_report(inst, report);
    out["verified"] = !problem.has_value();
    if (problem) {
      emit(out);
      std::cerr << "npc: witness failed verification: " << *problem << '\n';
      return kUsage;
    }
  }
  emit(out);
  return report.feasible ? kOk : kNegative;
}

// ---- bounds ----

int cmd_bounds(std::size_t n, std::size_t k) {
  auto attempt = [](auto&& f) -> json {
    try {
      return f();
    } catch (const std::invalid_argument&) {
      return nullptr;
    }
  };
  json out;
  out["n"] = n;
  out["k"] = k;
  out["single_source"] = attempt([&] { return npc::min_edges_single_source(n, k); });
  out["predetermined"] = attempt([&] { return npc::min_edges_predetermined(n, k); });
  out["arbitrary"] = attempt([&] { return npc::min_edges_arbitrary(n, k); });
  out["harary"] = attempt([&] { return npc::harary_lower_bound(n, k); });
  emit(out);
  return kOk;
}

// ---- encode / recover ----

struct CodeArgs {
  std::size_t k = 0;
  std::size_t t = 0;
  unsigned m = 8;
};

json code_json(const npc::NpcCode& code) {
  return {{"k", code.k()},
          {"t", code.t()},
          {"m", code.field().bits()},
          {"polynomial", hex_polynomial(code.field().polynomial())}};
}

int cmd_encode(const CodeArgs& args, const std::string& data_hex) {
  const auto code = npc::build_code(args.k, args.t, make_field(args.m));
  const auto data = parse_hex(code.field(), data_hex);
  const std::size_t d = code.data_width();
  if (data.empty() || data.size() % d != 0) {
    throw UsageError("data must hold a positive multiple of k - t = " + std::to_string(d) +
                     " symbols");
  }
  std::vector<npc::Symbol> out;
  for (std::size_t i = 0; i < data.size(); i += d) {
    npc::DataBlock block{{data.begin() + static_cast<std::ptrdiff_t>(i),
                          data.begin() + static_cast<std::ptrdiff_t>(i + d)}};
    const auto cw = npc::encode(code, block);
    out.insert(out.end(), cw.symbols.begin(), cw.symbols.end());
  }
  json doc = code_json(code);
  doc["blocks"] = data.size() / d;
  doc["codeword"] = format_hex(code.field(), out);
  emit(doc);
  return kOk;
}

int cmd_recover(const CodeArgs& args, const std::string& codeword_hex,
                const std::string& erased_list) {
  const auto code = npc::build_code(args.k, args.t, make_field(args.m));
  const auto symbols = parse_hex(code.field(), codeword_hex);
  if (symbols.empty() || symbols.size() % code.k() != 0) {
    throw UsageError("codeword must hold a positive multiple of k = " +
                     std::to_string(code.k()) + " symbols");
  }
  std::vector<std::size_t> erased;
  for (const auto& item : split_list(erased_list)) {
    try {
      erased.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw UsageError("bad erased position '" + item + "'");
    }
  }
  json doc = code_json(code);
  doc["blocks"] = symbols.size() / code.k();
  doc["erased"] = erased;
  std::vector<npc::Symbol> data;
  try {
    for (std::size_t i = 0; i < symbols.size(); i += code.k()) {
      npc::Codeword cw;
      cw.symbols.assign(symbols.begin() + static_cast<std::ptrdiff_t>(i),
                        symbols.begin() + static_cast<std::ptrdiff_t>(i + code.k()));
      for (auto pos : erased) cw.erase(pos);
      const auto block = npc::recover(code, cw);
      data.insert(data.end(), block.symbols.begin(), block.symbols.end());
    }
  } catch (const npc::CapacityExceededError& e) {
    doc["recovered"] = false;
    doc["error"] = "capacity exceeded";
    emit(doc);
    std::cerr << "npc: " << e.what() << '\n';
    return kNegative;
  } catch (const npc::InconsistentCodewordError& e) {
    doc["recovered"] = false;
    doc["error"] = "inconsistent codeword";
    emit(doc);
    std::cerr << "npc: " << e.what() << '\n';
    return kNegative;
  }
  doc["recovered"] = true;
  doc["data"] = format_hex(code.field(), data);
  emit(doc);
  return kOk;
}

// ---- simulate ----

struct SimulateArgs {
  InstanceArgs instance;
  CodeArgs code;
  std::string failures;
  std::optional<std::size_t> random;
  std::uint64_t seed = 1;
  std::size_t blocks = 16;
  std::string node;
  bool relaxed = false;
};

int cmd_simulate(SimulateArgs args) {
  if (!args.instance.k) args.instance.k = args.code.k;
  const auto inst = std::make_shared<const npc::ProtectionInstance>(load_instance(args.instance));
  const auto field = make_field(args.code.m);

  npc::FailureModel model;
  if (args.random) {
    if (!args.failures.empty()) throw UsageError("give --failures or --random, not both");
    model = npc::RandomFailures{*args.random, args.seed};
  } else {
    npc::ExplicitFailures chosen;
    for (const auto& item : split_list(args.failures)) {
      try {
        chosen.paths.push_back(std::stoul(item));
      } catch (const std::exception&) {
        throw UsageError("bad path id '" + item + "'");
      }
    }
    model = chosen;
  }

  auto code = npc::build_code(args.code.k, args.code.t, field);
  npc::Scenario sc{inst, code, npc::random_payload(code, args.blocks, args.seed), model,
                   args.relaxed ? npc::TreeMode::relaxed : npc::TreeMode::strict};

  npc::TrialReport report;
  try {
    if (!args.node.empty()) {
      auto node = inst->graph.find_node(args.node);
      if (!node) throw UsageError("unknown node '" + args.node + "'");
      report = npc::run_node_failure(sc, *node);
    } else {
      report = npc::run(sc);
    }
  } catch (const npc::InfeasibleInstanceError& e) {
    emit({{"status", "infeasible"}, {"recovered", false}});
    std::cerr << "npc: " << e.what() << '\n';
    return kNegative;
  }

  json out = code_json(code);
  out["seed"] = args.seed;
  out["blocks"] = report.blocks;
  out["provisioned"] = paths_json(inst->graph, report.provisioned);
  out["failed_paths"] = report.failed_paths;
  out["recovered"] = report.recovered;
  out["mismatches"] = report.mismatches;
  out["capacity_exceeded"] = report.capacity_exceeded;
  out["status"] = report.capacity_exceeded ? "capacity exceeded"
                  : report.recovered      ? "recovered"
                                          : "corrupted";
  emit(out);
  if (report.capacity_exceeded) std::cerr << "npc: capacity exceeded\n";
  return report.recovered ? kOk : kNegative;
}

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--graph", args.graph, "Graph JSON file, '-' for stdin");
  cmd->add_option("--sources", args.sources, "Comma-separated source ids (default: roles)");
  cmd->add_option("--receivers", args.receivers,
                  "Comma-separated receiver ids (default: roles)");
}

void add_code_options(CLI::App* cmd, CodeArgs& args) {
  cmd->add_option("--k", args.k, "Number of working paths")->required();
  cmd->add_option("--t", args.t, "Tolerated path failures")->required();
  cmd->add_option("--m", args.m, "Field is GF(2^m)")->check(CLI::Range(1, 16));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network protection code toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a graph as JSON");
  generate->add_option("--harary", gen.harary, "Harary graph H_{k,n}: N K")->expected(2);
  generate->add_option("--minimal-witness", gen.witness,
                       "Extremal instance: N K single_source|predetermined")
      ->expected(3);

  std::string conn_graph = "-";
  auto* connectivity = app.add_subcommand("connectivity", "Edge and node connectivity");
  connectivity->add_option("--graph", conn_graph, "Graph JSON file, '-' for stdin");

  FeasibilityArgs feas;
  auto* feasibility = app.add_subcommand("feasibility", "Decide deployment feasibility");
  add_instance_options(feasibility, feas.instance);
  feasibility->add_option("--k", feas.instance.k, "Working paths (default max(|S|,|R|))");
  feasibility->add_flag("--relaxed", feas.relaxed, "Let trees reuse path edges");
  feasibility->add_option("--pairing", feas.pairing, "fixed or auto");
  feasibility->add_flag("--verify", feas.verify, "Re-check the witness independently");

  std::size_t bn = 0;
  std::size_t bk = 0;
  auto* bounds = app.add_subcommand("bounds", "Minimum edge counts");
  bounds->add_option("--n", bn, "Node count")->required();
  bounds->add_option("--k", bk, "Working paths")->required();

  CodeArgs enc_code;
  std::string enc_data;
  auto* encode = app.add_subcommand("encode", "Encode a hex symbol stream");
  add_code_options(encode, enc_code);
  encode->add_option("--data", enc_data, "Hex data symbols")->required();

  CodeArgs rec_code;
  std::string rec_codeword;
  std::string rec_erased;
  auto* recover = app.add_subcommand("recover", "Recover data from a hex codeword stream");
  add_code_options(recover, rec_code);
  recover->add_option("--codeword", rec_codeword, "Hex codeword symbols")->required();
  recover->add_option("--erased", rec_erased, "Comma-separated erased positions");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Protection drill on a graph");
  add_instance_options(simulate, sim.instance);
  add_code_options(simulate, sim.code);
  simulate->add_option("--failures", sim.failures, "Comma-separated failed path ids");
  simulate->add_option("--random", sim.random, "Fail this many random paths");
  simulate->add_option("--seed", sim.seed, "Seed for payload and random failures");
  simulate->add_option("--blocks", sim.blocks, "Payload blocks")->check(CLI::PositiveNumber);
  simulate->add_option("--node", sim.node, "Fail this relay node instead");
  simulate->add_flag("--relaxed", sim.relaxed, "Provision with relaxed tree mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*connectivity) return cmd_connectivity(conn_graph);
    if (*feasibility) return cmd_feasibility(feas);
    if (*bounds) return cmd_bounds(bn, bk);
    if (*encode) return cmd_encode(enc_code, enc_data);
    if (*recover) return cmd_recover(rec_code, rec_codeword, rec_erased);
    if (*simulate) return cmd_simulate(sim);
  } catch (const std::exception& e) {
    std::cerr << "npc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
