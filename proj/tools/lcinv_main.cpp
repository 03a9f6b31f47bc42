#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcinv/densecheck.hpp"
#include "lcinv/lcequiv.hpp"
#include "lcinv/reference.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success / positive verdict, 1 negative verdict (invalid
// stabilizer, not equivalent, distinct), 2 input or usage error, 3 budget
// exceeded.
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Budgets {
  std::uint32_t enum_rn = lcinv::default_tuple_enum_budget;
  std::uint32_t brute_n = lcinv::default_brute_force_max_n;
  std::uint32_t constructive_n = lcinv::default_constructive_max_n;
  std::uint64_t fingerprint = lcinv::default_fingerprint_budget;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lcinv::parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lcinv::Stabilizer load_stabilizer(const std::string& path, bool must_be_valid) {
  const lcinv::Stabilizer s = lcinv::parse_stabilizer_text(read_file(path));
  if (must_be_valid) {
    const lcinv::ValidationReport rep = lcinv::validate(s);
    if (!rep.ok())
      throw lcinv::parse_error("stabilizer in " + path + " is " + rep.to_string());
  }
  return s;
}

lcinv::OmegaTuple load_omega(const std::string& inline_spec, const std::string& file,
                             std::uint32_t n) {
  if (!inline_spec.empty() && !file.empty())
    throw lcinv::parse_error("give either --omega or --omega-file, not both");
  if (!inline_spec.empty()) return lcinv::parse_omega_spec(inline_spec, n);
  if (!file.empty()) return lcinv::parse_omega_spec(read_file(file), n);
  throw lcinv::parse_error("an omega specification is required (--omega or --omega-file)");
}

json omega_to_json(const lcinv::OmegaTuple& omega) {
  json singles = json::array();
  for (std::uint32_t k = 0; k < omega.r(); ++k) singles.push_back(omega.single(k).indices());
  json pairs = json::array();
  for (std::uint32_t k = 0; k < omega.r(); ++k)
    for (std::uint32_t l = k + 1; l < omega.r(); ++l)
      pairs.push_back({{"k", k + 1}, {"l", l + 1}, {"set", omega.pair(k, l).indices()}});
  return {{"r", omega.r()}, {"singles", singles}, {"pairs", pairs}};
}

json op_to_json(const lcinv::LocalCliffordOp& q) {
  json factors = json::array();
  for (const lcinv::GL2& f : q.factors) factors.push_back({f.a, f.b, f.c, f.d});
  return factors;
}

void emit(const std::string& format, const json& structured, const std::string& text) {
  if (format == "json")
    std::cout << structured.dump() << "\n";
  else
    std::cout << text;
}

int run_validate(const std::string& format, const std::string& path) {
  const lcinv::Stabilizer s = lcinv::parse_stabilizer_text(read_file(path));
  const lcinv::ValidationReport rep = lcinv::validate(s);
  json violations = json::array();
  if (rep.rank < rep.n)
    violations.push_back({{"type", "rank"}, {"rank", rep.rank}, {"expected", rep.n}});
  for (const auto& [k, l] : rep.anticommuting)
    violations.push_back({{"type", "anticommute"}, {"generators", {k, l}}});
  emit(format,
       {{"command", "validate"}, {"n", rep.n}, {"valid", rep.ok()}, {"violations", violations}},
       rep.to_string() + "\n");
  return rep.ok() ? 0 : kExitNegative;
}

int run_invariant(const std::string& format, const std::string& path, const std::string& kind,
                  const std::string& omega_spec, const std::string& omega_file,
                  const Budgets& budgets) {
  const lcinv::Stabilizer s = load_stabilizer(path, true);
  const lcinv::OmegaTuple omega = load_omega(omega_spec, omega_file, s.qubits());
  const std::uint64_t value = kind == "T" ? lcinv::t_invariant(s, omega, budgets.enum_rn)
                                          : lcinv::v_dim_invariant(s, omega);
  emit(format,
       {{"command", "invariant"},
        {"n", s.qubits()},
        {"r", omega.r()},
        {"omega", omega_to_json(omega)},
        {"kind", kind},
        {"value", value}},
       std::to_string(value) + "\n");
  return 0;
}

int run_fingerprint(const std::string& format, const std::string& path, std::uint32_t r,
                    const std::string& out_path, const Budgets& budgets) {
  const lcinv::Stabilizer s = load_stabilizer(path, true);
  const lcinv::Fingerprint fp = lcinv::fingerprint(s, r, budgets.fingerprint);

  std::string payload;
  if (format == "json") {
    json entries = json::array();
    for (std::size_t i = 0; i < fp.size(); ++i)
      entries.push_back({fp.key_masks(i), fp.value(i)});
    const json doc = {{"command", "fingerprint"}, {"format_version", 1}, {"n", fp.n()},
                      {"r", fp.r()},              {"entries", entries}};
    payload = doc.dump() + "\n";
  } else {
    payload = fp.to_text();
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lcinv::parse_error("cannot write " + out_path);
    out << payload;
  }
  return 0;
}

int run_equiv(const std::string& format, const std::string& path1, const std::string& path2,
              const std::string& method, std::uint32_t r, bool all_witnesses,
              const Budgets& budgets) {
  const lcinv::Stabilizer s1 = load_stabilizer(path1, true);
  const lcinv::Stabilizer s2 = load_stabilizer(path2, true);
  if (s1.qubits() != s2.qubits())
    throw lcinv::parse_error("qubit counts differ: n=" + std::to_string(s1.qubits()) + " vs n=" +
                             std::to_string(s2.qubits()));
  if (all_witnesses && method != "brute")
    throw lcinv::parse_error("--all-witnesses requires --method brute");

  if (all_witnesses) {
    const std::vector<lcinv::LocalCliffordOp> all =
        lcinv::brute_force_check_all(s1, s2, budgets.brute_n);
    json qs = json::array();
    std::string text = all.empty() ? "NOT-EQUIVALENT\n"
                                   : "EQUIVALENT\nwitnesses: " + std::to_string(all.size()) + "\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      qs.push_back(op_to_json(all[i]));
      if (i > 0) text += "--\n";
      text += all[i].to_string();
    }
    emit(format,
         {{"command", "equiv"},
          {"method", method},
          {"equivalent", !all.empty()},
          {"q_all", qs}},
         text);
    return all.empty() ? kExitNegative : 0;
  }

  if (method == "fingerprint") {
    const lcinv::FingerprintVerdict v =
        lcinv::fingerprint_check(s1, s2, r, budgets.fingerprint);
    json doc = {{"command", "equiv"}, {"method", method}, {"r", r}, {"equal_at_r", v.equal}};
    std::string text;
    if (v.equal) {
      text = "EQUAL-AT-" + std::to_string(r) + "\n";
    } else {
      text = "DISTINCT\nwitness: " + lcinv::format_omega_spec(*v.witness) + "\n";
      doc["witness"] = omega_to_json(*v.witness);
      doc["witness_masks"] = v.witness->masks();
    }
    emit(format, doc, text);
    return v.equal ? 0 : kExitNegative;
  }

  const std::optional<lcinv::LocalCliffordOp> q =
      method == "brute" ? lcinv::brute_force_check(s1, s2, budgets.brute_n)
                        : lcinv::constructive_check(s1, s2, budgets.constructive_n);
  json doc = {{"command", "equiv"}, {"method", method}, {"equivalent", q.has_value()}};
  std::string text;
  if (q) {
    doc["q"] = op_to_json(*q);
    text = "EQUIVALENT\n" + q->to_string();
  } else {
    text = "NOT-EQUIVALENT\n";
  }
  emit(format, doc, text);
  return q ? 0 : kExitNegative;
}

lcinv::GF2Matrix named_graph_adjacency(const std::string& name, std::uint32_t n,
                                       std::uint64_t seed) {
  lcinv::GF2Matrix adj(n, n);
  auto edge = [&](std::uint32_t i, std::uint32_t j) {
    adj.set(i, j, true);
    adj.set(j, i, true);
  };
  if (name == "empty") {
  } else if (name == "path") {
    for (std::uint32_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
  } else if (name == "cycle") {
    for (std::uint32_t i = 0; i + 1 < n; ++i) edge(i, i + 1);
    if (n > 2) edge(n - 1, 0);
  } else if (name == "complete") {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) edge(i, j);
  } else if (name == "random") {
    std::mt19937_64 rng(seed);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        if (rng() & 1) edge(i, j);
  } else {
    throw lcinv::parse_error("unknown graph \"" + name + "\"");
  }
  return adj;
}

int run_generate(const std::string& format, const std::string& kind, const std::string& graph,
                 const std::string& graph_file, std::uint32_t n, std::uint64_t seed,
                 std::uint32_t count, const std::string& out_dir) {
  std::optional<lcinv::GF2Matrix> fixed_adjacency;
  if (!graph_file.empty()) {
    if (kind != "graph") throw lcinv::parse_error("--graph-file requires --kind graph");
    fixed_adjacency = lcinv::GF2Matrix::parse_text(read_file(graph_file));
    n = static_cast<std::uint32_t>(fixed_adjacency->rows());
  }
  if (n < 1) throw lcinv::parse_error("generate: n must be >= 1");
  std::filesystem::create_directories(out_dir);
  json files = json::array();
  std::string text;
  for (std::uint32_t i = 0; i < count; ++i) {
    lcinv::Stabilizer s =
        kind == "graph"
            ? lcinv::graph_state(fixed_adjacency ? *fixed_adjacency
                                                 : named_graph_adjacency(graph, n, seed + i))
            : lcinv::random_stabilizer(n, seed + i);
    char name[32];
    std::snprintf(name, sizeof(name), "%s_%03u.stab", kind.c_str(), i);
    const std::string path = (std::filesystem::path(out_dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lcinv::parse_error("cannot write " + path);
    out << lcinv::format_stabilizer_text(s);
    files.push_back(path);
    text += path + "\n";
  }
  emit(format, {{"command", "generate"}, {"files", files}}, text);
  return 0;
}

int run_dense_check(const std::string& format, const std::string& path,
                    const std::string& omega_spec, const std::string& omega_file) {
  const lcinv::Stabilizer s = load_stabilizer(path, true);
  const lcinv::OmegaTuple omega = load_omega(omega_spec, omega_file, s.qubits());
  const double trace = lcinv::lu_trace_invariant(s, omega);
  const std::uint64_t dim = lcinv::v_dim_invariant(s, omega);
  const double scale = static_cast<double>(std::uint64_t{1} << dim);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "trace = %.12g\n2^dim = %" PRIu64 "\nratio = %.12g\n", trace,
                std::uint64_t{1} << dim, trace / scale);
  emit(format,
       {{"command", "dense-check"},
        {"n", s.qubits()},
        {"trace", trace},
        {"v_dim", dim},
        {"two_pow_v_dim", std::uint64_t{1} << dim},
        {"ratio", trace / scale}},
       buf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Clifford equivalence toolkit for stabilizer states"};
  app.require_subcommand(1);

  std::string format = "text";
  Budgets budgets;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget-enum", budgets.enum_rn, "Max r*n for tuple enumeration")
      ->capture_default_str();
  app.add_option("--budget-brute-n", budgets.brute_n, "Max n for the brute-force search")
      ->capture_default_str();
  app.add_option("--budget-constructive-n", budgets.constructive_n,
                 "Max n for the constructive search")
      ->capture_default_str();
  app.add_option("--budget-fingerprint", budgets.fingerprint, "Max fingerprint entries")
      ->capture_default_str();

  std::string path, path2, omega_spec, omega_file, out_path;
  std::string kind, graph = "random", graph_file, method;
  std::uint32_t r = 1, n = 0, count = 1;
  std::uint64_t seed = 0;
  bool all_witnesses = false;

  CLI::App* validate = app.add_subcommand("validate", "Check a stabilizer file");
  validate->add_option("path", path)->required();

  CLI::App* invariant = app.add_subcommand("invariant", "Evaluate one invariant");
  invariant->add_option("path", path)->required();
  invariant->add_option("--kind", kind, "T (exact-support count) or V (subset-support dimension)")
      ->required()
      ->check(CLI::IsMember({"T", "V"}));
  invariant->add_option("--omega", omega_spec, "Inline omega spec");
  invariant->add_option("--omega-file", omega_file, "File with an omega spec");

  CLI::App* fingerprint = app.add_subcommand("fingerprint", "Canonical invariant sweep");
  fingerprint->add_option("path", path)->required();
  fingerprint->add_option("--r", r, "Tuple arity")->required();
  fingerprint->add_option("--out", out_path, "Write to a file instead of stdout");

  CLI::App* equiv = app.add_subcommand("equiv", "Decide local Clifford equivalence");
  equiv->add_option("path1", path)->required();
  equiv->add_option("path2", path2)->required();
  equiv->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"brute", "constructive", "fingerprint"}));
  equiv->add_option("--r", r, "Arity for the fingerprint method");
  equiv->add_flag("--all-witnesses", all_witnesses,
                  "With --method brute: list every witness, not just the first");

  CLI::App* generate = app.add_subcommand("generate", "Write a test corpus");
  generate->add_option("--kind", kind)->required()->check(CLI::IsMember({"graph", "random"}));
  generate->add_option("--graph", graph, "Graph for --kind graph")
      ->check(CLI::IsMember({"path", "cycle", "complete", "empty", "random"}));
  generate->add_option("--graph-file", graph_file,
                       "0/1 adjacency matrix file for --kind graph (overrides --n)");
  generate->add_option("--n", n, "Qubit count");
  generate->add_option("--seed", seed)->capture_default_str();
  generate->add_option("--count", count)->capture_default_str();
  generate->add_option("--out-dir", out_path)->required();

  CLI::App* dense = app.add_subcommand("dense-check", "Dense partial-trace cross-check (r=2)");
  dense->add_option("path", path)->required();
  dense->add_option("--omega", omega_spec, "Inline omega spec");
  dense->add_option("--omega-file", omega_file, "File with an omega spec");

  for (CLI::App* sub : {validate, invariant, fingerprint, equiv, generate, dense})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (validate->parsed()) return run_validate(format, path);
    if (invariant->parsed())
      return run_invariant(format, path, kind, omega_spec, omega_file, budgets);
    if (fingerprint->parsed()) return run_fingerprint(format, path, r, out_path, budgets);
    if (equiv->parsed()) return run_equiv(format, path, path2, method, r, all_witnesses, budgets);
    if (generate->parsed())
      return run_generate(format, kind, graph, graph_file, n, seed, count, out_path);
    if (dense->parsed()) return run_dense_check(format, path, omega_spec, omega_file);
  } catch (const lcinv::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const lcinv::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
