#include "graphdiam/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "graphdiam/constructions.hpp"
#include "graphdiam/dense.hpp"
#include "graphdiam/diam_sparse.hpp"
#include "graphdiam/ecc_approx.hpp"
#include "graphdiam/edge_list_io.hpp"
#include "graphdiam/exact.hpp"
#include "graphdiam/ov.hpp"
#include "graphdiam/random.hpp"
#include "graphdiam/st_diameter.hpp"

namespace graphdiam::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kMethods = {"exact",      "ecc2",      "ecc2d",     "ecc-folk", "radius",
                                           "diam-folk",  "diam-lin",  "diam-dense", "ecc-dense", "st3",
                                           "st2",        "st2true",   "st-equiv",  "spanner-compose"};

const std::vector<std::string> kConstructions = {"kov", "5v8", "6v10", "3km4", "8v13", "ecc-und", "ecc-dir"};

struct RunOptions {
  std::string method;
  std::string input;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  std::string tau = "1/4";
  std::string via = "ecc2";
  std::string inner = "ecc2";
  bool json = false;
  bool no_timing = false;
};

struct GenOptions {
  std::string construction;
  int k = 0;
  int n = 0;
  int d = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string out;
  std::uint64_t L = 1;
};

struct VerifyOptions {
  std::string graph;
  std::string meta;
};

Json dist_json(Dist d) { return d == kUnreachable ? Json(nullptr) : Json(d); }

// A report is an ordered list of fields printed either as JSON or as text.
class Report {
public:
  void add(const std::string& key, Json value) { fields_[key] = std::move(value); }
  void add_dist(const std::string& key, Dist d) { add(key, dist_json(d)); }
  void add_dists(const std::string& key, const std::vector<Dist>& ds) {
    Json arr = Json::array();
    for (Dist d : ds) arr.push_back(dist_json(d));
    add(key, std::move(arr));
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      out << fields_.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : fields_.items()) {
      out << key << ":";
      if (value.is_array()) {
        for (const auto& x : value) out << ' ' << text(x);
      } else {
        out << ' ' << text(value);
      }
      out << '\n';
    }
  }

private:
  static std::string text(const Json& v) {
    if (v.is_null()) return "inf";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  Json fields_ = Json::object();
};

std::vector<Vertex> load_set(const std::string& path, const Graph& g) {
  std::vector<Vertex> s = read_vertex_set(std::filesystem::path(path));
  for (Vertex v : s) {
    if (v >= g.vertex_count()) {
      throw ParseError(0, path + ": vertex " + std::to_string(v) + " is not in the graph");
    }
  }
  if (s.empty()) throw PreconditionError(path + ": vertex set is empty");
  return s;
}

std::vector<Dist> inner_values(const std::string& inner, const Graph& h, std::uint64_t seed, Ratio tau) {
  if (inner == "ecc2") return ecc_2approx(h, seed).values;
  if (inner == "ecc2d") return ecc_2plusdelta(h, tau, seed).estimate.values;
  if (inner == "ecc-folk") return ecc_folklore_3approx(h).values;
  if (inner == "exact") return exact_eccentricities(h);
  if (inner == "diam-folk") return {diam_folklore_2approx(h).value};
  if (inner == "diam-lin") return {diam_linear_lessthan2(h).value};
  throw UsageError("unknown inner method '" + inner + "'");
}

void run_method(const RunOptions& o, const Graph& g, Report& r) {
  const bool st = o.method == "st3" || o.method == "st2" || o.method == "st2true" || o.method == "st-equiv";
  std::vector<Vertex> S, T;
  if (st && o.sets.size() != 2) throw UsageError(o.method + " needs --sets S.txt T.txt");
  if (o.sets.size() == 2) {
    S = load_set(o.sets[0], g);
    T = load_set(o.sets[1], g);
  }
  Ratio tau{1, 4};
  try {
    tau = parse_ratio(o.tau);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--tau: ") + e.what());
  }

  const std::string& m = o.method;
  if (m == "exact") {
    if (!S.empty()) {
      r.add_dist("estimate", exact_st_diameter(g, S, T));
    } else {
      const auto ecc = exact_eccentricities(g);
      r.add_dist("estimate", *std::max_element(ecc.begin(), ecc.end()));
      r.add_dists("estimates", ecc);
    }
  } else if (m == "ecc2") {
    r.add("seed", o.seed);
    r.add_dists("estimates", ecc_2approx(g, o.seed).values);
  } else if (m == "ecc2d") {
    r.add("seed", o.seed);
    r.add("tau", std::to_string(tau.num) + "/" + std::to_string(tau.den));
    r.add_dists("estimates", ecc_2plusdelta(g, tau, o.seed).estimate.values);
  } else if (m == "ecc-folk") {
    r.add_dists("estimates", ecc_folklore_3approx(g).values);
  } else if (m == "radius") {
    RadiusMethod rm;
    if (o.via == "ecc2") {
      rm = RadiusMethod::kTwoApprox;
    } else if (o.via == "ecc2d") {
      rm = RadiusMethod::kTwoPlusDelta;
    } else {
      throw UsageError("--via must be ecc2 or ecc2d");
    }
    const RadiusEstimate est = source_radius(g, rm, o.seed, tau);
    r.add("seed", o.seed);
    r.add("via", o.via);
    r.add_dist("estimate", est.value);
    r.add("center", est.center);
  } else if (m == "diam-folk" || m == "diam-lin") {
    const DiameterEstimate est = m == "diam-folk" ? diam_folklore_2approx(g) : diam_linear_lessthan2(g);
    r.add_dist("estimate", est.value);
    r.add("center", est.center);
  } else if (m == "diam-dense") {
    r.add("seed", o.seed);
    r.add_dist("estimate", diam_dense_32(g, o.seed).value);
  } else if (m == "ecc-dense") {
    r.add("seed", o.seed);
    r.add_dists("estimates", ecc_dense_53(g, o.seed).estimate.values);
  } else if (m == "st3" || m == "st2" || m == "st2true") {
    StEstimate est;
    if (m == "st3") {
      est = st_3approx(g, S, T);
    } else if (!g.unit_weights() && g.edge_count() > 0) {
      est = st_2approx_weighted(g, S, T, o.seed, m == "st2true");
    } else if (m == "st2") {
      est = st_2approx_sqrt(g, S, T, o.seed);
    } else {
      est = st_2approx_true(g, S, T, o.seed);
    }
    if (m != "st3") r.add("seed", o.seed);
    r.add_dist("estimate", est.value);
    r.add("s", est.s);
    r.add("t", est.t);
  } else if (m == "st-equiv") {
    r.add_dist("estimate", st_via_diameter(g, S, T, [](const Graph& h) { return exact_diameter(h); }));
  } else if (m == "spanner-compose") {
    const std::string inner = o.inner;
    r.add("seed", o.seed);
    r.add("inner", inner);
    const auto values = approx_on_spanner(
        g, [&](const Graph& h, std::uint64_t seed) { return inner_values(inner, h, seed, tau); }, o.seed);
    if (inner == "diam-folk" || inner == "diam-lin") {
      r.add_dist("estimate", values.front());
    } else {
      r.add_dists("estimates", values);
    }
  } else {
    throw UsageError("unknown method '" + m + "'");
  }
}

int cmd_run(const RunOptions& o, std::ostream& out) {
  const Graph g = read_edge_list(std::filesystem::path(o.input));
  Report r;
  r.add("method", o.method);
  r.add("n", g.vertex_count());
  r.add("m", g.edge_count());
  const auto start = std::chrono::steady_clock::now();
  run_method(o, g, r);
  const auto stop = std::chrono::steady_clock::now();
  if (!o.no_timing) r.add("millis", std::chrono::duration<double, std::milli>(stop - start).count());
  r.print(out, o.json);
  return kOk;
}

int default_k(const std::string& construction) {
  if (construction == "5v8" || construction == "6v10") return 3;
  if (construction == "8v13") return 4;
  if (construction == "ecc-dir") return 2;
  return 0;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  int k = o.k;
  const int fixed = default_k(o.construction);
  if (k == 0) k = fixed;
  if (k == 0) throw UsageError("--k is required for " + o.construction);
  if (fixed != 0 && k != fixed) {
    throw UsageError(o.construction + " needs k = " + std::to_string(fixed) + ", got " + std::to_string(k));
  }
  const int min_k = o.construction == "3km4" ? 3 : 2;
  if (k < min_k) throw UsageError(o.construction + " needs k >= " + std::to_string(min_k));
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.d < 2) throw UsageError("--d must be at least 2");
  if (o.construction == "ecc-dir" && o.L < 1) throw UsageError("--L must be at least 1");
  OVMode mode;
  try {
    mode = parse_ov_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const OVInstance inst = gen_ov(k, o.n, o.d, mode, o.seed);
  const ConstructionOutput c = build_construction(o.construction, inst, o.L);
  const std::filesystem::path graph_path = o.out + ".graph";
  const std::filesystem::path meta_path = o.out + ".meta.json";
  write_edge_list(graph_path, c.graph);
  std::ofstream meta(meta_path);
  if (!meta) throw GraphError("cannot write " + meta_path.string());
  meta << metadata_to_json(c.meta).dump(2) << '\n';
  out << "wrote " << graph_path.string() << " (" << c.graph.vertex_count() << " vertices, "
      << c.graph.edge_count() << " edges) and " << meta_path.string() << '\n';
  return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Graph g = read_edge_list(std::filesystem::path(o.graph));
  std::ifstream in(o.meta);
  if (!in) throw MetadataError("cannot open " + o.meta);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MetadataError(std::string("metadata is not JSON: ") + e.what());
  }
  const ConstructionMeta meta = metadata_from_json(j);
  bool all = true;
  for (const BoundCheck& c : verify_construction(g, meta)) {
    out << (c.pass ? "PASS " : "FAIL ") << c.description << '\n';
    all = all && c.pass;
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph diameter and eccentricity estimators", "graphdiam"};
  app.require_subcommand(1);

  RunOptions ro;
  auto* run_cmd = app.add_subcommand("run", "Run an estimator or exact oracle on a graph");
  run_cmd->add_option("method", ro.method, "Method")->required()->check(CLI::IsMember(kMethods));
  run_cmd->add_option("--input", ro.input, "Edge-list file")->required();
  run_cmd->add_option("--sets", ro.sets, "S and T vertex-set files")->expected(2);
  run_cmd->add_option("--seed", ro.seed, "Random seed");
  run_cmd->add_option("--tau", ro.tau, "Rational P/Q in (0,1) for ecc2d");
  run_cmd->add_option("--via", ro.via, "Estimator behind radius: ecc2 or ecc2d");
  run_cmd->add_option("--inner", ro.inner, "Estimator run on the spanner");
  run_cmd->add_flag("--json", ro.json, "One JSON object per line");
  run_cmd->add_flag("--no-timing", ro.no_timing, "Omit wall time");

  GenOptions go;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a lower-bound construction");
  gen_cmd->add_option("--construction", go.construction)->required()->check(CLI::IsMember(kConstructions));
  gen_cmd->add_option("--k", go.k, "Number of vector sets");
  gen_cmd->add_option("--n", go.n, "Vectors per set")->required();
  gen_cmd->add_option("--d", go.d, "Dimension")->required();
  gen_cmd->add_option("--mode", go.mode, "unsat or planted")->required();
  gen_cmd->add_option("--seed", go.seed, "Random seed");
  gen_cmd->add_option("--out", go.out, "Output prefix")->required();
  gen_cmd->add_option("--L", go.L, "Path length for ecc-dir");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Check a construction's promised bound exactly");
  verify_cmd->add_option("--graph", vo.graph)->required();
  verify_cmd->add_option("--meta", vo.meta)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(ro, out);
    if (*gen_cmd) return cmd_gen(go, out);
    return cmd_verify(vo, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const MetadataError& e) {
    err << "metadata error: " << e.what() << '\n';
    return kParse;
  } catch (const SizeGuardError& e) {
    err << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const GraphError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace graphdiam::cli
