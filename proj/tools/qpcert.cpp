// Command-line front end: builds reduction instances from DIMACS graphs,
// runs cross-validation sweeps, and certifies points of exported instances.
//
// Exit codes: 0 ok, 1 disagreement, 2 parse error, 3 parameter violation,
// 4 resource cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qpcert/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitParams = 3;
constexpr int kExitResource = 4;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qpcert::ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + out_path);
  out << text;
}

qpcert::RatVec parse_point(const std::string& s) {
  qpcert::RatVec x;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, ','))
    if (!cell.empty()) x.push_back(qpcert::parse_rat(cell));
  if (x.empty()) throw std::invalid_argument("empty point");
  return x;
}

struct ReduceArgs {
  std::string kind, graph_path, out_path;
  int r = 0;
  std::string t_str, c_str;
  int denom_log2 = 16;
};

int run_reduce(const ReduceArgs& a) {
  using namespace qpcert;
  std::string text = slurp(a.graph_path);
  Graph g = parse_dimacs(text);
  QuarticInstance inst = build_reduction(g, a.r);
  std::cout << "n " << g.order() << "\nk " << rat_str(inst.k) << "\n";
  if (a.kind == "quartic") {
    emit(serialize(inst), a.out_path);
    return kExitOk;
  }
  if (a.kind == "qp-orthant") {
    emit(serialize(orthant_qp(inst)), a.out_path);
    return kExitOk;
  }
  // bounded-qp: explicit t, or c from which the dyadic bound >= 3 c^n sqrt(n)
  Rat t;
  if (!a.t_str.empty()) {
    t = parse_rat(a.t_str);
  } else if (!a.c_str.empty()) {
    Rat c = parse_rat(a.c_str);
    if (c < 0) throw std::invalid_argument("c must be >= 0");
    t = dyadic_bound(c, g.order(), a.denom_log2);
  } else {
    throw std::invalid_argument("bounded-qp needs --t or --c");
  }
  if (t <= 0)
    throw std::invalid_argument("bound t must be a positive rational (c = 0 makes the "
                                "feasible set a point and carries no content)");
  std::cout << "bound " << rat_str(t) << "\n";
  emit(serialize(bounded_qp(inst, t)), a.out_path);
  return kExitOk;
}

struct VerifyArgs {
  std::string graph_path, out_path, format = "json";
  int r = 0;
  int all_n = 0;
  int sample_n = 0, sample_count = 0;
  std::uint64_t seed = 0;
  int cap = qpcert::kDefaultQpDimCap;
  bool timings = false;
};

std::string report_text(const qpcert::Json& j) {
  std::ostringstream out;
  out << "# " << j["tool"]["name"].get<std::string>() << " "
      << j["tool"]["version"].get<std::string>() << " scope=" << j["scope"].get<std::string>()
      << " seed=" << j["seed"].get<std::uint64_t>() << "\n";
  for (const auto& rec : j["records"]) {
    if (rec.contains("error")) {
      out << "n=" << rec["instance"]["n"].get<int>() << " r=" << rec["instance"]["r"].get<int>()
          << " ERROR " << rec["error"].get<std::string>() << "\n";
      continue;
    }
    out << "n=" << rec["instance"]["n"].get<int>() << " r=" << rec["instance"]["r"].get<int>()
        << " k=" << rec["instance"]["k"].get<std::string>()
        << " alpha=" << rec["alpha"]["value"].get<int>()
        << " local_min=" << (rec["answers"]["quartic_pd_path"].get<bool>() ? "yes" : "no")
        << " agree=" << (rec["agree"].get<bool>() ? "yes" : "NO") << "\n";
  }
  out << "instances=" << j["summary"]["instances"].get<int>()
      << " disagreements=" << j["summary"]["disagreements"].get<int>()
      << " complete=" << (j["summary"]["complete"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

int run_verify_cmd(const VerifyArgs& a) {
  using namespace qpcert;
  std::vector<std::pair<Graph, int>> instances;
  std::string scope, digest;
  if (!a.graph_path.empty()) {
    std::string text = slurp(a.graph_path);
    Graph g = parse_dimacs(text);
    if (a.r < 1 || a.r > g.order()) throw std::invalid_argument("verify: r out of range [1, n]");
    instances.emplace_back(g, a.r);
    scope = "graph:" + a.graph_path + " r=" + std::to_string(a.r);
    digest = fnv1a_digest(text);
  } else if (a.all_n > 0) {
    if (a.all_n > 5) throw std::invalid_argument("verify: exhaustive scope limited to n <= 5");
    for (int n = 1; n <= a.all_n; ++n)
      for (const Graph& g : enumerate_graphs(n))
        for (int r = 1; r <= n; ++r) instances.emplace_back(g, r);
    scope = "all-n:" + std::to_string(a.all_n);
    digest = fnv1a_digest(scope);
  } else if (a.sample_n > 0) {
    if (a.sample_count < 1) throw std::invalid_argument("verify: sample needs --count >= 1");
    for (const Graph& g : sample_graphs(a.sample_n, a.sample_count, a.seed))
      for (int r = 1; r <= a.sample_n; ++r) instances.emplace_back(g, r);
    scope = "sample-n:" + std::to_string(a.sample_n) + " count=" + std::to_string(a.sample_count);
    digest = fnv1a_digest(scope + " seed=" + std::to_string(a.seed));
  } else {
    throw std::invalid_argument("verify: pick a scope (--graph, --all-n, or --sample-n)");
  }

  VerifyReport rep = run_verify(instances, scope, digest, a.seed, a.cap, a.timings);
  emit(a.format == "text" ? report_text(rep.json) : rep.json.dump(2) + "\n", a.out_path);
  if (!rep.complete) return kExitResource;
  return rep.disagreements == 0 ? kExitOk : kExitDisagreement;
}

int run_oracle(const std::string& graph_path, const std::string& which) {
  using namespace qpcert;
  std::string text = slurp(graph_path);
  Graph g = parse_dimacs(text);
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kVersion}};
  j["input_digest"] = fnv1a_digest(text);
  j["which"] = which;
  j["n"] = g.order();
  if (which == "alpha") {
    StableSetResult res = alpha(g);
    j["value"] = res.size;
    j["witness"] = json_vertex_set(res.witness);
  } else if (which == "omega") {
    StableSetResult res = omega(g);
    j["value"] = res.size;
    j["witness"] = json_vertex_set(res.witness);
  } else {
    j["value"] = rat_str(ms_max(g));
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_certify(const std::string& instance_path, const std::string& point_str, int cap) {
  using namespace qpcert;
  std::string text = slurp(instance_path);
  QpInstance qp = parse_qp(text);
  RatVec x = parse_point(point_str);
  if (static_cast<int>(x.size()) != qp.feasible.dim)
    throw std::invalid_argument("certify: point dimension does not match the instance");
  PointCertification res = certify_qp_point(qp, x, cap);
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kVersion}};
  j["input_digest"] = fnv1a_digest(text);
  j["point"] = json_vec(x);
  j["objective"] = rat_str(qp.objective(x));
  j["verdict"] = res.local_min ? "LocalMin" : "NotLocalMin";
  j["reason"] = res.reason;
  j["certificate"] = json_certificate(res.cert);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_export(const std::string& instance_path, const std::string& as, const std::string& out_path) {
  using namespace qpcert;
  std::string text = slurp(instance_path);
  std::istringstream probe(text);
  std::string head;
  probe >> head;
  if (head == "quartic") {
    QuarticInstance inst = parse_quartic(text);
    emit(as == "qp" ? serialize(orthant_qp(inst)) : serialize(inst), out_path);
    return kExitOk;
  }
  if (head == "qp") {
    if (as == "quartic")
      throw std::invalid_argument("export: a qp instance cannot be lowered to quartic form");
    emit(serialize(parse_qp(text)), out_path);
    return kExitOk;
  }
  throw ParseError("export: unrecognized instance header '" + head + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and certification of local-minimizer instances "
               "derived from graphs"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "build an instance file from a DIMACS graph");
  reduce->add_option("--kind", ra.kind, "quartic | qp-orthant | bounded-qp")
      ->required()
      ->check(CLI::IsMember({"quartic", "qp-orthant", "bounded-qp"}));
  reduce->add_option("--graph,-g", ra.graph_path, "DIMACS .col file")->required();
  reduce->add_option("--r,-r", ra.r, "stable-set target size, 1 <= r <= n")->required();
  reduce->add_option("--t", ra.t_str, "explicit positive rational bound (bounded-qp)");
  reduce->add_option("--c", ra.c_str, "rational c >= 0; bound becomes the dyadic upper "
                                      "approximation of 3 c^n sqrt(n)");
  reduce->add_option("--denom-log2", ra.denom_log2, "dyadic bound denominator exponent");
  reduce->add_option("--output,-o", ra.out_path, "instance file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run cross-validation sweeps, emit a report");
  verify->add_option("--graph,-g", va.graph_path, "single DIMACS graph");
  verify->add_option("--r,-r", va.r, "r for the single-graph scope");
  verify->add_option("--all-n", va.all_n, "all labeled graphs and all r for n <= N (N <= 5)");
  verify->add_option("--sample-n", va.sample_n, "random labeled graphs on this many vertices");
  verify->add_option("--count", va.sample_count, "sample size");
  verify->add_option("--seed", va.seed, "sample seed (reports are byte-stable per seed)");
  verify->add_option("--cap", va.cap, "QP dimension cap");
  verify->add_option("--format", va.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timings", va.timings, "include per-record timings (breaks determinism)");
  verify->add_option("--output,-o", va.out_path, "report file (default stdout)");

  std::string oracle_graph, oracle_which;
  auto* oracle = app.add_subcommand("oracle", "alpha / omega / Motzkin-Straus value of a graph");
  oracle->add_option("--graph,-g", oracle_graph)->required();
  oracle->add_option("--which", oracle_which)
      ->required()
      ->check(CLI::IsMember({"alpha", "omega", "ms"}));

  std::string cert_instance, cert_point;
  int cert_cap = qpcert::kDefaultQpDimCap;
  auto* certify = app.add_subcommand("certify", "exact local-minimality verdict at a point");
  certify->add_option("--instance", cert_instance, "qp instance file")->required();
  certify->add_option("--point", cert_point, "comma-separated rationals, e.g. 1,0 or 1/2,1/2")
      ->required();
  certify->add_option("--cap", cert_cap, "dimension cap");

  std::string exp_instance, exp_as, exp_out;
  auto* exp = app.add_subcommand("export", "re-emit an instance file (optionally converted)");
  exp->add_option("--instance", exp_instance)->required();
  exp->add_option("--as", exp_as, "qp | quartic")->check(CLI::IsMember({"qp", "quartic"}));
  exp->add_option("--output,-o", exp_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) return run_reduce(ra);
    if (*verify) return run_verify_cmd(va);
    if (*oracle) return run_oracle(oracle_graph, oracle_which);
    if (*certify) return run_certify(cert_instance, cert_point, cert_cap);
    if (*exp) return run_export(exp_instance, exp_as, exp_out);
  } catch (const qpcert::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qpcert::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitOk;
}
