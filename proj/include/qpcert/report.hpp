#pragma once

#include <chrono>
#include <cstdio>

#include <json.hpp>

#include "qpcert/localmin.hpp"
#include "qpcert/version.hpp"

namespace qpcert {

using Json = nlohmann::ordered_json;

inline std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json json_vec(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& x : v) arr.push_back(rat_str(x));
  return arr;
}

inline Json json_vertex_set(const VertexSet& s) {
  Json arr = Json::array();
  for (int v : s) arr.push_back(v + 1);
  return arr;
}

inline Json json_edges(const Graph& g) {
  Json arr = Json::array();
  for (auto [u, v] : g.edges()) arr.push_back(Json::array({u + 1, v + 1}));
  return arr;
}

inline Json json_certificate(const LocalMinCertificate& cert) {
  Json j;
  switch (cert.kind) {
    case LocalMinCertificate::OriginPD:
      j["kind"] = "origin-pd";
      j["simplex_min"] = rat_str(cert.value);
      break;
    case LocalMinCertificate::KktConeCopositive:
      j["kind"] = "kkt-cone-copositive";
      j["multipliers"] = json_vec(cert.multipliers);
      j["cone_min"] = rat_str(cert.value);
      break;
    case LocalMinCertificate::DescentSequence:
      j["kind"] = "descent-direction";
      j["direction"] = json_vec(cert.direction);
      j["value"] = rat_str(cert.value);
      break;
    case LocalMinCertificate::SupportAnalysis:
      j["kind"] = "support-analysis";
      j["negative_witness_y"] = json_vec(cert.witness);
      j["witness_value"] = rat_str(cert.value);
      j["second_order_supports"] = cert.supports.size();
      break;
  }
  return j;
}

// One cross-validated record: the alpha-oracle path, the exact-QP paths, and
// their agreement bits. Every record carries at least two independent
// decision routes.
inline Json verify_instance(const Graph& g, int r, int cap = kDefaultQpDimCap) {
  QuarticInstance inst = build_reduction(g, r);
  StableSetResult a = alpha(g);
  const bool alpha_path = a.size <= r - 1;  // alpha(G) < k

  ExistenceResult quartic = has_local_min_quartic(inst, cap);
  ExistenceResult orthant = has_local_min_qp_orthant(g, r, cap);
  CopositivityVerdict cop = is_copositive(inst.M, cap);
  PointCertification origin =
      certify_qp_point(orthant_qp(inst), RatVec(g.order(), Rat(0)), cap);
  auto supports = enumerate_sos_supports(inst);

  Json rec;
  rec["instance"] = {{"n", g.order()},
                     {"edges", json_edges(g)},
                     {"r", r},
                     {"k", rat_str(inst.k)}};
  rec["question"] = "does the quartic p (equivalently the QP over the orthant) have a local minimizer";
  rec["answers"] = {{"alpha_path", alpha_path},
                    {"quartic_pd_path", quartic.answer},
                    {"orthant_qp_path", orthant.answer},
                    {"copositive", cop.copositive},
                    {"origin_local_min", origin.local_min},
                    {"second_order_supports", supports.size()}};
  rec["alpha"] = {{"value", a.size}, {"witness", json_vertex_set(a.witness)}};
  Json checks;
  checks["alpha_vs_quartic"] = alpha_path == quartic.answer;
  checks["alpha_vs_orthant"] = alpha_path == orthant.answer;
  checks["copositivity_vs_origin_certificate"] = cop.copositive == origin.local_min;
  checks["no_nonzero_second_order_support"] = supports.empty();
  rec["oracle_crosschecks"] = checks;
  bool agree = true;
  for (const auto& [key, val] : checks.items()) agree = agree && val.get<bool>();
  rec["agree"] = agree;
  rec["certificate"] = json_certificate(quartic.cert);
  return rec;
}

struct VerifyReport {
  Json json;
  int disagreements = 0;
  bool complete = true;
};

// scope_desc is included verbatim; instances must already be ordered by a
// deterministic key so reports are byte-stable.
// Timings are opt-in: they break the byte-identical-report contract, so the
// default report carries none.
inline VerifyReport run_verify(const std::vector<std::pair<Graph, int>>& instances,
                               const std::string& scope_desc, const std::string& input_digest,
                               std::uint64_t seed, int cap = kDefaultQpDimCap,
                               bool timings = false) {
  VerifyReport rep;
  rep.json["tool"] = {{"name", kToolName}, {"version", kVersion}};
  rep.json["scope"] = scope_desc;
  rep.json["input_digest"] = input_digest;
  rep.json["seed"] = seed;
  Json records = Json::array();
  for (const auto& [g, r] : instances) {
    try {
      auto t0 = std::chrono::steady_clock::now();
      Json rec = verify_instance(g, r, cap);
      if (timings)
        rec["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
      if (!rec["agree"].get<bool>()) ++rep.disagreements;
      records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      Json rec;
      rec["instance"] = {{"n", g.order()}, {"edges", json_edges(g)}, {"r", r}};
      rec["error"] = e.what();
      rep.complete = false;
      records.push_back(std::move(rec));
    }
  }
  rep.json["records"] = std::move(records);
  rep.json["summary"] = {{"instances", instances.size()},
                         {"disagreements", rep.disagreements},
                         {"complete", rep.complete}};
  return rep;
}

// Deterministic n-vertex graph sample: edge masks drawn from a seeded
// mt19937_64 with plain modulo reduction (uniform_int_distribution is
// implementation-defined and would break byte-stable reports).
inline std::vector<Graph> sample_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(graph_from_mask(n, rng() % labeled_graph_count(n)));
  return out;
}

}  // namespace qpcert
