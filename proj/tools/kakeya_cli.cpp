// Command-line frontend for Kakeya set construction, verification, bounds,
// certification, zero counting, and minimum-size search.
//
// Exit codes: 0 success, 1 property fails, 2 input error, 3 resource limit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kakeya/bounds.hpp"
#include "kakeya/certify.hpp"
#include "kakeya/json_io.hpp"
#include "kakeya/kakeya.hpp"
#include "kakeya/linalg.hpp"
#include "kakeya/search.hpp"

namespace {

using namespace kakeya;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 0;  // fixed default, never time-based
  unsigned threads = 1;
  Limits limits;
  bool dump_config = false;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write file: " + path);
  out << content;
}

void emit(const GlobalOpts& g, const Json& j, const std::string& text) {
  if (g.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

Json profile_json(const std::vector<ProfileEntry>& prof) {
  Json arr = Json::array();
  for (const auto& e : prof) {
    Json row;
    row["direction"] = e.direction;
    row["best_base"] = e.best_base;
    row["count"] = e.count;
    arr.push_back(row);
  }
  return arr;
}

Json search_json(const SearchResult& r) {
  Json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["min_size"] = r.min_size;
  j["optimal"] = r.exact ? "exact" : "heuristic";
  j["witness"] = r.witness;
  j["nodes"] = r.nodes;
  return j;
}

Json bound_json(const BoundReport& r) {
  Json j;
  j["formula"] = r.formula;
  j["q"] = r.q;
  j["n"] = r.n;
  if (r.delta) j["delta"] = r.delta->str();
  if (r.gamma) j["gamma"] = r.gamma->str();
  if (r.r) j["r"] = *r.r;
  j["d"] = r.d;
  j["bound"] = r.bound;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-field Kakeya sets: construction, verification, bounds, certificates"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for all randomized choices");
  app.add_option("--threads", g.threads, "worker cap for per-direction parallelism")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-points", g.limits.max_points, "enumeration size limit");
  app.add_option("--node-budget", g.limits.node_budget, "branch-and-bound node budget");
  app.add_flag("--dump-config", g.dump_config, "echo the parsed configuration and exit");

  if (const char* env = std::getenv("KAKEYA_MAX_POINTS"))
    g.limits.max_points = std::stoull(env);
  if (const char* env = std::getenv("KAKEYA_NODE_BUDGET"))
    g.limits.node_budget = std::stoull(env);

  std::string field_spec, kind = "full", in_path, out_path, poly_text;
  std::string delta_s, gamma_s;
  std::uint32_t n = 2, r_power = 1, restarts = 1;
  bool want_kakeya = false, want_profile = false;
  bool cert_cascade = false, cert_thm2 = false;
  bool search_exact = false, search_greedy = false;

  auto* c_construct = app.add_subcommand("construct", "build a point set and write it");
  c_construct->add_option("--q", field_spec, "field spec, e.g. 3 or 2^2 mod=1,1,1")->required();
  c_construct->add_option("--n", n, "dimension")->required();
  c_construct->add_option("--kind", kind, "full|greedy|random");
  c_construct->add_option("-o,--out", out_path, "output set file")->required();

  auto* c_verify = app.add_subcommand("verify", "check Kakeya or (delta,gamma) properties");
  c_verify->add_option("--in", in_path, "input set file")->required();
  c_verify->add_flag("--kakeya", want_kakeya, "check the Kakeya property");
  c_verify->add_option("--delta", delta_s, "delta in (0,1], e.g. 1, 0.5, 8/9");
  c_verify->add_option("--gamma", gamma_s, "gamma in (0,1]");
  c_verify->add_flag("--profile", want_profile, "include the direction profile");

  auto* c_profile = app.add_subcommand("profile", "print the direction profile");
  c_profile->add_option("--in", in_path, "input set file")->required();

  auto* c_bound = app.add_subcommand("bound", "print the applicable lower bounds");
  c_bound->add_option("--q", field_spec, "field spec")->required();
  c_bound->add_option("--n", n, "dimension")->required();
  c_bound->add_option("--delta", delta_s, "delta for the (delta,gamma) bound");
  c_bound->add_option("--gamma", gamma_s, "gamma for the (delta,gamma) bound");
  c_bound->add_option("--r", r_power, "product power for the corollary scheme");

  auto* c_certify = app.add_subcommand("certify", "run a proof pipeline and write a certificate");
  c_certify->add_option("--in", in_path, "input set file")->required();
  c_certify->add_flag("--cascade", cert_cascade, "homogeneous cascade pipeline");
  c_certify->add_flag("--thm2", cert_thm2, "(delta,gamma) refutation pipeline");
  c_certify->add_option("--delta", delta_s, "delta for --thm2");
  c_certify->add_option("--gamma", gamma_s, "gamma for --thm2");
  c_certify->add_option("-o,--out", out_path, "output certificate JSON");

  auto* c_zeros = app.add_subcommand("zeros", "count zeros of a polynomial over F_q^n");
  c_zeros->add_option("--poly", poly_text, "polynomial, e.g. 1*x1^1+2*x2^3")->required();
  c_zeros->add_option("--q", field_spec, "field spec")->required();
  c_zeros->add_option("--n", n, "dimension")->required();

  auto* c_search = app.add_subcommand("search", "minimum-size Kakeya search");
  c_search->add_option("--q", field_spec, "field spec")->required();
  c_search->add_option("--n", n, "dimension")->required();
  c_search->add_flag("--exact", search_exact, "branch-and-bound exact search");
  c_search->add_flag("--greedy", search_greedy, "best-of-restarts greedy");
  c_search->add_option("--restarts", restarts, "greedy restarts");
  c_search->add_option("-o,--out", out_path, "also write the witness set file");

  auto* c_vc = app.add_subcommand("verify-certificate", "re-verify a certificate JSON");
  c_vc->add_option("--in", in_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (g.dump_config) {
    Json cfg;
    cfg["format"] = g.format;
    cfg["seed"] = g.seed;
    cfg["threads"] = g.threads;
    cfg["max_points"] = g.limits.max_points;
    cfg["node_budget"] = g.limits.node_budget;
    std::cout << cfg.dump(2) << "\n";
    return kExitOk;
  }

  if (*c_construct) {
    Field f = Field::parse(field_spec);
    PointSet K = construct(parse_construct_kind(kind), f, n, g.seed);
    write_file(out_path, K.serialize());
    Json j;
    j["kind"] = kind;
    j["size"] = K.size();
    j["out"] = out_path;
    j["set"] = set_to_json(K);
    emit(g, j, "wrote " + std::to_string(K.size()) + " points to " + out_path + "\n");
    return kExitOk;
  }

  if (*c_verify) {
    auto loaded = load_set_file(in_path);
    const PointSet& K = *loaded.set;
    bool pass = true;
    Json j;
    j["size"] = K.size();
    std::string text;
    if (want_kakeya) {
      auto check = is_kakeya(K, g.threads);
      j["kakeya"] = check.ok;
      pass = pass && check.ok;
      if (check.ok) {
        text += "kakeya: yes (" + std::to_string(check.witnesses.size()) +
                " directions witnessed)\n";
      } else {
        std::string dir;
        for (std::size_t i = 0; i < check.failing_direction->size(); ++i)
          dir += (i ? "," : "") + std::to_string((*check.failing_direction)[i]);
        j["failing_direction"] = *check.failing_direction;
        text += "kakeya: NO, no full line in direction (" + dir + ")\n";
      }
    }
    if (!delta_s.empty() || !gamma_s.empty()) {
      if (delta_s.empty() || gamma_s.empty())
        throw usage_error("--delta and --gamma must be given together");
      auto res = check_delta_gamma(K, Ratio::parse(delta_s), Ratio::parse(gamma_s), g.threads);
      j["delta_gamma"] = res.ok;
      j["line_set_size"] = res.line_set_size;
      j["required"] = res.required;
      j["threshold"] = res.threshold;
      j["delta_max"] = res.delta_max.str();
      pass = pass && res.ok;
      text += std::string("delta-gamma: ") + (res.ok ? "yes" : "NO") +
              " (|L| = " + std::to_string(res.line_set_size) +
              ", required " + std::to_string(res.required) + ")\n";
    }
    if (want_profile) {
      auto prof = direction_profile(K, g.threads);
      j["profile"] = profile_json(prof);
      for (const auto& e : prof) {
        text += "dir (";
        for (std::size_t i = 0; i < e.direction.size(); ++i)
          text += (i ? "," : "") + std::to_string(e.direction[i]);
        text += "): " + std::to_string(e.count) + "\n";
      }
    }
    emit(g, j, text);
    return pass ? kExitOk : kExitPropertyFails;
  }

  if (*c_profile) {
    auto loaded = load_set_file(in_path);
    auto prof = direction_profile(*loaded.set, g.threads);
    Json j;
    j["profile"] = profile_json(prof);
    std::string text;
    for (const auto& e : prof) {
      text += "dir (";
      for (std::size_t i = 0; i < e.direction.size(); ++i)
        text += (i ? "," : "") + std::to_string(e.direction[i]);
      text += "): count " + std::to_string(e.count) +
              ", base " + std::to_string(e.best_base) + "\n";
    }
    emit(g, j, text);
    return kExitOk;
  }

  if (*c_bound) {
    Field f = Field::parse(field_spec);
    std::vector<BoundReport> reports;
    reports.push_back(alon_tao_bound(f.q(), n));
    if (!delta_s.empty() && !gamma_s.empty())
      reports.push_back(thm2_bound(f.q(), n, Ratio::parse(delta_s), Ratio::parse(gamma_s)));
    if (r_power >= 1) reports.push_back(corollary_bound(f.q(), n, r_power));
    Json j = Json::array();
    std::string text;
    for (const auto& rep : reports) {
      j.push_back(bound_json(rep));
      text += rep.formula + ": " + std::to_string(rep.bound) +
              " (d = " + std::to_string(rep.d) + ")\n";
    }
    emit(g, j, text);
    return kExitOk;
  }

  if (*c_certify) {
    if (cert_cascade == cert_thm2)
      throw usage_error("choose exactly one of --cascade / --thm2");
    auto loaded = load_set_file(in_path);
    Certificate cert = cert_cascade
        ? certify_cascade(*loaded.set, g.threads)
        : certify_refutation_thm2(*loaded.set,
                                  Ratio::parse(delta_s.empty() ? "1" : delta_s),
                                  Ratio::parse(gamma_s.empty() ? "1" : gamma_s),
                                  g.threads, g.limits);
    std::string body = cert.dump();
    if (!out_path.empty()) write_file(out_path, body);
    emit(g, cert.doc,
         std::string(cert.is_refutation() ? "refutation" : "consistency") +
             " certificate with " + std::to_string(cert.doc["steps"].size()) +
             " steps" + (out_path.empty() ? "" : " -> " + out_path) + "\n");
    return kExitOk;
  }

  if (*c_zeros) {
    Field f = Field::parse(field_spec);
    Polynomial p = Polynomial::parse(poly_text, f, n);
    std::uint64_t zeros = count_zeros(p, g.limits);
    Json j;
    j["zeros"] = zeros;
    j["degree"] = p.degree();
    j["sz_cap"] = p.is_zero() ? Json(nullptr)
                              : Json(std::uint64_t(p.degree()) * ipow(f.q(), n - 1));
    emit(g, j, std::to_string(zeros) + "\n");
    return kExitOk;
  }

  if (*c_search) {
    if (search_exact == search_greedy)
      throw usage_error("choose exactly one of --exact / --greedy");
    Field f = Field::parse(field_spec);
    SearchResult res = search_exact
        ? minimal_kakeya_exact(f, n, g.limits)
        : minimal_kakeya_greedy(f, n, restarts, g.seed);
    if (!out_path.empty())
      write_file(out_path, PointSet(f, n, res.witness).serialize());
    Json j = search_json(res);
    emit(g, j, "minimum " + std::to_string(res.min_size) + " (" +
                   (res.exact ? "exact" : "heuristic") + ", " +
                   std::to_string(res.nodes) + " nodes)\n");
    return kExitOk;
  }

  if (*c_vc) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw usage_error("cannot open certificate: " + in_path);
    Json doc = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw usage_error("certificate is not valid JSON: " + in_path);
    auto report = verify_certificate(doc);
    Json j;
    j["ok"] = report.ok;
    j["message"] = report.message;
    Json steps = Json::array();
    std::string text;
    for (const auto& [name, ok] : report.steps) {
      steps.push_back({{"name", name}, {"ok", ok}});
      text += std::string(ok ? "ok   " : "FAIL ") + name + "\n";
    }
    j["steps"] = steps;
    text += report.ok ? "certificate verifies\n"
                      : "certificate REJECTED: " + report.message + "\n";
    emit(g, j, text);
    return report.ok ? kExitOk : kExitPropertyFails;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kakeya::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const kakeya::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
