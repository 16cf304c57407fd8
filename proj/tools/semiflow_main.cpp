// Batch front end: window-lemma checks, finite sweeps, example-family
// analyses and the claims harness. Exit codes: 0 success/confirmed,
// 1 refutation found, 2 inconclusive outcome present, 3 usage/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "semiflow/ap_engine.hpp"
#include "semiflow/claims.hpp"
#include "semiflow/config.hpp"
#include "semiflow/finite_actions.hpp"
#include "semiflow/report.hpp"

namespace {

using namespace semiflow;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 3;
  }
  out << text;
  return 0;
}

Family family_of_example(int example) {
  switch (example) {
    case 1: return Family::Scale;
    case 2: return Family::Affine;
    case 3: return Family::Twist;
  }
  throw CLI::ValidationError("example must be 1, 2 or 3");
}

long long default_bound(const RunConfig& cfg, Family f) {
  switch (f) {
    case Family::Scale: return cfg.scale_d;
    case Family::Affine: return cfg.affine_d;
    case Family::Twist: return cfg.twist_cap;
  }
  return 1;
}

struct ExampleArgs {
  int example = 1;
  std::string analysis;
  std::string x_str, y_str, u_str;
  long long bound = 0;  // 0 = family default
  std::string eps_str;
  long long max_k = 0;  // 0 = config default
};

int run_example(const RunConfig& cfg, const ExampleArgs& args) {
  Family fam = family_of_example(args.example);
  Truncation t(fam, args.bound > 0 ? args.bound : default_bound(cfg, fam));
  Point x = args.x_str.empty() ? default_base_point(fam) : parse_point(args.x_str);
  Neighborhood u =
      args.u_str.empty() ? default_neighborhood(fam) : parse_neighborhood(args.u_str);
  Rational eps = args.eps_str.empty() ? cfg.epsilon : Rational::parse(args.eps_str);
  std::size_t max_k =
      static_cast<std::size_t>(args.max_k > 0 ? args.max_k : cfg.max_k);

  if (args.analysis == "return-set") {
    auto rs = return_set(x, u, t);
    std::cout << "return set of " << point_str(x) << " at " << t.str() << ": "
              << rs.members.size() << " elements\n";
    for (std::size_t i = 0; i < rs.members.size() && i < 50; ++i)
      std::cout << "  " << rs.members[i].str() << "\n";
    if (rs.members.size() > 50)
      std::cout << "  ... (" << rs.members.size() - 50 << " more)\n";
    return 0;
  }

  if (args.analysis == "ap-syndetic" || args.analysis == "ap-modified") {
    auto rs = return_set(x, u, t);
    auto outcome = args.analysis == "ap-syndetic"
                       ? syndetic_search(t, rs, max_k)
                       : modified_ap_search(t, rs, max_k);
    if (const Certificate* cert = certificate_of(outcome)) {
      std::cout << cert_kind_name(cert->kind) << " certificate, size "
                << cert->k_set.size() << ", "
                << (cert->verified ? "verified" : "VERIFICATION FAILED") << "\n";
      for (std::size_t i = 0; i < cert->k_set.size() && i < 50; ++i)
        std::cout << "  " << cert->k_set[i].str() << "\n";
      if (cert->k_set.size() > 50)
        std::cout << "  ... (" << cert->k_set.size() - 50 << " more)\n";
      if (!cert->note.empty()) std::cout << "note: " << cert->note << "\n";
      return cert->verified ? 0 : 2;
    }
    const auto& ex = std::get<ExhaustionReport>(outcome);
    std::cout << "exhaustion: " << ex.uncovered_total << " uncovered of "
              << ex.pool_size << "\n";
    for (const auto& s : ex.uncovered_sample) std::cout << "  " << s.str() << "\n";
    if (!ex.note.empty()) std::cout << "note: " << ex.note << "\n";
    return 2;
  }

  if (args.analysis == "minimality") {
    auto v = epsilon_minimality(x, t, eps);
    std::cout << minimality_status_name(v.status) << " at eps " << eps.str()
              << ", " << t.str() << "\n";
    if (!v.witness.empty()) {
      std::cout << "witness:";
      for (const auto& w : v.witness) std::cout << " " << point_str(w);
      std::cout << "\n";
    }
    std::cout << v.evidence << "\n";
    return v.status == MinimalityStatus::Inconclusive ? 2 : 0;
  }

  if (args.analysis == "proximal") {
    if (args.y_str.empty())
      throw CLI::ValidationError("proximal analysis needs --y");
    Point y = parse_point(args.y_str);
    auto res = proximal_pair_check(x, y, t, eps);
    if (res.witness_found) {
      std::cout << "proximal witness " << res.witness->str() << " at distance "
                << res.witness_distance.str() << " (< " << eps.str() << ")\n";
      return 0;
    }
    std::cout << "no witness within eps; minimum distance "
              << res.min_distance.str() << " at " << res.argmin->str() << " over "
              << res.scanned << " elements"
              << (res.exhausted ? "" : " (scan budget reached)") << "\n";
    return res.exhausted ? 0 : 2;
  }

  throw CLI::ValidationError("unknown analysis '" + args.analysis + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semiflow: exact almost-periodicity and minimality checks"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  RunConfig cfg;

  // lemma -------------------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "window conditions on exponent sets");
  lemma->require_subcommand(1);
  std::string lemma_set;
  long long lemma_radius = -1;
  long long lemma_horizon = -1;

  auto* lemma_check = lemma->add_subcommand("check", "evaluate both window conditions");
  lemma_check->add_option("set", lemma_set, "set pattern, e.g. 0,4..N:2")->required();
  lemma_check->add_option("--radius", lemma_radius, "window radius R")->required();
  lemma_check->add_option("--horizon", lemma_horizon, "horizon N");

  auto* lemma_min = lemma->add_subcommand("min-window", "smallest working radius");
  lemma_min->add_option("set", lemma_set, "set pattern, e.g. 0,7..98:7")->required();
  lemma_min->add_option("--horizon", lemma_horizon, "horizon N");

  // finite ------------------------------------------------------------------
  auto* finite = app.add_subcommand("finite", "exhaustive finite-system sweeps");
  finite->require_subcommand(1);
  SweepOptions sweep_opt;
  bool sweep_exhaustive = false;
  std::string sweep_format, sweep_out;
  auto add_sweep_flags = [&](CLI::App* cmd) {
    cmd->add_option("--points", sweep_opt.points, "points in the phase set");
    cmd->add_option("--generators", sweep_opt.generators, "generator count (1 or 2)");
    cmd->add_flag("--exhaustive", sweep_exhaustive, "sweep every system");
    cmd->add_option("--samples", sweep_opt.samples, "sampled sweep size");
    cmd->add_option("--seed", sweep_opt.seed, "sampling seed");
    cmd->add_option("--format", sweep_format, "csv or text");
    cmd->add_option("--out", sweep_out, "output path");
  };
  auto* fin_theorem = finite->add_subcommand(
      "verify-theorem", "minimal orbit closure == modified almost periodicity");
  auto* fin_flow = finite->add_subcommand(
      "verify-flow", "permutation systems: minimality == syndetic AP");
  auto* fin_cascade = finite->add_subcommand(
      "verify-cascade", "single map: both AP readings coincide");
  add_sweep_flags(fin_theorem);
  add_sweep_flags(fin_flow);
  add_sweep_flags(fin_cascade);

  // example -----------------------------------------------------------------
  auto* example = app.add_subcommand("example", "analyses on the three families");
  ExampleArgs ex_args;
  example->add_option("number", ex_args.example, "family: 1 scale, 2 affine, 3 twist")
      ->required();
  example
      ->add_option("analysis", ex_args.analysis,
                   "return-set | ap-syndetic | ap-modified | minimality | proximal")
      ->required();
  example->add_option("--x", ex_args.x_str, "base point, e.g. 1/2, circ:1/3, disk:1/2@0");
  example->add_option("--y", ex_args.y_str, "second point for proximal");
  example->add_option("--u", ex_args.u_str,
                      "neighborhood: int:a,b | arc:c,h | box:rlo,rhi@c,h");
  example->add_option("--bound", ex_args.bound, "truncation bound");
  example->add_option("--eps", ex_args.eps_str, "resolution, e.g. 1/100");
  example->add_option("--max-k", ex_args.max_k, "certificate size cap");

  // claims ------------------------------------------------------------------
  auto* claims = app.add_subcommand("claims", "claim registry");
  claims->require_subcommand(1);
  auto* claims_run = claims->add_subcommand("run", "run the registry");
  std::string claim_id, claims_format, claims_out;
  claims_run->add_option("--id", claim_id, "single claim id, e.g. C8");
  claims_run->add_option("--format", claims_format, "json, csv or text");
  claims_run->add_option("--out", claims_out, "output path");
  auto* claims_list = claims->add_subcommand("list", "list registered claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (!config_path.empty()) cfg = load_config(config_path);

    if (lemma_check->parsed() || lemma_min->parsed()) {
      std::optional<long long> horizon;
      if (lemma_horizon >= 0) horizon = lemma_horizon;
      WindowedSet a = parse_windowed_set(lemma_set, horizon);
      if (lemma_min->parsed()) {
        std::cout << min_window(a).value << "\n";
        return 0;
      }
      WindowRadius r{lemma_radius};
      bool covers = covers_by_window(a, r);
      bool hits = window_hits(a, r);
      std::cout << "covers_by_window: " << (covers ? "true" : "false") << "\n";
      std::cout << "window_hits:      " << (hits ? "true" : "false") << "\n";
      std::cout << "equivalent:       " << (covers == hits ? "true" : "false")
                << "\n";
      return covers == hits ? 0 : 1;
    }

    if (fin_theorem->parsed() || fin_flow->parsed() || fin_cascade->parsed()) {
      sweep_opt.exhaustive = sweep_exhaustive || sweep_opt.samples == 0;
      sweep_opt.keep_all_rows = sweep_format == "csv";
      SweepCheck check = fin_theorem->parsed() ? SweepCheck::Theorem
                         : fin_flow->parsed()  ? SweepCheck::FlowEquivalence
                                               : SweepCheck::Cascade;
      auto result = run_sweep(check, sweep_opt);
      std::string text = sweep_format == "csv" ? render_sweep_csv(result)
                                               : render_sweep_text(result);
      int wr = write_output(text, sweep_out);
      if (wr) return wr;
      return result.failures == 0 ? 0 : 1;
    }

    if (example->parsed()) return run_example(cfg, ex_args);

    if (claims_list->parsed()) {
      for (const auto& c : registry())
        std::cout << c.id << "  "
                  << (c.expected == Expected::Open ? "[open]     " : "[confirmed]")
                  << " " << c.statement << "\n";
      return 0;
    }

    if (claims_run->parsed()) {
      if (!claims_format.empty()) cfg.set("format", claims_format);
      if (!claims_out.empty()) cfg.out = claims_out;
      std::vector<ClaimReport> reports;
      if (!claim_id.empty())
        reports.push_back(run_claim(claim_id, cfg));
      else
        reports = run_all(cfg);
      int wr = write_output(render_claims(reports, cfg.format), cfg.out);
      if (wr) return wr;
      return exit_code_for(reports);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
