#include "gl3sw/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gl3sw/io.hpp"

namespace gl3sw {

namespace {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct RunConfig {
  Int p = 5;
  int f = 1;
  std::string weight, lambda, lambda_prime;
  int j0 = 0;
  std::string kind = "weyl";
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  unsigned long long seed = 12345;  // reproducibility hook for sampled runs
  std::string mode = "shift";
  bool on_the_nose = false;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + cfg.out_path + "'");
  file << text << '\n';
}

void validate_context(const RunConfig& cfg) {
  if (!is_prime(cfg.p) || cfg.p < 5)
    throw std::domain_error("p must be a prime >= 5, got " + std::to_string(cfg.p));
  if (cfg.f < 1) throw std::domain_error("f must be >= 1");
}

WeightTuple tuple_arg(const std::string& text, const RunConfig& cfg, const char* name) {
  WeightTuple t = parse_tuple(text);
  if (t.f() != cfg.f)
    throw std::domain_error(std::string(name) + " has " + std::to_string(t.f()) +
                            " slots but f = " + std::to_string(cfg.f));
  if (!is_p_restricted(t, cfg.p))
    throw std::domain_error(std::string(name) + " = " + text + " is not p-restricted");
  return t;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight/alcove combinatorics and Ext^1 comparison for GL3 Serre weights"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_f) {
    sub->add_option("--p", cfg.p, "prime p >= 5")->required();
    if (with_f) sub->add_option("--f", cfg.f, "number of embeddings f >= 1");
    sub->add_option("--out", cfg.out_path, "write the result to this file");
    sub->add_option("--seed", cfg.seed, "seed for sampled runs");
  };

  CLI::App* classify = app.add_subcommand("classify", "region of a weight");
  add_common(classify, false);
  classify->add_option("--weight", cfg.weight, "weight a,b,c")->required();

  CLI::App* charcmd = app.add_subcommand("char", "formal character of a module");
  add_common(charcmd, false);
  charcmd->add_option("--kind", cfg.kind, "weyl | simple | tilting")
      ->check(CLI::IsMember({"weyl", "simple", "tilting"}));
  charcmd->add_option("--weight", cfg.weight, "highest weight a,b,c")->required();

  CLI::App* tensorcmd = app.add_subcommand("tensor", "summands of L(w) ⊗ L(1,0,-1)");
  add_common(tensorcmd, false);
  tensorcmd->add_option("--weight", cfg.weight, "p-restricted weight a,b,c")->required();

  CLI::App* soclecmd = app.add_subcommand("socle", "socle constituents of F(t) ⊗ F(1,0,-1)^{[j0]}");
  add_common(soclecmd, true);
  soclecmd->add_option("--lambda", cfg.lambda, "p-restricted tuple")->required();
  soclecmd->add_option("--j0", cfg.j0, "twist slot index");

  CLI::App* paircmd = app.add_subcommand("pair", "good/bad pair report");
  add_common(paircmd, true);
  paircmd->add_option("--lambda", cfg.lambda, "first tuple")->required();
  paircmd->add_option("--lambda-prime", cfg.lambda_prime, "second tuple")->required();
  paircmd->add_flag("--on-the-nose", cfg.on_the_nose, "match shapes literally, not up to twist");

  CLI::App* extcmd = app.add_subcommand("ext", "Ext^1 comparison verdict");
  add_common(extcmd, true);
  extcmd->add_option("--lambda", cfg.lambda, "first tuple")->required();
  extcmd->add_option("--lambda-prime", cfg.lambda_prime, "second tuple")->required();
  extcmd->add_flag("--on-the-nose", cfg.on_the_nose, "match shapes literally, not up to twist");

  CLI::App* scancmd = app.add_subcommand("scan", "verdict table over all pairs");
  add_common(scancmd, true);
  scancmd->add_option("--mode", cfg.mode, "shift | all")->check(CLI::IsMember({"shift", "all"}));
  scancmd->add_option("--format", cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  scancmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  scancmd->add_flag("--on-the-nose", cfg.on_the_nose, "match shapes literally, not up to twist");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << '\n';
      return 0;
    }
    err << e.what() << '\n';
    return 1;
  }

  const TwistPolicy policy =
      cfg.on_the_nose ? TwistPolicy::OnTheNose : TwistPolicy::UpToTwist;
  try {
    validate_context(cfg);
    const Context ctx{cfg.p, cfg.f};

    if (classify->parsed()) {
      Weight w = parse_weight(cfg.weight);
      emit(cfg, Json{{"region", region_name(classify_alcove(w, cfg.p))}}.dump(), out);
    } else if (charcmd->parsed()) {
      Weight w = parse_weight(cfg.weight);
      FormalCharacter c = cfg.kind == "weyl"     ? weyl_char(w)
                          : cfg.kind == "simple" ? simple_char(w, cfg.p)
                                                 : tilting_char(w, cfg.p);
      emit(cfg,
           Json{{"weight", to_string(w)}, {"kind", cfg.kind}, {"dim", c.dim()},
                {"char", char_to_json(c)}}
               .dump(),
           out);
    } else if (tensorcmd->parsed()) {
      Weight w = parse_weight(cfg.weight);
      emit(cfg, summands_to_json(tensor_simple_alpha13(w, cfg.p)).dump(), out);
    } else if (soclecmd->parsed()) {
      WeightTuple t = tuple_arg(cfg.lambda, cfg, "--lambda");
      if (cfg.j0 < 0 || cfg.j0 >= cfg.f) throw std::domain_error("--j0 out of range");
      emit(cfg, socle_to_json(socle_tensor(t, cfg.j0, ctx)).dump(), out);
    } else if (paircmd->parsed()) {
      WeightTuple a = tuple_arg(cfg.lambda, cfg, "--lambda");
      WeightTuple b = tuple_arg(cfg.lambda_prime, cfg, "--lambda-prime");
      PairVerdict v = pair_verdict(a, b, ctx, policy);
      Json j{{"bad_forward", v.bad_forward}, {"bad_backward", v.bad_backward}};
      if (cfg.f == 1) j["good"] = v.good;
      if (v.matched_shape)
        j["matched_shape"] = {{"j0", v.matched_shape->first},
                              {"alpha", shift_name(v.matched_shape->second)}};
      emit(cfg, j.dump(), out);
    } else if (extcmd->parsed()) {
      WeightTuple a = tuple_arg(cfg.lambda, cfg, "--lambda");
      WeightTuple b = tuple_arg(cfg.lambda_prime, cfg, "--lambda-prime");
      emit(cfg, verdict_to_json(ext_compare(a, b, ctx, policy)).dump(), out);
    } else if (scancmd->parsed()) {
      ScanOptions opts;
      opts.exhaustive = cfg.mode == "all";
      opts.jobs = cfg.jobs;
      opts.policy = policy;
      ScanResult result = scan(ctx, opts);
      if (cfg.format == "csv")
        emit(cfg, scan_to_csv(result), out);
      else
        emit(cfg, scan_to_json(result, /*with_records=*/true).dump(), out);
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace gl3sw
