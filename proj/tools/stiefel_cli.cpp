#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stiefel/cli.hpp"
#include "stiefel/error.hpp"

namespace {

struct Flags {
  std::string config;
  std::string alpha;
  std::string lambda_grid;
};

void add_common(CLI::App& app, stiefel::cli::RunConfig& c, Flags& f) {
  app.add_option("--config", f.config, "JSON config file; flags override its keys");
  app.add_option("--n", c.n, "ambient dimension");
  app.add_option("--m", c.m, "frame size of f");
  app.add_option("--k", c.k, "frame size of the point");
  app.add_option("--alpha,--lambda", f.alpha, "complex parameter: 2, 1.5,0.5 or 1+0.5i");
  app.add_option("--samples,--n-samples", c.n_samples, "Monte Carlo sample count (0: default)");
  app.add_option("--seed", c.seed, "seed (default: $STIEFEL_SEED or 0)");
  app.add_option("--workers", c.workers, "worker threads (never changes results)");
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  stiefel::cli::RunConfig cfg;
  Flags flags;
  if (const char* env = std::getenv("STIEFEL_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: STIEFEL_SEED must be a nonnegative integer\n";
      return 2;
    }
  }

  CLI::App app{"Transforms on Stiefel manifolds: evaluation and identity checks"};
  app.require_subcommand(1);
  // Parse into a scratch config first so --config can be applied underneath
  // the explicit flags.
  stiefel::cli::RunConfig cli = cfg;

  auto* transform = app.add_subcommand("transform", "evaluate one transform by Monte Carlo");
  add_common(*transform, cli, flags);
  transform->add_option("--kind", cli.kind, "cosine, dual_cosine, sine, dual_sine, funk, dual_funk, M, Q, M_normalized");
  transform->add_option("--function", cli.function, "const, zonal:<j>, gram_poly:<d>, exp_proj:<seed>");

  auto* identity = app.add_subcommand("identity", "run an identity suite");
  add_common(*identity, cli, flags);
  identity->add_option("--suite", cli.suite, "closed-form, gaussian-zeta, bernstein, zeta-limit, duality, complement, inversion, haar");
  identity->add_option("--points", cli.count, "bernstein: number of random points");

  auto* table = app.add_subcommand("table", "tabulate closed-form constants");
  add_common(*table, cli, flags);
  table->add_option("--which", cli.which, "cosine-const, funk-const, siegel-gamma, stiefel-volume, multiplier");
  table->add_option("--grid", cli.grid, "small or medium");

  auto* zeta = app.add_subcommand("zeta", "zeta integral, continued below the strip when needed");
  add_common(*zeta, cli, flags);
  zeta->add_option("--function", cli.function, "gaussian or gaussian_trace");

  auto* rankone = app.add_subcommand("rankone", "rank-one multiplier checks");
  rankone->require_subcommand(1);
  for (const char* name : {"multiplier", "compose", "funk", "decay"}) {
    auto* sub = rankone->add_subcommand(name);
    add_common(*sub, cli, flags);
    sub->add_option("--j", cli.j, "harmonic degree (funk)");
    sub->add_option("--j-max", cli.j_max, "largest degree");
    sub->add_option("--lambda-grid", flags.lambda_grid, "compose: semicolon-separated lambdas");
  }

  auto* sample = app.add_subcommand("sample", "draw Haar frames");
  add_common(*sample, cli, flags);
  sample->add_option("--count", cli.count, "number of frames");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  std::string subcommand;
  CLI::App* active = nullptr;
  for (CLI::App* s : app.get_subcommands()) {
    command = s->get_name();
    active = s;
  }
  if (command == "rankone") {
    for (CLI::App* s : active->get_subcommands()) {
      subcommand = s->get_name();
      active = s;
    }
  }

  try {
    if (!flags.config.empty()) {
      std::ifstream in(flags.config);
      if (!in) throw stiefel::ConfigError("cannot read config file '" + flags.config + "'");
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw stiefel::ConfigError(std::string("config file is not valid JSON: ") + e.what());
      }
      stiefel::cli::apply_json(cfg, j);
    }
    // Explicit flags win over the config file.
    auto given = [active](const char* opt) { return active->count(opt) > 0; };
    if (given("--n")) cfg.n = cli.n;
    if (given("--m")) cfg.m = cli.m;
    if (given("--k")) cfg.k = cli.k;
    if (given("--alpha")) cfg.alpha = stiefel::cli::parse_complex(flags.alpha);
    if (given("--samples")) cfg.n_samples = cli.n_samples;
    if (given("--seed")) cfg.seed = cli.seed;
    if (given("--workers")) cfg.workers = cli.workers;
    if (given("--out")) cfg.out = cli.out;
    if (given("--format")) cfg.format = cli.format;
    for (const char* o : {"--kind", "--function", "--suite", "--points", "--which", "--grid", "--j", "--j-max",
                          "--count", "--lambda-grid"}) {
      if (!active->get_option_no_throw(o) || !given(o)) continue;
      const std::string s = o;
      if (s == "--kind") cfg.kind = cli.kind;
      else if (s == "--function") cfg.function = cli.function;
      else if (s == "--suite") cfg.suite = cli.suite;
      else if (s == "--points" || s == "--count") cfg.count = cli.count;
      else if (s == "--which") cfg.which = cli.which;
      else if (s == "--grid") cfg.grid = cli.grid;
      else if (s == "--j") cfg.j = cli.j;
      else if (s == "--j-max") cfg.j_max = cli.j_max;
      else if (s == "--lambda-grid") {
        cfg.lambda_grid.clear();
        std::size_t start = 0;
        const std::string& g = flags.lambda_grid;
        while (start <= g.size()) {
          const std::size_t end = std::min(g.find(';', start), g.size());
          if (end > start) cfg.lambda_grid.push_back(stiefel::cli::parse_complex(g.substr(start, end - start)));
          start = end + 1;
        }
      }
    }
  } catch (const stiefel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.command = command;
  if (!subcommand.empty()) cfg.subcommand = subcommand;

  const stiefel::cli::RunResult res = stiefel::cli::run(cfg);
  if (res.exit_code == 2) {
    std::cerr << "error: " << res.error << "\n";
    return 2;
  }
  if (cfg.out.empty()) {
    std::cout << res.output;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    out << res.output;
  }
  return res.exit_code;
}
