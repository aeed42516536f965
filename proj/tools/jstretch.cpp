#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jstretch/fibercone.hpp"
#include "jstretch/parse.hpp"
#include "jstretch/report.hpp"

using namespace jst;
using namespace jst::cli;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParseError = 2;
constexpr int kCapExceeded = 3;
constexpr int kGoldenMismatch = 4;

struct Globals {
  std::uint64_t seed = 1;
  std::uint32_t p = PrimeField::kDefaultPrime;
  int trials = 5;
  bool json = false;
  Caps caps;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SessionConfig config_of(const Globals& g) {
  SessionConfig c;
  c.p = g.p;
  c.seed = g.seed;
  c.trials = g.trials;
  c.caps = g.caps;
  c.json = g.json;
  validate(c);
  return c;
}

void print(const json& j, bool as_json) { std::cout << (as_json ? j.dump(2) + "\n" : render_human(j)); }

int run_analyze(const Globals& g, const std::string& file) {
  auto config = config_of(g);
  Session s = parse_session(read_file(file), config);
  auto commands = s.commands;
  if (commands.empty()) {
    AnalyzeCommand c;
    c.ideal = s.default_ideal();
    c.seed = config.seed;
    c.trials = config.trials;
    c.cap = config.caps.search;
    commands.push_back(c);
  }
  std::vector<std::future<AnalysisReport>> jobs;
  for (const auto& c : commands) {
    AnalysisOptions opts{c.seed, c.trials, c.cap, s.hypotheses(c.ideal)};
    jobs.push_back(std::async(std::launch::async, [&s, opts, name = c.ideal] { return analyze(s.ideal(name), opts); }));
  }
  json out = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    json entry;
    entry["ideal"] = commands[i].ideal;
    entry["generators"] = s.ideal(commands[i].ideal).to_string();
    entry["report"] = to_json(jobs[i].get(), config.caps);
    out.push_back(entry);
  }
  print(out, g.json);
  return kOk;
}

int run_registry_cmd(const Globals& g, bool list, const std::string& id, std::optional<int> r, std::optional<int> t) {
  if (list || id.empty()) {
    json out = json::array();
    for (const auto& e : registry_examples()) {
      json entry = {{"id", e.id}, {"description", e.description}};
      if (e.param)
        entry["parameter"] = {{"name", std::string(1, e.param->name)},
                              {"min", e.param->lo},
                              {"max", e.param->hi},
                              {"default", e.param->fallback}};
      out.push_back(entry);
    }
    print(out, g.json);
    return kOk;
  }
  auto config = config_of(g);
  RegistryParams params;
  params.r = r;
  params.t = t;
  params.p = config.p;
  auto result = run_registry(id, params, AnalysisOptions{config.seed, config.trials, config.caps.search, {}});
  print(to_json(result, config.caps), g.json);
  return result.all_pass() ? kOk : kGoldenMismatch;
}

int run_speclab(const Globals& g, const std::string& file, const std::string& quantity, const std::string& ideal_name,
                int n, const std::vector<std::string>& fixed) {
  auto config = config_of(g);
  Session s = parse_session(read_file(file), config);
  const std::string name = ideal_name.empty() ? s.default_ideal() : ideal_name;
  const Ideal& ideal = s.ideal(name);
  std::vector<Quantity> qs = quantity == "all" ? all_quantities() : std::vector<Quantity>{parse_quantity(quantity)};
  TrialOptions opts{config.trials, config.seed, n, config.caps.search};
  auto reports = stability_trials(ideal, qs, opts);
  bool violated = false;
  for (const auto& text : fixed) {
    std::vector<Polynomial> H;
    try {
      H = parse_polynomial_list(ideal.poly_ring(), text);
    } catch (const ParseError& e) {
      throw SyntaxError(1, e.column(), std::string("--fixed: ") + e.what());
    }
    for (auto& rep : reports) violated |= !fixed_vs_general(ideal, H, "H = " + text, rep, config.caps.search).general_le_fixed;
  }
  json out = json::array();
  for (const auto& rep : reports) {
    json entry = to_json(rep);
    entry["ideal"] = name;
    out.push_back(entry);
  }
  print(out, g.json);
  return violated ? kGoldenMismatch : kOk;
}

int run_fiber(const Globals& g, const std::string& file, const std::string& target, const std::string& ideal_name) {
  auto config = config_of(g);
  Session s = parse_session(read_file(file), config);
  const std::string name = ideal_name.empty() ? s.default_ideal() : ideal_name;
  const Ideal& ideal = s.ideal(name);
  auto gr = gr_presentation(ideal);
  json out;
  out["ideal"] = name;
  out["variables"] = gr.ring->variables;
  json gens = json::array();
  for (const auto& f : gr.ideal) gens.push_back(f.to_string());
  out["gr_ideal"] = gens;
  out["analytic_spread"] = analytic_spread(ideal);
  out["dim"] = presented_dim(gr);
  try {
    out["depth"] = graded_depth(gr);
  } catch (const NotHomogeneous&) {
    out["depth"] = "unsupported (not standard graded)";
  }
  int code = kOk;
  if (!target.empty()) {
    std::vector<Polynomial> t;
    try {
      t = parse_polynomial_list(gr.ring, target);
    } catch (const ParseError& e) {
      throw SyntaxError(1, e.column(), std::string("--target: ") + e.what());
    }
    bool match = presents(gr, t);
    out["target"] = target;
    out["target_matches"] = match;
    if (!match) code = kGoldenMismatch;
  }
  print(out, g.json);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"j-stretched ideals: invariants, registry examples and Monte Carlo checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "first random seed")->capture_default_str();
  app.add_option("--char", g.p, "characteristic of the coefficient field")->capture_default_str();
  app.add_option("--trials", g.trials, "number of sampled reductions")->capture_default_str();
  app.add_option("--gb-cap", g.caps.gb_degree, "Groebner basis degree cap")->capture_default_str();
  app.add_option("--truncation-cap", g.caps.truncation, "largest truncation exponent")->capture_default_str();
  app.add_option("--search-cap", g.caps.search, "largest reduction number searched")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");

  std::string file, id, quantity = "all", ideal_name, target;
  std::optional<int> r, t;
  bool list = false;
  int n = 2;
  std::vector<std::string> fixed;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze the ideals of a session file");
  analyze_cmd->add_option("file", file, "session file")->required();

  auto* registry_cmd = app.add_subcommand("registry", "run a registry example against its golden values");
  registry_cmd->add_option("id", id, "example id");
  registry_cmd->add_option("--r", r, "parameter r");
  registry_cmd->add_option("--t", t, "parameter t");
  registry_cmd->add_flag("--list", list, "list the examples");

  auto* speclab_cmd = app.add_subcommand("speclab", "stability of invariants over sampled reductions");
  speclab_cmd->add_option("file", file, "session file")->required();
  speclab_cmd->add_option("--quantity", quantity, "IN_JN, IN_JIN1, I2_JI, JcapI2_JI, TAU, S_J or all")
      ->capture_default_str();
  speclab_cmd->add_option("--ideal", ideal_name, "ideal name (default: last analyzed or declared)");
  speclab_cmd->add_option("--n", n, "power used by IN_JN and IN_JIN1")->capture_default_str();
  speclab_cmd->add_option("--fixed", fixed, "explicit reduction to compare, e.g. \"(y)\"");

  auto* fiber_cmd = app.add_subcommand("fiber", "presentation of gr_I(R) and comparison with a target");
  fiber_cmd->add_option("file", file, "session file")->required();
  fiber_cmd->add_option("--target", target, "target ideal in the x and T variables");
  fiber_cmd->add_option("--ideal", ideal_name, "ideal name (default: last analyzed or declared)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(g, file);
    if (registry_cmd->parsed()) return run_registry_cmd(g, list, id, r, t);
    if (speclab_cmd->parsed()) return run_speclab(g, file, quantity, ideal_name, n, fixed);
    if (fiber_cmd->parsed()) return run_fiber(g, file, target, ideal_name);
  } catch (const SessionError& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kCapExceeded;
  } catch (const DegreeBoundExceeded& e) {
    std::cerr << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
