// Copyright 2026 The gammahom Authors
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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammahom/gammahom.hpp"

namespace gammahom::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kSuites = {"segal", "rho",   "wedge", "smash",
                                          "square", "special", "stable-range", "all"};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads the same fields as the flags, with underscores for dashes.
void load_config(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "space") cfg.space = value.get<std::string>();
      else if (key == "ring") cfg.ring = value.get<std::string>();
      else if (key == "max_degree") cfg.max_degree = value.get<int>();
      else if (key == "max_iterations") cfg.max_iterations = value.get<int>();
      else if (key == "cell_budget") cfg.cell_budget = value.get<std::uint64_t>();
      else if (key == "threads") cfg.threads = value.get<unsigned>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "suite") cfg.suite = value.get<std::string>();
      else if (key == "level") cfg.level = value.get<int>();
      else if (key == "n") cfg.n = value.get<int>();
      else if (key == "n_prime") cfg.n_prime = value.get<int>();
      else if (key != "schema_version") throw UsageError("unknown config field '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

/// --config is applied before the other flags so that flags win.
std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return {};
}

void add_common(CLI::App& app, Config& cfg, std::string& config_path) {
  app.add_option("--space", cfg.space, "Gamma-space, e.g. ab:2, sphere, B(t:circle)");
  app.add_option("--ring", cfg.ring, "z | q | f2 | f3 | f5 | fP");
  app.add_option("--max-degree", cfg.max_degree, "Largest homological degree")
      ->check(CLI::Range(0, 64));
  app.add_option("--max-iterations", cfg.max_iterations, "Largest tower level n")
      ->check(CLI::Range(1, 64));
  app.add_option("--cell-budget", cfg.cell_budget, "Largest level, in cells, that may be built");
  app.add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
  app.add_option("--format", cfg.format, "table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--config", config_path, "JSON file with the same fields as the flags");
}

StableOptions stable_options(const Config& cfg) {
  StableOptions o;
  o.max_iterations = cfg.max_iterations;
  o.chains.cell_budget = cfg.cell_budget;
  o.chains.threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  o.special.chains = o.chains;
  return o;
}

GammaPtr parse_space_arg(const Config& cfg) {
  if (cfg.space.empty()) throw UsageError("--space is required");
  return parse_space(cfg.space);
}

void emit(const Config& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot write '" + cfg.out + "'");
  file << text;
}

int cmd_compute(const Config& cfg, std::ostream& out, std::ostream& err) {
  const GammaPtr x = parse_space_arg(cfg);
  const Ring ring = Ring::parse(cfg.ring);
  const StableResult r = spectrum_homology(x, ring, cfg.max_degree, stable_options(cfg));
  const std::string& fmt = cfg.format.empty() ? "table" : cfg.format;
  emit(cfg, fmt == "json" ? result_to_json(r) + "\n" : fmt == "csv" ? render_csv(r) : render_text(r), out);
  if (r.unstable_above) {
    err << "budget exhausted: unstable above degree " << *r.unstable_above;
    if (!r.budget_note.empty()) err << " (" << r.budget_note << ")";
    err << '\n';
    return kBudget;
  }
  return kPass;
}

std::vector<CheckReport> run_suite(const std::string& suite, GammaPtr x, const Ring& ring,
                                   const Config& cfg) {
  const StableOptions o = stable_options(cfg);
  std::vector<CheckReport> reports;
  const bool all = suite == "all";
  if (all || suite == "segal" || suite == "rho")
    reports.push_back(check_rho_iso(x, ring, cfg.max_degree, o));
  if (all || suite == "segal" || suite == "wedge")
    reports.push_back(check_wedge_iso(x, cfg.n, cfg.n_prime, ring, cfg.max_degree, o));
  if (all || suite == "segal" || suite == "smash")
    reports.push_back(check_smash_vanishing(x, cfg.n, cfg.n_prime, ring, cfg.max_degree, o));
  if (all || suite == "square") reports.push_back(check_square(x, 2, cfg.max_degree, o));
  if (all || suite == "special") reports.push_back(check_special(x, o));
  if (all || suite == "stable-range")
    reports.push_back(check_stable_range(x, ring, cfg.max_degree, o));
  return reports;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  const GammaPtr x = parse_space_arg(cfg);
  const Ring ring = Ring::parse(cfg.ring);
  const std::vector<CheckReport> reports = run_suite(cfg.suite, x, ring, cfg);
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });

  const std::string& fmt = cfg.format.empty() ? "table" : cfg.format;
  std::string text;
  if (fmt == "json") {
    json j = {{"schema_version", kSchemaVersion}, {"kind", "check_suite"},
              {"suite", cfg.suite}, {"space", x->describe()}, {"passed", passed}};
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(json::parse(report_to_json(r)));
    text = j.dump(2) + "\n";
  } else if (fmt == "csv") {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      std::string block = render_csv(reports[i]);
      if (i > 0) block.erase(0, block.find('\n') + 1);
      text += block;
    }
  } else {
    for (const auto& r : reports) text += render_text(r);
    text += passed ? "all checks passed\n" : "some checks failed\n";
  }
  emit(cfg, text, out);
  return passed ? kPass : kCheckFailed;
}

int cmd_dump(const Config& cfg, std::ostream& out) {
  const GammaPtr x = parse_space_arg(cfg);
  const Ring ring = Ring::parse(cfg.ring);
  const StableOptions o = stable_options(cfg);
  const NormalizedChains chains(spectrum_level(x, cfg.level), o.chains);
  // One degree past max_degree so homology through max_degree survives a
  // round trip.
  const ChainComplex c = chains.complex(ring, cfg.max_degree + 1);
  c.check_square_zero();

  const std::string& fmt = cfg.format.empty() ? "json" : cfg.format;
  std::string text;
  if (fmt == "json") {
    text = complex_to_json(c) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows{{"degree", "rank", "boundary_nnz"}};
    for (int d = 0; d <= c.top_degree(); ++d)
      rows.push_back({std::to_string(d), std::to_string(c.rank(d)),
                      d == 0 ? "0" : std::to_string(c.boundary(d).nnz())});
    for (const auto& row : rows) {
      if (fmt == "csv") text += row[0] + "," + row[1] + "," + row[2] + "\n";
      else text += row[0] + std::string(8 - std::min<std::size_t>(7, row[0].size()), ' ') + row[1] +
                   std::string(10 - std::min<std::size_t>(9, row[1].size()), ' ') + row[2] + "\n";
    }
  }
  emit(cfg, text, out);
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  std::string config_path;
  CLI::App app{"Homology of Gamma-spaces by stabilization"};
  app.require_subcommand(1);

  CLI::App* compute = app.add_subcommand("compute", "Stable homology table of a Gamma-space");
  CLI::App* check = app.add_subcommand("check", "Run a property suite");
  CLI::App* dump = app.add_subcommand("dump", "Export the chain complex of one tower level");
  for (CLI::App* sub : {compute, check, dump}) add_common(*sub, cfg, config_path);
  check->add_option("--suite", cfg.suite, "segal | rho | wedge | smash | square | special | stable-range | all")
      ->check(CLI::IsMember(kSuites));
  check->add_option("--n", cfg.n, "First block size (wedge, smash)")->check(CLI::Range(1, 8));
  check->add_option("--n-prime", cfg.n_prime, "Second block size (wedge, smash)")
      ->check(CLI::Range(1, 8));
  dump->add_option("--level", cfg.level, "Tower level n of U(B^n X)")->check(CLI::Range(0, 16));

  try {
    if (const std::string path = find_config_path(args); !path.empty()) load_config(path, cfg);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg, out, err);
    if (*check) return cmd_check(cfg, out);
    return cmd_dump(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace gammahom::cli
