/*
 * Copyright 2026 The topofilt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "topofilt/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "topofilt/enumeration.hpp"
#include "topofilt/equiv.hpp"
#include "topofilt/filtration.hpp"
#include "topofilt/serialize.hpp"
#include "topofilt/verify.hpp"

namespace topofilt::cli {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_failure, "cannot read " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    throw Error(Errc::parse_error, "malformed JSON in " + path);
  return j;
}

FiltrationSeq load_filtration_arg(const std::string& path) {
  return filtration_from_json(read_json_file(path));
}

Partition load_partition_arg(const std::string& path) {
  return partition_from_json(read_json_file(path));
}

BorelConvention convention_of(const std::string& name) {
  return name == "naive" ? BorelConvention::naive : BorelConvention::difference;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("TOPOFILT_CACHE")) return env;
  return {};
}

TopologyCatalog catalog_for(const CommandConfig& cfg) {
  if (!cfg.cache_dir.empty())
    return cache_load(cfg.n, cfg.cache_dir);
  return enumerate_topologies(cfg.n, cfg.jobs);
}

int cmd_enum(const CommandConfig& cfg, std::ostream& out) {
  const TopologyCatalog cat = catalog_for(cfg);
  if (cfg.format == "json") {
    json j;
    j["n"] = cat.n;
    j["count"] = cat.size();
    if (cfg.print_catalog) {
      json entries = json::array();
      for (const Topology& t : cat.entries) entries.push_back(t.opens().masks());
      j["entries"] = std::move(entries);
    }
    out << j.dump() << '\n';
  } else {
    out << cat.size() << '\n';
    if (cfg.print_catalog)
      for (const Topology& t : cat.entries)
        out << topology_to_json(t).dump() << '\n';
  }
  return 0;
}

int cmd_distance(const CommandConfig& cfg, std::ostream& out) {
  const Topology sigma = load_topology_arg(cfg.sigma_path);
  const Topology tau = load_topology_arg(cfg.tau_path);
  const auto d = distance(sigma, tau);
  if (cfg.format == "json") {
    json j;
    j["reachable"] = d.has_value();
    j["distance"] = d ? json(*d) : json(nullptr);
    out << j.dump() << '\n';
  } else {
    if (d)
      out << *d << '\n';
    else
      out << "unreachable\n";
  }
  return 0;
}

int cmd_filtrate(const CommandConfig& cfg, std::ostream& out) {
  const Topology sigma = load_topology_arg(cfg.sigma_path);
  const Topology tau = load_topology_arg(cfg.tau_path);
  const SlowestResult r = slowest(sigma, tau, cfg.max_stages);
  json j;
  j["n"] = sigma.ground_size();
  j["stages"] = filtration_to_json(r.seq)["stages"];
  j["target"] = tau.opens().masks();
  j["status"] = slowest_status_name(r.status);
  const auto d = distance(sigma, tau);
  j["distance"] = d ? json(*d) : json(nullptr);
  out << j.dump() << '\n';
  return 0;
}

int cmd_tame(const CommandConfig& cfg, std::ostream& out) {
  const FiltrationSeq seq = load_filtration_arg(cfg.filtration_path);
  const SetFamily fam = tame_sets(seq, cfg.alpha);
  if (cfg.format == "json") {
    json j;
    j["n"] = seq.ground_size();
    j["alpha"] = cfg.alpha;
    j["tame"] = fam.masks();
    out << j.dump() << '\n';
  } else {
    for (Mask m : fam) out << m << '\n';
  }
  return 0;
}

int cmd_approx(const CommandConfig& cfg, std::ostream& out) {
  const FiltrationSeq seq = load_filtration_arg(cfg.filtration_path);
  const Partition e = load_partition_arg(cfg.partition_path);
  const std::vector<Partition> chain = approx_chain(e, seq);
  json j;
  j["n"] = seq.ground_size();
  json steps = json::array();
  for (const Partition& p : chain) steps.push_back(partition_to_json(p)["blocks"]);
  j["chain"] = std::move(steps);
  j["meet"] = partition_to_json(relation_meet(chain))["blocks"];
  out << j.dump() << '\n';
  return 0;
}

void print_report_text(const verify::VerificationReport& rep, std::ostream& out) {
  out << '[' << verify::outcome_name(rep.outcome) << "] " << rep.property_id
      << "  instances=" << rep.instances_checked << "  ("
      << static_cast<long>(rep.elapsed_seconds * 1000.0) << " ms)\n";
  if (!rep.note.empty()) out << "    note: " << rep.note << '\n';
  if (!rep.counterexample.is_null())
    out << "    counterexample: " << rep.counterexample.dump() << '\n';
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
  verify::CheckOptions opts;
  opts.budget = cfg.chain_budget;
  opts.jobs = cfg.jobs;
  opts.convention = convention_of(cfg.borel_convention);

  std::vector<verify::VerificationReport> reports;
  if (cfg.all_properties) {
    reports = verify::check_all(cfg.n, opts);
  } else {
    reports.push_back(verify::check(cfg.property_id, cfg.n, opts));
  }

  bool any_fail = false;
  for (const auto& rep : reports)
    any_fail |= rep.outcome == verify::Outcome::fail;

  if (cfg.format == "json") {
    if (cfg.all_properties) {
      json arr = json::array();
      for (const auto& rep : reports) arr.push_back(verify::report_to_json(rep));
      out << arr.dump() << '\n';
    } else {
      out << verify::report_to_json(reports.front()).dump() << '\n';
    }
  } else {
    for (const auto& rep : reports) print_report_text(rep, out);
  }
  return any_fail ? 1 : 0;
}

int cmd_explore(const CommandConfig& cfg, std::ostream& out) {
  verify::CheckOptions opts;
  opts.budget = cfg.chain_budget;
  opts.jobs = cfg.jobs;
  opts.convention = convention_of(cfg.borel_convention);
  const verify::ExplorationReport rep = verify::explore(cfg.query, cfg.n, opts);
  if (cfg.format == "json") {
    out << verify::report_to_json(rep).dump() << '\n';
  } else {
    out << rep.query << ": " << rep.universe << '\n'
        << "instances: " << rep.instances_checked << '\n'
        << "findings: " << rep.findings.dump() << '\n';
  }
  return 0;
}

}  // namespace

Topology load_topology_arg(const std::string& arg) {
  if (arg == "sierpinski") return Topology::sierpinski();
  for (const char* prefix : {"discrete:", "indiscrete:"}) {
    if (arg.rfind(prefix, 0) == 0) {
      const int n = std::stoi(arg.substr(std::string(prefix).size()));
      require_ground_size(n);
      return arg[0] == 'd' ? Topology::discrete(n) : Topology::indiscrete(n);
    }
  }
  return topology_from_json(read_json_file(arg));
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite-topology filtration laboratory"};
  app.require_subcommand(1);
  CommandConfig cfg;
  cfg.cache_dir = default_cache_dir();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* enum_cmd = app.add_subcommand("enum", "count/list all topologies");
  enum_cmd->add_option("--n", cfg.n, "ground size")->required();
  enum_cmd->add_option("--cache", cfg.cache_dir, "catalog cache directory");
  enum_cmd->add_option("--jobs", cfg.jobs, "worker parallelism");
  enum_cmd->add_flag("--print", cfg.print_catalog, "print the catalog");
  add_format(enum_cmd);

  CLI::App* dist_cmd =
      app.add_subcommand("distance", "stage count of the slowest filtration");
  dist_cmd->add_option("--sigma", cfg.sigma_path, "coarser topology")->required();
  dist_cmd->add_option("--tau", cfg.tau_path, "finer topology")->required();
  add_format(dist_cmd);

  CLI::App* filt_cmd =
      app.add_subcommand("filtrate", "iterate the step operation to fixpoint");
  filt_cmd->add_option("--sigma", cfg.sigma_path)->required();
  filt_cmd->add_option("--tau", cfg.tau_path)->required();
  filt_cmd->add_option("--max-stages", cfg.max_stages, "stage budget");
  add_format(filt_cmd);

  CLI::App* tame_cmd = app.add_subcommand("tame", "alpha-tame family of a chain");
  tame_cmd->add_option("--filtration", cfg.filtration_path)->required();
  tame_cmd->add_option("--alpha", cfg.alpha)->required();
  add_format(tame_cmd);

  CLI::App* approx_cmd =
      app.add_subcommand("approx", "upper approximations of a relation");
  approx_cmd->add_option("--partition", cfg.partition_path)->required();
  approx_cmd->add_option("--filtration", cfg.filtration_path)->required();
  add_format(approx_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "exhaustive finite property checks");
  CLI::Option* prop_opt =
      verify_cmd->add_option("--property", cfg.property_id, "property id");
  prop_opt->excludes(
      verify_cmd->add_flag("--all", cfg.all_properties, "run the whole suite"));
  verify_cmd->add_option("--n", cfg.n, "ground size")->required();
  verify_cmd->add_option("--jobs", cfg.jobs, "worker parallelism");
  verify_cmd->add_option("--max-stages", cfg.chain_budget,
                         "chain length budget");
  verify_cmd->add_option("--borel-convention", cfg.borel_convention)
      ->check(CLI::IsMember({"difference", "naive"}));
  add_format(verify_cmd);

  CLI::App* explore_cmd =
      app.add_subcommand("explore", "hypothesis-necessity queries");
  explore_cmd->add_option("--query", cfg.query)->required();
  explore_cmd->add_option("--n", cfg.n)->required();
  explore_cmd->add_option("--max-stages", cfg.chain_budget);
  add_format(explore_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (enum_cmd->parsed()) {
      cfg.subcommand = "enum";
      return cmd_enum(cfg, out);
    }
    if (dist_cmd->parsed()) {
      cfg.subcommand = "distance";
      return cmd_distance(cfg, out);
    }
    if (filt_cmd->parsed()) {
      cfg.subcommand = "filtrate";
      return cmd_filtrate(cfg, out);
    }
    if (tame_cmd->parsed()) {
      cfg.subcommand = "tame";
      return cmd_tame(cfg, out);
    }
    if (approx_cmd->parsed()) {
      cfg.subcommand = "approx";
      return cmd_approx(cfg, out);
    }
    if (verify_cmd->parsed()) {
      cfg.subcommand = "verify";
      if (!cfg.all_properties && cfg.property_id.empty()) {
        err << "error: verify needs --property ID or --all\n";
        return 2;
      }
      return cmd_verify(cfg, out);
    }
    if (explore_cmd->parsed()) {
      cfg.subcommand = "explore";
      return cmd_explore(cfg, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace topofilt::cli
