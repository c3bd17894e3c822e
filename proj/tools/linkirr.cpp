// Copyright 2026 The linkirr Authors
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


// linkirr: command-line front end.
//
// Exit status: 0 link-irregular / planar / success, 1 not link-irregular /
// non-planar / a failed criterion, 2 usage or input error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "linkirr/builtin.hpp"
#include "linkirr/enumeration.hpp"
#include "linkirr/graph6.hpp"
#include "linkirr/report.hpp"
#include "linkirr/verification.hpp"

namespace {

constexpr int kExitError = 2;

struct Options {
  std::string format = "text";
  int workers = linkirr::detail::default_workers();
  std::string input;
  int base = 0;
  std::optional<int> vertex;
  int n = -1;
  std::optional<int> r;
  bool all_r = false;
  bool connected = false;
  bool direct = false;
  std::string checkpoint;
  std::vector<int> criteria;
  double budget = 1800.0;
};

auto format_of(const Options& o) -> linkirr::Format {
  return o.format == "structured" ? linkirr::Format::kStructured : linkirr::Format::kText;
}

auto load(const Options& o) -> linkirr::Graph { return linkirr::load_graph(o.input, o.base, &std::cin); }

auto cmd_check(const Options& o) -> int {
  const auto g = load(o);
  std::cout << linkirr::render(linkirr::check_report(o.input, g), format_of(o));
  return linkirr::is_link_irregular(g).irregular ? 0 : 1;
}

auto cmd_links(const Options& o) -> int {
  const auto g = load(o);
  std::cout << linkirr::render(linkirr::links_report(o.input, g, o.vertex), format_of(o));
  return 0;
}

auto cmd_planar(const Options& o) -> int {
  const auto g = load(o);
  std::cout << linkirr::render(linkirr::planar_report(o.input, g), format_of(o));
  return linkirr::is_planar(g).planar ? 0 : 1;
}

auto cmd_enumerate(const Options& o) -> int {
  linkirr::GenSpec spec;
  spec.n = o.n;
  spec.regularity = o.r;
  spec.connected_only = o.connected;
  linkirr::validate(spec);
  const auto catalog = linkirr::enumerate(spec, o.workers);
  for (const auto& g : catalog) std::cout << linkirr::write_graph6(g) << '\n';
  std::cerr << catalog.size() << " graphs (" << spec.describe() << ")\n";
  return 0;
}

auto cmd_search(const Options& o) -> int {
  std::vector<std::optional<int>> degrees;
  if (o.all_r) {
    for (int r = 0; r < o.n; ++r)
      if ((o.n * r) % 2 == 0) degrees.emplace_back(r);
  } else {
    degrees.push_back(o.r);
  }
  std::vector<linkirr::SearchResult> results;
  for (const auto& r : degrees) {
    linkirr::GenSpec spec;
    spec.n = o.n;
    spec.regularity = r;
    spec.connected_only = o.connected;
    linkirr::SearchOptions opts;
    opts.workers = o.workers;
    opts.force_direct = o.direct;
    if (!o.checkpoint.empty()) opts.checkpoint = o.all_r ? o.checkpoint + ".r" + std::to_string(*r) : o.checkpoint;
    results.push_back(linkirr::search_link_irregular(spec, opts));
  }
  std::cout << linkirr::render(linkirr::search_report(results), format_of(o));
  return 0;
}

auto cmd_bounds(const Options& o) -> int {
  std::cout << linkirr::render(linkirr::bounds_report(o.n, o.r), format_of(o));
  return 0;
}

auto cmd_verify(const Options& o) -> int {
  linkirr::BatteryOptions bo;
  bo.workers = o.workers;
  bo.only.insert(o.criteria.begin(), o.criteria.end());
  bo.complement_search_budget = o.budget;
  for (int id : bo.only)
    if (id < 1 || id > linkirr::kCriterionCount) throw linkirr::GraphError("no criterion " + std::to_string(id));
  linkirr::Battery battery(bo);
  const auto results = battery.run();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (format_of(o) == linkirr::Format::kText) {
    std::cout << linkirr::format_ledger(results);
  } else {
    linkirr::Json doc = linkirr::Json::object();
    doc["kind"] = "verify-paper";
    linkirr::Json list = linkirr::Json::array();
    for (const auto& r : results) {
      linkirr::Json c = linkirr::Json::object();
      c["id"] = r.id;
      c["title"] = r.title;
      c["claim"] = r.claim;
      c["passed"] = r.passed;
      c["degraded"] = r.degraded;
      c["seconds"] = r.seconds;
      c["details"] = r.details;
      list.push_back(std::move(c));
    }
    doc["criteria"] = std::move(list);
    doc["all_passed"] = all;
    std::cout << doc.dump(2) << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linkirr: link-irregular graph toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--workers", o.workers, "Worker threads for enumeration and search")->check(CLI::Range(1, 1024));

  const auto input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "builtin:NAME, '-' for stdin, or a graph6 / edge-list file")->required();
    sub->add_option("--base", o.base, "First vertex index in edge lists")->check(CLI::IsMember({0, 1}));
  };
  const auto order = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Order")->required()->check(CLI::NonNegativeNumber);
  };

  auto* check = app.add_subcommand("check", "Full report; exit 0 when link-irregular, 1 when not");
  input(check);
  auto* links = app.add_subcommand("links", "Link degree table, or one link with --vertex");
  input(links);
  links->add_option("--vertex", o.vertex, "Show the link of this vertex");
  auto* enumerate = app.add_subcommand("enumerate", "Stream graph6 lines, one per isomorphism class");
  order(enumerate);
  enumerate->add_option("--r", o.r, "Regularity");
  enumerate->add_flag("--connected", o.connected, "Connected graphs only");
  auto* search = app.add_subcommand("search", "Exhaustive link-irregularity search");
  order(search);
  auto* r_opt = search->add_option("--r", o.r, "Regularity");
  search->add_flag("--all-r", o.all_r, "Sweep every parity-feasible regularity")->excludes(r_opt);
  search->add_flag("--connected", o.connected, "Connected graphs only");
  search->add_flag("--direct", o.direct, "Never route regular searches through complements");
  search->add_option("--checkpoint", o.checkpoint, "Resume file");
  auto* planar = app.add_subcommand("planar", "Planarity with certificate; exit 0 when planar, 1 when not");
  input(planar);
  auto* bounds = app.add_subcommand("bounds", "Edge bounds and moment estimates");
  bounds->add_option("--n", o.n, "Order (at least 6)")->required();
  bounds->add_option("--r", o.r, "Degree for link-type counts")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction battery; exit 0 only if every criterion passes");
  verify->add_option("--criterion", o.criteria, "Run only these criteria (repeatable)");
  verify->add_option("--budget", o.budget, "Seconds allowed for the 12-vertex complement search")->check(CLI::PositiveNumber);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*check) return cmd_check(o);
    if (*links) return cmd_links(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*search) return cmd_search(o);
    if (*planar) return cmd_planar(o);
    if (*bounds) return cmd_bounds(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
