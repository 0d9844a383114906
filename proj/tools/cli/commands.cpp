// Copyright 2026 The mibs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mibs/action_spec.hpp"
#include "mibs/affine.hpp"
#include "mibs/bounds.hpp"
#include "mibs/certificate.hpp"
#include "mibs/error.hpp"
#include "mibs/oracle.hpp"
#include "mibs/wreath.hpp"

namespace mibs::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  std::optional<std::string> out_path;
  std::uint64_t limit_t = Limits{}.index;
  std::uint64_t limit_enum = Limits{}.enumeration;
  std::uint64_t limit_memo = Limits{}.memo;
  unsigned threads = 1;
  bool no_prune = false;

  std::string family;
  std::string subgroup = "natural";
  std::string ambient = "S";
  std::optional<std::int64_t> n, p, d, m, k, mibs;
  std::optional<std::string> order_h;
  std::optional<std::string> generators_path;
  bool index_degree = false;
  std::string certificate_path;
};

void write_output(const Options &opt, const std::string &text, std::ostream &out) {
  if (!opt.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*opt.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + *opt.out_path + " for writing");
  file << text;
}

std::string read_file(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

std::map<std::string, std::int64_t> family_params(const Options &opt) {
  std::map<std::string, std::int64_t> params;
  for (auto [name, value] : {std::pair{"n", opt.n}, std::pair{"p", opt.p},
                             std::pair{"d", opt.d}, std::pair{"m", opt.m},
                             std::pair{"k", opt.k}}) {
    if (value) params[name] = *value;
  }
  return params;
}

std::uint32_t require_param(const std::optional<std::int64_t> &value, const char *name) {
  if (!value) throw DomainError(std::string("missing --") + name);
  if (*value < 1 || *value > 1'000'000) throw DomainError(std::string("--") + name + " out of range");
  return static_cast<std::uint32_t>(*value);
}

std::string fixed(double value, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

std::string format_report(const VerificationReport &report) {
  std::ostringstream s;
  s << std::left << std::setw(7) << "level" << std::setw(24) << "claimed" << std::setw(24)
    << "computed" << "status\n";
  for (const auto &level : report.levels) {
    s << std::setw(7) << level.index << std::setw(24) << to_decimal(level.claimed)
      << std::setw(24) << to_decimal(level.computed)
      << (level.passed() ? "ok" : !level.order_matches ? "order mismatch" : "not descending")
      << "\n";
  }
  for (const auto &problem : report.problems) s << "problem: " << problem << "\n";
  if (report.first_failure() >= 0) s << "first failing level " << report.first_failure() << "\n";
  s << (report.passed() ? "verified" : "FAILED") << "\n";
  return s.str();
}

json report_json(const VerificationReport &report) {
  json levels = json::array();
  for (const auto &level : report.levels) {
    levels.push_back({{"index", level.index},
                      {"claimed", to_decimal(level.claimed)},
                      {"computed", to_decimal(level.computed)},
                      {"order_matches", level.order_matches},
                      {"descends", level.descends},
                      {"passed", level.passed()}});
  }
  return {{"levels", levels},
          {"level0_is_subgroup", report.level0_is_subgroup},
          {"terminal_trivial", report.terminal_trivial},
          {"length_consistent", report.length_consistent},
          {"problems", report.problems},
          {"first_failure", report.first_failure()},
          {"passed", report.passed()}};
}

// --- chain ------------------------------------------------------------------

int cmd_chain(const Options &opt, std::ostream &out, std::ostream &err) {
  ChainCertificate cert;
  PermutationGroup subgroup;
  if (opt.family == "affine") {
    const auto p = require_param(opt.p, "p");
    const auto d = require_param(opt.d, "d");
    if (p % 2 == 0) throw DomainError("odd p required");
    auto ctx = build_agl(p, d);
    cert = affine_chain(ctx);
    subgroup = ctx.group;
  } else {
    const auto m = require_param(opt.m, "m");
    const auto k = require_param(opt.k, "k");
    if (m < 5 || k < 2) throw DomainError("wreath chain needs m >= 5 and k >= 2");
    auto ctx = build_wreath(m, k);
    cert = wreath_chain(ctx);
    subgroup = ctx.group;
  }
  auto report = verify_certificate(cert, subgroup, opt.limit_enum);
  if (!report.passed()) {
    err << "self-check failed\n" << format_report(report);
    return kVerificationFailed;
  }
  if (opt.format == "text" && !opt.out_path) {
    out << "claimed_length " << cert.claimed_length << "\n" << format_report(report);
    return kOk;
  }
  write_output(opt, serialize_certificate(cert), out);
  if (opt.out_path) {
    out << "claimed_length " << cert.claimed_length << "\n";
  }
  return kOk;
}

// --- oracle -----------------------------------------------------------------

int cmd_oracle(const Options &opt, std::ostream &out) {
  ActionSpec spec;
  spec.ambient = parse_ambient(opt.ambient);
  spec.family = opt.subgroup;
  spec.params = family_params(opt);
  if (spec.family == "explicit") {
    if (!opt.generators_path) throw DomainError("explicit subgroup needs --generators");
    std::ifstream file(*opt.generators_path);
    if (!file) throw DomainError("cannot read " + *opt.generators_path);
    spec.generators = parse_generator_file(file, spec.degree);
  }
  auto resolved = resolve_action(spec, opt.limit_enum);
  Limits limits;
  limits.index = opt.limit_t;
  limits.enumeration = opt.limit_enum;
  limits.memo = opt.limit_memo;
  limits.threads = opt.threads;
  limits.prune = !opt.no_prune;
  auto action = build_coset_action(resolved.ambient_group, resolved.subgroup, limits.index);
  auto result = compute_mibs(action, limits);
  auto cert = witness_certificate(action, result, spec.ambient, resolved.description);

  if (opt.out_path) write_output(opt, serialize_certificate(cert), out);

  if (opt.format == "text") {
    out << "mibs " << result.value << "\n"
        << "degree " << action.degree() << "\n"
        << "subgroup_order " << to_decimal(resolved.subgroup.order()) << "\n"
        << "base";
    for (auto b : result.base) out << " " << b;
    out << "\norders";
    for (const auto &o : result.orders) out << " " << to_decimal(o);
    out << "\nstates " << result.states << "\n";
    return kOk;
  }
  json orders = json::array();
  for (const auto &o : result.orders) orders.push_back(to_decimal(o));
  json params = json::object();
  for (const auto &[key, value] : resolved.description.params) params[key] = value;
  json doc = {{"mibs", result.value},
              {"ambient", opt.ambient},
              {"n", resolved.ambient_group.degree()},
              {"degree", action.degree()},
              {"subgroup", {{"family", resolved.description.family},
                            {"params", params},
                            {"order", to_decimal(resolved.subgroup.order())}}},
              {"base", result.base},
              {"orders", orders},
              {"states", result.states},
              {"prune", limits.prune}};
  out << doc.dump(2) << "\n";
  return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Options &opt, std::ostream &out) {
  auto cert = parse_certificate(read_file(opt.certificate_path));
  auto subgroup = subgroup_from_description(cert.subgroup, cert.degree);
  auto report = verify_certificate(cert, subgroup, opt.limit_enum);

  if (cert.ambient == Ambient::alternating) {
    for (const auto &g : cert.subgroup.generators) {
      if (parity(g) == Parity::odd) {
        report.problems.push_back("subgroup generator " + print_cycles(g) +
                                  " is not in the alternating group");
        break;
      }
    }
  }
  const auto &params = cert.subgroup.params;
  auto has = [&](const char *key) { return params.count(key) != 0; };
  std::optional<PermutationGroup> expected;
  if (cert.subgroup.family == "agl" && has("p") && has("d")) {
    expected = build_agl(static_cast<std::uint32_t>(params.at("p")),
                         static_cast<std::uint32_t>(params.at("d")))
                   .group;
  } else if (cert.subgroup.family == "wreath" && has("m") && has("k")) {
    expected = build_wreath(static_cast<std::uint32_t>(params.at("m")),
                            static_cast<std::uint32_t>(params.at("k")))
                   .group;
  }
  if (expected && cert.ambient == Ambient::symmetric &&
      (expected->degree() != cert.degree || !equals(*expected, subgroup))) {
    report.problems.push_back("subgroup generators do not match the family parameters");
  }

  if (opt.format == "text") {
    out << format_report(report);
  } else {
    out << report_json(report).dump(2) << "\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

// --- bounds -----------------------------------------------------------------

int cmd_bounds(const Options &opt, std::ostream &out) {
  BoundsQuery query;
  query.ambient = parse_ambient(opt.ambient);
  if (opt.n) {
    if (*opt.n < 1) throw DomainError("--n must be positive");
    query.n = static_cast<std::uint64_t>(*opt.n);
  }
  if (opt.family == "agl" || opt.family == "affine") {
    query.family = "agl";
  } else if (!opt.family.empty()) {
    query.family = opt.family;
  }
  query.params = family_params(opt);
  query.params.erase("n");
  if (opt.order_h) query.order = parse_decimal(*opt.order_h);
  query.mibs = opt.mibs;
  query.index_degree = opt.index_degree;
  auto report = bounds_report(query);

  if (opt.format == "text") {
    std::size_t width = 0;
    for (const auto &[name, value] : report.quantities) width = std::max(width, name.size());
    for (const auto &c : report.comparisons) width = std::max(width, c.name.size());
    for (const auto &[name, value] : report.quantities) {
      out << std::left << std::setw(static_cast<int>(width + 2)) << name;
      std::visit(
          [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
              out << (v ? "true" : "false");
            } else if constexpr (std::is_same_v<T, double>) {
              out << fixed(v);
            } else {
              out << v;
            }
          },
          value);
      out << "\n";
    }
    for (const auto &c : report.comparisons) {
      out << std::left << std::setw(static_cast<int>(width + 2)) << c.name << fixed(c.lhs)
          << " " << c.relation << " " << fixed(c.rhs) << "  " << (c.holds ? "holds" : "FAILS")
          << "\n";
    }
  } else {
    json quantities = json::object();
    for (const auto &[name, value] : report.quantities) {
      std::visit([&](const auto &v) { quantities[name] = v; }, value);
    }
    json comparisons = json::array();
    for (const auto &c : report.comparisons) {
      comparisons.push_back({{"name", c.name},
                             {"relation", c.relation},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"holds", c.holds}});
    }
    json doc = {{"quantities", quantities},
                {"comparisons", comparisons},
                {"all_hold", report.all_hold()}};
    out << doc.dump(2) << "\n";
  }
  return report.all_hold() ? kOk : kVerificationFailed;
}

void add_format(CLI::App *cmd, Options &opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_limits(CLI::App *cmd, Options &opt) {
  cmd->add_option("--limit-enum", opt.limit_enum, "Maximum elements enumerated")
      ->check(CLI::PositiveNumber);
}

}  // namespace

std::vector<Permutation> parse_generator_file(std::istream &in, std::size_t &degree) {
  std::string line;
  std::size_t line_number = 0;
  degree = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++line_number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (degree == 0) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(body, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != body.size() || value < 1) {
        throw ParseError("generator file line " + std::to_string(line_number) +
                         ": expected a positive degree");
      }
      degree = static_cast<std::size_t>(value);
      continue;
    }
    try {
      gens.push_back(parse_cycles(body, degree));
    } catch (const ParseError &e) {
      throw ParseError("generator file line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (degree == 0) throw ParseError("generator file: missing degree line");
  return gens;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Maximum irredundant base sizes for symmetric and alternating groups", "mibs"};
  app.require_subcommand(1);

  auto *chain = app.add_subcommand("chain", "Build and self-check a chain certificate");
  chain->add_option("--family", opt.family, "affine or wreath")
      ->required()
      ->check(CLI::IsMember({"affine", "wreath"}));
  chain->add_option("--p", opt.p, "Prime");
  chain->add_option("--d", opt.d, "Dimension");
  chain->add_option("--m", opt.m, "Wreath base degree");
  chain->add_option("--k", opt.k, "Wreath top degree");
  chain->add_option("--out", opt.out_path, "Certificate path");
  add_format(chain, opt);
  add_limits(chain, opt);

  auto *oracle = app.add_subcommand("oracle", "Exact maximum irredundant base size");
  oracle->add_option("--ambient", opt.ambient, "S or A")->check(CLI::IsMember({"S", "A"}));
  oracle->add_option("--subgroup", opt.subgroup, "Point stabiliser family")
      ->check(CLI::IsMember({"natural", "agl", "wreath", "explicit"}));
  oracle->add_option("--n", opt.n, "Degree (natural action)");
  oracle->add_option("--p", opt.p, "Prime");
  oracle->add_option("--d", opt.d, "Dimension");
  oracle->add_option("--m", opt.m, "Wreath base degree");
  oracle->add_option("--k", opt.k, "Wreath top degree");
  oracle->add_option("--generators", opt.generators_path, "Generator file (explicit)");
  oracle->add_option("--out", opt.out_path, "Witness certificate path");
  oracle->add_option("--limit-t", opt.limit_t, "Maximum index |G:H|")->check(CLI::PositiveNumber);
  oracle->add_option("--limit-memo", opt.limit_memo, "Maximum memoised subgroups")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_flag("--no-prune", opt.no_prune, "Try every moved point, not one per orbit");
  add_format(oracle, opt);
  add_limits(oracle, opt);

  auto *verify = app.add_subcommand("verify", "Recheck a certificate from scratch");
  verify->add_option("certificate", opt.certificate_path, "Certificate JSON")->required();
  add_format(verify, opt);
  add_limits(verify, opt);

  auto *bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds");
  bounds->add_option("--n", opt.n, "Degree");
  bounds->add_option("--ambient", opt.ambient, "S or A")->check(CLI::IsMember({"S", "A"}));
  bounds->add_option("--family", opt.family, "agl or wreath")
      ->check(CLI::IsMember({"agl", "affine", "wreath"}));
  bounds->add_option("--p", opt.p, "Prime");
  bounds->add_option("--d", opt.d, "Dimension");
  bounds->add_option("--m", opt.m, "Wreath base degree");
  bounds->add_option("--k", opt.k, "Wreath top degree");
  bounds->add_option("--order-h", opt.order_h, "Order of H (decimal)");
  bounds->add_option("--mibs", opt.mibs, "A computed value to compare against the bounds");
  bounds->add_flag("--index-degree", opt.index_degree,
                   "Relate log |G:H| to the degree n (needs the order of H)");
  add_format(bounds, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (chain->parsed()) return cmd_chain(opt, out, err);
    if (oracle->parsed()) return cmd_oracle(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    return cmd_bounds(opt, out);
  } catch (const LimitExceeded &e) {
    err << "error: limit '" << e.limit() << "' exceeded: " << e.what() << "\n";
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace mibs::cli
