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
#include "mibs/certificate.hpp"

#include <algorithm>

#include <json.hpp>

#include "mibs/error.hpp"

namespace mibs {

using nlohmann::json;

std::string ambient_tag(Ambient ambient) {
  return ambient == Ambient::symmetric ? "S" : "A";
}

Ambient parse_ambient(const std::string &tag) {
  if (tag == "S") return Ambient::symmetric;
  if (tag == "A") return Ambient::alternating;
  throw ParseError("ambient must be \"S\" or \"A\", got \"" + tag + "\"");
}

BigInt ambient_order(Ambient ambient, std::size_t degree) {
  BigInt order = factorial(static_cast<unsigned>(degree));
  if (ambient == Ambient::alternating && degree >= 2) order /= 2;
  return order;
}

std::vector<Permutation> unique_conjugators(std::vector<Permutation> xs) {
  std::vector<Permutation> out;
  for (auto &x : xs) {
    if (std::find(out.begin(), out.end(), x) == out.end()) {
      out.push_back(std::move(x));
    }
  }
  return out;
}

namespace {

json cycles_array(const std::vector<Permutation> &perms) {
  json out = json::array();
  for (const auto &p : perms) out.push_back(print_cycles(p));
  return out;
}

std::vector<Permutation> parse_cycles_array(const json &array,
                                            std::size_t degree,
                                            const std::string &where) {
  if (!array.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Permutation> out;
  for (const auto &item : array) {
    if (!item.is_string()) {
      throw ParseError(where + ": expected cycle-notation strings");
    }
    out.push_back(parse_cycles(item.get<std::string>(), degree));
  }
  return out;
}

const json &field(const json &object, const char *name) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw ParseError(std::string("certificate: missing field \"") + name + "\"");
  }
  return *it;
}

}  // namespace

std::string serialize_certificate(const ChainCertificate &cert) {
  json params = json::object();
  for (const auto &[key, value] : cert.subgroup.params) params[key] = value;

  json levels = json::array();
  for (const auto &level : cert.levels) {
    levels.push_back({{"conjugators", cycles_array(level.conjugators)},
                      {"order", to_decimal(level.order)}});
  }
  json doc = {
      {"degree", cert.degree},
      {"ambient", ambient_tag(cert.ambient)},
      {"subgroup",
       {{"family", cert.subgroup.family},
        {"params", params},
        {"generators", cycles_array(cert.subgroup.generators)}}},
      {"levels", levels},
      {"claimed_length", cert.claimed_length},
  };
  return doc.dump(2) + "\n";
}

ChainCertificate parse_certificate(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("certificate: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate: expected an object");

  try {
    ChainCertificate cert;
    const auto &degree = field(doc, "degree");
    if (!degree.is_number_unsigned() || degree.get<std::size_t>() == 0) {
      throw ParseError("certificate: degree must be a positive integer");
    }
    cert.degree = degree.get<std::size_t>();
    cert.ambient = parse_ambient(field(doc, "ambient").get<std::string>());

    const auto &subgroup = field(doc, "subgroup");
    cert.subgroup.family = field(subgroup, "family").get<std::string>();
    static const char *families[] = {"agl", "wreath", "natural", "explicit"};
    if (std::find(std::begin(families), std::end(families),
                  cert.subgroup.family) == std::end(families)) {
      throw ParseError("certificate: unknown subgroup family \"" +
                       cert.subgroup.family + "\"");
    }
    for (const auto &[key, value] : field(subgroup, "params").items()) {
      if (!value.is_number_integer()) {
        throw ParseError("certificate: parameter \"" + key + "\" must be an integer");
      }
      cert.subgroup.params[key] = value.get<std::int64_t>();
    }
    cert.subgroup.generators = parse_cycles_array(
        field(subgroup, "generators"), cert.degree, "subgroup.generators");

    const auto &levels = field(doc, "levels");
    if (!levels.is_array()) throw ParseError("certificate: levels must be an array");
    for (const auto &level : levels) {
      CertificateLevel parsed;
      parsed.conjugators = parse_cycles_array(field(level, "conjugators"),
                                              cert.degree, "levels.conjugators");
      const auto &order = field(level, "order");
      if (!order.is_string()) {
        throw ParseError("certificate: level order must be a decimal string");
      }
      parsed.order = parse_decimal(order.get<std::string>());
      cert.levels.push_back(std::move(parsed));
    }
    const auto &length = field(doc, "claimed_length");
    if (!length.is_number_unsigned()) {
      throw ParseError("certificate: claimed_length must be a non-negative integer");
    }
    cert.claimed_length = length.get<std::size_t>();
    return cert;
  } catch (const json::exception &e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

bool VerificationReport::passed() const {
  return level0_is_subgroup && terminal_trivial && length_consistent &&
         problems.empty() &&
         std::all_of(levels.begin(), levels.end(),
                     [](const LevelCheck &c) { return c.passed(); });
}

std::ptrdiff_t VerificationReport::first_failure() const {
  for (const auto &check : levels) {
    if (!check.passed()) return static_cast<std::ptrdiff_t>(check.index);
  }
  return passed() ? -1 : static_cast<std::ptrdiff_t>(levels.size()) - 1;
}

VerificationReport verify_certificate(const ChainCertificate &cert,
                                      const PermutationGroup &subgroup,
                                      std::uint64_t limit) {
  if (subgroup.degree() != cert.degree) {
    throw DegreeMismatch("verify_certificate: subgroup degree " +
                         std::to_string(subgroup.degree()) +
                         " vs certificate degree " + std::to_string(cert.degree));
  }
  require_enumerable(subgroup, limit, "verify_certificate");

  VerificationReport report;
  report.length_consistent = cert.claimed_length == cert.levels.size();
  if (!report.length_consistent) {
    report.problems.push_back("claimed_length " +
                              std::to_string(cert.claimed_length) +
                              " differs from the number of levels " +
                              std::to_string(cert.levels.size()));
  }
  if (cert.levels.empty()) {
    report.problems.push_back("certificate has no levels");
    return report;
  }

  const BigInt ambient = ambient_order(cert.ambient, cert.degree);
  const auto identity = Permutation::identity(cert.degree);
  std::vector<Point> scratch(cert.degree);

  // h lies in H^x iff x h x^-1 lies in H.
  auto in_conjugate = [&](const Permutation &h, const Permutation &x,
                          const Permutation &x_inv) {
    auto ht = h.table();
    auto xt = x.table();
    auto xi = x_inv.table();
    for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = xi[ht[xt[i]]];
    return subgroup.contains(Permutation::from_table_unchecked(scratch));
  };

  PermutationGroup previous;
  for (std::size_t index = 0; index < cert.levels.size(); ++index) {
    const auto &level = cert.levels[index];
    LevelCheck check;
    check.index = index;
    check.claimed = level.order;
    if (level.conjugators.empty()) {
      report.problems.push_back("level " + std::to_string(index) +
                                " has no conjugators");
      report.levels.push_back(check);
      continue;
    }

    std::vector<Permutation> xs = unique_conjugators(level.conjugators);
    auto lead = std::find(xs.begin(), xs.end(), identity);
    if (lead != xs.end()) std::iter_swap(xs.begin(), lead);
    std::vector<Permutation> inverses;
    for (const auto &x : xs) inverses.push_back(inverse(x));

    SubgroupAccumulator acc(cert.degree);
    BigInt count = 0;
    const bool lead_is_identity = xs.front().is_identity();
    subgroup.for_each_element([&](const Permutation &k) {
      Permutation h = lead_is_identity ? k : conjugate(k, xs.front());
      for (std::size_t j = 1; j < xs.size(); ++j) {
        if (!in_conjugate(h, xs[j], inverses[j])) return;
      }
      ++count;
      acc.add(h);
    });
    PermutationGroup current = std::move(acc).finish();
    check.computed = count;
    check.order_matches = count == level.order && current.order() == count;

    if (index == 0) {
      report.level0_is_subgroup = equals(current, subgroup);
      check.descends = current.order() < ambient;
    } else {
      check.descends =
          current.order() < previous.order() && subgroup_of(current, previous);
    }
    report.levels.push_back(check);
    previous = std::move(current);
  }
  report.terminal_trivial = cert.levels.back().order == 1 && previous.is_trivial();
  if (!report.level0_is_subgroup) {
    report.problems.push_back("level 0 is not the subgroup H");
  }
  if (!report.terminal_trivial) {
    report.problems.push_back("last level is not the trivial group");
  }
  return report;
}

}  // namespace mibs
