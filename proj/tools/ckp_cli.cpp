// Copyright 2026 The ckpfock Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: enumerations, characters, identity verification,
// and Hirota scans, with JSON/CSV output. Identical invocations (including
// seeds) produce byte-identical output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckp/characters.hpp"
#include "ckp/dressed.hpp"
#include "ckp/hirota.hpp"
#include "ckp/hwv.hpp"
#include "ckp/identities.hpp"
#include "ckp/json_io.hpp"
#include "ckp/modes.hpp"
#include "ckp/partitions.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

// Half-integers are accepted as "3/2", "1.5" or "7"; canonical form is the
// doubled integer.
int64_t parse_half_integer2(const std::string& s) {
  ckp::Rat r = ckp::parse_rational(s);
  r *= 2;
  if (r.get_den() != 1) throw CLI::ValidationError("expected a half-integer: " + s);
  return int64_t(r.get_num().get_si());
}

// Output sink: stdout by default; --out writes to a file, resolved against
// CKP_OUT_DIR when the path is relative.
struct Sink {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::string full = path;
    const char* dir = std::getenv("CKP_OUT_DIR");
    if (dir && *dir && full.front() != '/') full = std::string(dir) + "/" + full;
    std::ofstream out(full);
    if (!out) throw std::runtime_error("cannot open output file " + full);
    out << text;
  }
};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_hwv(const std::string& algebra, const std::string& degree, bool json, const Sink& sink) {
  ckp::Algebra alg =
      algebra == "twisted" ? ckp::Algebra::twisted : ckp::Algebra::untwisted;
  int64_t d2 = parse_half_integer2(degree);
  ckp::HwvBasis basis = ckp::hwv_basis(alg, d2);
  if (json) {
    sink.write(dump(ckp::hwv_basis_to_json(basis)));
    return kExitOk;
  }
  std::string text = "algebra: " + algebra + "\ndegree: " + std::to_string(d2) +
                     "/2\ncount: " + std::to_string(basis.vectors.size()) + "\n";
  for (size_t i = 0; i < basis.vectors.size(); ++i) {
    text += "v" + std::to_string(i) + ": " + basis.vectors[i].str();
    if (alg == ckp::Algebra::untwisted)
      text += "  (charge " + std::to_string(basis.charges[i]) + ")";
    text += "\n";
  }
  sink.write(text);
  return kExitOk;
}

int cmd_character(const std::string& which, int64_t order, const Sink& sink) {
  ckp::Series s = [&] {
    if (which == "fock") return ckp::char_fock_bruteforce(order);
    if (which == "hwv")
      return ckp::char_hwv_from_counts(ckp::hwv_counts(ckp::Algebra::untwisted, order), order);
    if (which == "qt")
      return ckp::char_qt_from_counts(ckp::hwv_counts(ckp::Algebra::twisted, order), order);
    if (which == "triple")
      return ckp::char_triple_from_counts(ckp::hwv_counts(ckp::Algebra::untwisted, order), order);
    if (which == "crank") return ckp::crank_gf_from_table(ckp::CrankTable(int32_t(order / 2)), order);
    throw CLI::ValidationError("unknown character: " + which);
  }();
  sink.write(dump(ckp::series_to_json(s)));
  return kExitOk;
}

int cmd_verify(const std::string& identity, int64_t order, const Sink& sink) {
  std::vector<ckp::IdentityReport> reports;
  if (identity == "all") {
    reports = ckp::verify_all(order);
  } else {
    reports.push_back(ckp::verify_identity(identity, order));
  }
  nlohmann::json out = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    out.push_back(ckp::report_to_json(r));
    all_pass = all_pass && r.pass;
  }
  sink.write(dump(out));
  return all_pass ? kExitOk : kExitFalsified;
}

int cmd_hirota(bool scan, int64_t max_degree2, int trials, uint64_t seed, const Sink& sink) {
  if (!scan) throw CLI::ValidationError("hirota: --scan is the only supported mode");
  ckp::ScanReport r = ckp::no_solution_scan(max_degree2, trials, seed);
  nlohmann::json j;
  j["scan"] = "no-finite-solution";
  j["max_degree2"] = max_degree2;
  j["trials_per_degree"] = trials;
  j["seed"] = seed;
  j["monomials_checked"] = r.monomials_checked;
  j["random_checked"] = r.random_checked;
  j["status"] = r.clean ? "clean" : "falsified";
  if (!r.clean) j["violation"] = r.violation;
  sink.write(dump(j));
  return r.clean ? kExitOk : kExitFalsified;
}

int cmd_partitions(const std::string& family, const std::string& max_weight, bool json,
                   const Sink& sink) {
  int64_t w2 = parse_half_integer2(max_weight);
  if (json) {
    nlohmann::json j;
    j["family"] = family;
    j["max_weight2"] = w2;
    nlohmann::json items = nlohmann::json::array();
    if (family == "odp") {
      for (const auto& layer : ckp::enumerate_odp(w2))
        for (const auto& p : layer) items.push_back(p.parts2);
    } else if (family == "ptdo") {
      for (const auto& layer : ckp::enumerate_ptdo(w2))
        for (const auto& p : layer)
          items.push_back({{"triangular_index", p.m}, {"tail2", p.tail.parts2}});
    } else if (family == "bpdi") {
      for (const auto& bp : ckp::enumerate_bpdi(w2))
        items.push_back({{"pi1", bp.pi1}, {"pi2", bp.pi2}, {"W2", ckp::weight_W2(bp)},
                         {"birank", ckp::birank(bp)}});
    } else {
      throw CLI::ValidationError("unknown family: " + family);
    }
    j["items"] = std::move(items);
    sink.write(dump(j));
    return kExitOk;
  }
  // CSV count table: doubled weight, count.
  std::string csv = "weight2,count\n";
  std::vector<int64_t> counts;
  if (family == "odp") {
    counts = ckp::odp_counts(w2);
  } else if (family == "ptdo") {
    counts = ckp::ptdo_counts(w2);
  } else if (family == "bpdi") {
    counts.assign(w2 + 1, 0);
    for (const auto& bp : ckp::enumerate_bpdi(w2)) ++counts[ckp::weight_W2(bp)];
  } else {
    throw CLI::ValidationError("unknown family: " + family);
  }
  for (int64_t i = 0; i < int64_t(counts.size()); ++i)
    csv += std::to_string(i) + "," + std::to_string(counts[i]) + "\n";
  sink.write(csv);
  return kExitOk;
}

int cmd_bijection(const std::string& degree, const Sink& sink) {
  int64_t d2 = parse_half_integer2(degree);
  ckp::HwvBasis basis = ckp::hwv_basis(ckp::Algebra::untwisted, d2);
  std::map<int32_t, int64_t> by_charge;
  for (int32_t c : basis.charges) ++by_charge[c];
  std::map<int32_t, int64_t> by_birank;
  int64_t bp_count = 0;
  for (const auto& bp : ckp::enumerate_bpdi(d2)) {
    if (ckp::weight_W2(bp) != d2) continue;
    ++bp_count;
    ++by_birank[ckp::birank(bp)];
  }
  int64_t ptdo = ckp::ptdo_counts(d2)[d2];
  std::string text = "degree2," + std::to_string(d2) + "\n";
  text += "hwv_count," + std::to_string(basis.vectors.size()) + "\n";
  text += "ptdo_count," + std::to_string(ptdo) + "\n";
  text += "bpdi_count," + std::to_string(bp_count) + "\n";
  text += "charge,hwv,birank\n";
  std::map<int32_t, std::pair<int64_t, int64_t>> merged;
  for (const auto& [c, n] : by_charge) merged[c].first = n;
  for (const auto& [c, n] : by_birank) merged[c].second = n;
  bool match = basis.vectors.size() == size_t(ptdo) && size_t(bp_count) == basis.vectors.size();
  for (const auto& [c, pair] : merged) {
    text += std::to_string(c) + "," + std::to_string(pair.first) + "," +
            std::to_string(pair.second) + "\n";
    match = match && pair.first == pair.second;
  }
  text += std::string("match,") + (match ? "yes" : "no") + "\n";
  sink.write(text);
  return match ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ckp: exact workbench for the CKP Fock space, its two bosonizations, and the "
               "associated character identities"};
  app.require_subcommand(1);
  Sink sink;
  app.add_option("--out", sink.path,
                 "write output to this file (relative paths resolve against $CKP_OUT_DIR)");

  std::string algebra = "untwisted", degree = "0", which = "fock", identity = "all",
              family = "odp", max_weight = "0";
  int64_t order = 40;
  bool as_json = false, scan = false;
  std::string max_degree = "6";
  int trials = 100;
  uint64_t seed = 1;

  auto* hwv = app.add_subcommand("hwv", "highest weight vector basis at one degree");
  hwv->add_option("--algebra", algebra)->check(CLI::IsMember({"untwisted", "twisted"}));
  hwv->add_option("--degree", degree)->required();
  hwv->add_flag("--json", as_json);

  auto* character = app.add_subcommand("character", "graded dimensions as Series JSON");
  character->add_option("--which", which)
      ->check(CLI::IsMember({"fock", "hwv", "qt", "triple", "crank"}));
  character->add_option("--order", order);

  auto* verify = app.add_subcommand("verify", "run the identity registry");
  verify->add_option("--identity", identity);
  verify->add_option("--order", order);

  auto* hirota = app.add_subcommand("hirota", "no-finite-solution scan");
  hirota->add_flag("--scan", scan);
  hirota->add_option("--max-degree", max_degree);
  hirota->add_option("--trials", trials);
  hirota->add_option("--seed", seed);

  auto* partitions = app.add_subcommand("partitions", "indexing families by weight");
  partitions->add_option("--family", family)->check(CLI::IsMember({"odp", "ptdo", "bpdi"}));
  partitions->add_option("--max-weight", max_weight)->required();
  partitions->add_flag("--json", as_json);

  auto* bijection = app.add_subcommand("bijection", "P_tdo vs BP_DI vs solver at one degree");
  bijection->add_option("--degree", degree)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hwv->parsed()) return cmd_hwv(algebra, degree, as_json, sink);
    if (character->parsed()) return cmd_character(which, order, sink);
    if (verify->parsed()) return cmd_verify(identity, order, sink);
    if (hirota->parsed()) return cmd_hirota(scan, parse_half_integer2(max_degree), trials, seed, sink);
    if (partitions->parsed()) return cmd_partitions(family, max_weight, as_json, sink);
    if (bijection->parsed()) return cmd_bijection(degree, sink);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitUsage;
}
