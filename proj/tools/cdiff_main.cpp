#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cdiff/claims.hpp"
#include "cdiff/differential.hpp"
#include "cdiff/error.hpp"
#include "cdiff/function_spec.hpp"
#include "cdiff/number_theory.hpp"
#include "cdiff/report.hpp"
#include "cdiff/tables.hpp"
#include "cdiff/walsh.hpp"

namespace {

constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

using cdiff::Element;

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::string modulus;

  void attach(CLI::App* app) {
    app->add_option("--p", p, "Characteristic")->required();
    app->add_option("--n", n, "Extension degree")->required();
    app->add_option("--modulus", modulus, "Monic modulus coefficients, constant term first (e.g. 1,1,0,1)");
  }

  cdiff::Field build() const {
    std::optional<std::vector<std::uint32_t>> mod;
    if (!modulus.empty()) {
      mod.emplace();
      std::stringstream ss(modulus);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          mod->push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
          cdiff::fail(cdiff::ErrorCode::kInvalidArgument, "bad modulus coefficient '" + item + "'");
        }
      }
    }
    return cdiff::Field::build(p, n, mod);
  }
};


void print(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-differential uniformity and Walsh analysis over GF(p^n)"};
  app.set_version_flag("--version", std::string(CDIFF_VERSION));
  app.require_subcommand(1);

  FieldArgs fa;
  std::string function_spec;
  Element c = 0;
  std::string conv_name;
  unsigned threads = 0;

  auto* field_info = app.add_subcommand("field-info", "Print the field model as JSON");
  fa.attach(field_info);

  auto* uni = app.add_subcommand("uniformity", "c-differential uniformity of one function at one c");
  fa.attach(uni);
  uni->add_option("--function", function_spec, "monomial:D | poly:E=C,... | inverse | table:PATH")->required();
  uni->add_option("--c", c, "Rank of c")->required();
  uni->add_option("--a-convention", conv_name, "paper (a = 0 allowed when c != 1) or nonzero")
      ->required()
      ->check(CLI::IsMember({"paper", "nonzero"}));

  std::string c_set = "all";
  std::string format = "json";
  auto* spec = app.add_subcommand("spectrum", "Uniformity for every c of a c-set");
  fa.attach(spec);
  spec->add_option("--function", function_spec, "Function spec")->required();
  spec->add_option("--c-set", c_set, "all | nonzero | no01 | comma-separated ranks")->required();
  spec->add_option("--a-convention", conv_name, "paper or nonzero")
      ->required()
      ->check(CLI::IsMember({"paper", "nonzero"}));
  spec->add_option("--format", format, "csv (columns c_rank,uniformity,witness_a,witness_b,classification) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  spec->add_option("--threads", threads, "Worker threads, 0 = all cores");

  std::uint32_t delta = 2;
  Element apcn_max_q = 64;
  std::uint64_t walsh_limit = 1'000'000'000;
  auto* wc = app.add_subcommand("walsh-check", "Walsh-side statistics with equality verdicts");
  fa.attach(wc);
  wc->add_option("--function", function_spec, "Function spec")->required();
  wc->add_option("--c", c, "Rank of c (c != 1)")->required();
  wc->add_option("--delta", delta, "delta for the convolution statistic")->required();
  wc->add_option("--apcn-max-q", apcn_max_q, "Size guard for the APcN statistic");
  wc->add_option("--walsh-limit", walsh_limit, "Size guard for the Walsh-side convolution");

  std::uint32_t k = 1;
  Element a = 0;
  Element b = 0;
  auto* tri = app.add_subcommand("trinomial", "Roots of z^(p^k) - a z - b");
  fa.attach(tri);
  tri->add_option("--k", k, "Frobenius exponent")->required();
  tri->add_option("--a", a, "Rank of a")->required();
  tri->add_option("--b", b, "Rank of b")->required();

  std::uint32_t gp = 0;
  std::uint32_t gk = 0;
  std::uint32_t gn = 0;
  auto* gcd = app.add_subcommand("gcd-lemma", "gcd(p^k + 1, p^n - 1) by formula and directly");
  gcd->add_option("--p", gp, "Prime")->required();
  gcd->add_option("--k", gk, "k")->required();
  gcd->add_option("--n", gn, "n")->required();

  std::string claim;
  std::string grid = "quick";
  bool strict = false;
  std::string verify_format = "jsonl";
  auto* ver = app.add_subcommand("verify", "Check a claim against brute force over a parameter grid");
  ver->add_option("--claim", claim, "T0..T9 or all")->required();
  ver->add_option("--grid", grid, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  ver->add_flag("--strict", strict, "Exit 1 when any verdict is Refuted");
  ver->add_option("--format", verify_format, "jsonl (verdicts, then the summary on stderr) or summary")
      ->check(CLI::IsMember({"jsonl", "summary"}));
  ver->add_option("--threads", threads, "Worker threads, 0 = all cores");

  int table = 1;
  std::uint32_t max_n = 0;
  bool allow_long = false;
  std::string table_format = "text";
  auto* rep = app.add_subcommand("reproduce", "Recompute a reference table and diff it against the stored values");
  rep->add_option("--table", table, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  rep->add_option("--max-n", max_n, "Skip rows above this n");
  rep->add_flag("--allow-long", allow_long, "Also run rows marked long (days of CPU)");
  rep->add_option("--format", table_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  rep->add_option("--threads", threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const auto conv = conv_name.empty() ? cdiff::AConvention::kPaperFootnote : cdiff::parse_convention(conv_name);
    if (*field_info) {
      const auto field = fa.build();
      auto j = cdiff::field_to_json(field);
      j["q"] = field.q();
      j["primitive_modulus"] = field.modulus_is_primitive();
      j["primitive_element"] = field.primitive_element();
      j["log_tables"] = field.has_log_tables();
      print(j);
    } else if (*uni) {
      const auto field = fa.build();
      const auto f = cdiff::parse_function(field, function_spec);
      const auto r = cdiff::uniformity(f, c, conv);
      print(cdiff::to_json(cdiff::ReportEnvelope{"uniformity", field, f.origin().describe(), conv, cdiff::to_json(r)}));
    } else if (*spec) {
      const auto field = fa.build();
      const auto f = cdiff::parse_function(field, function_spec);
      const auto report = cdiff::spectrum(f, cdiff::parse_c_filter(c_set), conv, cdiff::SweepOptions{threads});
      if (format == "csv") {
        std::cout << cdiff::spectrum_csv(report);
      } else {
        print(cdiff::to_json(
            cdiff::ReportEnvelope{"spectrum", field, f.origin().describe(), conv, cdiff::spectrum_payload(report)}));
      }
    } else if (*wc) {
      const auto field = fa.build();
      const auto f = cdiff::parse_function(field, function_spec);
      const auto u = cdiff::uniformity(f, c, cdiff::AConvention::kPaperFootnote);
      const auto q = cdiff::Integer{field.q()};
      nlohmann::json payload{{"c", c}, {"delta", delta}, {"uniformity_paper", u.value}};
      const auto s = cdiff::pcn_power_sum(f, c);
      payload["pcn"] = {{"sum", cdiff::to_string(s)},
                        {"bound", cdiff::to_string(q * q * q * q)},
                        {"equality", s == q * q * q * q},
                        {"uniformity_is_1", u.value == 1}};
      if (field.q() <= apcn_max_q) {
        const auto ap = cdiff::apcn_statistic(f, c, apcn_max_q);
        payload["apcn"] = {{"lhs", cdiff::to_string(ap.lhs)},
                           {"rhs", cdiff::to_string(ap.rhs)},
                           {"equality", ap.equality()},
                           {"uniformity_at_most_2", u.value <= 2}};
      } else {
        payload["apcn"] = {{"skipped", "q above --apcn-max-q"}};
      }
      const auto cs = cdiff::convolution_statistic(f, c, delta, cdiff::WalshSide::kIfAffordable, walsh_limit);
      nlohmann::json conv_j{{"count_side", cdiff::to_string(cs.count_side)},
                            {"zero", cs.count_side == 0},
                            {"uniformity_at_most_delta", u.value <= delta}};
      if (cs.walsh_side) {
        conv_j["walsh_side"] = cdiff::to_string(*cs.walsh_side);
        conv_j["sides_agree"] = *cs.walsh_side == cs.count_side;
      } else {
        conv_j["walsh_side"] = nullptr;
      }
      payload["convolution"] = conv_j;
      const auto prof = cdiff::derivative_walsh_profile(f, c, delta);
      nlohmann::json per_a = nlohmann::json::array();
      for (auto v : prof.per_a) per_a.push_back(cdiff::to_string(v));
      payload["derivative"] = {{"per_a", per_a}, {"all_zero", prof.all_zero}};
      print(cdiff::to_json(cdiff::ReportEnvelope{"walsh-check", field, f.origin().describe(),
                                                 cdiff::AConvention::kPaperFootnote, payload}));
    } else if (*tri) {
      const auto field = fa.build();
      const auto o = cdiff::trinomial_roots(field, k, a, b);
      print(cdiff::to_json(cdiff::ReportEnvelope{
          "trinomial", field, "", std::nullopt,
          {{"k", o.k}, {"a", o.a}, {"b", o.b}, {"g", o.g}, {"m", o.m}, {"alpha", o.alpha}, {"beta", o.beta},
           {"count", o.count}, {"roots", o.roots}}}));
    } else if (*gcd) {
      const auto direct = cdiff::gcd_power_direct(gp, gk, gn);
      const auto formula = cdiff::gcd_power_formula(gp, gk, gn);
      print({{"p", gp}, {"k", gk}, {"n", gn}, {"formula", formula}, {"direct", direct}, {"agree", formula == direct}});
    } else if (*ver) {
      std::vector<cdiff::ClaimInstance> instances;
      if (claim == "all") {
        for (const auto& id : cdiff::claim_ids()) {
          auto g = cdiff::claim_grid(id, grid);
          instances.insert(instances.end(), g.begin(), g.end());
        }
      } else {
        instances = cdiff::claim_grid(claim, grid);
      }
      const auto result = cdiff::sweep(instances, cdiff::SweepOptions{threads});
      if (verify_format == "jsonl") {
        for (const auto& v : result.verdicts) std::cout << cdiff::to_json(v).dump() << '\n';
        std::cerr << cdiff::summary_table(result);
      } else {
        std::cout << cdiff::summary_table(result);
      }
      if (strict && result.any_refuted()) return kExitRefuted;
    } else if (*rep) {
      cdiff::ReproduceOptions opts;
      opts.max_n = max_n;
      opts.allow_long = allow_long;
      opts.sweep.threads = threads;
      const auto r = cdiff::reproduce_table(table, opts);
      if (table_format == "json") {
        print(cdiff::to_json(cdiff::ReportEnvelope{"reproduce", std::nullopt, "", std::nullopt, cdiff::to_json(r)}));
      } else {
        std::cout << "table " << table << '\n' << cdiff::format_diff(r);
      }
    }
  } catch (const cdiff::Error& e) {
    std::cerr << "cdiff: " << e.what() << '\n';
    return e.code() == cdiff::ErrorCode::kSizeGuardExceeded ? kExitGuard : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cdiff: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
