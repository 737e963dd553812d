#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "torelli/lpres.hpp"
#include "torelli/verikit.hpp"

using namespace torelli;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::uint64_t parse_seed(const std::string& text) {
  std::size_t used = 0;
  const std::uint64_t v = std::stoull(text, &used, 0);
  if (used != text.size()) throw Error("bad seed '" + text + "'");
  return v;
}

// One JSON object per line, words in the token text syntax.
void dump_catalog(const std::string& kind, int n, int k) {
  for (const RelationInstance& r : relation_catalog(kind, n, k)) {
    const nlohmann::json line = {{"family", r.family},
                                 {"params", r.params},
                                 {"lhs", to_string(r.lhs, r.basis)},
                                 {"rhs", to_string(r.rhs, r.basis)},
                                 {"corrected", r.corrected}};
    std::cout << line.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verikit: exact verification of Torelli subgroup identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, seed_text, format = "json", report_path;
  int n = 0, k = 0, samples = 0;
  verify->add_option("--suite", suite, "Suite name")->required();
  auto* n_opt = verify->add_option("--n", n, "Rank n");
  auto* k_opt = verify->add_option("--k", k, "Number of y generators");
  auto* s_opt = verify->add_option("--samples", samples, "Sample count for sampled checks");
  auto* seed_opt = verify->add_option("--seed", seed_text, "Seed (hex with 0x prefix, or decimal)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--report", report_path, "Also write the JSON report to this file");

  auto* catalog = app.add_subcommand("catalog", "Print a relation catalog, one JSON object per line");
  std::string kind;
  int cn = 0, ck = 1;
  catalog->add_option("--dump", kind, "Catalog kind")->required();
  catalog->add_option("--n", cn, "Rank n")->required();
  catalog->add_option("--k", ck, "Number of y generators (table1, s1prime)");

  auto* certify = app.add_subcommand("certify", "Check a relator-insertion certificate");
  std::string cert_path;
  certify->add_option("--file", cert_path, "Certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      SuiteParams p = default_params(suite);
      if (*n_opt) p.n = n;
      if (*k_opt) p.k = k;
      if (*s_opt) p.samples = samples;
      if (*seed_opt) p.seed = parse_seed(seed_text);
      const SuiteReport r = run_suite(suite, p);
      if (format == "json") {
        std::cout << to_json(r).dump(2) << "\n";
      } else {
        std::cout << to_text(r);
      }
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw Error("cannot write " + report_path);
        out << to_json(r).dump(2) << "\n";
      }
      return r.passed() ? kPass : kFail;
    }
    if (*catalog) {
      dump_catalog(kind, cn, ck);
      return kPass;
    }
    if (*certify) {
      const CertificateReport r = check_certificate_file(cert_path);
      for (const std::string& m : r.messages) std::cout << m << "\n";
      if (r.ok) return kPass;
      const bool parse_problem = !r.messages.empty() && (r.messages[0].rfind("parse error", 0) == 0 ||
                                                         r.messages[0].rfind("cannot open", 0) == 0);
      return parse_problem ? kUsage : kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
