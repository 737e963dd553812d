#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torelli/check.hpp"
#include "torelli/symgen.hpp"

namespace torelli {

struct SuiteParams {
  int n = 4;
  int k = 1;
  int samples = 100;
  std::uint64_t seed = 0x5EED;
};

enum class CaseStatus { Pass, Fail, Skip };

struct CaseResult {
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::vector<CaseResult> cases;
  // Remarks that qualify the result, e.g. corrected table entries.
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;

  std::size_t count(CaseStatus s) const;
  bool passed() const { return !cases.empty() && count(CaseStatus::Fail) == 0; }
};

const std::vector<std::string>& suite_names();
// Suite defaults: table1 runs at (3, 3), johnson and magnus-oracle at (3, 2)
// with 200 samples, the lambda, tb3, extension and jw-delta suites at n = 3,
// everything else at (4, 1).
SuiteParams default_params(std::string_view suite);
// Throws Error for an unknown suite or parameters the suite cannot use.
SuiteReport run_suite(std::string_view name, const SuiteParams& params);

// Worker count: VERIKIT_THREADS when set and positive, else the hardware count.
unsigned worker_count();
// Evaluates fn(0..count-1) across workers; results keep index order.
std::vector<CaseResult> run_cases(std::size_t count, const std::function<CaseResult(std::size_t)>& fn);
// Converts a CheckReport into case results, prefixing ids with the check name.
void append_checks(std::vector<CaseResult>& out, const CheckReport& r);

nlohmann::json to_json(const SuiteReport& r, bool with_time = true);
std::string to_text(const SuiteReport& r);

// Certificate verification: the certificate parses, every insertion is a
// relator instance, applyrels reaches the expected word, and both ends have
// the same image as automorphisms.
struct CertificateReport {
  bool ok = false;
  std::vector<std::string> messages;
};
CertificateReport check_certificate(std::string_view text);
CertificateReport check_certificate_file(const std::string& path);
// An inserted word is a relator instance when it is an unreduced pair t t^-1,
// or when, after free reduction, a cyclic rotation of it or of its inverse is
// a reduced rk0 relator or the image of one under phi(s), s in SQ^{+-1}.
bool is_relator_instance(std::span<const Gen> w, int n);

}  // namespace torelli
