#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "torelli/verikit.hpp"

namespace torelli {

namespace {

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass:
      return "pass";
    case CaseStatus::Fail:
      return "fail";
    case CaseStatus::Skip:
      return "skip";
  }
  return "?";
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << v;
  return os.str();
}

}  // namespace

std::size_t SuiteReport::count(CaseStatus s) const {
  std::size_t c = 0;
  for (const CaseResult& r : cases) c += r.status == s ? 1 : 0;
  return c;
}

unsigned worker_count() {
  if (const char* env = std::getenv("VERIKIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<CaseResult> run_cases(std::size_t count, const std::function<CaseResult(std::size_t)>& fn) {
  std::vector<CaseResult> out(count);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i] = {"case " + std::to_string(i), CaseStatus::Fail, std::string("exception: ") + e.what()};
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count == 0 ? 1 : count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
    return out;
  }
  // Each worker claims indices and writes only its own slots.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) guarded(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  return out;
}

void append_checks(std::vector<CaseResult>& out, const CheckReport& r) {
  for (const CheckCase& c : r.cases) {
    out.push_back({c.check + " " + c.id, c.pass ? CaseStatus::Pass : CaseStatus::Fail, c.witness});
  }
}

nlohmann::json to_json(const SuiteReport& r, bool with_time) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["params"] = {{"n", r.params.n}, {"k", r.params.k}, {"samples", r.params.samples}, {"seed", hex(r.params.seed)}};
  nlohmann::json cases = nlohmann::json::array();
  for (const CaseResult& c : r.cases) {
    nlohmann::json e = {{"id", c.id}, {"status", status_name(c.status)}};
    if (!c.witness.empty()) e["witness"] = c.witness;
    cases.push_back(std::move(e));
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"pass", r.count(CaseStatus::Pass)},
                  {"fail", r.count(CaseStatus::Fail)},
                  {"skip", r.count(CaseStatus::Skip)}};
  j["notes"] = r.notes;
  if (with_time) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (n=" << r.params.n << ", k=" << r.params.k << ", samples=" << r.params.samples
     << ", seed=" << hex(r.params.seed) << ")\n";
  for (const CaseResult& c : r.cases) {
    if (c.status != CaseStatus::Fail) continue;
    os << "  FAIL " << c.id;
    if (!c.witness.empty()) os << ": " << c.witness;
    os << "\n";
  }
  for (const std::string& note : r.notes) os << "  note: " << note << "\n";
  os << "  " << r.count(CaseStatus::Pass) << " pass, " << r.count(CaseStatus::Fail) << " fail, "
     << r.count(CaseStatus::Skip) << " skip in " << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace torelli
