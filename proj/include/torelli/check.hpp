#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace torelli {

// One verified identity instance. The witness is filled only on failure.
struct CheckCase {
  std::string check;
  std::string id;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckCase> cases;

  void add(std::string check, std::string id, bool pass, std::string witness = {}) {
    cases.push_back({std::move(check), std::move(id), pass, pass ? std::string() : std::move(witness)});
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const CheckCase& c : cases) f += c.pass ? 0 : 1;
    return f;
  }
  bool all_pass() const { return !cases.empty() && failures() == 0; }
};

}  // namespace torelli
