#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "torelli/lpres.hpp"
#include "torelli/verikit.hpp"

namespace torelli {

namespace {

// Cyclically reduces a freely reduced word.
GenSeq cyclic_core(GenSeq w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[hi - 1] == inverse(w[lo])) {
    ++lo;
    --hi;
  }
  return GenSeq(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Least rotation of the cyclic core of w or of w^-1; equal keys mean conjugate words.
GenSeq conjugacy_key(std::span<const Gen> w) {
  GenSeq best;
  bool have = false;
  for (const GenSeq& v : {cyclic_core(reduce_gens(w)), cyclic_core(inverse_seq(reduce_gens(w)))}) {
    for (std::size_t r = 0; r < std::max<std::size_t>(v.size(), 1); ++r) {
      GenSeq rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return best;
}

std::shared_ptr<const std::set<GenSeq>> relator_keys(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::set<GenSeq>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto keys = std::make_shared<std::set<GenSeq>>();
  const GenSeq sq = alphabet_pm(Alphabet::SQ, n);
  for (const RelationInstance& r : relation_catalog("rk0", n)) {
    const SymWord w = SymWord::from_tokens(Alphabet::SK, n, r.relator());
    keys->insert(conjugacy_key(w.tokens()));
    for (const Gen& s : sq) {
      const Gen one[] = {s};
      keys->insert(conjugacy_key(phi_word(one, w).tokens()));
    }
  }
  keys->erase(GenSeq{});
  cache.emplace(n, keys);
  return keys;
}

}  // namespace

bool is_relator_instance(std::span<const Gen> w, int n) {
  for (const Gen& g : w) {
    if (!in_alphabet(Alphabet::SK, n, g)) return false;
  }
  if (w.size() == 2 && w[1] == inverse(w[0])) return true;
  const GenSeq key = conjugacy_key(w);
  if (key.empty()) return false;
  return relator_keys(n)->count(key) > 0;
}

CertificateReport check_certificate(std::string_view text) {
  CertificateReport rep;
  Certificate c;
  try {
    c = parse_certificate(text);
  } catch (const std::exception& e) {
    rep.messages.push_back(std::string("parse error: ") + e.what());
    return rep;
  }
  const Basis b = sym_basis(c.n);
  bool ok = true;
  for (const Insertion& s : c.steps) {
    if (!is_relator_instance(s.word, c.n)) {
      rep.messages.push_back("certificate line " + std::to_string(s.line) + ": non-relator insertion " +
                             to_string(s.word, b));
      ok = false;
    }
  }
  try {
    const SymWord end = applyrels(c.start, c.steps);
    if (!(end == c.expect)) {
      rep.messages.push_back("reduction mismatch: insertions give " + to_string(end) + ", expected " +
                             to_string(c.expect));
      ok = false;
    }
  } catch (const std::exception& e) {
    rep.messages.push_back(std::string("applyrels failed: ") + e.what());
    ok = false;
  }
  if (!equals(interpret(c.start), interpret(c.expect))) {
    rep.messages.push_back("semantic mismatch: start and expect are different automorphisms");
    ok = false;
  }
  if (ok) rep.messages.push_back("verified " + std::to_string(c.steps.size()) + " insertions");
  rep.ok = ok;
  return rep;
}

CertificateReport check_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    CertificateReport rep;
    rep.messages.push_back("cannot open " + path);
    return rep;
  }
  std::ostringstream os;
  os << in.rdbuf();
  return check_certificate(os.str());
}

}  // namespace torelli
