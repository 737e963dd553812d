#include "torelli/symgen.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace torelli {

const char* alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::SA:
      return "SA";
    case Alphabet::SQ:
      return "SQ";
    case Alphabet::SK:
      return "SK";
    case Alphabet::SZ:
      return "SZ";
    case Alphabet::SC:
      return "SC";
  }
  return "?";
}

namespace {

void require_n(int n) {
  if (n < 2) throw Error("symbolic alphabets need n >= 2, got " + std::to_string(n));
}

void append_SA(GenSeq& out, int n) {
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      out.push_back(gen_M(a, b));
      out.push_back(gen_M(-a, b));
    }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(gen_P(a, b));
  for (int a = 1; a <= n; ++a) out.push_back(gen_I(a));
}

bool is_SA(int n, const Gen& g) {
  const Basis b = sym_basis(n);
  switch (g.kind) {
    case GenKind::M:
      return b.is_x(g.p0) && b.is_x(g.p1) && gen_of(g.p0) != gen_of(g.p1);
    case GenKind::P:
      return 1 <= g.p0 && g.p0 < g.p1 && g.p1 <= n;
    case GenKind::I:
      return 1 <= g.p0 && g.p0 <= n;
    default:
      return false;
  }
}

bool is_SZ(int n, const Gen& g) {
  const Basis b = sym_basis(n);
  return g.kind == GenKind::M && b.is_x(g.p0) && g.p0 > 0 && b.is_y(g.p1);
}

bool is_SK(int n, const Gen& g) {
  const Basis b = sym_basis(n);
  switch (g.kind) {
    case GenKind::C:
      return (g.p0 == b.y() && b.is_x(g.p1)) || (b.is_x(g.p0) && g.p0 > 0 && b.is_y(g.p1));
    case GenKind::Mc:
      return b.is_x(g.p0) && gen_of(g.p0) != gen_of(g.p1) && gen_of(g.p0) != gen_of(g.p2) &&
             ((b.is_y(g.p1) && b.is_x(g.p2)) || (b.is_x(g.p1) && b.is_y(g.p2)));
    default:
      return false;
  }
}

bool is_SC(int n, const Gen& g) {
  const Basis b = sym_basis(n);
  if (is_SA(n, g)) return true;
  if (g.kind == GenKind::M) return b.is_x(g.p0) && b.is_y(g.p1);
  if (g.kind == GenKind::C) return g.p0 == b.y() && b.is_x(g.p1);
  return false;
}

}  // namespace

GenSeq alphabet(Alphabet a, int n) {
  require_n(n);
  const Basis b = sym_basis(n);
  const Letter y = b.y();
  GenSeq out;
  switch (a) {
    case Alphabet::SA:
      append_SA(out, n);
      break;
    case Alphabet::SZ:
      for (int i = 1; i <= n; ++i) out.push_back(gen_M(i, y));
      break;
    case Alphabet::SQ:
      append_SA(out, n);
      for (int i = 1; i <= n; ++i) out.push_back(gen_M(i, y));
      break;
    case Alphabet::SK:
      for (int i = 1; i <= n; ++i) out.push_back(gen_C(y, i));
      for (int i = 1; i <= n; ++i) out.push_back(gen_C(i, y));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          for (int al : {1, -1})
            for (int ep : {1, -1})
              for (int be : {1, -1}) out.push_back(gen_Mc(al * i, ep * y, be * j));
        }
      break;
    case Alphabet::SC:
      append_SA(out, n);
      for (int i = 1; i <= n; ++i) {
        out.push_back(gen_M(i, y));
        out.push_back(gen_M(-i, y));
      }
      for (int i = 1; i <= n; ++i) out.push_back(gen_C(y, i));
      break;
  }
  return out;
}

GenSeq alphabet_pm(Alphabet a, int n) {
  GenSeq out;
  for (const Gen& g : alphabet(a, n)) {
    out.push_back(g);
    const Gen h = inverse(g);
    if (h != g) out.push_back(h);
  }
  return out;
}

bool in_alphabet(Alphabet a, int n, const Gen& g) {
  switch (a) {
    case Alphabet::SA:
      return is_SA(n, g);
    case Alphabet::SZ:
      return is_SZ(n, g) || is_SZ(n, inverse(g));
    case Alphabet::SQ:
      return is_SA(n, g) || is_SZ(n, g) || is_SZ(n, inverse(g));
    case Alphabet::SK:
      return is_SK(n, g);
    case Alphabet::SC:
      return is_SC(n, g);
  }
  return false;
}

SymWord SymWord::from_tokens(Alphabet alphabet, int n, std::span<const Gen> tokens) {
  require_n(n);
  for (const Gen& g : tokens) {
    if (!in_alphabet(alphabet, n, g)) {
      throw Error("token " + to_string(g, sym_basis(n)) + " is not in " + alphabet_name(alphabet) + "^{+-1}");
    }
  }
  SymWord w(alphabet, n);
  w.tokens_ = reduce_gens(tokens);
  return w;
}

SymWord SymWord::parse(Alphabet alphabet, int n, std::string_view text) {
  return from_tokens(alphabet, n, parse_gen_seq(sym_basis(n), text));
}

SymWord sym_mul(const SymWord& u, const SymWord& v) {
  if (u.alphabet() != v.alphabet() || u.n() != v.n()) throw Error("sym_mul: alphabet mismatch");
  GenSeq t = u.tokens();
  t.insert(t.end(), v.tokens().begin(), v.tokens().end());
  return SymWord::from_tokens(u.alphabet(), u.n(), t);
}

SymWord sym_inv(const SymWord& w) { return SymWord::from_tokens(w.alphabet(), w.n(), inverse_seq(w.tokens())); }

std::string to_string(const SymWord& w) { return to_string(w.tokens(), w.basis()); }

Endo interpret(std::span<const Gen> tokens, int n) { return interpret_gens(tokens, sym_basis(n)); }
Endo interpret(const SymWord& w) { return interpret(w.tokens(), w.n()); }

SymWord applyrels(const SymWord& start, std::span<const Insertion> steps) {
  GenSeq cur = start.tokens();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Insertion& s = steps[i];
    if (s.position > cur.size()) {
      throw Error("applyrels: step " + std::to_string(i) + " inserts at " + std::to_string(s.position) +
                  " but the word has length " + std::to_string(cur.size()));
    }
    for (const Gen& g : s.word) {
      if (!in_alphabet(start.alphabet(), start.n(), g)) {
        throw Error("applyrels: step " + std::to_string(i) + " uses token outside the alphabet");
      }
    }
    cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(s.position), s.word.begin(), s.word.end());
    cur = reduce_gens(cur);
  }
  return SymWord::from_tokens(start.alphabet(), start.n(), cur);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Certificate c;
  bool have_header = false;
  bool have_start = false;
  bool have_expect = false;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& why) -> Error {
      return Error("certificate line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_header) {
      if (!starts_with(line, "certificate v1;")) throw fail("expected 'certificate v1; n=<n>'");
      const std::string_view rest = trim(line.substr(15));
      if (!starts_with(rest, "n=")) throw fail("expected n=<n>");
      try {
        c.n = std::stoi(std::string(rest.substr(2)));
      } catch (const std::exception&) {
        throw fail("bad n");
      }
      if (c.n < 2) throw fail("n must be at least 2");
      c.start = SymWord(Alphabet::SK, c.n);
      c.expect = SymWord(Alphabet::SK, c.n);
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw fail("missing ':'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view body = trim(line.substr(colon + 1));
    try {
      if (key == "start") {
        if (have_start) throw fail("duplicate start");
        c.start = SymWord::parse(Alphabet::SK, c.n, body);
        have_start = true;
      } else if (starts_with(key, "insert")) {
        if (!have_start || have_expect) throw fail("insert must come between start and expect");
        const std::string_view at = trim(key.substr(6));
        if (at.empty() || at[0] != '@') throw fail("expected insert @<pos>");
        Insertion ins;
        ins.line = lineno;
        ins.position = std::stoul(std::string(at.substr(1)));
        ins.word = parse_gen_seq(sym_basis(c.n), body);
        for (const Gen& g : ins.word) {
          if (!in_alphabet(Alphabet::SK, c.n, g)) throw fail("inserted token outside SK");
        }
        c.steps.push_back(std::move(ins));
      } else if (key == "expect") {
        if (have_expect) throw fail("duplicate expect");
        c.expect = SymWord::parse(Alphabet::SK, c.n, body);
        have_expect = true;
      } else {
        throw fail("unknown key '" + std::string(key) + "'");
      }
    } catch (const std::exception& e) {
      if (starts_with(e.what(), "certificate line")) throw;
      throw fail(e.what());
    }
  }
  if (!have_header || !have_start || !have_expect) throw Error("certificate: missing header, start or expect");
  return c;
}

std::string format_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "certificate v1; n=" << c.n << "\n";
  os << "start: " << to_string(c.start) << "\n";
  for (const Insertion& s : c.steps) os << "insert @" << s.position << ": " << to_string(s.word, sym_basis(c.n)) << "\n";
  os << "expect: " << to_string(c.expect) << "\n";
  return os.str();
}

}  // namespace torelli
