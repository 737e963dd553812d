#include "torelli/fgword.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace torelli {

void require_same_basis(const Basis& a, const Basis& b, const char* what) {
  if (!(a == b)) {
    throw Error(std::string(what) + ": basis mismatch F(" + std::to_string(a.n) + "," +
                std::to_string(a.k) + ") vs F(" + std::to_string(b.n) + "," + std::to_string(b.k) + ")");
  }
}

Word WordBuilder::build() && {
  Word w(basis_);
  w.letters_ = std::move(buf_);
  return w;
}

Word reduce(Basis basis, std::span<const Letter> letters) {
  WordBuilder b(basis);
  b.reserve(letters.size());
  for (Letter l : letters) {
    if (!basis.contains(l)) {
      throw Error("letter " + std::to_string(l) + " outside basis of rank " + std::to_string(basis.rank()));
    }
    b.push(l);
  }
  return std::move(b).build();
}

Word Word::from_letters(Basis basis, std::span<const Letter> letters) { return reduce(basis, letters); }

Word mul(const Word& u, const Word& v) {
  require_same_basis(u.basis(), v.basis(), "mul");
  WordBuilder b(u.basis());
  b.reserve(u.size() + v.size());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word mul(std::initializer_list<Word> ws) {
  if (ws.size() == 0) throw Error("mul: empty product has no basis");
  const Basis basis = ws.begin()->basis();
  WordBuilder b(basis);
  for (const Word& w : ws) {
    require_same_basis(basis, w.basis(), "mul");
    b.append(w);
  }
  return std::move(b).build();
}

Word inv(const Word& w) {
  WordBuilder b(w.basis());
  b.reserve(w.size());
  b.append_inverse(w);
  return std::move(b).build();
}

Word power(const Word& w, int e) {
  WordBuilder b(w.basis());
  for (int i = 0; i < (e < 0 ? -e : e); ++i) {
    if (e > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

Word commutator(const Word& u, const Word& v) {
  require_same_basis(u.basis(), v.basis(), "commutator");
  WordBuilder b(u.basis());
  b.append(u);
  b.append(v);
  b.append_inverse(u);
  b.append_inverse(v);
  return std::move(b).build();
}

CyclicDecomposition cyclic_reduce(const Word& w) {
  auto ls = w.letters();
  std::size_t i = 0;
  std::size_t j = ls.size();
  while (j - i >= 2 && ls[i] == -ls[j - 1]) {
    ++i;
    --j;
  }
  return {Word::from_letters(w.basis(), ls.subspan(i, j - i)), Word::from_letters(w.basis(), ls.first(i))};
}

bool is_conjugate(const Word& u, const Word& v) {
  require_same_basis(u.basis(), v.basis(), "is_conjugate");
  const Word wu = cyclic_reduce(u).core;
  const Word wv = cyclic_reduce(v).core;
  auto cu = wu.letters();
  auto cv = wv.letters();
  if (cu.size() != cv.size()) return false;
  if (cu.empty()) return true;
  // Cyclically reduced words are conjugate iff they are cyclic rotations.
  std::vector<Letter> doubled(cu.begin(), cu.end());
  doubled.insert(doubled.end(), cu.begin(), cu.end());
  return std::search(doubled.begin(), doubled.end(), cv.begin(), cv.end()) != doubled.end();
}

std::vector<std::int64_t> abelianize(const Word& w) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.basis().rank()), 0);
  for (Letter l : w.letters()) v[static_cast<std::size_t>(gen_of(l) - 1)] += sign_of(l);
  return v;
}

std::string letter_name(Basis basis, Letter l) {
  const int g = gen_of(l);
  std::string s;
  if (g <= basis.n) {
    s = "x" + std::to_string(g);
  } else if (basis.k == 1) {
    s = "y";
  } else {
    s = "y" + std::to_string(g - basis.n);
  }
  if (l < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += letter_name(w.basis(), l);
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Letter parse_letter(Basis basis, std::string_view text) {
  std::string_view s = trim(text);
  int exponent = 1;
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    exponent = parse_int(s.substr(caret + 1), text);
    s = s.substr(0, caret);
  }
  if (exponent != 1 && exponent != -1) throw Error("exponent must be +-1 in '" + std::string(text) + "'");
  if (s.empty()) throw Error("empty letter");
  Letter g = 0;
  if (s[0] == 'x') {
    g = parse_int(s.substr(1), text);
    if (g < 1 || g > basis.n) throw Error("letter '" + std::string(text) + "' outside basis");
  } else if (s[0] == 'y') {
    const int j = s.size() == 1 ? 1 : parse_int(s.substr(1), text);
    if (j < 1 || j > basis.k) throw Error("letter '" + std::string(text) + "' outside basis");
    g = basis.n + j;
  } else {
    throw Error("unknown letter '" + std::string(text) + "'");
  }
  return exponent * g;
}

Word parse_word(Basis basis, std::string_view text) {
  std::string_view s = trim(text);
  std::vector<Letter> letters;
  if (s == "1" || s.empty()) return Word(basis);
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    std::size_t end = pos;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    if (end > pos) letters.push_back(parse_letter(basis, s.substr(pos, end - pos)));
    pos = end;
  }
  return reduce(basis, letters);
}

}  // namespace torelli
