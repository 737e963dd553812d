#include "torelli/fgmap.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace torelli {

std::size_t GenHash::operator()(const Gen& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.kind);
  for (Letter l : {g.p0, g.p1, g.p2}) h = h * 1000003u ^ static_cast<std::size_t>(static_cast<std::uint32_t>(l));
  return h;
}

std::size_t GenSeqHash::operator()(const std::vector<Gen>& s) const noexcept {
  std::size_t h = s.size();
  GenHash gh;
  for (const Gen& g : s) h = h * 0x9e3779b97f4a7c15ull ^ gh(g);
  return h;
}

Gen gen_M(Letter z, Letter v) { return Gen{GenKind::M, z, v, 0}; }
Gen gen_C(Letter u, Letter w) { return Gen{GenKind::C, gen_of(u), w, 0}; }
Gen gen_Mc(Letter a, Letter p, Letter q) { return Gen{GenKind::Mc, a, p, q}; }
Gen gen_P(int a, int b) { return Gen{GenKind::P, std::min(a, b), std::max(a, b), 0}; }
Gen gen_I(int a) { return Gen{GenKind::I, a, 0, 0}; }

Gen inverse(const Gen& g) {
  switch (g.kind) {
    case GenKind::M:
      return gen_M(g.p0, -g.p1);
    case GenKind::C:
      return gen_C(g.p0, -g.p1);
    case GenKind::Mc:
      return gen_Mc(g.p0, g.p2, g.p1);
    case GenKind::P:
    case GenKind::I:
      return g;
  }
  return g;
}

void check_gen(const Gen& g, const Basis& basis) {
  auto bad = [&](const char* why) { throw Error("invalid generator " + to_string(g, basis) + ": " + why); };
  switch (g.kind) {
    case GenKind::M:
    case GenKind::C:
      if (!basis.contains(g.p0) || !basis.contains(g.p1)) bad("letter outside basis");
      if (gen_of(g.p0) == gen_of(g.p1)) bad("letters must be distinct");
      if (g.kind == GenKind::C && g.p0 < 0) bad("conjugated letter must be positive");
      break;
    case GenKind::Mc:
      if (!basis.contains(g.p0) || !basis.contains(g.p1) || !basis.contains(g.p2)) bad("letter outside basis");
      if (gen_of(g.p0) == gen_of(g.p1) || gen_of(g.p0) == gen_of(g.p2) || gen_of(g.p1) == gen_of(g.p2)) {
        bad("letters must be distinct");
      }
      break;
    case GenKind::P:
      if (g.p0 < 1 || g.p1 > basis.n || g.p0 >= g.p1) bad("swap needs 1 <= a < b <= n");
      break;
    case GenKind::I:
      if (g.p0 < 1 || g.p0 > basis.n) bad("inversion index outside 1..n");
      break;
  }
}

std::string to_string(const Gen& g, const Basis& basis) {
  auto L = [&](Letter l) { return basis.contains(l) ? letter_name(basis, l) : "?" + std::to_string(l); };
  switch (g.kind) {
    case GenKind::M:
      return "M[" + L(g.p0) + "," + L(g.p1) + "]";
    case GenKind::C:
      return "C[" + L(g.p0) + "," + L(g.p1) + "]";
    case GenKind::Mc:
      return "Mc[" + L(g.p0) + "," + L(g.p1) + "," + L(g.p2) + "]";
    case GenKind::P:
      return "P[" + std::to_string(g.p0) + "," + std::to_string(g.p1) + "]";
    case GenKind::I:
      return "I[" + std::to_string(g.p0) + "]";
  }
  return "?";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

int parse_index(std::string_view s, std::string_view context) {
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad index in '" + std::string(context) + "'");
    v = v * 10 + (c - '0');
  }
  if (s.empty()) throw Error("bad index in '" + std::string(context) + "'");
  return v;
}

}  // namespace

Gen parse_gen(const Basis& basis, std::string_view text) {
  const std::string_view s = trim(text);
  const auto open = s.find('[');
  if (open == std::string_view::npos || s.back() != ']') throw Error("malformed generator '" + std::string(s) + "'");
  const std::string_view tag = s.substr(0, open);
  const auto args = split(s.substr(open + 1, s.size() - open - 2), ',');
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw Error("generator '" + std::string(s) + "' expects " + std::to_string(n) + " arguments");
  };
  Gen g;
  if (tag == "M") {
    need(2);
    g = gen_M(parse_letter(basis, args[0]), parse_letter(basis, args[1]));
  } else if (tag == "C") {
    need(2);
    g = gen_C(parse_letter(basis, args[0]), parse_letter(basis, args[1]));
  } else if (tag == "Mc") {
    need(3);
    g = gen_Mc(parse_letter(basis, args[0]), parse_letter(basis, args[1]), parse_letter(basis, args[2]));
  } else if (tag == "P") {
    need(2);
    g = Gen{GenKind::P, parse_index(args[0], s), parse_index(args[1], s), 0};
  } else if (tag == "I") {
    need(1);
    g = gen_I(parse_index(args[0], s));
  } else {
    throw Error("unknown generator tag in '" + std::string(s) + "'");
  }
  check_gen(g, basis);
  return g;
}

GenSeq reduce_gens(std::span<const Gen> seq) {
  GenSeq out;
  out.reserve(seq.size());
  for (const Gen& g : seq) {
    if (!out.empty() && out.back() == inverse(g)) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

GenSeq inverse_seq(std::span<const Gen> seq) {
  GenSeq out;
  out.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

std::string to_string(std::span<const Gen> seq, const Basis& basis) {
  if (seq.empty()) return "empty";
  std::string out;
  for (const Gen& g : seq) {
    if (!out.empty()) out += " * ";
    out += to_string(g, basis);
  }
  return out;
}

GenSeq parse_gen_seq(const Basis& basis, std::string_view text) {
  const std::string_view s = trim(text);
  GenSeq out;
  if (s.empty() || s == "1" || s == "empty") return out;
  for (std::string_view part : split(s, '*')) {
    if (part.empty()) throw Error("empty factor in '" + std::string(s) + "'");
    out.push_back(parse_gen(basis, part));
  }
  return out;
}

Endo::Endo(Basis basis, std::vector<Word> images, std::optional<GenSeq> factors)
    : basis_(basis), images_(std::move(images)), factors_(std::move(factors)) {
  if (static_cast<int>(images_.size()) != basis_.rank()) throw Error("Endo: wrong number of images");
  for (const Word& w : images_) require_same_basis(basis_, w.basis(), "Endo");
}

Endo Endo::identity(Basis basis) {
  std::vector<Word> images;
  for (int g = 1; g <= basis.rank(); ++g) images.push_back(Word::generator(basis, g));
  return Endo(basis, std::move(images), GenSeq{});
}

bool Endo::is_identity() const {
  for (int g = 1; g <= basis_.rank(); ++g) {
    const Word& w = image(g);
    if (w.size() != 1 || w[0] != g) return false;
  }
  return true;
}

Word Endo::apply(const Word& w) const {
  require_same_basis(basis_, w.basis(), "apply");
  WordBuilder b(basis_);
  for (Letter l : w.letters()) {
    const Word& img = images_[static_cast<std::size_t>(gen_of(l) - 1)];
    if (l > 0) {
      b.append(img);
    } else {
      b.append_inverse(img);
    }
  }
  return std::move(b).build();
}

Word apply(const Endo& f, const Word& w) { return f.apply(w); }

Endo gen_endo(const Gen& g, const Basis& basis) {
  check_gen(g, basis);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(basis.rank()));
  for (int i = 1; i <= basis.rank(); ++i) images.push_back(Word::generator(basis, i));
  auto set_multiplied = [&](Letter z, const Word& v) {
    const Word zw = Word::generator(basis, gen_of(z));
    images[static_cast<std::size_t>(gen_of(z) - 1)] = z > 0 ? mul(v, zw) : mul(zw, inv(v));
  };
  switch (g.kind) {
    case GenKind::M:
      set_multiplied(g.p0, Word::generator(basis, g.p1));
      break;
    case GenKind::Mc:
      set_multiplied(g.p0, commutator(Word::generator(basis, g.p1), Word::generator(basis, g.p2)));
      break;
    case GenKind::C: {
      const Word w = Word::generator(basis, g.p1);
      images[static_cast<std::size_t>(g.p0 - 1)] = mul({w, Word::generator(basis, g.p0), inv(w)});
      break;
    }
    case GenKind::P:
      std::swap(images[static_cast<std::size_t>(g.p0 - 1)], images[static_cast<std::size_t>(g.p1 - 1)]);
      break;
    case GenKind::I:
      images[static_cast<std::size_t>(g.p0 - 1)] = Word::generator(basis, -g.p0);
      break;
  }
  return Endo(basis, std::move(images), GenSeq{g});
}

Endo gen_transvection(const Basis& basis, int z, int alpha, const Word& v) {
  require_same_basis(basis, v.basis(), "gen_transvection");
  if (z < 1 || z > basis.rank() || (alpha != 1 && alpha != -1)) throw Error("gen_transvection: bad z or alpha");
  for (Letter l : v.letters()) {
    if (gen_of(l) == z) throw Error("gen_transvection: v must avoid z");
  }
  const Letter za = alpha * z;
  if (v.size() == 1) return gen_endo(gen_M(za, v[0]), basis);
  if (v.size() == 4 && v[2] == -v[0] && v[3] == -v[1]) return gen_endo(gen_Mc(za, v[0], v[1]), basis);
  // M_{z,l1...lm} = M_{z,lm} o ... o M_{z,l1}
  Endo f = Endo::identity(basis);
  for (Letter l : v.letters()) f = compose(gen_endo(gen_M(za, l), basis), f);
  return f;
}

Endo gen_conjugation(const Basis& basis, Letter u, Letter w) { return gen_endo(gen_C(u, w), basis); }
Endo gen_swap(const Basis& basis, int a, int b) { return gen_endo(gen_P(a, b), basis); }
Endo gen_inversion(const Basis& basis, int a) { return gen_endo(gen_I(a), basis); }

Endo compose(const Endo& f, const Endo& g) {
  require_same_basis(f.basis(), g.basis(), "compose");
  std::vector<Word> images;
  images.reserve(g.images().size());
  for (const Word& w : g.images()) images.push_back(f.apply(w));
  std::optional<GenSeq> factors;
  if (f.factors() && g.factors()) {
    GenSeq both = *f.factors();
    both.insert(both.end(), g.factors()->begin(), g.factors()->end());
    factors = reduce_gens(both);
  }
  return Endo(f.basis(), std::move(images), std::move(factors));
}

bool equals(const Endo& f, const Endo& g) {
  require_same_basis(f.basis(), g.basis(), "equals");
  return f.images() == g.images();
}

Endo interpret_gens(std::span<const Gen> seq, const Basis& basis) {
  // Apply from the right so that each step substitutes into short images.
  std::vector<Word> images;
  for (int i = 1; i <= basis.rank(); ++i) images.push_back(Word::generator(basis, i));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const Endo g = gen_endo(*it, basis);
    for (Word& w : images) w = g.apply(w);
  }
  return Endo(basis, std::move(images), GenSeq(seq.begin(), seq.end()));
}

Endo invert_factored(const Endo& f) {
  if (!f.factors()) throw Error("invert_factored: automorphism carries no factorization");
  return interpret_gens(inverse_seq(*f.factors()), f.basis());
}

Endo extend_basis(const Endo& f, const Basis& larger) {
  if (larger.n != f.basis().n || larger.k < f.basis().k) throw Error("extend_basis: not an extension");
  std::vector<Word> images;
  for (int g = 1; g <= larger.rank(); ++g) {
    if (g <= f.basis().rank()) {
      auto ls = f.image(g).letters();
      images.push_back(Word::from_letters(larger, ls));
    } else {
      images.push_back(Word::generator(larger, g));
    }
  }
  return Endo(larger, std::move(images), f.factors());
}

IntMatrix abel_matrix(const Endo& f) {
  const int r = f.basis().rank();
  IntMatrix m(r, r);
  for (int j = 0; j < r; ++j) {
    const IntVec v = abelianize(f.image(j + 1));
    for (int i = 0; i < r; ++i) m.at(i, j) = v[static_cast<std::size_t>(i)];
  }
  return m;
}

Classification classify(const Endo& f) {
  const Basis& b = f.basis();
  Classification c;
  c.in_IA = abel_matrix(f) == IntMatrix::identity(b.rank());
  c.in_A = true;
  for (int j = 1; j <= b.k; ++j) {
    if (!is_conjugate(f.image(b.y(j)), Word::generator(b, b.y(j)))) {
      c.in_A = false;
      break;
    }
  }
  c.in_BKer = c.in_A;
  for (int i = 1; i <= b.n && c.in_BKer; ++i) {
    WordBuilder kill(b);
    for (Letter l : f.image(i).letters()) {
      if (b.is_x(l)) kill.push(l);
    }
    const Word w = std::move(kill).build();
    c.in_BKer = w.size() == 1 && w[0] == i;
  }
  c.in_KIA = c.in_BKer && c.in_IA;
  return c;
}

int wedge_index(int r, int a, int b) {
  if (!(0 <= a && a < b && b < r)) throw Error("wedge_index: need 0 <= a < b < r");
  return a * (2 * r - a - 1) / 2 + (b - a - 1);
}

std::pair<int, int> wedge_pair(int r, int index) {
  for (int a = 0; a < r; ++a) {
    const int row = r - 1 - a;
    if (index < row) return {a, a + 1 + index};
    index -= row;
  }
  throw Error("wedge_pair: index out of range");
}

IntVec lambda2_projection(const Word& w) {
  const int r = w.basis().rank();
  for (std::int64_t e : abelianize(w)) {
    if (e != 0) throw Error("lambda2_projection: word " + to_string(w) + " is not in the commutator subgroup");
  }
  IntVec prefix(static_cast<std::size_t>(r), 0);
  IntVec c(static_cast<std::size_t>(r * (r - 1) / 2), 0);
  for (Letter l : w.letters()) {
    const int g = gen_of(l) - 1;
    const int e = sign_of(l);
    for (int a = 0; a < g; ++a) c[static_cast<std::size_t>(wedge_index(r, a, g))] += prefix[static_cast<std::size_t>(a)] * e;
    prefix[static_cast<std::size_t>(g)] += e;
  }
  return c;
}

IntVec wedge(const IntVec& u, const IntVec& v) {
  if (u.size() != v.size()) throw Error("wedge: length mismatch");
  const int r = static_cast<int>(u.size());
  IntVec out(static_cast<std::size_t>(r * (r - 1) / 2), 0);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      out[static_cast<std::size_t>(wedge_index(r, a, b))] =
          u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)] - u[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(a)];
    }
  return out;
}

IntMatrix johnson(const Endo& f) {
  const Basis& b = f.basis();
  if (!classify(f).in_IA) throw Error("johnson: automorphism is not in IA");
  std::vector<IntVec> rows;
  for (int g = 1; g <= b.rank(); ++g) {
    rows.push_back(lambda2_projection(mul(f.image(g), Word::generator(b, -g))));
  }
  return IntMatrix::from_rows(rows);
}

int johnson_rank(std::span<const Endo> fs) {
  if (fs.empty()) return 0;
  std::vector<IntVec> rows;
  for (const Endo& f : fs) {
    const IntMatrix t = johnson(f);
    IntVec flat;
    for (int i = 0; i < t.rows(); ++i) {
      const IntVec r = t.row(i);
      flat.insert(flat.end(), r.begin(), r.end());
    }
    rows.push_back(std::move(flat));
  }
  return IntMatrix::from_rows(rows).rank();
}

GenSeq johnson_generating_set(const Basis& basis) {
  GenSeq out;
  for (int x = 1; x <= basis.n; ++x)
    for (int j = 1; j <= basis.k; ++j)
      for (int x2 = 1; x2 <= basis.n; ++x2) {
        if (x2 != x) out.push_back(gen_Mc(x, basis.y(j), x2));
      }
  for (int x = 1; x <= basis.n; ++x)
    for (int a = 1; a <= basis.k; ++a)
      for (int b = a + 1; b <= basis.k; ++b) out.push_back(gen_Mc(x, basis.y(a), basis.y(b)));
  std::set<Gen> conj;
  for (int j = 1; j <= basis.k; ++j)
    for (int z = 1; z <= basis.rank(); ++z) {
      if (z == basis.y(j)) continue;
      conj.insert(gen_C(basis.y(j), z));
      conj.insert(gen_C(z, basis.y(j)));
    }
  out.insert(out.end(), conj.begin(), conj.end());
  return out;
}

std::int64_t johnson_rank_formula(int n, int k) {
  const std::int64_t N = n;
  const std::int64_t K = k;
  return N * (N - 1) * K + N * (K * (K - 1) / 2) + 2 * N * K + K * (K - 1);
}

}  // namespace torelli
