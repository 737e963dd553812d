#include <map>
#include <unordered_map>

#include "torelli/lpres.hpp"

namespace torelli {

namespace {

enum class Shape { Relabel, ByY, ByX };

// s = M[x_a^al, x_b^be] (ByX) or M[x_a^al, y^eps] (ByY) or a swap/inversion.
struct Ctx {
  Shape shape = Shape::Relabel;
  Gen s;
  Letter y = 0;
  int a = 0, al = 1, b = 0, be = 1, eps = 1;

  Letter xa() const { return al * a; }
  Letter xb() const { return be * b; }
  Gen Cyx(int c, int e) const { return e > 0 ? gen_C(y, c) : gen_C(y, -c); }
  Gen Cxy(int c, int e) const { return e > 0 ? gen_C(c, y) : gen_C(c, -y); }
};

// Decoded positive SK generator: C[y,x_c], C[x_c,y] or Mc[A, E, B].
struct Tok {
  enum { Cy, Cx, Mc } kind;
  int c = 0;
  Letter A = 0, E = 0, B = 0;
};

Tok decode(const Gen& t, Letter y) {
  if (t.kind == GenKind::C) return t.p0 == y ? Tok{Tok::Cy, t.p1, 0, 0, 0} : Tok{Tok::Cx, t.p0, 0, 0, 0};
  return Tok{Tok::Mc, 0, t.p0, t.p1, t.p2};
}

bool positive_SK(const Gen& t, Letter y) {
  if (t.kind == GenKind::C) return t.p0 == y ? t.p1 > 0 : t.p1 == y;
  return t.kind == GenKind::Mc && gen_of(t.p1) == y;
}

using Match = bool (*)(const Ctx&, const Tok&);
using Image = GenSeq (*)(const Ctx&, const Gen&, const Tok&);

struct Rule {
  const char* id;
  Shape shape;
  Match match;
  Image image;
};

GenSeq fixed(const Ctx&, const Gen& t, const Tok&) { return {t}; }

bool other(const Ctx& c, Letter l) { return gen_of(l) != c.a && gen_of(l) != c.b; }
int sg(Letter l) { return sign_of(l); }

Letter act_x(const Gen& s, Letter l) {
  const int g = gen_of(l);
  if (s.kind == GenKind::P) {
    if (g == s.p0) return sign_of(l) * s.p1;
    if (g == s.p1) return sign_of(l) * s.p0;
    return l;
  }
  if (s.kind == GenKind::I && g == s.p0) return -l;
  return l;
}

// Matching order: relabel, then fixed cases, then table rows. The rules are
// mutually exclusive, which the completeness audit checks.
const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = {
      {"relabel", Shape::Relabel, [](const Ctx&, const Tok&) { return true; },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq {
         if (t.kind == GenKind::C) return {gen_C(act_x(c.s, t.p0), act_x(c.s, t.p1))};
         return {gen_Mc(act_x(c.s, t.p0), act_x(c.s, t.p1), act_x(c.s, t.p2))};
       }},

      // s = M[x_a, y]^eps
      {"y.fix.C[x_c,y]", Shape::ByY, [](const Ctx&, const Tok& t) { return t.kind == Tok::Cx; }, fixed},
      {"y.fix.Mc[x_a^-1,*,*]", Shape::ByY, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == -c.xa(); },
       fixed},
      {"y.fix.Mc[x_b,*,x_c]", Shape::ByY,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && gen_of(t.A) != c.a && gen_of(t.B) != c.a; }, fixed},
      {"y.fix.Mc[x_b,*,x_a^-1]", Shape::ByY,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && gen_of(t.A) != c.a && t.B == -c.xa(); }, fixed},
      {"y.C[y,x_b]", Shape::ByY, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cy && t.c != c.a; },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq { return {t, gen_Mc(c.a, -c.eps * c.y, -d.c)}; }},
      {"y.C[y,x_a]", Shape::ByY, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cy && t.c == c.a; },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {c.Cxy(c.a, c.eps), t}; }},
      {"y.Mc[x_a,*,x_b]", Shape::ByY, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xa(); },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {c.Cxy(c.a, c.eps), t, c.Cxy(c.a, -c.eps)}; }},
      {"y.Mc[x_b,*,x_a]", Shape::ByY,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && gen_of(t.A) != c.a && t.B == c.xa(); },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {c.Cxy(c.a, c.eps), t, c.Cxy(c.a, -c.eps)}; }},

      // s = M[x_a^al, x_b^be]
      {"x.fix.C[x_c,y]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cx && other(c, t.c); }, fixed},
      {"x.fix.C[y,x_b]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cy && t.c == c.b; }, fixed},
      {"x.fix.C[y,x_c]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cy && other(c, t.c); }, fixed},
      {"x.fix.Mc[x_a^-al,*,*]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == -c.xa(); },
       fixed},
      {"x.fix.Mc[x_c,*,x_b]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && other(c, t.A) && gen_of(t.B) == c.b; }, fixed},
      {"x.fix.Mc[x_c,*,x_d]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && other(c, t.A) && other(c, t.B); }, fixed},
      {"x.C[x_a,y]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cx && t.c == c.a; },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {t, gen_Mc(c.xa(), -c.xb(), c.y)}; }},
      {"x.C[x_b,y]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cx && t.c == c.b; },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {t, gen_Mc(c.xa(), -c.xb(), -c.y)}; }},
      {"x.C[y,x_a]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Cy && t.c == c.a; },
       [](const Ctx& c, const Gen&, const Tok&) -> GenSeq {
         const GenSeq inner = {c.Cyx(c.a, c.al), c.Cyx(c.b, c.be)};
         return c.al > 0 ? inner : inverse_seq(inner);
       }},
      {"x.Mc[x_a,*,x_b]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xa() && t.B == c.xb(); },
       [](const Ctx& c, const Gen&, const Tok& d) -> GenSeq { return {gen_Mc(c.xa(), -c.xb(), d.E)}; }},
      {"x.Mc[x_a,*,x_b^-1]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xa() && t.B == -c.xb(); },
       [](const Ctx& c, const Gen& t, const Tok&) -> GenSeq { return {c.Cyx(c.b, -c.be), t, c.Cyx(c.b, c.be)}; }},
      {"x.Mc[x_a,*,x_c]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xa() && other(c, t.B); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq {
         const int ga = sg(d.B);
         const int cc = gen_of(d.B);
         return {c.Cyx(cc, ga), gen_Mc(c.xa(), d.E, -c.xb()), c.Cyx(cc, -ga), t, gen_Mc(c.xa(), -c.xb(), d.E)};
       }},
      {"x.Mc[x_b,*,x_a]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xb() && t.B == c.xa(); },
       [](const Ctx& c, const Gen&, const Tok& d) -> GenSeq {
         const int ep = sg(d.E);
         return {gen_Mc(-c.xb(), -d.E, c.xa()), c.Cxy(c.b, ep), gen_Mc(c.xa(), d.E, -c.xb()), c.Cxy(c.a, -ep)};
       }},
      {"x.Mc[x_b^-1,*,x_a]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == -c.xb() && t.B == c.xa(); },
       [](const Ctx& c, const Gen&, const Tok& d) -> GenSeq {
         const int ep = sg(d.E);
         return {c.Cyx(c.a, c.al),        c.Cyx(c.b, c.be),  c.Cxy(c.b, -ep),
                 gen_Mc(c.xa(), -c.xb(), d.E), c.Cyx(c.b, -c.be), gen_Mc(-c.xb(), -c.xa(), d.E),
                 c.Cyx(c.a, -c.al),       c.Cxy(c.a, ep)};
       }},
      {"x.Mc[x_b,*,x_a^-1]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xb() && t.B == -c.xa(); },
       [](const Ctx& c, const Gen&, const Tok& d) -> GenSeq {
         const int ep = sg(d.E);
         return {c.Cyx(c.b, -c.be),       c.Cyx(c.a, -c.al), c.Cxy(c.a, ep),
                 gen_Mc(c.xa(), -c.xb(), d.E), c.Cxy(c.b, -ep), gen_Mc(-c.xb(), c.xa(), -d.E),
                 c.Cyx(c.a, c.al),        c.Cyx(c.b, c.be)};
       }},
      // Printed with a bare C[x_b,y] as the last factor; the exponent eps is required.
      {"x.Mc[x_b^-1,*,x_a^-1]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == -c.xb() && t.B == -c.xa(); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq {
         const int ep = sg(d.E);
         return {c.Cyx(c.b, -c.be), c.Cyx(c.a, -c.al), c.Cxy(c.a, -ep),
                 c.Cyx(c.a, c.al),  t,                 c.Cyx(c.b, c.be),
                 gen_Mc(c.xa(), d.E, -c.xb()), c.Cxy(c.b, ep)};
       }},
      {"x.Mc[x_b,*,x_c]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == c.xb() && other(c, t.B); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq {
         const int ga = sg(d.B);
         const int cc = gen_of(d.B);
         return {t, gen_Mc(c.xa(), d.E, -c.xb()), gen_Mc(c.xa(), d.B, d.E), c.Cyx(cc, ga), gen_Mc(c.xa(), -c.xb(), d.E),
                 c.Cyx(cc, -ga)};
       }},
      {"x.Mc[x_b^-1,*,x_c]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && t.A == -c.xb() && other(c, t.B); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq { return {t, gen_Mc(c.xa(), d.E, d.B)}; }},
      {"x.Mc[x_c,*,x_a]", Shape::ByX, [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && other(c, t.A) && t.B == c.xa(); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq {
         return {c.Cyx(c.a, c.al), gen_Mc(d.A, d.E, c.xb()), c.Cyx(c.a, -c.al), t};
       }},
      {"x.Mc[x_c,*,x_a^-1]", Shape::ByX,
       [](const Ctx& c, const Tok& t) { return t.kind == Tok::Mc && other(c, t.A) && t.B == -c.xa(); },
       [](const Ctx& c, const Gen& t, const Tok& d) -> GenSeq {
         return {c.Cyx(c.b, -c.be), t, gen_Mc(d.A, c.xb(), d.E), c.Cyx(c.b, c.be)};
       }},
  };
  return table;
}

Ctx make_ctx(const Gen& s, int n) {
  if (!in_alphabet(Alphabet::SQ, n, s)) throw Error("phi: " + to_string(s, sym_basis(n)) + " is not in SQ^{+-1}");
  Ctx c;
  c.s = s;
  c.y = sym_basis(n).y();
  if (s.kind == GenKind::P || s.kind == GenKind::I) {
    c.shape = Shape::Relabel;
  } else if (gen_of(s.p1) == c.y) {
    c.shape = Shape::ByY;
    c.a = gen_of(s.p0);
    c.al = sign_of(s.p0);
    c.eps = sign_of(s.p1);
  } else {
    c.shape = Shape::ByX;
    c.a = gen_of(s.p0);
    c.al = sign_of(s.p0);
    c.b = gen_of(s.p1);
    c.be = sign_of(s.p1);
  }
  return c;
}

}  // namespace

GenSeq phi_gen_seq(const Gen& s, const Gen& t, int n) {
  const Ctx c = make_ctx(s, n);
  if (!in_alphabet(Alphabet::SK, n, t)) throw Error("phi: " + to_string(t, sym_basis(n)) + " is not in SK^{+-1}");
  if (!positive_SK(t, c.y)) return inverse_seq(phi_gen_seq(s, inverse(t), n));
  const Tok d = decode(t, c.y);
  for (const Rule& r : rules()) {
    if (r.shape == c.shape && r.match(c, d)) return reduce_gens(r.image(c, t, d));
  }
  throw Error("phi: no rule for s=" + to_string(s, sym_basis(n)) + " t=" + to_string(t, sym_basis(n)));
}

SymWord phi_gen(const Gen& s, const Gen& t, int n) {
  const GenSeq w = phi_gen_seq(s, t, n);
  return SymWord::from_tokens(Alphabet::SK, n, w);
}

std::vector<std::string> phi_matching_rules(const Gen& s, const Gen& t, int n) {
  const Ctx c = make_ctx(s, n);
  if (!in_alphabet(Alphabet::SK, n, t) || !positive_SK(t, c.y)) throw Error("phi_matching_rules: t must be a positive SK generator");
  const Tok d = decode(t, c.y);
  std::vector<std::string> ids;
  for (const Rule& r : rules()) {
    if (r.shape == c.shape && r.match(c, d)) ids.emplace_back(r.id);
  }
  return ids;
}

bool phi_y_fixed_case(int a, int alpha, const Gen& t, int n) {
  const Letter y = sym_basis(n).y();
  if (!in_alphabet(Alphabet::SK, n, t) || !positive_SK(t, y)) throw Error("phi_y_fixed_case: t must be a positive SK generator");
  const Tok d = decode(t, y);
  const Letter xa = alpha * a;
  switch (d.kind) {
    case Tok::Cx:
      return true;
    case Tok::Cy:
      return false;
    case Tok::Mc:
      if (d.A == -xa) return true;
      if (gen_of(d.A) != a) return gen_of(d.B) != a || d.B == -xa;
      return false;
  }
  return false;
}

SymWord phi_word(std::span<const Gen> u, const SymWord& w) {
  if (w.alphabet() != Alphabet::SK) throw Error("phi_word: w must be a word over SK");
  const int n = w.n();
  std::map<std::pair<Gen, Gen>, GenSeq> memo;
  GenSeq cur = w.tokens();
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    GenSeq next;
    next.reserve(cur.size() * 2);
    for (const Gen& t : cur) {
      auto key = std::make_pair(*it, t);
      auto m = memo.find(key);
      if (m == memo.end()) m = memo.emplace(key, phi_gen_seq(*it, t, n)).first;
      for (const Gen& g : m->second) {
        if (!next.empty() && next.back() == inverse(g)) {
          next.pop_back();
        } else {
          next.push_back(g);
        }
      }
    }
    cur = std::move(next);
  }
  return SymWord::from_tokens(Alphabet::SK, n, cur);
}

}  // namespace torelli
