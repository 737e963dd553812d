#include <algorithm>
#include <array>

#include "torelli/lpres.hpp"

namespace torelli {

GenSeq RelationInstance::relator() const {
  GenSeq r = lhs;
  const GenSeq ri = inverse_seq(rhs);
  r.insert(r.end(), ri.begin(), ri.end());
  return r;
}

namespace {

constexpr std::array<int, 2> kSigns = {1, -1};

GenSeq cat(std::initializer_list<GenSeq> parts) {
  GenSeq out;
  for (const GenSeq& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

GenSeq comm(const GenSeq& u, const GenSeq& v) { return cat({u, v, inverse_seq(u), inverse_seq(v)}); }

std::string kv(std::initializer_list<std::pair<const char*, int>> items) {
  std::string s;
  for (const auto& [k, v] : items) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

// Letter helpers on F_{n,1}.
struct L {
  Letter y;
  Gen Cxy(int a, int e = 1) const { return gen_C(a, e * y); }  // C[x_a,y]^e
  Gen Cyx(int b, int e = 1) const { return gen_C(y, e * b); }  // C[y,x_b]^e
};

struct Pair {
  GenSeq lhs;
  GenSeq rhs;
};

bool valid_index(int i, int n) { return 1 <= i && i <= n; }
bool valid_sign(int s) { return s == 1 || s == -1; }

std::optional<Pair> krel_pair(int family, const KrelParams& p, int n) {
  const L l{sym_basis(n).y()};
  const Letter y = l.y;
  const int a = p.a, b = p.b, c = p.c, d = p.d;
  const int al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta, ep = p.epsilon;
  if (!valid_sign(al) || !valid_sign(be) || !valid_sign(ga) || !valid_sign(de) || !valid_sign(ep)) return std::nullopt;
  const Letter xa = al * a, xb = be * b, xc = ga * c, eY = ep * y;
  auto distinct3 = [&] { return valid_index(a, n) && valid_index(b, n) && valid_index(c, n) && a != b && a != c && b != c; };
  auto distinct2 = [&] { return valid_index(a, n) && valid_index(b, n) && a != b; };
  switch (family) {
    case 1:
      if (!distinct2()) return std::nullopt;
      return Pair{comm({l.Cxy(a)}, {l.Cxy(b)}), {}};
    case 2: {
      if (!distinct2() && !(a == b && valid_index(a, n))) return std::nullopt;
      if (!valid_index(c, n) || !valid_index(d, n)) return std::nullopt;
      // x_a^al = x_b^-be and c = d are the only coincidences allowed.
      if (a == b && al != -be) return std::nullopt;
      if (a == c || a == d || b == c || b == d) return std::nullopt;
      return Pair{comm({gen_Mc(xa, eY, xc)}, {gen_Mc(xb, y, de * d)}), {}};
    }
    case 3:
      if (!distinct3()) return std::nullopt;
      return Pair{comm({l.Cxy(a)}, {gen_Mc(xb, eY, xc)}), {}};
    case 4:
      if (!distinct2()) return std::nullopt;
      return Pair{{l.Cyx(b, -be), gen_Mc(xa, eY, xb), l.Cyx(b, be)}, {gen_Mc(xa, -xb, eY)}};
    case 5:
      if (!distinct2()) return std::nullopt;
      return Pair{{l.Cxy(b, -ep), gen_Mc(xa, eY, xb), l.Cxy(b, ep)}, {gen_Mc(xa, xb, -eY)}};
    case 6:
      if (!distinct2()) return std::nullopt;
      return Pair{{l.Cxy(a, ep), gen_Mc(xa, eY, xb), l.Cxy(a, -ep)}, {gen_Mc(xa, xb, -eY)}};
    case 7:
      if (!distinct2()) return std::nullopt;
      return Pair{{gen_Mc(xa, eY, xb), gen_Mc(-xa, eY, xb)}, {l.Cyx(b, be), l.Cxy(a, -ep), l.Cyx(b, -be), l.Cxy(a, ep)}};
    case 8:
      if (!distinct3()) return std::nullopt;
      return Pair{{gen_Mc(xb, -eY, xc), gen_Mc(xa, eY, xb), gen_Mc(xb, xc, -eY)},
                  {gen_Mc(xa, xc, -eY), gen_Mc(xa, eY, xb), gen_Mc(xa, xc, eY)}};
    case 9:
      if (!distinct3()) return std::nullopt;
      return Pair{{l.Cxy(b, -ep), l.Cyx(c, ga), gen_Mc(xa, eY, xb), l.Cyx(c, -ga), l.Cxy(b, ep)},
                  {gen_Mc(xa, xb, -eY), l.Cyx(c, ga), gen_Mc(xa, eY, xb), l.Cyx(c, -ga), gen_Mc(xa, eY, xc),
                   gen_Mc(xa, xb, eY), gen_Mc(xa, xc, eY)}};
    case 10:
      if (!distinct3()) return std::nullopt;
      return Pair{{l.Cxy(c, -ep), l.Cyx(c, ga), gen_Mc(xa, eY, xb), l.Cyx(c, -ga), l.Cxy(c, ep)},
                  {gen_Mc(xa, -eY, xb), gen_Mc(xa, xc, -eY), l.Cyx(c, ga), gen_Mc(xa, xb, -eY), l.Cyx(c, -ga),
                   gen_Mc(xa, eY, xb), gen_Mc(xa, -eY, xc)}};
    default:
      throw Error("krel: family must be 1..10, got " + std::to_string(family));
  }
}

void push(std::vector<RelationInstance>& out, std::string family, std::string params, Basis basis, GenSeq lhs,
          GenSeq rhs = {}, bool corrected = false) {
  out.push_back(RelationInstance{std::move(family), std::move(params), basis, std::move(lhs), std::move(rhs), corrected});
}

std::vector<RelationInstance> rk0(int n) {
  std::vector<RelationInstance> out;
  const Basis basis = sym_basis(n);
  auto add = [&](int fam, const KrelParams& p, std::string params) {
    if (auto pr = krel_pair(fam, p, n)) push(out, "R" + std::to_string(fam), std::move(params), basis, pr->lhs, pr->rhs);
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) add(1, {a, b}, kv({{"a", a}, {"b", b}}));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          for (int al : kSigns)
            for (int be : kSigns)
              for (int ga : kSigns)
                for (int de : kSigns)
                  for (int ep : kSigns)
                    add(2, {a, b, c, d, al, be, ga, de, ep},
                        kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"alpha", al}, {"beta", be}, {"gamma", ga}, {"delta", de},
                            {"epsilon", ep}}));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int be : kSigns)
          for (int ep : kSigns)
            for (int ga : kSigns)
              add(3, {a, b, c, 0, 1, be, ga, 1, ep},
                  kv({{"a", a}, {"b", b}, {"c", c}, {"beta", be}, {"gamma", ga}, {"epsilon", ep}}));
  for (int fam = 4; fam <= 7; ++fam)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int al : kSigns)
          for (int be : kSigns)
            for (int ep : kSigns)
              add(fam, {a, b, 0, 0, al, be, 1, 1, ep}, kv({{"a", a}, {"b", b}, {"alpha", al}, {"beta", be}, {"epsilon", ep}}));
  for (int fam = 8; fam <= 10; ++fam)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int al : kSigns)
            for (int be : kSigns)
              for (int ga : kSigns)
                for (int ep : kSigns)
                  add(fam, {a, b, c, 0, al, be, ga, 1, ep},
                      kv({{"a", a}, {"b", b}, {"c", c}, {"alpha", al}, {"beta", be}, {"gamma", ga}, {"epsilon", ep}}));
  return out;
}

Letter relabel(const Gen& s, Letter l) {
  const int g = gen_of(l);
  if (s.kind == GenKind::P) {
    if (g == s.p0) return sign_of(l) * s.p1;
    if (g == s.p1) return sign_of(l) * s.p0;
  } else if (s.kind == GenKind::I && g == s.p0) {
    return -l;
  }
  return l;
}

GenSeq signed_perms(int n) {
  GenSeq out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(gen_P(a, b));
  for (int a = 1; a <= n; ++a) out.push_back(gen_I(a));
  return out;
}

std::vector<RelationInstance> nielsen(int n, const std::string& prefix = "") {
  std::vector<RelationInstance> out;
  const Basis basis = sym_basis(n);
  auto P = [](int a, int b) { return gen_P(a, b); };
  auto I = [](int a) { return gen_I(a); };
  auto name = [&](const char* f) { return prefix + f; };
  for (int a = 1; a <= n; ++a) push(out, name("N1"), kv({{"a", a}}), basis, {I(a), I(a)});
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      push(out, name("N1"), kv({{"a", a}, {"b", b}}), basis, comm({I(a)}, {I(b)}));
      push(out, name("N1"), kv({{"a", a}, {"b", b}}), basis, {P(a, b), P(a, b)});
    }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          if (c == a || c == b || d == a || d == b || std::pair(a, b) > std::pair(c, d)) continue;
          push(out, name("N1"), kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}}), basis, comm({P(a, b)}, {P(c, d)}));
        }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || a == c || b == c) continue;
        push(out, name("N1"), kv({{"a", a}, {"b", b}, {"c", c}}), basis, {P(a, b), P(b, c), P(a, b)}, {P(a, c)});
      }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      push(out, name("N1"), kv({{"a", a}, {"b", b}}), basis, {P(a, b), I(a), P(a, b)}, {I(b)});
      for (int c = 1; c <= n; ++c) {
        if (c == a || c == b || a > b) continue;
        push(out, name("N1"), kv({{"a", a}, {"b", b}, {"c", c}}), basis, comm({P(a, b)}, {I(c)}));
      }
    }
  for (const Gen& s : signed_perms(n))
    for (int c = 1; c <= n; ++c)
      for (int d = 1; d <= n; ++d) {
        if (c == d) continue;
        for (int ga : kSigns) {
          const Gen m = gen_M(ga * c, d);
          const Gen im = gen_M(relabel(s, ga * c), relabel(s, d));
          push(out, name("N2"), to_string(s, basis) + " " + kv({{"c", c}, {"d", d}, {"gamma", ga}}), basis, {s, m, s}, {im});
        }
      }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (int al : kSigns)
        for (int be : kSigns) {
          // Printed right side I_b P_ab holds only for alpha*beta = 1.
          const GenSeq rhs = al * be == 1 ? GenSeq{I(b), P(a, b)} : GenSeq{I(a), P(a, b)};
          push(out, name("N3"), kv({{"a", a}, {"b", b}, {"alpha", al}, {"beta", be}}), basis,
               {gen_M(-al * a, be * b), gen_M(be * b, al * a), gen_M(al * a, -be * b)}, rhs, al * be == -1);
        }
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          if (a == b || c == d) continue;
          for (int al : kSigns)
            for (int ga : kSigns) {
              const Letter xa = al * a, xc = ga * c;
              if (xa == xc || gen_of(xa) == d || gen_of(xc) == b) continue;
              push(out, name("N4"), kv({{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"alpha", al}, {"gamma", ga}}), basis,
                   comm({gen_M(xa, b)}, {gen_M(xc, d)}));
            }
        }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || a == c || b == c) continue;
        for (int al : kSigns)
          for (int be : kSigns)
            for (int ga : kSigns) {
              push(out, name("N5"), kv({{"a", a}, {"b", b}, {"c", c}, {"alpha", al}, {"beta", be}, {"gamma", ga}}), basis,
                   {gen_M(be * b, al * a), gen_M(ga * c, be * b)},
                   {gen_M(ga * c, be * b), gen_M(be * b, al * a), gen_M(ga * c, al * a)});
            }
      }
  return out;
}

std::vector<RelationInstance> jensen_wahl(int n) {
  std::vector<RelationInstance> out = nielsen(n, "Q1/");
  const Basis basis = sym_basis(n);
  const L l{basis.y()};
  const Letter y = l.y;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int al : kSigns)
        for (int be : kSigns) {
          if (al * a == be * b) continue;
          push(out, "Q2a", kv({{"a", a}, {"b", b}, {"alpha", al}, {"beta", be}}), basis,
               comm({gen_M(al * a, y)}, {gen_M(be * b, y)}));
        }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (int c = 1; c <= n; ++c)
        for (int al : kSigns) {
          for (int ga : kSigns) {
            if (c == b || al * a == ga * c) continue;
            push(out, "Q2b", kv({{"a", a}, {"b", b}, {"c", c}, {"alpha", al}, {"gamma", ga}}), basis,
                 comm({gen_M(al * a, b)}, {gen_M(ga * c, y)}));
          }
          if (c != a) {
            push(out, "Q2c", kv({{"a", a}, {"b", b}, {"c", c}, {"alpha", al}}), basis, comm({gen_M(al * a, b)}, {l.Cyx(c)}));
          }
        }
    }
  for (const Gen& s : signed_perms(n))
    for (int c = 1; c <= n; ++c) {
      push(out, "Q3", to_string(s, basis) + " " + kv({{"c", c}}), basis, {s, l.Cyx(c), s}, {gen_C(y, relabel(s, c))});
      for (int ga : kSigns) {
        push(out, "Q3", to_string(s, basis) + " " + kv({{"c", c}, {"gamma", ga}}), basis, {s, gen_M(ga * c, y), s},
             {gen_M(relabel(s, ga * c), y)});
      }
    }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      for (int al : kSigns)
        for (int be : kSigns) {
          push(out, "Q4", kv({{"a", a}, {"b", b}, {"alpha", al}, {"beta", be}}), basis,
               {gen_M(al * a, -be * b), gen_M(be * b, y), gen_M(al * a, be * b)}, {gen_M(al * a, y), gen_M(be * b, y)});
        }
    }
  for (int a = 1; a <= n; ++a)
    for (int al : kSigns) {
      push(out, "Q5", kv({{"a", a}, {"alpha", al}}), basis, {l.Cyx(a, -al), gen_M(-al * a, y), l.Cyx(a, al)},
           {gen_M(al * a, -y)});
    }
  return out;
}

std::vector<RelationInstance> zn(int n) {
  std::vector<RelationInstance> out;
  const Basis basis = sym_basis(n);
  const Letter y = basis.y();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int ei : kSigns)
        for (int ej : kSigns) {
          push(out, "ZC", kv({{"i", i}, {"j", j}, {"ei", ei}, {"ej", ej}}), basis, comm({gen_M(i, ei * y)}, {gen_M(j, ej * y)}));
        }
  for (const Gen& s : alphabet_pm(Alphabet::SZ, n)) push(out, "ZI", to_string(s, basis), basis, {s, inverse(s)});
  return out;
}

// Rows of the normality table for s = M[x_a, y_d].
std::vector<RelationInstance> table1(int n, int k, bool uncorrected_only) {
  const Basis B{n, k};
  std::vector<RelationInstance> out;
  for (int a = 1; a <= n; ++a)
    for (int d = 1; d <= k; ++d) {
      const Letter yd = B.y(d);
      const Gen s = gen_M(a, yd);
      const Gen si = inverse(s);
      const Gen C = gen_C(a, yd);
      const Gen Ci = inverse(C);
      auto conj = [&](const std::string& row, const std::string& params, const Gen& t, GenSeq up, GenSeq down,
                      bool corrected = false) {
        if (uncorrected_only) return;
        push(out, "T1 " + row + " sts^-1", params, B, {s, t, si}, std::move(up), corrected);
        push(out, "T1 " + row + " s^-1ts", params, B, {si, t, s}, std::move(down), corrected);
      };
      auto conj_by_C = [&](const std::string& row, const std::string& params, const Gen& t) {
        conj(row, params, t, {C, t, Ci}, {Ci, t, C});
      };
      for (int b = 1; b <= n; ++b) {
        if (b == a) continue;
        const std::string pab = kv({{"a", a}, {"b", b}, {"d", d}});
        conj_by_C("Mc[x_a,y_d,x_b]", pab, gen_Mc(a, yd, b));
        conj_by_C("Mc[x_b,y_d,x_a]", pab, gen_Mc(b, yd, a));
        const Gen T = gen_C(yd, b);
        const Gen Ti = inverse(T);
        const Gen M = gen_Mc(a, yd, b);
        const Gen Mi = inverse(M);
        if (uncorrected_only) {
          push(out, "T1 C[y_d,x_b] sts^-1 (uncorrected)", pab, B, {s, T, si}, {T, C, Ti, M, T, C});
          push(out, "T1 C[y_d,x_b] s^-1ts (uncorrected)", pab, B, {si, T, s}, {C, Ti, Mi, T});
        }
        conj("C[y_d,x_b]", pab, T, {T, C, Ti, M, T, Ci}, {Mi, T}, true);
        for (int e = 1; e <= k; ++e) {
          if (e == d) continue;
          const Letter ye = B.y(e);
          const std::string pabe = kv({{"a", a}, {"b", b}, {"d", d}, {"e", e}});
          conj_by_C("Mc[x_a,y_e,x_b]", pabe, gen_Mc(a, ye, b));
          const Gen Cb = gen_C(b, yd);
          const Gen t4 = gen_Mc(b, ye, a);
          conj("Mc[x_b,y_e,x_a]", pabe, t4, {inverse(Cb), t4, Cb, gen_Mc(b, ye, yd)}, {Cb, t4, gen_Mc(b, yd, ye), inverse(Cb)});
        }
      }
      for (int e = 1; e <= k; ++e) {
        if (e == d) continue;
        const Letter ye = B.y(e);
        const std::string pe = kv({{"a", a}, {"d", d}, {"e", e}});
        conj_by_C("Mc[x_a,y_d,y_e]", pe, gen_Mc(a, yd, ye));
        for (int f = 1; f <= k; ++f) {
          if (f == d || f == e) continue;
          conj_by_C("Mc[x_a,y_e,y_f]", kv({{"a", a}, {"d", d}, {"e", e}, {"f", f}}), gen_Mc(a, ye, B.y(f)));
        }
        const Gen t7 = gen_C(yd, ye);
        conj("C[y_d,y_e]", pe, t7, {C, gen_Mc(a, yd, ye), Ci, t7}, {gen_Mc(a, ye, yd), t7});
        const Gen t10 = gen_C(ye, a);
        const Gen Ced = gen_C(ye, yd);
        conj("C[y_e,x_a]", pe, t10, {t10, Ced}, {t10, inverse(Ced)});
        const Gen t11 = gen_C(a, ye);
        conj("C[x_a,y_e]", pe, t11, {t11, C, gen_Mc(a, ye, yd), Ci}, {t11, gen_Mc(a, yd, ye)});
      }
      const Gen t8 = gen_C(yd, a);
      conj("C[y_d,x_a]", kv({{"a", a}, {"d", d}}), t8, {C, t8}, {Ci, t8});
    }
  return out;
}

std::vector<RelationInstance> s1prime(int n, int k) {
  const Basis B{n, k};
  std::vector<RelationInstance> out;
  for (int x = 1; x <= n; ++x)
    for (int x2 = 1; x2 <= n; ++x2)
      for (int d = 1; d <= k; ++d)
        for (int e = 1; e <= k; ++e) {
          const Gen m1 = gen_M(x, B.y(d));
          const Gen m2 = gen_M(x2, B.y(e));
          const std::string p = kv({{"x", x}, {"x'", x2}, {"y", d}, {"y'", e}});
          if (x != x2 && d == e) push(out, "S1 same y", p, B, comm({m1}, {m2}));
          if (x != x2 && d != e) push(out, "S1 distinct", p, B, comm({m1}, {m2}));
          // [M_{x,y}, M_{x,y'}] = M_{x,[y'^-1,y^-1]}, a conjugate of M_{x,[y,y']}.
          if (x == x2 && d != e) push(out, "S1 same x", p, B, comm({m1}, {m2}), {gen_Mc(x, -B.y(e), -B.y(d))});
        }
  return out;
}

}  // namespace

std::optional<SymWord> krel(int family, const KrelParams& p, int n) {
  auto pr = krel_pair(family, p, n);
  if (!pr) return std::nullopt;
  GenSeq r = pr->lhs;
  const GenSeq ri = inverse_seq(pr->rhs);
  r.insert(r.end(), ri.begin(), ri.end());
  return SymWord::from_tokens(Alphabet::SK, n, r);
}

const std::vector<std::string>& catalog_kinds() {
  static const std::vector<std::string> kinds = {"nielsen", "jensen_wahl", "rk0", "zn", "table1", "s1prime"};
  return kinds;
}

std::vector<RelationInstance> relation_catalog(std::string_view kind, int n, int k) {
  if (n < 2) throw Error("relation_catalog: n must be at least 2");
  if (kind == "nielsen") return nielsen(n);
  if (kind == "jensen_wahl") return jensen_wahl(n);
  if (kind == "rk0") return rk0(n);
  if (kind == "zn") return zn(n);
  if (kind == "table1") {
    if (k < 1) throw Error("relation_catalog: table1 needs k >= 1");
    return table1(n, k, false);
  }
  if (kind == "s1prime") {
    if (k < 1) throw Error("relation_catalog: s1prime needs k >= 1");
    return s1prime(n, k);
  }
  throw Error("relation_catalog: unknown kind '" + std::string(kind) + "'");
}

std::vector<RelationInstance> inverse_pairs(Alphabet a, int n) {
  std::vector<RelationInstance> out;
  const Basis basis = sym_basis(n);
  for (const Gen& s : alphabet_pm(a, n)) {
    push(out, std::string("pair ") + alphabet_name(a), to_string(s, basis), basis, {s, inverse(s)});
  }
  return out;
}

std::vector<RelationInstance> table1_uncorrected(int n, int k) { return table1(n, k, true); }

GenSeq genset_reduce(const Gen& t, std::span<const Gen> allowed, int n) {
  const Letter y = sym_basis(n).y();
  auto is_allowed = [&](const Gen& g) { return std::find(allowed.begin(), allowed.end(), g) != allowed.end(); };
  if (!in_alphabet(Alphabet::SK, n, t)) throw Error("genset_reduce: token is not in SK^{+-1}");
  if (is_allowed(t)) return {t};
  if (t.kind == GenKind::C || gen_of(t.p1) != y) {
    if (is_allowed(inverse(t))) return {inverse(t)};
    if (t.kind == GenKind::Mc) return inverse_seq(genset_reduce(inverse(t), allowed, n));
    throw Error("genset_reduce: conjugation generator " + to_string(t, sym_basis(n)) + " not allowed");
  }
  const int a = gen_of(t.p0);
  const int b = gen_of(t.p2);
  const Gen* src = nullptr;
  for (const Gen& g : allowed) {
    if (g.kind == GenKind::Mc && gen_of(g.p0) == a && gen_of(g.p1) == y && gen_of(g.p2) == b) {
      src = &g;
      break;
    }
  }
  if (src == nullptr) throw Error("genset_reduce: no allowed Mc generator for the pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
  const L l{y};
  auto need = [&](const Gen& g) {
    if (!is_allowed(g) && !is_allowed(inverse(g))) throw Error("genset_reduce: flip needs " + to_string(g, sym_basis(n)));
    return g;
  };
  int al = sign_of(src->p0), ep = sign_of(src->p1), be = sign_of(src->p2);
  GenSeq w = {*src};
  // R7: Mc[-al,ep,be] = Mc[al,ep,be]^-1 C[y,x_b]^be C[x_a,y]^-ep C[y,x_b]^-be C[x_a,y]^ep
  if (al != sign_of(t.p0)) {
    const Gen cb = need(l.Cyx(b, be));
    const Gen ca = need(l.Cxy(a, ep));
    GenSeq next = inverse_seq(w);
    for (const Gen& g : {cb, inverse(ca), inverse(cb), ca}) next.push_back(g);
    w = std::move(next);
    al = -al;
  }
  // R5: Mc[al,-ep,be] = C[x_b,y]^-ep Mc[al,ep,be]^-1 C[x_b,y]^ep
  if (ep != sign_of(t.p1)) {
    const Gen cb = need(l.Cxy(b, ep));
    w = cat({{inverse(cb)}, inverse_seq(w), {cb}});
    ep = -ep;
  }
  // R4: Mc[al,ep,-be] = C[y,x_b]^-be Mc[al,ep,be]^-1 C[y,x_b]^be
  if (be != sign_of(t.p2)) {
    const Gen cb = need(l.Cyx(b, be));
    w = cat({{inverse(cb)}, inverse_seq(w), {cb}});
    be = -be;
  }
  return reduce_gens(w);
}

}  // namespace torelli
