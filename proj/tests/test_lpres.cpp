#include <doctest.h>

#include <map>

#include "torelli/lpres.hpp"

using namespace torelli;

namespace {

SymWord sk(int n, std::string_view text) { return SymWord::parse(Alphabet::SK, n, text); }

Endo tok(const Gen& g, int n) {
  const Gen one[] = {g};
  return interpret(one, n);
}

// s t s^-1 computed directly in Aut(F_{n,1}).
Endo conj(const Gen& s, const Gen& t, int n) {
  return compose(compose(tok(s, n), tok(t, n)), tok(inverse(s), n));
}

// Brute-force instance count of each R_K^0 family straight from the side
// conditions: indices distinct unless stated, R2 allows a = b with
// alpha = -beta and c = d.
std::map<std::string, int> rk0_counts(int n) {
  std::map<std::string, int> out;
  auto distinct = [](std::initializer_list<int> xs) {
    for (auto i = xs.begin(); i != xs.end(); ++i)
      for (auto j = i + 1; j != xs.end(); ++j)
        if (*i == *j) return false;
    return true;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (distinct({a, b})) {
        out["R1"] += 1;
        for (const char* f : {"R4", "R5", "R6", "R7"}) out[f] += 8;  // alpha, beta, epsilon
      }
      for (int c = 1; c <= n; ++c) {
        if (distinct({a, b, c})) {
          out["R3"] += 8;  // beta, epsilon, gamma
          for (const char* f : {"R8", "R9", "R10"}) out[f] += 16;  // alpha, beta, gamma, epsilon
        }
        for (int d = 1; d <= n; ++d) {
          if (a == c || b == d || a == d || b == c) continue;
          // 32 sign choices; a = b forces beta = -alpha, halving them.
          out["R2"] += a == b ? 16 : 32;
        }
      }
    }
  return out;
}

}  // namespace

TEST_CASE("phi on generators") {
  const int n = 3;
  CHECK(phi_gen(gen_P(1, 2), gen_C(1, 4), n) == sk(n, "C[x2,y]"));
  for (int e : {1, -1}) {
    const Gen s = gen_M(1, e * 4);
    const SymWord expect = SymWord::from_tokens(Alphabet::SK, n, GenSeq{gen_C(4, 2), gen_Mc(1, -e * 4, -2)});
    CHECK(phi_gen(s, gen_C(4, 2), n) == expect);
    CHECK(equals(interpret(expect), conj(s, gen_C(4, 2), n)));
  }
  CHECK(phi_gen(gen_M(1, 4), gen_C(2, 4), n) == sk(n, "C[x2,y]"));
  CHECK(phi_gen(gen_I(1), gen_C(4, 1), n) == sk(n, "C[y,x1^-1]"));
  CHECK_THROWS_AS(phi_gen(gen_M(1, 4), gen_M(1, 4), n), Error);
}

TEST_CASE("phi agrees with conjugation for every generator pair") {
  for (int n : {2, 3}) {
    for (const Gen& s : alphabet_pm(Alphabet::SQ, n))
      for (const Gen& t : alphabet(Alphabet::SK, n)) {
        REQUIRE(equals(interpret(phi_gen(s, t, n)), conj(s, t, n)));
        REQUIRE(phi_matching_rules(s, t, n).size() == 1);
      }
  }
}

TEST_CASE("phi_word") {
  const int n = 3;
  const SymWord w = sk(n, "C[y,x1] * Mc[x2,y,x3^-1]");
  CHECK(phi_word({}, w) == w);
  // Right to left: the last token acts first.
  const GenSeq u{gen_P(1, 2), gen_M(1, 4)};
  const Gen first[] = {gen_M(1, 4)};
  const Gen second[] = {gen_P(1, 2)};
  CHECK(phi_word(u, w) == phi_word(second, phi_word(first, w)));
  for (const Gen& s : alphabet_pm(Alphabet::SA, n))
    for (const Gen& t : alphabet(Alphabet::SK, n)) {
      const GenSeq ss{s, inverse(s)};
      const SymWord tw = SymWord::from_tokens(Alphabet::SK, n, GenSeq{t});
      REQUIRE(equals(interpret(phi_word(ss, tw)), interpret(tw)));
    }
  for (const RelationInstance& r : relation_catalog("nielsen", n))
    for (const Gen& t : alphabet(Alphabet::SK, n)) {
      const SymWord tw = SymWord::from_tokens(Alphabet::SK, n, GenSeq{t});
      REQUIRE(equals(interpret(phi_word(r.relator(), tw)), interpret(tw)));
    }
}

TEST_CASE("fixed cases of M[x_a^alpha, y] hold for both signs") {
  const int n = 3;
  int fixed = 0;
  for (int alpha : {1, -1})
    for (const Gen& t : alphabet(Alphabet::SK, n)) {
      if (!phi_y_fixed_case(1, alpha, t, n)) continue;
      ++fixed;
      CHECK(equals(conj(gen_M(alpha, 4), t, n), tok(t, n)));
    }
  CHECK(fixed > 0);
}

TEST_CASE("krel") {
  const int n = 3;
  KrelParams p;
  p.a = 1;
  p.b = 2;
  const auto r1 = krel(1, p, n);
  REQUIRE(r1.has_value());
  CHECK(*r1 == sk(n, "C[x1,y] * C[x2,y] * C[x1,y^-1] * C[x2,y^-1]"));
  const auto r4 = krel(4, p, n);
  REQUIRE(r4.has_value());
  CHECK(interpret(*r4).is_identity());
  // R2 with x_a^alpha = x_b^beta violates the side conditions.
  KrelParams bad;
  bad.a = bad.b = 1;
  bad.c = 2;
  bad.d = 3;
  CHECK_FALSE(krel(2, bad, n).has_value());
  CHECK_THROWS_AS(krel(11, p, n), Error);
}

TEST_CASE("rk0 catalog matches an independent count") {
  for (int n : {2, 3}) {
    std::map<std::string, int> got;
    for (const RelationInstance& r : relation_catalog("rk0", n)) got[r.family] += 1;
    std::map<std::string, int> want = rk0_counts(n);
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    CHECK(got == want);
  }
  CHECK(relation_catalog("rk0", 2).size() == 98);
}

TEST_CASE("every rk0 relator is trivial") {
  for (const RelationInstance& r : relation_catalog("rk0", 3)) {
    REQUIRE(equals(interpret_gens(r.lhs, r.basis), interpret_gens(r.rhs, r.basis)));
  }
}

TEST_CASE("catalog contents") {
  bool n3 = false;
  for (const RelationInstance& r : relation_catalog("nielsen", 2)) {
    if (r.family == "N3" && r.params == "a=1 b=2 alpha=1 beta=1") n3 = true;
  }
  CHECK(n3);
  bool cyy = false;
  for (const RelationInstance& r : relation_catalog("table1", 3, 3)) {
    if (r.family.rfind("T1 C[y_d,y_e]", 0) == 0) cyy = true;
  }
  CHECK(cyy);
  CHECK_THROWS_AS(relation_catalog("bogus", 3), Error);
  for (const std::string& kind : catalog_kinds()) CHECK_FALSE(relation_catalog(kind, 2, 2).empty());
}

TEST_CASE("verbatim N3 fails when alpha beta = -1") {
  int corrected = 0;
  for (const RelationInstance& r : relation_catalog("nielsen", 3)) {
    if (r.family != "N3") continue;
    const Endo lhs = interpret_gens(r.lhs, r.basis);
    CHECK(equals(lhs, interpret_gens(r.rhs, r.basis)));
    if (!r.corrected) continue;
    ++corrected;
    // The printed right side is I_b P_ab.
    int a = 0, b = 0, alpha = 0, beta = 0;
    REQUIRE(std::sscanf(r.params.c_str(), "a=%d b=%d alpha=%d beta=%d", &a, &b, &alpha, &beta) == 4);
    CHECK(alpha * beta == -1);
    CHECK_FALSE(equals(lhs, interpret_gens(GenSeq{gen_I(b), gen_P(a, b)}, r.basis)));
  }
  CHECK(corrected > 0);
}

TEST_CASE("verbatim forms of corrected table1 cells fail") {
  const auto verbatim = table1_uncorrected(3, 3);
  CHECK(verbatim.size() == 36);
  for (const RelationInstance& r : verbatim) {
    CHECK_FALSE(equals(interpret_gens(r.lhs, r.basis), interpret_gens(r.rhs, r.basis)));
  }
  for (const RelationInstance& r : relation_catalog("table1", 3, 3)) {
    REQUIRE(equals(interpret_gens(r.lhs, r.basis), interpret_gens(r.rhs, r.basis)));
  }
}

TEST_CASE("verbatim last phi row for M[x_a,x_b] fails for epsilon = -1") {
  const int n = 3;
  // s = M[x1, x2], t = Mc[x2^-1, y^eps, x1^-1]; a = 1, b = 2, alpha = beta = 1.
  for (int e : {1, -1}) {
    const Gen s = gen_M(1, 2);
    const Gen t = gen_Mc(-2, e * 4, -1);
    const GenSeq printed{inverse(gen_C(4, 2)), inverse(gen_C(4, 1)), e > 0 ? inverse(gen_C(1, 4)) : gen_C(1, 4),
                         gen_C(4, 1), t, gen_C(4, 2), gen_Mc(1, e * 4, -2), gen_C(2, 4)};
    const bool ok = equals(interpret(printed, n), conj(s, t, n));
    CHECK(ok == (e == 1));
    CHECK(equals(interpret(phi_gen(s, t, n)), conj(s, t, n)));
  }
}

TEST_CASE("genset_reduce") {
  const int n = 2;
  GenSeq allowed{gen_Mc(1, 3, 2), gen_Mc(2, 3, 1)};
  for (const Gen& t : alphabet(Alphabet::SK, n))
    if (t.kind == GenKind::C) allowed.push_back(t);
  auto allowed_token = [&](const Gen& g) {
    for (const Gen& a : allowed)
      if (g == a || g == inverse(a)) return true;
    return false;
  };
  CHECK(genset_reduce(gen_Mc(1, 3, 2), allowed, n) == GenSeq{gen_Mc(1, 3, 2)});
  for (const Gen& t : alphabet(Alphabet::SK, n)) {
    if (t.kind != GenKind::Mc) continue;
    const GenSeq r = genset_reduce(t, allowed, n);
    for (const Gen& g : r) CHECK(allowed_token(g));
    CHECK(equals(interpret(r, n), tok(t, n)));
  }
}

TEST_CASE("inverse pairs") {
  for (const RelationInstance& r : inverse_pairs(Alphabet::SA, 3)) {
    CHECK(r.relator().size() == 2);
    CHECK(reduce_gens(r.relator()).empty());
  }
}
