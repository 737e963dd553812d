#include <doctest.h>

#include "torelli/fgmap.hpp"
#include "torelli/rng.hpp"

using namespace torelli;

namespace {

const Basis B21{2, 1};  // x1 = 1, x2 = 2, y = 3
const Basis B32{3, 2};  // x1..x3 = 1..3, y1 = 4, y2 = 5

Word w(const Basis& b, std::initializer_list<Letter> ls) { return Word::from_letters(b, ls); }
Endo tok(const Basis& b, const Gen& g) { return gen_endo(g, b); }

// Oracle for the wedge of two basis vectors e_a ^ e_b (0-based, any order).
IntVec basis_wedge(int r, int a, int b) {
  IntVec out(static_cast<std::size_t>(r * (r - 1) / 2), 0);
  if (a == b) return out;
  const int lo = std::min(a, b), hi = std::max(a, b);
  int idx = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j, ++idx)
      if (i == lo && j == hi) out[static_cast<std::size_t>(idx)] = a < b ? 1 : -1;
  return out;
}

}  // namespace

TEST_CASE("transvections") {
  const Basis b{2, 1};
  CHECK(gen_transvection(b, 1, 1, w(b, {3})).apply(w(b, {1})) == w(b, {3, 1}));
  CHECK(gen_transvection(b, 1, -1, w(b, {3})).apply(w(b, {1})) == w(b, {1, -3}));
  const Word v = commutator(w(b, {3}), w(b, {2}));
  const Endo f = gen_transvection(b, 1, 1, v);
  CHECK(f.apply(w(b, {1})) == w(b, {3, 2, -3, -2, 1}));
  CHECK(f.apply(w(b, {2})) == w(b, {2}));
  CHECK(f.factors().has_value());
  CHECK_THROWS_AS(gen_transvection(b, 1, 1, w(b, {1, 3})), Error);
}

TEST_CASE("conjugation, swap and inversion") {
  const Basis b = B21;
  CHECK(gen_conjugation(b, 3, 1).apply(w(b, {3})) == w(b, {1, 3, -1}));
  const Endo s = gen_swap(b, 1, 2);
  CHECK(s.apply(w(b, {1})) == w(b, {2}));
  CHECK(compose(s, s).is_identity());
  CHECK(equals(compose(s, s), Endo::identity(b)));
  const Endo i = gen_inversion(b, 1);
  CHECK(i.apply(w(b, {1})) == w(b, {-1}));
  CHECK(compose(i, i).is_identity());
}

TEST_CASE("compose applies the right factor first") {
  const Basis b = B21;
  const Endo f = tok(b, gen_M(1, 2));  // x1 -> x2 x1
  const Endo g = tok(b, gen_P(1, 2));  // x1 <-> x2
  const Word x1 = w(b, {1});
  CHECK(compose(f, g).apply(x1) == f.apply(g.apply(x1)));
  CHECK(compose(f, g).apply(x1) == w(b, {2}));
  CHECK(compose(g, f).apply(x1) == w(b, {1, 2}));
  CHECK(apply(Endo::identity(b), w(b, {1, 3, -2})) == w(b, {1, 3, -2}));
}

TEST_CASE("M_{x^-1,y} = C_{x,y} M_{x,y}^-1") {
  const Basis b = B21;
  const Endo lhs = tok(b, gen_M(-1, 3));
  CHECK(lhs.apply(w(b, {1})) == w(b, {1, -3}));
  CHECK(equals(compose(tok(b, gen_C(1, 3)), tok(b, gen_M(1, -3))), lhs));
  // The unreversed product is a different automorphism.
  CHECK_FALSE(equals(compose(tok(b, gen_M(1, 3)), tok(b, gen_C(1, -3))), lhs));
}

TEST_CASE("invert_factored") {
  const Basis b = B21;
  const Endo s = gen_swap(b, 1, 2);
  CHECK(equals(invert_factored(s), s));
  CHECK(equals(invert_factored(tok(b, gen_M(1, 3))), tok(b, gen_M(1, -3))));
  CHECK(equals(invert_factored(tok(b, gen_C(3, 1))), tok(b, gen_C(3, -1))));
  const Endo f = interpret_gens(GenSeq{gen_M(1, 2), gen_C(3, 1), gen_I(2), gen_Mc(-1, 3, 2)}, b);
  const Endo g = invert_factored(f);
  CHECK(compose(f, g).is_identity());
  CHECK(compose(g, f).is_identity());
  CHECK_THROWS_AS(invert_factored(Endo(b, {w(b, {1}), w(b, {2}), w(b, {3})})), Error);
}

TEST_CASE("token inverses and text") {
  CHECK(inverse(gen_M(1, 3)) == gen_M(1, -3));
  CHECK(inverse(gen_C(3, 1)) == gen_C(3, -1));
  CHECK(inverse(gen_Mc(1, 3, 2)) == gen_Mc(1, 2, 3));
  CHECK(inverse(gen_P(1, 2)) == gen_P(1, 2));
  CHECK(inverse(gen_I(2)) == gen_I(2));
  CHECK(gen_C(-1, 3) == gen_C(1, 3));
  CHECK(gen_C(3, -1) == inverse(gen_C(3, 1)));
  for (const char* t : {"M[x1,y]", "C[y,x2^-1]", "Mc[x1^-1,y,x2]", "P[1,2]", "I[2]"}) {
    CHECK(to_string(parse_gen(B21, t), B21) == t);
  }
  CHECK(parse_gen_seq(B21, "1").empty());
  CHECK(parse_gen_seq(B21, "M[x1,y] * P[1,2]").size() == 2);
  CHECK_THROWS_AS(parse_gen(B21, "M[x1,x1]"), Error);
  CHECK_THROWS_AS(parse_gen(B21, "Q[1]"), Error);
}

TEST_CASE("abel_matrix") {
  CHECK(abel_matrix(Endo::identity(B21)) == IntMatrix::identity(3));
  IntMatrix expect = IntMatrix::identity(3);
  expect.at(2, 0) = 1;  // row [y], column [x1]
  CHECK(abel_matrix(tok(B21, gen_M(1, 3))) == expect);
  CHECK(abel_matrix(tok(B21, gen_Mc(1, 3, 2))) == IntMatrix::identity(3));
}

TEST_CASE("classify") {
  const Classification c = classify(tok(B21, gen_C(3, 1)));
  CHECK((c.in_A && c.in_IA && c.in_BKer && c.in_KIA));
  const Classification m = classify(tok(B21, gen_M(1, 3)));
  CHECK((m.in_A && !m.in_IA && m.in_BKer && !m.in_KIA));
  const Classification s = classify(gen_swap(B21, 1, 2));
  CHECK((s.in_A && !s.in_IA && !s.in_BKer && !s.in_KIA));
  // M_{y,x1}: y -> x1 y is not in A.
  CHECK_FALSE(classify(tok(B21, gen_M(3, 1))).in_A);
}

TEST_CASE("lambda2_projection") {
  CHECK(lambda2_projection(Word(B32)) == IntVec(10, 0));
  const Word x1 = w(B32, {1}), x2 = w(B32, {2});
  CHECK(lambda2_projection(commutator(x1, x2)) == basis_wedge(5, 0, 1));
  CHECK(lambda2_projection(commutator(x2, x1)) == basis_wedge(5, 1, 0));
  CHECK_THROWS_AS(lambda2_projection(x1), Error);
  CHECK(wedge_index(5, 0, 1) == 0);
  CHECK(wedge_index(5, 3, 4) == 9);
  CHECK(wedge_pair(5, 9) == std::pair<int, int>{3, 4});
  CHECK(wedge(unit_vector(5, 2), unit_vector(5, 0)) == basis_wedge(5, 2, 0));
}

TEST_CASE("johnson images of C and Mc") {
  const Basis b = B32;
  CHECK(johnson(Endo::identity(b)) == IntMatrix(5, 10));
  // C_{x1,y1}: x1 -> y1 x1 y1^-1, so the x1 row is pi([y1, x1]) = e_y1 ^ e_x1.
  const IntMatrix tc = johnson(tok(b, gen_C(1, 4)));
  CHECK(tc.row(0) == basis_wedge(5, 3, 0));
  for (int r = 1; r < 5; ++r) CHECK(tc.row(r) == IntVec(10, 0));
  // Mc[x2,y1,x3] = M_{x2,[y1,x3]}: the x2 row is e_y1 ^ e_x3.
  const IntMatrix tm = johnson(tok(b, gen_Mc(2, 4, 3)));
  CHECK(tm.row(1) == basis_wedge(5, 3, 2));
  for (int r : {0, 2, 3, 4}) CHECK(tm.row(r) == IntVec(10, 0));
  CHECK_THROWS_AS(johnson(tok(b, gen_M(1, 4))), Error);
}

TEST_CASE("johnson rank") {
  auto rank_of = [](int n, int k) {
    const Basis b{n, k};
    std::vector<Endo> fs;
    for (const Gen& g : johnson_generating_set(b)) fs.push_back(gen_endo(g, b));
    CHECK(static_cast<int>(fs.size()) == johnson_rank(fs));
    return johnson_rank(fs);
  };
  CHECK(rank_of(2, 1) == 6);
  CHECK(rank_of(2, 2) == 16);
  CHECK(johnson_rank_formula(2, 1) == 6);
  CHECK(johnson_rank_formula(2, 2) == 16);
  // 3*2*2 + 3*1 + 2*3*2 + 2*1
  CHECK(johnson_rank_formula(3, 2) == 29);
  CHECK(rank_of(3, 2) == 29);
  const Endo c = tok(B21, gen_C(3, 1));
  CHECK(johnson_rank(std::span<const Endo>(&c, 1)) == 1);
}

TEST_CASE("the generating set lies in the kernel") {
  for (const Gen& g : johnson_generating_set(B32)) {
    CHECK(classify(gen_endo(g, B32)).in_KIA);
  }
}

TEST_CASE("transvections along one y commute") {
  // [M_{x,y}, M_{x',y}] = id at (3, 2) for x != x'.
  for (int y : {4, 5})
    for (int a = 1; a <= 3; ++a)
      for (int c = 1; c <= 3; ++c) {
        if (a == c) continue;
        const Endo f = tok(B32, gen_M(a, y)), g = tok(B32, gen_M(c, y));
        CHECK(equals(compose(f, g), compose(g, f)));
      }
}

TEST_CASE("johnson is a homomorphism on kernel samples") {
  const GenSeq gens = johnson_generating_set(B32);
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = Rng::for_sample(7, i);
    GenSeq s1, s2;
    for (int j = 0; j < 3; ++j) s1.push_back(rng.pick(gens));
    for (int j = 0; j < 3; ++j) s2.push_back(inverse(rng.pick(gens)));
    const Endo f = interpret_gens(s1, B32), g = interpret_gens(s2, B32);
    const IntMatrix tf = johnson(f), tg = johnson(g), tfg = johnson(compose(f, g));
    for (int r = 0; r < 5; ++r) REQUIRE(tfg.row(r) == add(tf.row(r), tg.row(r)));
  }
}

TEST_CASE("extend_basis fixes the new generators") {
  const Basis bn{2, 0};
  const Endo f = gen_endo(gen_M(1, 2), bn);
  const Endo e = extend_basis(f, B21);
  CHECK(e.apply(w(B21, {1})) == w(B21, {2, 1}));
  CHECK(e.apply(w(B21, {3})) == w(B21, {3}));
}
