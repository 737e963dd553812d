#include <doctest.h>

#include "torelli/glsemi.hpp"
#include "torelli/rng.hpp"
#include "torelli/symgen.hpp"
#include "torelli/twisted.hpp"

using namespace torelli;

namespace {

Endo aut(int n, std::initializer_list<Gen> gs) { return interpret_gens(GenSeq(gs), Basis{n, 0}); }

IntMatrix random_unimodular(Rng& rng, int n) {
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    const int i = static_cast<int>(rng.range(0, n - 1));
    const int j = static_cast<int>(rng.range(0, n - 1));
    if (i == j) continue;
    const std::int64_t c = rng.range(-1, 1);
    for (int col = 0; col < n; ++col) m.at(i, col) += c * m.at(j, col);
  }
  return m;
}

IntMatrix random_stabilizer(Rng& rng, int n) {
  const IntMatrix hat = random_unimodular(rng, n);
  IntMatrix m(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = hat.at(i, j);
  for (int j = 0; j < n; ++j) m.at(n, j) = rng.range(-5, 5);
  m.at(n, n) = 1;
  return m;
}

}  // namespace

TEST_CASE("action of Aut(F_n) on Z^n") {
  const IntVec z{3, -1};
  CHECK(aut_act_on_Zn(Endo::identity(Basis{2, 0}), z) == z);
  CHECK(aut_act_on_Zn(aut(2, {gen_P(1, 2)}), z) == IntVec{-1, 3});
  CHECK(aut_act_on_Zn(aut(2, {gen_I(1)}), z) == IntVec{-3, -1});
  // eta(M_{x1,x2}) = [[1,0],[1,1]] (columns are images); its inverse
  // transpose is [[1,-1],[0,1]], fixing e1 and sending e2 to e2 - e1.
  const Endo m = aut(2, {gen_M(1, 2)});
  CHECK(aut_act_on_Zn(m, IntVec{1, 0}) == IntVec{1, 0});
  CHECK(aut_act_on_Zn(m, IntVec{0, 1}) == IntVec{-1, 1});
}

TEST_CASE("the action agrees with conjugation in Aut(F_{n,1})") {
  // iota1(f) iota2(z) iota1(f)^-1 differs from iota2(f.z) by a kernel element,
  // so their abelianizations agree.
  for (const Endo& f : {aut(2, {gen_M(1, 2)}), aut(2, {gen_M(-2, 1), gen_I(1)}), aut(2, {gen_P(1, 2)})}) {
    for (const IntVec& z : {IntVec{1, 0}, IntVec{0, 1}, IntVec{2, -3}}) {
      const Endo conj = compose(compose(iota1(f), iota2(z)), iota1(invert_factored(f)));
      CHECK(abel_matrix(conj) == abel_matrix(iota2(aut_act_on_Zn(f, z))));
    }
  }
}

TEST_CASE("action is a left action") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_sample(11, i);
    const Endo f = random_aut(rng, 3, 5), g = random_aut(rng, 3, 5);
    IntVec z(3);
    for (auto& v : z) v = rng.range(-4, 4);
    REQUIRE(aut_act_on_Zn(compose(f, g), z) == aut_act_on_Zn(f, aut_act_on_Zn(g, z)));
  }
}

TEST_CASE("semidirect product") {
  const int n = 2;
  const Endo id = Endo::identity(Basis{n, 0});
  const QElement p{{1, 2}, id}, q{{-3, 5}, id};
  const QElement pq = semi_mul(p, q);
  CHECK(pq.z == IntVec{-2, 7});
  CHECK(pq.a.is_identity());
  const Endo a = aut(n, {gen_M(1, 2)}), b = aut(n, {gen_I(2)});
  const QElement ab = semi_mul({{0, 0}, a}, {{0, 0}, b});
  CHECK(ab.z == IntVec{0, 0});
  CHECK(equals(ab.a, compose(a, b)));
  // (z1, a1)(z2, a2) = (z1 + a1.z2, a1 a2)
  const QElement r = semi_mul({{1, 0}, a}, {{1, 0}, b});
  CHECK(r.z == add(IntVec{1, 0}, aut_act_on_Zn(a, {1, 0})));
}

TEST_CASE("semidirect associativity and inverses") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_sample(12, i);
    QElement qs[3];
    for (QElement& q : qs) {
      q.z = IntVec(3);
      for (auto& v : q.z) v = rng.range(-3, 3);
      q.a = random_aut(rng, 3, 4);
    }
    REQUIRE(q_equals(semi_mul(semi_mul(qs[0], qs[1]), qs[2]), semi_mul(qs[0], semi_mul(qs[1], qs[2]))));
    REQUIRE(q_equals(semi_mul(qs[0], semi_inv(qs[0])), q_identity(3)));
    REQUIRE(q_equals(semi_mul(semi_inv(qs[0]), qs[0]), q_identity(3)));
  }
}

TEST_CASE("stabilizer decomposition") {
  const MatSemi id = stab_decompose(IntMatrix::identity(3));
  CHECK(id.z == IntVec{0, 0});
  CHECK(id.m == IntMatrix::identity(2));
  IntMatrix m = IntMatrix::identity(3);
  m.at(2, 1) = 1;  // Mhat = 1, Mbar = e2
  const MatSemi p = stab_decompose(m);
  CHECK(p.z == IntVec{0, 1});
  CHECK(p.m == IntMatrix::identity(2));
  IntMatrix bad = IntMatrix::identity(3);
  bad.at(0, 2) = 1;
  CHECK_FALSE(is_stabilizer(bad));
  CHECK_THROWS_AS(stab_decompose(bad), Error);
}

TEST_CASE("psi is a homomorphism and reassembles") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_sample(13, i);
    const IntMatrix m1 = random_stabilizer(rng, 3), m2 = random_stabilizer(rng, 3);
    REQUIRE(is_stabilizer(m1));
    REQUIRE(stab_decompose(m1 * m2) == mat_semi_mul(stab_decompose(m1), stab_decompose(m2)));
    REQUIRE(stab_assemble(stab_decompose(m1)) == m1);
  }
}

TEST_CASE("lambda_bar lands in the kernel") {
  for (const Gen& f : alphabet_pm(Alphabet::SA, 3)) {
    const Gen one[] = {f};
    for (int a = 0; a < 3; ++a) {
      CHECK(classify(lambda_bar(aut_of(one, 3), unit_vector(3, a))).in_KIA);
    }
  }
}
