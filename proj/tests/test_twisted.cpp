#include <doctest.h>

#include "torelli/lpres.hpp"
#include "torelli/twisted.hpp"

using namespace torelli;

namespace {

Endo tok(const Gen& g, int n) {
  const Gen one[] = {g};
  return interpret(one, n);
}

SymWord skw(int n, GenSeq t) { return SymWord::from_tokens(Alphabet::SK, n, t); }

}  // namespace

TEST_CASE("zword and zvec") {
  CHECK(zword({2, 0, -1}) == GenSeq{gen_M(1, 4), gen_M(1, 4), gen_M(3, -4)});
  CHECK(zword({0, 0}).empty());
  const GenSeq w{gen_M(2, 4), gen_M(1, -4), gen_M(2, 4)};
  CHECK(zvec(w, 3) == IntVec{-1, 2, 0});
  CHECK(equals(iota2({1, -2, 0}), interpret(zword({1, -2, 0}), 3)));
}

TEST_CASE("lambda_bar degenerate arguments") {
  const int n = 3;
  const GenSeq z{gen_M(1, 4), gen_M(2, -4)};
  CHECK(lambda_bar({}, z, n).is_identity());
  const GenSeq f{gen_M(1, 2), gen_I(3)};
  CHECK(lambda_bar(f, {}, n).is_identity());
}

TEST_CASE("lambda_bar(I[1], M[x1,y]) = C_{x1,y}") {
  const int n = 2;
  const GenSeq f{gen_I(1)}, z{gen_M(1, 3)};
  CHECK(equals(lambda_bar(f, z, n), tok(gen_C(1, 3), n)));
}

TEST_CASE("lambda_gen values") {
  const int n = 3;
  const int y = 4;
  for (int e : {1, -1}) {
    CHECK(lambda_gen(gen_I(1), gen_M(1, e * y), n) == skw(n, {gen_C(1, e * y)}));
    for (int b : {1, -1}) {
      CHECK(lambda_gen(gen_M(1, b * 2), gen_M(1, e * y), n) == skw(n, {gen_Mc(1, -e * y, -b * 2)}));
    }
  }
  CHECK(lambda_gen(gen_P(1, 2), gen_M(3, y), n).empty());
  CHECK(lambda_gen(gen_I(2), gen_M(1, y), n).empty());
}

TEST_CASE("lambda_gen agrees with lambda_bar on every generator pair") {
  for (int n : {2, 3}) {
    for (const Gen& f : alphabet_pm(Alphabet::SA, n))
      for (const Gen& z : alphabet_pm(Alphabet::SZ, n)) {
        const Gen fs[] = {f}, zs[] = {z};
        REQUIRE(equals(interpret(lambda_gen(f, z, n)), lambda_bar(fs, zs, n)));
      }
  }
}

TEST_CASE("tlambda1") {
  const int n = 3;
  const Gen f = gen_M(1, 2);
  CHECK(tlambda1(f, {}, n).empty());
  const Gen s = gen_M(1, 4);
  const Gen one[] = {s};
  CHECK(tlambda1(f, one, n) == lambda_gen(f, s, n));
  for (const Gen& g : alphabet_pm(Alphabet::SA, n)) {
    for (const Gen& t : alphabet(Alphabet::SZ, n)) {
      const GenSeq pair{t, inverse(t)};
      REQUIRE(interpret(tlambda1(g, pair, n)).is_identity());
    }
    for (const RelationInstance& r : relation_catalog("zn", n)) {
      REQUIRE(interpret(tlambda1(g, r.relator(), n)).is_identity());
    }
  }
  // Unreduced input is not simplified first.
  const GenSeq w{gen_M(2, 4), gen_M(2, -4), gen_M(1, 4)};
  const GenSeq fs{f};
  CHECK(equals(interpret(tlambda1(f, w, n)), lambda_bar(fs, GenSeq{gen_M(1, 4)}, n)));
}

TEST_CASE("tlambda2") {
  const int n = 3;
  CHECK(tlambda2({}, {1, 2, 3}, n).empty());
  for (const RelationInstance& r : relation_catalog("nielsen", n))
    for (int a = 0; a < n; ++a) REQUIRE(interpret(tlambda2(r.relator(), unit_vector(n, a), n)).is_identity());
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = Rng::for_sample(31, i);
    const GenSeq pm = alphabet_pm(Alphabet::SA, n);
    GenSeq w;
    for (int j = 0; j < 4; ++j) w.push_back(rng.pick(pm));
    IntVec z(3);
    for (auto& v : z) v = rng.range(-2, 2);
    REQUIRE(equals(interpret(tlambda2(w, z, n)), lambda_bar(w, zword(z), n)));
  }
  CHECK_THROWS_AS(tlambda2({}, {1, 2}, n), Error);
}

TEST_CASE("integer bilinear map satisfies TB1 to TB3") {
  const auto d = integer_bilinear_data();
  const CheckReport r = tb_check(d, 100, 1, true);
  CHECK(r.all_pass());
  auto broken = d;
  broken.lambda = [](std::int64_t a, std::int64_t b) { return a * a * b; };
  CHECK(tb_check(broken, 100, 1, false).failures() > 0);
}

TEST_CASE("lambda_bar satisfies TB1 to TB3") {
  for (int n : {2, 3}) {
    const CheckReport r = tb_check(lambda_bar_data(n), 30, 0x5EED, n == 2);
    CHECK(r.failures() == 0);
    CHECK(r.cases.size() >= 90);
  }
}

TEST_CASE("a corrupted lambda value breaks TB3") {
  const int n = 2;
  auto d = lambda_bar_data(n);
  const Gen inv1[] = {gen_I(1)};
  const Endo i1 = aut_of(inv1, n);
  const Endo c = tok(gen_C(1, 3), n);
  const auto orig = d.lambda;
  d.lambda = [=](const Endo& a, const IntVec& z) {
    const Endo v = orig(a, z);
    return equals(a, i1) && z == unit_vector(n, 0) ? compose(v, c) : v;
  };
  const CheckReport r = tb_check(d, 0, 0x5EED, true);
  bool tb3_failed = false;
  for (const CheckCase& cc : r.cases) {
    if (!cc.pass) {
      CHECK(cc.check == "TB3");
      CHECK_FALSE(cc.witness.empty());
      tb3_failed = true;
    }
  }
  CHECK(tb3_failed);
}

TEST_CASE("tb_check is deterministic") {
  const auto d = lambda_bar_data(2);
  const CheckReport a = tb_check(d, 20, 99, false), b = tb_check(d, 20, 99, false);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].id == b.cases[i].id);
    CHECK(a.cases[i].pass == b.cases[i].pass);
  }
}

TEST_CASE("random samplers stay in their alphabets") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng = Rng::for_sample(5, i);
    CHECK(random_aut(rng, 3, 5).factors().has_value());
    CHECK(classify(random_kernel(rng, 3, 4)).in_KIA);
  }
}
