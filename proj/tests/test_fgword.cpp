#include <doctest.h>

#include "torelli/fgword.hpp"
#include "torelli/rng.hpp"

using namespace torelli;

namespace {

const Basis B{3, 2};  // x1..x3 = 1..3, y1 = 4, y2 = 5

Word w(std::initializer_list<Letter> ls) { return Word::from_letters(B, ls); }

Word random_word(Rng& rng, int max_len) {
  std::vector<Letter> ls;
  const int len = static_cast<int>(rng.range(0, max_len));
  for (int i = 0; i < len; ++i) {
    const Letter l = static_cast<Letter>(rng.range(1, B.rank()));
    ls.push_back(rng.below(2) ? l : -l);
  }
  return Word::from_letters(B, ls);
}

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(w({1, -1}).empty());
  CHECK(w({4, 1, -1, -4}).empty());
  const Word r = w({1, 2, 2});
  CHECK(std::vector<Letter>(r.letters().begin(), r.letters().end()) == std::vector<Letter>{1, 2, 2});
  CHECK(reduce(B, r.letters()) == r);
}

TEST_CASE("letters outside the basis are rejected") {
  CHECK_THROWS_AS(w({6}), Error);
  CHECK_THROWS_AS(w({0}), Error);
}

TEST_CASE("mul and inv") {
  CHECK(mul(w({1}), w({-1})).empty());
  CHECK(inv(w({1, 4})) == w({-4, -1}));
  CHECK(mul(w({1, 2}), w({-2, 3})) == w({1, 3}));
  CHECK(power(w({1, 2}), 2) == w({1, 2, 1, 2}));
  CHECK(power(w({1, 2}), -1) == w({-2, -1}));
  CHECK(power(w({1}), 0).empty());
}

TEST_CASE("commutator unfolds as u v u^-1 v^-1") {
  CHECK(commutator(w({1}), w({1})).empty());
  CHECK(commutator(w({1}), Word(B)).empty());
  CHECK(commutator(w({4}), w({2})) == w({4, 2, -4, -2}));
}

TEST_CASE("conjugacy") {
  CHECK(is_conjugate(w({1, 2}), w({2, 1})));
  CHECK_FALSE(is_conjugate(w({1}), w({2})));
  CHECK(is_conjugate(w({4}), w({1, 4, -1})));
  CHECK_FALSE(is_conjugate(w({1, 1}), w({1})));
  const CyclicDecomposition d = cyclic_reduce(w({2, 1, 3, -2}));
  CHECK(d.core == w({1, 3}));
  CHECK(mul({d.conjugator, d.core, inv(d.conjugator)}) == w({2, 1, 3, -2}));
}

TEST_CASE("abelianize") {
  CHECK(abelianize(Word(B)) == std::vector<std::int64_t>(5, 0));
  CHECK(abelianize(w({1, 2, 1})) == std::vector<std::int64_t>{2, 1, 0, 0, 0});
  CHECK(abelianize(w({-5, 3, -5})) == std::vector<std::int64_t>{0, 0, 1, 0, -2});
}

TEST_CASE("text round trip") {
  const Word v = w({1, -4, 5, 5});
  CHECK(to_string(v) == "x1 y1^-1 y2 y2");
  CHECK(parse_word(B, to_string(v)) == v);
  CHECK(to_string(Word(B)) == "1");
  CHECK(parse_word(B, "1").empty());
  const Basis b1{2, 1};
  CHECK(parse_letter(b1, "y") == 3);
  CHECK(parse_letter(b1, "y1") == 3);
  CHECK(letter_name(b1, -3) == "y^-1");
  CHECK_THROWS_AS(parse_word(B, "z1"), Error);
}

TEST_CASE("group laws on random words") {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng = Rng::for_sample(0xF00D, i);
    const Word u = random_word(rng, 8), v = random_word(rng, 8), t = random_word(rng, 8);
    REQUIRE(mul(mul(u, v), t) == mul(u, mul(v, t)));
    REQUIRE(inv(inv(u)) == u);
    REQUIRE(mul(u, inv(u)).empty());
    REQUIRE(inv(mul(u, v)) == mul(inv(v), inv(u)));
    // Abelianization is a homomorphism and kills commutators.
    auto au = abelianize(u), av = abelianize(v), auv = abelianize(mul(u, v));
    for (std::size_t j = 0; j < au.size(); ++j) REQUIRE(auv[j] == au[j] + av[j]);
    REQUIRE(abelianize(commutator(u, v)) == std::vector<std::int64_t>(5, 0));
    REQUIRE(is_conjugate(mul({t, u, inv(t)}), u));
  }
}
