#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/fgword.hpp"
#include "torelli/intmatrix.hpp"

namespace torelli {

// Named generator tokens, in the text notation
//   M[z,v]      z -> v z when z is positive, z -> z v^-1 when z is an inverse letter
//   C[u,w]      u -> w u w^-1
//   Mc[a,p,q]   M[a,[p,q]]
//   P[a,b]      swap x_a and x_b
//   I[a]        x_a -> x_a^-1
// Every token has an inverse token: M[z,v^-1], C[u,w^-1], Mc[a,q,p]; P and I
// are involutions. C tokens are normalized so that u is a positive letter.
enum class GenKind : std::uint8_t { M, C, Mc, P, I };

struct Gen {
  GenKind kind = GenKind::M;
  Letter p0 = 0;
  Letter p1 = 0;
  Letter p2 = 0;

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct GenHash {
  std::size_t operator()(const Gen& g) const noexcept;
};
struct GenSeqHash {
  std::size_t operator()(const std::vector<Gen>& s) const noexcept;
};

Gen gen_M(Letter z, Letter v);
Gen gen_C(Letter u, Letter w);
Gen gen_Mc(Letter a, Letter p, Letter q);
Gen gen_P(int a, int b);
Gen gen_I(int a);

Gen inverse(const Gen& g);
// Throws if the token does not name an automorphism of F(basis).
void check_gen(const Gen& g, const Basis& basis);
std::string to_string(const Gen& g, const Basis& basis);
Gen parse_gen(const Basis& basis, std::string_view text);

using GenSeq = std::vector<Gen>;

GenSeq reduce_gens(std::span<const Gen> seq);
GenSeq inverse_seq(std::span<const Gen> seq);
std::string to_string(std::span<const Gen> seq, const Basis& basis);
// "*"-separated tokens; "1" or "empty" is the empty sequence. No reduction.
GenSeq parse_gen_seq(const Basis& basis, std::string_view text);

class Endo {
 public:
  Endo() = default;
  Endo(Basis basis, std::vector<Word> images, std::optional<GenSeq> factors = std::nullopt);
  static Endo identity(Basis basis);

  const Basis& basis() const { return basis_; }
  const Word& image(int gen) const { return images_[static_cast<std::size_t>(gen - 1)]; }
  const std::vector<Word>& images() const { return images_; }
  const std::optional<GenSeq>& factors() const { return factors_; }
  bool is_identity() const;

  Word apply(const Word& w) const;

 private:
  Basis basis_;
  std::vector<Word> images_;
  std::optional<GenSeq> factors_;
};

Endo gen_endo(const Gen& g, const Basis& basis);
// General transvection z^alpha -> v z^alpha; v must avoid z. Factored into
// letter transvections unless v is a single letter or a letter commutator.
Endo gen_transvection(const Basis& basis, int z, int alpha, const Word& v);
Endo gen_conjugation(const Basis& basis, Letter u, Letter w);
Endo gen_swap(const Basis& basis, int a, int b);
Endo gen_inversion(const Basis& basis, int a);

Word apply(const Endo& f, const Word& w);
Endo compose(const Endo& f, const Endo& g);  // f after g
bool equals(const Endo& f, const Endo& g);
Endo invert_factored(const Endo& f);
// Product of the tokens read left to right as function composition.
Endo interpret_gens(std::span<const Gen> seq, const Basis& basis);
// Same basis images on a larger basis whose extra generators are fixed.
Endo extend_basis(const Endo& f, const Basis& larger);

// Column j is the abelianized image of generator j+1.
IntMatrix abel_matrix(const Endo& f);

struct Classification {
  bool in_A = false;     // each y_i is sent to a conjugate of itself
  bool in_IA = false;    // trivial on the abelianization
  bool in_BKer = false;  // in A, and killing the y's gives the identity on F_n
  bool in_KIA = false;
};
Classification classify(const Endo& f);

// Pair index of a < b (0-based) in the lexicographic basis of Lambda^2 Z^r.
int wedge_index(int r, int a, int b);
std::pair<int, int> wedge_pair(int r, int index);
// Second-order Magnus coefficients; requires w in the commutator subgroup.
IntVec lambda2_projection(const Word& w);
IntVec wedge(const IntVec& u, const IntVec& v);
// Row g-1 is tau(f)([g]).
IntMatrix johnson(const Endo& f);
int johnson_rank(std::span<const Endo> fs);

// The finite generating set of BKerIA_{n,k} whose Johnson images are independent.
GenSeq johnson_generating_set(const Basis& basis);
std::int64_t johnson_rank_formula(int n, int k);

}  // namespace torelli
