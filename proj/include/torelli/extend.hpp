#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "torelli/check.hpp"
#include "torelli/glsemi.hpp"
#include "torelli/rng.hpp"
#include "torelli/symgen.hpp"

namespace torelli {

// (k, q) with k in the kernel (an automorphism of F_{n,1}) and q = (z, a) in
// Z^n x| Aut(F_n).
struct ExtElement {
  Endo k;
  QElement q;
};

// The extension of Z^n x| Aut(F_n) by the kernel built from lambda_bar:
//   (k1, q1)(k2, q2) = (k1 . phi(q1)(k2) . gamma(q1, q2), q1 q2)
//   phi((z, a))(k) = z(a(k)),  gamma((z1, a1), (z2, a2)) = z1(lambda(a1, z2))
class ExtGroup {
 public:
  using GammaFn = std::function<Endo(const QElement&, const QElement&)>;

  explicit ExtGroup(int n);

  int n() const { return n_; }
  ExtElement identity() const;
  ExtElement kernel(const Endo& k) const;
  ExtElement quotient(const QElement& q) const;

  Endo phi(const QElement& q, const Endo& k) const;
  Endo phi_inv(const QElement& q, const Endo& k) const;
  Endo gamma(const QElement& q1, const QElement& q2) const;
  // Replaces gamma; used to show that the checks detect a broken cocycle.
  void set_gamma(GammaFn g) { gamma_ = std::move(g); }

  ExtElement mul(const ExtElement& g1, const ExtElement& g2) const;
  ExtElement inv(const ExtElement& g) const;
  bool equal(const ExtElement& g1, const ExtElement& g2) const;

  ExtElement sample(Rng& rng) const;
  QElement sample_q(Rng& rng) const;
  Endo sample_k(Rng& rng) const;

 private:
  int n_;
  GammaFn gamma_;
};

// Phi(k, (z, a)) = k . iota2(z) . iota1(a) in Aut(F_{n,1}).
Endo ext_forward(const ExtElement& g);

// Preimage of a Jensen-Wahl generator (SC^{+-1} token).
ExtElement phi_inverse_gen(const ExtGroup& ext, const Gen& c);
// Ordered product of phi_inverse_gen over the tokens.
ExtElement phi_inverse_word(const ExtGroup& ext, std::span<const Gen> w);

// Both cocycle identities on sampled pairs and triples:
//   extend1: phi(q1)(phi(q2)(k)) = gamma(q1,q2) . phi(q1 q2)(k) . gamma(q1,q2)^-1
//   extend2: gamma(q1,q2) . gamma(q1 q2,q3) = phi(q1)(gamma(q2,q3)) . gamma(q1,q2 q3)
// With generator_triples, extend2 also runs over all triples of quotient
// generators (e_i, id) and (0, s), s in S_A.
CheckReport cocycle_check(const ExtGroup& ext, int samples, std::uint64_t seed, bool generator_triples = false);
// Associativity, two-sided inverses, kernel normality and the forward map
// being a homomorphism, on sampled elements.
CheckReport group_check(const ExtGroup& ext, int samples, std::uint64_t seed);

std::string to_string(const ExtElement& g);

// The triple group Z^dk x Z^db x Z^da with
//   (k, b, a)(k', b', a') = (k + k' + lambda(a, b'), b + b', a + a').
struct Triple {
  IntVec k, b, a;
  friend bool operator==(const Triple&, const Triple&) = default;
};

class SpliceGroup {
 public:
  using Lambda = std::function<IntVec(const IntVec& a, const IntVec& b)>;
  SpliceGroup(int da, int db, int dk, Lambda lambda);

  Triple identity() const;
  Triple mul(const Triple& g, const Triple& h) const;
  Triple inv(const Triple& g) const;
  Triple iota1(const IntVec& a) const;
  Triple iota2(const IntVec& b) const;
  Triple commutator(const Triple& g, const Triple& h) const;
  Triple sample(Rng& rng) const;

  int da() const { return da_; }
  int db() const { return db_; }
  int dk() const { return dk_; }

 private:
  int da_, db_, dk_;
  Lambda lambda_;
};

// Bilinear map from its values on basis pairs: table[i][j] = lambda(e_i, e_j).
SpliceGroup::Lambda bilinear_from_table(std::vector<std::vector<IntVec>> table);

// Builds the triple group and samples associativity; throws when lambda is
// not bilinear enough for the product to be associative.
SpliceGroup splice_direct(int da, int db, int dk, SpliceGroup::Lambda lambda, int samples = 100,
                          std::uint64_t seed = 0x5EED);

}  // namespace torelli
