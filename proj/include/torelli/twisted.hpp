#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "torelli/check.hpp"
#include "torelli/glsemi.hpp"
#include "torelli/rng.hpp"
#include "torelli/symgen.hpp"

namespace torelli {

// Z^n and Aut(F_n) inside Aut(F_{n,1}).
// Canonical S_Z-word M[x_1,y]^{z_1} ... M[x_n,y]^{z_n}.
GenSeq zword(const IntVec& z);
// Abelian image of a word over S_Z^{+-1}.
IntVec zvec(std::span<const Gen> w, int n);
Endo iota1(const Endo& a);  // a acts on F_n; y is fixed
Endo iota2(const IntVec& z);
// Aut(F_n) element named by an S_A word, carrying its factorization.
Endo aut_of(std::span<const Gen> w, int n);

// The three actions of the Birman sequence: Aut(F_n) on Z^n, and conjugation
// by iota1(a) and iota2(z) on the kernel.
IntVec act_AB(const Endo& a, const IntVec& z);
Endo act_AK(const Endo& a, const Endo& k);
Endo act_BK(const IntVec& z, const Endo& k);
Endo kernel_inv(const Endo& k);

// iota1(a) iota2(z) iota1(a)^-1 iota2(a.z)^-1
Endo lambda_bar(const Endo& a, const IntVec& z);
Endo lambda_bar(std::span<const Gen> f, std::span<const Gen> z, int n);

// Values of lambda on generators f in S_A^{+-1}, z in S_Z^{+-1}.
SymWord lambda_gen(const Gen& f, const Gen& z, int n);
// Recursions over unreduced words; the actions are realized by phi_word.
SymWord tlambda1(const Gen& f, std::span<const Gen> w, int n);
SymWord tlambda2(std::span<const Gen> w, const IntVec& z, int n);

// A map lambda: A x B -> K together with the actions it is twisted by.
// Group elements are values; samplers draw from a fixed Rng.
template <class A, class B, class K>
struct TwistedBilinearData {
  std::function<A(const A&, const A&)> mul_A;
  std::function<B(const B&, const B&)> mul_B;
  std::function<K(const K&, const K&)> mul_K;
  std::function<K(const K&)> inv_K;
  std::function<bool(const K&, const K&)> eq_K;
  std::function<B(const A&, const B&)> act_AB;
  std::function<K(const A&, const K&)> act_AK;
  std::function<K(const B&, const K&)> act_BK;
  std::function<K(const A&, const B&)> lambda;

  std::function<A(Rng&)> sample_A;
  std::function<B(Rng&)> sample_B;
  std::function<K(Rng&)> sample_K;
  // Generating sets used by the exhaustive TB3 pass.
  std::vector<A> gens_A;
  std::vector<B> gens_B;
  std::vector<K> gens_K;

  std::function<std::string(const A&)> show_A;
  std::function<std::string(const B&)> show_B;
  std::function<std::string(const K&)> show_K;
};

// TB1: lambda(a, b1 b2) = lambda(a, b1) . (a.b1)(lambda(a, b2))
// TB2: lambda(a1 a2, b) = a1(lambda(a2, b)) . lambda(a1, a2.b)
// TB3: lambda(a, b) . (a.b)(a(k)) . lambda(a, b)^-1 = a(b(k))
template <class A, class B, class K>
bool tb1_holds(const TwistedBilinearData<A, B, K>& d, const A& a, const B& b1, const B& b2) {
  const K lhs = d.lambda(a, d.mul_B(b1, b2));
  const K rhs = d.mul_K(d.lambda(a, b1), d.act_BK(d.act_AB(a, b1), d.lambda(a, b2)));
  return d.eq_K(lhs, rhs);
}

template <class A, class B, class K>
bool tb2_holds(const TwistedBilinearData<A, B, K>& d, const A& a1, const A& a2, const B& b) {
  const K lhs = d.lambda(d.mul_A(a1, a2), b);
  const K rhs = d.mul_K(d.act_AK(a1, d.lambda(a2, b)), d.lambda(a1, d.act_AB(a2, b)));
  return d.eq_K(lhs, rhs);
}

template <class A, class B, class K>
bool tb3_holds(const TwistedBilinearData<A, B, K>& d, const A& a, const B& b, const K& k) {
  const K l = d.lambda(a, b);
  const K lhs = d.mul_K(d.mul_K(l, d.act_BK(d.act_AB(a, b), d.act_AK(a, k))), d.inv_K(l));
  const K rhs = d.act_AK(a, d.act_BK(b, k));
  return d.eq_K(lhs, rhs);
}

template <class A, class B, class K>
CheckReport tb_check(const TwistedBilinearData<A, B, K>& d, int samples, std::uint64_t seed, bool exhaustive_tb3) {
  CheckReport r;
  auto record = [&](const char* axiom, std::string id, bool ok, std::string witness) {
    r.add(axiom, std::move(id), ok, std::move(witness));
  };
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
    const A a1 = d.sample_A(rng);
    const A a2 = d.sample_A(rng);
    const B b1 = d.sample_B(rng);
    const B b2 = d.sample_B(rng);
    const K k = d.sample_K(rng);
    const std::string sid = "sample " + std::to_string(i);
    record("TB1", sid, tb1_holds(d, a1, b1, b2),
           "a=" + d.show_A(a1) + " b1=" + d.show_B(b1) + " b2=" + d.show_B(b2));
    record("TB2", sid, tb2_holds(d, a1, a2, b1),
           "a1=" + d.show_A(a1) + " a2=" + d.show_A(a2) + " b=" + d.show_B(b1));
    record("TB3", sid, tb3_holds(d, a1, b1, k),
           "a=" + d.show_A(a1) + " b=" + d.show_B(b1) + " k=" + d.show_K(k));
  }
  if (exhaustive_tb3) {
    for (const A& a : d.gens_A)
      for (const B& b : d.gens_B)
        for (const K& k : d.gens_K) {
          const std::string id = d.show_A(a) + " / " + d.show_B(b) + " / " + d.show_K(k);
          record("TB3", "gen " + id, tb3_holds(d, a, b, k), id);
        }
  }
  return r;
}

// lambda_bar with the Birman-sequence actions at rank n. Samples: A from S_A
// words of length <= 6, B with entries in [-3, 3], K from S_K words of
// length <= 3. Generating sets: S_A, the unit vectors, interpret(S_K).
TwistedBilinearData<Endo, IntVec, Endo> lambda_bar_data(int n);

// A = B = K = Z with trivial actions and lambda(a, b) = a b.
TwistedBilinearData<std::int64_t, std::int64_t, std::int64_t> integer_bilinear_data();

std::string show_vec(const IntVec& z);
// The factorization when present, else the basis images.
std::string show_endo(const Endo& f);

// Random elements: an S_A^{+-1} word on F_n, an S_K^{+-1} word on F_{n,1},
// each of length at most max_len.
Endo random_aut(Rng& rng, int n, int max_len);
Endo random_kernel(Rng& rng, int n, int max_len);

}  // namespace torelli
