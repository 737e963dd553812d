#include "torelli/twisted.hpp"

#include <sstream>

#include "torelli/lpres.hpp"

namespace torelli {

namespace {

int rank_of(const IntVec& z) { return static_cast<int>(z.size()); }

void require_SZ(const Gen& g, int n, const char* what) {
  if (!in_alphabet(Alphabet::SZ, n, g)) throw Error(std::string(what) + ": " + to_string(g, sym_basis(n)) + " is not in SZ^{+-1}");
}

void require_SA(const Gen& g, int n, const char* what) {
  if (!in_alphabet(Alphabet::SA, n, g)) throw Error(std::string(what) + ": " + to_string(g, sym_basis(n)) + " is not in SA^{+-1}");
}

}  // namespace

std::string show_vec(const IntVec& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? "," : "") << z[i];
  os << ')';
  return os.str();
}

std::string show_endo(const Endo& f) {
  if (f.factors()) return to_string(*f.factors(), f.basis());
  std::ostringstream os;
  for (int g = 1; g <= f.basis().rank(); ++g) {
    os << (g > 1 ? ", " : "") << letter_name(f.basis(), g) << " -> " << to_string(f.image(g));
  }
  return os.str();
}

Endo random_aut(Rng& rng, int n, int max_len) {
  static thread_local int cached_n = 0;
  static thread_local GenSeq sa;
  if (cached_n != n) {
    sa = alphabet_pm(Alphabet::SA, n);
    cached_n = n;
  }
  GenSeq w(static_cast<std::size_t>(rng.range(0, max_len)));
  for (Gen& g : w) g = rng.pick(sa);
  return aut_of(w, n);
}

Endo random_kernel(Rng& rng, int n, int max_len) {
  static thread_local int cached_n = 0;
  static thread_local GenSeq sk;
  if (cached_n != n) {
    sk = alphabet_pm(Alphabet::SK, n);
    cached_n = n;
  }
  GenSeq w(static_cast<std::size_t>(rng.range(0, max_len)));
  for (Gen& g : w) g = rng.pick(sk);
  return interpret(w, n);
}

GenSeq zword(const IntVec& z) {
  const Letter y = sym_basis(rank_of(z)).y();
  GenSeq w;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Gen g = gen_M(static_cast<Letter>(i + 1), z[i] > 0 ? y : -y);
    for (std::int64_t e = 0; e < (z[i] < 0 ? -z[i] : z[i]); ++e) w.push_back(g);
  }
  return w;
}

IntVec zvec(std::span<const Gen> w, int n) {
  IntVec z(static_cast<std::size_t>(n), 0);
  for (const Gen& g : w) {
    require_SZ(g, n, "zvec");
    z[static_cast<std::size_t>(g.p0 - 1)] += sign_of(g.p1);
  }
  return z;
}

Endo iota1(const Endo& a) {
  if (a.basis().k != 0) throw Error("iota1: expected an automorphism of F_n");
  return extend_basis(a, sym_basis(a.basis().n));
}

Endo iota2(const IntVec& z) { return interpret(zword(z), rank_of(z)); }

Endo aut_of(std::span<const Gen> w, int n) {
  for (const Gen& g : w) require_SA(g, n, "aut_of");
  return interpret_gens(w, Basis{n, 0});
}

IntVec act_AB(const Endo& a, const IntVec& z) { return aut_act_on_Zn(a, z); }

Endo kernel_inv(const Endo& k) { return invert_factored(k); }

Endo act_AK(const Endo& a, const Endo& k) {
  const Endo i = iota1(a);
  return compose(compose(i, k), invert_factored(i));
}

Endo act_BK(const IntVec& z, const Endo& k) {
  return compose(compose(iota2(z), k), iota2(neg(z)));
}

Endo lambda_bar(const Endo& a, const IntVec& z) {
  const Endo i = iota1(a);
  const Endo lhs = compose(compose(i, iota2(z)), invert_factored(i));
  return compose(lhs, iota2(neg(act_AB(a, z))));
}

Endo lambda_bar(std::span<const Gen> f, std::span<const Gen> z, int n) { return lambda_bar(aut_of(f, n), zvec(z, n)); }

SymWord lambda_gen(const Gen& f, const Gen& z, int n) {
  require_SA(f, n, "lambda_gen");
  require_SZ(z, n, "lambda_gen");
  const Letter y = sym_basis(n).y();
  const int i = z.p0;
  const int eps = sign_of(z.p1);
  GenSeq out;
  if (f.kind == GenKind::I) {
    if (f.p0 == i) out.push_back(gen_C(i, eps * y));
  } else if (f.kind == GenKind::M) {
    const int a = gen_of(f.p0), al = sign_of(f.p0);
    const int b = gen_of(f.p1), be = sign_of(f.p1);
    if (al == 1 && i == a) {
      out.push_back(gen_Mc(a, -eps * y, -be * b));
    } else if (al == 1 && be == 1 && i == b) {
      out.push_back(gen_Mc(a, eps * y, -b));
    } else if (al == -1 && be == 1 && i == b) {
      const GenSeq base = {gen_Mc(-a, y, -b), gen_C(a, -y)};
      out = eps > 0 ? base : inverse_seq(base);
    } else if (al == -1 && be == -1 && i == b) {
      out.push_back(gen_C(a, eps * y));
    }
  }
  return SymWord::from_tokens(Alphabet::SK, n, out);
}

SymWord tlambda1(const Gen& f, std::span<const Gen> w, int n) {
  require_SA(f, n, "tlambda1");
  for (const Gen& g : w) require_SZ(g, n, "tlambda1");
  if (w.empty()) return SymWord(Alphabet::SK, n);
  const Gen one[] = {f};
  const Endo a = aut_of(one, n);
  // lambda1(f, s w') = lambda1(f, s) . (f.s)(lambda1(f, w')), unrolled from the right.
  SymWord acc = lambda_gen(f, w.back(), n);
  for (std::size_t j = w.size() - 1; j-- > 0;) {
    const Gen s[] = {w[j]};
    const GenSeq shift = zword(act_AB(a, zvec(s, n)));
    acc = sym_mul(lambda_gen(f, w[j], n), phi_word(shift, acc));
  }
  return acc;
}

SymWord tlambda2(std::span<const Gen> w, const IntVec& z, int n) {
  if (rank_of(z) != n) throw Error("tlambda2: vector length mismatch");
  for (const Gen& g : w) require_SA(g, n, "tlambda2");
  if (w.empty()) return SymWord(Alphabet::SK, n);
  if (w.size() == 1) return tlambda1(w[0], zword(z), n);
  // lambda2(s w', z) = s(lambda2(w', z)) . lambda2(s, w'.z)
  const std::span<const Gen> rest = w.subspan(1);
  const SymWord head = phi_word(w.first(1), tlambda2(rest, z, n));
  return sym_mul(head, tlambda1(w[0], zword(act_AB(aut_of(rest, n), z)), n));
}

TwistedBilinearData<Endo, IntVec, Endo> lambda_bar_data(int n) {
  TwistedBilinearData<Endo, IntVec, Endo> d;
  d.mul_A = [](const Endo& a1, const Endo& a2) { return compose(a1, a2); };
  d.mul_B = [](const IntVec& b1, const IntVec& b2) { return add(b1, b2); };
  d.mul_K = [](const Endo& k1, const Endo& k2) { return compose(k1, k2); };
  d.inv_K = kernel_inv;
  d.eq_K = [](const Endo& k1, const Endo& k2) { return equals(k1, k2); };
  d.act_AB = act_AB;
  d.act_AK = act_AK;
  d.act_BK = act_BK;
  d.lambda = [](const Endo& a, const IntVec& z) { return lambda_bar(a, z); };

  d.sample_A = [n](Rng& rng) { return random_aut(rng, n, 6); };
  d.sample_B = [n](Rng& rng) {
    IntVec z(static_cast<std::size_t>(n));
    for (auto& v : z) v = rng.range(-3, 3);
    return z;
  };
  d.sample_K = [n](Rng& rng) { return random_kernel(rng, n, 3); };
  for (const Gen& g : alphabet(Alphabet::SA, n)) {
    const Gen one[] = {g};
    d.gens_A.push_back(aut_of(one, n));
  }
  for (int i = 1; i <= n; ++i) d.gens_B.push_back(unit_vector(n, i - 1));
  for (const Gen& g : alphabet(Alphabet::SK, n)) {
    const Gen one[] = {g};
    d.gens_K.push_back(interpret(one, n));
  }
  d.show_A = show_endo;
  d.show_B = show_vec;
  d.show_K = show_endo;
  return d;
}

TwistedBilinearData<std::int64_t, std::int64_t, std::int64_t> integer_bilinear_data() {
  using I = std::int64_t;
  TwistedBilinearData<I, I, I> d;
  d.mul_A = d.mul_B = d.mul_K = [](const I& u, const I& v) { return u + v; };
  d.inv_K = [](const I& k) { return -k; };
  d.eq_K = [](const I& u, const I& v) { return u == v; };
  d.act_AB = [](const I&, const I& b) { return b; };
  d.act_AK = [](const I&, const I& k) { return k; };
  d.act_BK = [](const I&, const I& k) { return k; };
  d.lambda = [](const I& a, const I& b) { return a * b; };
  d.sample_A = d.sample_B = d.sample_K = [](Rng& rng) { return rng.range(-5, 5); };
  d.gens_A = d.gens_B = d.gens_K = {1};
  d.show_A = d.show_B = d.show_K = [](const I& v) { return std::to_string(v); };
  return d;
}

}  // namespace torelli
