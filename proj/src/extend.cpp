#include "torelli/extend.hpp"

#include "torelli/twisted.hpp"

namespace torelli {

ExtGroup::ExtGroup(int n) : n_(n) {
  if (n < 2) throw Error("ExtGroup: n must be at least 2");
  gamma_ = [](const QElement& q1, const QElement& q2) { return act_BK(q1.z, lambda_bar(q1.a, q2.z)); };
}

ExtElement ExtGroup::identity() const { return {Endo::identity(sym_basis(n_)), q_identity(n_)}; }

ExtElement ExtGroup::kernel(const Endo& k) const {
  require_same_basis(k.basis(), sym_basis(n_), "ExtGroup::kernel");
  return {k, q_identity(n_)};
}

ExtElement ExtGroup::quotient(const QElement& q) const { return {Endo::identity(sym_basis(n_)), q}; }

Endo ExtGroup::phi(const QElement& q, const Endo& k) const { return act_BK(q.z, act_AK(q.a, k)); }

Endo ExtGroup::phi_inv(const QElement& q, const Endo& k) const {
  return act_AK(invert_factored(q.a), act_BK(neg(q.z), k));
}

Endo ExtGroup::gamma(const QElement& q1, const QElement& q2) const { return gamma_(q1, q2); }

ExtElement ExtGroup::mul(const ExtElement& g1, const ExtElement& g2) const {
  Endo k = compose(compose(g1.k, phi(g1.q, g2.k)), gamma(g1.q, g2.q));
  return {std::move(k), semi_mul(g1.q, g2.q)};
}

ExtElement ExtGroup::inv(const ExtElement& g) const {
  QElement qi = semi_inv(g.q);
  const Endo inner = compose(kernel_inv(g.k), kernel_inv(gamma(g.q, qi)));
  return {phi_inv(g.q, inner), std::move(qi)};
}

bool ExtGroup::equal(const ExtElement& g1, const ExtElement& g2) const {
  return equals(g1.k, g2.k) && q_equals(g1.q, g2.q);
}

QElement ExtGroup::sample_q(Rng& rng) const {
  IntVec z(static_cast<std::size_t>(n_));
  for (auto& v : z) v = rng.range(-3, 3);
  return {std::move(z), random_aut(rng, n_, 6)};
}

Endo ExtGroup::sample_k(Rng& rng) const { return random_kernel(rng, n_, 3); }

ExtElement ExtGroup::sample(Rng& rng) const {
  Endo k = sample_k(rng);
  return {std::move(k), sample_q(rng)};
}

Endo ext_forward(const ExtElement& g) { return compose(compose(g.k, iota2(g.q.z)), iota1(g.q.a)); }

ExtElement phi_inverse_gen(const ExtGroup& ext, const Gen& c) {
  const int n = ext.n();
  const Basis b = sym_basis(n);
  if (!in_alphabet(Alphabet::SC, n, c) && !in_alphabet(Alphabet::SC, n, inverse(c))) {
    throw Error("phi_inverse_gen: " + to_string(c, b) + " is not a Jensen-Wahl generator");
  }
  if (in_alphabet(Alphabet::SA, n, c)) {
    const Gen one[] = {c};
    return ext.quotient({IntVec(static_cast<std::size_t>(n), 0), aut_of(one, n)});
  }
  if (c.kind == GenKind::C) {
    const Gen one[] = {c};
    return ext.kernel(interpret(one, n));
  }
  // M[x_a^alpha, y^eps]
  const int a = gen_of(c.p0);
  const int eps = sign_of(c.p1);
  ExtElement base = ext.quotient({unit_vector(n, a - 1), Endo::identity(Basis{n, 0})});
  if (c.p0 < 0) {
    // M_{x^-1,y} = C_{x,y} M_{x,y}^-1
    const Gen cxy[] = {gen_C(a, b.y())};
    base = ext.mul(ext.kernel(interpret(cxy, n)), ext.inv(base));
  }
  return eps > 0 ? base : ext.inv(base);
}

ExtElement phi_inverse_word(const ExtGroup& ext, std::span<const Gen> w) {
  ExtElement acc = ext.identity();
  for (const Gen& c : w) acc = ext.mul(acc, phi_inverse_gen(ext, c));
  return acc;
}

std::string to_string(const ExtElement& g) {
  return "(" + show_endo(g.k) + ", (" + show_vec(g.q.z) + ", " + show_endo(g.q.a) + "))";
}

CheckReport cocycle_check(const ExtGroup& ext, int samples, std::uint64_t seed, bool generator_triples) {
  CheckReport r;
  auto extend1 = [&](const QElement& q1, const QElement& q2, const Endo& k) {
    const Endo lhs = ext.phi(q1, ext.phi(q2, k));
    const Endo g = ext.gamma(q1, q2);
    const Endo rhs = compose(compose(g, ext.phi(semi_mul(q1, q2), k)), kernel_inv(g));
    return equals(lhs, rhs);
  };
  auto extend2 = [&](const QElement& q1, const QElement& q2, const QElement& q3) {
    const Endo lhs = compose(ext.gamma(q1, q2), ext.gamma(semi_mul(q1, q2), q3));
    const Endo rhs = compose(ext.phi(q1, ext.gamma(q2, q3)), ext.gamma(q1, semi_mul(q2, q3)));
    return equals(lhs, rhs);
  };
  auto show_q = [](const QElement& q) { return "(" + show_vec(q.z) + ", " + show_endo(q.a) + ")"; };
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
    const QElement q1 = ext.sample_q(rng);
    const QElement q2 = ext.sample_q(rng);
    const QElement q3 = ext.sample_q(rng);
    const Endo k = ext.sample_k(rng);
    const std::string sid = "sample " + std::to_string(i);
    const bool ok1 = extend1(q1, q2, k);
    r.add("extend1", sid, ok1, "q1=" + show_q(q1) + " q2=" + show_q(q2) + " k=" + show_endo(k));
    const bool ok2 = extend2(q1, q2, q3);
    r.add("extend2", sid, ok2, "q1=" + show_q(q1) + " q2=" + show_q(q2) + " q3=" + show_q(q3));
  }
  if (generator_triples) {
    const int n = ext.n();
    std::vector<QElement> gens;
    for (int i = 0; i < n; ++i) gens.push_back({unit_vector(n, i), Endo::identity(Basis{n, 0})});
    for (const Gen& s : alphabet(Alphabet::SA, n)) {
      const Gen one[] = {s};
      gens.push_back({IntVec(static_cast<std::size_t>(n), 0), aut_of(one, n)});
    }
    for (const QElement& q1 : gens)
      for (const QElement& q2 : gens)
        for (const QElement& q3 : gens) {
          const std::string id = show_q(q1) + " " + show_q(q2) + " " + show_q(q3);
          r.add("extend2", "gen " + id, extend2(q1, q2, q3), id);
        }
  }
  return r;
}

CheckReport group_check(const ExtGroup& ext, int samples, std::uint64_t seed) {
  CheckReport r;
  const ExtElement e = ext.identity();
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
    const ExtElement g1 = ext.sample(rng);
    const ExtElement g2 = ext.sample(rng);
    const ExtElement g3 = ext.sample(rng);
    const std::string sid = "sample " + std::to_string(i);

    const bool assoc = ext.equal(ext.mul(ext.mul(g1, g2), g3), ext.mul(g1, ext.mul(g2, g3)));
    r.add("associativity", sid, assoc, to_string(g1) + " " + to_string(g2) + " " + to_string(g3));

    const ExtElement gi = ext.inv(g1);
    const bool inverse = ext.equal(ext.mul(g1, gi), e) && ext.equal(ext.mul(gi, g1), e);
    r.add("inverse", sid, inverse, to_string(g1));

    const ExtElement lift = ext.quotient(g2.q);
    const ExtElement conj = ext.mul(ext.mul(lift, ext.kernel(g3.k)), ext.inv(lift));
    r.add("normality", sid, q_equals(conj.q, q_identity(ext.n())), to_string(lift) + " k=" + show_endo(g3.k));

    const bool hom = equals(ext_forward(ext.mul(g1, g2)), compose(ext_forward(g1), ext_forward(g2)));
    r.add("forward-hom", sid, hom, to_string(g1) + " " + to_string(g2));
  }
  return r;
}

SpliceGroup::SpliceGroup(int da, int db, int dk, Lambda lambda)
    : da_(da), db_(db), dk_(dk), lambda_(std::move(lambda)) {
  if (da < 0 || db < 0 || dk < 0) throw Error("SpliceGroup: negative rank");
}

Triple SpliceGroup::identity() const {
  return {IntVec(static_cast<std::size_t>(dk_), 0), IntVec(static_cast<std::size_t>(db_), 0),
          IntVec(static_cast<std::size_t>(da_), 0)};
}

Triple SpliceGroup::mul(const Triple& g, const Triple& h) const {
  IntVec l = lambda_(g.a, h.b);
  if (static_cast<int>(l.size()) != dk_) throw Error("SpliceGroup: lambda has the wrong rank");
  return {add(add(g.k, h.k), l), add(g.b, h.b), add(g.a, h.a)};
}

Triple SpliceGroup::inv(const Triple& g) const { return {add(neg(g.k), lambda_(g.a, g.b)), neg(g.b), neg(g.a)}; }

Triple SpliceGroup::iota1(const IntVec& a) const {
  Triple t = identity();
  t.a = a;
  return t;
}

Triple SpliceGroup::iota2(const IntVec& b) const {
  Triple t = identity();
  t.b = b;
  return t;
}

Triple SpliceGroup::commutator(const Triple& g, const Triple& h) const {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

Triple SpliceGroup::sample(Rng& rng) const {
  Triple t = identity();
  for (IntVec* v : {&t.k, &t.b, &t.a})
    for (auto& x : *v) x = rng.range(-5, 5);
  return t;
}

SpliceGroup::Lambda bilinear_from_table(std::vector<std::vector<IntVec>> table) {
  return [table = std::move(table)](const IntVec& a, const IntVec& b) {
    IntVec out;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        const IntVec& v = table.at(i).at(j);
        if (out.empty()) out.assign(v.size(), 0);
        for (std::size_t t = 0; t < v.size(); ++t) out[t] += a[i] * b[j] * v[t];
      }
    if (out.empty() && !table.empty() && !table[0].empty()) out.assign(table[0][0].size(), 0);
    return out;
  };
}

SpliceGroup splice_direct(int da, int db, int dk, SpliceGroup::Lambda lambda, int samples, std::uint64_t seed) {
  SpliceGroup g(da, db, dk, std::move(lambda));
  for (int i = 0; i < samples; ++i) {
    Rng rng = Rng::for_sample(seed, static_cast<std::uint64_t>(i));
    const Triple a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
    if (!(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)))) {
      throw Error("splice_direct: product is not associative on sample " + std::to_string(i) +
                  "; lambda is not bilinear");
    }
  }
  return g;
}

}  // namespace torelli
