#include <algorithm>
#include <chrono>

#include "torelli/extend.hpp"
#include "torelli/lpres.hpp"
#include "torelli/twisted.hpp"
#include "torelli/verikit.hpp"

namespace torelli {

namespace {

using Cases = std::vector<CaseResult>;

CaseResult verdict(std::string id, bool ok, const std::function<std::string()>& witness) {
  return {std::move(id), ok ? CaseStatus::Pass : CaseStatus::Fail, ok ? std::string() : witness()};
}

std::string show(std::span<const Gen> w, int n) { return to_string(w, sym_basis(n)); }
std::string show(const Gen& g, int n) { return to_string(g, sym_basis(n)); }

GenSeq single(const Gen& g) { return {g}; }

GenSeq random_word(Rng& rng, const GenSeq& alphabet, int max_len) {
  GenSeq w(static_cast<std::size_t>(rng.range(0, max_len)));
  for (Gen& g : w) g = rng.pick(alphabet);
  return w;
}

IntVec random_vec(Rng& rng, int n, int bound) {
  IntVec z(static_cast<std::size_t>(n));
  for (auto& v : z) v = rng.range(-bound, bound);
  return z;
}

void require(bool ok, const std::string& why) {
  if (!ok) throw Error("unsupported parameters: " + why);
}

void require_k1(std::string_view suite, const SuiteParams& p) {
  require(p.k == 1, std::string(suite) + " works on F_{n,1}; use k = 1");
}

// Psi(phi(u)(t)) = Psi(t) for every relator u and every t in SK.
Cases phi_fixes(const std::vector<RelationInstance>& rels, int n) {
  const GenSeq sk = alphabet(Alphabet::SK, n);
  return run_cases(rels.size() * sk.size(), [&](std::size_t i) {
    const RelationInstance& r = rels[i / sk.size()];
    const Gen& t = sk[i % sk.size()];
    const GenSeq u = r.relator();
    const SymWord img = phi_word(u, SymWord::from_tokens(Alphabet::SK, n, single(t)));
    const bool ok = equals(interpret(img), interpret(single(t), n));
    return verdict(r.family + " " + r.params + " on " + show(t, n), ok, [&] { return "phi(r)(t) = " + to_string(img); });
  });
}

std::vector<RelationInstance> pairs_as_relators(const GenSeq& gens, int n) {
  std::vector<RelationInstance> out;
  for (const Gen& s : gens) {
    RelationInstance r;
    r.family = "pair";
    r.params = show(s, n);
    r.basis = sym_basis(n);
    r.lhs = {s, inverse(s)};
    out.push_back(std::move(r));
  }
  return out;
}

Cases suite_table1(const SuiteParams& p, std::vector<std::string>& notes) {
  require(p.k >= 1, "table1 needs k >= 1");
  const auto rels = relation_catalog("table1", p.n, p.k);
  std::size_t corrected = 0;
  for (const auto& r : rels) corrected += r.corrected ? 1 : 0;
  if (corrected > 0) notes.push_back(std::to_string(corrected) + " instances use the corrected C[y_d,x_b] row");
  return run_cases(rels.size(), [&](std::size_t i) {
    const RelationInstance& r = rels[i];
    const bool ok = equals(interpret_gens(r.lhs, r.basis), interpret_gens(r.rhs, r.basis));
    return verdict(r.family + " " + r.params, ok, [&] {
      return to_string(r.lhs, r.basis) + " != " + to_string(r.rhs, r.basis);
    });
  });
}

Cases suite_phi_conj(const SuiteParams& p) {
  require_k1("phi-conj", p);
  const int n = p.n;
  const GenSeq sq = alphabet_pm(Alphabet::SQ, n);
  const GenSeq sk = alphabet(Alphabet::SK, n);
  return run_cases(sq.size() * sk.size(), [&](std::size_t i) {
    const Gen& s = sq[i / sk.size()];
    const Gen& t = sk[i % sk.size()];
    const std::vector<std::string> rules = phi_matching_rules(s, t, n);
    const SymWord img = phi_gen(s, t, n);
    const GenSeq conj = {s, t, inverse(s)};
    const bool sem = equals(interpret(img), interpret(conj, n));
    return verdict("phi " + show(s, n) + " " + show(t, n), sem && rules.size() == 1, [&] {
      std::string w = sem ? "" : "phi(s)(t) = " + to_string(img) + " is not s t s^-1; ";
      w += std::to_string(rules.size()) + " matching rules";
      for (const auto& id : rules) w += " " + id;
      return w;
    });
  });
}

Cases suite_phi_inverse(const SuiteParams& p, Alphabet a) {
  require_k1("phi-inverse", p);
  return phi_fixes(pairs_as_relators(alphabet_pm(a, p.n), p.n), p.n);
}

Cases suite_phi_catalog(const SuiteParams& p, std::string_view kind) {
  require_k1("phi", p);
  return phi_fixes(relation_catalog(kind, p.n), p.n);
}

Cases suite_lambda_zrel(const SuiteParams& p) {
  require_k1("lambda-zrel", p);
  const int n = p.n;
  const GenSeq sa = alphabet_pm(Alphabet::SA, n);
  const GenSeq sz = alphabet_pm(Alphabet::SZ, n);
  const auto rz = relation_catalog("zn", n);
  Cases out = run_cases(sa.size() * rz.size(), [&](std::size_t i) {
    const Gen& f = sa[i / rz.size()];
    const RelationInstance& r = rz[i % rz.size()];
    const GenSeq w = r.relator();
    const SymWord l = tlambda1(f, w, n);
    return verdict("lambda1 " + show(f, n) + " " + r.family + " " + r.params, interpret(l).is_identity(),
                   [&] { return "lambda1(f, r) = " + to_string(l); });
  });
  // Table values against the semantic map.
  Cases table = run_cases(sa.size() * sz.size(), [&](std::size_t i) {
    const Gen& f = sa[i / sz.size()];
    const Gen& z = sz[i % sz.size()];
    const SymWord l = lambda_gen(f, z, n);
    const bool ok = equals(interpret(l), lambda_bar(single(f), single(z), n));
    return verdict("table " + show(f, n) + " " + show(z, n), ok, [&] { return "lambda(f,z) = " + to_string(l); });
  });
  out.insert(out.end(), table.begin(), table.end());
  // lambda1 splits over products (the TB1 shape) and ignores inserted R_Z' relators, sampled.
  Cases sampled = run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed, i);
    const Gen f = rng.pick(sa);
    const GenSeq w = random_word(rng, sz, 6);
    const GenSeq w2 = random_word(rng, sz, 6);
    GenSeq ww = w;
    ww.insert(ww.end(), w2.begin(), w2.end());
    const Endo a = aut_of(single(f), n);
    const Endo lhs = interpret(tlambda1(f, ww, n));
    const Endo rhs = compose(interpret(tlambda1(f, w, n)), act_BK(act_AB(a, zvec(w, n)), interpret(tlambda1(f, w2, n))));
    const RelationInstance& r = rz[rng.below(rz.size())];
    const GenSeq rel = r.relator();
    GenSeq inserted = ww;
    inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(rng.below(ww.size() + 1)), rel.begin(), rel.end());
    const bool invariant = equals(interpret(tlambda1(f, inserted, n)), lhs);
    return verdict("split+insert sample " + std::to_string(i), equals(lhs, rhs) && invariant, [&] {
      return "f=" + show(f, n) + " w=" + show(w, n) + " w'=" + show(w2, n) + (invariant ? "" : " (insertion of " + show(rel, n) + ")");
    });
  });
  out.insert(out.end(), sampled.begin(), sampled.end());
  return out;
}

Cases suite_tb3(const SuiteParams& p) {
  require_k1("tb3", p);
  const int n = p.n;
  Cases out;
  append_checks(out, tb_check(lambda_bar_data(n), p.samples, p.seed, true));
  // The same identity through the symbolic maps: lambda(f,s) . (f.s)(f(t)) . lambda(f,s)^-1 = f(s(t)).
  const GenSeq sa = alphabet(Alphabet::SA, n);
  const GenSeq sz = alphabet(Alphabet::SZ, n);
  const GenSeq sk = alphabet(Alphabet::SK, n);
  Cases sym = run_cases(sa.size() * sz.size() * sk.size(), [&](std::size_t i) {
    const Gen& f = sa[i / (sz.size() * sk.size())];
    const Gen& s = sz[(i / sk.size()) % sz.size()];
    const Gen& t = sk[i % sk.size()];
    const SymWord T = SymWord::from_tokens(Alphabet::SK, n, single(t));
    const SymWord l = lambda_gen(f, s, n);
    GenSeq shift = zword(act_AB(aut_of(single(f), n), zvec(single(s), n)));
    shift.push_back(f);
    const SymWord lhs = sym_mul(sym_mul(l, phi_word(shift, T)), sym_inv(l));
    const GenSeq fs = {f, s};
    const SymWord rhs = phi_word(fs, T);
    return verdict("symbolic " + show(f, n) + " " + show(s, n) + " " + show(t, n), equals(interpret(lhs), interpret(rhs)),
                   [&] { return to_string(lhs) + " vs " + to_string(rhs); });
  });
  out.insert(out.end(), sym.begin(), sym.end());
  // TB3 for lambda2 on S_A words.
  const GenSeq sapm = alphabet_pm(Alphabet::SA, n);
  Cases words = run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed ^ 0xC1A1A5ULL, i);
    const GenSeq w = random_word(rng, sapm, 4);
    const IntVec z = random_vec(rng, n, 2);
    const Endo k = random_kernel(rng, n, 3);
    const Endo a = aut_of(w, n);
    const Endo l = interpret(tlambda2(w, z, n));
    const Endo lhs = compose(compose(l, act_BK(act_AB(a, z), act_AK(a, k))), kernel_inv(l));
    const Endo rhs = act_AK(a, act_BK(z, k));
    return verdict("words sample " + std::to_string(i), equals(lhs, rhs),
                   [&] { return "w=" + show(w, n) + " z=" + show_vec(z) + " k=" + show_endo(k); });
  });
  out.insert(out.end(), words.begin(), words.end());
  return out;
}

Cases suite_lambda_arel(const SuiteParams& p) {
  require_k1("lambda-arel", p);
  const int n = p.n;
  auto rels = relation_catalog("nielsen", n);
  for (auto& r : inverse_pairs(Alphabet::SA, n)) rels.push_back(std::move(r));
  std::vector<IntVec> vs;
  for (int a = 0; a < n; ++a) {
    vs.push_back(unit_vector(n, a));
    vs.push_back(neg(unit_vector(n, a)));
  }
  Cases out = run_cases(rels.size() * vs.size(), [&](std::size_t i) {
    const RelationInstance& r = rels[i / vs.size()];
    const IntVec& z = vs[i % vs.size()];
    const SymWord l = tlambda2(r.relator(), z, n);
    return verdict("lambda2 " + r.family + " " + r.params + " " + show_vec(z), interpret(l).is_identity(),
                   [&] { return "lambda2(r, z) = " + to_string(l); });
  });
  const GenSeq sa = alphabet_pm(Alphabet::SA, n);
  Cases sampled = run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed, i);
    const GenSeq w = random_word(rng, sa, 6);
    const GenSeq w2 = random_word(rng, sa, 3);
    const IntVec z = random_vec(rng, n, 3);
    const IntVec z2 = random_vec(rng, n, 2);
    const Endo a = aut_of(w, n);
    const Endo a2 = aut_of(w2, n);
    const Endo l = interpret(tlambda2(w, z, n));
    std::string failed;
    // Psi(lambda2(w, z)) = lambda_bar(w, z)
    if (!equals(l, lambda_bar(a, z))) failed += " semantic";
    // TB2 shape: lambda2(w w2, z) = w(lambda2(w2, z)) . lambda2(w, w2.z)
    GenSeq ww = w;
    ww.insert(ww.end(), w2.begin(), w2.end());
    const Endo tb2 = compose(act_AK(a, interpret(tlambda2(w2, z, n))), interpret(tlambda2(w, act_AB(a2, z), n)));
    if (!equals(interpret(tlambda2(ww, z, n)), tb2)) failed += " tb2";
    // TB1 shape: lambda2(w, z z2) = lambda2(w, z) . (w.z)(lambda2(w, z2))
    const Endo tb1 = compose(l, act_BK(act_AB(a, z), interpret(tlambda2(w, z2, n))));
    if (!equals(interpret(tlambda2(w, add(z, z2), n)), tb1)) failed += " tb1";
    return verdict("sample " + std::to_string(i), failed.empty(), [&] {
      return "failed:" + failed + " w=" + show(w, n) + " w'=" + show(w2, n) + " z=" + show_vec(z) + " z'=" + show_vec(z2);
    });
  });
  out.insert(out.end(), sampled.begin(), sampled.end());
  return out;
}

Cases suite_gamma_rel(const SuiteParams& p) {
  require(p.k >= 1, "gamma-rel needs k >= 1");
  auto rels = relation_catalog("rk0", p.n);
  if (p.k >= 2) {
    for (auto& r : relation_catalog("s1prime", p.n, p.k)) rels.push_back(std::move(r));
  }
  return run_cases(rels.size(), [&](std::size_t i) {
    const RelationInstance& r = rels[i];
    const bool ok = equals(interpret_gens(r.lhs, r.basis), interpret_gens(r.rhs, r.basis));
    return verdict(r.family + " " + r.params, ok, [&] {
      return to_string(r.lhs, r.basis) + " != " + to_string(r.rhs, r.basis);
    });
  });
}

Cases suite_extension(const SuiteParams& p) {
  require_k1("extension", p);
  const ExtGroup ext(p.n);
  Cases out;
  append_checks(out, group_check(ext, p.samples, p.seed));
  append_checks(out, cocycle_check(ext, p.samples, p.seed, true));
  return out;
}

Cases suite_jw_delta(const SuiteParams& p) {
  require_k1("jw-delta", p);
  const int n = p.n;
  const ExtGroup ext(n);
  const auto rels = relation_catalog("jensen_wahl", n);
  const ExtElement e = ext.identity();
  Cases out = run_cases(rels.size(), [&](std::size_t i) {
    const RelationInstance& r = rels[i];
    const ExtElement g = phi_inverse_word(ext, r.relator());
    return verdict("relator " + r.family + " " + r.params, ext.equal(g, e), [&] { return "image " + to_string(g); });
  });
  const GenSeq sc = alphabet_pm(Alphabet::SC, n);
  Cases gens = run_cases(sc.size(), [&](std::size_t i) {
    const Gen& c = sc[i];
    const Endo fwd = ext_forward(phi_inverse_gen(ext, c));
    return verdict("forward " + show(c, n), equals(fwd, interpret(single(c), n)),
                   [&] { return "Phi(Phi^-1(c)) = " + show_endo(fwd); });
  });
  out.insert(out.end(), gens.begin(), gens.end());
  return out;
}

IntMatrix johnson_expected(const Basis& b, int z, int z1, int z2) {
  const int r = b.rank();
  IntMatrix m(r, r * (r - 1) / 2);
  const IntVec w = wedge(unit_vector(r, z1 - 1), unit_vector(r, z2 - 1));
  for (std::size_t c = 0; c < w.size(); ++c) m.at(z - 1, static_cast<int>(c)) = w[c];
  return m;
}

Cases suite_johnson(const SuiteParams& p, std::vector<std::string>& notes) {
  require(p.k >= 1, "johnson needs k >= 1");
  const Basis b{p.n, p.k};
  const int r = b.rank();
  Cases out;
  notes.push_back("tau(C[z,z'])([z]) is checked as [z']^[z]; the opposite sign does not hold for z -> z' z z'^-1");
  for (int z = 1; z <= r; ++z)
    for (int z1 = 1; z1 <= r; ++z1) {
      if (z1 == z) continue;
      const Gen c = gen_C(z, z1);
      const IntMatrix got = johnson(gen_endo(c, b));
      out.push_back(verdict("tau " + to_string(c, b), got == johnson_expected(b, z, z1, z),
                            [&] { return got.to_string(); }));
      for (int z2 = 1; z2 <= r; ++z2) {
        if (z2 == z || z2 == z1) continue;
        const Gen m = gen_Mc(z, z1, z2);
        const IntMatrix gm = johnson(gen_endo(m, b));
        out.push_back(verdict("tau " + to_string(m, b), gm == johnson_expected(b, z, z1, z2),
                              [&] { return gm.to_string(); }));
      }
    }
  std::vector<std::pair<int, int>> ranks = {{2, 1}, {2, 2}};
  if (std::make_pair(p.n, p.k) != ranks[0] && std::make_pair(p.n, p.k) != ranks[1]) ranks.emplace_back(p.n, p.k);
  for (auto [n, k] : ranks) {
    const Basis bb{n, k};
    const GenSeq T = johnson_generating_set(bb);
    std::vector<Endo> fs;
    for (const Gen& g : T) fs.push_back(gen_endo(g, bb));
    const std::int64_t want = johnson_rank_formula(n, k);
    const int got = johnson_rank(fs);
    out.push_back(verdict("rank (" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(want),
                          got == want && static_cast<std::int64_t>(T.size()) == want, [&] {
                            return "rank " + std::to_string(got) + ", |T| = " + std::to_string(T.size());
                          }));
  }
  GenSeq tpm;
  for (const Gen& g : johnson_generating_set(b)) {
    tpm.push_back(g);
    tpm.push_back(inverse(g));
  }
  Cases hom = run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed, i);
    const GenSeq u = random_word(rng, tpm, 4);
    const GenSeq v = random_word(rng, tpm, 4);
    const IntMatrix tu = johnson(interpret_gens(u, b));
    const IntMatrix tv = johnson(interpret_gens(v, b));
    GenSeq uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    IntMatrix sum = tu;
    for (int x = 0; x < sum.rows(); ++x)
      for (int y = 0; y < sum.cols(); ++y) sum.at(x, y) += tv.at(x, y);
    return verdict("hom sample " + std::to_string(i), johnson(interpret_gens(uv, b)) == sum,
                   [&] { return "f=" + to_string(u, b) + " g=" + to_string(v, b); });
  });
  out.insert(out.end(), hom.begin(), hom.end());
  return out;
}

// Random element of GL_n(Z) from elementary moves, entries kept within [-5, 5].
IntMatrix random_unimodular(Rng& rng, int n) {
  IntMatrix m = IntMatrix::identity(n);
  const int steps = static_cast<int>(rng.range(0, 12));
  for (int s = 0; s < steps; ++s) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int kind = static_cast<int>(rng.below(3));
    IntMatrix next = m;
    if (kind == 0 && i != j) {
      const int sgn = rng.below(2) ? 1 : -1;
      for (int c = 0; c < n; ++c) next.at(i, c) += sgn * m.at(j, c);
    } else if (kind == 1) {
      for (int c = 0; c < n; ++c) std::swap(next.at(i, c), next.at(j, c));
    } else {
      for (int c = 0; c < n; ++c) next.at(i, c) = -m.at(i, c);
    }
    bool small = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) small = small && next.at(x, y) >= -5 && next.at(x, y) <= 5;
    if (small) m = next;
  }
  return m;
}

IntMatrix random_stabilizer(Rng& rng, int n) {
  MatSemi p{IntVec(static_cast<std::size_t>(n)), random_unimodular(rng, n)};
  IntMatrix m = stab_assemble(p);
  for (int i = 0; i < n; ++i) m.at(n, i) = rng.range(-5, 5);
  return m;
}

Cases suite_stab_psi(const SuiteParams& p) {
  return run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed, i);
    const IntMatrix m1 = random_stabilizer(rng, p.n);
    const IntMatrix m2 = random_stabilizer(rng, p.n);
    const MatSemi prod = mat_semi_mul(stab_decompose(m1), stab_decompose(m2));
    const bool hom = stab_decompose(m1 * m2) == prod;
    const bool round = stab_assemble(stab_decompose(m1)) == m1 && stab_assemble(prod) == m1 * m2;
    return verdict("sample " + std::to_string(i), hom && round,
                   [&] { return "M1=" + m1.to_string() + " M2=" + m2.to_string(); });
  });
}

Word random_free_word(Rng& rng, const Basis& b, int max_len) {
  std::vector<Letter> ls(static_cast<std::size_t>(rng.range(0, max_len)));
  for (Letter& l : ls) {
    l = static_cast<Letter>(rng.range(1, b.rank()));
    if (rng.below(2)) l = -l;
  }
  return Word::from_letters(b, ls);
}

Cases suite_magnus(const SuiteParams& p) {
  const Basis b{p.n, p.k};
  return run_cases(static_cast<std::size_t>(p.samples), [&](std::size_t i) {
    Rng rng = Rng::for_sample(p.seed, i);
    const Word u = random_free_word(rng, b, 8);
    const Word v = random_free_word(rng, b, 8);
    const Word w = commutator(u, v);
    const bool wedge_ok = lambda2_projection(w) == wedge(abelianize(u), abelianize(v));
    const Word c = commutator(commutator(random_free_word(rng, b, 4), random_free_word(rng, b, 4)),
                              random_free_word(rng, b, 4));
    const bool gamma3 = lambda2_projection(mul(w, c)) == lambda2_projection(w) &&
                        lambda2_projection(mul(c, w)) == lambda2_projection(w);
    return verdict("sample " + std::to_string(i), wedge_ok && gamma3, [&] {
      return std::string(wedge_ok ? "gamma3" : "wedge") + " u=" + to_string(u) + " v=" + to_string(v) + " c=" + to_string(c);
    });
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table1",      "phi-conj", "phi-inverse-A", "phi-nielsen", "phi-inverse-Z", "phi-zn",   "lambda-zrel",
      "tb3",         "lambda-arel", "gamma-rel",  "extension",   "jw-delta",      "johnson", "stab-psi",
      "magnus-oracle"};
  return names;
}

SuiteParams default_params(std::string_view suite) {
  SuiteParams p;
  if (suite == "table1") {
    p.n = 3;
    p.k = 3;
  } else if (suite == "johnson" || suite == "magnus-oracle") {
    p.n = 3;
    p.k = 2;
    if (suite == "magnus-oracle") p.samples = 200;
  } else if (suite == "lambda-zrel" || suite == "lambda-arel" || suite == "tb3" || suite == "extension" ||
             suite == "jw-delta") {
    p.n = 3;
  }
  return p;
}

SuiteReport run_suite(std::string_view name, const SuiteParams& params) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error("unknown suite '" + std::string(name) + "'");
  }
  require(params.n >= 2 && params.n <= 6, "n must be in [2, 6]");
  require(params.k >= 0 && params.k <= 4, "k must be in [0, 4]");
  require(params.samples >= 0 && params.samples <= 100000, "samples must be in [0, 100000]");

  SuiteReport r;
  r.suite = std::string(name);
  r.params = params;
  const auto start = std::chrono::steady_clock::now();
  if (name == "table1") r.cases = suite_table1(params, r.notes);
  if (name == "phi-conj") r.cases = suite_phi_conj(params);
  if (name == "phi-inverse-A") r.cases = suite_phi_inverse(params, Alphabet::SA);
  if (name == "phi-inverse-Z") r.cases = suite_phi_inverse(params, Alphabet::SZ);
  if (name == "phi-nielsen") r.cases = suite_phi_catalog(params, "nielsen");
  if (name == "phi-zn") r.cases = suite_phi_catalog(params, "zn");
  if (name == "lambda-zrel") r.cases = suite_lambda_zrel(params);
  if (name == "tb3") r.cases = suite_tb3(params);
  if (name == "lambda-arel") r.cases = suite_lambda_arel(params);
  if (name == "gamma-rel") r.cases = suite_gamma_rel(params);
  if (name == "extension") r.cases = suite_extension(params);
  if (name == "jw-delta") r.cases = suite_jw_delta(params);
  if (name == "johnson") r.cases = suite_johnson(params, r.notes);
  if (name == "stab-psi") r.cases = suite_stab_psi(params);
  if (name == "magnus-oracle") r.cases = suite_magnus(params);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace torelli
