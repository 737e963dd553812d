#include "torelli/glsemi.hpp"

namespace torelli {

IntVec aut_act_on_Zn(const Endo& f, const IntVec& z) {
  if (f.basis().k != 0) throw Error("aut_act_on_Zn: automorphism must act on F_n");
  if (static_cast<int>(z.size()) != f.basis().n) throw Error("aut_act_on_Zn: vector length mismatch");
  return abel_matrix(f).inverse_unimodular().transpose() * z;
}

QElement q_identity(int n) { return {IntVec(static_cast<std::size_t>(n), 0), Endo::identity(Basis{n, 0})}; }

QElement semi_mul(const QElement& p, const QElement& q) {
  return {add(p.z, aut_act_on_Zn(p.a, q.z)), compose(p.a, q.a)};
}

QElement semi_inv(const QElement& q) {
  Endo ainv = invert_factored(q.a);
  IntVec z = neg(aut_act_on_Zn(ainv, q.z));
  return {std::move(z), std::move(ainv)};
}

bool q_equals(const QElement& p, const QElement& q) { return p.z == q.z && equals(p.a, q.a); }

MatSemi mat_semi_mul(const MatSemi& p, const MatSemi& q) {
  return {add(p.z, p.m.inverse_unimodular().transpose() * q.z), p.m * q.m};
}

bool is_stabilizer(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  const int n = m.rows() - 1;
  for (int i = 0; i < n; ++i)
    if (m.at(i, n) != 0) return false;
  if (m.at(n, n) != 1) return false;
  const std::int64_t d = m.det();
  return d == 1 || d == -1;
}

MatSemi stab_decompose(const IntMatrix& m) {
  if (!is_stabilizer(m)) throw Error("stab_decompose: matrix does not fix the last basis vector " + m.to_string());
  const int n = m.rows() - 1;
  IntMatrix hat(n, n);
  IntVec bar(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) hat.at(i, j) = m.at(i, j);
    bar[static_cast<std::size_t>(i)] = m.at(n, i);
  }
  return {hat.inverse_unimodular().transpose() * bar, hat};
}

IntMatrix stab_assemble(const MatSemi& p) {
  const int n = p.m.rows();
  const IntVec bar = p.m.transpose() * p.z;
  IntMatrix m(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = p.m.at(i, j);
    m.at(n, i) = bar[static_cast<std::size_t>(i)];
  }
  m.at(n, n) = 1;
  return m;
}

}  // namespace torelli
