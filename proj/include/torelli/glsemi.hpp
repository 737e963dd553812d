#pragma once

#include "torelli/fgmap.hpp"
#include "torelli/intmatrix.hpp"

namespace torelli {

// Left action of Aut(F_n) on Z^n: z -> (eta(f)^-1)^T z.
IntVec aut_act_on_Zn(const Endo& f, const IntVec& z);

// Element of Z^n x| Aut(F_n); the automorphism lives on F_n = F(n,0) and
// must carry a factorization so that it can be inverted.
struct QElement {
  IntVec z;
  Endo a;
};

QElement q_identity(int n);
QElement semi_mul(const QElement& p, const QElement& q);
QElement semi_inv(const QElement& q);
bool q_equals(const QElement& p, const QElement& q);

// The same group with GL_n(Z) in place of Aut(F_n).
struct MatSemi {
  IntVec z;
  IntMatrix m;
  friend bool operator==(const MatSemi&, const MatSemi&) = default;
};
MatSemi mat_semi_mul(const MatSemi& p, const MatSemi& q);

// For M in GL_{n+1}(Z) fixing the last basis vector:
//   M = [[Mhat, 0], [Mbar^T, 1]]  ->  ((Mhat^-1)^T Mbar, Mhat).
bool is_stabilizer(const IntMatrix& m);
MatSemi stab_decompose(const IntMatrix& m);
IntMatrix stab_assemble(const MatSemi& p);

}  // namespace torelli
