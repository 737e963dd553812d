#include "torelli/intmatrix.hpp"

#include <numeric>
#include <utility>

#include "torelli/fgword.hpp"

namespace torelli {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw Error("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec v(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
  return v;
}

IntVec IntMatrix::col(int j) const {
  IntVec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = at(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
  IntMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const std::int64_t a = at(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(l, j);
    }
  return p;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("matrix-vector product: shape mismatch");
  IntVec out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

std::int64_t IntMatrix::det() const {
  if (rows_ != cols_) throw Error("det: matrix not square");
  const int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  std::vector<__int128> a(data_.begin(), data_.end());
  auto A = [&](int i, int j) -> __int128& { return a[static_cast<std::size_t>(i * n + j)]; };
  int sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k) == 0) {
      int p = k + 1;
      while (p < n && A(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return static_cast<std::int64_t>(sign * A(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse_unimodular() const {
  const std::int64_t d = det();
  if (d != 1 && d != -1) throw Error("inverse_unimodular: determinant " + std::to_string(d));
  const int n = rows_;
  IntMatrix inv(n, n);
  if (n == 1) {
    inv.at(0, 0) = d;
    return inv;
  }
  // Adjugate by cofactors; the matrices handled here are at most a few rows.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(mr, mc++) = at(r, c);
        }
        ++mr;
      }
      const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * minor.det();
      inv.at(i, j) = cof * d;
    }
  return inv;
}

int IntMatrix::rank() const {
  std::vector<std::vector<__int128>> m(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) m[static_cast<std::size_t>(i)].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = r;
    while (p < rows_ && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows_) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(p)]);
    auto& pivot = m[static_cast<std::size_t>(r)];
    for (int i = r + 1; i < rows_; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const __int128 f = row[static_cast<std::size_t>(c)];
      if (f == 0) continue;
      const __int128 pv = pivot[static_cast<std::size_t>(c)];
      __int128 g = 0;
      for (int j = c; j < cols_; ++j) {
        row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] * pv - pivot[static_cast<std::size_t>(j)] * f;
        g = gcd128(g, row[static_cast<std::size_t>(j)]);
      }
      if (g > 1)
        for (int j = c; j < cols_; ++j) row[static_cast<std::size_t>(j)] /= g;
    }
    ++r;
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
  }
  return s + "]";
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error("vector add: length mismatch");
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec neg(const IntVec& a) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

IntVec unit_vector(int n, int i) {
  IntVec v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

}  // namespace torelli
