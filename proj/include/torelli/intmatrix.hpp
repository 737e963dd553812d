#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torelli {

using IntVec = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::int64_t at(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  IntVec row(int i) const;
  IntVec col(int j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVec operator*(const IntVec& v) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::int64_t det() const;
  // Throws unless det = +-1.
  IntMatrix inverse_unimodular() const;
  int rank() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntVec add(const IntVec& a, const IntVec& b);
IntVec neg(const IntVec& a);
IntVec unit_vector(int n, int i);  // i is 0-based

}  // namespace torelli
