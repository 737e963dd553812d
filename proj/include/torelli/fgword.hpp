#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torelli {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Signed generator id: |l| in 1..n+k, x_i = i, y_j = n + j.
using Letter = std::int32_t;

struct Basis {
  int n = 0;
  int k = 0;

  int rank() const { return n + k; }
  bool contains(Letter l) const { return l != 0 && (l < 0 ? -l : l) <= n + k; }
  bool is_x(Letter l) const { return contains(l) && (l < 0 ? -l : l) <= n; }
  bool is_y(Letter l) const { return contains(l) && (l < 0 ? -l : l) > n; }
  Letter x(int i) const { return i; }
  Letter y(int j = 1) const { return n + j; }

  friend bool operator==(const Basis&, const Basis&) = default;
};

inline Letter gen_of(Letter l) { return l < 0 ? -l : l; }
inline int sign_of(Letter l) { return l < 0 ? -1 : 1; }

class Word {
 public:
  Word() = default;
  explicit Word(Basis basis) : basis_(basis) {}

  // Validates every letter and freely reduces.
  static Word from_letters(Basis basis, std::span<const Letter> letters);
  static Word from_letters(Basis basis, std::initializer_list<Letter> letters) {
    return from_letters(basis, std::span<const Letter>(letters.begin(), letters.size()));
  }
  static Word generator(Basis basis, Letter l) { return from_letters(basis, {l}); }

  const Basis& basis() const { return basis_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  friend class WordBuilder;
  Basis basis_;
  std::vector<Letter> letters_;
};

// Appends letters with on-the-fly cancellation; the result is always reduced.
class WordBuilder {
 public:
  explicit WordBuilder(Basis basis) : basis_(basis) {}
  void reserve(std::size_t n) { buf_.reserve(n); }
  void push(Letter l) {
    if (!buf_.empty() && buf_.back() == -l) {
      buf_.pop_back();
    } else {
      buf_.push_back(l);
    }
  }
  void append(const Word& w) {
    for (Letter l : w.letters()) push(l);
  }
  void append_inverse(const Word& w) {
    auto ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(-*it);
  }
  std::size_t size() const { return buf_.size(); }
  Word build() &&;

 private:
  Basis basis_;
  std::vector<Letter> buf_;
};

Word reduce(Basis basis, std::span<const Letter> letters);
Word mul(const Word& u, const Word& v);
Word mul(std::initializer_list<Word> ws);
Word inv(const Word& w);
Word power(const Word& w, int e);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicDecomposition {
  Word core;
  Word conjugator;
};
CyclicDecomposition cyclic_reduce(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

std::vector<std::int64_t> abelianize(const Word& w);

// Text form: "x1 x2^-1 y1"; "1" is the empty word. With k = 1 the
// letter y is printed bare, and both "y" and "y1" parse.
std::string letter_name(Basis basis, Letter l);
std::string to_string(const Word& w);
Letter parse_letter(Basis basis, std::string_view text);
Word parse_word(Basis basis, std::string_view text);

void require_same_basis(const Basis& a, const Basis& b, const char* what);

}  // namespace torelli
