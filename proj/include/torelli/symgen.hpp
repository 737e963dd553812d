#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/fgmap.hpp"

namespace torelli {

// Symbolic alphabets over F_{n,1} = <x_1..x_n, y>:
//   SA  Nielsen generators of Aut(F_n): M[x_a^alpha,x_b], P[a,b], I[a]
//   SZ  M[x_a,y]
//   SQ  SA and SZ together
//   SK  C[y,x_a], C[x_a,y], Mc[x_a^alpha,y^eps,x_b^beta]
//   SC  SA, M[x_a^alpha,y], C[y,x_a]
enum class Alphabet { SA, SQ, SK, SZ, SC };

const char* alphabet_name(Alphabet a);
inline Basis sym_basis(int n) { return Basis{n, 1}; }

// Positive generators, in a fixed enumeration order.
GenSeq alphabet(Alphabet a, int n);
// Generators and their inverse tokens (self-inverse tokens appear once).
GenSeq alphabet_pm(Alphabet a, int n);
bool in_alphabet(Alphabet a, int n, const Gen& g);

class SymWord {
 public:
  SymWord(Alphabet alphabet, int n) : alphabet_(alphabet), n_(n) {}
  // Validates membership of every token and freely reduces.
  static SymWord from_tokens(Alphabet alphabet, int n, std::span<const Gen> tokens);
  static SymWord parse(Alphabet alphabet, int n, std::string_view text);

  Alphabet alphabet() const { return alphabet_; }
  int n() const { return n_; }
  Basis basis() const { return sym_basis(n_); }
  const GenSeq& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  friend bool operator==(const SymWord&, const SymWord&) = default;

 private:
  Alphabet alphabet_;
  int n_;
  GenSeq tokens_;
};

SymWord sym_mul(const SymWord& u, const SymWord& v);
SymWord sym_inv(const SymWord& w);
std::string to_string(const SymWord& w);

// Automorphism of F_{n,1} named by a token sequence (left to right = outer to inner).
Endo interpret(std::span<const Gen> tokens, int n);
Endo interpret(const SymWord& w);

struct Insertion {
  std::size_t position = 0;
  GenSeq word;  // inserted as given, then the whole word is reduced
  std::size_t line = 0;  // source line when parsed from a certificate
};
SymWord applyrels(const SymWord& start, std::span<const Insertion> steps);

struct Certificate {
  int n = 0;
  SymWord start{Alphabet::SK, 0};
  std::vector<Insertion> steps;
  SymWord expect{Alphabet::SK, 0};
};
// Format:
//   certificate v1; n=<n>
//   start: <symword>
//   insert @<pos>: <symword>
//   expect: <symword|empty>
// Lines starting with '#' and blank lines are ignored.
Certificate parse_certificate(std::string_view text);
std::string format_certificate(const Certificate& c);

}  // namespace torelli
