#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/symgen.hpp"

namespace torelli {

// phi(s)(t) for s in SQ^{+-1} and t in SK^{+-1}: the symbolic conjugation
// action of the quotient generators on the kernel generators.
GenSeq phi_gen_seq(const Gen& s, const Gen& t, int n);
SymWord phi_gen(const Gen& s, const Gen& t, int n);
// u is a word over SQ^{+-1}, applied right to left (the last token acts first).
SymWord phi_word(std::span<const Gen> u, const SymWord& w);

// Identifiers of every rule whose pattern matches (s, t); t must be a
// positive SK generator. A complete and unambiguous table gives exactly one.
std::vector<std::string> phi_matching_rules(const Gen& s, const Gen& t, int n);
// Fixed-case test for s = M[x_a^alpha, y] with either sign of alpha.
bool phi_y_fixed_case(int a, int alpha, const Gen& t, int n);

struct KrelParams {
  int a = 0, b = 0, c = 0, d = 0;
  int alpha = 1, beta = 1, gamma = 1, delta = 1, epsilon = 1;
};
// Relator lhs * rhs^-1 of family R1..R10, or nullopt when the parameters
// violate the family's side conditions.
std::optional<SymWord> krel(int family, const KrelParams& p, int n);

struct RelationInstance {
  std::string family;
  std::string params;
  Basis basis;
  GenSeq lhs;
  GenSeq rhs;
  // Set when the entry differs from its traditional printed form (see README).
  bool corrected = false;

  GenSeq relator() const;  // lhs * rhs^-1, unreduced
};

// Kinds: nielsen, jensen_wahl, rk0, zn, table1, s1prime. Only table1 and
// s1prime use k; the others live on F_{n,1}.
std::vector<RelationInstance> relation_catalog(std::string_view kind, int n, int k = 1);
const std::vector<std::string>& catalog_kinds();
// s * s^-1 for every s in the alphabet (unreduced).
std::vector<RelationInstance> inverse_pairs(Alphabet a, int n);
// The verbatim forms of the corrected table1 cells; each fails verification.
std::vector<RelationInstance> table1_uncorrected(int n, int k);

// Rewrites t in SK into a word over `allowed` using the sign-flip relations
// R4, R5, R7. The allowed set must contain one Mc generator per ordered pair
// (a, b) and the C generators used by the flips.
GenSeq genset_reduce(const Gen& t, std::span<const Gen> allowed, int n);

}  // namespace torelli
