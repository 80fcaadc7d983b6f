#ifndef PERFECT_FPGROUP_HPP_
#define PERFECT_FPGROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "perfect/perm.hpp"

namespace perfect {

// Letters are 1-based generator numbers; a negative letter is an inverse.
using FpWord = std::vector<int>;

struct FpPresentation {
  std::vector<std::string> generator_names;
  std::vector<FpWord> relators;

  std::size_t num_generators() const noexcept { return generator_names.size(); }
  // Throws std::invalid_argument if a relator uses an undeclared generator.
  void validate() const;
  static FpPresentation with_generators(std::size_t n, std::string const& prefix = "g");
};

FpWord inverse_word(FpWord const& w);
FpWord concat(FpWord const& a, FpWord const& b);
FpWord commutator_word(FpWord const& a, FpWord const& b);  // a^-1 b^-1 a b
FpWord free_reduce(FpWord const& w);

// Smith normal form diagonal of an integer matrix (nonzero entries, each
// dividing the next). Throws BudgetExceeded on 64-bit overflow.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

// Abelian invariants: torsion coefficients > 1 in divisibility order, then
// one 0 per free rank.
std::vector<std::int64_t> abelian_invariants(FpPresentation const& pres);

// Schreier generators and rewritten relators for the subgroup of finite index
// whose right coset action is given: action[g][c] is coset c times generator g.
// Coset 0 is the subgroup. Generator (c, g) of the result corresponds to
// t_c g t_{cg}^-1; generators lying on the Schreier tree are eliminated.
struct SchreierPresentation {
  FpPresentation presentation;
  // For each generator of the result, the (coset, original generator) pair.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  // Index into presentation generators of (coset, generator), or -1 on tree.
  std::vector<std::vector<long>> index;
};
SchreierPresentation reidemeister_schreier(FpPresentation const& pres,
                                           std::vector<std::vector<Point>> const& action);

// Relation matrix of the abelianization reduced mod p: rank of each column
// space piece. Returns the p-rank of the abelianization (number of cyclic
// factors of order divisible by p plus free rank).
std::size_t abelian_p_rank(FpPresentation const& pres, unsigned p);

}  // namespace perfect

#endif  // PERFECT_FPGROUP_HPP_
