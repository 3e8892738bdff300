#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropsolve/errors.hpp"
#include "tropsolve/matrix.hpp"

namespace tropsolve {

/// Outcome of a genericity test. For a strong non-degeneracy check the
/// witness refers to the first offending square submatrix (rows/cols).
struct GenericityReport {
  enum class Witness { None, Tie, AllNegInf };

  bool generic = true;
  /// False when the submatrix count exceeded the exhaustive limit and the
  /// check was skipped; runtime NotGeneric errors are the detector then.
  bool exhaustive = true;
  Witness witness = Witness::None;
  std::vector<std::size_t> first;   // two distinct optimal permutations (Tie)
  std::vector<std::size_t> second;
  std::vector<std::size_t> rows;    // offending submatrix
  std::vector<std::size_t> cols;

  std::string describe() const;
};

class NotGenericError : public Error {
 public:
  explicit NotGenericError(GenericityReport report, const std::string& where = {});
  const GenericityReport& report() const { return report_; }

 private:
  GenericityReport report_;
};

/// Genericity of one square matrix: the optimal-assignment modulus is
/// finite and attained by a single permutation.
GenericityReport genericity(const SignedMatrix& m);

/// Signed tropical determinant tsign(s*) (.) M_{1 s*(1)} (.) ... for the unique
/// optimal permutation s*. The 0x0 determinant is the unit. Throws
/// NotGenericError on ties or an all -inf maximum.
SignedTrop tdet(const SignedMatrix& m);

/// As tdet, but a matrix without a finite permutation gives -inf (sign 0).
SignedTrop tdet_or_zero(const SignedMatrix& m);

/// Tropical Cramer solve of A+ x (+) b+ = A- x (+) b- for a generic square
/// A. The candidate x_c = tdet(A with column c replaced by (-)b) / tdet(A) is
/// returned only if every coordinate is nonnegative-signed (or -inf) and it
/// satisfies all equalities; this system has at most one solution, so a
/// failed check proves there is none.
std::optional<TropVec> cramer_solve(const SignedMatrix& a, std::span<const SignedTrop> b);

inline constexpr std::size_t kDefaultExhaustiveLimit = 5000;

/// Number of square submatrices of an m x n matrix (saturating).
std::size_t square_submatrix_count(std::size_t m, std::size_t n);

/// Every square submatrix generic. Exhaustive only when the number of square
/// submatrices is at most exhaustive_limit; otherwise returns a lazy report
/// (generic = true, exhaustive = false).
GenericityReport strong_nondegeneracy_check(const SignedMatrix& m,
                                            std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace tropsolve
