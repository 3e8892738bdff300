#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

/// One element of I (+) J: either the inequality of row i or the
/// nonnegativity constraint x_j >= -inf of column j. Rows order before
/// columns, which is the candidate scan order of the pivot.
struct BasisElem {
  enum class Kind : unsigned char { Row = 0, Col = 1 };

  Kind kind = Kind::Row;
  std::size_t index = 0;

  static BasisElem row(std::size_t i) { return {Kind::Row, i}; }
  static BasisElem col(std::size_t j) { return {Kind::Col, j}; }
  bool is_row() const { return kind == Kind::Row; }
  bool is_col() const { return kind == Kind::Col; }

  friend bool operator==(const BasisElem&, const BasisElem&) = default;
  friend auto operator<=>(const BasisElem&, const BasisElem&) = default;
};

std::string to_string(const BasisElem& e);

/// A basis (I, J) with |I| + |J| = n; both index lists sorted and
/// duplicate-free.
struct Basis {
  std::vector<std::size_t> rows;  // I
  std::vector<std::size_t> cols;  // J

  /// (empty, [n]): the point (-inf, ..., -inf).
  static Basis initial(std::size_t n);

  std::size_t size() const { return rows.size() + cols.size(); }
  bool contains(const BasisElem& e) const;
  /// Rows ascending, then columns ascending.
  std::vector<BasisElem> elements() const;
  /// (I (+) J) \ {out} u {in}; the result stays sorted.
  Basis exchange(const BasisElem& out, const BasisElem& in) const;
  /// Complement of J in [n].
  std::vector<std::size_t> free_cols(std::size_t n) const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

std::string to_string(const Basis& b);

/// The constraint system x >= -inf, A+ (.) x (+) b+ >= A- (.) x (+) b-.
class TropLP {
 public:
  TropLP() = default;
  TropLP(SignedMatrix a, SignedVec b);
  /// Empty system (no rows) in n variables.
  static TropLP empty(std::size_t n);

  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  const SignedMatrix& a() const { return a_; }
  const SignedVec& b() const { return b_; }

  /// The system made of the first k rows.
  TropLP prefix(std::size_t k) const;

  friend bool operator==(const TropLP&, const TropLP&) = default;

 private:
  SignedMatrix a_;
  SignedVec b_;
};

/// Validates |I| + |J| = n, ranges, sortedness. Throws DimensionMismatch or
/// IndexOutOfRange.
void check_basis(const TropLP& lp, const Basis& basis);

/// The unique solution of the rows I taken as equalities with x_J = -inf,
/// if it exists in T^n.
std::optional<TropVec> basic_point(const TropLP& lp, const Basis& basis);

/// Every row satisfied (lhs >= rhs).
bool is_feasible(const TropLP& lp, const TropVec& x);

struct BasisPoint {
  Basis basis;
  TropVec point;
};

/// Naive pivot: tries every entering element outside I (+) J (rows, then
/// columns) and returns the unique feasible neighbour reached by dropping
/// k_out. None if there is none (the edge is a ray). A second feasible
/// candidate raises MultipleCandidates.
std::optional<BasisPoint> pivot(const TropLP& lp, const Basis& basis, const BasisElem& k_out);

/// Exchanges k_out for the new row k_new and returns the resulting basis if
/// its basic point exists and is feasible for lp_next, i.e. the point of the
/// current edge that activates the new constraint.
std::optional<BasisPoint> try_enter_constraint(const TropLP& lp_next, const Basis& basis,
                                               const BasisElem& k_out, std::size_t k_new);

}  // namespace tropsolve
