#include "tropsolve/simplex.hpp"

#include <algorithm>
#include <sstream>

#include "tropsolve/linalg.hpp"

namespace tropsolve {
namespace {

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k] + 1;
  os << '}';
  return os.str();
}

void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void erase_value(std::vector<std::size_t>& v, std::size_t x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

}  // namespace

std::string to_string(const BasisElem& e) {
  return (e.is_row() ? "row " : "col ") + std::to_string(e.index + 1);
}

Basis Basis::initial(std::size_t n) {
  Basis b;
  b.cols.resize(n);
  for (std::size_t j = 0; j < n; ++j) b.cols[j] = j;
  return b;
}

bool Basis::contains(const BasisElem& e) const {
  const auto& v = e.is_row() ? rows : cols;
  return std::binary_search(v.begin(), v.end(), e.index);
}

std::vector<BasisElem> Basis::elements() const {
  std::vector<BasisElem> out;
  out.reserve(size());
  for (auto i : rows) out.push_back(BasisElem::row(i));
  for (auto j : cols) out.push_back(BasisElem::col(j));
  return out;
}

Basis Basis::exchange(const BasisElem& out, const BasisElem& in) const {
  Basis b = *this;
  erase_value(out.is_row() ? b.rows : b.cols, out.index);
  insert_sorted(in.is_row() ? b.rows : b.cols, in.index);
  return b;
}

std::vector<std::size_t> Basis::free_cols(std::size_t n) const {
  std::vector<std::size_t> out;
  out.reserve(n - std::min(n, cols.size()));
  for (std::size_t j = 0; j < n; ++j)
    if (!std::binary_search(cols.begin(), cols.end(), j)) out.push_back(j);
  return out;
}

std::string to_string(const Basis& b) { return "(" + list(b.rows) + ", " + list(b.cols) + ")"; }

TropLP::TropLP(SignedMatrix a, SignedVec b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.size()) fail(ErrorCode::DimensionMismatch, "TropLP: A and b row counts differ");
}

TropLP TropLP::empty(std::size_t n) { return TropLP(SignedMatrix(0, n), {}); }

TropLP TropLP::prefix(std::size_t k) const {
  if (k > rows()) fail(ErrorCode::IndexOutOfRange, "TropLP::prefix beyond row count");
  SignedMatrix a(k, cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < cols(); ++j) a(i, j) = a_(i, j);
  return TropLP(std::move(a), SignedVec(b_.begin(), b_.begin() + static_cast<std::ptrdiff_t>(k)));
}

void check_basis(const TropLP& lp, const Basis& basis) {
  if (basis.size() != lp.cols())
    fail(ErrorCode::DimensionMismatch, "basis " + to_string(basis) + " does not have n elements");
  auto check = [](const std::vector<std::size_t>& v, std::size_t bound, const char* what) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] >= bound) fail(ErrorCode::IndexOutOfRange, std::string("basis ") + what + " index out of range");
      if (k > 0 && v[k - 1] >= v[k])
        fail(ErrorCode::ArgError, std::string("basis ") + what + " indices must be sorted and distinct");
    }
  };
  check(basis.rows, lp.rows(), "row");
  check(basis.cols, lp.cols(), "column");
}

std::optional<TropVec> basic_point(const TropLP& lp, const Basis& basis) {
  check_basis(lp, basis);
  const auto free = basis.free_cols(lp.cols());
  const SignedMatrix sub = lp.a().submatrix(basis.rows, free);
  SignedVec rhs;
  rhs.reserve(basis.rows.size());
  for (auto i : basis.rows) rhs.push_back(lp.b()[i]);

  const auto solved = cramer_solve(sub, rhs);
  if (!solved) return std::nullopt;
  TropVec x(lp.cols());
  for (std::size_t k = 0; k < free.size(); ++k) x[free[k]] = (*solved)[k];
  return x;
}

bool is_feasible(const TropLP& lp, const TropVec& x) {
  if (x.size() != lp.cols()) fail(ErrorCode::DimensionMismatch, "point dimension differs from LP");
  for (std::size_t i = 0; i < lp.rows(); ++i) {
    const auto [lhs, rhs] = eval_row(lp.a().row(i), lp.b()[i], x);
    if (lhs < rhs) return false;
  }
  return true;
}

std::optional<BasisPoint> pivot(const TropLP& lp, const Basis& basis, const BasisElem& k_out) {
  check_basis(lp, basis);
  if (!basis.contains(k_out))
    fail(ErrorCode::ArgError, "leaving element " + to_string(k_out) + " is not in the basis");

  std::optional<BasisPoint> found;
  auto consider = [&](const BasisElem& k_in) {
    Basis next = basis.exchange(k_out, k_in);
    auto x = basic_point(lp, next);
    if (!x || !is_feasible(lp, *x)) return;
    if (found)
      fail(ErrorCode::MultipleCandidates, "pivot from " + to_string(basis) + " dropping " +
                                              to_string(k_out) + " reaches both " +
                                              to_string(found->basis) + " and " + to_string(next));
    found = BasisPoint{std::move(next), std::move(*x)};
  };
  for (std::size_t i = 0; i < lp.rows(); ++i)
    if (!basis.contains(BasisElem::row(i))) consider(BasisElem::row(i));
  for (std::size_t j = 0; j < lp.cols(); ++j)
    if (!basis.contains(BasisElem::col(j))) consider(BasisElem::col(j));
  return found;
}

std::optional<BasisPoint> try_enter_constraint(const TropLP& lp_next, const Basis& basis,
                                               const BasisElem& k_out, std::size_t k_new) {
  if (k_new >= lp_next.rows()) fail(ErrorCode::IndexOutOfRange, "entering row out of range");
  if (!basis.contains(k_out))
    fail(ErrorCode::ArgError, "leaving element " + to_string(k_out) + " is not in the basis");
  if (basis.contains(BasisElem::row(k_new)))
    fail(ErrorCode::ArgError, "entering row is already in the basis");
  Basis next = basis.exchange(k_out, BasisElem::row(k_new));
  auto x = basic_point(lp_next, next);
  if (!x || !is_feasible(lp_next, *x)) return std::nullopt;
  return BasisPoint{std::move(next), std::move(*x)};
}

}  // namespace tropsolve
