#include "tropsolve/shadow_vertex.hpp"

#include <algorithm>

#include "tropsolve/assignment.hpp"
#include "tropsolve/linalg.hpp"
#include "tropsolve/oracles/lift.hpp"

namespace tropsolve {
namespace {

struct ExtRow {
  bool unit = false;
  std::size_t index = 0;  // column for a unit row, matrix row otherwise
};

int inversion_parity(std::span<const std::size_t> v) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) inv += v[a] > v[b] ? 1 : 0;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

// Determinant of an ordered list of extended rows written as
// orientation * tdet(matrix restricted to sorted rows x remaining columns).
struct ReducedCosts::Bracket {
  int orientation = 1;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  Bracket(std::size_t n, std::span<const ExtRow> list) {
    std::vector<char> is_unit(n, 0);
    for (const auto& e : list)
      if (e.unit) is_unit[e.index] = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (!is_unit[j]) cols.push_back(j);
    std::vector<std::size_t> sigma;
    sigma.reserve(list.size());
    std::size_t next = 0;
    for (const auto& e : list) {
      if (e.unit) {
        sigma.push_back(e.index);
      } else {
        sigma.push_back(cols[next++]);
        rows.push_back(e.index);
      }
    }
    orientation = permutation_parity(sigma) * inversion_parity(rows);
    std::sort(rows.begin(), rows.end());
  }

  SignedTrop minor(const SignedMatrix& m) const { return tdet_or_zero(m.submatrix(rows, cols)); }
};

RuleContext::RuleContext(const SignedMatrix& prefix, std::span<const SignedTrop> v)
    : m_(prefix.rows() + 2, prefix.cols()), p_(prefix.rows()) {
  if (v.size() != prefix.cols()) fail(ErrorCode::DimensionMismatch, "co-objective length differs from n");
  for (std::size_t i = 0; i < p_; ++i)
    for (std::size_t j = 0; j < cols(); ++j) m_(i, j) = prefix(i, j);
  for (std::size_t j = 0; j < cols(); ++j) {
    m_(p_, j) = SignedTrop::pos(EpsVal::eps_power(static_cast<std::int64_t>(j) + 1));
    m_(p_ + 1, j) = v[j];
  }
}

RuleContext RuleContext::for_phase(const TropLP& lp, std::size_t k) {
  if (k >= lp.rows()) fail(ErrorCode::IndexOutOfRange, "phase row out of range");
  return RuleContext(lp.prefix(k).a(), lp.a().row(k));
}

SignedTrop minor(const RuleContext& ctx, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  for (auto i : rows)
    if (i >= ctx.matrix().rows()) fail(ErrorCode::IndexOutOfRange, "minor row out of range");
  for (auto j : cols)
    if (j >= ctx.cols()) fail(ErrorCode::IndexOutOfRange, "minor column out of range");
  return tdet_or_zero(ctx.matrix().submatrix(rows, cols));
}

ReducedCosts::ReducedCosts(const RuleContext& ctx, const Basis& basis) : ctx_(&ctx), basis_(basis) {
  const std::size_t n = ctx.cols();
  if (basis.size() != n) fail(ErrorCode::DimensionMismatch, "basis does not have n elements");
  for (auto i : basis.rows)
    if (i >= ctx.prefix_rows()) fail(ErrorCode::IndexOutOfRange, "basis row outside the prefix");
  for (auto j : basis.cols)
    if (j >= n) fail(ErrorCode::IndexOutOfRange, "basis column out of range");

  std::vector<ExtRow> list;
  for (auto j : basis.cols) {
    elems_.push_back(BasisElem::col(j));
    list.push_back({true, j});
  }
  for (auto i : basis.rows) {
    elems_.push_back(BasisElem::row(i));
    list.push_back({false, i});
  }

  const Bracket b(n, list);
  orient_b_ = b.orientation;
  p_ = tdet(ctx.matrix().submatrix(b.rows, b.cols));

  orient_.resize(n);
  q_.resize(n);
  r_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    auto replaced = list;
    replaced[t] = {false, ctx.u_row()};
    const Bracket bu(n, replaced);
    orient_[t] = bu.orientation;
    q_[t] = bu.minor(ctx.matrix());
    replaced[t] = {false, ctx.v_row()};
    r_[t] = Bracket(n, replaced).minor(ctx.matrix());
  }
}

std::size_t ReducedCosts::position(const BasisElem& l) const {
  const auto it = std::find(elems_.begin(), elems_.end(), l);
  if (it == elems_.end()) fail(ErrorCode::ArgError, to_string(l) + " is not in the basis");
  return static_cast<std::size_t>(it - elems_.begin());
}

int ReducedCosts::sign_constant(const BasisElem& l) const { return orient_[position(l)] * orient_b_; }

int ReducedCosts::plucker_constant(const BasisElem& k, const BasisElem& l) const {
  std::vector<ExtRow> list;
  for (const auto& e : elems_) list.push_back({e.is_col(), e.index});
  list[position(k)] = {false, ctx_->u_row()};
  list[position(l)] = {false, ctx_->v_row()};
  const Bracket kl(ctx_->cols(), list);
  return orient_[position(k)] * orient_[position(l)] * orient_b_ * kl.orientation;
}

SignedTrop ReducedCosts::plucker_minor(const BasisElem& k, const BasisElem& l) const {
  if (k == l) fail(ErrorCode::ArgError, "plucker_minor needs two distinct elements");
  std::vector<ExtRow> list;
  for (const auto& e : elems_) list.push_back({e.is_col(), e.index});
  list[position(k)] = {false, ctx_->u_row()};
  list[position(l)] = {false, ctx_->v_row()};
  return Bracket(ctx_->cols(), list).minor(ctx_->matrix());
}

std::vector<BasisElem> ReducedCosts::lambda() const {
  SignConstants s;
  for (std::size_t t = 0; t < elems_.size(); ++t) s.emplace(elems_[t], orient_[t] * orient_b_);
  return lambda(s);
}

std::vector<BasisElem> ReducedCosts::lambda(const SignConstants& s) const {
  std::vector<BasisElem> out;
  const int sp = p_.sign();
  for (std::size_t t = 0; t < elems_.size(); ++t) {
    const auto it = s.find(elems_[t]);
    if (it == s.end()) fail(ErrorCode::ArgError, "sign constant missing for " + to_string(elems_[t]));
    const int want = it->second * sp;
    if (q_[t].sign() == want && r_[t].sign() == want) out.push_back(elems_[t]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int ReducedCosts::lift_t_sign(const BasisElem& k, const BasisElem& l) const {
  using oracles::lift_det;
  const std::size_t n = ctx_->cols();
  auto lifted = [&](const BasisElem& e, std::size_t row) {
    std::vector<ExtRow> list;
    for (const auto& x : elems_) list.push_back({x.is_col(), x.index});
    list[position(e)] = {false, row};
    const Bracket b(n, list);
    return lift_det(ctx_->matrix(), b.rows, b.cols);
  };
  const auto u = ctx_->u_row();
  const auto v = ctx_->v_row();
  const auto t = lifted(k, u) * lifted(l, v) - lifted(l, u) * lifted(k, v);
  return t.sign();
}

int ReducedCosts::t_sign(const BasisElem& k, const BasisElem& l, TSignPath path) const {
  if (k == l) return 0;
  if (path == TSignPath::Lift) return lift_t_sign(k, l);
  if (path == TSignPath::Auto) {
    const SignedTrop first = tmul(q(k), r(l));
    const SignedTrop second = tmul(q(l), r(k));
    if (first.modulus() > second.modulus()) return first.sign();
    if (second.modulus() > first.modulus()) return -second.sign();
  }
  return plucker_constant(k, l) * p_.sign() * plucker_minor(k, l).sign();
}

bool ReducedCosts::precedes(const BasisElem& k, const BasisElem& l) const {
  return t_sign(k, l) == -sign_constant(k) * sign_constant(l);
}

SignConstants sign_constants(const RuleContext& ctx, const Basis& basis) {
  const ReducedCosts rc(ctx, basis);
  SignConstants out;
  for (const auto& e : rc.elements()) out.emplace(e, rc.sign_constant(e));
  return out;
}

std::vector<BasisElem> lambda_set(const RuleContext& ctx, const Basis& basis) {
  return ReducedCosts(ctx, basis).lambda();
}

std::vector<BasisElem> lambda_set(const RuleContext& ctx, const Basis& basis, const SignConstants& s) {
  return ReducedCosts(ctx, basis).lambda(s);
}

int t_poly_sign(const RuleContext& ctx, const Basis& basis, const BasisElem& k, const BasisElem& l,
                TSignPath path) {
  return ReducedCosts(ctx, basis).t_sign(k, l, path);
}

std::optional<BasisElem> leaving_variable(const RuleContext& ctx, const Basis& basis) {
  const ReducedCosts rc(ctx, basis);
  const auto lambda = rc.lambda();
  if (lambda.empty()) return std::nullopt;
  BasisElem best = lambda.front();
  for (std::size_t a = 1; a < lambda.size(); ++a)
    if (rc.precedes(lambda[a], best)) best = lambda[a];
  for (const auto& l : lambda) {
    if (l == best) continue;
    if (!rc.precedes(best, l))
      fail(ErrorCode::NoUniqueMin, "cost ratios of " + to_string(best) + " and " + to_string(l) +
                                       " do not compare strictly at basis " + to_string(basis));
  }
  return best;
}

}  // namespace tropsolve
