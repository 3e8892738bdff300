#include "tropsolve/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "tropsolve/assignment.hpp"

namespace tropsolve {
namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ']';
  return os.str();
}

SignedTrop signed_product(const SignedMatrix& m, std::span<const std::size_t> perm) {
  SignedTrop acc = SignedTrop::pos(Trop::unit());
  for (std::size_t k = 0; k < perm.size(); ++k) acc = tmul(acc, m(k, perm[k]));
  return permutation_parity(perm) > 0 ? acc : acc.negated();
}

// Determinant that maps an all -inf maximum to the signed zero instead of
// raising; ties still raise.
}  // namespace

SignedTrop tdet_or_zero(const SignedMatrix& m) {
  const auto res = max_assignment(modulus_matrix(m));
  if (res.weight.is_neg_inf()) return SignedTrop::zero();
  if (!res.unique) {
    GenericityReport rep;
    rep.generic = false;
    rep.witness = GenericityReport::Witness::Tie;
    rep.first = res.permutation;
    rep.second = res.alternative;
    throw NotGenericError(rep, "minor");
  }
  return signed_product(m, res.permutation);
}

std::string GenericityReport::describe() const {
  std::ostringstream os;
  if (generic) {
    os << (exhaustive ? "generic" : "not checked (lazy mode)");
    return os.str();
  }
  if (witness == Witness::AllNegInf)
    os << "maximum is -inf";
  else
    os << "optimum attained by permutations " << join(first) << " and " << join(second);
  if (!rows.empty() || !cols.empty()) os << " on submatrix rows " << join(rows) << " cols " << join(cols);
  return os.str();
}

NotGenericError::NotGenericError(GenericityReport report, const std::string& where)
    : Error(ErrorCode::NotGeneric,
            "matrix is not generic: " + report.describe() + (where.empty() ? "" : " (" + where + ")")),
      report_(std::move(report)) {}

GenericityReport genericity(const SignedMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "genericity needs a square matrix");
  const auto res = max_assignment(modulus_matrix(m));
  GenericityReport rep;
  if (res.weight.is_neg_inf()) {
    rep.generic = false;
    rep.witness = GenericityReport::Witness::AllNegInf;
  } else if (!res.unique) {
    rep.generic = false;
    rep.witness = GenericityReport::Witness::Tie;
    rep.first = res.permutation;
    rep.second = res.alternative;
  }
  return rep;
}

SignedTrop tdet(const SignedMatrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "tdet needs a square matrix");
  const auto res = max_assignment(modulus_matrix(m));
  if (res.weight.is_neg_inf() || !res.unique) {
    GenericityReport rep;
    rep.generic = false;
    rep.witness = res.weight.is_neg_inf() ? GenericityReport::Witness::AllNegInf
                                          : GenericityReport::Witness::Tie;
    rep.first = res.permutation;
    rep.second = res.alternative;
    throw NotGenericError(rep);
  }
  return signed_product(m, res.permutation);
}

std::optional<TropVec> cramer_solve(const SignedMatrix& a, std::span<const SignedTrop> b) {
  if (!a.is_square() || b.size() != a.rows())
    fail(ErrorCode::DimensionMismatch, "cramer_solve needs square A and matching b");
  const std::size_t r = a.rows();
  const SignedTrop det = tdet(a);

  TropVec x(r);
  for (std::size_t c = 0; c < r; ++c) {
    SignedMatrix replaced = a;
    for (std::size_t i = 0; i < r; ++i) replaced(i, c) = b[i].negated();
    const SignedTrop num = tdet_or_zero(replaced);
    if (num.is_zero()) continue;  // x_c = -inf
    if (num.sign() * det.sign() < 0) return std::nullopt;
    x[c] = Trop(num.modulus().value() - det.modulus().value());
  }

  for (std::size_t i = 0; i < r; ++i) {
    const auto [lhs, rhs] = eval_row(a.row(i), b[i], x);
    if (lhs != rhs) return std::nullopt;
  }
  return x;
}

std::size_t square_submatrix_count(std::size_t m, std::size_t n) {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max() / 4;
  std::size_t total = 0;
  std::size_t cm = 1;  // C(m, k)
  std::size_t cn = 1;  // C(n, k)
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    cm = cm * (m - k + 1) / k;
    cn = cn * (n - k + 1) / k;
    if (cm > cap / std::max<std::size_t>(cn, 1)) return cap;
    total += cm * cn;
    if (total > cap) return cap;
  }
  return total;
}

namespace {

// Calls f(subset) for every k-subset of [0, n) in lexicographic order; stops
// when f returns false.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return true;
  while (true) {
    if (!f(idx)) return false;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

GenericityReport strong_nondegeneracy_check(const SignedMatrix& m, std::size_t exhaustive_limit) {
  GenericityReport result;
  if (square_submatrix_count(m.rows(), m.cols()) > exhaustive_limit) {
    result.exhaustive = false;
    return result;
  }
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const bool all_ok = for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        auto rep = genericity(m.submatrix(rows, cols));
        if (rep.generic) return true;
        rep.rows = rows;
        rep.cols = cols;
        result = std::move(rep);
        return false;
      });
    });
    if (!all_ok) return result;
  }
  return result;
}

}  // namespace tropsolve
