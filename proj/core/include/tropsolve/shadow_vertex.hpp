#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tropsolve/simplex.hpp"

namespace tropsolve {

/// Data of one shadow-vertex phase: the processed prefix rows, the objective
/// u with u_j = eps^(j) and the co-objective v, stacked into one matrix whose
/// row p is u and row p + 1 is v.
class RuleContext {
 public:
  RuleContext(const SignedMatrix& prefix, std::span<const SignedTrop> v);
  /// Prefix rows [0, k) of lp, with v = (row k of A) and b_k dropped.
  static RuleContext for_phase(const TropLP& lp, std::size_t k);

  const SignedMatrix& matrix() const { return m_; }
  std::size_t prefix_rows() const { return p_; }
  std::size_t u_row() const { return p_; }
  std::size_t v_row() const { return p_ + 1; }
  std::size_t cols() const { return m_.cols(); }

 private:
  SignedMatrix m_;
  std::size_t p_ = 0;
};

/// tdet of matrix()_{K x L} with both index sets sorted; -inf when no finite
/// permutation exists.
SignedTrop minor(const RuleContext& ctx, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols);

using SignConstants = std::map<BasisElem, int>;

/// How the sign of Q_k R_l - Q_l R_k is obtained.
enum class TSignPath {
  Auto,      // dominant term, Plücker factorisation on ties
  Factored,  // always the Plücker factorisation
  Lift,      // exact evaluation of the lifted minors (|minor| <= 8)
};

/// Reduced-cost minors of one basis. For each basis element l, Q_l and R_l
/// are the minors of the basis with l replaced by u resp. v; P is the basis
/// minor on I x complement(J).
class ReducedCosts {
 public:
  ReducedCosts(const RuleContext& ctx, const Basis& basis);

  const std::vector<BasisElem>& elements() const { return elems_; }
  const SignedTrop& p() const { return p_; }
  const SignedTrop& q(const BasisElem& l) const { return q_[position(l)]; }
  const SignedTrop& r(const BasisElem& l) const { return r_[position(l)]; }
  /// s_l: l has positive u- and v-costs iff sign Q_l = sign R_l = s_l sign P.
  int sign_constant(const BasisElem& l) const;
  /// eta_kl with sign(Q_k R_l - Q_l R_k) = eta_kl sign(P) sign(P2_kl).
  int plucker_constant(const BasisElem& k, const BasisElem& l) const;
  /// The minor P2_kl of the basis with k <- u and l <- v.
  SignedTrop plucker_minor(const BasisElem& k, const BasisElem& l) const;

  /// Basis elements with positive u- and v-costs, ascending.
  std::vector<BasisElem> lambda() const;
  std::vector<BasisElem> lambda(const SignConstants& s) const;
  int t_sign(const BasisElem& k, const BasisElem& l, TSignPath path = TSignPath::Auto) const;
  /// k has a strictly smaller cost ratio than l.
  bool precedes(const BasisElem& k, const BasisElem& l) const;

 private:
  struct Bracket;
  std::size_t position(const BasisElem& l) const;
  int lift_t_sign(const BasisElem& k, const BasisElem& l) const;

  const RuleContext* ctx_;
  Basis basis_;
  std::vector<BasisElem> elems_;
  int orient_b_ = 1;
  std::vector<int> orient_;
  SignedTrop p_;
  std::vector<SignedTrop> q_;
  std::vector<SignedTrop> r_;
};

SignConstants sign_constants(const RuleContext& ctx, const Basis& basis);
std::vector<BasisElem> lambda_set(const RuleContext& ctx, const Basis& basis);
/// Same set with caller-supplied sign constants.
std::vector<BasisElem> lambda_set(const RuleContext& ctx, const Basis& basis, const SignConstants& s);
int t_poly_sign(const RuleContext& ctx, const Basis& basis, const BasisElem& k,
                const BasisElem& l, TSignPath path = TSignPath::Auto);

/// The element of the lambda set with the smallest cost ratio. None when the
/// set is empty; NoUniqueMin when two ratios tie.
std::optional<BasisElem> leaving_variable(const RuleContext& ctx, const Basis& basis);

}  // namespace tropsolve
