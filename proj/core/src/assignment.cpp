#include "tropsolve/assignment.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>

namespace tropsolve {
namespace {

// Lexicographic (eps_deg ascending-is-larger, then value) group on int64,
// used when every finite weight scales to a bounded integer.
struct IntEps {
  std::int64_t value = 0;
  std::int64_t eps = 0;

  IntEps& operator+=(const IntEps& o) {
    value += o.value;
    eps += o.eps;
    return *this;
  }
  IntEps& operator-=(const IntEps& o) {
    value -= o.value;
    eps -= o.eps;
    return *this;
  }
  friend IntEps operator+(IntEps a, const IntEps& b) { return a += b; }
  friend IntEps operator-(IntEps a, const IntEps& b) { return a -= b; }
  friend IntEps operator-(const IntEps& a) { return {-a.value, -a.eps}; }
  friend bool operator==(const IntEps&, const IntEps&) = default;
  friend std::strong_ordering operator<=>(const IntEps& a, const IntEps& b) {
    if (a.eps != b.eps) return b.eps <=> a.eps;
    return a.value <=> b.value;
  }
};

template <class G>
struct CostMatrix {
  std::size_t r = 0;
  std::vector<G> cost;  // minimisation costs, -w
  std::vector<char> present;

  bool has(std::size_t i, std::size_t j) const { return present[i * r + j] != 0; }
  const G& at(std::size_t i, std::size_t j) const { return cost[i * r + j]; }
};

template <class G>
struct HungarianSolution {
  bool feasible = false;
  std::vector<std::size_t> perm;
  std::vector<G> u;  // row potentials, 1-based
  std::vector<G> v;  // column potentials, 1-based
};

// Shortest augmenting path Hungarian method (min-cost). Missing arcs never
// enter the search, so minv entries are "infinite" until first reached.
template <class G>
HungarianSolution<G> hungarian(const CostMatrix<G>& c) {
  const std::size_t r = c.r;
  HungarianSolution<G> sol;
  sol.u.assign(r + 1, G{});
  sol.v.assign(r + 1, G{});
  auto& u = sol.u;
  auto& v = sol.v;
  std::vector<std::size_t> p(r + 1, 0), way(r + 1, 0);
  std::vector<G> minv(r + 1);
  std::vector<char> reached(r + 1), used(r + 1);

  for (std::size_t i = 1; i <= r; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(reached.begin(), reached.end(), 0);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      std::size_t j1 = 0;
      std::optional<G> delta;
      for (std::size_t j = 1; j <= r; ++j) {
        if (used[j]) continue;
        if (c.has(i0 - 1, j - 1)) {
          G cur = c.at(i0 - 1, j - 1) - u[i0] - v[j];
          if (!reached[j] || cur < minv[j]) {
            minv[j] = cur;
            reached[j] = 1;
            way[j] = j0;
          }
        }
        if (reached[j] && (!delta || minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!delta) return sol;  // no augmenting path: no perfect assignment
      for (std::size_t j = 0; j <= r; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (reached[j]) {
          minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  sol.feasible = true;
  sol.perm.assign(r, 0);
  for (std::size_t j = 1; j <= r; ++j) sol.perm[p[j] - 1] = j - 1;
  return sol;
}

// Another optimum exists iff some cycle i_1 -> i_2 -> ... -> i_1 uses tight
// arcs (i_t, perm[i_{t+1}]). Returns the rotated permutation if found.
template <class G>
std::optional<std::vector<std::size_t>> find_alternative(const CostMatrix<G>& c,
                                                        const HungarianSolution<G>& sol) {
  const std::size_t r = c.r;
  std::vector<std::size_t> owner(r);
  for (std::size_t i = 0; i < r; ++i) owner[sol.perm[i]] = i;

  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (j != sol.perm[i] && c.has(i, j) && c.at(i, j) - sol.u[i + 1] - sol.v[j + 1] == G{})
        adj[i].push_back(owner[j]);

  // Iterative DFS; colour 1 = on stack, 2 = done.
  std::vector<int> colour(r, 0);
  std::vector<std::size_t> parent(r, 0), next(r, 0);
  for (std::size_t root = 0; root < r; ++root) {
    if (colour[root] != 0) continue;
    std::vector<std::size_t> stack{root};
    colour[root] = 1;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      if (next[x] < adj[x].size()) {
        const std::size_t y = adj[x][next[x]++];
        if (colour[y] == 0) {
          colour[y] = 1;
          parent[y] = x;
          stack.push_back(y);
        } else if (colour[y] == 1) {
          // Cycle y -> ... -> x -> y: each row takes its successor's column.
          std::vector<std::size_t> alt = sol.perm;
          std::size_t cur = x;
          std::size_t succ = y;
          while (true) {
            alt[cur] = sol.perm[succ];
            if (cur == y) break;
            succ = cur;
            cur = parent[cur];
          }
          return alt;
        }
      } else {
        colour[x] = 2;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

template <class G>
AssignmentResult solve_with(const TropMatrix& w, const CostMatrix<G>& costs) {
  AssignmentResult res;
  const auto sol = hungarian(costs);
  if (!sol.feasible) return res;
  res.permutation = sol.perm;
  res.weight = assignment_weight(w, sol.perm);
  if (auto alt = find_alternative(costs, sol)) {
    res.unique = false;
    res.alternative = std::move(*alt);
  } else {
    res.unique = true;
  }
  return res;
}

std::optional<CostMatrix<IntEps>> integer_costs(const TropMatrix& w) {
  const std::size_t r = w.rows();
  std::int64_t lcm = 1;
  std::int64_t max_abs_num = 0;
  std::int64_t max_abs_eps = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Trop& x = w(i, j);
      if (x.is_neg_inf()) continue;
      const auto den = x.value().finite.denominator();
      const auto g = std::gcd(lcm, den);
      std::int64_t next = 0;
      if (__builtin_mul_overflow(lcm / g, den, &next)) return std::nullopt;
      lcm = next;
      max_abs_num = std::max(max_abs_num, std::abs(x.value().finite.numerator()));
      max_abs_eps = std::max(max_abs_eps, std::abs(x.value().eps_deg));
    }
  // Potentials stay within a few multiples of r * max|w|.
  const std::int64_t budget = (std::int64_t{1} << 58) / static_cast<std::int64_t>(4 * (r + 1));
  std::int64_t scaled_max = 0;
  if (__builtin_mul_overflow(max_abs_num, lcm, &scaled_max) || scaled_max > budget ||
      max_abs_eps > budget)
    return std::nullopt;

  CostMatrix<IntEps> c;
  c.r = r;
  c.cost.resize(r * r);
  c.present.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Trop& x = w(i, j);
      if (x.is_neg_inf()) continue;
      const auto& f = x.value().finite;
      c.cost[i * r + j] = IntEps{-(f.numerator() * (lcm / f.denominator())), -x.value().eps_deg};
      c.present[i * r + j] = 1;
    }
  return c;
}

CostMatrix<EpsVal> rational_costs(const TropMatrix& w) {
  const std::size_t r = w.rows();
  CostMatrix<EpsVal> c;
  c.r = r;
  c.cost.resize(r * r);
  c.present.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (w(i, j).is_neg_inf()) continue;
      c.cost[i * r + j] = -w(i, j).value();
      c.present[i * r + j] = 1;
    }
  return c;
}

}  // namespace

int permutation_parity(std::span<const std::size_t> perm) {
  std::vector<char> seen(perm.size(), 0);
  int parity = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      ++len;
    }
    if (len % 2 == 0) parity = -parity;
  }
  return parity;
}

Trop assignment_weight(const TropMatrix& w, std::span<const std::size_t> perm) {
  EpsVal total;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    const Trop& x = w(k, perm[k]);
    if (x.is_neg_inf()) return Trop::neg_inf();
    total += x.value();
  }
  return Trop(total);
}

AssignmentResult max_assignment(const TropMatrix& w) {
  if (!w.is_square()) fail(ErrorCode::DimensionMismatch, "assignment needs a square matrix");
  if (w.rows() == 0) return AssignmentResult{{}, Trop::unit(), true, {}};
  if (auto ic = integer_costs(w)) return solve_with(w, *ic);
  return solve_with(w, rational_costs(w));
}

AssignmentResult brute_force_assignment(const TropMatrix& w) {
  if (!w.is_square()) fail(ErrorCode::DimensionMismatch, "assignment needs a square matrix");
  const std::size_t r = w.rows();
  if (r > kBruteForceAssignmentLimit)
    fail(ErrorCode::SizeLimit, "brute-force assignment limited to r <= 8");
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  AssignmentResult best;
  std::size_t ties = 0;
  do {
    const Trop weight = assignment_weight(w, perm);
    if (weight.is_neg_inf()) continue;
    if (best.weight.is_neg_inf() || weight > best.weight) {
      best.weight = weight;
      best.permutation = perm;
      best.alternative.clear();
      ties = 1;
    } else if (weight == best.weight) {
      if (ties == 1) best.alternative = perm;
      ++ties;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best.unique = ties == 1;
  return best;
}

}  // namespace tropsolve
