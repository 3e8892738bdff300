#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

/// Optimal perfect assignment of an r x r weight matrix over EpsVal.
///
/// permutation[k] is the column matched to row k. When the weight is -inf
/// there is no perfect assignment made of finite entries; the permutation is
/// then empty and unique is false. When the optimum is finite but attained
/// more than once, alternative holds a second optimal permutation.
struct AssignmentResult {
  std::vector<std::size_t> permutation;
  Trop weight;
  bool unique = false;
  std::vector<std::size_t> alternative;
};

/// Hungarian method with EpsVal-valued potentials; -inf entries are missing
/// arcs. Uniqueness is certified from the optimal potentials: a second
/// optimum exists iff the tight-arc alternating digraph has a cycle.
AssignmentResult max_assignment(const TropMatrix& w);

/// Exhaustive permutation enumeration, r <= 8 (SizeLimit otherwise). Same
/// contract as max_assignment; on ties the permutation is the
/// lexicographically first optimum.
AssignmentResult brute_force_assignment(const TropMatrix& w);

inline constexpr std::size_t kBruteForceAssignmentLimit = 8;

/// +1 for an even permutation, -1 for an odd one.
int permutation_parity(std::span<const std::size_t> perm);

/// Sum of w(k, perm[k]); -inf if any entry is -inf.
Trop assignment_weight(const TropMatrix& w, std::span<const std::size_t> perm);

}  // namespace tropsolve
