#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "delgt/bitcore.hpp"

namespace delgt {

/// Length of a longest common subsequence, by the standard quadratic dynamic
/// program.
std::size_t lcs(const BitVec& x, const BitVec& y);

/// Positions (in x and in y) of one longest common subsequence.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> lcs_alignment(const BitVec& x,
                                                                            const BitVec& y);

/// Deletion distance n - lcs(x,y) - 1. Signed: equal strings give -1.
/// Callers compare against >= Delta thresholds only.
long long deletion_distance(const BitVec& x, const BitVec& y);

/// Two-pointer greedy deciding whether some subsequence of z of length
/// len(y), obtained by deleting at most `budget` symbols of z, is covered by
/// y elementwise. len(z) < len(y) is a contract violation; a length gap
/// beyond the budget is a definite non-certificate and returns false.
bool check_coverage(const BitVec& y, const BitVec& z, long long budget);

/// Same decision, but on success returns the kept z-positions (exactly
/// len(y) of them, increasing). Used to extract deletion-set witnesses.
std::optional<std::vector<std::size_t>> check_coverage_kept(const BitVec& y, const BitVec& z,
                                                            long long budget);

/// True iff for every pair of deletion sets T1, T2 of size exactly `delta`,
/// the truncated pair (x minus T1, y minus T2) retains a position p with
/// x'[p] = 1 and y'[p] = 0. Enumerates T1 only; for each fixed x' the
/// existence of a T2 avoiding all 1-0 matches reduces, via the complement
/// identity x' <= y'  iff  ~y' <= ~x', to check_coverage(~x', ~y, delta).
bool adel_at_least(const BitVec& x, const BitVec& y, std::size_t delta);

/// Witness form of the same predicate: a pair (T1, T2) with
/// (x minus T1) <= (y minus T2), or nullopt when no such pair exists.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> find_adel_violation(
    const BitVec& x, const BitVec& y, std::size_t delta);

/// Largest Delta such that adel_at_least(x, y, d) holds for all d <= Delta.
/// nullopt when the predicate already fails at zero deletions (x <= y).
std::optional<std::size_t> adel_distance(const BitVec& x, const BitVec& y);

}  // namespace delgt
