#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qimm/exactpoly.hpp"
#include "qimm/verdict.hpp"

namespace qimm {

/// Parameter caps for the verification sweeps.
struct SweepLimits {
  /// Tree sweeps visit every labeled tree on 2..tree_n_max vertices.
  int tree_n_max = 7;
  /// Hook chain over all labeled trees up to this size.
  int hook_n_max = 6;
  /// Brute-force oracle over all labeled trees up to this size.
  int oracle_n_max = 6;
  /// Extra seeded random trees on tree_n_max + 1 vertices for the two-row chain.
  int random_trees = 0;
  std::uint64_t seed = 1;
  std::vector<Rational> q_grid;

  int alpha_n_max = 40;
  int last_l_max = 40;
  int general_sr_l_max = 12;
  int general_sr_param_max = 4;

  int path_n_max = 14;
  int callan_l_max = 8;
  int doubling_l_max = 7;
  int identities_l_max = 12;

  /// Defaults for `verify all`; `deep` raises the tree and path caps.
  static SweepLimits defaults(bool deep);
};

/// Claims "thm2" and "a0-identity" over every labeled tree (plus random ones).
/// Trees sharing the same matching weights have identical immanants, so each
/// weight class is checked once; params carry a representative tree literal
/// and the number of labeled trees in the class.
std::vector<InequalityVerdict> sweep_two_row(const SweepLimits& limits);
/// Claims "thm1-weak" and "thm1-strong", grouped by weight class as above.
std::vector<InequalityVerdict> sweep_hook(const SweepLimits& limits);
/// Claim "oracle-equivalence": matching-based immanant equals the permutation
/// sum for each labeled tree and each partition; one verdict per (n, shape).
std::vector<InequalityVerdict> sweep_oracle(const SweepLimits& limits);
/// Claims "lem6", "lem9", "cor10", "lem11", "lem13" and "lem22".
std::vector<InequalityVerdict> sweep_alpha_ratios(const SweepLimits& limits);
/// Claim "rem12" for every (s, r) in 1..param_max and l <= general_sr_l_max.
std::vector<InequalityVerdict> sweep_general_sr(const SweepLimits& limits);
/// Claims "lem15-bij", "lem16-bij", "lem18" and "lem19".
std::vector<InequalityVerdict> sweep_paths(const SweepLimits& limits);
/// Claims "lem20" (paths) and "lem21" (tableaux).
std::vector<InequalityVerdict> sweep_probability(const SweepLimits& limits);
/// Claims "lem17-conv" and "rem20".
std::vector<InequalityVerdict> sweep_identities(const SweepLimits& limits);

struct SweepGroup {
  std::string name;
  std::vector<std::string> claims;
  std::function<std::vector<InequalityVerdict>(const SweepLimits&)> run;
};

/// two-row, hook, oracle, alpha-ratios, general-sr, paths, probability, identities.
const std::vector<SweepGroup>& sweep_groups();

/// Every claim id emitted by the sweeps, in registry order.
std::vector<std::string> all_claim_ids();

/// Runs the named group, or every group for "all"; output is canonicalized.
/// Throws std::invalid_argument on an unknown name.
std::vector<InequalityVerdict> run_sweep(const std::string& group, const SweepLimits& limits);

}  // namespace qimm
