#pragma once

#include <map>
#include <string>
#include <vector>

#include "qimm/characters.hpp"
#include "qimm/exactpoly.hpp"
#include "qimm/tree.hpp"
#include "qimm/verdict.hpp"

namespace qimm {

inline constexpr int kMaxBruteForceN = 9;

/// Sum of prod_i M[i, pi(i)] over all permutations pi of each cycle type.
/// Enumerates all n! permutations; throws std::invalid_argument for n > kMaxBruteForceN.
std::map<CycleType, RatPoly> permutation_sums_by_cycle_type(const PolyMatrix& m);

/// Raw immanant sum_pi chi_lambda(pi) prod_i M[i, pi(i)] by full permutation enumeration.
RatPoly immanant_bruteforce(const PolyMatrix& m, const Partition& lambda);

/// Raw immanant of a tree's q-Laplacian from its matching weights:
/// only involutions whose transpositions are tree edges contribute, so the
/// immanant is sum_j chi_lambda(2^j 1^(n-2j)) c_j(q).
RatPoly immanant_tree(const Tree& tree, const Partition& lambda);
RatPoly immanant_from_weights(const std::vector<RatPoly>& weights, const std::vector<Integer>& involution_chars);

/// Divides by chi_lambda(id).
RatPoly normalize_immanant(const RatPoly& raw, const Partition& lambda);

enum class ImmanantAlgorithm { bruteforce, matching };

std::string to_string(ImmanantAlgorithm algorithm);

struct ImmanantReport {
  std::string tree_id;
  Partition partition;
  RatPoly normalized;
  ImmanantAlgorithm algorithm = ImmanantAlgorithm::matching;
};

ImmanantReport compute_immanant(const Tree& tree, const Partition& lambda, ImmanantAlgorithm algorithm);
nlohmann::json to_json(const ImmanantReport& report);

/// a_i(q) for i = 0..floor(n/2), recovered from c_j = sum_{i>=j} C(i,j) a_i
/// by binomial inversion a_i = sum_{j>=i} (-1)^(j-i) C(j,i) c_j.
std::vector<RatPoly> extract_a_coeffs(const Tree& tree);
std::vector<RatPoly> a_coeffs_from_weights(const std::vector<RatPoly>& weights);

/// Normalized two-row immanant rebuilt as sum_i a_i 2^i alpha_{n,k,i} / alpha_{n,k,0}.
RatPoly two_row_from_a_coeffs(const std::vector<RatPoly>& a_coeffs, const AlphaTable& table, int k);

/// Normalized two-row immanants for k = 0..floor(n/2).
std::vector<RatPoly> two_row_immanants(const Tree& tree);
/// Normalized hook immanants; index k - 1 holds hook_k for k = 1..n.
std::vector<RatPoly> hook_immanants(const Tree& tree);

/// Claim "thm2": for k = 2..floor(n/2), witness = TwoRow_imm_{k-1} - TwoRow_imm_k,
/// holds iff that polynomial is even in q with nonnegative coefficients.
/// Trees with n < 5 are reported as degenerate (P_4 fails at k = 2).
std::vector<InequalityVerdict> check_two_row_chain(const Tree& tree);

/// -10, -19/2, ..., 10.
std::vector<Rational> default_q_grid();
/// "a:b:step" with rational fields, or a comma list of rationals.
std::vector<Rational> parse_q_grid(const std::string& spec);

/// Claims "thm1-weak" (hook_{k-1} <= hook_k) and "thm1-strong"
/// (hook_{k-1} + (q^2-1)/(k-1) <= (k-2)/(k-1) hook_k), each evaluated exactly at
/// every grid point, for k = 2..n.
std::vector<InequalityVerdict> check_hook_chain(const Tree& tree, const std::vector<Rational>& q_grid);

/// Ratio claims on alpha_{n,k,i}, all as cross-multiplied integer comparisons:
/// "lem6" (n >= 2, i < floor(n/2)), "lem13" (n >= 5, all i), and for even
/// n = 2l the last-row claims of check_last_row_claims(l).
std::vector<InequalityVerdict> check_alpha_ratios(int n);

/// "lem9" (l >= 2; l = 2 reported degenerate), "cor10" (l >= 3, all 1 <= r <= k)
/// and "lem11" (l >= 3), for 1 <= k <= l - 1.
std::vector<InequalityVerdict> check_last_row_claims(int l);

/// Claim "rem12" for k = 0..l-1:
/// (a_{l,k+1,s} - a_{l,k,s}) / (a_{l,k+1,r+s} - a_{l,k,r+s})
///   <= (a_{l,k,s} - a_{l,k-1,s}) / (a_{l,k,r+s} - a_{l,k-1,r+s}),
/// where a_{l,k,s} is the coefficient of x^k in (1 + s x + x^2)^l.
/// Non-positive denominators mark the verdict degenerate.
std::vector<InequalityVerdict> check_general_sr(int l, int s, int r);

}  // namespace qimm
