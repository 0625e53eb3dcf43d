#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qimm/exactpoly.hpp"

namespace qimm {

/// Lattice path over the steps U (+1), D (-1) and H (0), starting at height 0.
class LatticePath {
public:
  LatticePath() = default;
  /// Throws std::invalid_argument on characters outside "UDH".
  explicit LatticePath(std::string steps);

  const std::string& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  /// Height after each step; heights()[t] follows step t.
  std::vector<int> heights() const;
  int final_height() const;
  int min_height() const;
  int count(char step) const;

  bool is_nonnegative() const { return min_height() >= 0; }
  bool is_ud() const { return count('H') == 0; }
  /// Some H step starts (and ends) at height 0.
  bool has_h_at_zero() const;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

private:
  std::string steps_;
};

/// NLP: nonnegative UD paths. UHD: unrestricted UHD paths. GRP: nonnegative
/// UHD paths with no H step at height 0 (generalized Riordan paths).
enum class PathClass { nlp, uhd, grp };

std::string to_string(PathClass cls);
PathClass parse_path_class(std::string_view text);
bool belongs_to(const LatticePath& path, PathClass cls);

/// Every path of the class with the given length and final height, in
/// lexicographic order. Throws std::invalid_argument on an unreachable or
/// parity-inconsistent endpoint.
std::vector<LatticePath> enumerate_paths(PathClass cls, int length, int end_height);

enum class Direction { forward, inverse };

/// Callan's map from UHD(l, h) \ GRP(l, h) onto UHD(l, h + 1).
///
/// forward: split P = S X R where R is the longest GRP suffix starting on the
/// axis and X is the step before it. X = H gives flip(S) U R^{+1}; X = U gives
/// flip(S) H R^{+1}. inverse: split at level 1 instead and swap the roles of U
/// and H. flip exchanges U and D and leaves H alone.
LatticePath callan_bijection(Direction direction, const LatticePath& path);

/// forward: U -> UU, D -> DD, H -> DU on a GRP path. inverse: reads step pairs
/// back, rejecting UD pairs (odd-height peaks) and non-GRP preimages.
LatticePath riordan_double(Direction direction, const LatticePath& path);

struct Peak {
  int x = 0;
  int y = 0;
  bool odd() const { return y % 2 != 0; }
  friend bool operator==(const Peak&, const Peak&) = default;
};

/// Points where a U step is immediately followed by a D step. UD paths only.
std::vector<Peak> peak_profile(const LatticePath& path);

/// A UD path whose odd-height peaks all have (x + 1) / 2 <= allowed_intervals:
/// the U,D pair of an odd peak at x occupies the interval ((x-1), (x+1)),
/// which is interval s_d with d = (x + 1) / 2.
bool odd_peaks_within(const LatticePath& path, int allowed_intervals);

/// Nonnegative UD paths with n steps and k D steps whose odd-height peaks lie
/// in intervals s_1..s_{floor(n/2) - i}. Counted by enumeration.
Integer count_restricted(int n, int k, int i);

/// Two-row standard Young tableau: row1 and row2 partition 1..n.
class TwoRowSyt {
public:
  /// Throws std::invalid_argument unless the rows are increasing, partition
  /// 1..n, and columns increase (row2[t] > row1[t]).
  TwoRowSyt(std::vector<int> row1, std::vector<int> row2);

  const std::vector<int>& row1() const { return row1_; }
  const std::vector<int>& row2() const { return row2_; }
  int n() const { return static_cast<int>(row1_.size() + row2_.size()); }

  /// Positions i with i in row 1 and i + 1 in row 2.
  std::vector<int> descents() const;
  /// First-row minus second-row cell count among the entries 1..i.
  int row_diff(int i) const;

  friend bool operator==(const TwoRowSyt&, const TwoRowSyt&) = default;

private:
  std::vector<int> row1_;
  std::vector<int> row2_;
};

/// Step i is U when i sits in the first row.
LatticePath syt_to_path(const TwoRowSyt& syt);
/// Inverse of syt_to_path; the path must be a nonnegative UD path.
TwoRowSyt path_to_syt(const LatticePath& path);

/// All SYT of shape (n - k, k), built by choosing the second row and checking columns.
std::vector<TwoRowSyt> enumerate_two_row_syt(int n, int k);

struct ProbabilityReport {
  int n = 0;
  int i = 0;
  /// (k, count_restricted(n,k,i) / |NLP(n, n-2k)|) for k = 0..floor(n/2).
  std::vector<std::pair<int, Rational>> probabilities;
  bool monotone = false;
};

/// Probability that a uniform path in NLP(n, n-2k) has its odd-height peaks in
/// the allowed intervals, with a weakly-decreasing-in-k verdict compared by
/// cross-multiplication. Requires i <= floor((n-1)/2).
ProbabilityReport probability_monotonicity(int n, int i);

struct IdentityCheck {
  std::string name;
  int l = 0;
  int k = 0;
  int i = 0;
  Integer lhs;
  Integer rhs;
  bool holds() const { return lhs == rhs; }
};

/// Catalan-Riordan convolution C_l = sum_t C(l,t) R_{l-t} ("rem20") and the
/// binomial-Riordan decomposition alpha_{2l,k,i} = sum_t C(l-i,t) alpha_{2l-2t,k-t,l-t}
/// ("lem17-conv") for every l <= l_max and 0 <= k, i <= l.
std::vector<IdentityCheck> sequence_identities(int l_max);

}  // namespace qimm
