#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qimm/exactpoly.hpp"

namespace qimm {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument on non-positive or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }

  /// (n - k, k), dropping a zero second part.
  static Partition two_row(int n, int k);
  /// (k, 1^(n-k)) for 1 <= k <= n.
  static Partition hook(int n, int k);
  /// 2^j 1^(n-2j).
  static Partition involution_type(int n, int j);
  static Partition parse(std::string_view text);

  /// "3,1"; the empty partition prints as "".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A cycle type is a partition of n read as a multiset of cycle lengths.
using CycleType = Partition;

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// chi_lambda(rho) by border-strip removal, memoized on (shape, remaining cycles).
Integer mn_character(const Partition& lambda, const CycleType& rho);

/// chi_(n-k,k) at cycle type 2^j 1^(n-2j), via the one-box recursion
/// chi_{n,k} = chi_{n-1,k} + chi_{n-1,k-1} (domino removal when there is no fixed point).
Integer two_row_char(int n, int k, int j);

/// chi_lambda(2^j 1^(n-2j)) for j = 0..floor(n/2).
std::vector<Integer> involution_characters(const Partition& lambda);

/// (1 / 2^i) * sum_j C(i, j) chi_lambda(2^j 1^(n-2j)); throws std::logic_error
/// if the division is not exact.
Integer alpha(int n, const Partition& lambda, int i);
/// alpha for lambda = (n - k, k); zero when k is out of 0..floor(n/2).
Integer alpha_two_row(int n, int k, int i);

/// alpha_{n,k,i} for 0 <= k, i <= floor(n/2); zero outside that range.
class AlphaTable {
public:
  AlphaTable(int n, std::vector<std::vector<Integer>> rows);

  int n() const { return n_; }
  int half() const { return n_ / 2; }
  /// alpha_{n,k,i}, zero when k or i lies outside 0..floor(n/2) (or k < 0).
  Integer at(int k, int i) const;
  /// rows()[i][k]
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }

  friend bool operator==(const AlphaTable&, const AlphaTable&) = default;

private:
  int n_;
  std::vector<std::vector<Integer>> rows_;
};

/// Built by the Pascal-type recursion alpha_{n,k,i} = alpha_{n-1,k,i} + alpha_{n-1,k-1,i}
/// for i <= floor((n-1)/2), with the last row of even n from trinomial differences.
AlphaTable alpha_table(int n);
/// Every entry from the character-sum definition.
AlphaTable alpha_table_direct(int n);

/// alpha_{n,k,i} as p_{n,i,k} - p_{n,i,k-1}, where p_{n,i,k} is the
/// coefficient of x^k in (1+x)^(n-2i) (1+x+x^2)^i.
Integer alpha_from_polynomial(int n, int k, int i);

/// Coefficient of x^k in (1+x+x^2)^l; zero outside 0..2l.
Integer trinomial(int l, int k);

/// Triangular table last[l][k] = alpha_{2l,k,l} for 0 <= k <= l <= l_max.
using LastTable = std::vector<std::vector<Integer>>;

LastTable last_table_trinomial(int l_max);
/// last_{l,k} = last_{l-1,k} + last_{l-1,k-1} + last_{l-1,k-2} from the rows
/// l = 0, 1. The diagonal entry needs last_{l-1,l} = -last_{l-1,l-1}; with
/// a zero there the recursion overshoots (it would give last_{3,3} = 2).
LastTable last_table_recursive(int l_max);
/// Both constructions; throws std::logic_error if they disagree.
LastTable last_table(int l_max);
/// last_{l,k}, zero when k < 0 or k > l.
Integer last_at(const LastTable& table, int l, int k);

std::string alpha_table_csv(const AlphaTable& table);
std::string last_table_csv(const LastTable& table);
nlohmann::json alpha_table_json(const AlphaTable& table);
nlohmann::json last_table_json(const LastTable& table);

}  // namespace qimm
