#include "qimm/characters.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace qimm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (parts_[t] < 1) throw std::invalid_argument("partition parts must be positive");
    if (t > 0 && parts_[t] > parts_[t - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::two_row(int n, int k) {
  if (k < 0 || 2 * k > n) {
    throw std::invalid_argument("two-row partition (n-k,k) needs 0 <= k <= n/2");
  }
  std::vector<int> parts;
  if (n - k > 0) parts.push_back(n - k);
  if (k > 0) parts.push_back(k);
  return Partition(std::move(parts));
}

Partition Partition::hook(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("hook partition (k,1^(n-k)) needs 1 <= k <= n");
  std::vector<int> parts{k};
  parts.insert(parts.end(), static_cast<std::size_t>(n - k), 1);
  return Partition(std::move(parts));
}

Partition Partition::involution_type(int n, int j) {
  if (j < 0 || 2 * j > n) throw std::invalid_argument("cycle type 2^j 1^(n-2j) needs 0 <= 2j <= n");
  std::vector<int> parts(static_cast<std::size_t>(j), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(n - 2 * j), 1);
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(parts_[t]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex mn_mutex;
std::map<MnKey, Integer> mn_memo;

// lambda as parts, rho as cycle lengths in the order they are removed (largest first).
Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho) {
  if (rho.empty()) return lambda.empty() ? 1 : 0;
  MnKey key{lambda, rho};
  {
    std::lock_guard<std::mutex> lock(mn_mutex);
    if (auto it = mn_memo.find(key); it != mn_memo.end()) return it->second;
  }
  const int r = rho.front();
  const std::vector<int> rest(rho.begin() + 1, rho.end());
  const int m = static_cast<int>(lambda.size());
  // beta numbers: distinct, strictly decreasing
  std::vector<int> beta(lambda.size());
  for (int t = 0; t < m; ++t) beta[static_cast<std::size_t>(t)] = lambda[static_cast<std::size_t>(t)] + (m - 1 - t);

  Integer total = 0;
  for (std::size_t t = 0; t < beta.size(); ++t) {
    const int from = beta[t];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // leg length = number of beads strictly between the two positions
    int between = 0;
    for (int b : beta) {
      if (b > to && b < from) ++between;
    }
    std::vector<int> moved = beta;
    moved[t] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> shape;
    for (int s = 0; s < m; ++s) {
      int part = moved[static_cast<std::size_t>(s)] - (m - 1 - s);
      if (part > 0) shape.push_back(part);
    }
    Integer sub = mn_rec(shape, rest);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  std::lock_guard<std::mutex> lock(mn_mutex);
  mn_memo.emplace(std::move(key), total);
  return total;
}

std::mutex two_row_mutex;
std::map<std::tuple<int, int, int>, Integer> two_row_memo;

// Convention: zero when (n-k, k) is not a partition.
Integer two_row_rec(int n, int k, int j) {
  if (k < 0 || 2 * k > n) return 0;
  if (n == 0) return 1;
  auto key = std::make_tuple(n, k, j);
  {
    std::lock_guard<std::mutex> lock(two_row_mutex);
    if (auto it = two_row_memo.find(key); it != two_row_memo.end()) return it->second;
  }
  Integer value;
  if (n - 2 * j >= 1) {
    // strip a fixed point
    value = two_row_rec(n - 1, k, j) + two_row_rec(n - 1, k - 1, j);
  } else {
    // all cycles are transpositions: strip a domino
    const int a = n - k;
    const int b = k;
    value = two_row_rec(n - 2, k, j - 1) + two_row_rec(n - 2, k - 2, j - 1);
    if (a == b) value -= two_row_rec(n - 2, k - 1, j - 1);
  }
  std::lock_guard<std::mutex> lock(two_row_mutex);
  two_row_memo.emplace(key, value);
  return value;
}

Integer divide_by_power_of_two(const Integer& sum, int i, const std::string& context) {
  Integer divisor = 1;
  divisor <<= static_cast<mp_bitcnt_t>(i);
  if (sum % divisor != 0) {
    throw std::logic_error("inexact division by 2^" + std::to_string(i) + " in alpha " + context +
                           "; character values are wrong");
  }
  return sum / divisor;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

Integer mn_character(const Partition& lambda, const CycleType& rho) {
  if (lambda.size() != rho.size()) {
    throw std::invalid_argument("character needs |lambda| = |rho|, got " + std::to_string(lambda.size()) + " and " +
                                std::to_string(rho.size()));
  }
  return mn_rec(lambda.parts(), rho.parts());
}

Integer two_row_char(int n, int k, int j) {
  if (n < 0 || k < 0 || 2 * k > n || j < 0 || 2 * j > n) {
    throw std::invalid_argument("two_row_char needs 0 <= k, j <= n/2");
  }
  return two_row_rec(n, k, j);
}

std::vector<Integer> involution_characters(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(n / 2) + 1);
  for (int j = 0; 2 * j <= n; ++j) out.push_back(mn_character(lambda, Partition::involution_type(n, j)));
  return out;
}

Integer alpha(int n, const Partition& lambda, int i) {
  if (lambda.size() != n) throw std::invalid_argument("alpha needs lambda to partition n");
  if (i < 0 || 2 * i > n) throw std::invalid_argument("alpha needs 0 <= i <= n/2");
  Integer sum = 0;
  for (int j = 0; j <= i; ++j) sum += binomial(i, j) * mn_character(lambda, Partition::involution_type(n, j));
  return divide_by_power_of_two(sum, i, "(n=" + std::to_string(n) + ", lambda=" + lambda.to_string() + ")");
}

Integer alpha_two_row(int n, int k, int i) {
  if (k < 0 || 2 * k > n || i < 0 || 2 * i > n) return 0;
  Integer sum = 0;
  for (int j = 0; j <= i; ++j) sum += binomial(i, j) * two_row_char(n, k, j);
  return divide_by_power_of_two(sum, i, "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
}

AlphaTable::AlphaTable(int n, std::vector<std::vector<Integer>> rows) : n_(n), rows_(std::move(rows)) {
  const std::size_t h = static_cast<std::size_t>(n / 2) + 1;
  if (rows_.size() != h) throw std::invalid_argument("alpha table needs floor(n/2)+1 rows");
  for (const auto& row : rows_) {
    if (row.size() != h) throw std::invalid_argument("alpha table needs floor(n/2)+1 columns");
  }
}

Integer AlphaTable::at(int k, int i) const {
  if (k < 0 || i < 0 || k > half() || i > half()) return 0;
  return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

Integer trinomial(int l, int k) {
  if (l < 0) return 0;
  return coeff_or_zero(quadratic_power_coeffs(static_cast<unsigned>(l), 1), k);
}

AlphaTable alpha_table(int n) {
  if (n < 0) throw std::invalid_argument("alpha_table needs n >= 0");
  AlphaTable table(0, {{Integer(1)}});
  for (int m = 1; m <= n; ++m) {
    const int h = m / 2;
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(h) + 1,
                                           std::vector<Integer>(static_cast<std::size_t>(h) + 1));
    for (int i = 0; i <= (m - 1) / 2; ++i) {
      for (int k = 0; k <= h; ++k) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = table.at(k, i) + table.at(k - 1, i);
      }
    }
    if (m % 2 == 0) {
      auto p = quadratic_power_coeffs(static_cast<unsigned>(h), 1);
      for (int k = 0; k <= h; ++k) {
        rows[static_cast<std::size_t>(h)][static_cast<std::size_t>(k)] = coeff_or_zero(p, k) - coeff_or_zero(p, k - 1);
      }
    }
    table = AlphaTable(m, std::move(rows));
  }
  return table;
}

AlphaTable alpha_table_direct(int n) {
  if (n < 0) throw std::invalid_argument("alpha_table_direct needs n >= 0");
  const int h = n / 2;
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(h) + 1,
                                         std::vector<Integer>(static_cast<std::size_t>(h) + 1));
  for (int i = 0; i <= h; ++i) {
    for (int k = 0; k <= h; ++k) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = alpha(n, Partition::two_row(n, k), i);
    }
  }
  return AlphaTable(n, std::move(rows));
}

Integer alpha_from_polynomial(int n, int k, int i) {
  if (i < 0 || 2 * i > n) throw std::invalid_argument("alpha_from_polynomial needs 0 <= i <= n/2");
  auto p = binomial_trinomial_coeffs(static_cast<unsigned>(n - 2 * i), static_cast<unsigned>(i));
  return coeff_or_zero(p, k) - coeff_or_zero(p, k - 1);
}

LastTable last_table_trinomial(int l_max) {
  if (l_max < 0) throw std::invalid_argument("last table needs l_max >= 0");
  LastTable table;
  for (int l = 0; l <= l_max; ++l) {
    auto p = quadratic_power_coeffs(static_cast<unsigned>(l), 1);
    std::vector<Integer> row;
    for (int k = 0; k <= l; ++k) row.push_back(coeff_or_zero(p, k) - coeff_or_zero(p, k - 1));
    table.push_back(std::move(row));
  }
  return table;
}

LastTable last_table_recursive(int l_max) {
  if (l_max < 0) throw std::invalid_argument("last table needs l_max >= 0");
  LastTable table{{Integer(1)}};
  if (l_max >= 1) table.push_back({Integer(1), Integer(0)});
  for (int l = 2; l <= l_max; ++l) {
    std::vector<Integer> row;
    for (int k = 0; k <= l; ++k) {
      // At k = l the term last_{l-1,l} is read as the successive difference
      // p_{l-1,l} - p_{l-1,l-1} = -last_{l-1,l-1}, not as zero.
      Integer above = k == l ? Integer(-last_at(table, l - 1, l - 1)) : last_at(table, l - 1, k);
      row.push_back(above + last_at(table, l - 1, k - 1) + last_at(table, l - 1, k - 2));
    }
    table.push_back(std::move(row));
  }
  return table;
}

LastTable last_table(int l_max) {
  LastTable by_recursion = last_table_recursive(l_max);
  if (by_recursion != last_table_trinomial(l_max)) {
    throw std::logic_error("last table: trinomial differences disagree with the three-term recursion");
  }
  return by_recursion;
}

Integer last_at(const LastTable& table, int l, int k) {
  if (l < 0 || static_cast<std::size_t>(l) >= table.size()) {
    throw std::out_of_range("last table row " + std::to_string(l) + " not computed");
  }
  if (k < 0 || k > l) return 0;
  return table[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

std::string alpha_table_csv(const AlphaTable& table) {
  std::string out = "i";
  for (int k = 0; k <= table.half(); ++k) out += ",k=" + std::to_string(k);
  out += "\n";
  for (int i = 0; i <= table.half(); ++i) {
    out += std::to_string(i);
    for (int k = 0; k <= table.half(); ++k) out += "," + table.at(k, i).get_str();
    out += "\n";
  }
  return out;
}

std::string last_table_csv(const LastTable& table) {
  const int l_max = static_cast<int>(table.size()) - 1;
  std::string out = "l";
  for (int k = 0; k <= l_max; ++k) out += ",k=" + std::to_string(k);
  out += "\n";
  for (int l = 0; l <= l_max; ++l) {
    out += std::to_string(l);
    for (int k = 0; k <= l_max; ++k) {
      out += ",";
      if (k <= l) out += last_at(table, l, k).get_str();
    }
    out += "\n";
  }
  return out;
}

nlohmann::json alpha_table_json(const AlphaTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return {{"n", table.n()}, {"rows", std::move(rows)}};
}

nlohmann::json last_table_json(const LastTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    rows.push_back(std::move(r));
  }
  return {{"l_max", static_cast<int>(table.size()) - 1}, {"rows", std::move(rows)}};
}

}  // namespace qimm
