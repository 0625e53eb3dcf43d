#include "qimm/immanant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qimm {

std::map<CycleType, RatPoly> permutation_sums_by_cycle_type(const PolyMatrix& m) {
  const int n = m.n();
  if (n > kMaxBruteForceN) {
    throw std::invalid_argument("brute-force immanant is capped at n <= " + std::to_string(kMaxBruteForceN) +
                                ", got n=" + std::to_string(n));
  }
  std::map<CycleType, RatPoly> sums;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n));
  do {
    bool vanishes = false;
    for (int i = 0; i < n && !vanishes; ++i) vanishes = m(i, perm[static_cast<std::size_t>(i)]).is_zero();
    if (vanishes) continue;
    RatPoly product = RatPoly::constant(1);
    for (int i = 0; i < n; ++i) product *= m(i, perm[static_cast<std::size_t>(i)]);

    std::fill(seen.begin(), seen.end(), false);
    std::vector<int> cycles;
    for (int start = 0; start < n; ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      int len = 0;
      for (int v = start; !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<>());
    sums[CycleType(std::move(cycles))] += product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sums;
}

RatPoly immanant_bruteforce(const PolyMatrix& m, const Partition& lambda) {
  if (lambda.size() != m.n()) {
    throw std::invalid_argument("immanant needs |lambda| equal to the matrix dimension");
  }
  RatPoly total;
  for (const auto& [type, sum] : permutation_sums_by_cycle_type(m)) {
    total += sum * Rational(mn_character(lambda, type));
  }
  return total;
}

RatPoly immanant_from_weights(const std::vector<RatPoly>& weights, const std::vector<Integer>& involution_chars) {
  if (weights.size() != involution_chars.size()) {
    throw std::invalid_argument("matching weights and involution characters disagree on n");
  }
  RatPoly total;
  for (std::size_t j = 0; j < weights.size(); ++j) total += weights[j] * Rational(involution_chars[j]);
  return total;
}

RatPoly immanant_tree(const Tree& tree, const Partition& lambda) {
  if (lambda.size() != tree.n()) throw std::invalid_argument("immanant needs |lambda| = n");
  return immanant_from_weights(matching_weights(tree), involution_characters(lambda));
}

RatPoly normalize_immanant(const RatPoly& raw, const Partition& lambda) {
  Integer dim = mn_character(lambda, Partition::involution_type(lambda.size(), 0));
  return raw * Rational(Integer(1), dim);
}

std::string to_string(ImmanantAlgorithm algorithm) {
  return algorithm == ImmanantAlgorithm::bruteforce ? "bruteforce" : "matching";
}

ImmanantReport compute_immanant(const Tree& tree, const Partition& lambda, ImmanantAlgorithm algorithm) {
  RatPoly raw = algorithm == ImmanantAlgorithm::bruteforce ? immanant_bruteforce(q_laplacian(tree), lambda)
                                                           : immanant_tree(tree, lambda);
  return {pruefer_literal(tree), lambda, normalize_immanant(raw, lambda), algorithm};
}

nlohmann::json to_json(const ImmanantReport& report) {
  return {{"tree", report.tree_id},
          {"partition", report.partition.to_string()},
          {"normalized", to_json(report.normalized)},
          {"text", report.normalized.to_string()},
          {"algorithm", to_string(report.algorithm)}};
}

std::vector<RatPoly> a_coeffs_from_weights(const std::vector<RatPoly>& weights) {
  const std::size_t top = weights.size();
  std::vector<RatPoly> a(top);
  for (std::size_t i = 0; i < top; ++i) {
    for (std::size_t j = i; j < top; ++j) {
      Integer coef = binomial(static_cast<long>(j), static_cast<long>(i));
      if ((j - i) % 2 == 1) coef = -coef;
      a[i] += weights[j] * Rational(coef);
    }
  }
  return a;
}

std::vector<RatPoly> extract_a_coeffs(const Tree& tree) { return a_coeffs_from_weights(matching_weights(tree)); }

RatPoly two_row_from_a_coeffs(const std::vector<RatPoly>& a_coeffs, const AlphaTable& table, int k) {
  RatPoly total;
  const Integer dim = table.at(k, 0);
  if (dim == 0) throw std::invalid_argument("two-row shape out of range");
  for (std::size_t i = 0; i < a_coeffs.size(); ++i) {
    Integer scale = table.at(k, static_cast<int>(i));
    scale <<= static_cast<mp_bitcnt_t>(i);
    total += a_coeffs[i] * Rational(scale, dim);
  }
  return total;
}

std::vector<RatPoly> two_row_immanants(const Tree& tree) {
  const int n = tree.n();
  auto weights = matching_weights(tree);
  std::vector<RatPoly> out;
  for (int k = 0; 2 * k <= n; ++k) {
    Partition shape = Partition::two_row(n, k);
    out.push_back(normalize_immanant(immanant_from_weights(weights, involution_characters(shape)), shape));
  }
  return out;
}

std::vector<RatPoly> hook_immanants(const Tree& tree) {
  const int n = tree.n();
  auto weights = matching_weights(tree);
  std::vector<RatPoly> out;
  for (int k = 1; k <= n; ++k) {
    Partition shape = Partition::hook(n, k);
    out.push_back(normalize_immanant(immanant_from_weights(weights, involution_characters(shape)), shape));
  }
  return out;
}

std::vector<InequalityVerdict> check_two_row_chain(const Tree& tree) {
  const int n = tree.n();
  const std::string id = pruefer_literal(tree);
  auto imm = two_row_immanants(tree);
  std::vector<InequalityVerdict> out;
  for (int k = 2; 2 * k <= n; ++k) {
    RatPoly diff = imm[static_cast<std::size_t>(k - 1)] - imm[static_cast<std::size_t>(k)];
    auto shape = is_even_nonneg(diff);
    InequalityVerdict v;
    v.claim = "thm2";
    v.params = {{"tree", id}, {"n", n}, {"k", k}};
    v.holds = shape.is_even && shape.coeffs_nonneg;
    v.witness = to_json(diff);
    v.detail = "TwoRow_imm_" + std::to_string(k - 1) + " - TwoRow_imm_" + std::to_string(k) + " = " +
               diff.to_string();
    if (!v.holds) {
      v.detail += shape.is_even ? " (negative coefficient)" : " (odd power present)";
    }
    if (n < 5) {
      v.degenerate = true;
      v.detail += " (n < 5)";
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rational> default_q_grid() {
  std::vector<Rational> grid;
  for (int t = -20; t <= 20; ++t) grid.emplace_back(t, 2);
  for (auto& g : grid) g.canonicalize();
  return grid;
}

std::vector<Rational> parse_q_grid(const std::string& spec) {
  std::vector<Rational> grid;
  if (spec.find(':') != std::string::npos) {
    auto first = spec.find(':');
    auto second = spec.find(':', first + 1);
    if (second == std::string::npos) throw std::invalid_argument("q grid range must be 'from:to:step'");
    Rational from = parse_rational(spec.substr(0, first));
    Rational to = parse_rational(spec.substr(first + 1, second - first - 1));
    Rational step = parse_rational(spec.substr(second + 1));
    if (step <= 0) throw std::invalid_argument("q grid step must be positive");
    if (to < from) throw std::invalid_argument("q grid range is empty");
    for (Rational q = from; q <= to; q += step) grid.push_back(q);
    return grid;
  }
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    grid.push_back(parse_rational(spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return grid;
}

namespace {

InequalityVerdict grid_verdict(std::string claim, nlohmann::json params, const RatPoly& diff,
                               const std::vector<Rational>& grid) {
  InequalityVerdict v;
  v.claim = std::move(claim);
  v.params = std::move(params);
  v.holds = true;
  Rational min_value;
  Rational argmin;
  bool first = true;
  for (const auto& q : grid) {
    Rational value = diff.eval(q);
    if (first || value < min_value) {
      min_value = value;
      argmin = q;
      first = false;
    }
    if (value < 0) v.holds = false;
  }
  auto shape = is_even_nonneg(diff);
  v.witness = {{"difference", to_json(diff)},
               {"grid_points", grid.size()},
               {"min_value", first ? "" : rational_to_fraction(min_value)},
               {"argmin", first ? "" : rational_to_fraction(argmin)},
               {"coeffwise_nonneg_in_q2", shape.is_even && shape.coeffs_nonneg}};
  v.detail = diff.to_string() + (v.holds ? " >= 0 on grid" : " < 0 at q=" + rational_to_string(argmin));
  return v;
}

}  // namespace

std::vector<InequalityVerdict> check_hook_chain(const Tree& tree, const std::vector<Rational>& q_grid) {
  const int n = tree.n();
  const std::string id = pruefer_literal(tree);
  auto hook = hook_immanants(tree);
  const RatPoly q2_minus_1{-1, 0, 1};
  std::vector<InequalityVerdict> out;
  for (int k = 2; k <= n; ++k) {
    const RatPoly& lower = hook[static_cast<std::size_t>(k - 2)];  // hook_{k-1}
    const RatPoly& upper = hook[static_cast<std::size_t>(k - 1)];  // hook_k
    nlohmann::json params = {{"tree", id}, {"n", n}, {"k", k}};
    out.push_back(grid_verdict("thm1-weak", params, upper - lower, q_grid));
    RatPoly strong = upper * Rational(k - 2, k - 1) - lower - q2_minus_1 * Rational(1, k - 1);
    out.push_back(grid_verdict("thm1-strong", params, strong, q_grid));
  }
  return out;
}

namespace {

enum class ZeroNumerators { allowed, degenerate };

// lhs_num / lhs_den <= rhs_num / rhs_den, cross-multiplied. Non-positive
// denominators are always degenerate. The last-row claims are stated for
// positive integers, so there a zero numerator is degenerate too.
InequalityVerdict ratio_le(std::string claim, nlohmann::json params, const Integer& lhs_num, const Integer& lhs_den,
                           const Integer& rhs_num, const Integer& rhs_den,
                           ZeroNumerators zeros = ZeroNumerators::allowed) {
  InequalityVerdict v = integer_le(std::move(claim), std::move(params), lhs_num * rhs_den, rhs_num * lhs_den);
  v.detail = lhs_num.get_str() + "/" + lhs_den.get_str() + " <= " + rhs_num.get_str() + "/" + rhs_den.get_str();
  if (lhs_den <= 0 || rhs_den <= 0) {
    v.degenerate = true;
    v.detail += " (non-positive denominator)";
  } else if (zeros == ZeroNumerators::degenerate && (lhs_num == 0 || rhs_num == 0)) {
    v.degenerate = true;
    v.detail += " (zero numerator)";
  }
  return v;
}

}  // namespace

std::vector<InequalityVerdict> check_last_row_claims(int l) {
  std::vector<InequalityVerdict> out;
  if (l < 2) return out;
  LastTable last = last_table(l);
  auto at = [&](int row, int k) { return last_at(last, row, k); };
  for (int k = 1; k <= l - 1; ++k) {
    // last_{l,k+1} / last_{l-1,k} <= last_{l,k} / last_{l-1,k-1}
    auto v = ratio_le("lem9", {{"l", l}, {"k", k}}, at(l, k + 1), at(l - 1, k), at(l, k), at(l - 1, k - 1),
                     ZeroNumerators::degenerate);
    if (l < 3 && !v.degenerate) {
      v.degenerate = true;
      v.detail += " (l < 3)";
    }
    out.push_back(std::move(v));
  }
  if (l < 3) return out;
  for (int k = 1; k <= l - 1; ++k) {
    for (int r = 1; r <= k; ++r) {
      // last_{l,k+1} / last_{l,k} <= last_{l-r,k+1-r} / last_{l-r,k-r}
      out.push_back(ratio_le("cor10", {{"l", l}, {"k", k}, {"r", r}}, at(l, k + 1), at(l, k), at(l - r, k + 1 - r),
                             at(l - r, k - r), ZeroNumerators::degenerate));
    }
    // last_{l,k+1} / (C(2l,k+1) - C(2l,k)) <= last_{l,k} / (C(2l,k) - C(2l,k-1))
    out.push_back(ratio_le("lem11", {{"l", l}, {"k", k}}, at(l, k + 1), binomial(2 * l, k + 1) - binomial(2 * l, k),
                           at(l, k), binomial(2 * l, k) - binomial(2 * l, k - 1),
                           ZeroNumerators::degenerate));
  }
  return out;
}

std::vector<InequalityVerdict> check_alpha_ratios(int n) {
  if (n < 2) throw std::invalid_argument("check_alpha_ratios needs n >= 2");
  AlphaTable table = alpha_table(n);
  const int h = n / 2;
  std::vector<InequalityVerdict> out;
  auto compare = [&](const std::string& claim, int k, int i) {
    // alpha_{n,k+1,i} / alpha_{n,k+1,0} <= alpha_{n,k,i} / alpha_{n,k,0}
    out.push_back(ratio_le(claim, {{"n", n}, {"k", k}, {"i", i}}, table.at(k + 1, i), table.at(k + 1, 0),
                           table.at(k, i), table.at(k, 0)));
  };
  for (int k = 0; k + 1 <= h; ++k) {
    for (int i = 0; i < h; ++i) compare("lem6", k, i);
    if (n >= 5) {
      for (int i = 0; i <= h; ++i) compare("lem13", k, i);
    }
  }
  if (n % 2 == 0) {
    auto last = check_last_row_claims(h);
    out.insert(out.end(), last.begin(), last.end());
  }
  return out;
}

std::vector<InequalityVerdict> check_general_sr(int l, int s, int r) {
  if (l < 1 || s < 1 || r < 1) throw std::invalid_argument("check_general_sr needs l, s, r >= 1");
  auto a_s = quadratic_power_coeffs(static_cast<unsigned>(l), s);
  auto a_rs = quadratic_power_coeffs(static_cast<unsigned>(l), r + s);
  auto diff = [](const std::vector<Integer>& c, int k) -> Integer { return coeff_or_zero(c, k) - coeff_or_zero(c, k - 1); };
  std::vector<InequalityVerdict> out;
  for (int k = 0; k <= l - 1; ++k) {
    out.push_back(ratio_le("rem12", {{"l", l}, {"s", s}, {"r", r}, {"k", k}}, diff(a_s, k + 1), diff(a_rs, k + 1),
                           diff(a_s, k), diff(a_rs, k)));
  }
  return out;
}

}  // namespace qimm
