#include "qimm/sweeps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qimm/characters.hpp"
#include "qimm/immanant.hpp"
#include "qimm/paths.hpp"
#include "qimm/tree.hpp"

namespace qimm {

SweepLimits SweepLimits::defaults(bool deep) {
  SweepLimits limits;
  limits.q_grid = default_q_grid();
  limits.random_trees = 1000;
  if (deep) {
    limits.tree_n_max = 8;
    limits.hook_n_max = 7;
    limits.oracle_n_max = 7;
    limits.random_trees = 5000;
    limits.alpha_n_max = 60;
    limits.last_l_max = 60;
    limits.general_sr_l_max = 20;
    limits.general_sr_param_max = 6;
    limits.path_n_max = 16;
    limits.callan_l_max = 9;
    limits.doubling_l_max = 8;
    limits.identities_l_max = 20;
  }
  return limits;
}

namespace {

struct WeightClass {
  Tree representative;
  std::size_t size = 0;
  std::vector<RatPoly> weights;
};

// Labeled trees grouped by matching weights, in order of first appearance.
std::vector<WeightClass> weight_classes(TreeGenerator gen) {
  std::vector<WeightClass> classes;
  std::map<std::string, std::size_t> index;
  while (auto tree = gen.next()) {
    auto weights = matching_weights(*tree);
    nlohmann::json key = nlohmann::json::array();
    for (const auto& w : weights) key.push_back(to_json(w));
    auto [it, inserted] = index.emplace(key.dump(), classes.size());
    if (inserted) classes.push_back({*tree, 0, std::move(weights)});
    ++classes[it->second].size;
  }
  return classes;
}

struct ClassSource {
  int n;
  TreeGenerator gen;
  nlohmann::json tag;
};

std::vector<ClassSource> tree_sources(const SweepLimits& limits, int n_max, bool with_random) {
  std::vector<ClassSource> sources;
  for (int n = 2; n <= std::min(n_max, kMaxAllTreesN); ++n) {
    sources.push_back({n, TreeGenerator(TreeKind::all, n), "all"});
  }
  if (with_random && limits.random_trees > 0) {
    const int n = n_max + 1;
    sources.push_back({n, TreeGenerator(TreeKind::random, n, limits.seed, static_cast<std::size_t>(limits.random_trees)),
                       {{"random", limits.random_trees}, {"seed", limits.seed}}});
  }
  return sources;
}

void tag_class(std::vector<InequalityVerdict>& verdicts, const WeightClass& cls, const nlohmann::json& source) {
  for (auto& v : verdicts) {
    v.params["class_size"] = cls.size;
    v.params["source"] = source;
  }
}

InequalityVerdict equality_verdict(std::string claim, nlohmann::json params, const Integer& lhs, const Integer& rhs) {
  InequalityVerdict v;
  v.claim = std::move(claim);
  v.params = std::move(params);
  v.holds = lhs == rhs;
  v.witness = {{"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}};
  v.detail = lhs.get_str() + (v.holds ? " == " : " != ") + rhs.get_str();
  return v;
}

void append(std::vector<InequalityVerdict>& out, std::vector<InequalityVerdict> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

InequalityVerdict a0_identity(const WeightClass& cls) {
  const Tree& tree = cls.representative;
  const int n = tree.n();
  auto a = a_coeffs_from_weights(cls.weights);
  auto imm = two_row_immanants(tree);
  AlphaTable table = alpha_table(n);
  nlohmann::json failures = nlohmann::json::array();
  if (!(a[0] == RatPoly{1, 0, -1})) failures.push_back("a_0 = " + a[0].to_string());
  for (std::size_t i = 1; i < a.size(); ++i) {
    auto shape = is_even_nonneg(a[i]);
    if (!shape.is_even || !shape.coeffs_nonneg) {
      failures.push_back("a_" + std::to_string(i) + " = " + a[i].to_string());
    }
  }
  for (int k = 0; 2 * k <= n; ++k) {
    if (!(two_row_from_a_coeffs(a, table, k) == imm[static_cast<std::size_t>(k)])) {
      failures.push_back("reconstruction differs at k = " + std::to_string(k));
    }
  }
  InequalityVerdict v;
  v.claim = "a0-identity";
  v.params = {{"tree", pruefer_literal(tree)}, {"n", n}};
  v.holds = failures.empty();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& ai : a) coeffs.push_back(to_json(ai));
  v.witness = {{"a_coeffs", coeffs}, {"failures", failures}};
  v.detail = v.holds ? "a_0 = 1 - q^2, a_i even nonnegative, reconstruction exact" : failures.dump();
  return v;
}

}  // namespace

std::vector<InequalityVerdict> sweep_two_row(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  for (auto& source : tree_sources(limits, limits.tree_n_max, true)) {
    for (const auto& cls : weight_classes(std::move(source.gen))) {
      auto verdicts = check_two_row_chain(cls.representative);
      verdicts.push_back(a0_identity(cls));
      tag_class(verdicts, cls, source.tag);
      append(out, std::move(verdicts));
    }
  }
  return out;
}

std::vector<InequalityVerdict> sweep_hook(const SweepLimits& limits) {
  const auto grid = limits.q_grid.empty() ? default_q_grid() : limits.q_grid;
  std::vector<InequalityVerdict> out;
  for (auto& source : tree_sources(limits, limits.hook_n_max, false)) {
    for (const auto& cls : weight_classes(std::move(source.gen))) {
      auto verdicts = check_hook_chain(cls.representative, grid);
      tag_class(verdicts, cls, source.tag);
      append(out, std::move(verdicts));
    }
  }
  return out;
}

std::vector<InequalityVerdict> sweep_oracle(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  const int n_max = std::min(limits.oracle_n_max, kMaxBruteForceN);
  for (int n = 2; n <= n_max; ++n) {
    const auto shapes = partitions_of(n);
    const auto types = partitions_of(n);
    std::vector<std::vector<Integer>> chars(shapes.size());
    std::vector<std::vector<Integer>> involution(shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      for (const auto& rho : types) chars[s].push_back(mn_character(shapes[s], rho));
      involution[s] = involution_characters(shapes[s]);
    }
    std::vector<std::size_t> mismatches(shapes.size(), 0);
    std::vector<std::string> first_bad(shapes.size());
    std::size_t trees = 0;
    TreeGenerator gen(TreeKind::all, n);
    while (auto tree = gen.next()) {
      ++trees;
      auto sums = permutation_sums_by_cycle_type(q_laplacian(*tree));
      auto weights = matching_weights(*tree);
      for (std::size_t s = 0; s < shapes.size(); ++s) {
        RatPoly brute;
        for (std::size_t t = 0; t < types.size(); ++t) {
          auto it = sums.find(types[t]);
          if (it != sums.end()) brute += it->second * Rational(chars[s][t]);
        }
        if (!(brute == immanant_from_weights(weights, involution[s]))) {
          if (mismatches[s]++ == 0) first_bad[s] = pruefer_literal(*tree);
        }
      }
    }
    for (std::size_t s = 0; s < shapes.size(); ++s) {
      InequalityVerdict v;
      v.claim = "oracle-equivalence";
      v.params = {{"n", n}, {"shape", shapes[s].to_string()}};
      v.holds = mismatches[s] == 0;
      v.witness = {{"trees", trees}, {"mismatches", mismatches[s]}, {"first_mismatch", first_bad[s]}};
      v.detail = std::to_string(trees - mismatches[s]) + "/" + std::to_string(trees) + " labeled trees agree";
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<InequalityVerdict> sweep_alpha_ratios(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  for (int n = 2; n <= limits.alpha_n_max; ++n) append(out, check_alpha_ratios(n));
  for (int l = limits.alpha_n_max / 2 + 1; l <= limits.last_l_max; ++l) append(out, check_last_row_claims(l));
  for (int n = 0; n <= limits.path_n_max; ++n) {
    for (int i = 0; 2 * i <= n; ++i) {
      for (int k = 0; 2 * k <= n; ++k) {
        out.push_back(equality_verdict("lem22", {{"n", n}, {"k", k}, {"i", i}}, alpha_from_polynomial(n, k, i),
                                       alpha_two_row(n, k, i)));
      }
    }
  }
  return out;
}

std::vector<InequalityVerdict> sweep_general_sr(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  for (int s = 1; s <= limits.general_sr_param_max; ++s) {
    for (int r = 1; r <= limits.general_sr_param_max; ++r) {
      for (int l = 1; l <= limits.general_sr_l_max; ++l) append(out, check_general_sr(l, s, r));
    }
  }
  return out;
}

namespace {

std::vector<LatticePath> enumerate_or_empty(PathClass cls, int length, int end_height) {
  if (end_height > length) return {};
  return enumerate_paths(cls, length, end_height);
}

InequalityVerdict callan_verdict(int l, int k) {
  const int h = l - k;
  const auto all = enumerate_paths(PathClass::uhd, l, h);
  const auto target = enumerate_or_empty(PathClass::uhd, l, h + 1);
  const auto riordan = enumerate_paths(PathClass::grp, l, h);
  std::vector<LatticePath> images;
  std::size_t round_trip_failures = 0;
  for (const auto& p : all) {
    if (belongs_to(p, PathClass::grp)) continue;
    LatticePath image = callan_bijection(Direction::forward, p);
    if (!(callan_bijection(Direction::inverse, image) == p)) ++round_trip_failures;
    images.push_back(std::move(image));
  }
  for (const auto& q : target) {
    LatticePath pre = callan_bijection(Direction::inverse, q);
    if (belongs_to(pre, PathClass::grp) || pre.final_height() != h ||
        !(callan_bijection(Direction::forward, pre) == q)) {
      ++round_trip_failures;
    }
  }
  std::sort(images.begin(), images.end());
  const bool onto = images == target;  // both sorted, so this also rules out collisions
  const Integer last = alpha_two_row(2 * l, k, l);
  const Integer diff = Integer(static_cast<long>(all.size())) - Integer(static_cast<long>(target.size()));
  const bool counts = diff == Integer(static_cast<long>(riordan.size())) && diff == last;

  InequalityVerdict v;
  v.claim = "lem15-bij";
  v.params = {{"l", l}, {"k", k}};
  v.holds = onto && counts && round_trip_failures == 0;
  v.witness = {{"uhd", all.size()},      {"uhd_next", target.size()},         {"grp", riordan.size()},
               {"alpha", last.get_str()}, {"round_trip_failures", round_trip_failures}, {"onto", onto}};
  v.detail = "|UHD(" + std::to_string(l) + "," + std::to_string(h) + ")| - |UHD(" + std::to_string(l) + "," +
             std::to_string(h + 1) + ")| = " + diff.get_str() + ", |GRP| = " + std::to_string(riordan.size());
  return v;
}

InequalityVerdict golden_callan(Direction direction, const std::string& input, const std::string& expected) {
  LatticePath got = callan_bijection(direction, LatticePath(input));
  InequalityVerdict v;
  v.claim = "lem15-bij";
  v.params = {{"example", input}, {"direction", direction == Direction::forward ? "fwd" : "inv"}};
  v.holds = got.steps() == expected;
  v.witness = {{"expected", expected}, {"got", got.steps()}};
  v.detail = (direction == Direction::forward ? "f(" : "f^-1(") + input + ") = " + got.steps();
  return v;
}

bool has_odd_peak(const LatticePath& p) {
  const auto peaks = peak_profile(p);
  return std::any_of(peaks.begin(), peaks.end(), [](const Peak& pk) { return pk.odd(); });
}

InequalityVerdict doubling_verdict(int l, int k) {
  const auto riordan = enumerate_paths(PathClass::grp, l, l - k);
  std::vector<LatticePath> images;
  std::size_t round_trip_failures = 0;
  for (const auto& p : riordan) {
    LatticePath image = riordan_double(Direction::forward, p);
    if (!(riordan_double(Direction::inverse, image) == p)) ++round_trip_failures;
    images.push_back(std::move(image));
  }
  std::sort(images.begin(), images.end());
  std::vector<LatticePath> no_odd;
  std::size_t accepted_outside = 0;
  for (const auto& q : enumerate_paths(PathClass::nlp, 2 * l, 2 * l - 2 * k)) {
    if (!has_odd_peak(q)) {
      no_odd.push_back(q);
    } else {
      try {
        riordan_double(Direction::inverse, q);
        ++accepted_outside;
      } catch (const std::invalid_argument&) {
      }
    }
  }
  const Integer last = alpha_two_row(2 * l, k, l);
  const bool image_ok = images == no_odd;
  const bool count_ok = Integer(static_cast<long>(images.size())) == last;

  InequalityVerdict v;
  v.claim = "lem16-bij";
  v.params = {{"l", l}, {"k", k}};
  v.holds = image_ok && count_ok && round_trip_failures == 0 && accepted_outside == 0;
  v.witness = {{"grp", riordan.size()},
               {"no_odd_peak", no_odd.size()},
               {"alpha", last.get_str()},
               {"round_trip_failures", round_trip_failures},
               {"inverse_accepted_odd_peak", accepted_outside}};
  v.detail = "image of GRP(" + std::to_string(l) + "," + std::to_string(l - k) + ") has " +
             std::to_string(images.size()) + " paths, " + std::to_string(no_odd.size()) + " without odd peaks";
  return v;
}

InequalityVerdict append_down_verdict(int l, int k) {
  std::size_t changed = 0;
  std::size_t checked = 0;
  for (const auto& p : enumerate_paths(PathClass::nlp, 2 * l, 2 * l - 2 * k + 2)) {
    LatticePath extended(p.steps() + "D");
    auto odd_before = peak_profile(p);
    auto odd_after = peak_profile(extended);
    std::erase_if(odd_before, [](const Peak& pk) { return !pk.odd(); });
    std::erase_if(odd_after, [](const Peak& pk) { return !pk.odd(); });
    if (odd_before != odd_after) ++changed;
    ++checked;
  }
  InequalityVerdict v;
  v.claim = "lem19";
  v.params = {{"l", l}, {"k", k}, {"check", "append-down"}};
  v.holds = changed == 0;
  v.witness = {{"paths", checked}, {"odd_peaks_changed", changed}};
  v.detail = "appending D to " + std::to_string(checked) + " paths changed odd peaks in " + std::to_string(changed);
  return v;
}

}  // namespace

std::vector<InequalityVerdict> sweep_paths(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  out.push_back(golden_callan(Direction::forward, "UDDUUUUH", "DUUHUUUH"));
  out.push_back(golden_callan(Direction::inverse, "UDDHDUUU", "DUUHUDDH"));
  for (int l = 1; l <= limits.callan_l_max; ++l) {
    for (int k = 0; k <= l; ++k) out.push_back(callan_verdict(l, k));
  }
  for (int l = 0; l <= limits.doubling_l_max; ++l) {
    for (int k = 0; k <= l; ++k) out.push_back(doubling_verdict(l, k));
  }
  for (int n = 0; n <= limits.path_n_max; ++n) {
    const std::string claim = n % 2 == 0 ? "lem18" : "lem19";
    for (int k = 0; 2 * k <= n; ++k) {
      for (int i = 0; 2 * i <= n; ++i) {
        out.push_back(equality_verdict(claim, {{"n", n}, {"k", k}, {"i", i}}, count_restricted(n, k, i),
                                       alpha_two_row(n, k, i)));
      }
    }
  }
  for (int l = 1; 2 * l + 1 <= limits.path_n_max; ++l) {
    for (int k = 1; k <= l; ++k) out.push_back(append_down_verdict(l, k));
  }
  return out;
}

namespace {

bool decreasing(const std::vector<Rational>& values) {
  for (std::size_t t = 1; t < values.size(); ++t) {
    if (values[t].get_num() * values[t - 1].get_den() > values[t - 1].get_num() * values[t].get_den()) return false;
  }
  return true;
}

nlohmann::json fractions(const std::vector<Rational>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(rational_to_fraction(v));
  return out;
}

// Fraction of SYT(n-k, k) whose odd-height descents all lie in the allowed intervals.
Rational syt_probability(int n, int k, int i) {
  const int allowed = n / 2 - i;
  const auto tableaux = enumerate_two_row_syt(n, k);
  long good = 0;
  for (const auto& t : tableaux) {
    bool ok = true;
    for (int d : t.descents()) {
      if (t.row_diff(d) % 2 != 0 && (d + 1) / 2 > allowed) ok = false;
    }
    if (ok) ++good;
  }
  Rational p(good, static_cast<long>(tableaux.size()));
  p.canonicalize();
  return p;
}

}  // namespace

std::vector<InequalityVerdict> sweep_probability(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  for (int n = 1; n <= limits.path_n_max; ++n) {
    for (int i = 0; i <= (n - 1) / 2; ++i) {
      auto report = probability_monotonicity(n, i);
      std::vector<Rational> path_probs;
      for (const auto& [k, p] : report.probabilities) path_probs.push_back(p);
      InequalityVerdict paths;
      paths.claim = "lem20";
      paths.params = {{"n", n}, {"i", i}};
      paths.holds = report.monotone;
      paths.witness = fractions(path_probs);
      paths.detail = report.monotone ? "weakly decreasing in k" : "increases somewhere in k";
      out.push_back(std::move(paths));

      std::vector<Rational> syt_probs;
      for (int k = 0; 2 * k <= n; ++k) syt_probs.push_back(syt_probability(n, k, i));
      InequalityVerdict syt;
      syt.claim = "lem21";
      syt.params = {{"n", n}, {"i", i}};
      const bool agree = syt_probs == path_probs;
      syt.holds = decreasing(syt_probs) && agree;
      syt.witness = {{"probabilities", fractions(syt_probs)}, {"matches_paths", agree}};
      syt.detail = syt.holds ? "weakly decreasing in k, equal to the path probabilities" : "violated";
      out.push_back(std::move(syt));
    }
  }
  return out;
}

std::vector<InequalityVerdict> sweep_identities(const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  for (const auto& check : sequence_identities(limits.identities_l_max)) {
    nlohmann::json params = check.name == "rem20" ? nlohmann::json{{"l", check.l}}
                                                  : nlohmann::json{{"l", check.l}, {"k", check.k}, {"i", check.i}};
    out.push_back(equality_verdict(check.name, std::move(params), check.lhs, check.rhs));
  }
  return out;
}

const std::vector<SweepGroup>& sweep_groups() {
  static const std::vector<SweepGroup> groups = {
      {"two-row", {"thm2", "a0-identity"}, sweep_two_row},
      {"hook", {"thm1-weak", "thm1-strong"}, sweep_hook},
      {"oracle", {"oracle-equivalence"}, sweep_oracle},
      {"alpha-ratios", {"lem6", "lem9", "cor10", "lem11", "lem13", "lem22"}, sweep_alpha_ratios},
      {"general-sr", {"rem12"}, sweep_general_sr},
      {"paths", {"lem15-bij", "lem16-bij", "lem18", "lem19"}, sweep_paths},
      {"probability", {"lem20", "lem21"}, sweep_probability},
      {"identities", {"lem17-conv", "rem20"}, sweep_identities},
  };
  return groups;
}

std::vector<std::string> all_claim_ids() {
  std::vector<std::string> ids;
  for (const auto& g : sweep_groups()) ids.insert(ids.end(), g.claims.begin(), g.claims.end());
  return ids;
}

std::vector<InequalityVerdict> run_sweep(const std::string& group, const SweepLimits& limits) {
  std::vector<InequalityVerdict> out;
  bool found = false;
  for (const auto& g : sweep_groups()) {
    if (group == "all" || group == g.name) {
      append(out, g.run(limits));
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown verification group: " + group);
  canonicalize(out);
  return out;
}

}  // namespace qimm
