#include "qimm/verdict.hpp"

#include <algorithm>

namespace qimm {

nlohmann::json to_json(const InequalityVerdict& v) {
  return {{"claim", v.claim},         {"params", v.params}, {"holds", v.holds},
          {"degenerate", v.degenerate}, {"witness", v.witness}, {"detail", v.detail}};
}

void canonicalize(std::vector<InequalityVerdict>& verdicts) {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(verdicts.size());
  for (std::size_t idx = 0; idx < verdicts.size(); ++idx) {
    keys.emplace_back(verdicts[idx].claim + '\x1f' + verdicts[idx].params.dump(), idx);
  }
  std::stable_sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<InequalityVerdict> sorted;
  sorted.reserve(verdicts.size());
  for (const auto& [key, idx] : keys) sorted.push_back(std::move(verdicts[idx]));
  verdicts = std::move(sorted);
}

bool all_hold(const std::vector<InequalityVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds || v.degenerate; });
}

InequalityVerdict integer_le(std::string claim, nlohmann::json params, const Integer& lhs, const Integer& rhs) {
  InequalityVerdict v;
  v.claim = std::move(claim);
  v.params = std::move(params);
  Integer gap = rhs - lhs;
  v.holds = gap >= 0;
  v.witness = gap.get_str();
  v.detail = lhs.get_str() + " <= " + rhs.get_str();
  return v;
}

}  // namespace qimm
