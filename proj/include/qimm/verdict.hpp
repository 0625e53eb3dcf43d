#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qimm/exactpoly.hpp"

namespace qimm {

/// Outcome of checking one instance of a claimed inequality or identity.
///
/// `witness` is recomputable from `params` alone: a difference polynomial
/// (JSON coefficient array), a cross-multiplied integer gap (decimal string),
/// or a small object for grid checks. A degenerate verdict is an instance that
/// lies outside the claim's hypotheses (zero denominators, zero entries); it is
/// reported but never counted as a failure.
struct InequalityVerdict {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  bool holds = false;
  bool degenerate = false;
  nlohmann::json witness;
  std::string detail;
};

nlohmann::json to_json(const InequalityVerdict& v);

/// Orders by claim id, then by the serialized params.
void canonicalize(std::vector<InequalityVerdict>& verdicts);

/// True when every non-degenerate verdict holds.
bool all_hold(const std::vector<InequalityVerdict>& verdicts);

/// Verdict for `lhs <= rhs` on integers; witness is rhs - lhs.
InequalityVerdict integer_le(std::string claim, nlohmann::json params, const Integer& lhs, const Integer& rhs);

}  // namespace qimm
