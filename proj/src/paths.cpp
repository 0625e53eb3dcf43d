#include "qimm/paths.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qimm/characters.hpp"

namespace qimm {

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
  for (char c : steps_) {
    if (c != 'U' && c != 'D' && c != 'H') {
      throw std::invalid_argument(std::string("path step must be U, D or H, got '") + c + "'");
    }
  }
}

namespace {

int delta(char step) {
  if (step == 'U') return 1;
  if (step == 'D') return -1;
  return 0;
}

char flip(char step) {
  if (step == 'U') return 'D';
  if (step == 'D') return 'U';
  return step;
}

}  // namespace

std::vector<int> LatticePath::heights() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  int h = 0;
  for (char c : steps_) {
    h += delta(c);
    out.push_back(h);
  }
  return out;
}

int LatticePath::final_height() const {
  int h = 0;
  for (char c : steps_) h += delta(c);
  return h;
}

int LatticePath::min_height() const {
  int h = 0;
  int lo = 0;
  for (char c : steps_) {
    h += delta(c);
    lo = std::min(lo, h);
  }
  return lo;
}

int LatticePath::count(char step) const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), step));
}

bool LatticePath::has_h_at_zero() const {
  int h = 0;
  for (char c : steps_) {
    if (c == 'H' && h == 0) return true;
    h += delta(c);
  }
  return false;
}

std::string to_string(PathClass cls) {
  switch (cls) {
    case PathClass::nlp: return "NLP";
    case PathClass::uhd: return "UHD";
    case PathClass::grp: return "GRP";
  }
  return "?";
}

PathClass parse_path_class(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "NLP") return PathClass::nlp;
  if (upper == "UHD") return PathClass::uhd;
  if (upper == "GRP") return PathClass::grp;
  throw std::invalid_argument("unknown path class: " + std::string(text));
}

bool belongs_to(const LatticePath& path, PathClass cls) {
  switch (cls) {
    case PathClass::nlp: return path.is_ud() && path.is_nonnegative();
    case PathClass::uhd: return true;
    case PathClass::grp: return path.is_nonnegative() && !path.has_h_at_zero();
  }
  return false;
}

namespace {

struct Enumerator {
  PathClass cls;
  int length;
  int end_height;
  std::string current;
  std::vector<LatticePath> out;

  void extend(int height) {
    const int remaining = length - static_cast<int>(current.size());
    if (remaining == 0) {
      if (height == end_height) out.emplace_back(current);
      return;
    }
    // D < H < U keeps the output sorted.
    for (char step : {'D', 'H', 'U'}) {
      if (step == 'H' && cls == PathClass::nlp) continue;
      if (step == 'H' && cls == PathClass::grp && height == 0) continue;
      const int next = height + delta(step);
      if (cls != PathClass::uhd && next < 0) continue;
      if (std::abs(end_height - next) > remaining - 1) continue;
      if (cls == PathClass::nlp && (end_height - next - (remaining - 1)) % 2 != 0) continue;
      current.push_back(step);
      extend(next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<LatticePath> enumerate_paths(PathClass cls, int length, int end_height) {
  if (length < 0) throw std::invalid_argument("path length must be nonnegative");
  if (std::abs(end_height) > length) {
    throw std::invalid_argument("end height " + std::to_string(end_height) + " unreachable in " +
                                std::to_string(length) + " steps");
  }
  if (cls != PathClass::uhd && end_height < 0) {
    throw std::invalid_argument("nonnegative path class cannot end below 0");
  }
  if (cls == PathClass::nlp && (length - end_height) % 2 != 0) {
    throw std::invalid_argument("UD path length and end height must have equal parity");
  }
  Enumerator e{cls, length, end_height, {}, {}};
  e.current.reserve(static_cast<std::size_t>(length));
  e.extend(0);
  return std::move(e.out);
}

namespace {

// Last index t whose step is H at height `level` or U from `level - 1`.
int split_index(const std::string& steps, int level) {
  int h = 0;
  int found = -1;
  for (int t = 0; t < static_cast<int>(steps.size()); ++t) {
    const char c = steps[static_cast<std::size_t>(t)];
    if ((c == 'H' && h == level) || (c == 'U' && h == level - 1)) found = t;
    h += delta(c);
  }
  return found;
}

}  // namespace

LatticePath callan_bijection(Direction direction, const LatticePath& path) {
  const std::string& steps = path.steps();
  const bool fwd = direction == Direction::forward;
  if (fwd) {
    if (path.final_height() < 0) throw std::invalid_argument("callan forward: end height must be >= 0");
    if (belongs_to(path, PathClass::grp)) {
      throw std::invalid_argument("callan forward: " + steps + " is already a generalized Riordan path");
    }
  } else if (path.final_height() < 1) {
    throw std::invalid_argument("callan inverse: end height must be >= 1");
  }
  const int t = split_index(steps, fwd ? 0 : 1);
  if (t < 0) throw std::logic_error("callan: no split point in " + steps);
  std::string out;
  out.reserve(steps.size());
  for (int s = 0; s < t; ++s) out.push_back(flip(steps[static_cast<std::size_t>(s)]));
  out.push_back(steps[static_cast<std::size_t>(t)] == 'H' ? 'U' : 'H');
  out.append(steps, static_cast<std::size_t>(t) + 1);
  return LatticePath(std::move(out));
}

LatticePath riordan_double(Direction direction, const LatticePath& path) {
  const std::string& steps = path.steps();
  if (direction == Direction::forward) {
    if (!belongs_to(path, PathClass::grp)) {
      throw std::invalid_argument("doubling forward: " + steps + " is not a generalized Riordan path");
    }
    std::string out;
    out.reserve(2 * steps.size());
    for (char c : steps) {
      if (c == 'U') out += "UU";
      else if (c == 'D') out += "DD";
      else out += "DU";
    }
    return LatticePath(std::move(out));
  }
  if (!belongs_to(path, PathClass::nlp)) {
    throw std::invalid_argument("doubling inverse: " + steps + " is not a nonnegative UD path");
  }
  if (steps.size() % 2 != 0) throw std::invalid_argument("doubling inverse: odd length");
  std::string out;
  out.reserve(steps.size() / 2);
  for (std::size_t p = 0; p < steps.size(); p += 2) {
    const std::string_view pair(steps.data() + p, 2);
    if (pair == "UU") out.push_back('U');
    else if (pair == "DD") out.push_back('D');
    else if (pair == "DU") out.push_back('H');
    else throw std::invalid_argument("doubling inverse: odd-height peak at x = " + std::to_string(p + 1));
  }
  LatticePath result(std::move(out));
  if (!belongs_to(result, PathClass::grp)) {
    throw std::invalid_argument("doubling inverse: preimage is not a generalized Riordan path");
  }
  return result;
}

std::vector<Peak> peak_profile(const LatticePath& path) {
  if (!path.is_ud()) throw std::invalid_argument("peaks are defined for UD paths only");
  std::vector<Peak> peaks;
  const std::string& steps = path.steps();
  int h = 0;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    h += delta(steps[t]);
    if (steps[t] == 'U' && t + 1 < steps.size() && steps[t + 1] == 'D') {
      peaks.push_back({static_cast<int>(t) + 1, h});
    }
  }
  return peaks;
}

bool odd_peaks_within(const LatticePath& path, int allowed_intervals) {
  for (const Peak& p : peak_profile(path)) {
    if (p.odd() && (p.x + 1) / 2 > allowed_intervals) return false;
  }
  return true;
}

Integer count_restricted(int n, int k, int i) {
  if (n < 0 || k < 0 || 2 * k > n || i < 0 || i > n / 2) return 0;
  const int allowed = n / 2 - i;
  Integer total = 0;
  for (const LatticePath& p : enumerate_paths(PathClass::nlp, n, n - 2 * k)) {
    if (odd_peaks_within(p, allowed)) ++total;
  }
  return total;
}

TwoRowSyt::TwoRowSyt(std::vector<int> row1, std::vector<int> row2)
    : row1_(std::move(row1)), row2_(std::move(row2)) {
  if (row2_.size() > row1_.size()) throw std::invalid_argument("SYT: second row longer than first");
  const int total = n();
  std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
  for (const auto* row : {&row1_, &row2_}) {
    for (std::size_t t = 0; t < row->size(); ++t) {
      const int v = (*row)[t];
      if (v < 1 || v > total || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("SYT entries must be 1..n, each once");
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (t > 0 && (*row)[t - 1] >= v) throw std::invalid_argument("SYT rows must increase");
    }
  }
  for (std::size_t t = 0; t < row2_.size(); ++t) {
    if (row2_[t] <= row1_[t]) {
      throw std::invalid_argument("SYT column " + std::to_string(t + 1) + " does not increase");
    }
  }
}

std::vector<int> TwoRowSyt::descents() const {
  std::vector<bool> in_first(static_cast<std::size_t>(n()) + 2, false);
  for (int v : row1_) in_first[static_cast<std::size_t>(v)] = true;
  std::vector<int> out;
  for (int v = 1; v < n(); ++v) {
    if (in_first[static_cast<std::size_t>(v)] && !in_first[static_cast<std::size_t>(v) + 1]) out.push_back(v);
  }
  return out;
}

int TwoRowSyt::row_diff(int i) const {
  auto upto = [i](const std::vector<int>& row) {
    return static_cast<int>(std::count_if(row.begin(), row.end(), [i](int v) { return v <= i; }));
  };
  return upto(row1_) - upto(row2_);
}

LatticePath syt_to_path(const TwoRowSyt& syt) {
  std::string steps(static_cast<std::size_t>(syt.n()), 'D');
  for (int v : syt.row1()) steps[static_cast<std::size_t>(v) - 1] = 'U';
  return LatticePath(std::move(steps));
}

TwoRowSyt path_to_syt(const LatticePath& path) {
  if (!belongs_to(path, PathClass::nlp)) {
    throw std::invalid_argument("SYT codec: " + path.steps() + " is not a nonnegative UD path");
  }
  std::vector<int> row1;
  std::vector<int> row2;
  for (int t = 0; t < path.length(); ++t) {
    (path.steps()[static_cast<std::size_t>(t)] == 'U' ? row1 : row2).push_back(t + 1);
  }
  return TwoRowSyt(std::move(row1), std::move(row2));
}

std::vector<TwoRowSyt> enumerate_two_row_syt(int n, int k) {
  if (n < 0 || k < 0 || 2 * k > n) throw std::invalid_argument("shape (n-k, k) needs 0 <= 2k <= n");
  std::vector<TwoRowSyt> out;
  std::vector<int> chosen(static_cast<std::size_t>(k));
  // Second rows in lexicographic order; rejected when a column would fail.
  auto recurse = [&](auto&& self, int slot, int from) -> void {
    if (slot == k) {
      std::vector<bool> in_second(static_cast<std::size_t>(n) + 1, false);
      for (int v : chosen) in_second[static_cast<std::size_t>(v)] = true;
      std::vector<int> row1;
      for (int v = 1; v <= n; ++v) {
        if (!in_second[static_cast<std::size_t>(v)]) row1.push_back(v);
      }
      for (int t = 0; t < k; ++t) {
        if (chosen[static_cast<std::size_t>(t)] <= row1[static_cast<std::size_t>(t)]) return;
      }
      out.emplace_back(std::move(row1), chosen);
      return;
    }
    for (int v = from; v <= n; ++v) {
      chosen[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, v + 1);
    }
  };
  recurse(recurse, 0, 1);
  return out;
}

ProbabilityReport probability_monotonicity(int n, int i) {
  if (n < 1) throw std::invalid_argument("probability: n must be positive");
  if (i < 0 || i > (n - 1) / 2) throw std::invalid_argument("probability: need 0 <= i <= floor((n-1)/2)");
  ProbabilityReport report{n, i, {}, true};
  for (int k = 0; k <= n / 2; ++k) {
    const auto all = enumerate_paths(PathClass::nlp, n, n - 2 * k);
    Rational p(count_restricted(n, k, i), Integer(static_cast<long>(all.size())));
    p.canonicalize();
    report.probabilities.emplace_back(k, p);
  }
  for (std::size_t t = 1; t < report.probabilities.size(); ++t) {
    const Rational& prev = report.probabilities[t - 1].second;
    const Rational& cur = report.probabilities[t].second;
    if (cur.get_num() * prev.get_den() > prev.get_num() * cur.get_den()) report.monotone = false;
  }
  return report;
}

std::vector<IdentityCheck> sequence_identities(int l_max) {
  if (l_max < 0) throw std::invalid_argument("identities: l_max must be nonnegative");
  std::vector<IdentityCheck> out;
  std::vector<Integer> riordan;
  for (int l = 0; l <= l_max; ++l) riordan.push_back(alpha_from_polynomial(2 * l, l, l));
  for (int l = 0; l <= l_max; ++l) {
    Integer sum = 0;
    for (int t = 0; t <= l; ++t) sum += binomial(l, t) * riordan[static_cast<std::size_t>(l - t)];
    // Catalan number from the hook-length count of shape (l, l).
    Integer catalan = binomial(2 * l, l) - binomial(2 * l, l - 1);
    out.push_back({"rem20", l, l, 0, catalan, sum});
  }
  for (int l = 0; l <= l_max; ++l) {
    for (int k = 0; k <= l; ++k) {
      for (int i = 0; i <= l; ++i) {
        Integer sum = 0;
        for (int t = 0; t <= l - i; ++t) {
          sum += binomial(l - i, t) * alpha_from_polynomial(2 * l - 2 * t, k - t, l - t);
        }
        out.push_back({"lem17-conv", l, k, i, alpha_two_row(2 * l, k, i), sum});
      }
    }
  }
  return out;
}

}  // namespace qimm
