#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qimm/characters.hpp"
#include "qimm/paths.hpp"

using namespace qimm;

namespace {

// Every word over the given alphabet, no pruning.
std::vector<std::string> all_words(const std::string& alphabet, int length) {
  std::vector<std::string> words{""};
  for (int t = 0; t < length; ++t) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char c : alphabet) next.push_back(w + c);
    words = std::move(next);
  }
  return words;
}

struct Scan {
  int end = 0;
  int min = 0;
  bool h_at_zero = false;
  bool has_h = false;
};

Scan scan(const std::string& w) {
  Scan s;
  int h = 0;
  for (char c : w) {
    if (c == 'H') {
      s.has_h = true;
      if (h == 0) s.h_at_zero = true;
    }
    h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
    s.min = std::min(s.min, h);
  }
  s.end = h;
  return s;
}

std::vector<std::string> brute_paths(PathClass cls, int length, int end) {
  std::vector<std::string> out;
  for (const auto& w : all_words(cls == PathClass::nlp ? "DU" : "DHU", length)) {
    auto s = scan(w);
    if (s.end != end) continue;
    if (cls != PathClass::uhd && s.min < 0) continue;
    if (cls == PathClass::grp && s.h_at_zero) continue;
    out.push_back(w);
  }
  return out;
}

std::vector<std::string> steps_of(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.steps());
  return out;
}

// Odd peaks as (x, y) pairs, scanned directly from a UD word.
std::vector<std::pair<int, int>> odd_peaks(const std::string& w) {
  std::vector<std::pair<int, int>> out;
  int h = 0;
  for (std::size_t t = 0; t < w.size(); ++t) {
    h += w[t] == 'U' ? 1 : -1;
    if (w[t] == 'U' && t + 1 < w.size() && w[t + 1] == 'D' && h % 2 != 0) out.push_back({static_cast<int>(t) + 1, h});
  }
  return out;
}

// Restricted count over all 2^n UD words; `literal` uses x <= m instead of the interval index.
long brute_restricted(int n, int k, int i, bool literal = false) {
  const int m = n / 2 - i;
  long count = 0;
  for (const auto& w : all_words("DU", n)) {
    auto s = scan(w);
    if (s.min < 0 || s.end != n - 2 * k) continue;
    bool ok = true;
    for (auto [x, y] : odd_peaks(w)) {
      int where = literal ? x : (x + 1) / 2;
      if (where > m) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("lattice path basics") {
  LatticePath p("UUDH");
  CHECK(p.length() == 4);
  CHECK(p.heights() == std::vector<int>{1, 2, 1, 1});
  CHECK(p.final_height() == 1);
  CHECK(p.min_height() == 0);
  CHECK(p.count('U') == 2);
  CHECK(p.is_nonnegative());
  CHECK_FALSE(p.is_ud());
  CHECK_FALSE(p.has_h_at_zero());
  CHECK(LatticePath("HU").has_h_at_zero());
  CHECK(LatticePath("DU").min_height() == -1);
  CHECK(LatticePath("").final_height() == 0);
  CHECK_THROWS_AS(LatticePath("UXD"), std::invalid_argument);
  CHECK(to_string(PathClass::grp) == "GRP");
  CHECK(parse_path_class("nlp") == PathClass::nlp);
  CHECK(parse_path_class("UHD") == PathClass::uhd);
  CHECK_THROWS_AS(parse_path_class("dyck"), std::invalid_argument);
  CHECK(belongs_to(LatticePath("UD"), PathClass::nlp));
  CHECK_FALSE(belongs_to(LatticePath("UH"), PathClass::nlp));
  CHECK(belongs_to(LatticePath("UH"), PathClass::grp));
  CHECK_FALSE(belongs_to(LatticePath("HU"), PathClass::grp));
  CHECK(belongs_to(LatticePath("DH"), PathClass::uhd));
}

TEST_CASE("enumeration examples") {
  std::vector<std::size_t> grp;
  for (int h = 4; h >= 0; --h) grp.push_back(enumerate_paths(PathClass::grp, 4, h).size());
  CHECK(grp == std::vector<std::size_t>{1, 3, 6, 6, 3});
  auto grp42 = steps_of(enumerate_paths(PathClass::grp, 4, 2));
  CHECK(std::set<std::string>(grp42.begin(), grp42.end()) ==
        std::set<std::string>{"UUHH", "UHHU", "UHUH", "UUUD", "UUDU", "UDUU"});
  CHECK(steps_of(enumerate_paths(PathClass::nlp, 4, 0)) == std::vector<std::string>{"UDUD", "UUDD"});
  CHECK(enumerate_paths(PathClass::uhd, 4, 2).size() == 10);
  CHECK(enumerate_paths(PathClass::uhd, 4, 1).size() == 16);
  CHECK(enumerate_paths(PathClass::uhd, 0, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_paths(PathClass::nlp, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_paths(PathClass::uhd, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_paths(PathClass::grp, 3, -1), std::invalid_argument);
  CHECK(enumerate_paths(PathClass::uhd, 3, -2).size() == 3);
}

TEST_CASE("property: enumeration against unpruned word lists, length <= 8") {
  for (int len = 0; len <= 8; ++len) {
    for (int end = -len; end <= len; ++end) {
      for (auto cls : {PathClass::nlp, PathClass::uhd, PathClass::grp}) {
        bool valid = cls == PathClass::uhd || end >= 0;
        if (cls == PathClass::nlp && (len - end) % 2 != 0) valid = false;
        if (!valid) {
          CHECK_THROWS_AS(enumerate_paths(cls, len, end), std::invalid_argument);
          continue;
        }
        auto got = steps_of(enumerate_paths(cls, len, end));
        CHECK(got == brute_paths(cls, len, end));
        for (const auto& s : got) CHECK(belongs_to(LatticePath(s), cls));
      }
    }
  }
}

TEST_CASE("property: class sizes match closed forms") {
  for (int n = 0; n <= 14; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      CHECK(Integer(static_cast<long>(enumerate_paths(PathClass::nlp, n, n - 2 * k).size())) ==
            binomial(n, k) - binomial(n, k - 1));
  auto last = last_table(9);
  for (int l = 0; l <= 9; ++l)
    for (int h = 0; h <= l; ++h) {
      CHECK(Integer(static_cast<long>(enumerate_paths(PathClass::uhd, l, h).size())) == trinomial(l, l + h));
      CHECK(Integer(static_cast<long>(enumerate_paths(PathClass::grp, l, h).size())) == last_at(last, l, l - h));
    }
}

TEST_CASE("Callan map golden cases") {
  CHECK(callan_bijection(Direction::forward, LatticePath("UDDUUUUH")).steps() == "DUUHUUUH");
  CHECK(callan_bijection(Direction::inverse, LatticePath("UDDHDUUU")).steps() == "DUUHUDDH");
  CHECK(callan_bijection(Direction::inverse, LatticePath("DUUHUUUH")).steps() == "UDDUUUUH");
  CHECK_THROWS_AS(callan_bijection(Direction::forward, LatticePath("UUHH")), std::invalid_argument);
  CHECK_THROWS_AS(callan_bijection(Direction::forward, LatticePath("DD")), std::invalid_argument);
  CHECK_THROWS_AS(callan_bijection(Direction::inverse, LatticePath("UD")), std::invalid_argument);
}

TEST_CASE("property: Callan map is a bijection onto the next height, l <= 7") {
  for (int l = 1; l <= 7; ++l) {
    for (int h = 0; h < l; ++h) {
      std::set<std::string> image;
      std::size_t domain = 0;
      for (const auto& p : enumerate_paths(PathClass::uhd, l, h)) {
        if (belongs_to(p, PathClass::grp)) {
          CHECK_THROWS_AS(callan_bijection(Direction::forward, p), std::invalid_argument);
          continue;
        }
        ++domain;
        auto q = callan_bijection(Direction::forward, p);
        CHECK(q.length() == l);
        CHECK(q.final_height() == h + 1);
        CHECK(callan_bijection(Direction::inverse, q) == p);
        image.insert(q.steps());
      }
      auto target = steps_of(enumerate_paths(PathClass::uhd, l, h + 1));
      CHECK(image == std::set<std::string>(target.begin(), target.end()));
      CHECK(domain == target.size());
      for (const auto& s : target) CHECK(callan_bijection(Direction::forward, callan_bijection(Direction::inverse, LatticePath(s))).steps() == s);
    }
  }
}

TEST_CASE("doubling map examples") {
  CHECK(riordan_double(Direction::forward, LatticePath("UUUD")).steps() == "UUUUUUDD");
  auto q = riordan_double(Direction::forward, LatticePath("UHHD"));
  CHECK(q.steps() == "UUDUDUDD");
  for (const auto& p : peak_profile(q)) CHECK_FALSE(p.odd());
  CHECK(riordan_double(Direction::inverse, q).steps() == "UHHD");
  CHECK_THROWS_AS(riordan_double(Direction::forward, LatticePath("HU")), std::invalid_argument);
  CHECK_THROWS_AS(riordan_double(Direction::inverse, LatticePath("UDU")), std::invalid_argument);
  CHECK_THROWS_AS(riordan_double(Direction::inverse, LatticePath("UDUD")), std::invalid_argument);
  CHECK_THROWS_AS(riordan_double(Direction::inverse, LatticePath("UH")), std::invalid_argument);
  // The first pair dips below the axis.
  CHECK_THROWS_AS(riordan_double(Direction::inverse, LatticePath("DUUUDD")), std::invalid_argument);

  std::set<std::string> image;
  for (const auto& p : enumerate_paths(PathClass::grp, 4, 2)) image.insert(riordan_double(Direction::forward, p).steps());
  CHECK(image.size() == 6);
  for (const auto& s : image) CHECK(odd_peaks(s).empty());
}

TEST_CASE("property: doubling image is the no-odd-peak set, l <= 7") {
  for (int l = 0; l <= 7; ++l) {
    for (int k = 0; k <= l; ++k) {
      std::set<std::string> image;
      for (const auto& p : enumerate_paths(PathClass::grp, l, l - k)) {
        auto q = riordan_double(Direction::forward, p);
        CHECK(riordan_double(Direction::inverse, q) == p);
        image.insert(q.steps());
      }
      std::set<std::string> expected;
      for (const auto& w : brute_paths(PathClass::nlp, 2 * l, 2 * l - 2 * k)) {
        if (odd_peaks(w).empty()) expected.insert(w);
        else CHECK_THROWS_AS(riordan_double(Direction::inverse, LatticePath(w)), std::invalid_argument);
      }
      CHECK(image == expected);
      CHECK(Integer(static_cast<long>(image.size())) == alpha_two_row(2 * l, k, l));
    }
  }
}

TEST_CASE("peaks") {
  CHECK(peak_profile(LatticePath("UUDD")) == std::vector<Peak>{{2, 2}});
  auto p = peak_profile(LatticePath("UDUD"));
  CHECK(p == std::vector<Peak>{{1, 1}, {3, 1}});
  CHECK(p[0].odd());
  CHECK(peak_profile(LatticePath("UUU")).empty());
  CHECK_THROWS_AS(peak_profile(LatticePath("UHD")), std::invalid_argument);
  // Peak at x = 3 lies in interval 2; peak at x = 1 in interval 1.
  CHECK(odd_peaks_within(LatticePath("UDUD"), 2));
  CHECK_FALSE(odd_peaks_within(LatticePath("UDUD"), 1));
  CHECK(odd_peaks_within(LatticePath("UUDD"), 0));
}

TEST_CASE("restricted counts") {
  CHECK(count_restricted(8, 4, 0) == 14);
  CHECK(count_restricted(8, 4, 4) == 3);
  CHECK(count_restricted(7, 2, 2) == 7);
  CHECK(count_restricted(6, 0, 0) == 1);
  CHECK(count_restricted(6, 4, 0) == 0);
}

TEST_CASE("property: restricted counts equal alpha for n <= 14") {
  for (int n = 1; n <= 14; ++n)
    for (int k = 0; k <= n / 2; ++k)
      for (int i = 0; i <= n / 2; ++i) {
        Integer expected = alpha_two_row(n, k, i);
        CHECK(count_restricted(n, k, i) == expected);
        CHECK(Integer(brute_restricted(n, k, i)) == expected);
      }
}

TEST_CASE("the peak-position reading of the interval rule does not match") {
  CHECK(brute_restricted(4, 1, 0, true) == 2);
  CHECK(alpha_two_row(4, 1, 0) == 3);
}

TEST_CASE("appending a down step creates no odd peak") {
  for (int l = 1; l <= 7; ++l)
    for (int k = 1; k <= l; ++k)
      for (const auto& w : brute_paths(PathClass::nlp, 2 * l, 2 * l - 2 * (k - 1))) {
        auto before = odd_peaks(w);
        auto after = odd_peaks(w + "D");
        CHECK(before == after);
      }
}

TEST_CASE("two-row tableaux") {
  TwoRowSyt a({1, 2}, {3, 4});
  CHECK(syt_to_path(a).steps() == "UUDD");
  TwoRowSyt b({1, 3}, {2, 4});
  CHECK(syt_to_path(b).steps() == "UDUD");
  CHECK(b.descents() == std::vector<int>{1, 3});
  CHECK(b.row_diff(1) == 1);
  CHECK(b.row_diff(2) == 0);
  CHECK(path_to_syt(LatticePath("UUDD")) == a);
  CHECK(enumerate_two_row_syt(6, 2).size() == 9);
  CHECK_NOTHROW(TwoRowSyt({1, 3}, {2}));
  CHECK_THROWS_AS(TwoRowSyt({1, 4}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowSyt({2, 3}, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowSyt({1, 2}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowSyt({1}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(TwoRowSyt({2, 1}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(path_to_syt(LatticePath("DU")), std::invalid_argument);
  CHECK_THROWS_AS(path_to_syt(LatticePath("UH")), std::invalid_argument);
}

TEST_CASE("property: tableau codec, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      auto tableaux = enumerate_two_row_syt(n, k);
      CHECK(Integer(static_cast<long>(tableaux.size())) == binomial(n, k) - binomial(n, k - 1));
      std::set<std::string> paths;
      for (const auto& t : tableaux) {
        auto p = syt_to_path(t);
        paths.insert(p.steps());
        CHECK(path_to_syt(p) == t);
        CHECK(belongs_to(p, PathClass::nlp));
        auto heights = p.heights();
        for (int i = 1; i <= n; ++i) CHECK(t.row_diff(i) == heights[static_cast<std::size_t>(i - 1)]);
        std::vector<int> peak_x;
        for (const auto& pk : peak_profile(p)) peak_x.push_back(pk.x);
        CHECK(t.descents() == peak_x);
      }
      CHECK(paths.size() == tableaux.size());
    }
  }
}

TEST_CASE("probabilities") {
  auto r7 = probability_monotonicity(7, 3);
  std::vector<Rational> expected{1, Rational(3, 6), Rational(5, 14), Rational(4, 14)};
  for (auto& e : expected) e.canonicalize();
  REQUIRE(r7.probabilities.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(r7.probabilities[k].second == expected[k]);
  CHECK(r7.monotone);
  auto r6 = probability_monotonicity(6, 0);
  CHECK(r6.probabilities.front().second == 1);
  CHECK_THROWS_AS(probability_monotonicity(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(probability_monotonicity(6, -1), std::invalid_argument);
}

TEST_CASE("property: probabilities from word counts, n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i <= (n - 1) / 2; ++i) {
      auto report = probability_monotonicity(n, i);
      for (const auto& [k, prob] : report.probabilities) {
        long total = static_cast<long>(brute_paths(PathClass::nlp, n, n - 2 * k).size());
        Rational expected(brute_restricted(n, k, i), total);
        expected.canonicalize();
        CHECK(prob == expected);
      }
      bool decreasing = true;
      for (std::size_t t = 1; t < report.probabilities.size(); ++t)
        decreasing &= report.probabilities[t].second <= report.probabilities[t - 1].second;
      CHECK(report.monotone == decreasing);
      CHECK(report.monotone);
    }
  }
}

TEST_CASE("sequence identities") {
  auto checks = sequence_identities(12);
  for (const auto& c : checks) CHECK(c.holds());
  bool saw_l4 = false, saw_l0 = false;
  for (const auto& c : checks) {
    if (c.name == "rem20" && c.l == 4) {
      saw_l4 = true;
      CHECK(c.lhs == 14);
    }
    if (c.name == "rem20" && c.l == 0) {
      saw_l0 = true;
      CHECK(c.lhs == 1);
    }
  }
  CHECK(saw_l4);
  CHECK(saw_l0);
  // 14 = 3 + 4*1 + 6*1 + 4*0 + 1*1, the Riordan numbers R_4..R_0.
  auto last = last_table(4);
  Integer sum = 0;
  for (int t = 0; t <= 4; ++t) sum += binomial(4, t) * last_at(last, 4 - t, 4 - t);
  CHECK(sum == 14);
  CHECK(alpha_two_row(8, 4, 0) == sum);
}
