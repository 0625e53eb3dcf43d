#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "qimm/tree.hpp"

using namespace qimm;

namespace {

// All edge subsets, kept when no vertex is used twice; counts by size.
std::vector<std::uint64_t> brute_matching_counts(const Tree& t) {
  const auto& e = t.edges();
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(t.n() / 2) + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    std::vector<int> used(static_cast<std::size_t>(t.n()) + 1, 0);
    bool ok = true;
    int size = 0;
    for (std::size_t b = 0; b < e.size(); ++b) {
      if (!(mask >> b & 1u)) continue;
      ++size;
      if (used[static_cast<std::size_t>(e[b].first)]++ || used[static_cast<std::size_t>(e[b].second)]++) ok = false;
    }
    if (ok) ++counts[static_cast<std::size_t>(size)];
  }
  return counts;
}

// Same enumeration, accumulating the weight polynomial directly.
std::vector<RatPoly> brute_matching_weights(const Tree& t) {
  const auto& e = t.edges();
  std::vector<RatPoly> c(static_cast<std::size_t>(t.n() / 2) + 1);
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    std::vector<int> used(static_cast<std::size_t>(t.n()) + 1, 0);
    bool ok = true;
    int size = 0;
    for (std::size_t b = 0; b < e.size(); ++b) {
      if (!(mask >> b & 1u)) continue;
      ++size;
      if (used[static_cast<std::size_t>(e[b].first)]++ || used[static_cast<std::size_t>(e[b].second)]++) ok = false;
    }
    if (!ok) continue;
    RatPoly term = RatPoly::monomial(1, 2 * static_cast<std::size_t>(size));
    for (int v = 1; v <= t.n(); ++v) {
      if (!used[static_cast<std::size_t>(v)]) term *= RatPoly{1, 0, t.degree(v) - 1};
    }
    c[static_cast<std::size_t>(size)] += term;
  }
  return c;
}

}  // namespace

TEST_CASE("tree validation") {
  CHECK_NOTHROW(Tree(1, {}));
  CHECK_NOTHROW(Tree(3, {{1, 2}, {2, 3}}));
  CHECK_THROWS_AS(Tree(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{1, 1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(3, {{1, 4}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree(4, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
  CHECK(Tree(3, {{2, 1}, {3, 2}}) == Tree(3, {{2, 3}, {1, 2}}));
  CHECK(Tree(3, {{2, 1}, {3, 2}}).edges().front() == Tree::Edge{1, 2});
}

TEST_CASE("pruefer codec examples") {
  std::vector<int> empty;
  CHECK(pruefer_decode(empty, 2) == Tree(2, {{1, 2}}));
  std::vector<int> two{2};
  CHECK(pruefer_decode(two, 3) == path_tree(3));
  CHECK(pruefer_encode(star_tree(4)) == std::vector<int>{1, 1});
  CHECK(pruefer_encode(path_tree(5)) == std::vector<int>{2, 3, 4});
  std::vector<int> bad{5};
  CHECK_THROWS_AS(pruefer_decode(bad, 3), std::invalid_argument);
  std::vector<int> short_code{1};
  CHECK_THROWS_AS(pruefer_decode(short_code, 4), std::invalid_argument);
  CHECK_THROWS_AS(pruefer_encode(Tree(1, {})), std::invalid_argument);
}

TEST_CASE("property: pruefer round trip on every labeled tree n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    std::set<std::vector<int>> codes;
    std::size_t count = 0;
    TreeGenerator gen(TreeKind::all, n);
    while (auto t = gen.next()) {
      auto code = pruefer_encode(*t);
      CHECK(pruefer_decode(code, n) == *t);
      codes.insert(code);
      ++count;
    }
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
    CHECK(count == expected);
    CHECK(codes.size() == expected);
  }
}

TEST_CASE("generators") {
  CHECK(generate_trees(TreeKind::all, 4).size() == 16);
  CHECK(generate_trees(TreeKind::all, 3).size() == 3);
  CHECK(generate_trees(TreeKind::path, 4).front() == Tree(4, {{1, 2}, {2, 3}, {3, 4}}));
  auto star = generate_trees(TreeKind::star, 5).front();
  CHECK(star.degree(1) == 4);
  CHECK_THROWS_AS(TreeGenerator(TreeKind::all, 10), std::invalid_argument);
  CHECK_THROWS_AS(TreeGenerator(TreeKind::path, 1), std::invalid_argument);
  auto a = generate_trees(TreeKind::random, 8, 7, 20);
  auto b = generate_trees(TreeKind::random, 8, 7, 20);
  CHECK(a.size() == 20);
  CHECK(a == b);
  auto c = generate_trees(TreeKind::random, 8, 8, 20);
  CHECK_FALSE(a == c);
  // Random trees beyond the all-trees cap are allowed.
  CHECK(generate_trees(TreeKind::random, 15, 1, 3).size() == 3);
}

TEST_CASE("q-Laplacian entries") {
  auto l2 = q_laplacian(path_tree(2));
  CHECK(l2(0, 0) == RatPoly::constant(1));
  CHECK(l2(0, 1) == RatPoly{0, -1});
  auto s4 = q_laplacian(star_tree(4));
  CHECK(s4(0, 0) == RatPoly{1, 0, 2});
  CHECK(s4(2, 2) == RatPoly::constant(1));
  CHECK(s4(0, 3) == RatPoly{0, -1});
  CHECK(s4(1, 2).is_zero());
  auto p4 = q_laplacian(path_tree(4));
  CHECK(p4(1, 1) == RatPoly{1, 0, 1});
  CHECK(p4(3, 3) == RatPoly::constant(1));
}

TEST_CASE("property: q-Laplacian symmetric, zero row sums at q = 1") {
  for (const auto& t : generate_trees(TreeKind::all, 5)) {
    auto m = q_laplacian(t);
    for (int r = 0; r < 5; ++r) {
      Rational row = 0;
      for (int c = 0; c < 5; ++c) {
        CHECK(m(r, c) == m(c, r));
        row += m(r, c).eval(1);
      }
      CHECK(row == 0);
    }
  }
}

TEST_CASE("matching weights examples") {
  auto p2 = matching_weights(path_tree(2));
  CHECK(p2[0] == RatPoly::constant(1));
  CHECK(p2[1] == RatPoly{0, 0, 1});
  auto counts = matching_counts(path_tree(4));
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 1);
  for (const auto& t : generate_trees(TreeKind::all, 6)) {
    auto w = matching_weights(t);
    CHECK(w[0].eval(0) == 1);
    for (std::size_t j = 1; j < w.size(); ++j) CHECK(w[j].eval(0) == 0);
  }
  // The star has matching number 1.
  auto star = matching_weights(star_tree(6));
  CHECK(star[2].is_zero());
  CHECK(star[3].is_zero());
}

TEST_CASE("property: matchings against edge-subset brute force") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& t : generate_trees(TreeKind::all, n)) {
      auto counts = matching_counts(t);
      CHECK(counts[1] == static_cast<std::uint64_t>(n - 1));
      CHECK(counts == brute_matching_counts(t));
      CHECK(matching_weights(t) == brute_matching_weights(t));
    }
  }
  for (const auto& t : generate_trees(TreeKind::random, 10, 3, 40)) CHECK(matching_counts(t) == brute_matching_counts(t));
}

TEST_CASE("tree text and literals") {
  Tree t = parse_tree_text("4\n1 2\n2 3\n2 4\n");
  CHECK(t == Tree(4, {{1, 2}, {2, 3}, {2, 4}}));
  CHECK(parse_tree_text(format_tree_text(t)) == t);
  CHECK_THROWS_AS(parse_tree_text("3\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree_text("x\n"), std::invalid_argument);
  CHECK(parse_tree_literal("path:4") == path_tree(4));
  CHECK(parse_tree_literal("star:5") == star_tree(5));
  CHECK(parse_tree_literal("pruefer:1,1") == star_tree(4));
  CHECK(parse_tree_literal("pruefer:") == path_tree(2));
  CHECK(pruefer_literal(star_tree(4)) == "pruefer:1,1");
  CHECK(pruefer_literal(Tree(1, {})) == "path:1");
  CHECK(parse_tree_literal(pruefer_literal(t)) == t);
  CHECK_THROWS_AS(parse_tree_literal("cycle:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tree_literal("pruefer:9"), std::invalid_argument);

  const std::string file = "qimm_test_tree.txt";
  {
    std::ofstream out(file);
    out << format_tree_text(t);
  }
  CHECK(read_tree_file(file) == t);
  CHECK(parse_tree_literal("file:" + file) == t);
  std::remove(file.c_str());
  CHECK_THROWS(read_tree_file("definitely/missing/tree.txt"));
}
