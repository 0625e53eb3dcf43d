#include "qimm/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qimm {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (edges_.size() != static_cast<std::size_t>(n_ - 1)) {
    throw std::invalid_argument("tree on " + std::to_string(n_) + " vertices needs " + std::to_string(n_ - 1) +
                                " edges, got " + std::to_string(edges_.size()));
  }
  degree_.assign(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> parent(static_cast<std::size_t>(n_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u < 1 || u > n_ || v < 1 || v > n_) {
      throw std::invalid_argument("edge endpoint out of range 1.." + std::to_string(n_));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    int ru = find_root(parent, u);
    int rv = find_root(parent, v);
    if (ru == rv) throw std::invalid_argument("edges contain a cycle");
    parent[static_cast<std::size_t>(ru)] = rv;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
  }
  // n-1 acyclic edges on n vertices are automatically connected.
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.n_ != b.n_) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

std::vector<int> pruefer_encode(const Tree& tree) {
  const int n = tree.n();
  if (n < 2) throw std::invalid_argument("Prüfer code needs n >= 2");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : tree.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    degree[static_cast<std::size_t>(v)] = tree.degree(v);
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n - 2));
  for (int step = 0; step < n - 2; ++step) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    removed[static_cast<std::size_t>(leaf)] = true;
    for (int w : adj[static_cast<std::size_t>(leaf)]) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      code.push_back(w);
      if (--degree[static_cast<std::size_t>(w)] == 1) leaves.insert(w);
    }
  }
  return code;
}

Tree pruefer_decode(std::span<const int> code, int n) {
  if (n < 2) throw std::invalid_argument("Prüfer decode needs n >= 2");
  if (code.size() != static_cast<std::size_t>(n - 2)) {
    throw std::invalid_argument("Prüfer code for n=" + std::to_string(n) + " must have length " +
                                std::to_string(n - 2));
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int label : code) {
    if (label < 1 || label > n) {
      throw std::invalid_argument("Prüfer label " + std::to_string(label) + " out of range 1.." + std::to_string(n));
    }
    ++degree[static_cast<std::size_t>(label)];
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  }
  std::vector<Tree::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int label : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, label);
    if (--degree[static_cast<std::size_t>(label)] == 1) leaves.insert(label);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return Tree(n, std::move(edges));
}

Tree path_tree(int n) {
  std::vector<Tree::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Tree(n, std::move(edges));
}

Tree star_tree(int n) {
  std::vector<Tree::Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Tree(n, std::move(edges));
}

TreeGenerator::TreeGenerator(TreeKind kind, int n, std::uint64_t seed, std::size_t random_count)
    : kind_(kind), n_(n), rng_(seed), remaining_(random_count) {
  if (n < 2) throw std::invalid_argument("tree generation needs n >= 2");
  if (kind == TreeKind::all && n > kMaxAllTreesN) {
    throw std::invalid_argument("kind=all is capped at n <= " + std::to_string(kMaxAllTreesN) +
                                "; use random sampling for larger n");
  }
  code_.assign(static_cast<std::size_t>(n - 2), 1);
}

std::optional<Tree> TreeGenerator::next() {
  if (done_) return std::nullopt;
  switch (kind_) {
    case TreeKind::path:
      done_ = true;
      return path_tree(n_);
    case TreeKind::star:
      done_ = true;
      return star_tree(n_);
    case TreeKind::random: {
      if (remaining_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --remaining_;
      std::uniform_int_distribution<int> label(1, n_);
      for (auto& c : code_) c = label(rng_);
      return pruefer_decode(code_, n_);
    }
    case TreeKind::all: {
      Tree out = pruefer_decode(code_, n_);
      // odometer increment, last position fastest
      std::size_t pos = code_.size();
      while (pos > 0) {
        --pos;
        if (code_[pos] < n_) {
          ++code_[pos];
          break;
        }
        code_[pos] = 1;
        if (pos == 0) done_ = true;
      }
      if (code_.empty()) done_ = true;
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Tree> generate_trees(TreeKind kind, int n, std::uint64_t seed, std::size_t random_count) {
  TreeGenerator gen(kind, n, seed, random_count);
  std::vector<Tree> out;
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

RatPoly vertex_weight(int deg) { return RatPoly{1, 0, Rational(deg - 1)}; }

PolyMatrix q_laplacian(const Tree& tree) {
  const int n = tree.n();
  PolyMatrix m(n);
  for (int v = 1; v <= n; ++v) m(v - 1, v - 1) = vertex_weight(tree.degree(v));
  const RatPoly minus_q{0, -1};
  for (auto [u, v] : tree.edges()) {
    m(u - 1, v - 1) = minus_q;
    m(v - 1, u - 1) = minus_q;
  }
  return m;
}

namespace {

// Matchings grouped by (size, multiset of unmatched degrees); the weight of a
// matching depends on nothing else.
struct MatchingClasses {
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> counts;
};

void enumerate_matchings(const Tree& tree, std::size_t edge_index, std::vector<bool>& matched, int size,
                         MatchingClasses& out) {
  const auto& edges = tree.edges();
  if (edge_index == edges.size()) {
    std::vector<int> histogram(static_cast<std::size_t>(tree.n()) + 1, 0);
    for (int v = 1; v <= tree.n(); ++v) {
      if (!matched[static_cast<std::size_t>(v)]) ++histogram[static_cast<std::size_t>(tree.degree(v))];
    }
    ++out.counts[{size, std::move(histogram)}];
    return;
  }
  enumerate_matchings(tree, edge_index + 1, matched, size, out);
  auto [u, v] = edges[edge_index];
  if (!matched[static_cast<std::size_t>(u)] && !matched[static_cast<std::size_t>(v)]) {
    matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = true;
    enumerate_matchings(tree, edge_index + 1, matched, size + 1, out);
    matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(v)] = false;
  }
}

MatchingClasses classify_matchings(const Tree& tree) {
  MatchingClasses classes;
  std::vector<bool> matched(static_cast<std::size_t>(tree.n()) + 1, false);
  enumerate_matchings(tree, 0, matched, 0, classes);
  return classes;
}

}  // namespace

std::vector<RatPoly> matching_weights(const Tree& tree) {
  const std::size_t top = static_cast<std::size_t>(tree.n() / 2);
  std::vector<RatPoly> c(top + 1);
  for (const auto& [key, count] : classify_matchings(tree).counts) {
    const auto& [size, histogram] = key;
    RatPoly term = RatPoly::monomial(Rational(Integer(static_cast<unsigned long>(count))),
                                     2 * static_cast<std::size_t>(size));
    for (std::size_t deg = 0; deg < histogram.size(); ++deg) {
      if (histogram[deg] > 0) {
        term *= pow(vertex_weight(static_cast<int>(deg)), static_cast<unsigned>(histogram[deg]));
      }
    }
    c[static_cast<std::size_t>(size)] += term;
  }
  return c;
}

std::vector<std::uint64_t> matching_counts(const Tree& tree) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(tree.n() / 2) + 1, 0);
  for (const auto& [key, count] : classify_matchings(tree).counts) {
    counts[static_cast<std::size_t>(key.first)] += count;
  }
  return counts;
}

Tree parse_tree_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  if (!(in >> n)) throw std::invalid_argument("tree text must start with the vertex count");
  std::vector<Tree::Edge> edges;
  long u = 0;
  long v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("dangling endpoint in tree text");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof()) throw std::invalid_argument("non-numeric token in tree text");
  return Tree(static_cast<int>(n), std::move(edges));
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open tree file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tree_text(buf.str());
}

std::string format_tree_text(const Tree& tree) {
  std::string out = std::to_string(tree.n()) + "\n";
  for (auto [u, v] : tree.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Tree parse_tree_literal(std::string_view literal) {
  auto colon = literal.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("tree literal must look like path:N, star:N, pruefer:a,b,... or file:PATH");
  }
  std::string_view kind = literal.substr(0, colon);
  std::string_view arg = literal.substr(colon + 1);
  if (kind == "path") return path_tree(parse_int(arg, "vertex count"));
  if (kind == "star") return star_tree(parse_int(arg, "vertex count"));
  if (kind == "file") return read_tree_file(std::string(arg));
  if (kind == "pruefer") {
    std::vector<int> code;
    while (!arg.empty()) {
      auto comma = arg.find(',');
      code.push_back(parse_int(arg.substr(0, comma), "Prüfer label"));
      if (comma == std::string_view::npos) break;
      arg.remove_prefix(comma + 1);
    }
    return pruefer_decode(code, static_cast<int>(code.size()) + 2);
  }
  throw std::invalid_argument("unknown tree kind '" + std::string(kind) + "'");
}

std::string pruefer_literal(const Tree& tree) {
  if (tree.n() < 2) return "path:1";
  std::string out = "pruefer:";
  auto code = pruefer_encode(tree);
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(code[i]);
  }
  return out;
}

}  // namespace qimm
