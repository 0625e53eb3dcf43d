#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qimm/exactpoly.hpp"

namespace qimm {

/// Labeled tree on vertices 1..n.
///
/// Vertices are 1-indexed throughout the library (edges, Prüfer codes, tree
/// files). Edges are stored with the smaller endpoint first, in input order.
class Tree {
public:
  using Edge = std::pair<int, int>;

  /// Throws std::invalid_argument unless the edges form a tree on 1..n.
  Tree(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }

  /// Equality is on the edge set, independent of edge order.
  friend bool operator==(const Tree& a, const Tree& b);

private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;  // indexed by vertex, slot 0 unused
};

std::vector<int> pruefer_encode(const Tree& tree);
Tree pruefer_decode(std::span<const int> code, int n);

Tree path_tree(int n);
/// Star centered at vertex 1.
Tree star_tree(int n);

enum class TreeKind { path, star, all, random };

inline constexpr int kMaxAllTreesN = 9;

/// Lazily produces trees of one kind.
///
/// path/star yield a single tree; all walks every Prüfer sequence in
/// lexicographic order (n^(n-2) trees, n <= kMaxAllTreesN); random yields
/// `random_count` trees from uniformly random Prüfer sequences.
class TreeGenerator {
public:
  TreeGenerator(TreeKind kind, int n, std::uint64_t seed = 0, std::size_t random_count = 1);

  std::optional<Tree> next();

private:
  TreeKind kind_;
  int n_;
  std::mt19937_64 rng_;
  std::size_t remaining_;
  std::vector<int> code_;
  bool done_ = false;
};

std::vector<Tree> generate_trees(TreeKind kind, int n, std::uint64_t seed = 0, std::size_t random_count = 1);

/// Square matrix of polynomials, row-major, 0-indexed (row v-1 is vertex v).
class PolyMatrix {
public:
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int n() const { return n_; }
  RatPoly& operator()(int row, int col) { return entries_[index(row, col)]; }
  const RatPoly& operator()(int row, int col) const { return entries_[index(row, col)]; }

private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int n_;
  std::vector<RatPoly> entries_;
};

/// I + (D - I) q^2 - q A.
PolyMatrix q_laplacian(const Tree& tree);

/// 1 + (deg - 1) q^2, the diagonal entry at a vertex of degree `deg`.
RatPoly vertex_weight(int deg);

/// c_j(q) for j = 0..floor(n/2): the sum over size-j matchings M of
/// q^(2j) * prod over unmatched v of (1 + (deg v - 1) q^2).
std::vector<RatPoly> matching_weights(const Tree& tree);

/// Number of size-j matchings for j = 0..floor(n/2).
std::vector<std::uint64_t> matching_counts(const Tree& tree);

/// Text format: first line n, then one "u v" line per edge.
Tree read_tree_file(const std::string& path);
Tree parse_tree_text(std::string_view text);
std::string format_tree_text(const Tree& tree);

/// Accepts "path:N", "star:N", "pruefer:a,b,c" (n = length + 2, so the empty
/// "pruefer:" is the single edge) and "file:PATH".
Tree parse_tree_literal(std::string_view literal);
/// "pruefer:..." for n >= 2, "path:1" for the single vertex.
std::string pruefer_literal(const Tree& tree);

}  // namespace qimm
