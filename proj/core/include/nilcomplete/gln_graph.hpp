#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilcomplete/error.hpp"
#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/partition.hpp"

namespace nilc {

/// A point of the plane embedding: position (column) x and level y,
/// both >= 1. Level 1 is the bottom row.
struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Arrow source -> target, vertices named by their ordinals.
using ArrowKey = std::pair<int, int>;
using ArrowMap = std::map<ArrowKey, Integer>;

/// A gl_n-graph together with its embedding into Z>0 x Z>0.
///
/// Vertices are identified with their ordinals 1..n (the ordinal function
/// is a bijection and never changes under the transformations used here),
/// so the embedding is stored as ordinal -> point. An arrow u -> v with
/// weight w stands for the matrix entry (ord v, ord u) = w.
class GlnGraph {
 public:
  /// embedding[i] is the point of the vertex with ordinal i+1. Throws
  /// InvalidGraph if it is empty, not injective, or leaves Z>0 x Z>0.
  explicit GlnGraph(std::vector<Point> embedding);

  int size() const noexcept { return static_cast<int>(points_.size()); }

  Point point_of(int ord) const;
  /// ord(x, y), or nullopt if no vertex sits at that point.
  std::optional<int> ordinal_at(Point p) const;

  /// Adds the arrow source -> target. Throws InvalidGraph for a zero
  /// weight, an unknown vertex, or an existing arrow.
  void add_arrow(int source, int target, Integer weight = 1);
  void remove_arrow(int source, int target);
  bool has_arrow(int source, int target) const;

  const ArrowMap& arrows() const noexcept { return arrows_; }
  const std::set<int>& successors(int ord) const;
  const std::set<int>& predecessors(int ord) const;

  /// Dom: the positions of all vertices, ascending.
  std::vector<int> domain() const;
  bool in_domain(int x) const { return columns_.contains(x); }

  /// h(x): highest level in column x. Throws InvalidPosition if x is not
  /// in the domain.
  int height(int x) const;

  /// Ordinals of column x, ordered by level from the bottom. Throws
  /// InvalidPosition if x is not in the domain.
  std::vector<int> column(int x) const;
  /// (level, ordinal) pairs of column x, bottom first. Empty if x is not in the domain.
  const std::map<int, int>& column_levels(int x) const;

  /// Re-embeds one vertex. Throws InvalidGraph if the target point is
  /// occupied or invalid.
  void move_vertex(int ord, Point to);

  friend bool operator==(const GlnGraph& a, const GlnGraph& b) {
    return a.points_ == b.points_ && a.arrows_ == b.arrows_;
  }

 private:
  void check_vertex(int ord) const;

  std::vector<Point> points_;
  std::map<Point, int> by_point_;
  std::map<int, std::map<int, int>> columns_;
  ArrowMap arrows_;
  std::vector<std::set<int>> out_;
  std::vector<std::set<int>> in_;
};

/// graph(A): arrow u -> v of weight a(ord v, ord u) for each nonzero entry.
/// embed and ord are indexed by vertex; ord must be a bijection onto [1, n]
/// and embed injective, otherwise InvalidGraph.
GlnGraph graph_of_matrix(const IntMatrix& a, std::span<const Point> embed,
                         std::span<const int> ord);
/// Same, with the vertex of ordinal i placed at embed_by_ordinal[i-1].
GlnGraph graph_of_matrix(const IntMatrix& a, std::span<const Point> embed_by_ordinal);

IntMatrix matrix_of_graph(const GlnGraph& g);
/// Nonzero entries of matrix_of_graph(g) as 1-based triplets, row-major.
std::vector<Triplet> triplets_of_graph(const GlnGraph& g);

/// The unique properly downward, type-writer ordered graph of N_r with
/// domain [1, r], every column a downward path, and column heights in
/// {floor(n/r), ceil(n/r)} non-decreasing left to right.
GlnGraph canonical_nr_graph(int n, int r);

/// Part(G): the multiset of column heights.
Partition heights(const GlnGraph& g);

bool is_downward(const GlnGraph& g);
bool is_properly_downward(const GlnGraph& g);
/// Throws InvalidPosition if i is not in the domain.
bool is_downward_path(const GlnGraph& g, int i);
/// True iff ord(v) < ord(w) exactly when v is strictly higher than w, or
/// on the same level and strictly to the left.
bool is_typewriter_ordered(const GlnGraph& g, std::span<const int> vertices);
bool is_typewriter_ordered(const GlnGraph& g);

enum class GraftClause {
  NotProperlyDownward,
  PositionNotInDomain,
  ScionNotLeftOfStock,
  StockNotDownwardPath,
  CountOutOfRange,
};

std::string_view to_string(GraftClause clause);

class GraftError : public Error {
 public:
  GraftError(GraftClause clause, const std::string& message)
      : Error(ErrorKind::GraftPrecondition, message), clause_(clause) {}
  GraftClause clause() const noexcept { return clause_; }

 private:
  GraftClause clause_;
};

/// How much of the graft precondition to verify. Local skips the
/// whole-graph properly-downward scan, which is O(n) per graft.
enum class GraftCheck { Full, Local };

/// Grafts the top m vertices of column `stock` onto column `scion`:
/// adds the arrow (stock, h_stock - m + 1) -> (scion, h_scion), then moves
/// vertex (stock, h_stock - m + i) to (scion, h_scion + i) for i in [1, m].
/// Takes the graph by value; pass an rvalue to graft in place.
/// Throws GraftError naming the violated precondition.
GlnGraph graft(GlnGraph g, int scion, int stock, int m, GraftCheck check = GraftCheck::Full);

/// Geometric transformation: moves every vertex of column `from` to the
/// same level in column `to`, which must be empty. Arrows are unchanged.
/// Throws InvalidPosition if `from` is not in the domain or `to` is.
GlnGraph translate_column(GlnGraph g, int from, int to);

/// Graphviz digraph, nodes named by ordinal.
std::string to_dot(const GlnGraph& g);
/// TikZ picture with each node drawn at (x, y-1), so the bottom row sits at y = 0.
std::string to_tikz(const GlnGraph& g);

}  // namespace nilc
