#include "nilcomplete/gln_graph.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "nilcomplete/error.hpp"

namespace nilc {

namespace {

std::string point_text(Point p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

const std::map<int, int>& empty_column() {
  static const std::map<int, int> empty;
  return empty;
}

}  // namespace

GlnGraph::GlnGraph(std::vector<Point> embedding) : points_(std::move(embedding)) {
  if (points_.empty()) throw Error(ErrorKind::InvalidGraph, "a graph needs at least one vertex");
  out_.resize(points_.size());
  in_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point p = points_[i];
    if (p.x < 1 || p.y < 1) {
      throw Error(ErrorKind::InvalidGraph, "vertex " + std::to_string(i + 1) + " embedded at " +
                                               point_text(p) + ", outside Z>0 x Z>0");
    }
    if (!by_point_.emplace(p, static_cast<int>(i + 1)).second) {
      throw Error(ErrorKind::InvalidGraph, "embedding is not injective at " + point_text(p));
    }
    columns_[p.x][p.y] = static_cast<int>(i + 1);
  }
}

void GlnGraph::check_vertex(int ord) const {
  if (ord < 1 || ord > size()) {
    throw Error(ErrorKind::InvalidGraph, "no vertex with ordinal " + std::to_string(ord));
  }
}

Point GlnGraph::point_of(int ord) const {
  check_vertex(ord);
  return points_[static_cast<std::size_t>(ord - 1)];
}

std::optional<int> GlnGraph::ordinal_at(Point p) const {
  auto it = by_point_.find(p);
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

void GlnGraph::add_arrow(int source, int target, Integer weight) {
  check_vertex(source);
  check_vertex(target);
  if (weight == 0) throw Error(ErrorKind::InvalidGraph, "arrow weights must be nonzero");
  if (!arrows_.emplace(ArrowKey{source, target}, std::move(weight)).second) {
    throw Error(ErrorKind::InvalidGraph, "duplicate arrow " + std::to_string(source) + " -> " +
                                             std::to_string(target));
  }
  out_[static_cast<std::size_t>(source - 1)].insert(target);
  in_[static_cast<std::size_t>(target - 1)].insert(source);
}

void GlnGraph::remove_arrow(int source, int target) {
  if (arrows_.erase(ArrowKey{source, target}) == 0) return;
  out_[static_cast<std::size_t>(source - 1)].erase(target);
  in_[static_cast<std::size_t>(target - 1)].erase(source);
}

bool GlnGraph::has_arrow(int source, int target) const {
  return arrows_.contains(ArrowKey{source, target});
}

const std::set<int>& GlnGraph::successors(int ord) const {
  check_vertex(ord);
  return out_[static_cast<std::size_t>(ord - 1)];
}

const std::set<int>& GlnGraph::predecessors(int ord) const {
  check_vertex(ord);
  return in_[static_cast<std::size_t>(ord - 1)];
}

std::vector<int> GlnGraph::domain() const {
  std::vector<int> out;
  out.reserve(columns_.size());
  for (const auto& [x, col] : columns_) out.push_back(x);
  return out;
}

int GlnGraph::height(int x) const {
  auto it = columns_.find(x);
  if (it == columns_.end()) {
    throw Error(ErrorKind::InvalidPosition, "position " + std::to_string(x) + " is not in the domain");
  }
  return it->second.rbegin()->first;
}

std::vector<int> GlnGraph::column(int x) const {
  auto it = columns_.find(x);
  if (it == columns_.end()) {
    throw Error(ErrorKind::InvalidPosition, "position " + std::to_string(x) + " is not in the domain");
  }
  std::vector<int> out;
  out.reserve(it->second.size());
  for (const auto& [y, ord] : it->second) out.push_back(ord);
  return out;
}

const std::map<int, int>& GlnGraph::column_levels(int x) const {
  auto it = columns_.find(x);
  return it == columns_.end() ? empty_column() : it->second;
}

void GlnGraph::move_vertex(int ord, Point to) {
  check_vertex(ord);
  if (to.x < 1 || to.y < 1) {
    throw Error(ErrorKind::InvalidGraph, "cannot embed a vertex at " + point_text(to));
  }
  Point& from = points_[static_cast<std::size_t>(ord - 1)];
  if (from == to) return;
  if (by_point_.contains(to)) {
    throw Error(ErrorKind::InvalidGraph, "point " + point_text(to) + " is occupied");
  }
  by_point_.erase(from);
  auto col = columns_.find(from.x);
  col->second.erase(from.y);
  if (col->second.empty()) columns_.erase(col);
  from = to;
  by_point_.emplace(to, ord);
  columns_[to.x][to.y] = ord;
}

GlnGraph graph_of_matrix(const IntMatrix& a, std::span<const Point> embed,
                         std::span<const int> ord) {
  const int n = a.dim();
  if (static_cast<int>(embed.size()) != n || static_cast<int>(ord.size()) != n) {
    throw Error(ErrorKind::InvalidGraph, "embedding and ordinal function must cover " +
                                             std::to_string(n) + " vertices");
  }
  std::vector<Point> by_ordinal(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    const int o = ord[static_cast<std::size_t>(v)];
    if (o < 1 || o > n || seen[static_cast<std::size_t>(o - 1)]) {
      throw Error(ErrorKind::InvalidGraph, "ordinal function is not a bijection onto [1, " +
                                               std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(o - 1)] = true;
    by_ordinal[static_cast<std::size_t>(o - 1)] = embed[static_cast<std::size_t>(v)];
  }
  return graph_of_matrix(a, by_ordinal);
}

GlnGraph graph_of_matrix(const IntMatrix& a, std::span<const Point> embed_by_ordinal) {
  if (static_cast<int>(embed_by_ordinal.size()) != a.dim()) {
    throw Error(ErrorKind::InvalidGraph, "embedding must cover " + std::to_string(a.dim()) +
                                             " vertices");
  }
  GlnGraph g(std::vector<Point>(embed_by_ordinal.begin(), embed_by_ordinal.end()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a(i, j) != 0) g.add_arrow(j + 1, i + 1, a(i, j));
  return g;
}

IntMatrix matrix_of_graph(const GlnGraph& g) {
  IntMatrix m(g.size());
  for (const auto& [key, w] : g.arrows()) m(key.second - 1, key.first - 1) = w;
  return m;
}

std::vector<Triplet> triplets_of_graph(const GlnGraph& g) {
  std::vector<Triplet> out;
  out.reserve(g.arrows().size());
  for (const auto& [key, w] : g.arrows()) out.push_back({key.second, key.first, w});
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  return out;
}

GlnGraph canonical_nr_graph(int n, int r) {
  if (r <= 0 || r >= n) {
    throw Error(ErrorKind::InvalidShape, "N_r requires 0 < r < n, got n=" + std::to_string(n) +
                                             " r=" + std::to_string(r));
  }
  const int rprime = n % r;
  const int low = n / r;
  const int high = (n + r - 1) / r;
  auto column_height = [&](int x) { return x > r - rprime ? high : low; };

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int y = high; y >= 1; --y)
    for (int x = 1; x <= r; ++x)
      if (column_height(x) >= y) points.push_back({x, y});

  GlnGraph g(std::move(points));
  for (int x = 1; x <= r; ++x) {
    const auto& col = g.column_levels(x);
    for (auto it = std::next(col.begin()); it != col.end(); ++it) {
      g.add_arrow(it->second, std::prev(it)->second);
    }
  }
  return g;
}

Partition heights(const GlnGraph& g) {
  std::vector<int> hs;
  for (int x : g.domain()) hs.push_back(g.height(x));
  return Partition::normalize(hs);
}

bool is_downward(const GlnGraph& g) {
  for (const auto& [key, w] : g.arrows()) {
    if (g.point_of(key.first).y <= g.point_of(key.second).y) return false;
  }
  return true;
}

bool is_properly_downward(const GlnGraph& g) {
  for (const auto& [key, w] : g.arrows()) {
    const Point v = g.point_of(key.first);
    const Point u = g.point_of(key.second);
    if (v.y <= u.y) return false;
    if (v.y == u.y + 1 && v.x > u.x) return false;
  }
  for (int ord = 1; ord <= g.size(); ++ord) {
    const Point p = g.point_of(ord);
    if (p.y == 1) continue;
    auto below = g.ordinal_at({p.x, p.y - 1});
    if (!below || !g.has_arrow(ord, *below)) return false;
  }
  return true;
}

bool is_downward_path(const GlnGraph& g, int i) {
  const auto& col = g.column_levels(i);
  if (col.empty()) {
    throw Error(ErrorKind::InvalidPosition, "position " + std::to_string(i) + " is not in the domain");
  }
  for (const auto& [y, ord] : col) {
    auto below = col.find(y - 1);
    auto above = col.find(y + 1);
    const auto& succ = g.successors(ord);
    const auto& pred = g.predecessors(ord);
    if (below == col.end() ? !succ.empty() : (succ.size() != 1 || *succ.begin() != below->second))
      return false;
    if (above == col.end() ? !pred.empty() : (pred.size() != 1 || *pred.begin() != above->second))
      return false;
  }
  return true;
}

bool is_typewriter_ordered(const GlnGraph& g, std::span<const int> vertices) {
  std::vector<int> ords(vertices.begin(), vertices.end());
  std::sort(ords.begin(), ords.end());
  for (std::size_t i = 1; i < ords.size(); ++i) {
    const Point a = g.point_of(ords[i - 1]);
    const Point b = g.point_of(ords[i]);
    const bool before = a.y > b.y || (a.y == b.y && a.x < b.x);
    if (!before) return false;
  }
  return true;
}

bool is_typewriter_ordered(const GlnGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return is_typewriter_ordered(g, all);
}

std::string_view to_string(GraftClause clause) {
  switch (clause) {
    case GraftClause::NotProperlyDownward: return "not-properly-downward";
    case GraftClause::PositionNotInDomain: return "position-not-in-domain";
    case GraftClause::ScionNotLeftOfStock: return "t>=s";
    case GraftClause::StockNotDownwardPath: return "not-downward-path";
    case GraftClause::CountOutOfRange: return "m-out-of-range";
  }
  return "unknown";
}

GlnGraph graft(GlnGraph g, int scion, int stock, int m, GraftCheck check) {
  auto fail = [&](GraftClause clause, const std::string& detail) -> GraftError {
    return GraftError(clause, "graft of " + std::to_string(m) + " vertices from column " +
                                  std::to_string(stock) + " to column " + std::to_string(scion) +
                                  ": " + std::string(to_string(clause)) + " (" + detail + ")");
  };
  if (!g.in_domain(scion)) {
    throw fail(GraftClause::PositionNotInDomain, "scion " + std::to_string(scion));
  }
  if (!g.in_domain(stock)) {
    throw fail(GraftClause::PositionNotInDomain, "stock " + std::to_string(stock));
  }
  if (scion >= stock) throw fail(GraftClause::ScionNotLeftOfStock, "scion must be left of stock");
  const int stock_height = g.height(stock);
  const int scion_height = g.height(scion);
  if (m <= 0 || m > stock_height) {
    throw fail(GraftClause::CountOutOfRange, "stock height " + std::to_string(stock_height));
  }
  if (!is_downward_path(g, stock)) {
    throw fail(GraftClause::StockNotDownwardPath, "column " + std::to_string(stock));
  }
  if (check == GraftCheck::Full && !is_properly_downward(g)) {
    throw fail(GraftClause::NotProperlyDownward, "input graph");
  }

  std::vector<int> moving;
  moving.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    auto ord = g.ordinal_at({stock, stock_height - m + i});
    if (!ord) throw fail(GraftClause::NotProperlyDownward, "gap in the stock column");
    moving.push_back(*ord);
  }
  const int scion_top = *g.ordinal_at({scion, scion_height});

  g.add_arrow(moving.front(), scion_top);
  for (int i = 1; i <= m; ++i) {
    g.move_vertex(moving[static_cast<std::size_t>(i - 1)], {scion, scion_height + i});
  }
  return g;
}

GlnGraph translate_column(GlnGraph g, int from, int to) {
  if (to < 1 || g.in_domain(to)) {
    throw Error(ErrorKind::InvalidPosition,
                "cannot translate onto occupied or invalid position " + std::to_string(to));
  }
  for (const auto& [y, ord] : std::map<int, int>(g.column_levels(from))) g.move_vertex(ord, {to, y});
  if (!g.in_domain(to)) {
    throw Error(ErrorKind::InvalidPosition, "position " + std::to_string(from) + " is not in the domain");
  }
  return g;
}

std::string to_dot(const GlnGraph& g) {
  std::ostringstream os;
  os << "digraph gln {\n";
  for (int ord = 1; ord <= g.size(); ++ord) {
    const Point p = g.point_of(ord);
    os << "  v" << ord << " [label=\"" << ord << "\", pos=\"" << p.x << ',' << p.y - 1
       << "!\"];\n";
  }
  for (const auto& [key, w] : g.arrows()) {
    os << "  v" << key.first << " -> v" << key.second;
    if (w != 1) os << " [label=\"" << w << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_tikz(const GlnGraph& g) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}\n [inner sep=0.5mm, place/.style={circle, draw}]\n";
  for (int x : g.domain()) {
    for (const auto& [y, ord] : g.column_levels(x)) {
      os << "\\node (" << ord << ") at (" << x << ',' << y - 1 << ") [place] {\\tiny{" << ord
         << "}};\n";
    }
  }
  for (const auto& [key, w] : g.arrows()) {
    os << "\\draw [thick,->] (" << key.first << ") -- (" << key.second << ")";
    if (w != 1) os << " node[midway,right] {\\tiny{" << w << "}}";
    os << ";\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace nilc
