#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

/// Color `index` (1-based) in the list of vertex `vertex`.
struct Color {
  Vertex vertex;
  int index;

  friend auto operator<=>(const Color&, const Color&) = default;
};

/// Cross edges between L(u) and L(v) for u < v, as (index in L(u), index in L(v)).
using CrossEdgeSet = std::set<std::pair<int, int>>;

/// A cover (L,H) of a multigraph.
///
/// L(v) is the index range 1..list_size(v). The clique on each L(v) is implicit;
/// only edges between lists of distinct vertices are stored.
class Cover {
 public:
  Cover() = default;

  Cover(Multigraph base, std::vector<int> list_sizes) : base_(std::move(base)), sizes_(std::move(list_sizes)) {
    if (static_cast<int>(sizes_.size()) != base_.order()) throw std::invalid_argument("one list size per vertex required");
    for (int s : sizes_)
      if (s < 0) throw std::invalid_argument("negative list size");
  }

  const Multigraph& base() const noexcept { return base_; }
  int order() const noexcept { return base_.order(); }
  int list_size(Vertex v) const { return sizes_.at(v - 1); }
  const std::vector<int>& list_sizes() const noexcept { return sizes_; }

  /// Appends `extra` fresh colors (with no cross edges) to L(v).
  Cover& grow_list(Vertex v, int extra = 1) {
    if (extra < 0) throw std::invalid_argument("negative growth");
    sizes_.at(v - 1) += extra;
    return *this;
  }

  Cover& add_cross_edge(Color a, Color b) {
    check_color(a);
    check_color(b);
    if (a.vertex == b.vertex) throw std::invalid_argument("cross edge inside a single list");
    if (a.vertex > b.vertex) std::swap(a, b);
    cross_[{a.vertex, b.vertex}].insert({a.index, b.index});
    return *this;
  }

  Cover& add_cross_edge(Vertex u, int i, Vertex v, int j) { return add_cross_edge(Color{u, i}, Color{v, j}); }

  bool has_cross_edge(Color a, Color b) const {
    if (a.vertex == b.vertex) return false;
    if (a.vertex > b.vertex) std::swap(a, b);
    auto it = cross_.find({a.vertex, b.vertex});
    return it != cross_.end() && it->second.count({a.index, b.index});
  }

  /// Cross edges between L(u) and L(v), oriented as (index in L(u), index in L(v)).
  CrossEdgeSet cross_edges(Vertex u, Vertex v) const {
    auto it = cross_.find(std::minmax(u, v));
    if (it == cross_.end()) return {};
    if (u < v) return it->second;
    CrossEdgeSet flipped;
    for (auto [i, j] : it->second) flipped.insert({j, i});
    return flipped;
  }

  /// All stored vertex pairs (u < v) carrying at least one cross edge.
  const std::map<std::pair<Vertex, Vertex>, CrossEdgeSet>& cross_map() const noexcept { return cross_; }

  std::size_t cross_edge_count() const {
    std::size_t total = 0;
    for (const auto& [pair, set] : cross_) total += set.size();
    return total;
  }

  /// Cross neighbours of color c in L(other).
  std::vector<int> neighbors_in(Color c, Vertex other) const {
    std::vector<int> out;
    for (auto [i, j] : cross_edges(c.vertex, other))
      if (i == c.index) out.push_back(j);
    return out;
  }

  friend bool operator==(const Cover& a, const Cover& b) {
    if (!(a.base_ == b.base_) || a.sizes_ != b.sizes_) return false;
    auto strip = [](const Cover& c) {
      std::map<std::pair<Vertex, Vertex>, CrossEdgeSet> m;
      for (const auto& [k, s] : c.cross_)
        if (!s.empty()) m.emplace(k, s);
      return m;
    };
    return strip(a) == strip(b);
  }

 private:
  void check_color(Color c) const {
    if (!base_.contains(c.vertex)) throw std::out_of_range("color vertex out of range");
    if (c.index < 1 || c.index > list_size(c.vertex))
      throw std::out_of_range("color index " + std::to_string(c.index) + " outside L(" + std::to_string(c.vertex) + ")");
  }

  Multigraph base_;
  std::vector<int> sizes_;
  std::map<std::pair<Vertex, Vertex>, CrossEdgeSet> cross_;
};

/// One chosen color index per vertex; choice[v-1] is the index into L(v).
struct Transversal {
  std::vector<int> choice;

  int at(Vertex v) const { return choice.at(v - 1); }
  friend bool operator==(const Transversal&, const Transversal&) = default;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  Vertex u;
  Vertex v;
  Color color;  // offending color; index 0 when the whole pair is at fault
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks that cross edges only join adjacent vertices and that every bipartite
/// graph H[L(u), L(v)] has maximum degree <= e_G(u,v). By König's edge-colouring
/// theorem that is the same as being a union of e_G(u,v) matchings.
inline ValidationReport validate(const Cover& c) {
  ValidationReport report;
  for (const auto& [pair, edges] : c.cross_map()) {
    if (edges.empty()) continue;
    const auto [u, v] = pair;
    const int e = c.base().multiplicity(u, v);
    if (e == 0) {
      report.violations.push_back({u, v, {u, 0}, "cross edges between non-adjacent vertices"});
      continue;
    }
    std::map<int, int> deg_u, deg_v;
    for (auto [i, j] : edges) {
      if (i < 1 || i > c.list_size(u) || j < 1 || j > c.list_size(v))
        report.violations.push_back({u, v, {u, i}, "color index out of range"});
      ++deg_u[i];
      ++deg_v[j];
    }
    for (auto [i, d] : deg_u)
      if (d > e)
        report.violations.push_back({u, v, {u, i}, "bipartite degree " + std::to_string(d) + " > e=" + std::to_string(e)});
    for (auto [j, d] : deg_v)
      if (d > e)
        report.violations.push_back({u, v, {v, j}, "bipartite degree " + std::to_string(d) + " > e=" + std::to_string(e)});
  }
  return report;
}

inline std::string describe(const Violation& v) {
  std::ostringstream out;
  out << "pair (" << v.u << "," << v.v << ")";
  if (v.color.index > 0) out << " color (" << v.color.vertex << "," << v.color.index << ")";
  out << ": " << v.message;
  return out.str();
}

/// Degree cover: |L(v)| = deg_G(v) for every v.
inline bool is_degree_cover(const Cover& c) {
  for (Vertex v = 1; v <= c.order(); ++v)
    if (c.list_size(v) != c.base().degree(v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Constructions

/// H(G,L) for a simple graph: (u,i) ~ (v,j) iff uv is an edge and the i-th color
/// of L(u) equals the j-th color of L(v). Lists are taken as given (sorted, no repeats required).
inline Cover reduce_list(const Multigraph& g, const std::vector<std::vector<int>>& lists) {
  if (!g.is_simple()) throw std::invalid_argument("reduce_list: base graph must be simple");
  if (static_cast<int>(lists.size()) != g.order()) throw std::invalid_argument("reduce_list: one list per vertex required");
  std::vector<int> sizes;
  for (const auto& l : lists) {
    if (std::set<int>(l.begin(), l.end()).size() != l.size()) throw std::invalid_argument("reduce_list: repeated color in a list");
    sizes.push_back(static_cast<int>(l.size()));
  }
  Cover c(g, sizes);
  for (const auto& e : g.edges()) {
    const auto& lu = lists[e.u - 1];
    const auto& lv = lists[e.v - 1];
    for (std::size_t i = 0; i < lu.size(); ++i)
      for (std::size_t j = 0; j < lv.size(); ++j)
        if (lu[i] == lv[j]) c.add_cross_edge(e.u, static_cast<int>(i + 1), e.v, static_cast<int>(j + 1));
  }
  return c;
}

/// Cover with |L(v)| = k and the identity matching on every edge: colorable iff G is k-colorable.
inline Cover product_reduction(const Multigraph& g, int k) {
  if (k < 1) throw std::invalid_argument("product_reduction: k must be positive");
  if (!g.is_simple()) throw std::invalid_argument("product_reduction: base graph must be simple");
  Cover c(g, std::vector<int>(g.order(), k));
  for (const auto& e : g.edges())
    for (int i = 1; i <= k; ++i) c.add_cross_edge(e.u, i, e.v, i);
  return c;
}

/// Uncolorable degree cover of K_n^k. Color (i,j), i in [n-1], j in [k], has index (i-1)k+j;
/// two colors of distinct vertices are adjacent iff they share i.
inline Cover build_bad_complete(int n, int k) {
  if (n < 2) throw std::invalid_argument("build_bad_complete: n must be at least 2");
  if (k < 1) throw std::invalid_argument("build_bad_complete: k must be positive");
  Cover c(complete_graph(n, k), std::vector<int>(n, k * (n - 1)));
  auto idx = [k](int i, int j) { return (i - 1) * k + j; };
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      for (int i = 1; i <= n - 1; ++i)
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= k; ++b) c.add_cross_edge(u, idx(i, a), v, idx(i, b));
  return c;
}

/// Uncolorable degree cover of C_n^k. Color (i,j), i in [2], j in [k], has index (i-1)k+j.
/// Consecutive vertices join colors with equal i; the closing pair {1,n} joins
/// colors with i_1 = i_n + 1 + n (mod 2), which makes the parity constraint unsatisfiable.
inline Cover build_bad_cycle(int n, int k) {
  if (n < 3) throw std::invalid_argument("build_bad_cycle: n must be at least 3");
  if (k < 1) throw std::invalid_argument("build_bad_cycle: k must be positive");
  Cover c(cycle_graph(n, k), std::vector<int>(n, 2 * k));
  auto idx = [k](int i, int j) { return (i - 1) * k + j; };
  for (Vertex v = 1; v < n; ++v)
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) c.add_cross_edge(v, idx(i, a), v + 1, idx(i, b));
  for (int i1 = 1; i1 <= 2; ++i1)
    for (int in = 1; in <= 2; ++in)
      if ((i1 - in - 1 - n) % 2 == 0)
        for (int a = 1; a <= k; ++a)
          for (int b = 1; b <= k; ++b) c.add_cross_edge(1, idx(i1, a), n, idx(in, b));
  return c;
}

/// A cover together with the global labels of its vertices (labels[v-1] for local v).
struct LabeledCover {
  Cover cover;
  std::vector<Vertex> labels;
};

/// Vertex amalgam of two covers whose label sets meet in exactly one vertex w.
/// The result's vertices are the union of labels in increasing order; L(w) is
/// L_1(w) followed by L_2(w) (indices of the second part shifted by |L_1(w)|).
inline LabeledCover glue(const LabeledCover& a, const LabeledCover& b) {
  std::set<Vertex> la(a.labels.begin(), a.labels.end()), lb(b.labels.begin(), b.labels.end());
  if (la.size() != a.labels.size() || lb.size() != b.labels.size()) throw std::invalid_argument("glue: repeated labels");
  if (static_cast<int>(a.labels.size()) != a.cover.order() || static_cast<int>(b.labels.size()) != b.cover.order())
    throw std::invalid_argument("glue: label count mismatch");
  std::vector<Vertex> shared;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(shared));
  if (shared.size() != 1) throw std::invalid_argument("glue: covers must share exactly one vertex");
  const Vertex w = shared.front();

  std::set<Vertex> all(la);
  all.insert(lb.begin(), lb.end());
  std::vector<Vertex> labels(all.begin(), all.end());
  auto local = [&](Vertex global) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), global) - labels.begin() + 1);
  };

  Multigraph g(static_cast<int>(labels.size()));
  std::vector<int> sizes(labels.size(), 0);
  for (const LabeledCover* part : {&a, &b}) {
    for (const auto& e : part->cover.base().edges())
      g.add_edges(local(part->labels[e.u - 1]), local(part->labels[e.v - 1]), e.multiplicity);
    for (Vertex v = 1; v <= part->cover.order(); ++v) sizes[local(part->labels[v - 1]) - 1] += part->cover.list_size(v);
  }
  Cover out(std::move(g), std::move(sizes));
  for (const LabeledCover* part : {&a, &b}) {
    const bool second = part == &b;
    auto shifted = [&](Vertex local_v, int index) {
      const Vertex gv = part->labels[local_v - 1];
      int offset = 0;
      if (second && gv == w) offset = a.cover.list_size(static_cast<Vertex>(std::find(a.labels.begin(), a.labels.end(), w) - a.labels.begin() + 1));
      return Color{local(gv), index + offset};
    };
    for (const auto& [pair, edges] : part->cover.cross_map())
      for (auto [i, j] : edges) out.add_cross_edge(shifted(pair.first, i), shifted(pair.second, j));
  }
  return {std::move(out), std::move(labels)};
}

/// Glue over local vertices: c2's vertex w2 is identified with c1's vertex w1; the other
/// vertices of c2 follow those of c1 in order.
inline Cover glue(const Cover& c1, Vertex w1, const Cover& c2, Vertex w2) {
  if (!c1.base().contains(w1) || !c2.base().contains(w2)) throw std::out_of_range("glue: shared vertex out of range");
  LabeledCover a{c1, {}}, b{c2, {}};
  for (Vertex v = 1; v <= c1.order(); ++v) a.labels.push_back(v);
  Vertex next = c1.order() + 1;
  for (Vertex v = 1; v <= c2.order(); ++v) b.labels.push_back(v == w2 ? w1 : next++);
  return glue(a, b).cover;
}

/// Gauge transformation: color i of L(v) becomes perms[v-1][i-1] (each a permutation of 1..|L(v)|).
inline Cover relabel_colors(const Cover& c, const std::vector<std::vector<int>>& perms) {
  if (static_cast<int>(perms.size()) != c.order()) throw std::invalid_argument("relabel_colors: one permutation per vertex");
  for (Vertex v = 1; v <= c.order(); ++v) {
    auto p = perms[v - 1];
    std::sort(p.begin(), p.end());
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (static_cast<int>(p.size()) != c.list_size(v) || p[i] != i + 1) throw std::invalid_argument("relabel_colors: not a permutation");
  }
  Cover out(c.base(), c.list_sizes());
  for (const auto& [pair, edges] : c.cross_map())
    for (auto [i, j] : edges) out.add_cross_edge(pair.first, perms[pair.first - 1][i - 1], pair.second, perms[pair.second - 1][j - 1]);
  return out;
}

/// Restriction to the vertices `keep` (renumbered 1..|keep| in the given order).
inline Cover restrict_cover(const Cover& c, const std::vector<Vertex>& keep) {
  std::vector<int> sizes;
  std::map<Vertex, Vertex> local;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sizes.push_back(c.list_size(keep[i]));
    local[keep[i]] = static_cast<Vertex>(i + 1);
  }
  Cover out(c.base().induced(keep), sizes);
  for (const auto& [pair, edges] : c.cross_map()) {
    auto a = local.find(pair.first), b = local.find(pair.second);
    if (a == local.end() || b == local.end()) continue;
    for (auto [i, j] : edges) out.add_cross_edge(a->second, i, b->second, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format: `n`, then list sizes, then `u i v j` per cross edge with u < v.

struct ParsedCover {
  int n = 0;
  std::vector<int> list_sizes;
  std::vector<std::pair<Color, Color>> cross_edges;
};

/// Syntax-level parse; the base graph is supplied separately when building the Cover.
inline ParsedCover parse_cover_text(std::istream& in) {
  auto lines = detail::tokenize_lines(in);
  if (lines.empty()) throw ParseError("empty cover input");
  ParsedCover out;
  const auto& [l1, head] = lines[0];
  if (head.size() != 1) throw ParseError("first line must hold the vertex count", l1);
  const long long n = detail::parse_int(head[0], l1);
  if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", l1);
  out.n = static_cast<int>(n);
  std::size_t next = 1;
  if (n > 0) {
    if (lines.size() < 2) throw ParseError("missing list sizes line");
    const auto& [l2, sizes] = lines[1];
    if (static_cast<long long>(sizes.size()) != n) throw ParseError("expected " + std::to_string(n) + " list sizes", l2);
    for (const auto& tok : sizes) {
      long long s = detail::parse_int(tok, l2);
      if (s < 0 || s > 1'000'000) throw ParseError("list size out of range", l2);
      out.list_sizes.push_back(static_cast<int>(s));
    }
    next = 2;
  }
  std::set<std::pair<Color, Color>> seen;
  for (std::size_t k = next; k < lines.size(); ++k) {
    const auto& [ln, t] = lines[k];
    if (t.size() != 4) throw ParseError("expected `u i v j`", ln);
    long long u = detail::parse_int(t[0], ln), i = detail::parse_int(t[1], ln);
    long long v = detail::parse_int(t[2], ln), j = detail::parse_int(t[3], ln);
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("vertex out of range", ln);
    if (u >= v) throw ParseError("cross edges must be written with u < v", ln);
    if (i < 1 || i > out.list_sizes[u - 1] || j < 1 || j > out.list_sizes[v - 1]) throw ParseError("color index out of range", ln);
    std::pair<Color, Color> edge{{static_cast<Vertex>(u), static_cast<int>(i)}, {static_cast<Vertex>(v), static_cast<int>(j)}};
    if (!seen.insert(edge).second) throw ParseError("duplicate cross edge", ln);
    out.cross_edges.push_back(edge);
  }
  return out;
}

/// Builds a cover over `base` from parsed text. Validity is not enforced here.
inline Cover make_cover(const Multigraph& base, const ParsedCover& parsed) {
  if (parsed.n != base.order()) throw ParseError("cover has " + std::to_string(parsed.n) + " vertices but graph has " + std::to_string(base.order()));
  Cover c(base, parsed.list_sizes);
  for (const auto& [a, b] : parsed.cross_edges) c.add_cross_edge(a, b);
  return c;
}

/// Without a graph, every pair that carries cross edges is taken as a single edge.
inline Multigraph implied_simple_base(const ParsedCover& parsed) {
  Multigraph g(parsed.n);
  for (const auto& [a, b] : parsed.cross_edges) g.set_multiplicity(a.vertex, b.vertex, 1);
  return g;
}

inline Cover parse_cover(std::istream& in, const Multigraph& base) { return make_cover(base, parse_cover_text(in)); }

inline Cover parse_cover(const std::string& text, const Multigraph& base) {
  std::istringstream in(text);
  return parse_cover(in, base);
}

inline void write_cover(std::ostream& out, const Cover& c) {
  out << c.order() << '\n';
  for (Vertex v = 1; v <= c.order(); ++v) out << (v > 1 ? " " : "") << c.list_size(v);
  out << '\n';
  for (const auto& [pair, edges] : c.cross_map())
    for (auto [i, j] : edges) out << pair.first << ' ' << i << ' ' << pair.second << ' ' << j << '\n';
}

inline std::string to_text(const Cover& c) {
  std::ostringstream out;
  write_cover(out, c);
  return out.str();
}

}  // namespace dpcolor
