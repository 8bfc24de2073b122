#pragma once

// Command implementations behind tools/dpcolor. Each command reads its inputs,
// writes its report to `out` and returns the process exit code, so the same code
// runs in-process from the tests.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dpcolor/census.hpp"
#include "dpcolor/characterization.hpp"
#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/critical.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/multigraph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // invalid cover, or a cover rejected before solving
  kParseError = 2,
  kResourceCap = 3,
  kInvariant = 4,
  kUsage = 64,
};

enum class OutputFormat { Text, Lines };

struct Config {
  std::uint64_t node_budget = 1'000'000'000ULL;
  int max_degree_sum = 24;
  std::uint64_t max_pair_choices = 10'000'000;
  int workers = 1;  // accepted for compatibility; all work runs on the calling thread
  bool strict = false;
  OutputFormat format = OutputFormat::Text;

  ChromaticOptions chromatic() const {
    ChromaticOptions o;
    o.search.node_budget = 2 * node_budget;
    o.solve.node_budget = node_budget;
    o.enumeration.caps.max_degree_sum = max_degree_sum;
    o.enumeration.caps.max_pair_choices = max_pair_choices;
    return o;
  }
};

namespace detail {

inline std::uint64_t env_positive(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used == std::string(raw).size() && v > 0) return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(name) + " must be a positive integer");
}

}  // namespace detail

/// Defaults overridden by DPCOLOR_NODE_BUDGET, DPCOLOR_MAX_DEGREE_SUM,
/// DPCOLOR_MAX_PAIR_CHOICES and DPCOLOR_WORKERS.
inline Config config_from_env(Config c = {}) {
  c.node_budget = detail::env_positive("DPCOLOR_NODE_BUDGET", c.node_budget);
  c.max_degree_sum = static_cast<int>(detail::env_positive("DPCOLOR_MAX_DEGREE_SUM", c.max_degree_sum));
  c.max_pair_choices = detail::env_positive("DPCOLOR_MAX_PAIR_CHOICES", c.max_pair_choices);
  c.workers = static_cast<int>(detail::env_positive("DPCOLOR_WORKERS", c.workers));
  return c;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Multigraph load_graph(const std::string& path) { return parse_multigraph(read_file(path)); }

/// Lists file: first line `n`, then `v c1 c2 ...` per vertex (vertices left out get empty lists).
inline std::vector<std::vector<int>> parse_lists(const std::string& text) {
  std::istringstream in(text);
  auto lines = dpcolor::detail::tokenize_lines(in);
  if (lines.empty()) throw ParseError("empty lists input");
  const auto& [l1, head] = lines.front();
  if (head.size() != 1) throw ParseError("first line must hold the vertex count", l1);
  const long long n = dpcolor::detail::parse_int(head[0], l1);
  if (n < 0 || n > 1'000'000) throw ParseError("vertex count out of range", l1);
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [ln, t] = lines[i];
    const long long v = dpcolor::detail::parse_int(t[0], ln);
    if (v < 1 || v > n) throw ParseError("vertex out of range", ln);
    if (seen[v - 1]) throw ParseError("vertex listed twice", ln);
    seen[v - 1] = true;
    for (std::size_t j = 1; j < t.size(); ++j) {
      const long long c = dpcolor::detail::parse_int(t[j], ln);
      if (c < INT32_MIN || c > INT32_MAX) throw ParseError("color out of range", ln);
      for (int prev : lists[v - 1])
        if (prev == c) throw ParseError("repeated color in a list", ln);
      lists[v - 1].push_back(static_cast<int>(c));
    }
  }
  return lists;
}

inline void write_violations(std::ostream& out, const ValidationReport& r, OutputFormat fmt) {
  for (const auto& v : r.violations) {
    if (fmt == OutputFormat::Lines)
      out << "violation\t" << v.u << '\t' << v.v << '\t' << v.color.vertex << '\t' << v.color.index << '\t' << v.message << '\n';
    else
      out << "violation: " << describe(v) << '\n';
  }
}

/// Loads a cover; with no graph the base is the simple graph on the pairs that carry cross edges.
/// Strict mode turns validation failures into parse errors.
inline Cover load_cover(const std::string& cover_path, const std::optional<std::string>& graph_path, bool strict) {
  std::istringstream in(read_file(cover_path));
  ParsedCover parsed = parse_cover_text(in);
  Multigraph base = graph_path ? load_graph(*graph_path) : implied_simple_base(parsed);
  Cover c = make_cover(base, parsed);
  if (strict) {
    auto report = validate(c);
    if (!report.ok()) throw ParseError("invalid cover: " + describe(report.violations.front()));
  }
  return c;
}

inline std::string join(const std::vector<int>& xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

/// `1-2,2-3x2`: pairs with multiplicity suffix when above 1.
inline std::string edge_string(const Multigraph& g) {
  std::string s;
  for (const auto& e : g.edges()) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
    if (e.multiplicity > 1) s += "x" + std::to_string(e.multiplicity);
  }
  return s.empty() ? "-" : s;
}

/// Runs `body`, mapping library exceptions to exit codes with a message on `err`.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline int cmd_validate(const std::string& cover_path, const std::optional<std::string>& graph_path, const Config& cfg,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Cover c = load_cover(cover_path, graph_path, cfg.strict);
    auto report = validate(c);
    if (cfg.format == OutputFormat::Lines)
      out << "valid\t" << (report.ok() ? 1 : 0) << '\n';
    else
      out << (report.ok() ? "VALID" : "INVALID") << '\n';
    write_violations(out, report, cfg.format);
    return report.ok() ? kOk : kNegative;
  });
}

inline int cmd_solve(const std::string& graph_path, const std::string& cover_path, const Config& cfg, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    Cover c = load_cover(cover_path, graph_path, cfg.strict);
    auto report = validate(c);
    if (!report.ok()) {
      out << (cfg.format == OutputFormat::Lines ? "valid\t0" : "INVALID") << '\n';
      write_violations(out, report, cfg.format);
      return kNegative;
    }
    SolveOptions so = cfg.chromatic().solve;
    so.trusted = true;
    SolveResult r = solve(c, so);
    if (cfg.format == OutputFormat::Lines) {
      out << "status\t" << (r.colorable() ? "colorable" : "uncolorable") << '\n';
      if (r.coloring) out << "coloring\t" << join(r.coloring->choice, ' ') << '\n';
      out << "nodes\t" << r.nodes_explored << '\n';
    } else {
      out << (r.colorable() ? "Colorable" : "Uncolorable") << '\n';
      if (r.coloring) out << "coloring: " << join(r.coloring->choice, ' ') << '\n';
    }
    return kOk;
  });
}

inline int cmd_chi_dp(const std::string& graph_path, const Config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Multigraph g = load_graph(graph_path);
    const int chi = chi_dp(g, cfg.chromatic());
    if (cfg.format == OutputFormat::Lines)
      out << "chi_dp\t" << chi << '\n';
    else
      out << chi << '\n';
    return kOk;
  });
}

/// Uncolorable degree cover of the whole graph assembled from per-component verdicts:
/// one bad component suffices, the others get covers without cross edges.
inline Cover combine_component_witness(const Multigraph& g, const std::vector<ComponentVerdict>& parts) {
  std::vector<int> sizes(g.order(), 0);
  for (Vertex v = 1; v <= g.order(); ++v) sizes[v - 1] = g.degree(v);
  Cover c(g, sizes);
  for (const auto& part : parts) {
    if (part.verdict.colorable) continue;
    const Cover& w = *part.verdict.witness;
    for (const auto& [pair, edges] : w.cross_map())
      for (auto [i, j] : edges) c.add_cross_edge(part.vertices[pair.first - 1], i, part.vertices[pair.second - 1], j);
    break;
  }
  return c;
}

inline int cmd_degree_colorable(const std::string& graph_path, const std::optional<std::string>& witness_path,
                                const Config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Multigraph g = load_graph(graph_path);
    if (g.empty()) throw std::invalid_argument("degree-colorable: empty graph");
    auto parts = decide_degree_colorable_any(g);
    bool colorable = true;
    for (const auto& p : parts) colorable = colorable && p.verdict.colorable;
    const bool lines = cfg.format == OutputFormat::Lines;
    out << (lines ? (colorable ? "verdict\tdegree-colorable" : "verdict\tnot-degree-colorable")
                  : (colorable ? "DEGREE-COLORABLE" : "NOT-DEGREE-COLORABLE"))
        << '\n';
    for (const auto& p : parts)
      for (const auto& reason : p.verdict.reasons) {
        std::vector<int> verts;
        for (Vertex local : reason.vertices) verts.push_back(p.vertices[local - 1]);
        if (lines)
          out << "block\t" << join(verts, ',') << '\t' << to_string(reason.shape) << '\n';
        else
          out << "block {" << join(verts, ',') << "}: " << to_string(reason.shape) << '\n';
      }
    if (!colorable && witness_path) {
      Cover w = combine_component_witness(g, parts);
      if (!validate(w).ok() || !is_degree_cover(w)) throw InvariantError("witness is not a valid degree cover");
      std::ofstream f(*witness_path);
      if (!f) throw std::invalid_argument("cannot write '" + *witness_path + "'");
      write_cover(f, w);
    }
    return kOk;
  });
}

inline int cmd_check_critical(const std::string& graph_path, int k, bool compute_chi, const Config& cfg,
                              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (k < 1) throw std::invalid_argument("--k must be positive");
    Multigraph g = load_graph(graph_path);
    CriticalityOptions co;
    co.chromatic = cfg.chromatic();
    co.always_compute_chi = compute_chi;
    auto r = check_critical(g, k, co);
    const bool lines = cfg.format == OutputFormat::Lines;
    out << (lines ? "critical\t" : "") << (r.is_critical ? (lines ? "1" : "CRITICAL") : (lines ? "0" : "NOT-CRITICAL")) << '\n';
    if (r.chi) out << (lines ? "chi_dp\t" : "chi_dp: ") << *r.chi << '\n';
    if (r.failing) {
      const auto& f = *r.failing;
      if (f.kind == DeletionKind::Edge)
        out << (lines ? "failing\tedge\t" : "failing deletion: edge ") << f.u << (lines ? '\t' : ' ') << f.v << '\n';
      else
        out << (lines ? "failing\tvertex\t" : "failing deletion: vertex ") << f.u << '\n';
    }
    if (r.is_critical) {
      auto b1 = check_bound_multigraph(g, k);
      out << (lines ? "slack_multigraph\t" : "slack 2|E|-(k-1)n: ") << to_string(b1.slack) << '\n';
      if (k >= 4 && g.is_simple() && !(g.order() == k && g.pair_count() == k * (k - 1) / 2)) {
        auto b2 = check_bound_simple(g, k);
        out << (lines ? "slack_simple\t" : "slack simple bound: ") << to_string(b2.slack) << '\n';
      }
    }
    return kOk;
  });
}

inline int cmd_reduce(const std::string& graph_path, const std::string& lists_path, const std::optional<std::string>& out_path,
                      const Config&, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Multigraph g = load_graph(graph_path);
    auto lists = parse_lists(read_file(lists_path));
    if (static_cast<int>(lists.size()) != g.order()) throw ParseError("lists file and graph disagree on the vertex count");
    Cover c = reduce_list(g, lists);
    if (out_path) {
      std::ofstream f(*out_path);
      if (!f) throw std::invalid_argument("cannot write '" + *out_path + "'");
      write_cover(f, c);
    } else {
      write_cover(out, c);
    }
    return kOk;
  });
}

/// One line per connected multigraph (up to isomorphism) with 1..max_n vertices and
/// multiplicities <= max_mult:
///   id n 2|E| chi_dp degree-colorable critical slack_multigraph slack_simple edges
/// Slacks are for k = chi_dp and printed only for critical graphs ("-" otherwise).
inline int cmd_census(int max_n, int max_mult, const Config& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (max_n < 1 || max_mult < 1) throw std::invalid_argument("--max-n and --max-mult must be positive");
    if (max_mult > 1 && max_n > 5) throw ResourceError("multigraph census supports at most 5 vertices");
    if (max_n > 8) throw ResourceError("census supports at most 8 vertices");
    ChromaticOptions co = cfg.chromatic();
    CriticalityOptions crit;
    crit.chromatic = co;
    const char sep = cfg.format == OutputFormat::Lines ? '\t' : ' ';
    int id = 0;
    for (int n = 1; n <= max_n; ++n) {
      auto graphs = max_mult == 1 ? connected_simple_graphs(n) : connected_multigraphs(n, max_mult);
      for (const auto& g : graphs) {
        const int chi = chi_dp(g, co);
        const bool dc = decide_degree_colorable(g).colorable;
        const bool critical = check_critical(g, chi, crit).is_critical;
        std::string s1 = "-", s2 = "-";
        if (critical) {
          s1 = to_string(check_bound_multigraph(g, chi).slack);
          if (chi >= 4 && g.is_simple() && !(g.order() == chi && g.pair_count() == chi * (chi - 1) / 2))
            s2 = to_string(check_bound_simple(g, chi).slack);
        }
        out << ++id << sep << n << sep << 2 * g.edge_count() << sep << chi << sep << (dc ? "dc" : "not-dc") << sep
            << (critical ? "critical" : "-") << sep << s1 << sep << s2 << sep << edge_string(g) << '\n';
      }
    }
    return kOk;
  });
}

}  // namespace dpcolor::cli
