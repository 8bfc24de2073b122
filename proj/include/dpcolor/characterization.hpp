#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dpcolor/blocks.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/multigraph.hpp"

namespace dpcolor {

struct BlockReason {
  std::vector<Vertex> vertices;
  BlockClass shape;
};

struct DegreeColorabilityVerdict {
  bool colorable = false;
  std::vector<BlockReason> reasons;  // one per block, in block order
  std::optional<Cover> witness;      // uncolorable degree cover, iff !colorable
};

/// The uncolorable degree cover of a K_n^k or C_n^k block, labelled by the block's
/// vertices in G (cycle blocks in cyclic order).
inline LabeledCover block_witness(const Multigraph& g, const std::vector<Vertex>& block, const BlockClass& shape) {
  switch (shape.kind) {
    case BlockKind::CompletePower:
      if (shape.n == 1) return {Cover(Multigraph(1), {0}), block};
      return {build_bad_complete(shape.n, shape.k), block};
    case BlockKind::CyclePower:
      return {build_bad_cycle(shape.n, shape.k), cycle_order(g, block)};
    case BlockKind::Other:
      break;
  }
  throw std::invalid_argument("block_witness: block is neither K_n^k nor C_n^k");
}

/// Decides DP-degree-colorability of a connected multigraph from its blocks:
/// G is not DP-degree-colorable iff every block is some K_n^k or C_n^k. In that case
/// the witness glues the per-block bad covers along the block-cut tree in preorder
/// from the block holding vertex 1.
inline DegreeColorabilityVerdict decide_degree_colorable(const Multigraph& g) {
  if (g.empty()) throw std::invalid_argument("decide_degree_colorable: empty multigraph");
  if (!is_connected(g)) throw std::invalid_argument("decide_degree_colorable: graph must be connected");
  const BlockDecomposition bd = blocks(g);
  DegreeColorabilityVerdict verdict;
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) verdict.reasons.push_back({bd.blocks[i], bd.classification[i]});
  verdict.colorable = std::any_of(bd.classification.begin(), bd.classification.end(),
                                  [](const BlockClass& c) { return c.kind == BlockKind::Other; });
  if (verdict.colorable) return verdict;

  const std::size_t nb = bd.blocks.size();
  std::vector<bool> used(nb, false);
  std::vector<std::size_t> stack{0};
  used[0] = true;
  std::optional<LabeledCover> acc;
  while (!stack.empty()) {
    const std::size_t b = stack.back();
    stack.pop_back();
    LabeledCover piece = block_witness(g, bd.blocks[b], bd.classification[b]);
    acc = acc ? glue(*acc, piece) : piece;
    // Children: unvisited blocks sharing a cut vertex, pushed in reverse so the
    // lowest-numbered block is expanded first.
    std::vector<std::size_t> children;
    for (std::size_t c = 0; c < nb; ++c) {
      if (used[c]) continue;
      std::vector<Vertex> common;
      std::set_intersection(bd.blocks[b].begin(), bd.blocks[b].end(), bd.blocks[c].begin(), bd.blocks[c].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        used[c] = true;
        children.push_back(c);
      }
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  // Put local vertices in label order so local v is vertex v of G; a lone cycle block
  // still carries its cyclic labelling here.
  std::vector<Vertex> by_label(acc->labels.size());
  for (std::size_t i = 0; i < acc->labels.size(); ++i) by_label[acc->labels[i] - 1] = static_cast<Vertex>(i + 1);
  verdict.witness = restrict_cover(acc->cover, by_label);
  return verdict;
}

struct ComponentVerdict {
  std::vector<Vertex> vertices;  // component vertices in G; local vertex i is vertices[i-1]
  DegreeColorabilityVerdict verdict;
};

/// Per-component verdicts; G is DP-degree-colorable iff every component is.
inline std::vector<ComponentVerdict> decide_degree_colorable_any(const Multigraph& g) {
  std::vector<ComponentVerdict> out;
  for (auto& comp : connected_components(g)) {
    ComponentVerdict cv{comp, decide_degree_colorable(g.induced(comp))};
    out.push_back(std::move(cv));
  }
  return out;
}

}  // namespace dpcolor
