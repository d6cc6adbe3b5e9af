#ifndef MODCOMP_CAYLEY_HPP
#define MODCOMP_CAYLEY_HPP

#include <string>
#include <vector>

#include "modcomp/tiling.hpp"

namespace modcomp {

/// Refusal to build a graph over a crossover sequence with trivial entries.
struct EdgeCollapseError : std::runtime_error {
  DegeneracyReport report;
  explicit EdgeCollapseError(DegeneracyReport r)
      : std::runtime_error("crossover sequence has an edge collapse"),
        report(std::move(r)) {}
};

/// Directed typed edge (type, g, g*tau_type).
struct TypedEdge {
  int type;  // boundary position
  int src;
  int dst;
  bool operator==(const TypedEdge&) const = default;
};

/// Group Cayley graph with typed directed multi-edges: nodes are the group
/// elements, out-edges of g are (p, g, g*tau_p) for each boundary slot p.
/// Edges of type p and opposite(p) share a colour class.
class ModifiedCayleyGraph {
 public:
  ModifiedCayleyGraph(const GroupTable& G, CrossoverSequence seq);

  const GroupTable& group() const { return *group_; }
  const CrossoverSequence& source() const { return seq_; }
  CutId cut() const { return seq_.cut; }
  int node_count() const { return group_->order(); }
  int degree() const { return static_cast<int>(seq_.taus.size()); }
  int edge_count() const { return node_count() * degree(); }

  TypedEdge edge(int g, int type) const {
    return {type, g, group_->mul(g, seq_.taus[type])};
  }
  TypedEdge opposite(const TypedEdge& e) const;
  int colour(int type) const;  // shared by a slot and its opposite

  std::vector<TypedEdge> edges() const;
  bool connected() const;

 private:
  const GroupTable* group_;
  CrossoverSequence seq_;
};

ModifiedCayleyGraph build_graph(const GroupTable& G,
                                const CrossoverSequence& seq);

/// Canonical summary used as a necessary condition for a patch seed map:
/// multi-edge multiplicity shape, collapse count, and per-vertex collapse
/// flags of the generating sequence.
struct GraphFingerprint {
  std::vector<int> tau_multiplicities;  // sorted descending
  int collapse_count = 0;
  std::vector<std::pair<std::string, bool>> vertex_collapse_flags;
  bool operator==(const GraphFingerprint&) const = default;
  std::string to_string() const;
};

GraphFingerprint graph_fingerprint(const GroupTable& G,
                                   const CrossoverSequence& seq);
GraphFingerprint graph_fingerprint(const ModifiedCayleyGraph& g);

}  // namespace modcomp

#endif
