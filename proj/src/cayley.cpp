#include "modcomp/cayley.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modcomp {

ModifiedCayleyGraph::ModifiedCayleyGraph(const GroupTable& G,
                                         CrossoverSequence seq)
    : group_(&G), seq_(std::move(seq)) {
  for (int tau : seq_.taus)
    if (tau == GroupTable::identity)
      throw EdgeCollapseError(detect_degeneracies(G, seq_));
}

TypedEdge ModifiedCayleyGraph::opposite(const TypedEdge& e) const {
  const CutSystem& cs = cut_system(seq_.cut);
  return {cs.opposite[e.type], e.dst, e.src};
}

int ModifiedCayleyGraph::colour(int type) const {
  return cut_system(seq_.cut).boundary[type].edge;
}

std::vector<TypedEdge> ModifiedCayleyGraph::edges() const {
  std::vector<TypedEdge> out;
  out.reserve(edge_count());
  for (int g = 0; g < node_count(); ++g)
    for (int p = 0; p < degree(); ++p) out.push_back(edge(g, p));
  return out;
}

bool ModifiedCayleyGraph::connected() const {
  std::vector<char> seen(node_count(), 0);
  std::vector<int> stack{GroupTable::identity};
  seen[GroupTable::identity] = 1;
  int count = 1;
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (int p = 0; p < degree(); ++p) {
      int h = group_->mul(g, seq_.taus[p]);
      if (!seen[h]) {
        seen[h] = 1;
        ++count;
        stack.push_back(h);
      }
    }
  }
  return count == node_count();
}

ModifiedCayleyGraph build_graph(const GroupTable& G,
                                const CrossoverSequence& seq) {
  return ModifiedCayleyGraph(G, seq);
}

GraphFingerprint graph_fingerprint(const GroupTable& G,
                                   const CrossoverSequence& seq) {
  GraphFingerprint fp;
  std::map<int, int> mult;
  for (int tau : seq.taus) {
    ++mult[tau];
    if (tau == GroupTable::identity) ++fp.collapse_count;
  }
  for (auto& [val, m] : mult) fp.tau_multiplicities.push_back(m);
  std::sort(fp.tau_multiplicities.rbegin(), fp.tau_multiplicities.rend());

  DegeneracyReport rep = detect_degeneracies(G, seq);
  for (const auto& vc : rep.vertex_collapses)
    fp.vertex_collapse_flags.emplace_back(vc.vertex, vc.collapsed);
  return fp;
}

GraphFingerprint graph_fingerprint(const ModifiedCayleyGraph& g) {
  return graph_fingerprint(g.group(), g.source());
}

std::string GraphFingerprint::to_string() const {
  std::ostringstream out;
  out << "mult{";
  for (size_t i = 0; i < tau_multiplicities.size(); ++i)
    out << (i ? "," : "") << tau_multiplicities[i];
  out << "} collapses=" << collapse_count << " vertices{";
  for (size_t i = 0; i < vertex_collapse_flags.size(); ++i)
    out << (i ? "," : "") << vertex_collapse_flags[i].first
        << (vertex_collapse_flags[i].second ? ":collapsed" : ":ok");
  out << "}";
  return out.str();
}

}  // namespace modcomp
