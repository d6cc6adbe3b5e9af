#include "modcomp/report.hpp"

#include <algorithm>
#include <sstream>

namespace modcomp {

using nlohmann::json;

json meta_json(const ReportMeta& meta) {
  return json{{"tool", "modcomp"},
              {"version", kToolVersion},
              {"ordering_fingerprint", meta.ordering},
              {"config", meta.config}};
}

std::string meta_comment_block(const ReportMeta& meta,
                               const std::string& prefix) {
  std::ostringstream out;
  out << prefix << "modcomp " << kToolVersion << "\n";
  out << prefix << "ordering: " << meta.ordering << "\n";
  out << prefix << "config: " << meta.config << "\n";
  return out.str();
}

json group_json(const GroupTable& G) {
  return json{{"name", G.name()},
              {"order", G.order()},
              {"ordering_fingerprint", G.ordering_fingerprint()}};
}

json vector_json(const GroupTable& G, const GeneratingVector& v) {
  json ids = json::array();
  json words = json::array();
  for (int c : v.c) {
    ids.push_back(c);
    words.push_back(G.elem_name(c));
  }
  return json{{"ids", ids}, {"words", words}};
}

json vectors_report(const GroupTable& G, const Signature& s,
                    const std::vector<GeneratingVector>& vectors,
                    const std::vector<VectorClass>& classes) {
  json sig = json::array();
  for (int m : s.periods) sig.push_back(m);
  json vecs = json::array();
  for (const auto& v : vectors) {
    json ids = json::array();
    for (int c : v.c) ids.push_back(c);
    vecs.push_back(ids);
  }
  json cls = json::array();
  for (const auto& c : classes)
    cls.push_back(json{{"index", c.class_index},
                       {"representative", vector_json(G, c.representative)},
                       {"orbit_size", c.orbit_size}});
  return json{{"group", group_json(G)},
              {"signature", sig},
              {"vector_count", vectors.size()},
              {"class_count", classes.size()},
              {"vectors", vecs},
              {"classes", cls}};
}

std::string orbit_sizes_summary(const StratumPartition& part) {
  std::vector<size_t> sizes;
  for (const auto& o : part.orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < sizes.size(); ++i) out << (i ? ", " : "") << sizes[i];
  out << ')';
  return out.str();
}

json strata_report(const GroupTable& G, const Signature& s,
                   const std::vector<VectorClass>& classes,
                   const StratumPartition& part) {
  json sig = json::array();
  for (int m : s.periods) sig.push_back(m);
  json orbits = json::array();
  for (const auto& orbit : part.orbits) {
    json members = json::array();
    for (int idx : orbit)
      members.push_back(
          json{{"class_index", idx},
               {"representative",
                vector_json(G, classes[idx].representative)}});
    orbits.push_back(json{{"size", orbit.size()}, {"classes", members}});
  }
  json gens = json::array();
  for (const auto& mv : part.generator_set) gens.push_back(mv.label());
  return json{{"group", group_json(G)},
              {"signature", sig},
              {"class_count", classes.size()},
              {"orbit_sizes", orbit_sizes_summary(part)},
              {"orbits", orbits},
              {"generators", gens}};
}

json tiling_report(const GroupTable& G, const CrossoverSequence& seq,
                   const DegeneracyReport& rep) {
  const CutSystem& cs = cut_system(seq.cut);
  json taus = json::array();
  for (size_t p = 0; p < seq.taus.size(); ++p)
    taus.push_back(json{{"slot", cs.slot_label(static_cast<int>(p))},
                        {"id", seq.taus[p]},
                        {"word", G.elem_name(seq.taus[p])}});
  json collapses = json::array();
  for (int p : rep.collapsed_positions) collapses.push_back(cs.slot_label(p));
  json multi = json::array();
  for (const auto& group : rep.multi_edge_groups) {
    json slots = json::array();
    for (int p : group) slots.push_back(cs.slot_label(p));
    multi.push_back(slots);
  }
  json vertices = json::array();
  for (const auto& vc : rep.vertex_collapses)
    vertices.push_back(json{{"vertex", vc.vertex}, {"collapsed", vc.collapsed}});
  return json{{"group", group_json(G)},
              {"cut", cut_name(seq.cut)},
              {"vector", vector_json(G, seq.source)},
              {"crossover", taus},
              {"edge_collapses", collapses},
              {"multi_edge_groups", multi},
              {"vertex_collapses", vertices}};
}

namespace {
const char* kPalette[] = {"red",    "blue",   "green",  "orange",
                          "purple", "brown",  "cyan",   "magenta"};
}

std::string polygon_dot(const GroupTable& G, const CrossoverSequence& seq,
                        const DegeneracyReport& rep) {
  const CutSystem& cs = cut_system(seq.cut);
  const int two_k = static_cast<int>(seq.taus.size());

  // colour class per slot: shared for equal repeated tau values, red for
  // collapsed slots, black otherwise
  std::vector<std::string> colour(two_k, "black");
  for (int p : rep.collapsed_positions) colour[p] = "red";
  int next = 1;
  for (const auto& group : rep.multi_edge_groups) {
    const char* c = kPalette[next % 8];
    ++next;
    for (int p : group) colour[p] = c;
  }

  std::ostringstream out;
  out << "graph polygon {\n  layout=circo;\n";
  for (int v = 0; v < two_k; ++v)
    out << "  v" << v << " [shape=point];\n";
  for (int p = 0; p < two_k; ++p)
    out << "  v" << p << " -- v" << (p + 1) % two_k << " [label=\""
        << cs.slot_label(p) << " : " << G.elem_name(seq.taus[p])
        << "\", color=" << colour[p] << "];\n";
  out << "}\n";
  return out.str();
}

std::string cayley_dot(const ModifiedCayleyGraph& g) {
  const GroupTable& G = g.group();
  const CutSystem& cs = cut_system(g.cut());
  std::ostringstream out;
  out << "digraph cayley {\n";
  for (int v = 0; v < g.node_count(); ++v)
    out << "  n" << v << " [label=\"" << G.elem_name(v) << "\"];\n";
  for (int v = 0; v < g.node_count(); ++v)
    for (int p = 0; p < g.degree(); ++p) {
      TypedEdge e = g.edge(v, p);
      out << "  n" << e.src << " -> n" << e.dst << " [label=\""
          << cs.slot_label(p) << "\", color="
          << kPalette[g.colour(p) % 8] << "];\n";
    }
  out << "}\n";
  return out.str();
}

std::string cayley_adjacency_text(const ModifiedCayleyGraph& g) {
  const CutSystem& cs = cut_system(g.cut());
  std::ostringstream out;
  for (int v = 0; v < g.node_count(); ++v) {
    out << v;
    for (int p = 0; p < g.degree(); ++p)
      out << ' ' << cs.slot_label(p) << ':' << g.edge(v, p).dst;
    out << '\n';
  }
  return out.str();
}

json cayley_adjacency_json(const ModifiedCayleyGraph& g) {
  const CutSystem& cs = cut_system(g.cut());
  json nodes = json::array();
  for (int v = 0; v < g.node_count(); ++v) {
    json adj = json::array();
    for (int p = 0; p < g.degree(); ++p)
      adj.push_back(json{{"type", cs.slot_label(p)},
                         {"dst", g.edge(v, p).dst}});
    nodes.push_back(json{{"node", v}, {"out", adj}});
  }
  return json{{"group", group_json(g.group())},
              {"cut", cut_name(g.cut())},
              {"vector", vector_json(g.group(), g.source().source)},
              {"nodes", nodes}};
}

json matrix_report(const GroupTable& G, const Signature& s,
                   const IsometryMatrix& m,
                   const std::vector<VectorClass>& classes) {
  json sig = json::array();
  for (int p : s.periods) sig.push_back(p);
  json rows = json::array();
  for (size_t i = 0; i < m.sizes.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.sizes[i].size(); ++j)
      if (m.sizes[i][j])
        row.push_back(*m.sizes[i][j]);
      else
        row.push_back(nullptr);
    rows.push_back(row);
  }
  json flagged = json::array();
  for (size_t i = 0; i < m.flagged.size(); ++i)
    if (m.flagged[i]) flagged.push_back(i);
  json cls = json::array();
  for (const auto& c : classes)
    cls.push_back(vector_json(G, c.representative));
  return json{{"group", group_json(G)},
              {"signature", sig},
              {"cut", cut_name(m.cut)},
              {"selection",
               m.options.selection == PatchOptions::Selection::CayleyDistance
                   ? "cayley-distance"
                   : "random"},
              {"seed", m.options.seed},
              {"classes", cls},
              {"collapsed_classes", flagged},
              {"sizes", rows}};
}

std::string matrix_csv(const IsometryMatrix& m,
                       const std::vector<VectorClass>& classes) {
  std::ostringstream out;
  out << "class";
  for (const auto& c : classes) out << ',' << c.class_index;
  out << '\n';
  for (size_t i = 0; i < m.sizes.size(); ++i) {
    out << classes[i].class_index;
    for (size_t j = 0; j < m.sizes[i].size(); ++j) {
      out << ',';
      if (m.sizes[i][j]) out << *m.sizes[i][j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace modcomp
