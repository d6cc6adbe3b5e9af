#include "modcomp/tiling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace modcomp {

CutId parse_cut(const std::string& text) {
  if (text == "E1" || text == "e1") return CutId::E1;
  if (text == "E2" || text == "e2") return CutId::E2;
  if (text == "E3" || text == "e3") return CutId::E3;
  if (text == "E4" || text == "e4") return CutId::E4;
  throw SpecError("unknown cut system: " + text);
}

std::string cut_name(CutId id) {
  switch (id) {
    case CutId::E1: return "E1";
    case CutId::E2: return "E2";
    case CutId::E3: return "E3";
    case CutId::E4: return "E4";
  }
  return "?";
}

std::string CutSystem::slot_label(int pos) const {
  const BoundarySlot& s = boundary[pos];
  return "e" + std::to_string(s.edge + 1) + (s.plus ? "+" : "-");
}

int CutSystem::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].label == label) return static_cast<int>(i);
  throw SpecError("no vertex '" + label + "' in " + cut_name(id));
}

namespace {

using Word = std::vector<std::pair<int, int>>;

BoundarySlot slot(int edge, bool plus, Word w) {
  return BoundarySlot{edge, plus, std::move(w)};
}

void finalize(CutSystem& cs) {
  cs.k = static_cast<int>(cs.undirected.size());
  if (static_cast<int>(cs.boundary.size()) != 2 * cs.k)
    throw std::logic_error("boundary length != 2k");
  cs.opposite.assign(2 * cs.k, -1);
  for (int a = 0; a < 2 * cs.k; ++a)
    for (int b = 0; b < 2 * cs.k; ++b)
      if (a != b && cs.boundary[a].edge == cs.boundary[b].edge) {
        if (cs.boundary[a].plus == cs.boundary[b].plus)
          throw std::logic_error("edge repeated with one orientation");
        cs.opposite[a] = b;
      }
  for (int a = 0; a < 2 * cs.k; ++a)
    if (cs.opposite[a] < 0) throw std::logic_error("unpaired boundary slot");

  // valency of each vertex must match both the undirected edge list and the
  // hard-coded spoke cycle
  for (const auto& v : cs.vertices) {
    int valency = 0;
    for (const auto& e : cs.undirected)
      valency += (e.first == v.label) + (e.second == v.label);
    if (valency != static_cast<int>(v.spokes.size()))
      throw std::logic_error("spoke cycle length != valency at " + v.label);
  }
}

CutSystem make_e1() {
  CutSystem cs;
  cs.id = CutId::E1;
  cs.undirected = {{"1", "2"}, {"2", "3"}, {"3", "4"}};
  cs.boundary = {
      slot(0, true, {{1, -1}}),
      slot(1, true, {{2, -1}, {1, -1}}),  // (c1 c2)^-1
      slot(2, true, {{4, 1}}),
      slot(2, false, {{4, -1}}),
      slot(1, false, {{1, 1}, {2, 1}}),   // c1 c2
      slot(0, false, {{1, 1}}),
  };
  cs.vertices = {
      {"1", true, 1, {5}},
      {"2", true, 2, {0, 4}},
      {"3", true, 3, {1, 3}},
      {"4", true, 4, {2}},
  };
  finalize(cs);
  return cs;
}

CutSystem make_e2() {
  CutSystem cs;
  cs.id = CutId::E2;
  cs.undirected = {{"1", "4"}, {"2", "4"}, {"3", "4"}};
  cs.boundary = {
      slot(0, true, {{1, -1}}),
      slot(1, true, {{2, 1}}),
      slot(1, false, {{2, -1}}),
      slot(2, true, {{3, 1}}),
      slot(2, false, {{3, -1}}),
      slot(0, false, {{1, 1}}),
  };
  cs.vertices = {
      {"1", true, 1, {5}},
      {"2", true, 2, {1}},
      {"3", true, 3, {3}},
      {"4", true, 4, {4, 2, 0}},
  };
  finalize(cs);
  return cs;
}

CutSystem make_e3() {
  CutSystem cs;
  cs.id = CutId::E3;
  cs.undirected = {{"1", "w"}, {"2", "w"}, {"2", "3"}, {"4", "w"}};
  cs.boundary = {
      slot(0, true, {{1, -1}}),
      slot(1, true, {{1, -1}, {4, -1}}),  // (c4 c1)^-1
      slot(2, true, {{3, 1}}),
      slot(2, false, {{3, -1}}),
      slot(1, false, {{4, 1}, {1, 1}}),   // c4 c1
      slot(3, true, {{4, 1}}),
      slot(3, false, {{4, -1}}),
      slot(0, false, {{1, 1}}),
  };
  cs.vertices = {
      {"1", true, 1, {7}},
      {"2", true, 2, {1, 3}},
      {"3", true, 3, {2}},
      {"4", true, 4, {5}},
      {"w", false, 0, {4, 0, 6}},
  };
  finalize(cs);
  return cs;
}

CutSystem make_e4() {
  CutSystem cs;
  cs.id = CutId::E4;
  cs.undirected = {{"1", "w"}, {"2", "w"}, {"3", "w"}, {"4", "w"}};
  cs.boundary = {
      slot(0, true, {{1, -1}}),
      slot(1, true, {{2, 1}}),
      slot(1, false, {{2, -1}}),
      slot(2, true, {{3, 1}}),
      slot(2, false, {{3, -1}}),
      slot(3, true, {{4, 1}}),
      slot(3, false, {{4, -1}}),
      slot(0, false, {{1, 1}}),
  };
  cs.vertices = {
      {"1", true, 1, {7}},
      {"2", true, 2, {1}},
      {"3", true, 3, {3}},
      {"4", true, 4, {5}},
      {"w", false, 0, {2, 0, 6, 4}},
  };
  finalize(cs);
  return cs;
}

}  // namespace

const CutSystem& cut_system(CutId id) {
  static const CutSystem e1 = make_e1();
  static const CutSystem e2 = make_e2();
  static const CutSystem e3 = make_e3();
  static const CutSystem e4 = make_e4();
  switch (id) {
    case CutId::E1: return e1;
    case CutId::E2: return e2;
    case CutId::E3: return e3;
    case CutId::E4: return e4;
  }
  throw std::logic_error("bad cut id");
}

CrossoverSequence crossover_sequence(const GroupTable& G, CutId cut,
                                     const GeneratingVector& v) {
  check_vector_ids(G, v);
  const CutSystem& cs = cut_system(cut);
  CrossoverSequence seq;
  seq.cut = cut;
  seq.source = v;
  seq.taus.reserve(cs.boundary.size());
  for (const auto& s : cs.boundary) {
    int val = GroupTable::identity;
    for (auto [cone, exp] : s.formula) {
      int e = v.c[cone - 1];
      val = G.mul(val, exp > 0 ? e : G.inv(e));
    }
    seq.taus.push_back(val);
  }
  return seq;
}

DegeneracyReport detect_degeneracies(const GroupTable& G,
                                     const CrossoverSequence& seq) {
  const CutSystem& cs = cut_system(seq.cut);
  DegeneracyReport rep;
  for (size_t p = 0; p < seq.taus.size(); ++p)
    if (seq.taus[p] == GroupTable::identity)
      rep.collapsed_positions.push_back(static_cast<int>(p));

  std::map<int, std::vector<int>> by_value;
  for (size_t p = 0; p < seq.taus.size(); ++p)
    if (seq.taus[p] != GroupTable::identity)
      by_value[seq.taus[p]].push_back(static_cast<int>(p));
  for (auto& [val, group] : by_value)
    if (group.size() >= 2) rep.multi_edge_groups.push_back(group);

  for (const auto& vert : cs.vertices) {
    DegeneracyReport::VertexCollapse vc;
    vc.vertex = vert.label;
    std::vector<int> labels = sector_sequence(G, seq, vert.label);
    for (size_t a = 0; a < labels.size() && !vc.collapsed; ++a)
      for (size_t b = a + 1; b < labels.size(); ++b)
        if (labels[a] == labels[b]) {
          vc.collapsed = true;
          vc.repeated_sectors = {static_cast<int>(a), static_cast<int>(b)};
          break;
        }
    rep.vertex_collapses.push_back(std::move(vc));
  }
  return rep;
}

std::vector<int> sector_sequence(const GroupTable& G,
                                 const CrossoverSequence& seq,
                                 const std::string& vertex_label, int h) {
  const CutSystem& cs = cut_system(seq.cut);
  const CutVertex& vert = cs.vertices[cs.vertex_index(vertex_label)];
  int m = 1;
  if (vert.black) m = G.elem_order(seq.source.c[vert.cone - 1]);
  std::vector<int> labels;
  labels.reserve(vert.spokes.size() * m);
  int cur = h;
  for (int rep = 0; rep < m; ++rep)
    for (int pos : vert.spokes) {
      labels.push_back(cur);
      cur = G.mul(cur, seq.taus[pos]);
    }
  return labels;
}

bool validate_spoke_cycles(const GroupTable& G, const CrossoverSequence& seq) {
  const CutSystem& cs = cut_system(seq.cut);
  for (const auto& vert : cs.vertices) {
    int prod = GroupTable::identity;
    for (int pos : vert.spokes) prod = G.mul(prod, seq.taus[pos]);
    if (!vert.black) {
      if (prod != GroupTable::identity) return false;
    } else {
      int expect = G.elem_order(seq.source.c[vert.cone - 1]);
      if (G.elem_order(prod) != expect) return false;
    }
  }
  return true;
}

}  // namespace modcomp
