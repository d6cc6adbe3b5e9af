#ifndef MODCOMP_TILING_HPP
#define MODCOMP_TILING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modcomp/genvec.hpp"

namespace modcomp {

enum class CutId { E1, E2, E3, E4 };

CutId parse_cut(const std::string& text);  // "E1".."E4"
std::string cut_name(CutId id);

struct CutVertex {
  std::string label;       // "1".."4" or "w"
  bool black = true;
  int cone = 0;            // 1..4 for black vertices, 0 for white
  std::vector<int> spokes; // boundary positions crossed in a ccw circuit
};

/// One oriented-edge slot of the polygon boundary and how to compute its
/// crossover transformation from a generating vector.
struct BoundarySlot {
  int edge = 0;      // undirected edge index
  bool plus = true;  // orientation label
  // word in the vector entries: (cone index 1..4, exponent +-1)
  std::vector<std::pair<int, int>> formula;
};

/// A preset embedded tree through the four cone points, with the polygon
/// boundary circuit and per-vertex spoke cycles hard-coded.
struct CutSystem {
  CutId id;
  int k = 0;  // number of undirected edges; boundary has 2k slots
  std::vector<std::pair<std::string, std::string>> undirected;  // endpoints
  std::vector<BoundarySlot> boundary;
  std::vector<int> opposite;  // position of the other orientation
  std::vector<CutVertex> vertices;

  std::string slot_label(int pos) const;  // "e1+", "e3-", ...
  int vertex_index(const std::string& label) const;
};

const CutSystem& cut_system(CutId id);

/// The 2k crossover transformations of a vector for a cut system.
struct CrossoverSequence {
  CutId cut;
  GeneratingVector source;
  std::vector<int> taus;
};

struct DegeneracyReport {
  std::vector<int> collapsed_positions;             // trivial tau slots
  std::vector<std::vector<int>> multi_edge_groups;  // >= 2 equal nontrivial
  struct VertexCollapse {
    std::string vertex;
    bool collapsed = false;
    std::optional<std::pair<int, int>> repeated_sectors;
  };
  std::vector<VertexCollapse> vertex_collapses;
  bool has_edge_collapse() const { return !collapsed_positions.empty(); }
};

CrossoverSequence crossover_sequence(const GroupTable& G, CutId cut,
                                     const GeneratingVector& v);

DegeneracyReport detect_degeneracies(const GroupTable& G,
                                     const CrossoverSequence& seq);

/// Sector labelling sequence around one vertex lift: cumulative right
/// products of the spoke-cycle transformations, the spoke cycle repeated
/// m_v times (m_v = order of the matching vector entry, 1 for white).
std::vector<int> sector_sequence(const GroupTable& G,
                                 const CrossoverSequence& seq,
                                 const std::string& vertex_label,
                                 int h = GroupTable::identity);

/// Consistency oracle for the hard-coded spoke cycles: white vertices must
/// have trivial one-cycle product, black vertex j a product of order m_j.
bool validate_spoke_cycles(const GroupTable& G, const CrossoverSequence& seq);

}  // namespace modcomp

#endif
