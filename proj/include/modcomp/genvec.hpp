#ifndef MODCOMP_GENVEC_HPP
#define MODCOMP_GENVEC_HPP

#include <array>
#include <vector>

#include "modcomp/group.hpp"

namespace modcomp {

/// Planar signature (0; m1,m2,m3,m4), periods non-decreasing, each >= 2.
struct Signature {
  std::array<int, 4> periods;

  static Signature parse(const std::string& text);  // "2,2,3,3"
  void validate() const;
  bool operator==(const Signature&) const = default;
};

/// (c1,c2,c3,c4): product identity, prescribed orders, generates G.
struct GeneratingVector {
  std::array<int, 4> c;
  bool operator==(const GeneratingVector&) const = default;
  auto operator<=>(const GeneratingVector&) const = default;
};

struct VectorClass {
  GeneratingVector representative;  // lexicographic minimum over the orbit
  int class_index = 0;
  int orbit_size = 0;
};

/// Genus of the covering surface from the Riemann-Hurwitz relation.
/// Throws SpecError unless 1 + (|G|/2)(2 - sum 1/mj) is an integer >= 2.
int genus(const GroupTable& G, const Signature& s);

/// All generating vectors for (G, s) in lexicographic order.
std::vector<GeneratingVector> enumerate_vectors(const GroupTable& G,
                                                const Signature& s);

bool is_generating_vector(const GroupTable& G, const Signature& s,
                          const GeneratingVector& v);

/// Throws SpecError when an entry is not an element id of G.
void check_vector_ids(const GroupTable& G, const GeneratingVector& v);

GeneratingVector apply_automorphism(const Automorphism& w,
                                    const GeneratingVector& v);

/// Lex-min representative of the Aut(G)-orbit of v.
GeneratingVector canonicalize(const std::vector<Automorphism>& auts,
                              const GeneratingVector& v);

/// Partition into Aut(G)-orbits, classes sorted by representative.
std::vector<VectorClass> aut_classes(
    const GroupTable& G, const std::vector<Automorphism>& auts,
    const std::vector<GeneratingVector>& vectors);

}  // namespace modcomp

#endif
