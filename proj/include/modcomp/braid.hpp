#ifndef MODCOMP_BRAID_HPP
#define MODCOMP_BRAID_HPP

#include <string>
#include <vector>

#include "modcomp/genvec.hpp"

namespace modcomp {

/// A generator of the signature-preserving modular group action on
/// generating vectors: an adjacent swap move Phi_j / its inverse, or a pure
/// move A(i,j) that winds strands i and j around each other.
struct BraidMove {
  enum class Kind { Phi, PhiInverse, PureA };
  Kind kind;
  int i = 0;  // PureA only, 1 <= i < j <= 4
  int j = 0;  // Phi/PhiInverse: 1 <= j <= 3

  static BraidMove phi(int j) { return {Kind::Phi, 0, j}; }
  static BraidMove phi_inverse(int j) { return {Kind::PhiInverse, 0, j}; }
  static BraidMove pure(int i, int j) { return {Kind::PureA, i, j}; }
  std::string label() const;
  bool signature_preserving(const Signature& s) const;
};

/// Partition of class indices into modular orbits. Vectors within one orbit
/// are the modular companions of one stratum.
struct StratumPartition {
  std::vector<std::vector<int>> orbits;  // ordered by smallest class index
  std::vector<BraidMove> generator_set;
};

/// Applies one move. Phi_j^{-1} sends (.., cj, cj+1, ..) to
/// (.., cj+1, cj+1^-1 cj cj+1, ..); Phi_j is its inverse; a pure move
/// expands to its defining Phi word (rightmost letter acts first).
GeneratingVector braid_act(const GroupTable& G, const BraidMove& move,
                           const GeneratingVector& v);

/// All A(i,j) plus Phi_j / Phi_j^{-1} for every j with m_j = m_{j+1}.
std::vector<BraidMove> modular_generators(const Signature& s);

/// Permutation of class indices induced by one move: i -> index of the
/// lex-min representative of move . rep_i. Throws if the class list is
/// incomplete.
std::vector<int> induced_permutation(const GroupTable& G,
                                     const std::vector<Automorphism>& auts,
                                     const BraidMove& move,
                                     const std::vector<VectorClass>& classes);

/// Orbit partition of the classes under all modular generators.
StratumPartition strata(const GroupTable& G,
                        const std::vector<Automorphism>& auts,
                        const Signature& s,
                        const std::vector<VectorClass>& classes);

}  // namespace modcomp

#endif
