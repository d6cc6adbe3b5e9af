#ifndef MODCOMP_PATCH_HPP
#define MODCOMP_PATCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "modcomp/cayley.hpp"

namespace modcomp {

struct PatchOptions {
  enum class Selection { CayleyDistance, Random };
  Selection selection = Selection::CayleyDistance;
  std::uint64_t seed = 0;
};

/// Outcome of one patch-growing run: the matched polygon labels H on the
/// first surface, the label assignment w into the second, and the edge
/// bookkeeping of the final state.
struct PatchResult {
  std::vector<int> H;   // in addition order; H[0] is the seed polygon
  std::vector<int> w;   // |G|-sized, -1 outside H
  int size = 0;
  bool complete = false;
  PatchOptions options;
  std::vector<TypedEdge> interior1;
  std::vector<TypedEdge> interior2;
  std::vector<TypedEdge> bad1;
};

/// Grows a maximal partial isometry from the surface of seq1 to the surface
/// of seq2 over the same cut system. Starting from the seed polygon, repeat:
/// select a boundary edge (first-in-list for Cayley distance, uniform for
/// random), test the crossing polygon for injectivity and the continuity
/// criterion w(g tau1) = w(g) tau2 on every edge that would become interior,
/// then either absorb the polygon or retire all boundary edges leading to it.
PatchResult grow_patch(const GroupTable& G, const CrossoverSequence& seq1,
                       const CrossoverSequence& seq2,
                       const PatchOptions& options = {});

/// Independent re-check of a patch: w injective with w(1) = 1, the interior
/// edges connect H, and continuity holds on every interior edge (recomputed
/// from scratch); a complete patch must additionally be an automorphism.
bool verify_patch(const GroupTable& G, const CrossoverSequence& seq1,
                  const CrossoverSequence& seq2, const PatchResult& result);

/// NxN table of maximal patch sizes between class representatives: entry
/// (i, j) is the tile count of a maximal patch pair between surface i and
/// surface j, grown on the column surface. Classes whose crossover sequence
/// collapses for this cut are flagged and their rows/columns left empty.
struct IsometryMatrix {
  CutId cut;
  PatchOptions options;
  std::vector<std::vector<std::optional<int>>> sizes;
  std::vector<char> flagged;
};

IsometryMatrix isometry_matrix(const GroupTable& G, const Signature& s,
                               CutId cut,
                               const std::vector<VectorClass>& classes,
                               const PatchOptions& options = {},
                               int threads = 1);

}  // namespace modcomp

#endif
