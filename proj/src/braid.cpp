#include "modcomp/braid.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace modcomp {

namespace {

// (.., cj, cj+1, ..) -> (.., cj+1, cj+1^-1 cj cj+1, ..)
GeneratingVector phi_inverse_at(const GroupTable& G, int j,
                                GeneratingVector v) {
  int a = v.c[j - 1], b = v.c[j];
  v.c[j - 1] = b;
  v.c[j] = G.mul(G.mul(G.inv(b), a), b);
  return v;
}

// inverse move: (.., cj, cj+1, ..) -> (.., cj cj+1 cj^-1, cj, ..)
GeneratingVector phi_at(const GroupTable& G, int j, GeneratingVector v) {
  int a = v.c[j - 1], b = v.c[j];
  v.c[j - 1] = G.mul(G.mul(a, b), G.inv(a));
  v.c[j] = a;
  return v;
}

// A(i,j) = (Phi_{j-1} ... Phi_{i+1}) Phi_i^2 (Phi_{j-1} ... Phi_{i+1})^-1,
// as letters (index, inverted) with the rightmost letter acting first.
std::vector<std::pair<int, bool>> pure_word(int i, int j) {
  std::vector<std::pair<int, bool>> word;
  for (int k = j - 1; k > i; --k) word.emplace_back(k, false);
  word.emplace_back(i, false);
  word.emplace_back(i, false);
  for (int k = i + 1; k <= j - 1; ++k) word.emplace_back(k, true);
  return word;
}

}  // namespace

std::string BraidMove::label() const {
  switch (kind) {
    case Kind::Phi:
      return "Phi" + std::to_string(j);
    case Kind::PhiInverse:
      return "Phi" + std::to_string(j) + "^-1";
    case Kind::PureA:
      return "A(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "?";
}

bool BraidMove::signature_preserving(const Signature& s) const {
  if (kind == Kind::PureA) return true;
  return s.periods[j - 1] == s.periods[j];
}

GeneratingVector braid_act(const GroupTable& G, const BraidMove& move,
                           const GeneratingVector& v) {
  check_vector_ids(G, v);
  if (move.kind == BraidMove::Kind::PureA) {
    if (move.i < 1 || move.i >= move.j || move.j > 4)
      throw SpecError("pure move needs 1 <= i < j <= 4");
  } else if (move.j < 1 || move.j > 3) {
    throw SpecError("swap move index must be 1..3");
  }
  GeneratingVector out;
  switch (move.kind) {
    case BraidMove::Kind::Phi:
      out = phi_at(G, move.j, v);
      break;
    case BraidMove::Kind::PhiInverse:
      out = phi_inverse_at(G, move.j, v);
      break;
    case BraidMove::Kind::PureA: {
      GeneratingVector cur = v;
      auto word = pure_word(move.i, move.j);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        cur = it->second ? phi_inverse_at(G, it->first, cur)
                         : phi_at(G, it->first, cur);
#ifndef NDEBUG
      // pure moves fix the period tuple entrywise
      for (int k = 0; k < 4; ++k)
        assert(G.elem_order(cur.c[k]) == G.elem_order(v.c[k]));
#endif
      out = cur;
      break;
    }
    default:
      throw std::logic_error("unreachable braid move kind");
  }
#ifndef NDEBUG
  int prod = GroupTable::identity;
  for (int c : out.c) prod = G.mul(prod, c);
  assert(prod == GroupTable::identity);
  assert(G.generates({out.c[0], out.c[1], out.c[2], out.c[3]}) ==
         G.generates({v.c[0], v.c[1], v.c[2], v.c[3]}));
#endif
  return out;
}

std::vector<BraidMove> modular_generators(const Signature& s) {
  s.validate();
  std::vector<BraidMove> gens;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) gens.push_back(BraidMove::pure(i, j));
  for (int j = 1; j <= 3; ++j)
    if (s.periods[j - 1] == s.periods[j]) {
      gens.push_back(BraidMove::phi(j));
      gens.push_back(BraidMove::phi_inverse(j));
    }
  return gens;
}

std::vector<int> induced_permutation(const GroupTable& G,
                                     const std::vector<Automorphism>& auts,
                                     const BraidMove& move,
                                     const std::vector<VectorClass>& classes) {
  std::vector<GeneratingVector> reps(classes.size());
  for (size_t i = 0; i < classes.size(); ++i)
    reps[i] = classes[i].representative;

  auto find_rep = [&](const GeneratingVector& r) {
    auto it = std::lower_bound(reps.begin(), reps.end(), r);
    if (it == reps.end() || !(*it == r))
      throw std::logic_error(
          "image representative missing: class list is incomplete");
    return static_cast<int>(it - reps.begin());
  };

  std::vector<int> perm(classes.size());
  std::vector<char> hit(classes.size(), 0);
  for (size_t i = 0; i < classes.size(); ++i) {
    GeneratingVector img =
        canonicalize(auts, braid_act(G, move, classes[i].representative));
    int t = find_rep(img);
    perm[i] = t;
    if (hit[t])
      throw std::logic_error("induced map on classes is not a bijection");
    hit[t] = 1;
  }
  return perm;
}

StratumPartition strata(const GroupTable& G,
                        const std::vector<Automorphism>& auts,
                        const Signature& s,
                        const std::vector<VectorClass>& classes) {
  StratumPartition part;
  part.generator_set = modular_generators(s);

  std::vector<std::vector<int>> perms;
  for (const auto& mv : part.generator_set)
    perms.push_back(induced_permutation(G, auts, mv, classes));

  std::vector<char> visited(classes.size(), 0);
  for (size_t start = 0; start < classes.size(); ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit{static_cast<int>(start)};
    visited[start] = 1;
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const auto& p : perms) {
        int nxt = p[orbit[head]];
        if (!visited[nxt]) {
          visited[nxt] = 1;
          orbit.push_back(nxt);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

}  // namespace modcomp
