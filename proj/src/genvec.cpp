#include "modcomp/genvec.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_set>

namespace modcomp {

Signature Signature::parse(const std::string& text) {
  Signature s{};
  std::istringstream in(text);
  std::string part;
  int n = 0;
  while (std::getline(in, part, ',')) {
    if (n >= 4) throw SpecError("signature needs exactly 4 periods: " + text);
    try {
      s.periods[n++] = std::stoi(part);
    } catch (...) {
      throw SpecError("bad signature period: " + part);
    }
  }
  if (n != 4) throw SpecError("signature needs exactly 4 periods: " + text);
  s.validate();
  return s;
}

void Signature::validate() const {
  for (int m : periods)
    if (m < 2) throw SpecError("signature periods must be >= 2");
  for (int j = 0; j < 3; ++j)
    if (periods[j] > periods[j + 1])
      throw SpecError("signature periods must be non-decreasing");
}

int genus(const GroupTable& G, const Signature& s) {
  s.validate();
  // 2*sigma - 2 = |G| * (2 - sum 1/mj), evaluated exactly
  std::int64_t den = 1;
  for (int m : s.periods) den *= m;
  std::int64_t num = 2 * den;
  for (int j = 0; j < 4; ++j) num -= den / s.periods[j];
  std::int64_t twice = static_cast<std::int64_t>(G.order()) * num;
  if (twice % den != 0)
    throw SpecError("Riemann-Hurwitz value is not an integer for this pair");
  std::int64_t t = twice / den;  // = 2*sigma - 2
  if (t < 2 || t % 2 != 0)
    throw SpecError("signature/group pair is not hyperbolic (genus < 2)");
  return static_cast<int>(t / 2 + 1);
}

void check_vector_ids(const GroupTable& G, const GeneratingVector& v) {
  for (int c : v.c)
    if (c < 0 || c >= G.order())
      throw SpecError("vector entry is not an element id of the group");
}

bool is_generating_vector(const GroupTable& G, const Signature& s,
                          const GeneratingVector& v) {
  int p = GroupTable::identity;
  for (int j = 0; j < 4; ++j) {
    if (v.c[j] < 0 || v.c[j] >= G.order()) return false;
    if (G.elem_order(v.c[j]) != s.periods[j]) return false;
    p = G.mul(p, v.c[j]);
  }
  if (p != GroupTable::identity) return false;
  return G.generates({v.c[0], v.c[1], v.c[2], v.c[3]});
}

std::vector<GeneratingVector> enumerate_vectors(const GroupTable& G,
                                                const Signature& s) {
  s.validate();
  std::array<std::vector<int>, 4> pool;
  for (int j = 0; j < 4; ++j)
    for (int g = 0; g < G.order(); ++g)
      if (G.elem_order(g) == s.periods[j]) pool[j].push_back(g);

  std::vector<GeneratingVector> out;
  for (int c1 : pool[0])
    for (int c2 : pool[1]) {
      int c12 = G.mul(c1, c2);
      for (int c3 : pool[2]) {
        int c4 = G.inv(G.mul(c12, c3));
        if (G.elem_order(c4) != s.periods[3]) continue;
        if (!G.generates({c1, c2, c3, c4})) continue;
        out.push_back(GeneratingVector{{c1, c2, c3, c4}});
      }
    }
  return out;
}

GeneratingVector apply_automorphism(const Automorphism& w,
                                    const GeneratingVector& v) {
  return GeneratingVector{
      {w.image[v.c[0]], w.image[v.c[1]], w.image[v.c[2]], w.image[v.c[3]]}};
}

GeneratingVector canonicalize(const std::vector<Automorphism>& auts,
                              const GeneratingVector& v) {
  GeneratingVector best = v;
  bool first = true;
  for (const auto& w : auts) {
    GeneratingVector img = apply_automorphism(w, v);
    if (first || img < best) best = img;
    first = false;
  }
  return best;
}

namespace {
struct VecHash {
  size_t operator()(const GeneratingVector& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v.c) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b9;
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};
}  // namespace

std::vector<VectorClass> aut_classes(
    const GroupTable& G, const std::vector<Automorphism>& auts,
    const std::vector<GeneratingVector>& vectors) {
  (void)G;
  std::unordered_set<GeneratingVector, VecHash> seen;
  seen.reserve(vectors.size() * 2);
  std::vector<VectorClass> classes;
  for (const auto& v : vectors) {
    if (seen.count(v)) continue;
    GeneratingVector best = v;
    int orbit = 0;
    for (const auto& w : auts) {
      GeneratingVector img = apply_automorphism(w, v);
      if (seen.insert(img).second) ++orbit;
      if (img < best) best = img;
    }
    VectorClass cls;
    cls.representative = best;
    cls.orbit_size = orbit;
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end(),
            [](const VectorClass& a, const VectorClass& b) {
              return a.representative < b.representative;
            });
  for (size_t i = 0; i < classes.size(); ++i)
    classes[i].class_index = static_cast<int>(i);
  return classes;
}

}  // namespace modcomp
