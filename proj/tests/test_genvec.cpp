#include <algorithm>
#include <set>

#include "doctest.h"
#include "modcomp/genvec.hpp"

using namespace modcomp;

namespace {

int by_name(const GroupTable& G, const std::string& word) {
  for (int g = 0; g < G.order(); ++g)
    if (G.elem_name(g) == word) return g;
  REQUIRE(false);
  return -1;
}

// Naive quadruple-loop oracle without the c4-solving shortcut.
std::vector<GeneratingVector> enumerate_oracle(const GroupTable& G,
                                               const Signature& s) {
  std::vector<GeneratingVector> out;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      for (int c = 0; c < G.order(); ++c)
        for (int d = 0; d < G.order(); ++d) {
          GeneratingVector v{{a, b, c, d}};
          if (is_generating_vector(G, s, v)) out.push_back(v);
        }
  return out;
}

}  // namespace

TEST_CASE("genus from the hyperbolic area relation") {
  CHECK(genus(build_preset("sym3"), Signature{{2, 2, 3, 3}}) == 2);
  CHECK(genus(build_preset("alt5"), Signature{{5, 5, 5, 5}}) == 37);
  CHECK(genus(build_preset("alt5"), Signature{{2, 2, 2, 3}}) == 6);
  CHECK(genus(build_preset("alt5"), Signature{{2, 3, 3, 5}}) == 20);
  CHECK(genus(build_preset("cyclic:13"), Signature{{13, 13, 13, 13}}) == 12);
  CHECK(genus(build_preset("sg21_1"), Signature{{3, 3, 7, 7}}) == 12);
  CHECK(genus(build_preset("psl2_7"), Signature{{2, 2, 3, 3}}) == 29);
  CHECK(genus(build_preset("psl2_7"), Signature{{7, 7, 7, 7}}) == 121);
  // genus 1: not hyperbolic
  CHECK_THROWS_AS(genus(build_preset("cyclic:2"), Signature{{2, 2, 2, 2}}),
                  SpecError);
  // non-integral value
  CHECK_THROWS_AS(genus(build_preset("cyclic:3"), Signature{{2, 2, 2, 3}}),
                  SpecError);
}

TEST_CASE("genus near the order cap stays exact") {
  GroupTable G = build_preset("cyclic:1999");
  CHECK(G.order() == 1999);
  CHECK(genus(G, Signature{{1999, 1999, 1999, 1999}}) == 1998);
}

TEST_CASE("signature parsing") {
  Signature s = Signature::parse("2,2,3,3");
  CHECK(s.periods == std::array<int, 4>{2, 2, 3, 3});
  CHECK_THROWS_AS(Signature::parse("3,2,2,3"), SpecError);  // not sorted
  CHECK_THROWS_AS(Signature::parse("1,2,3,4"), SpecError);  // period < 2
  CHECK_THROWS_AS(Signature::parse("2,2,3"), SpecError);
  CHECK_THROWS_AS(Signature::parse("2,2,3,3,3"), SpecError);
  CHECK_THROWS_AS(Signature::parse("2,2,x,3"), SpecError);
}

TEST_CASE("sym3 has 12 vectors in 2 classes") {
  GroupTable G = build_preset("sym3");
  Signature s{{2, 2, 3, 3}};
  auto vectors = enumerate_vectors(G, s);
  CHECK(vectors.size() == 12);
  for (const auto& v : vectors) CHECK(is_generating_vector(G, s, v));

  auto auts = automorphisms(G);
  auto classes = aut_classes(G, auts, vectors);
  REQUIRE(classes.size() == 2);

  int x = by_name(G, "x");
  int y = by_name(G, "y");
  int xy = G.mul(x, y);
  CHECK(classes[0].representative ==
        GeneratingVector{{x, x, y, G.inv(y)}});
  CHECK(classes[1].representative == GeneratingVector{{x, xy, y, y}});
  CHECK(classes[0].orbit_size == 6);
  CHECK(classes[1].orbit_size == 6);
}

TEST_CASE("cyclic 13 counts") {
  GroupTable G = build_preset("cyclic:13");
  Signature s{{13, 13, 13, 13}};
  auto vectors = enumerate_vectors(G, s);

  // independent count: nonzero (a,b,c,d) mod 13 with a+b+c+d = 0
  int count = 0;
  for (int a = 1; a < 13; ++a)
    for (int b = 1; b < 13; ++b)
      for (int c = 1; c < 13; ++c) {
        int d = (13 - (a + b + c) % 13) % 13;
        if (d != 0) ++count;
      }
  CHECK(count == 1596);
  CHECK(vectors.size() == 1596);

  auto classes = aut_classes(G, automorphisms(G), vectors);
  CHECK(classes.size() == 133);
}

TEST_CASE("no vectors when orders are unavailable") {
  GroupTable G = build_preset("cyclic:2");
  auto vectors = enumerate_vectors(G, Signature{{3, 3, 3, 3}});
  CHECK(vectors.empty());
}

TEST_CASE("alt5 (2,2,2,3) has 9 classes") {
  GroupTable G = build_preset("alt5");
  Signature s{{2, 2, 2, 3}};
  auto vectors = enumerate_vectors(G, s);
  auto classes = aut_classes(G, automorphisms(G), vectors);
  CHECK(classes.size() == 9);
  CHECK(vectors.size() == 9 * 120);
}

TEST_CASE("orbit sizes sum to the vector count") {
  for (auto [name, sig] : std::vector<std::pair<const char*, Signature>>{
           {"sym3", Signature{{2, 2, 3, 3}}},
           {"cyclic:13", Signature{{13, 13, 13, 13}}},
           {"sg21_1", Signature{{3, 3, 7, 7}}}}) {
    GroupTable G = build_preset(name);
    auto vectors = enumerate_vectors(G, sig);
    auto classes = aut_classes(G, automorphisms(G), vectors);
    size_t total = 0;
    for (const auto& c : classes) total += c.orbit_size;
    CHECK(total == vectors.size());
  }
}

TEST_CASE("canonical form is idempotent") {
  GroupTable G = build_preset("sym3");
  auto auts = automorphisms(G);
  auto vectors = enumerate_vectors(G, Signature{{2, 2, 3, 3}});
  for (const auto& v : vectors) {
    GeneratingVector rep = canonicalize(auts, v);
    for (const auto& w : auts)
      CHECK(canonicalize(auts, apply_automorphism(w, rep)) == rep);
  }
}

TEST_CASE("enumerate matches the naive quadruple-loop oracle") {
  for (auto [name, sig] : std::vector<std::pair<const char*, Signature>>{
           {"sym3", Signature{{2, 2, 3, 3}}},
           {"sym3", Signature{{2, 2, 2, 2}}},
           {"cyclic:5", Signature{{5, 5, 5, 5}}},
           {"cyclic:12", Signature{{2, 3, 4, 12}}},
           {"sg21_1", Signature{{3, 3, 7, 7}}},
           {"sg21_1", Signature{{3, 3, 3, 7}}}}) {
    GroupTable G = build_preset(name);
    auto fast = enumerate_vectors(G, sig);
    auto slow = enumerate_oracle(G, sig);
    CHECK(fast == slow);
  }
}
