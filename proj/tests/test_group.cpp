#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "modcomp/group.hpp"

using namespace modcomp;

namespace {

int by_name(const GroupTable& G, const std::string& word) {
  for (int g = 0; g < G.order(); ++g)
    if (G.elem_name(g) == word) return g;
  REQUIRE(false);
  return -1;
}

// Brute-force oracle: all bijections of the element set that are
// homomorphisms. Only usable for tiny groups.
int count_automorphisms_bruteforce(const GroupTable& G) {
  std::vector<int> perm(G.order());
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    if (perm[GroupTable::identity] != GroupTable::identity) continue;
    bool hom = true;
    for (int a = 0; a < G.order() && hom; ++a)
      for (int b = 0; b < G.order() && hom; ++b)
        if (perm[G.mul(a, b)] != G.mul(perm[a], perm[b])) hom = false;
    if (hom) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Recursive-closure oracle for generates().
void closure_rec(const GroupTable& G, std::set<int>& acc, int g) {
  if (acc.count(g)) return;
  acc.insert(g);
  for (int h : std::vector<int>(acc.begin(), acc.end())) {
    closure_rec(G, acc, G.mul(g, h));
    closure_rec(G, acc, G.mul(h, g));
    closure_rec(G, acc, G.inv(g));
  }
}

bool generates_oracle(const GroupTable& G, const std::vector<int>& S) {
  std::set<int> acc{GroupTable::identity};
  for (int g : S) closure_rec(G, acc, g);
  return static_cast<int>(acc.size()) == G.order();
}

}  // namespace

TEST_CASE("preset orders") {
  CHECK(build_preset("sym3").order() == 6);
  CHECK(build_preset("cyclic:13").order() == 13);
  CHECK(build_preset("alt5").order() == 60);
  CHECK(build_preset("psl2_7").order() == 168);
  CHECK(build_preset("sg21_1").order() == 21);
}

TEST_CASE("trivial table group") {
  GroupSpec spec;
  spec.table = {{0}};
  GroupTable G = build_group(spec);
  CHECK(G.order() == 1);
  CHECK(G.elem_order(0) == 1);
}

TEST_CASE("cycle notation parser") {
  auto p = parse_cycles("(1,2,3)(4,5)");
  CHECK(p == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(parse_cycles("(2,3)") == std::vector<int>{0, 2, 1});
  CHECK_THROWS_AS(parse_cycles(""), SpecError);
  CHECK_THROWS_AS(parse_cycles("(1,2"), SpecError);
  CHECK_THROWS_AS(parse_cycles("1,2)"), SpecError);
  CHECK_THROWS_AS(parse_cycles("(1,1)"), SpecError);
  CHECK_THROWS_AS(parse_cycles("(0,1)"), SpecError);
}

TEST_CASE("bad tables are rejected") {
  GroupSpec spec;
  spec.table = {{0, 1}, {1, 1}};  // not a Latin square, 1 has no inverse
  CHECK_THROWS_AS(build_group(spec), SpecError);

  GroupSpec assoc;
  // closed, has identity 0 and "inverses", but not associative
  assoc.table = {{0, 1, 2, 3, 4},
                 {1, 0, 3, 4, 2},
                 {2, 4, 0, 1, 3},
                 {3, 2, 4, 0, 1},
                 {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(build_group(assoc), SpecError);
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(build_preset("cyclic:100", 50), CapExceeded);
  GroupSpec spec;
  spec.permutations = {"(1,2,3,4,5,6,7)", "(8,1)(2,7)(3,4)(5,6)"};
  spec.order_cap = 100;
  CHECK_THROWS_AS(build_group(spec), CapExceeded);
}

TEST_CASE("sym3 element structure") {
  GroupTable G = build_preset("sym3");
  int x = by_name(G, "x");
  int y = by_name(G, "y");
  CHECK(element_order(G, x) == 2);
  CHECK(element_order(G, y) == 3);
  CHECK(element_order(G, GroupTable::identity) == 1);
  // y^x = y^-1
  CHECK(G.conj(y, G.inv(x)) == G.inv(y));
  // canonical order: identity, involutions by word, then order-3 elements
  CHECK(G.elem_order(0) == 1);
  CHECK(G.elem_order(1) == 2);
  CHECK(G.elem_order(2) == 2);
  CHECK(G.elem_order(3) == 2);
  CHECK(G.elem_order(4) == 3);
  CHECK(G.elem_order(5) == 3);
  CHECK(x == 1);
  CHECK(y == 4);
}

TEST_CASE("element orders divide the group order") {
  for (const char* name : {"sym3", "cyclic:12", "sg21_1", "alt5"}) {
    GroupTable G = build_preset(name);
    for (int g = 0; g < G.order(); ++g) {
      CHECK(G.order() % G.elem_order(g) == 0);
      CHECK(G.mul(g, G.inv(g)) == GroupTable::identity);
      CHECK(G.mul(GroupTable::identity, g) == g);
      CHECK(G.mul(g, GroupTable::identity) == g);
    }
  }
}

TEST_CASE("generates") {
  GroupTable G = build_preset("sym3");
  int x = by_name(G, "x");
  int y = by_name(G, "y");
  CHECK(G.generates({x, y}));
  CHECK_FALSE(G.generates({y}));

  GroupTable C13 = build_preset("cyclic:13");
  for (int g = 1; g < 13; ++g) CHECK(C13.generates({g}));
}

TEST_CASE("generates agrees with the recursive-closure oracle") {
  for (const char* name : {"sym3", "cyclic:12"}) {
    GroupTable G = build_preset(name);
    const int n = G.order();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> S;
      for (int g = 0; g < n; ++g)
        if (mask & (1 << g)) S.push_back(g);
      CHECK(G.generates(S) == generates_oracle(G, S));
    }
  }
}

TEST_CASE("automorphism counts against oracles") {
  // sym3: brute force over all bijections of the 6 elements
  GroupTable S3 = build_preset("sym3");
  auto auts3 = automorphisms(S3);
  CHECK(count_automorphisms_bruteforce(S3) == 6);
  CHECK(auts3.size() == 6);

  // cyclic 13: exactly the 12 generator-image choices
  GroupTable C13 = build_preset("cyclic:13");
  auto auts13 = automorphisms(C13);
  int oracle13 = 0;
  for (int img = 1; img < 13; ++img) {
    // g -> img extends uniquely; in a cyclic group it is always bijective
    std::vector<int> map(13);
    for (int k = 0; k < 13; ++k) map[k] = 0;
    int cur = 0;
    bool ok = true;
    std::vector<char> hit(13, 0);
    for (int k = 0; k < 13; ++k) {
      map[k] = cur;
      if (hit[cur]) ok = false;
      hit[cur] = 1;
      cur = C13.mul(cur, img);
    }
    if (ok) ++oracle13;
  }
  CHECK(oracle13 == 12);
  CHECK(auts13.size() == 12);

  // alt5: every reported automorphism re-checked exhaustively
  GroupTable A5 = build_preset("alt5");
  auto auts5 = automorphisms(A5);
  CHECK(auts5.size() == 120);
  for (const auto& w : auts5)
    for (int a = 0; a < 60; ++a)
      for (int b = 0; b < 60; ++b)
        REQUIRE(w(A5.mul(a, b)) == A5.mul(w(a), w(b)));

  CHECK(automorphisms(build_preset("sg21_1")).size() == 42);
  CHECK(automorphisms(build_preset("psl2_7")).size() == 336);
}

TEST_CASE("sg21_1 is the nonabelian group of order 21") {
  GroupTable G = build_preset("sg21_1");
  bool abelian = true;
  for (int a = 0; a < G.order() && abelian; ++a)
    for (int b = 0; b < G.order() && abelian; ++b)
      if (G.mul(a, b) != G.mul(b, a)) abelian = false;
  CHECK_FALSE(abelian);
  int order3 = 0, order7 = 0;
  for (int g = 0; g < G.order(); ++g) {
    if (G.elem_order(g) == 3) ++order3;
    if (G.elem_order(g) == 7) ++order7;
  }
  CHECK(order3 == 14);
  CHECK(order7 == 6);
}

TEST_CASE("automorphism lists form a group and preserve orders") {
  for (const char* name : {"sym3", "cyclic:12", "sg21_1", "alt5"}) {
    GroupTable G = build_preset(name);
    auto auts = automorphisms(G);
    std::set<std::vector<int>> images;
    for (const auto& w : auts) {
      CHECK(w(GroupTable::identity) == GroupTable::identity);
      for (int g = 0; g < G.order(); ++g)
        CHECK(G.elem_order(w(g)) == G.elem_order(g));
      images.insert(w.image);
    }
    CHECK(images.size() == auts.size());
    for (const auto& a : auts) {
      // closed under inversion
      std::vector<int> inv(G.order());
      for (int g = 0; g < G.order(); ++g) inv[a(g)] = g;
      CHECK(images.count(inv));
    }
    // closed under composition
    for (const auto& a : auts)
      for (const auto& b : auts) {
        std::vector<int> comp(G.order());
        for (int g = 0; g < G.order(); ++g) comp[g] = a(b(g));
        REQUIRE(images.count(comp));
      }
  }
}

TEST_CASE("inner automorphisms") {
  GroupTable S3 = build_preset("sym3");
  CHECK(inner_automorphism(S3, GroupTable::identity).image ==
        std::vector<int>{0, 1, 2, 3, 4, 5});

  GroupTable C13 = build_preset("cyclic:13");
  for (int x = 0; x < 13; ++x) {
    auto inner = inner_automorphism(C13, x);
    for (int g = 0; g < 13; ++g) CHECK(inner(g) == g);
  }

  for (const char* name : {"sym3", "sg21_1"}) {
    GroupTable G = build_preset(name);
    auto auts = automorphisms(G);
    std::set<std::vector<int>> images;
    for (const auto& w : auts) images.insert(w.image);
    for (int x = 0; x < G.order(); ++x)
      CHECK(images.count(inner_automorphism(G, x).image));
  }
}

TEST_CASE("ordering fingerprint is reproducible") {
  GroupTable a = build_preset("sym3");
  GroupTable b = build_preset("sym3");
  CHECK(a.ordering_fingerprint() == b.ordering_fingerprint());
  CHECK(a.ordering_fingerprint() != build_preset("alt5").ordering_fingerprint());
}
