#include "modcomp/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace modcomp {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a_str(std::uint64_t h, const std::string& s) {
  return fnv1a(h, s.data(), s.size());
}

std::string render_word(const std::vector<int>& letters,
                        const std::vector<std::string>& names) {
  if (letters.empty()) return "1";
  std::ostringstream out;
  size_t i = 0;
  while (i < letters.size()) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    out << names[letters[i]];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

struct RawGroup {
  int order = 0;
  std::vector<int> mul;  // row-major, original indices, identity unknown
  std::vector<int> generator_idx;
  std::vector<std::string> generator_names;
};

// BFS over products of the generators; returns per-element shortlex-minimal
// generator words (positive letters only) and the BFS parent structure.
struct WordTable {
  std::vector<std::vector<int>> word;  // letters per element
};

WordTable min_words(const RawGroup& g, int identity) {
  const int n = g.order;
  WordTable wt;
  wt.word.assign(n, {});
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  seen[identity] = 1;
  q.push(identity);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    for (size_t L = 0; L < g.generator_idx.size(); ++L) {
      int nxt = g.mul[cur * n + g.generator_idx[L]];
      if (!seen[nxt]) {
        seen[nxt] = 1;
        wt.word[nxt] = wt.word[cur];
        wt.word[nxt].push_back(static_cast<int>(L));
        q.push(nxt);
      }
    }
  }
  for (int e = 0; e < n; ++e)
    if (!seen[e])
      throw SpecError("generators do not generate the whole table");
  return wt;
}

int find_identity(const std::vector<int>& mul, int n) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = mul[e * n + g] == g && mul[g * n + e] == g;
    if (ok) return e;
  }
  throw SpecError("multiplication table has no identity element");
}

void check_group_axioms(const std::vector<int>& mul, int n, int identity) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = mul[i * n + j];
      if (v < 0 || v >= n) throw SpecError("table entry out of range");
    }
  // inverses
  for (int g = 0; g < n; ++g) {
    bool has = false;
    for (int h = 0; h < n; ++h)
      if (mul[g * n + h] == identity && mul[h * n + g] == identity) has = true;
    if (!has) throw SpecError("table element without inverse");
  }
  // associativity: exhaustive up to order 256, sampled above
  auto assoc_at = [&](int a, int b, int c) {
    return mul[mul[a * n + b] * n + c] == mul[a * n + mul[b * n + c]];
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc_at(a, b, c))
            throw SpecError("multiplication table is not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t)n;
    auto next = [&state]() {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int t = 0; t < 200000; ++t) {
      int a = next() % n, b = next() % n, c = next() % n;
      if (!assoc_at(a, b, c))
        throw SpecError("multiplication table is not associative");
    }
  }
}

RawGroup from_permutations(const std::vector<std::string>& cycles,
                           int order_cap,
                           std::vector<std::string> names) {
  if (cycles.empty()) throw SpecError("no permutation generators given");
  int degree = 0;
  std::vector<std::vector<int>> gens;
  for (const auto& text : cycles) {
    auto p = parse_cycles(text);
    degree = std::max(degree, static_cast<int>(p.size()));
    gens.push_back(std::move(p));
  }
  for (auto& p : gens)
    while (static_cast<int>(p.size()) < degree)
      p.push_back(static_cast<int>(p.size()));

  auto compose = [degree](const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(p) = a(b(p))
    std::vector<int> r(degree);
    for (int p = 0; p < degree; ++p) r[p] = a[b[p]];
    return r;
  };

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[id] = 0;
  elems.push_back(id);
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop();
    for (const auto& g : gens) {
      auto nxt = compose(elems[cur], g);
      if (!index.count(nxt)) {
        if (static_cast<int>(elems.size()) >= order_cap)
          throw CapExceeded("group order exceeds cap " +
                            std::to_string(order_cap));
        index[nxt] = static_cast<int>(elems.size());
        elems.push_back(nxt);
        q.push(index[nxt]);
      }
    }
  }

  RawGroup raw;
  raw.order = static_cast<int>(elems.size());
  raw.mul.assign(static_cast<size_t>(raw.order) * raw.order, 0);
  for (int i = 0; i < raw.order; ++i)
    for (int j = 0; j < raw.order; ++j)
      raw.mul[i * raw.order + j] = index.at(compose(elems[i], elems[j]));
  for (const auto& g : gens) raw.generator_idx.push_back(index.at(g));
  if (names.empty())
    for (size_t i = 0; i < gens.size(); ++i)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
  raw.generator_names = std::move(names);
  return raw;
}

RawGroup from_table(const std::vector<std::vector<int>>& rows, int order_cap) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw SpecError("empty multiplication table");
  if (n > order_cap)
    throw CapExceeded("group order exceeds cap " + std::to_string(order_cap));
  RawGroup raw;
  raw.order = n;
  raw.mul.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw SpecError("multiplication table is not square");
    for (int j = 0; j < n; ++j) raw.mul[i * n + j] = rows[i][j];
  }
  // every element is its own generator letter
  for (int i = 0; i < n; ++i) {
    raw.generator_idx.push_back(i);
    raw.generator_names.push_back("e" + std::to_string(i));
  }
  return raw;
}

GroupTable finish(RawGroup raw, const std::string& name) {
  const int n = raw.order;
  const int id0 = find_identity(raw.mul, n);
  check_group_axioms(raw.mul, n, id0);

  std::vector<int> ord(n, 0);
  for (int g = 0; g < n; ++g) {
    int k = 1, cur = g;
    while (cur != id0) {
      cur = raw.mul[cur * n + g];
      if (++k > n)
        throw SpecError("power sequence does not return to the identity");
    }
    ord[g] = k;
  }

  WordTable wt = min_words(raw, id0);

  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::stable_sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    if (ord[a] != ord[b]) return ord[a] < ord[b];
    const auto& wa = wt.word[a];
    const auto& wb = wt.word[b];
    if (wa.size() != wb.size()) return wa.size() < wb.size();
    if (wa != wb) return wa < wb;
    return a < b;
  });
  std::vector<int> new_id(n);
  for (int r = 0; r < n; ++r) new_id[by_rank[r]] = r;

  std::vector<int> mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[new_id[i] * n + new_id[j]] = new_id[raw.mul[i * n + j]];

  std::vector<std::string> gen_names = raw.generator_names;
  std::vector<int> gen_ids;
  for (int gi : raw.generator_idx) gen_ids.push_back(new_id[gi]);

  return GroupTable(name, std::move(mul), std::move(gen_names),
                    std::move(gen_ids));
}

}  // namespace

std::vector<int> parse_cycles(const std::string& text, int min_degree) {
  int degree = min_degree;
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw SpecError("empty permutation string");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw SpecError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw SpecError("expected point in cycle: " + text);
      int pt = std::stoi(text.substr(start, i - start));
      if (pt < 1) throw SpecError("cycle points are 1-based: " + text);
      cyc.push_back(pt - 1);
      degree = std::max(degree, pt);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw SpecError("expected ',' or ')' in cycle: " + text);
    }
    for (size_t a = 0; a < cyc.size(); ++a)
      for (size_t b = a + 1; b < cyc.size(); ++b)
        if (cyc[a] == cyc[b])
          throw SpecError("repeated point inside a cycle: " + text);
    cycles.push_back(std::move(cyc));
  }

  std::vector<int> perm(degree);
  std::iota(perm.begin(), perm.end(), 0);
  // rightmost cycle acts first
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> step(degree);
    std::iota(step.begin(), step.end(), 0);
    const auto& cyc = *it;
    for (size_t k = 0; k < cyc.size(); ++k)
      step[cyc[k]] = cyc[(k + 1) % cyc.size()];
    std::vector<int> next(degree);
    for (int p = 0; p < degree; ++p) next[p] = step[perm[p]];
    perm = next;
  }
  return perm;
}

GroupTable::GroupTable(std::string name, std::vector<int> mul_table,
                       std::vector<std::string> generator_names,
                       std::vector<int> generator_ids)
    : name_(std::move(name)),
      mul_(std::move(mul_table)),
      generator_names_(std::move(generator_names)),
      generator_ids_(std::move(generator_ids)) {
  order_ = 0;
  while (static_cast<size_t>(order_) * order_ < mul_.size()) ++order_;
  if (static_cast<size_t>(order_) * order_ != mul_.size())
    throw SpecError("multiplication table is not square");
  if (order_ == 0) throw SpecError("empty group");

  for (int g = 0; g < order_; ++g)
    if (mul(identity, g) != g || mul(g, identity) != g)
      throw SpecError("id 0 is not the identity after canonicalization");

  inv_.assign(order_, -1);
  for (int g = 0; g < order_; ++g)
    for (int h = 0; h < order_; ++h)
      if (mul(g, h) == identity) inv_[g] = h;
  for (int g = 0; g < order_; ++g)
    if (inv_[g] < 0) throw SpecError("element without inverse");

  elem_order_.assign(order_, 1);
  for (int g = 0; g < order_; ++g) {
    int k = 1, cur = g;
    while (cur != identity) {
      cur = mul(cur, g);
      if (++k > order_)
        throw SpecError("power sequence does not return to the identity");
    }
    elem_order_[g] = k;
  }

  // display words over the construction generators, recomputed in canonical
  // id space so elem_name(id) is stable
  elem_name_.assign(order_, "");
  {
    std::vector<std::vector<int>> word(order_);
    std::vector<char> seen(order_, 0);
    std::queue<int> q;
    seen[identity] = 1;
    q.push(identity);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (size_t L = 0; L < generator_ids_.size(); ++L) {
        int nxt = mul(cur, generator_ids_[L]);
        if (!seen[nxt]) {
          seen[nxt] = 1;
          word[nxt] = word[cur];
          word[nxt].push_back(static_cast<int>(L));
          q.push(nxt);
        }
      }
    }
    for (int e = 0; e < order_; ++e)
      elem_name_[e] = render_word(word[e], generator_names_);

    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a_str(h, "modcomp-elemorder-v1");
    h = fnv1a_str(h, name_);
    h = fnv1a(h, &order_, sizeof(order_));
    for (int e = 0; e < order_; ++e) {
      h = fnv1a(h, &elem_order_[e], sizeof(int));
      h = fnv1a(h, word[e].data(), word[e].size() * sizeof(int));
    }
    std::ostringstream hex;
    hex << std::hex << h;
    fingerprint_ = "elemorder-v1:" + hex.str();
  }
}

std::vector<int> GroupTable::closure(const std::vector<int>& subset) const {
  std::vector<char> in(order_, 0);
  std::vector<int> frontier;
  in[identity] = 1;
  frontier.push_back(identity);
  std::vector<int> gens;
  for (int g : subset) {
    if (g < 0 || g >= order_) throw SpecError("element id out of range");
    gens.push_back(g);
    gens.push_back(inv_[g]);
  }
  for (size_t head = 0; head < frontier.size(); ++head) {
    int cur = frontier[head];
    for (int g : gens) {
      int nxt = mul(cur, g);
      if (!in[nxt]) {
        in[nxt] = 1;
        frontier.push_back(nxt);
      }
    }
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

bool GroupTable::generates(const std::vector<int>& subset) const {
  return static_cast<int>(closure(subset).size()) == order_;
}

GroupTable build_preset(const std::string& token, int order_cap) {
  GroupSpec spec;
  spec.preset = token;
  spec.order_cap = order_cap;
  return build_group(spec);
}

GroupTable build_group(const GroupSpec& spec) {
  if (!spec.preset.empty()) {
    const std::string& t = spec.preset;
    if (t == "sym3")
      return finish(from_permutations({"(1,2)", "(1,2,3)"}, spec.order_cap,
                                      {"x", "y"}),
                    "sym3");
    if (t.rfind("cyclic:", 0) == 0) {
      int n = 0;
      try {
        n = std::stoi(t.substr(7));
      } catch (...) {
        throw SpecError("bad cyclic preset: " + t);
      }
      if (n < 1) throw SpecError("cyclic order must be >= 1");
      if (n > spec.order_cap)
        throw CapExceeded("group order exceeds cap " +
                          std::to_string(spec.order_cap));
      RawGroup raw;
      raw.order = n;
      raw.mul.assign(static_cast<size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) raw.mul[i * n + j] = (i + j) % n;
      raw.generator_idx = {n > 1 ? 1 : 0};
      raw.generator_names = {"g"};
      return finish(std::move(raw), t);
    }
    if (t == "alt5")
      return finish(from_permutations({"(1,2,3,4,5)", "(1,2,3)"},
                                      spec.order_cap, {"a", "b"}),
                    "alt5");
    if (t == "psl2_7")
      // projective line over F7: z -> z+1 and z -> -1/z, points 1..7 = 0..6,
      // 8 = infinity
      return finish(from_permutations({"(1,2,3,4,5,6,7)",
                                       "(8,1)(2,7)(3,4)(5,6)"},
                                      spec.order_cap, {"s", "t"}),
                    "psl2_7");
    if (t == "sg21_1")
      // C7 : C3, the nonabelian group of order 21
      return finish(from_permutations({"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"},
                                      spec.order_cap, {"a", "b"}),
                    "sg21_1");
    throw SpecError("unknown preset: " + t);
  }
  if (!spec.permutations.empty())
    return finish(from_permutations(spec.permutations, spec.order_cap, {}),
                  "permgroup");
  if (!spec.table.empty()) return finish(from_table(spec.table, spec.order_cap),
                                         "table");
  throw SpecError("group spec must set preset, permutations, or table");
}

int element_order(const GroupTable& G, int g) {
  if (g < 0 || g >= G.order()) throw SpecError("element id out of range");
  return G.elem_order(g);
}

std::vector<Automorphism> automorphisms(const GroupTable& G) {
  const int n = G.order();

  // small generating tuple, greedily in canonical order
  std::vector<int> gens;
  {
    std::vector<int> cl = {GroupTable::identity};
    std::vector<char> in(n, 0);
    in[GroupTable::identity] = 1;
    while (static_cast<int>(cl.size()) < n) {
      int pick = -1;
      for (int g = 1; g < n; ++g)
        if (!in[g]) {
          pick = g;
          break;
        }
      gens.push_back(pick);
      cl = G.closure(gens);
      std::fill(in.begin(), in.end(), 0);
      for (int g : cl) in[g] = 1;
    }
  }
  if (gens.empty()) {
    // trivial group
    return {Automorphism{{0}}};
  }

  // BFS tree over the generating tuple: img[e] = img[parent] * cand[letter]
  std::vector<int> parent(n, -1), letter(n, -1), bfs_order;
  {
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[GroupTable::identity] = 1;
    q.push(GroupTable::identity);
    bfs_order.push_back(GroupTable::identity);
    while (!q.empty()) {
      int cur = q.front();
      q.pop();
      for (size_t L = 0; L < gens.size(); ++L) {
        int nxt = G.mul(cur, gens[L]);
        if (!seen[nxt]) {
          seen[nxt] = 1;
          parent[nxt] = cur;
          letter[nxt] = static_cast<int>(L);
          bfs_order.push_back(nxt);
          q.push(nxt);
        }
      }
    }
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int g = 0; g < n; ++g)
      if (G.elem_order(g) == G.elem_order(gens[i])) candidates[i].push_back(g);

  double search_space = 1;
  for (const auto& c : candidates) search_space *= c.size();
  if (search_space > 2e8)
    throw CapExceeded("automorphism candidate space too large (" +
                      std::to_string(gens.size()) + " generators, ~" +
                      std::to_string(search_space) + " image tuples)");

  std::vector<Automorphism> found;
  std::vector<int> pick(gens.size(), 0);
  std::vector<int> img(n);
  std::vector<char> hit(n);

  auto try_candidate = [&]() {
    img.assign(n, -1);
    img[GroupTable::identity] = GroupTable::identity;
    for (int e : bfs_order) {
      if (e == GroupTable::identity) continue;
      img[e] = G.mul(img[parent[e]], pick[letter[e]]);
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (int e = 0; e < n; ++e) {
      if (hit[img[e]]) return;  // not a bijection
      hit[img[e]] = 1;
    }
    // hom check on (g, generator) pairs extends to all pairs by induction
    for (int g = 0; g < n; ++g)
      for (size_t L = 0; L < gens.size(); ++L)
        if (img[G.mul(g, gens[L])] != G.mul(img[g], pick[L])) return;
    found.push_back(Automorphism{img});
  };

  // cartesian product over candidate images
  std::vector<size_t> idx(gens.size(), 0);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) pick[i] = candidates[i][idx[i]];
    try_candidate();
    size_t pos = 0;
    while (pos < gens.size()) {
      if (++idx[pos] < candidates[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == gens.size()) break;
  }

  std::sort(found.begin(), found.end());
  return found;
}

Automorphism inner_automorphism(const GroupTable& G, int x) {
  if (x < 0 || x >= G.order()) throw SpecError("element id out of range");
  Automorphism a;
  a.image.resize(G.order());
  for (int g = 0; g < G.order(); ++g) a.image[g] = G.conj(g, x);
  return a;
}

}  // namespace modcomp
