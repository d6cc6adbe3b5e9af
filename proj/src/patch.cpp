#include "modcomp/patch.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace modcomp {

namespace {

struct BoundaryEdge {
  int type;
  int src;
  int dst;
  bool alive = true;
};

void check_pair(const GroupTable& G, const CrossoverSequence& seq1,
                const CrossoverSequence& seq2) {
  if (seq1.cut != seq2.cut)
    throw SpecError("patch requires both sequences over one cut system");
  for (int j = 0; j < 4; ++j)
    if (G.elem_order(seq1.source.c[j]) != G.elem_order(seq2.source.c[j]))
      throw SpecError("patch requires vectors of the same signature");
  for (int tau : seq1.taus)
    if (tau == GroupTable::identity)
      throw EdgeCollapseError(detect_degeneracies(G, seq1));
  for (int tau : seq2.taus)
    if (tau == GroupTable::identity)
      throw EdgeCollapseError(detect_degeneracies(G, seq2));
}

}  // namespace

PatchResult grow_patch(const GroupTable& G, const CrossoverSequence& seq1,
                       const CrossoverSequence& seq2,
                       const PatchOptions& options) {
  check_pair(G, seq1, seq2);
  const CutSystem& cs = cut_system(seq1.cut);
  const int n = G.order();
  const int two_k = static_cast<int>(seq1.taus.size());

  std::vector<int> inv_tau1(two_k);
  for (int p = 0; p < two_k; ++p) inv_tau1[p] = G.inv(seq1.taus[p]);

  PatchResult res;
  res.options = options;
  res.w.assign(n, -1);
  std::vector<char> in_h(n, 0), in_wh(n, 0);

  res.H.push_back(GroupTable::identity);
  res.w[GroupTable::identity] = GroupTable::identity;
  in_h[GroupTable::identity] = 1;
  in_wh[GroupTable::identity] = 1;

  std::vector<BoundaryEdge> list;
  std::vector<std::vector<int>> by_target(n);
  size_t head = 0;
  int alive = 0;
  auto append = [&](int type, int src, int dst) {
    by_target[dst].push_back(static_cast<int>(list.size()));
    list.push_back({type, src, dst, true});
    ++alive;
  };
  for (int p = 0; p < two_k; ++p)
    append(p, GroupTable::identity, G.mul(GroupTable::identity, seq1.taus[p]));

  std::mt19937_64 rng(options.seed);

  std::vector<std::pair<int, int>> incoming;  // (type, src)
  while (alive > 0) {
    // step 2: select a boundary edge
    size_t pick = list.size();
    if (options.selection == PatchOptions::Selection::CayleyDistance) {
      while (head < list.size() && !list[head].alive) ++head;
      pick = head;
    } else {
      std::uint64_t r = rng() % static_cast<std::uint64_t>(alive);
      for (size_t i = 0; i < list.size(); ++i)
        if (list[i].alive && r-- == 0) {
          pick = i;
          break;
        }
    }
    assert(pick < list.size() && list[pick].alive);
    const int entry_type = list[pick].type;
    const int h = list[pick].dst;
    assert(!in_h[h]);

    // step 3a: test value for the new polygon label
    const int wh = G.mul(res.w[list[pick].src], seq2.taus[entry_type]);

    // edges from H into h; these become interior if h is accepted
    incoming.clear();
    for (int p = 0; p < two_k; ++p) {
      int g = G.mul(h, inv_tau1[p]);
      if (in_h[g]) incoming.emplace_back(p, g);
    }

    bool ok = !in_wh[wh];  // step 3b: injectivity
    if (ok)                // step 3d: continuity on all would-be interior edges
      for (auto [p, g] : incoming)
        if (G.mul(res.w[g], seq2.taus[p]) != wh) {
          ok = false;
          break;
        }

    if (ok) {
      // step 3e: absorb h
      res.H.push_back(h);
      res.w[h] = wh;
      in_h[h] = 1;
      in_wh[wh] = 1;
      for (auto [p, g] : incoming) {
        res.interior1.push_back({p, g, h});
        res.interior1.push_back({cs.opposite[p], h, g});
        res.interior2.push_back({p, res.w[g], wh});
        res.interior2.push_back({cs.opposite[p], wh, res.w[g]});
      }
      for (int idx : by_target[h])
        if (list[idx].alive) {
          list[idx].alive = false;
          --alive;
        }
      // remaining boundary of the new polygon, circuit starting at the slot
      // opposite the entry edge
      const int start = cs.opposite[entry_type];
      for (int t = 0; t < two_k; ++t) {
        int q = (start + t) % two_k;
        int dst = G.mul(h, seq1.taus[q]);
        if (!in_h[dst]) append(q, h, dst);
      }
    } else {
      // step 3f: retire every boundary edge leading to h
      for (int idx : by_target[h])
        if (list[idx].alive) {
          list[idx].alive = false;
          --alive;
          res.bad1.push_back({list[idx].type, list[idx].src, list[idx].dst});
        }
    }
    assert(static_cast<int>(res.H.size()) <= n);
  }

  res.size = static_cast<int>(res.H.size());
  res.complete = res.size == n;
  assert(verify_patch(G, seq1, seq2, res));
  return res;
}

bool verify_patch(const GroupTable& G, const CrossoverSequence& seq1,
                  const CrossoverSequence& seq2, const PatchResult& result) {
  const int n = G.order();
  const int two_k = static_cast<int>(seq1.taus.size());
  if (seq1.cut != seq2.cut || seq2.taus.size() != seq1.taus.size())
    return false;
  if (result.H.empty()) return false;
  if (static_cast<int>(result.w.size()) != n) return false;

  std::vector<char> in_h(n, 0);
  for (int h : result.H) {
    if (h < 0 || h >= n || in_h[h]) return false;
    in_h[h] = 1;
  }
  if (!in_h[GroupTable::identity]) return false;
  if (result.w[GroupTable::identity] != GroupTable::identity) return false;

  // w defined exactly on H, injectively
  std::vector<char> image_hit(n, 0);
  for (int g = 0; g < n; ++g) {
    if (result.w[g] >= n) return false;
    if (in_h[g] != (result.w[g] >= 0)) return false;
    if (result.w[g] >= 0) {
      if (image_hit[result.w[g]]) return false;
      image_hit[result.w[g]] = 1;
    }
  }

  // continuity criterion on every interior edge, recomputed from scratch
  for (int g : result.H)
    for (int p = 0; p < two_k; ++p) {
      int h = G.mul(g, seq1.taus[p]);
      if (in_h[h] && result.w[h] != G.mul(result.w[g], seq2.taus[p]))
        return false;
    }

  // the interior-edge graph on H is connected
  std::vector<char> seen(n, 0);
  std::vector<int> stack{GroupTable::identity};
  seen[GroupTable::identity] = 1;
  int count = 1;
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (int p = 0; p < two_k; ++p) {
      int h = G.mul(g, seq1.taus[p]);
      if (in_h[h] && !seen[h]) {
        seen[h] = 1;
        ++count;
        stack.push_back(h);
      }
    }
  }
  if (count != static_cast<int>(result.H.size())) return false;

  if (static_cast<int>(result.H.size()) == n) {
    // complete patch: w must be an automorphism
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (result.w[G.mul(a, b)] != G.mul(result.w[a], result.w[b]))
          return false;
  }
  return true;
}

IsometryMatrix isometry_matrix(const GroupTable& G, const Signature& s,
                               CutId cut,
                               const std::vector<VectorClass>& classes,
                               const PatchOptions& options, int threads) {
  const size_t n = classes.size();
  IsometryMatrix m;
  m.cut = cut;
  m.options = options;
  m.flagged.assign(n, 0);
  m.sizes.assign(n, std::vector<std::optional<int>>(n));

  std::vector<CrossoverSequence> seqs;
  seqs.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    if (!is_generating_vector(G, s, classes[i].representative))
      throw SpecError("class representative is not a generating vector");
    seqs.push_back(crossover_sequence(G, cut, classes[i].representative));
    if (detect_degeneracies(G, seqs.back()).has_edge_collapse())
      m.flagged[i] = 1;
  }

  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!m.flagged[i] && !m.flagged[j]) cells.emplace_back(i, j);

  // A patch pair has one size however it is read; entry (i, j) grows the
  // patch on the column surface j with images on the row surface i.
  auto run_cell = [&](size_t i, size_t j) {
    PatchResult r = grow_patch(G, seqs[j], seqs[i], options);
    if (i == j && !r.complete)
      throw std::logic_error("self patch did not reach the whole group");
    m.sizes[i][j] = r.size;
  };

  int nthreads = std::max(1, threads);
  if (nthreads == 1 || cells.size() < 2) {
    for (auto [i, j] : cells) run_cell(i, j);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (size_t c = next++; c < cells.size(); c = next++)
          run_cell(cells[c].first, cells[c].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = cells.size();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return m;
}

}  // namespace modcomp
