// Copyright 2026 The exmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exmatch/matching.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

#include "exmatch/errors.hpp"

namespace exmatch {

// ---------------------------------------------------------------------------
// BlossomMatcher
//
// Edmonds' primal-dual weighted matching with the bookkeeping layout of
// Galil's O(n^3) formulation. Vertices are 0..n-1, non-trivial blossoms
// n..2n-1. Endpoint p of edge k is endpoint_[p], with p = 2k or 2k+1; the
// edge is reached from endpoint_[p ^ 1]. Labels: 0 free, 1 S, 2 T, 5 marked
// during scan_blossom. Slacks are computed with doubled edge weights so that
// all dual variables stay integral.

long long BlossomMatcher::slack(int k) const {
  const auto& e = edges_[k];
  return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
}

void BlossomMatcher::blossom_leaves(int b, std::vector<int>& out) const {
  if (b < nvertex_) {
    out.push_back(b);
    return;
  }
  for (int t : blossomchilds_[b]) blossom_leaves(t, out);
}

void BlossomMatcher::assign_label(int w, int t, int p) {
  const int b = inblossom_[w];
  assert(label_[w] == 0 && label_[b] == 0);
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    blossom_leaves(b, queue_);
  } else if (t == 2) {
    const int base = blossombase_[b];
    assert(mate_[base] >= 0);
    assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

int BlossomMatcher::scan_blossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = blossombase_[b];
      break;
    }
    assert(label_[b] == 1);
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      assert(label_[b] == 2);
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void BlossomMatcher::add_blossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unusedblossoms_.back();
  unusedblossoms_.pop_back();
  blossombase_[b] = base;
  blossomparent_[b] = -1;
  blossomparent_[bb] = b;
  auto& path = blossomchilds_[b];
  auto& endps = blossomendps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    blossomparent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  assert(label_[bb] == 1);
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dualvar_[b] = 0;
  std::vector<int> leaves;
  blossom_leaves(b, leaves);
  for (int x : leaves) {
    if (label_[inblossom_[x]] == 2) queue_.push_back(x);
    inblossom_[x] = b;
  }
  std::vector<int> bestedgeto(2 * nvertex_, -1);
  for (int child : path) {
    std::vector<int> candidates;
    if (!has_bestedges_[child]) {
      std::vector<int> child_leaves;
      blossom_leaves(child, child_leaves);
      for (int x : child_leaves) {
        for (int p : neighbend_[x]) candidates.push_back(p / 2);
      }
    } else {
      candidates = blossombestedges_[child];
    }
    for (int kk : candidates) {
      int i = edges_[kk].u;
      int j = edges_[kk].v;
      if (inblossom_[j] == b) std::swap(i, j);
      const int bj = inblossom_[j];
      if (bj != b && label_[bj] == 1 &&
          (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
        bestedgeto[bj] = kk;
      }
    }
    blossombestedges_[child].clear();
    has_bestedges_[child] = 0;
    bestedge_[child] = -1;
  }
  auto& best = blossombestedges_[b];
  best.clear();
  for (int kk : bestedgeto) {
    if (kk != -1) best.push_back(kk);
  }
  has_bestedges_[b] = 1;
  bestedge_[b] = -1;
  for (int kk : best) {
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }
}

void BlossomMatcher::expand_blossom(int b, bool endstage) {
  // Copy: recursive expansion and relabeling must not see later edits.
  const std::vector<int> childs = blossomchilds_[b];
  for (int s : childs) {
    blossomparent_[s] = -1;
    if (s < nvertex_) {
      inblossom_[s] = s;
    } else if (endstage && dualvar_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      std::vector<int> leaves;
      blossom_leaves(s, leaves);
      for (int x : leaves) inblossom_[x] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const auto& endps = blossomendps_[b];
    const int len = static_cast<int>(childs.size());
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto at = [len](int idx) { return ((idx % len) + len) % len; };
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[endps[at(j - endptrick)] ^ endptrick ^ 1]] = 0;
      assign_label(endpoint_[p ^ 1], 2, p);
      allowedge_[endps[at(j - endptrick)] / 2] = 1;
      j += jstep;
      p = endps[at(j - endptrick)] ^ endptrick;
      allowedge_[p / 2] = 1;
      j += jstep;
    }
    int bv = childs[at(j)];
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (childs[at(j)] != entrychild) {
      bv = childs[at(j)];
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      std::vector<int> leaves;
      blossom_leaves(bv, leaves);
      int found = -1;
      for (int x : leaves) {
        if (label_[x] != 0) {
          found = x;
          break;
        }
      }
      if (found != -1) {
        assert(label_[found] == 2);
        assert(inblossom_[found] == bv);
        label_[found] = 0;
        label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  blossomchilds_[b].clear();
  blossomendps_[b].clear();
  blossombase_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = 0;
  bestedge_[b] = -1;
  unusedblossoms_.push_back(b);
}

void BlossomMatcher::augment_blossom(int b, int v) {
  int t = v;
  while (blossomparent_[t] != b) t = blossomparent_[t];
  if (t >= nvertex_) augment_blossom(t, v);
  auto& childs = blossomchilds_[b];
  auto& endps = blossomendps_[b];
  const int len = static_cast<int>(childs.size());
  const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  auto at = [len](int idx) { return ((idx % len) + len) % len; };
  while (j != 0) {
    j += jstep;
    t = childs[at(j)];
    const int p = endps[at(j - endptrick)] ^ endptrick;
    if (t >= nvertex_) augment_blossom(t, endpoint_[p]);
    j += jstep;
    t = childs[at(j)];
    if (t >= nvertex_) augment_blossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs.begin(), childs.begin() + i, childs.end());
  std::rotate(endps.begin(), endps.begin() + i, endps.end());
  blossombase_[b] = blossombase_[childs[0]];
  assert(blossombase_[b] == v);
}

void BlossomMatcher::augment_matching(int k) {
  const int v = edges_[k].u;
  const int w = edges_[k].v;
  const std::pair<int, int> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
  for (auto [s, p] : starts) {
    while (true) {
      const int bs = inblossom_[s];
      assert(label_[bs] == 1);
      if (bs >= nvertex_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      assert(label_[bt] == 2);
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      assert(blossombase_[bt] == t);
      if (bt >= nvertex_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<Vertex> BlossomMatcher::solve(int vertex_count, std::span<const WeightedEdge> edges,
                                          bool max_cardinality) {
  nvertex_ = vertex_count;
  nedge_ = static_cast<int>(edges.size());
  edges_.assign(edges.begin(), edges.end());
  if (nedge_ == 0 || nvertex_ == 0) return std::vector<Vertex>(vertex_count, -1);

  long long maxweight = 0;
  for (const auto& e : edges_) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= nvertex_ || e.v >= nvertex_) {
      throw InputError("blossom matcher: invalid edge");
    }
    maxweight = std::max(maxweight, e.weight);
  }
  const int n = nvertex_;
  endpoint_.resize(2 * nedge_);
  for (int p = 0; p < 2 * nedge_; ++p) {
    endpoint_[p] = (p % 2 == 0) ? edges_[p / 2].u : edges_[p / 2].v;
  }
  neighbend_.assign(n, {});
  for (int k = 0; k < nedge_; ++k) {
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(n, -1);
  label_.assign(2 * n, 0);
  labelend_.assign(2 * n, -1);
  inblossom_.resize(n);
  for (int i = 0; i < n; ++i) inblossom_[i] = i;
  blossomparent_.assign(2 * n, -1);
  blossomchilds_.assign(2 * n, {});
  blossombase_.assign(2 * n, -1);
  for (int i = 0; i < n; ++i) blossombase_[i] = i;
  blossomendps_.assign(2 * n, {});
  bestedge_.assign(2 * n, -1);
  blossombestedges_.assign(2 * n, {});
  has_bestedges_.assign(2 * n, 0);
  unusedblossoms_.clear();
  for (int i = n; i < 2 * n; ++i) unusedblossoms_.push_back(i);
  dualvar_.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) dualvar_[i] = maxweight;
  allowedge_.assign(nedge_, 0);
  queue_.clear();

  for (int stage = 0; stage < n; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n; b < 2 * n; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = 0;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), 0);
    queue_.clear();
    for (int v = 0; v < n; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        assert(label_[inblossom_[v]] == 1);
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          long long kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = 1;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              assert(label_[inblossom_[w]] == 2);
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      long long delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality) {
        deltatype = 1;
        delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n);
      }
      for (int v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const long long d = slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const long long ks = slack(bestedge_[b]);
          assert(ks % 2 == 0);
          const long long d = ks / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n; b < 2 * n; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dualvar_[b] < delta)) {
          delta = dualvar_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        // No further improvement possible; max-cardinality optimum reached.
        deltatype = 1;
        delta = std::max<long long>(
            0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n));
      }
      for (int v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dualvar_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dualvar_[v] += delta;
        }
      }
      for (int b = n; b < 2 * n; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == 1) {
            dualvar_[b] += delta;
          } else if (label_[b] == 2) {
            dualvar_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = 1;
        int i = edges_[deltaedge].u;
        int j = edges_[deltaedge].v;
        if (label_[inblossom_[i]] == 0) std::swap(i, j);
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = 1;
        const int i = edges_[deltaedge].u;
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n; b < 2 * n; ++b) {
      if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
          dualvar_[b] == 0) {
        expand_blossom(b, true);
      }
    }
  }

  std::vector<Vertex> out(n, -1);
  for (int v = 0; v < n; ++v) {
    if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
  }
  return out;
}

// ---------------------------------------------------------------------------
// HungarianMatcher (shortest augmenting paths with potentials)

std::optional<std::vector<Vertex>> HungarianMatcher::solve_min_cost(
    int vertex_count, std::span<const Vertex> left, std::span<const Vertex> right,
    std::span<const WeightedEdge> edges) {
  const int m = static_cast<int>(left.size());
  if (m != static_cast<int>(right.size())) return std::nullopt;
  std::vector<Vertex> mate(vertex_count, -1);
  if (m == 0) return mate;

  std::vector<int> left_index(vertex_count, -1);
  std::vector<int> right_index(vertex_count, -1);
  for (int i = 0; i < m; ++i) left_index[left[i]] = i;
  for (int j = 0; j < m; ++j) right_index[right[j]] = j;

  long long max_abs = 0;
  for (const auto& e : edges) max_abs = std::max(max_abs, std::abs(e.weight));
  // Any assignment using a missing pair costs more than every real one.
  const long long missing = (max_abs + 1) * (2LL * m + 2);

  const int side = m + 1;
  cost_.assign(static_cast<std::size_t>(side) * side, missing);
  real_.assign(static_cast<std::size_t>(side) * side, 0);
  auto cell = [side](int i, int j) { return static_cast<std::size_t>(i) * side + j; };
  for (const auto& e : edges) {
    int a = left_index[e.u] >= 0 ? e.u : e.v;
    int b = a == e.u ? e.v : e.u;
    const int i = left_index[a];
    const int j = right_index[b];
    if (i < 0 || j < 0) throw InputError("hungarian matcher: edge does not cross the sides");
    cost_[cell(i + 1, j + 1)] = e.weight;
    real_[cell(i + 1, j + 1)] = 1;
  }

  const long long inf = std::numeric_limits<long long>::max() / 4;
  u_.assign(side, 0);
  v_.assign(side, 0);
  p_.assign(side, 0);
  way_.assign(side, 0);
  for (int i = 1; i <= m; ++i) {
    p_[0] = i;
    int j0 = 0;
    minv_.assign(side, inf);
    used_.assign(side, 0);
    do {
      used_[j0] = 1;
      const int i0 = p_[j0];
      long long delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used_[j]) continue;
        const long long cur = cost_[cell(i0, j)] - u_[i0] - v_[j];
        if (cur < minv_[j]) {
          minv_[j] = cur;
          way_[j] = j0;
        }
        if (minv_[j] < delta) {
          delta = minv_[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used_[j]) {
          u_[p_[j]] += delta;
          v_[j] -= delta;
        } else {
          minv_[j] -= delta;
        }
      }
      j0 = j1;
    } while (p_[j0] != 0);
    do {
      const int j1 = way_[j0];
      p_[j0] = p_[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (int j = 1; j <= m; ++j) {
    const int i = p_[j];
    if (!real_[cell(i, j)]) return std::nullopt;
    mate[left[i - 1]] = right[j - 1];
    mate[right[j - 1]] = left[i - 1];
  }
  return mate;
}

// ---------------------------------------------------------------------------
// CardinalityMatcher

int CardinalityMatcher::lca(int a, int b) {
  std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
  while (true) {
    a = base_[a];
    lca_mark_[a] = 1;
    if (match_[a] == -1) break;
    a = parent_[match_[a]];
  }
  while (true) {
    b = base_[b];
    if (lca_mark_[b]) return b;
    b = parent_[match_[b]];
  }
}

void CardinalityMatcher::mark_path(int v, int b, int child) {
  while (base_[v] != b) {
    blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
    parent_[v] = child;
    child = match_[v];
    v = parent_[match_[v]];
  }
}

int CardinalityMatcher::find_path(int root) {
  std::fill(used_.begin(), used_.end(), 0);
  std::fill(parent_.begin(), parent_.end(), -1);
  for (int i = 0; i < n_; ++i) base_[i] = i;
  used_[root] = 1;
  queue_.clear();
  queue_.push_back(root);
  for (std::size_t qh = 0; qh < queue_.size(); ++qh) {
    const int v = queue_[qh];
    for (int to : adj_[v]) {
      if (base_[v] == base_[to] || match_[v] == to) continue;
      if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
        const int curbase = lca(v, to);
        std::fill(blossom_.begin(), blossom_.end(), 0);
        mark_path(v, curbase, to);
        mark_path(to, curbase, v);
        for (int i = 0; i < n_; ++i) {
          if (blossom_[base_[i]]) {
            base_[i] = curbase;
            if (!used_[i]) {
              used_[i] = 1;
              queue_.push_back(i);
            }
          }
        }
      } else if (parent_[to] == -1) {
        parent_[to] = v;
        if (match_[to] == -1) return to;
        used_[match_[to]] = 1;
        queue_.push_back(match_[to]);
      }
    }
  }
  return -1;
}

std::vector<Vertex> CardinalityMatcher::solve(int vertex_count, std::span<const Edge> edges) {
  n_ = vertex_count;
  adj_.assign(n_, {});
  for (const Edge& e : edges) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  match_.assign(n_, -1);
  parent_.assign(n_, -1);
  base_.assign(n_, 0);
  used_.assign(n_, 0);
  blossom_.assign(n_, 0);
  lca_mark_.assign(n_, 0);
  // Greedy start, then augment from every remaining exposed vertex.
  for (const Edge& e : edges) {
    if (match_[e.u] == -1 && match_[e.v] == -1) {
      match_[e.u] = e.v;
      match_[e.v] = e.u;
    }
  }
  for (int v = 0; v < n_; ++v) {
    if (match_[v] != -1) continue;
    int w = find_path(v);
    while (w != -1) {
      const int pv = parent_[w];
      const int ppv = match_[pv];
      match_[w] = pv;
      match_[pv] = w;
      w = ppv;
    }
  }
  return match_;
}

bool CardinalityMatcher::perfect_matching(int vertex_count, std::span<const Edge> edges,
                                          std::vector<Edge>* out) {
  if (vertex_count % 2 != 0) return false;
  const auto mate = solve(vertex_count, edges);
  for (int v = 0; v < vertex_count; ++v) {
    if (mate[v] == -1) return false;
  }
  if (out) {
    out->clear();
    for (int v = 0; v < vertex_count; ++v) {
      if (v < mate[v]) out->emplace_back(v, mate[v]);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// ColoredGraph front ends

WeightAssignment red_weights(const ColoredGraph& g, int red_weight) {
  WeightAssignment w(g.edge_count(), 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    if (g.edge(id).color == Color::kRed) w[id] = red_weight;
  }
  return w;
}

long long matching_weight(const ColoredGraph& g, std::span<const int> weights,
                          const PerfectMatching& m) {
  long long total = 0;
  for (const Edge& e : m.edges()) total += weights[*g.find_edge(e.u, e.v)];
  return total;
}

namespace {

void check_weights(const ColoredGraph& g, std::span<const int> weights) {
  if (static_cast<int>(weights.size()) != g.edge_count()) {
    throw InputError("weight assignment must cover every edge");
  }
}

std::optional<PerfectMatching> from_mate(const ColoredGraph& g, const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mate[v] == -1) return std::nullopt;
    if (v < mate[v]) edges.emplace_back(v, mate[v]);
  }
  return PerfectMatching(g, std::move(edges));
}

}  // namespace

std::optional<PerfectMatching> max_weight_perfect_matching_general(const ColoredGraph& g,
                                                                   std::span<const int> weights) {
  check_weights(g, weights);
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return PerfectMatching(g, {});
  int min_w = 0;
  for (int w : weights) min_w = std::min(min_w, w);
  // Every perfect matching has n/2 edges, so a uniform shift keeps the
  // optimum and makes all weights positive.
  const long long shift = 1 - static_cast<long long>(min_w);
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id).edge;
    edges.push_back({e.u, e.v, weights[id] + shift});
  }
  BlossomMatcher engine;
  return from_mate(g, engine.solve(n, edges, /*max_cardinality=*/true));
}

std::optional<PerfectMatching> max_weight_perfect_matching_bipartite(
    const ColoredGraph& g, std::span<const int> weights) {
  check_weights(g, weights);
  if (!g.has_bipartition()) throw InputError("bipartite engine requires a bipartition");
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  const auto left = g.side_vertices(Side::kA);
  const auto right = g.side_vertices(Side::kB);
  if (left.size() != right.size()) return std::nullopt;
  std::vector<WeightedEdge> edges;
  edges.reserve(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id).edge;
    edges.push_back({e.u, e.v, -static_cast<long long>(weights[id])});
  }
  HungarianMatcher engine;
  const auto mate = engine.solve_min_cost(n, left, right, edges);
  if (!mate) return std::nullopt;
  return from_mate(g, *mate);
}

std::optional<PerfectMatching> max_weight_perfect_matching(const ColoredGraph& g,
                                                           std::span<const int> weights) {
  if (g.has_bipartition()) return max_weight_perfect_matching_bipartite(g, weights);
  return max_weight_perfect_matching_general(g, weights);
}

std::optional<PerfectMatching> min_red_pm(const ColoredGraph& g) {
  return max_weight_perfect_matching(g, red_weights(g, -1));
}

std::optional<PerfectMatching> max_red_pm(const ColoredGraph& g) {
  return max_weight_perfect_matching(g, red_weights(g, +1));
}

}  // namespace exmatch
