#include <algorithm>
#include <set>

#include "udk/faces.h"

namespace udk {

namespace {

// Exact maximum independent set of one conflict-graph component.
class IndependentSetSearch {
 public:
  IndependentSetSearch(const std::vector<std::vector<int>>& adj, long budget) : adj_(adj), budget_(budget) {}

  std::vector<int> solve() {
    State s;
    const int k = static_cast<int>(adj_.size());
    s.alive.assign(k, 1);
    s.deg.resize(k);
    s.remaining = k;
    for (int v = 0; v < k; ++v) {
      s.deg[v] = static_cast<int>(adj_[v].size());
      if (s.deg[v] <= 1) s.low.insert(v);
    }
    recurse(std::move(s));
    return best_;
  }

 private:
  struct State {
    std::vector<char> alive;
    std::vector<int> deg;
    std::set<int> low;  // alive vertices of degree <= 1
    std::vector<int> chosen;
    int remaining = 0;
  };

  void remove(State& s, int v) {
    s.alive[v] = 0;
    --s.remaining;
    s.low.erase(v);
    for (int w : adj_[v]) {
      if (!s.alive[w]) continue;
      if (--s.deg[w] <= 1) s.low.insert(w);
    }
  }

  void take(State& s, int v) {
    s.chosen.push_back(v);
    remove(s, v);
    for (int w : adj_[v]) {
      if (s.alive[w]) remove(s, w);
    }
  }

  // Vertices minus a greedy matching bounds the independence number.
  int upper_bound(const State& s) const {
    std::vector<char> used(s.alive.size(), 0);
    int matched = 0;
    for (int v = 0; v < static_cast<int>(s.alive.size()); ++v) {
      if (!s.alive[v] || used[v]) continue;
      for (int w : adj_[v]) {
        if (s.alive[w] && !used[w]) {
          used[v] = used[w] = 1;
          ++matched;
          break;
        }
      }
    }
    return static_cast<int>(s.chosen.size()) + s.remaining - matched;
  }

  void recurse(State s) {
    if (++nodes_ > budget_) throw SizeLimitError("plane_subgraph: exact search exceeded its node budget");
    // Taking a vertex of degree at most one is always safe.
    while (!s.low.empty()) take(s, *s.low.begin());
    if (s.remaining == 0) {
      if (s.chosen.size() > best_.size()) best_ = s.chosen;
      return;
    }
    if (upper_bound(s) <= static_cast<int>(best_.size())) return;
    int pick = -1;
    for (int v = 0; v < static_cast<int>(s.alive.size()); ++v) {
      if (s.alive[v] && (pick == -1 || s.deg[v] > s.deg[pick])) pick = v;
    }
    State without = s;
    take(s, pick);
    recurse(std::move(s));
    remove(without, pick);
    recurse(std::move(without));
  }

  const std::vector<std::vector<int>>& adj_;
  long budget_;
  long nodes_ = 0;
  std::vector<int> best_;
};

std::vector<int> greedy_independent(const Drawing& d, const CrossingReport& x) {
  std::vector<std::vector<int>> conflicts(d.edges.size());
  for (const auto& c : x.crossings) {
    conflicts[c.e1].push_back(c.e2);
    conflicts[c.e2].push_back(c.e1);
  }
  std::vector<bool> taken(d.edges.size(), false);
  std::vector<int> e0;
  for (int e = 0; e < d.e(); ++e) {
    bool ok = std::none_of(conflicts[e].begin(), conflicts[e].end(), [&](int f) { return taken[f]; });
    if (ok) {
      taken[e] = true;
      e0.push_back(e);
    }
  }
  return e0;
}

std::vector<int> exact_independent(const Drawing& d, const CrossingReport& x, const SplitOptions& opt) {
  std::vector<std::vector<int>> conflicts(d.edges.size());
  for (const auto& c : x.crossings) {
    conflicts[c.e1].push_back(c.e2);
    conflicts[c.e2].push_back(c.e1);
  }
  int crossed = 0;
  for (const auto& c : conflicts) crossed += !c.empty();
  if (crossed > opt.size_limit) {
    throw SizeLimitError("plane_subgraph: " + std::to_string(crossed) + " crossed edges exceed the exact limit of " +
                         std::to_string(opt.size_limit) + "; use greedy mode");
  }
  std::vector<int> e0;
  std::vector<int> local(d.edges.size(), -1);
  for (int start = 0; start < d.e(); ++start) {
    if (local[start] != -1) continue;
    if (conflicts[start].empty()) {
      local[start] = 0;
      e0.push_back(start);
      continue;
    }
    // Collect the component, numbering its members in ascending edge order.
    std::vector<int> members{start};
    local[start] = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int f : conflicts[members[i]]) {
        if (local[f] == -1) {
          local[f] = 0;
          members.push_back(f);
        }
      }
    }
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int f : conflicts[members[i]]) adj[i].push_back(local[f]);
      std::sort(adj[i].begin(), adj[i].end());
    }
    IndependentSetSearch search(adj, opt.node_budget);
    for (int v : search.solve()) e0.push_back(members[v]);
  }
  std::sort(e0.begin(), e0.end());
  return e0;
}

}  // namespace

PlaneSplit make_split(const Drawing& d, std::vector<int> e0) {
  std::sort(e0.begin(), e0.end());
  e0.erase(std::unique(e0.begin(), e0.end()), e0.end());
  PlaneSplit s;
  s.in_e0.assign(d.edges.size(), false);
  for (int e : e0) {
    if (e < 0 || e >= d.e()) throw PreconditionError("make_split: edge index out of range");
    s.in_e0[e] = true;
  }
  for (const auto& c : crossing_report(d).crossings) {
    if (s.in_e0[c.e1] && s.in_e0[c.e2]) {
      throw PreconditionError("make_split: edges " + std::to_string(c.e1) + " and " + std::to_string(c.e2) +
                              " of E0 cross");
    }
  }
  for (int e = 0; e < d.e(); ++e) (s.in_e0[e] ? s.e0 : s.e1).push_back(e);
  return s;
}

PlaneSplit plane_subgraph(const Drawing& d, const SplitOptions& opt) {
  require_valid(d, "plane_subgraph");
  CrossingReport x = crossing_report(d);
  std::vector<int> e0 = opt.mode == SplitMode::exact ? exact_independent(d, x, opt) : greedy_independent(d, x);
  PlaneSplit s = make_split(d, std::move(e0));
  return opt.repair ? flip_repair(d, std::move(s)) : s;
}

Drawing matchstick_reduction(const Drawing& d) {
  CrossingReport x = crossing_report(d);
  std::vector<bool> removed(d.edges.size(), false);
  for (const auto& c : x.crossings) {
    if (!removed[c.e1] && !removed[c.e2]) removed[c.e1] = true;
  }
  Drawing out;
  out.vertices = d.vertices;
  out.meta = d.meta;
  out.meta.erase("dashed");
  std::vector<int> new_index(d.edges.size(), -1);
  for (int e = 0; e < d.e(); ++e) {
    if (removed[e]) continue;
    new_index[e] = out.e();
    out.edges.push_back(d.edges[e]);
  }
  std::vector<int> dashed;
  for (int e : dashed_edges(d)) {
    if (e >= 0 && e < d.e() && new_index[e] >= 0) dashed.push_back(new_index[e]);
  }
  set_dashed_edges(out, std::move(dashed));
  return out;
}

}  // namespace udk
