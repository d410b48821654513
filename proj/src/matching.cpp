#include "eulerfam/matching.hpp"

#include <algorithm>
#include <queue>

namespace eulerfam {

namespace {

/// Edmonds' algorithm with implicit blossom contraction via a `base` array:
/// nodes of a contracted blossom all point at the blossom's base vertex.
/// One BFS from an exposed root either finds an augmenting path (returning
/// its endpoint) or proves none exists from that root.
class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adj)
      : g_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1) {}

  std::vector<int> run() {
    // Greedy seed matching: cuts the number of augmentation phases and is
    // deterministic (ascending node id, adjacency order).
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int to : g_[v]) {
        if (mate_[to] == -1) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1) augment_from(v);
    return mate_;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::vector<bool> on_path(n_, false);
    int cur = a;
    while (true) {
      cur = base_[cur];
      on_path[cur] = true;
      if (mate_[cur] == -1) break;
      cur = parent_[mate_[cur]];
    }
    cur = b;
    while (true) {
      cur = base_[cur];
      if (on_path[cur]) return cur;
      cur = parent_[mate_[cur]];
    }
  }

  void mark_path(int v, int stop_base, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != stop_base) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void augment_from(int root) {
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::vector<bool> used(n_, false);
    used[root] = true;
    std::queue<int> q;
    q.push(root);

    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Odd cycle through two even-level nodes: contract the blossom.
          int cur_base = lowest_common_base(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) {
            // Exposed node reached: flip the alternating path.
            int u = to;
            while (u != -1) {
              int pv = parent_[u];
              int next = mate_[pv];
              mate_[u] = pv;
              mate_[pv] = u;
              u = next;
            }
            return;
          }
          used[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
  }

  const std::vector<std::vector<int>>& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

}  // namespace

std::vector<int> max_matching(const std::vector<std::vector<int>>& adj) {
  return Blossom(adj).run();
}

int matching_size(const std::vector<int>& mate) {
  int matched = 0;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != -1) ++matched;
  return matched / 2;
}

}  // namespace eulerfam
