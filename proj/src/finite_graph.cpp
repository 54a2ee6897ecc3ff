#include "wqm/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace wqm {

long long fragment_count(int n, int ell) {
  if (ell < 0 || ell > n) return 0;
  long long r = 1;
  for (int i = 1; i <= ell; ++i) r = r * (n - ell + i) / i;
  return r;
}

FiniteGraph::FiniteGraph(int n) {
  if (n <= 0) throw InputError("graph needs at least one vertex");
  adj_.resize(static_cast<std::size_t>(n));
}

void FiniteGraph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices()) {
    throw InputError("vertex index " + std::to_string(v) + " out of range");
  }
}

void FiniteGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loops are not allowed in a simplicial graph");
  if (!dist_.empty()) throw InputError("graph is frozen after distance queries");
  auto& au = adj_[static_cast<std::size_t>(u)];
  if (std::binary_search(au.begin(), au.end(), v)) {
    throw InputError("multi-edges are not allowed in a simplicial graph");
  }
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
  ++num_edges_;
}

bool FiniteGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> FiniteGraph::bfs_distances(int src) const {
  check_vertex(src);
  std::vector<int> dist(static_cast<std::size_t>(num_vertices()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

const std::vector<std::vector<int>>& FiniteGraph::distance_matrix() const {
  if (dist_.empty()) {
    dist_.reserve(static_cast<std::size_t>(num_vertices()));
    for (int v = 0; v < num_vertices(); ++v) dist_.push_back(bfs_distances(v));
  }
  return dist_;
}

int FiniteGraph::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const int d = distance_matrix()[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  if (d < 0) throw InputError("vertices are disconnected");
  return d;
}

bool FiniteGraph::connected() const {
  const auto d = bfs_distances(0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<Path<int>> FiniteGraph::all_geodesics(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  const auto& dx = distance_matrix()[static_cast<std::size_t>(x)];
  if (dx[static_cast<std::size_t>(y)] < 0) throw InputError("vertices are disconnected");

  std::vector<Path<int>> out;
  std::vector<int> stack{x};
  // DFS over the layered DAG; sorted neighbor lists give lexicographic order.
  std::function<void()> grow = [&]() {
    const int u = stack.back();
    if (u == y) {
      out.emplace_back(stack);
      return;
    }
    for (int w : neighbors(u)) {
      if (dx[static_cast<std::size_t>(w)] ==
              dx[static_cast<std::size_t>(u)] + 1 &&
          dx[static_cast<std::size_t>(y)] - dx[static_cast<std::size_t>(w)] ==
              distance(w, y)) {
        stack.push_back(w);
        grow();
        stack.pop_back();
      }
    }
  };
  grow();
  return out;
}

std::vector<int> FiniteGraph::median_candidates(int x, int y, int z) const {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  const auto& D = distance_matrix();
  const auto& dx = D[static_cast<std::size_t>(x)];
  const auto& dy = D[static_cast<std::size_t>(y)];
  const auto& dz = D[static_cast<std::size_t>(z)];
  std::vector<int> out;
  for (int m = 0; m < num_vertices(); ++m) {
    const auto mi = static_cast<std::size_t>(m);
    if (dx[static_cast<std::size_t>(y)] == dx[mi] + dy[mi] &&
        dx[static_cast<std::size_t>(z)] == dx[mi] + dz[mi] &&
        dy[static_cast<std::size_t>(z)] == dy[mi] + dz[mi]) {
      out.push_back(m);
    }
  }
  return out;
}

int FiniteGraph::median(int x, int y, int z) const {
  const auto c = median_candidates(x, y, z);
  if (c.size() != 1) {
    throw InputError("no unique median for triple (" + std::to_string(x) + "," +
                     std::to_string(y) + "," + std::to_string(z) + "): " +
                     std::to_string(c.size()) + " candidates");
  }
  return c.front();
}

bool FiniteGraph::is_median_graph(std::string* witness) const {
  if (!connected()) {
    if (witness) *witness = "graph is disconnected";
    return false;
  }
  const int n = num_vertices();
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      for (int z = y; z < n; ++z) {
        if (median_candidates(x, y, z).size() != 1) {
          if (witness) {
            *witness = "triple (" + std::to_string(x) + "," + std::to_string(y) +
                       "," + std::to_string(z) + ") has no unique median";
          }
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace wqm
