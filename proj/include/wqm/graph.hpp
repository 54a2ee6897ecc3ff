#ifndef WQM_GRAPH_HPP
#define WQM_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wqm/errors.hpp"

namespace wqm {

/**
 * An edge with a direction of travel: `head` is where it starts, `tail`
 * where it ends. Reversal swaps the two.
 */
template <class V>
struct OrientedEdge {
  V head;
  V tail;

  OrientedEdge reversed() const { return {tail, head}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// An ordered tuple of oriented edges (the arguments of weight maps).
template <class V>
using EdgeTuple = std::vector<OrientedEdge<V>>;

// Reverses both the order of a tuple and each edge in it.
template <class V>
EdgeTuple<V> reversed_tuple(const EdgeTuple<V>& a) {
  EdgeTuple<V> out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(it->reversed());
  return out;
}

/**
 * A combinatorial path: a sequence of distinct, consecutively adjacent
 * vertices. Adjacency is the caller's responsibility for lazily generated
 * graphs; `checked` validates distinctness and (when a predicate is given)
 * adjacency.
 */
template <class V>
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<V> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw InputError("a path needs at least one vertex");
  }

  static Path single(V v) { return Path(std::vector<V>{std::move(v)}); }

  static Path checked(std::vector<V> verts,
                      const std::function<bool(const V&, const V&)>& adjacent = {}) {
    Path p(std::move(verts));
    for (std::size_t i = 0; i < p.verts_.size(); ++i) {
      for (std::size_t j = i + 1; j < p.verts_.size(); ++j) {
        if (p.verts_[i] == p.verts_[j]) throw InputError("path vertices must be distinct");
      }
    }
    if (adjacent) {
      for (int i = 0; i < p.length(); ++i) {
        if (!adjacent(p.verts_[i], p.verts_[i + 1])) {
          throw InputError("consecutive path vertices must be adjacent");
        }
      }
    }
    return p;
  }

  int length() const { return static_cast<int>(verts_.size()) - 1; }
  const V& vertex(int i) const { return verts_.at(static_cast<std::size_t>(i)); }
  const V& first() const { return verts_.front(); }
  const V& last() const { return verts_.back(); }
  const std::vector<V>& vertices() const { return verts_; }

  OrientedEdge<V> edge(int i) const {
    return {verts_.at(static_cast<std::size_t>(i)),
            verts_.at(static_cast<std::size_t>(i) + 1)};
  }

  Path reversed() const {
    std::vector<V> v(verts_.rbegin(), verts_.rend());
    return Path(std::move(v));
  }

  // Vertices i..j inclusive.
  Path subpath(int i, int j) const {
    if (i < 0 || j < i || j > length()) throw InputError("bad subpath range");
    return Path(std::vector<V>(verts_.begin() + i, verts_.begin() + j + 1));
  }

  // Joins two paths sharing exactly the junction vertex.
  Path concat(const Path& other) const {
    if (!(last() == other.first())) throw InputError("paths do not share a junction");
    std::vector<V> v = verts_;
    v.insert(v.end(), other.verts_.begin() + 1, other.verts_.end());
    return Path(std::move(v));
  }

  std::optional<int> index_of(const V& v) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (verts_[i] == v) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.verts_ <=> b.verts_; }

 private:
  std::vector<V> verts_;
};

/**
 * A choice of edge positions along a parent path, in path order, with the
 * selected edges materialized. `head()` is the start vertex of the first
 * selected edge, `tail()` the end vertex of the last one.
 */
template <class V>
struct Fragment {
  std::vector<int> indices;  // strictly increasing edge positions
  EdgeTuple<V> edges;

  const V& head() const { return edges.front().head; }
  const V& tail() const { return edges.back().tail; }

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

template <class V>
Fragment<V> make_fragment(const Path<V>& p, std::vector<int> indices) {
  Fragment<V> f;
  f.edges.reserve(indices.size());
  for (int i : indices) f.edges.push_back(p.edge(i));
  f.indices = std::move(indices);
  return f;
}

/**
 * All size-`ell` choices of edge positions of `p`, in lexicographic order of
 * the index tuples. Empty when ell exceeds the path length.
 */
template <class V>
std::vector<Fragment<V>> fragments(const Path<V>& p, int ell) {
  if (ell < 1) throw InputError("fragment size must be positive");
  const int n = p.length();
  std::vector<Fragment<V>> out;
  if (ell > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(make_fragment(p, idx));
    int k = ell - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - ell + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < ell; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

// Number of fragments of a length-n path: binomial(n, ell).
long long fragment_count(int n, int ell);

/**
 * Whether vertex m lies strictly between the head and the tail of fragment
 * `a` along its parent path. Throws InputError when m is not on the path.
 */
template <class V>
bool contained_in(const Path<V>& p, const V& m, const Fragment<V>& a) {
  const auto pos = p.index_of(m);
  if (!pos) throw InputError("vertex is not on the parent path");
  const int head_pos = a.indices.front();
  const int tail_pos = a.indices.back() + 1;
  return head_pos < *pos && *pos < tail_pos;
}

/**
 * A group action on a graph, presented by its generators as vertex maps.
 * Each generator must act as a graph automorphism; `automorphism_witness`
 * spot-checks that on the supplied edges.
 */
template <class V>
struct GraphAction {
  struct Generator {
    std::string name;
    std::function<V(const V&)> map;
  };
  std::vector<Generator> generators;

  V apply(std::size_t g, const V& v) const { return generators.at(g).map(v); }
};

// Returns the name of a generator that fails to map some sample edge to an
// edge, or an empty string if all checks pass.
template <class V, class Adjacent>
std::string automorphism_witness(const GraphAction<V>& action,
                                 const std::vector<OrientedEdge<V>>& sample_edges,
                                 Adjacent&& adjacent) {
  for (const auto& gen : action.generators) {
    for (const auto& e : sample_edges) {
      if (!adjacent(gen.map(e.head), gen.map(e.tail))) return gen.name;
    }
  }
  return {};
}

/**
 * A finite undirected simplicial graph on vertices 0..n-1 with sorted
 * adjacency lists, BFS metric, geodesic enumeration and median computation.
 * Immutable after `freeze` (adding edges after distance queries is an error).
 */
class FiniteGraph {
 public:
  explicit FiniteGraph(int n);

  void add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  // All unordered edges {u,v} with u<v, lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> bfs_distances(int src) const;
  const std::vector<std::vector<int>>& distance_matrix() const;
  int distance(int u, int v) const;
  bool connected() const;

  // Every shortest path from x to y, ordered lexicographically by vertex
  // sequence. Throws InputError when x and y are disconnected.
  std::vector<Path<int>> all_geodesics(int x, int y) const;

  // All vertices m satisfying the three between-ness equations for (x,y,z).
  std::vector<int> median_candidates(int x, int y, int z) const;

  // The unique median vertex; throws InputError naming the triple when it
  // does not exist or is not unique.
  int median(int x, int y, int z) const;

  bool is_median_graph(std::string* witness = nullptr) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
  mutable std::vector<std::vector<int>> dist_;  // lazily filled all-pairs table
};

}  // namespace wqm

#endif  // WQM_GRAPH_HPP
