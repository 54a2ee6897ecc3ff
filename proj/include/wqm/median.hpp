#ifndef WQM_MEDIAN_HPP
#define WQM_MEDIAN_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqm/cayley_tree.hpp"
#include "wqm/cochain.hpp"
#include "wqm/coherent.hpp"
#include "wqm/graph.hpp"
#include "wqm/vanishing.hpp"
#include "wqm/weights.hpp"

namespace wqm {

/** Fixed-size vertex set over a finite graph, with the lattice operations
 * the halfspace machinery needs. */
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n);

  void set(int i);
  bool test(int i) const;
  int count() const;
  int universe_size() const { return n_; }

  VertexSet complemented() const;
  bool subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/**
 * A finite median graph together with its hyperplane/halfspace structure.
 * Halfspaces are numbered 2*h and 2*h+1 for hyperplane h; complementation
 * flips the last bit. Construction validates the median property.
 */
class MedianComplex {
 public:
  static MedianComplex build(FiniteGraph graph,
                             std::vector<std::string> vertex_names = {});

  const FiniteGraph& graph() const { return graph_; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::string vertex_name(int v) const;

  int num_hyperplanes() const { return static_cast<int>(hyperplanes_.size()); }
  int num_halfspaces() const { return 2 * num_hyperplanes(); }

  static int complement_id(int hs) { return hs ^ 1; }
  const VertexSet& members(int hs) const;
  bool member(int hs, int v) const { return members(hs).test(v); }

  // Representative edges of the hyperplane underlying a halfspace.
  const std::vector<std::pair<int, int>>& dual_edges(int hs) const;

  // The halfspace dual to the oriented edge (u,v) that contains v.
  int dual_halfspace(int u, int v) const;

  // Id lookup by member set; throws when no halfspace has that set.
  int find_halfspace(const VertexSet& set) const;

  bool subset(int h, int k) const { return members(k).subset_of(members(h)); }
  bool proper_subset(int h, int k) const {
    return subset(h, k) && !(members(h) == members(k));
  }
  // All four corner intersections nonempty.
  bool transverse(int h, int k) const;
  // h strictly contains k with no halfspace strictly between.
  bool tightly_nested(int h, int k) const;

  // Halfspaces containing y but not x; their number equals D(x,y).
  std::vector<int> interval_halfspaces(int x, int y) const;

 private:
  FiniteGraph graph_{1};
  std::vector<std::string> names_;
  struct Hyperplane {
    VertexSet side[2];
    std::vector<std::pair<int, int>> edges;
  };
  std::vector<Hyperplane> hyperplanes_;
  std::map<std::pair<int, int>, int> oriented_edge_to_halfspace_;
};

// A descending chain of tightly nested halfspaces, by id.
using HSegment = std::vector<int>;

// Reversal: complements in the opposite order.
HSegment reversed_segment(const HSegment& s);

// True when the ids form a proper tightly nested descending chain.
bool is_segment(const MedianComplex& cx, const HSegment& s);

// All chains of the given length, lexicographic in halfspace ids.
std::vector<HSegment> all_segments(const MedianComplex& cx, int ell);

// Chains whose halfspaces all separate y from x.
std::vector<HSegment> segments_in_interval(const MedianComplex& cx, int x, int y,
                                           int ell);

struct StaircaseReport {
  int length = 0;
  std::vector<int> chain_h;  // outer chain
  std::vector<int> chain_k;  // inner chain
  int cap = 0;
};

/**
 * Maximal length of a pair of proper chains (h_1 > ... > h_s),
 * (k_1 > ... > k_s) with h_i strictly containing k_i and h_i crossing k_j
 * for j < i, found by exhaustive search up to the cap.
 */
StaircaseReport staircase_length(const MedianComplex& cx, int cap = 8);

// Heads: vertices outside the first halfspace at an edge dual to it.
std::vector<int> segment_heads(const MedianComplex& cx, const HSegment& s);
// Tails: vertices inside the last halfspace at an edge dual to it.
std::vector<int> segment_tails(const MedianComplex& cx, const HSegment& s);

/**
 * Orbit data of a segment under the finite group generated by the action's
 * vertex permutations: the sign map is +1 on the orbit of s, -1 on the
 * orbit of its reverse, 0 elsewhere. When the two orbits meet, the induced
 * quasimorphism is identically zero and `zero_map` is set.
 */
struct OrbitSign {
  bool zero_map = false;
  std::vector<HSegment> orbit;          // of s, sorted
  std::vector<HSegment> orbit_reverse;  // of its reverse, sorted

  int sign(const HSegment& t) const;
};

OrbitSign segment_orbit_sign(const MedianComplex& cx, const HSegment& s,
                             const GraphAction<int>& action,
                             long long budget = 1'000'000);

// Signed count of orbit translates in the halfspace interval.
ActionQuasimorphism<int, long long> median_qm(
    const std::shared_ptr<const MedianComplex>& cx, const HSegment& s,
    const GraphAction<int>& action);

// Geodesic path family of the complex; the declared constant is 1.
PathFamily<int> median_geodesic_family(const std::shared_ptr<const MedianComplex>& cx,
                                       int qmp_constant = 1);

/**
 * The coherent pair for median weights: geodesics with fragment bijections
 * that match fragments by their halfspace labels when those form a chain
 * and pair the remainder in index order.
 */
CoherentPair<int> median_geodesic_pair(const std::shared_ptr<const MedianComplex>& cx,
                                       int ell, int qmp_constant = 1);

// Halfspace labels of a fragment's edges (in path orientation).
std::vector<int> fragment_labels(const MedianComplex& cx, const Fragment<int>& a);

/**
 * Exhaustive scan of the finiteness constant: the largest number of
 * supported fragments over one interior vertex of one geodesic, taken over
 * all vertex pairs and all geodesics of the complex.
 */
long long scan_finiteness_constant(const MedianComplex& cx, const OrbitSign& sign,
                                   int ell);

struct MedianWeight {
  WeightMap<int, long long> weight;
  CoherentPair<int> pair;
  OrbitSign sign;
  long long scanned_c = 0;
};

/**
 * The integer weight whose fragment sums equal the segment-counting
 * quasimorphism: a fragment scores the orbit sign of its halfspace labels
 * when those form a chain, and zero otherwise. The finiteness constant is
 * the exhaustive scan (at least 1).
 */
MedianWeight median_weight(const std::shared_ptr<const MedianComplex>& cx,
                           const HSegment& s, const GraphAction<int>& action);

struct NonTransverseResult {
  bool pass = true;
  std::string witness;
};

/**
 * Checks that the cochain is constant on the heads and on the tails of
 * every segment in the given set, for each sampled trailing tuple.
 */
NonTransverseResult nontransverse_check(const Cochain<int>& zeta,
                                        const MedianComplex& cx,
                                        const std::vector<HSegment>& segments,
                                        const std::vector<std::vector<int>>& trailing,
                                        double tolerance = 1e-12);

struct ImplicationResult {
  NonTransverseResult nontransverse;
  StabilityResult<int> stability;

  // The asserted implication: head/tail constancy forces stability.
  bool holds() const { return !nontransverse.pass || stability.stable; }
};

/**
 * Asserts (never assumes) that a cochain constant on the heads and tails of
 * the orbit translates is stable across the fragment bijections: runs both
 * checks on the same samples and reports them side by side.
 */
ImplicationResult nontransverse_implies_stable(
    const Cochain<int>& zeta, const MedianComplex& cx, const MedianWeight& mw,
    const std::vector<std::pair<int, int>>& probe_pairs,
    const std::vector<std::vector<int>>& trailing);

/**
 * Counting quasimorphism of a directed edge run on the Cayley tree of the
 * free group: translates of the run are canonicalized by the word their
 * labels spell, so the signed count along a geodesic matches the
 * sliding-window count of the pattern.
 */
ActionQuasimorphism<ReducedWord, long long> tree_median_qm(const ReducedWord& omega);

}  // namespace wqm

#endif  // WQM_MEDIAN_HPP
