#ifndef WQM_COMPLEXES_HPP
#define WQM_COMPLEXES_HPP

#include <memory>
#include <string>
#include <vector>

#include "wqm/coherent.hpp"
#include "wqm/graph.hpp"
#include "wqm/median.hpp"

namespace wqm {

// Elementary builders. Vertex layouts are row-major and documented per
// builder so reports are reproducible.
FiniteGraph make_path_graph(int edges);
FiniteGraph make_cycle_graph(int n);
FiniteGraph make_complete_graph(int n);
FiniteGraph make_grid_graph(int width, int height);
// Complete binary tree with the given depth (depth 0 is a single vertex).
FiniteGraph make_binary_tree(int depth);
// Lower-triangular portion of a (k+1)x(k+1) grid: vertices (i,j) with
// 0 <= j <= i <= k. Its square count steps up one column at a time, which
// realizes chains witnessing staircase length exactly k.
FiniteGraph make_staircase_graph(int k);

/**
 * A named finite instance: the validated complex, display names for its
 * vertices, and the group action it ships with (trivial unless the source
 * declares generators).
 */
struct ComplexInstance {
  std::string spec;
  std::shared_ptr<const MedianComplex> complex;
  GraphAction<int> action;
};

// Builds "path:N", "cycle:N", "tree:DEPTH", "grid:WxH", "staircase:K".
// Throws InputError for unknown specs and for instances that fail the
// median check (e.g. odd cycles).
ComplexInstance build_complex(const std::string& spec);

// The raw graph of a spec string, without the median validation.
FiniteGraph build_graph(const std::string& spec);

// Specs of the built-in median complexes used by sweeps.
const std::vector<std::string>& builtin_median_specs();

// Parses {"vertices": [...], "edges": [[u,v],...], "generators":
// [{"name":..., "permutation": {u:v,...}}]} and validates the permutations
// as graph automorphisms.
ComplexInstance load_graph_json(const std::string& json_text);
ComplexInstance load_graph_file(const std::string& path);

// Geodesic family on an arbitrary finite connected graph (no median
// assumption); used both for median instances and for counterexamples.
PathFamily<int> finite_geodesic_family(std::shared_ptr<const FiniteGraph> graph,
                                       int qmp_constant);

CoherentPair<int> finite_geodesic_pair(std::shared_ptr<const FiniteGraph> graph,
                                       int ell, int qmp_constant);

// All vertices of a finite graph, for sweeps.
std::vector<int> vertex_pool(const FiniteGraph& graph);

}  // namespace wqm

#endif  // WQM_COMPLEXES_HPP
