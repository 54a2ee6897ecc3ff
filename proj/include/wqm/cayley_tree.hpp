#ifndef WQM_CAYLEY_TREE_HPP
#define WQM_CAYLEY_TREE_HPP

#include <memory>
#include <vector>

#include "wqm/coherent.hpp"
#include "wqm/graph.hpp"
#include "wqm/words.hpp"

namespace wqm {

// Adjacency in the standard Cayley graph of the free group: the two words
// differ by one letter on the right.
inline bool cayley_adjacent(const ReducedWord& x, const ReducedWord& y) {
  return edge_letter(x, y).has_value();
}

/**
 * The unique geodesic from x to y in the Cayley tree. Its vertices are the
 * partial products x * (prefix of x^{-1} y): the path descends along the
 * shared prefix and climbs back up.
 */
inline Path<ReducedWord> tree_geodesic(const ReducedWord& x, const ReducedWord& y) {
  const ReducedWord w = x.inverse() * y;
  std::vector<ReducedWord> verts;
  verts.reserve(w.length() + 1);
  ReducedWord cur = x;
  verts.push_back(cur);
  for (std::size_t i = 0; i < w.length(); ++i) {
    cur = cur.append(w.letter(i));
    verts.push_back(cur);
  }
  return Path<ReducedWord>(std::move(verts));
}

// Singleton geodesic family of the Cayley tree. The declared constant
// defaults to 1, which the uniquely-geodesic tree satisfies (0 works too).
inline PathFamily<ReducedWord> tree_geodesic_family(int qmp_constant = 1) {
  return PathFamily<ReducedWord>(
      "tree-geodesics",
      [](const ReducedWord& x, const ReducedWord& y) {
        return std::vector<Path<ReducedWord>>{tree_geodesic(x, y)};
      },
      qmp_constant);
}

// Coherent pair on the tree: singleton path sets make the identity the only
// fragment bijection.
inline CoherentPair<ReducedWord> tree_coherent_pair(int ell, int qmp_constant = 1) {
  return CoherentPair<ReducedWord>{
      tree_geodesic_family(qmp_constant),
      FragmentCorrespondence<ReducedWord>::identity_family(ell)};
}

// Left translation by the generators.
inline GraphAction<ReducedWord> left_translation_action(const Alphabet& alpha) {
  GraphAction<ReducedWord> action;
  for (Letter l = 0; l < alpha.num_letters(); ++l) {
    const ReducedWord g = ReducedWord::from_raw(std::span<const Letter>(&l, 1));
    action.generators.push_back(
        {std::string(1, alpha.to_char(l)),
         [g](const ReducedWord& v) { return g * v; }});
  }
  return action;
}

}  // namespace wqm

#endif  // WQM_CAYLEY_TREE_HPP
