#ifndef WQM_BROOKS_DELTA_HPP
#define WQM_BROOKS_DELTA_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wqm/cayley_tree.hpp"
#include "wqm/cochain.hpp"
#include "wqm/weights.hpp"

namespace wqm {

// ---------------------------------------------------------------------------
// Counting quasimorphisms on a fixed reduced word
// ---------------------------------------------------------------------------

// +1 when g equals the pattern, -1 when g equals its inverse, 0 otherwise.
int pattern_sign(const ReducedWord& omega, const ReducedWord& g);

// Signed sliding-window count: occurrences of the pattern in the reduced
// spelling of g minus occurrences of its inverse. Overlaps count.
long long brooks_count(const ReducedWord& omega, const ReducedWord& g);

// The counting quasimorphism as a group quasimorphism, with its defect
// bound 6(ell-1) from the triangle estimate (0 for single letters, which
// give homomorphisms).
GroupQuasimorphism brooks_group_qm(const Alphabet& alpha, const ReducedWord& omega);

/**
 * The integer weight on the Cayley tree whose fragment sums recover the
 * counting quasimorphism: a tuple of consecutively linked edges scores the
 * pattern sign of its label product; everything else scores zero.
 * Norm 1, finiteness constant ell-1 (2 when ell = 1, where the count over
 * interior vertices is empty).
 */
WeightMap<ReducedWord, long long> brooks_weight(const ReducedWord& omega);

// The coherent pair used with Brooks weights (tree geodesics, identity
// fragment bijections).
CoherentPair<ReducedWord> brooks_pair(const ReducedWord& omega);

// ---------------------------------------------------------------------------
// Piece decompositions
// ---------------------------------------------------------------------------

using PieceSequence = std::vector<ReducedWord>;

PieceSequence inverse_sequence(const PieceSequence& s);

// Longest common prefix of two sequences, compared piecewise.
PieceSequence common_sequence(const PieceSequence& s, const PieceSequence& t);

/**
 * A factorization rule assigning to each group element a cancellation-free
 * sequence of pieces, compatible with inversion and closed under
 * sub-products, whose pairwise triangles have uniformly short middle parts.
 */
class DeltaDecomposition {
 public:
  using Rule = std::function<PieceSequence(const ReducedWord&)>;
  using PiecePredicate = std::function<bool(const ReducedWord&)>;

  DeltaDecomposition(std::string name, Rule rule, PiecePredicate is_piece,
                     int declared_r)
      : name_(std::move(name)),
        rule_(std::move(rule)),
        is_piece_(std::move(is_piece)),
        declared_r_(declared_r) {}

  PieceSequence decompose(const ReducedWord& g) const { return rule_(g); }
  bool is_piece(const ReducedWord& p) const { return is_piece_(p); }
  const std::string& name() const { return name_; }
  int declared_r() const { return declared_r_; }

  // Single letters as pieces; triangles split exactly at the tree median.
  static DeltaDecomposition letters(const Alphabet& alpha);

  // Maximal powers of one generator as pieces. The axioms are verified
  // empirically on balls; triangle shortness is not asserted globally.
  static DeltaDecomposition syllables(const Alphabet& alpha);

 private:
  std::string name_;
  Rule rule_;
  PiecePredicate is_piece_;
  int declared_r_;
};

/**
 * The triangle data of a pair (g, h): the three shared tails c1, c2, c3 and
 * the three middle parts r1, r2, r3 determined by
 *   D(g)  = c1^{-1} r1 c2,
 *   D(h)  = c2^{-1} r2 c3,
 *   D(gh) = c1^{-1} r3^{-1} c3.
 * `consistent` is false when the factorizations do not resolve.
 */
struct DeltaTriangle {
  PieceSequence c1, c2, c3;
  PieceSequence r1, r2, r3;
  bool consistent = true;
  std::string issue;

  int max_r_length() const {
    return static_cast<int>(std::max({r1.size(), r2.size(), r3.size()}));
  }
};

DeltaTriangle delta_triangle(const DeltaDecomposition& delta, const ReducedWord& g,
                             const ReducedWord& h);

struct DeltaReport {
  ConditionResult concatenation{"cancellation-free-concatenation"};
  ConditionResult inversion{"inversion-compatibility"};
  ConditionResult subproducts{"subproduct-closure"};
  ConditionResult triangles{"triangle-consistency"};
  int empirical_r = 0;

  bool all_pass() const {
    return concatenation.pass && inversion.pass && subproducts.pass && triangles.pass;
  }
};

// Checks the three decomposition axioms on every element of the ball and
// the triangle consistency on every pair, reporting the largest middle part
// observed.
DeltaReport verify_delta_axioms(const DeltaDecomposition& delta,
                                const std::vector<ReducedWord>& ball_elements,
                                const Alphabet& alpha);

// Singleton path family in the piece Cayley graph: the path from x to y
// follows the decomposition of x^{-1} y. Throws AxiomViolation when the
// decomposition cancels.
PathFamily<ReducedWord> delta_path_family(const DeltaDecomposition& delta);

// Size-1 coherent pair over the decomposition family (identity bijections).
CoherentPair<ReducedWord> delta_pair(const DeltaDecomposition& delta);

// The near-median witness of a triple read off the triangle of
// (x^{-1}y, y^{-1}z).
QmpWitness<ReducedWord> delta_triangle_witness(const DeltaDecomposition& delta,
                                               const ReducedWord& x,
                                               const ReducedWord& y,
                                               const ReducedWord& z);

/**
 * An alternating bounded assignment of reals to pieces. Loading from
 * piece/value pairs fills in the forced opposite values and rejects
 * conflicts.
 */
class PieceWeight {
 public:
  PieceWeight() = default;
  static PieceWeight from_values(const std::vector<std::pair<ReducedWord, double>>& values);

  double value(const ReducedWord& piece) const;
  double norm_bound() const { return norm_; }

 private:
  std::map<ReducedWord, double> values_;
  double norm_ = 0.0;
};

// The size-1 weight on the piece Cayley graph induced by a piece weight.
WeightMap<ReducedWord, double> delta_weight(const PieceWeight& lambda,
                                            const DeltaDecomposition& delta);

struct DeltaQuasimorphism {
  GroupQuasimorphism direct;                          // sums lambda over pieces
  ActionQuasimorphism<ReducedWord, double> as_action;  // through the weight
};

DeltaQuasimorphism delta_qm(const PieceWeight& lambda, const DeltaDecomposition& delta);

}  // namespace wqm

#endif  // WQM_BROOKS_DELTA_HPP
