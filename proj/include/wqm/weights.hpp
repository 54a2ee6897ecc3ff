#ifndef WQM_WEIGHTS_HPP
#define WQM_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "wqm/coherent.hpp"
#include "wqm/graph.hpp"

namespace wqm {

/**
 * An alternating, invariant, bounded map on tuples of oriented edges, with a
 * declared sup-norm bound and a declared finiteness constant c: along any
 * family path, at most c supported fragments pass strictly over any given
 * interior vertex. The evaluator asserts the norm bound on every call.
 *
 * S is the value type: long long for exact integer weights, double for real
 * ones.
 */
template <class V, class S>
class WeightMap {
 public:
  using Eval = std::function<S(const EdgeTuple<V>&)>;
  using Support = std::function<bool(const EdgeTuple<V>&)>;

  WeightMap(std::string name, int ell, Eval eval, S norm_bound, long long finiteness_c,
            Support support = {})
      : name_(std::move(name)),
        ell_(ell),
        eval_(std::move(eval)),
        norm_bound_(norm_bound),
        finiteness_c_(finiteness_c),
        support_(std::move(support)) {
    if (ell_ < 1) throw InputError("weight size must be positive");
    if (finiteness_c_ < 1) throw InputError("finiteness constant must be positive");
  }

  S operator()(const EdgeTuple<V>& a) const {
    if (static_cast<int>(a.size()) != ell_) {
      throw InputError("weight '" + name_ + "' takes tuples of size " +
                       std::to_string(ell_));
    }
    const S v = eval_(a);
    if (!(v <= norm_bound_ && -v <= norm_bound_)) {
      throw InputError("weight '" + name_ + "' exceeded its declared norm bound");
    }
    return v;
  }

  S value(const Fragment<V>& a) const { return (*this)(a.edges); }

  bool in_support(const EdgeTuple<V>& a) const {
    if (support_) return support_(a);
    return eval_(a) != S{};
  }

  const std::string& name() const { return name_; }
  int ell() const { return ell_; }
  S norm_bound() const { return norm_bound_; }
  long long finiteness_c() const { return finiteness_c_; }

 private:
  std::string name_;
  int ell_;
  Eval eval_;
  S norm_bound_;
  long long finiteness_c_;
  Support support_;
};

// Real-valued view of an integer weight (shares the evaluator).
template <class V>
WeightMap<V, double> to_real(const WeightMap<V, long long>& w) {
  return WeightMap<V, double>(
      w.name(), w.ell(),
      [w](const EdgeTuple<V>& a) { return static_cast<double>(w(a)); },
      static_cast<double>(w.norm_bound()), w.finiteness_c(),
      [w](const EdgeTuple<V>& a) { return w.in_support(a); });
}

/**
 * A two-variable invariant map with uniformly bounded triple defect,
 * produced from a weight by summing over the fragments of a family path.
 */
template <class V, class S>
struct ActionQuasimorphism {
  std::string name;
  std::function<S(const V&, const V&)> eval;
  double defect_bound = std::numeric_limits<double>::infinity();

  S operator()(const V& x, const V& y) const { return eval(x, y); }
};

// Sum of W over all fragments of the canonical family path from x to y.
template <class V, class S>
S weight_sum(const WeightMap<V, S>& w, const CoherentPair<V>& pair, const V& x,
             const V& y) {
  if (x == y) return S{};
  const Path<V> p = pair.family.first_path(x, y);
  S total{};
  for (const auto& a : fragments(p, w.ell())) total += w.value(a);
  return total;
}

/**
 * The quasimorphism induced by a weight. The value at (x,y) is independent
 * of the chosen family path by path-independence; the defect bound is
 * 3(R+1) c ||W||.
 */
template <class V, class S>
ActionQuasimorphism<V, S> weight_qm(const WeightMap<V, S>& w,
                                    const CoherentPair<V>& pair) {
  ActionQuasimorphism<V, S> f;
  f.name = "f[" + w.name() + "]";
  f.defect_bound = 3.0 * (pair.family.qmp_constant() + 1) *
                   static_cast<double>(w.finiteness_c()) *
                   static_cast<double>(w.norm_bound());
  f.eval = [w, pair](const V& x, const V& y) { return weight_sum(w, pair, x, y); };
  return f;
}

template <class V>
struct WeightSamples {
  std::vector<EdgeTuple<V>> tuples;            // raw edge tuples
  std::vector<std::pair<V, V>> vertex_pairs;   // endpoints for family paths
};

struct WeightReport {
  std::vector<ConditionResult> properties;  // the five defining properties
  long long max_contained_support = 0;      // empirical finiteness count

  bool all_pass() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const ConditionResult& c) { return c.pass; });
  }
};

/**
 * Checks the five defining properties of a weight on the given samples:
 * invariance under the action generators, the alternating identity,
 * boundedness, path-independence across the fragment bijections, and the
 * finiteness condition with the declared constant. Also reports the largest
 * observed supported-fragment count as an empirical fallback for c.
 */
template <class V, class S>
WeightReport verify_weight(const WeightMap<V, S>& w, const CoherentPair<V>& pair,
                           const GraphAction<V>& action,
                           const WeightSamples<V>& samples) {
  WeightReport report;
  ConditionResult invariance{"invariance"};
  ConditionResult alternating{"alternating"};
  ConditionResult bounded{"bounded"};
  ConditionResult path_indep{"path-independence"};
  ConditionResult finiteness{"finiteness"};

  for (const auto& a : samples.tuples) {
    if (alternating.pass && w(reversed_tuple(a)) != -w(a)) {
      alternating.pass = false;
      alternating.counterexample = "tuple reversal changed the value";
    }
    const S v = w(a);
    if (bounded.pass && !(v <= w.norm_bound() && -v <= w.norm_bound())) {
      bounded.pass = false;
      bounded.counterexample = "value above the declared bound";
    }
    if (invariance.pass) {
      for (const auto& gen : action.generators) {
        EdgeTuple<V> moved;
        moved.reserve(a.size());
        for (const auto& e : a) moved.push_back({gen.map(e.head), gen.map(e.tail)});
        if (w(moved) != v) {
          invariance.pass = false;
          invariance.counterexample = "generator '" + gen.name + "'";
          break;
        }
      }
    }
  }

  for (const auto& [x, y] : samples.vertex_pairs) {
    if (x == y) continue;
    const auto paths = pair.family.paths(x, y);
    const auto& p = paths.front();

    if (path_indep.pass) {
      for (const auto& q : paths) {
        for (const auto& a : fragments(p, w.ell())) {
          if (w.value(pair.phi.map(p, q, a)) != w.value(a)) {
            path_indep.pass = false;
            path_indep.counterexample = "fragment image changed the value";
            break;
          }
        }
        if (!path_indep.pass) break;
      }
    }

    for (const auto& q : paths) {
      const auto frs = fragments(q, w.ell());
      // supported fragments passing strictly over the vertex at position mi
      for (int mi = 0; mi <= q.length(); ++mi) {
        long long count = 0;
        for (const auto& a : frs) {
          if (a.indices.front() < mi && mi < a.indices.back() + 1 &&
              w.in_support(a.edges)) {
            ++count;
          }
        }
        report.max_contained_support = std::max(report.max_contained_support, count);
        if (finiteness.pass && count > w.finiteness_c()) {
          finiteness.pass = false;
          finiteness.counterexample =
              "observed " + std::to_string(count) + " supported fragments over one vertex";
        }
      }
    }
  }

  report.properties = {invariance, alternating, bounded, path_indep, finiteness};
  return report;
}

/**
 * A symmetric, stability-respecting companion map for the triangle
 * estimate. `norm_bound` enters the reported bound.
 */
template <class V>
struct CompanionMap {
  std::function<double(const EdgeTuple<V>&)> eval;
  double norm_bound = 1.0;
};

template <class V>
struct TriangleResidual {
  double residual = 0.0;
  double bound = 0.0;
  bool within_bound() const { return residual <= bound + 1e-12; }
};

namespace detail {

template <class V>
double weighted_companion_sum(const WeightMap<V, double>& w,
                              const CoherentPair<V>& pair,
                              const CompanionMap<V>& tau, const V& x, const V& y) {
  if (x == y) return 0.0;
  const Path<V> p = pair.family.first_path(x, y);
  double total = 0.0;
  for (const auto& a : fragments(p, w.ell())) total += w.value(a) * tau.eval(a.edges);
  return total;
}

}  // namespace detail

/**
 * The three-path alternating sum of W*tau for a vertex triple, along with
 * the bound 3(R+1) c ||W|| ||tau|| it must respect. Spot-checks that tau is
 * symmetric and stable across the fragment bijections on the involved paths
 * and throws PreconditionError with a witness otherwise.
 */
template <class V>
TriangleResidual<V> triangle_sum_residual(const WeightMap<V, double>& w,
                                          const CoherentPair<V>& pair,
                                          const CompanionMap<V>& tau, const V& x,
                                          const V& y, const V& z) {
  // symmetry and stability spot checks on the fragments actually involved
  const std::pair<V, V> legs[3] = {{x, y}, {y, z}, {x, z}};
  for (const auto& [u, v] : legs) {
    if (u == v) continue;
    const auto paths = pair.family.paths(u, v);
    const auto& p = paths.front();
    for (const auto& a : fragments(p, w.ell())) {
      const double tv = tau.eval(a.edges);
      if (std::abs(tau.eval(reversed_tuple(a.edges)) - tv) > 1e-12) {
        throw PreconditionError("companion map is not symmetric on a fragment of a family path");
      }
      if (!pair.phi.is_identity() && w.in_support(a.edges)) {
        for (const auto& q : paths) {
          if (std::abs(tau.eval(pair.phi.map(p, q, a).edges) - tv) > 1e-12) {
            throw PreconditionError("companion map is not stable across the fragment bijections");
          }
        }
      }
    }
  }

  TriangleResidual<V> out;
  out.residual = std::abs(detail::weighted_companion_sum(w, pair, tau, x, y) +
                          detail::weighted_companion_sum(w, pair, tau, y, z) -
                          detail::weighted_companion_sum(w, pair, tau, x, z));
  out.bound = 3.0 * (pair.family.qmp_constant() + 1) *
              static_cast<double>(w.finiteness_c()) * w.norm_bound() *
              tau.norm_bound;
  return out;
}

// Largest |f(y,z) - f(x,z) + f(x,y)| over an explicit triple list.
template <class V, class S>
S defect(const ActionQuasimorphism<V, S>& f,
         const std::vector<std::array<V, 3>>& triples) {
  S best{};
  for (const auto& t : triples) {
    const S d = f(t[1], t[2]) - f(t[0], t[2]) + f(t[0], t[1]);
    best = std::max(best, d < S{} ? static_cast<S>(-d) : d);
  }
  return best;
}

/**
 * Exhaustive defect over all ordered triples from a point set, via a
 * precomputed pair table.
 */
template <class V, class S>
S defect_over_points(const ActionQuasimorphism<V, S>& f, const std::vector<V>& pts) {
  const std::size_t n = pts.size();
  std::vector<S> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = f(pts[i], pts[j]);
  }
  S best{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const S d = table[j * n + k] - table[i * n + k] + table[i * n + j];
        best = std::max(best, d < S{} ? static_cast<S>(-d) : d);
      }
    }
  }
  return best;
}

}  // namespace wqm

#endif  // WQM_WEIGHTS_HPP
