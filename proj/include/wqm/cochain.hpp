#ifndef WQM_COCHAIN_HPP
#define WQM_COCHAIN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqm/errors.hpp"
#include "wqm/words.hpp"

namespace wqm {

enum class Invariance { kByConstruction, kSampled };

/**
 * A degree-n cochain: a real-valued evaluator on (n+1)-tuples of vertices.
 * Cochains are closed evaluators, never stored tables; constructors build
 * invariant cochains from invariant ingredients. An optional declared norm
 * bound is checked on every evaluation.
 */
template <class V>
class Cochain {
 public:
  using Eval = std::function<double(std::span<const V>)>;

  Cochain(std::string name, int degree, Eval eval,
          Invariance inv = Invariance::kSampled,
          std::optional<double> norm_bound = std::nullopt)
      : name_(std::move(name)),
        degree_(degree),
        eval_(std::move(eval)),
        inv_(inv),
        norm_bound_(norm_bound) {
    if (degree_ < 0) throw InputError("cochain degree must be nonnegative");
  }

  double operator()(std::span<const V> args) const {
    if (static_cast<int>(args.size()) != degree_ + 1) {
      throw InputError("cochain '" + name_ + "' of degree " + std::to_string(degree_) +
                       " takes " + std::to_string(degree_ + 1) + " arguments, got " +
                       std::to_string(args.size()));
    }
    const double v = eval_(args);
    if (norm_bound_ && std::abs(v) > *norm_bound_ + 1e-12) {
      throw InputError("cochain '" + name_ + "' exceeded its declared norm bound");
    }
    return v;
  }

  double operator()(std::initializer_list<V> args) const {
    return (*this)(std::span<const V>(args.begin(), args.size()));
  }

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  Invariance invariance() const { return inv_; }
  std::optional<double> norm_bound() const { return norm_bound_; }

 private:
  std::string name_;
  int degree_;
  Eval eval_;
  Invariance inv_;
  std::optional<double> norm_bound_;
};

template <class V>
Cochain<V> zero_cochain(int degree) {
  return Cochain<V>("0", degree, [](std::span<const V>) { return 0.0; },
                    Invariance::kByConstruction, 0.0);
}

template <class V>
Cochain<V> constant_cochain(int degree, double c) {
  return Cochain<V>("const", degree, [c](std::span<const V>) { return c; },
                    Invariance::kByConstruction, std::abs(c));
}

/**
 * Simplicial coboundary: alternating sum over argument omissions. Composing
 * it with itself vanishes identically.
 */
template <class V>
Cochain<V> coboundary(const Cochain<V>& f) {
  const int n = f.degree();
  return Cochain<V>(
      "d(" + f.name() + ")", n + 1,
      [f, n](std::span<const V> args) {
        double total = 0.0;
        std::vector<V> sub;
        sub.reserve(static_cast<std::size_t>(n) + 1);
        for (int skip = 0; skip <= n + 1; ++skip) {
          sub.clear();
          for (int i = 0; i <= n + 1; ++i) {
            if (i != skip) sub.push_back(args[static_cast<std::size_t>(i)]);
          }
          const double term = f(std::span<const V>(sub.data(), sub.size()));
          total += (skip % 2 == 0) ? term : -term;
        }
        return total;
      },
      f.invariance(),
      f.norm_bound() ? std::optional<double>((f.degree() + 2) * *f.norm_bound())
                     : std::nullopt);
}

/**
 * Front-face/back-face product: the first factor reads the leading
 * arguments, the second the trailing ones, sharing the middle vertex.
 */
template <class V>
Cochain<V> cup(const Cochain<V>& f, const Cochain<V>& g) {
  const int p = f.degree();
  const int q = g.degree();
  std::optional<double> bound;
  if (f.norm_bound() && g.norm_bound()) bound = *f.norm_bound() * *g.norm_bound();
  return Cochain<V>(
      "(" + f.name() + ")u(" + g.name() + ")", p + q,
      [f, g, p, q](std::span<const V> args) {
        const double front = f(args.subspan(0, static_cast<std::size_t>(p) + 1));
        if (front == 0.0) return 0.0;
        return front * g(args.subspan(static_cast<std::size_t>(p),
                                      static_cast<std::size_t>(q) + 1));
      },
      f.invariance() == Invariance::kByConstruction &&
              g.invariance() == Invariance::kByConstruction
          ? Invariance::kByConstruction
          : Invariance::kSampled,
      bound);
}

template <class V>
Cochain<V> sum(const Cochain<V>& f, const Cochain<V>& g) {
  if (f.degree() != g.degree()) throw InputError("cochain degrees differ in sum");
  std::optional<double> bound;
  if (f.norm_bound() && g.norm_bound()) bound = *f.norm_bound() + *g.norm_bound();
  return Cochain<V>(
      "(" + f.name() + ")+(" + g.name() + ")", f.degree(),
      [f, g](std::span<const V> args) { return f(args) + g(args); },
      f.invariance() == Invariance::kByConstruction &&
              g.invariance() == Invariance::kByConstruction
          ? Invariance::kByConstruction
          : Invariance::kSampled,
      bound);
}

template <class V>
Cochain<V> scaled(double c, const Cochain<V>& f) {
  return Cochain<V>(
      "scaled(" + f.name() + ")", f.degree(),
      [c, f](std::span<const V> args) { return c * f(args); }, f.invariance(),
      f.norm_bound() ? std::optional<double>(std::abs(c) * *f.norm_bound())
                     : std::nullopt);
}

// Largest |f| over an explicit tuple set; monotone in the set.
template <class V>
double sup_norm_sampled(const Cochain<V>& f, const std::vector<std::vector<V>>& tuples) {
  double best = 0.0;
  for (const auto& t : tuples) {
    best = std::max(best, std::abs(f(std::span<const V>(t.data(), t.size()))));
  }
  return best;
}

// Largest invariance gap |f(g.s_0,...,g.s_n) - f(s_0,...,s_n)| over the
// given generators and tuples.
template <class V>
double invariance_residual(const Cochain<V>& f,
                           const std::vector<std::function<V(const V&)>>& generators,
                           const std::vector<std::vector<V>>& tuples) {
  double worst = 0.0;
  std::vector<V> moved;
  for (const auto& t : tuples) {
    const double base = f(std::span<const V>(t.data(), t.size()));
    for (const auto& gen : generators) {
      moved.clear();
      for (const auto& v : t) moved.push_back(gen(v));
      worst = std::max(
          worst, std::abs(f(std::span<const V>(moved.data(), moved.size())) - base));
    }
  }
  return worst;
}

/**
 * A real-valued map on the free group whose two-variable homomorphism gap
 * is uniformly bounded by `defect_bound`.
 */
struct GroupQuasimorphism {
  std::string name;
  std::function<double(const ReducedWord&)> eval;
  double defect_bound = 0.0;

  double operator()(const ReducedWord& g) const { return eval(g); }
};

/**
 * The left-invariant two-variable form (g,h) -> phi(g^{-1} h) of a group
 * quasimorphism. Its coboundary is a bounded degree-2 cocycle with norm at
 * most the defect bound of phi.
 */
inline Cochain<ReducedWord> hat_cochain(const GroupQuasimorphism& phi) {
  return Cochain<ReducedWord>(
      "hat(" + phi.name + ")", 1,
      [phi](std::span<const ReducedWord> args) {
        return phi.eval(args[0].inverse() * args[1]);
      },
      Invariance::kByConstruction);
}

// Degree-2 coboundary of the hat form, carrying the defect bound as its
// declared norm.
inline Cochain<ReducedWord> hat_coboundary(const GroupQuasimorphism& phi) {
  const Cochain<ReducedWord> h = hat_cochain(phi);
  const Cochain<ReducedWord> d = coboundary(h);
  return Cochain<ReducedWord>(
      "d(hat(" + phi.name + "))", 2,
      [d](std::span<const ReducedWord> args) { return d(args); },
      Invariance::kByConstruction, phi.defect_bound);
}

/**
 * Pullback of an equivariant cochain along the orbit of a base point:
 * group tuples evaluate through g -> g.base.
 */
template <class V, class G>
Cochain<G> orbit_pullback(const Cochain<V>& f,
                          std::function<V(const G&, const V&)> apply, V base) {
  return Cochain<G>(
      "pullback(" + f.name() + ")", f.degree(),
      [f, apply, base](std::span<const G> args) {
        std::vector<V> moved;
        moved.reserve(args.size());
        for (const auto& g : args) moved.push_back(apply(g, base));
        return f(std::span<const V>(moved.data(), moved.size()));
      },
      f.invariance(), f.norm_bound());
}

/**
 * A cochain given by finitely many table rows, extended to all tuples by
 * translating the first entry to the identity; tuples outside the table
 * evaluate to zero. The result is marked partial in its name.
 */
inline Cochain<ReducedWord> table_cochain(
    int degree,
    const std::vector<std::pair<std::vector<ReducedWord>, double>>& rows) {
  std::map<std::vector<ReducedWord>, double> table;
  double bound = 0.0;
  for (const auto& [tuple, value] : rows) {
    if (static_cast<int>(tuple.size()) != degree + 1) {
      throw InputError("table row arity does not match the declared degree");
    }
    std::vector<ReducedWord> key;
    key.reserve(tuple.size());
    const ReducedWord shift = tuple.front().inverse();
    for (const auto& w : tuple) key.push_back(shift * w);
    table[std::move(key)] = value;
    bound = std::max(bound, std::abs(value));
  }
  return Cochain<ReducedWord>(
      "table(partial)", degree,
      [table](std::span<const ReducedWord> args) {
        std::vector<ReducedWord> key;
        key.reserve(args.size());
        const ReducedWord shift = args[0].inverse();
        for (const auto& w : args) key.push_back(shift * w);
        const auto it = table.find(key);
        return it == table.end() ? 0.0 : it->second;
      },
      Invariance::kByConstruction, bound);
}

}  // namespace wqm

#endif  // WQM_COCHAIN_HPP
