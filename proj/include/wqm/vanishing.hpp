#ifndef WQM_VANISHING_HPP
#define WQM_VANISHING_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqm/cochain.hpp"
#include "wqm/coherent.hpp"
#include "wqm/sampling.hpp"
#include "wqm/weights.hpp"

namespace wqm {

/**
 * Fragment average of a cochain: the mean of its values at the fragment's
 * head and tail, the remaining arguments fixed. Symmetric under fragment
 * reversal by construction, and bounded by the norm of the cochain.
 */
template <class V>
double fragment_average(const Cochain<V>& zeta, const V& head, const V& tail,
                        std::span<const V> rest) {
  std::vector<V> args;
  args.reserve(rest.size() + 1);
  args.push_back(head);
  args.insert(args.end(), rest.begin(), rest.end());
  const double at_head = zeta(std::span<const V>(args.data(), args.size()));
  args[0] = tail;
  const double at_tail = zeta(std::span<const V>(args.data(), args.size()));
  return 0.5 * (at_head + at_tail);
}

// Sample locations for stability spot checks: vertex pairs provide the
// paths, trailing tuples the fixed arguments.
template <class V>
struct StabilityProbe {
  std::vector<std::pair<V, V>> pairs;
  std::vector<std::vector<V>> trailing;
};

template <class V>
struct StabilityResult {
  bool stable = true;
  std::string witness;
};

/**
 * Checks that the head and tail evaluations of `zeta` agree across the
 * fragment bijections on the support of W, for the sampled pairs and
 * trailing arguments. Vacuously true when every bijection is the identity.
 */
template <class V>
StabilityResult<V> phi_stability_check(const Cochain<V>& zeta,
                                       const CoherentPair<V>& pair,
                                       const WeightMap<V, double>& w,
                                       const StabilityProbe<V>& probe,
                                       double tolerance = 1e-12) {
  StabilityResult<V> result;
  if (pair.phi.is_identity()) return result;
  for (const auto& [x, y] : probe.pairs) {
    if (x == y) continue;
    const auto paths = pair.family.paths(x, y);
    const auto& p = paths.front();
    for (const auto& a : fragments(p, pair.ell())) {
      if (!w.in_support(a.edges)) continue;
      for (const auto& q : paths) {
        const Fragment<V> b = pair.phi.map(p, q, a);
        for (const auto& rest : probe.trailing) {
          // probes may carry tuples for several degrees; use the matching ones
          if (static_cast<int>(rest.size()) != zeta.degree()) continue;
          std::vector<V> args;
          args.reserve(rest.size() + 1);
          args.push_back(a.head());
          args.insert(args.end(), rest.begin(), rest.end());
          const auto eval_first = [&](const V& v) {
            args[0] = v;
            return zeta(std::span<const V>(args.data(), args.size()));
          };
          if (std::abs(eval_first(a.head()) - eval_first(b.head())) > tolerance) {
            result.stable = false;
            result.witness = "head values differ across a fragment bijection";
            return result;
          }
          if (std::abs(eval_first(a.tail()) - eval_first(b.tail())) > tolerance) {
            result.stable = false;
            result.witness = "tail values differ across a fragment bijection";
            return result;
          }
        }
      }
    }
  }
  return result;
}

namespace detail {

template <class V>
void require_stable(const Cochain<V>& zeta, const CoherentPair<V>& pair,
                    const WeightMap<V, double>& w, const StabilityProbe<V>& probe) {
  if (zeta.degree() < 1) {
    throw InputError("the correction cochains need degree at least 1; degree-0 "
                     "products reduce to the cup identity");
  }
  const auto r = phi_stability_check(zeta, pair, w, probe);
  if (!r.stable) {
    throw PreconditionError("cochain '" + zeta.name() +
                            "' failed the stability spot check: " + r.witness);
  }
}

// Sum over supported fragments of the canonical path from x to y of
// W(a) * g(a), where g reads only the head and tail of the fragment.
template <class V, class Term>
double supported_sum(const WeightMap<V, double>& w, const CoherentPair<V>& pair,
                     const V& x, const V& y, Term&& term) {
  if (x == y) return 0.0;
  const Path<V> p = pair.family.first_path(x, y);
  double total = 0.0;
  for (const auto& a : fragments(p, w.ell())) {
    const double wa = w.value(a);
    if (wa == 0.0) continue;
    total += wa * term(a);
  }
  return total;
}

}  // namespace detail

/**
 * The degree-n correction cochain summing W times the fragment average of
 * `zeta` along the canonical path between the first two arguments.
 */
template <class V>
Cochain<V> eta_cochain(const WeightMap<V, double>& w, const CoherentPair<V>& pair,
                       const Cochain<V>& zeta, const StabilityProbe<V>& probe = {}) {
  detail::require_stable(zeta, pair, w, probe);
  const int n = zeta.degree();
  return Cochain<V>(
      "eta[" + w.name() + "," + zeta.name() + "]", n,
      [w, pair, zeta](std::span<const V> args) {
        const std::span<const V> rest = args.subspan(1);
        return detail::supported_sum(
            w, pair, args[0], args[1], [&](const Fragment<V>& a) {
              return fragment_average(zeta, a.head(), a.tail(), rest);
            });
      },
      Invariance::kByConstruction);
}

/**
 * The mirrored correction: the path runs between the last two arguments and
 * the fragment average reads the leading ones.
 */
template <class V>
Cochain<V> nu_cochain(const WeightMap<V, double>& w, const CoherentPair<V>& pair,
                      const Cochain<V>& zeta, const StabilityProbe<V>& probe = {}) {
  detail::require_stable(zeta, pair, w, probe);
  const int n = zeta.degree();
  return Cochain<V>(
      "nu[" + w.name() + "," + zeta.name() + "]", n,
      [w, pair, zeta, n](std::span<const V> args) {
        const std::span<const V> rest = args.subspan(0, static_cast<std::size_t>(n));
        return detail::supported_sum(
            w, pair, args[static_cast<std::size_t>(n) - 1],
            args[static_cast<std::size_t>(n)], [&](const Fragment<V>& a) {
              return fragment_average(zeta, a.head(), a.tail(), rest);
            });
      },
      Invariance::kByConstruction);
}

/**
 * The bilinear correction used for triple products: W times the product of
 * the two fragment averages, along the canonical path between the two
 * middle arguments. Takes n+m arguments for degrees n and m.
 */
template <class V>
Cochain<V> kappa_cochain(const WeightMap<V, double>& w, const CoherentPair<V>& pair,
                         const Cochain<V>& zeta1, const Cochain<V>& zeta2,
                         const StabilityProbe<V>& probe = {}) {
  detail::require_stable(zeta1, pair, w, probe);
  detail::require_stable(zeta2, pair, w, probe);
  const int n = zeta1.degree();
  const int m = zeta2.degree();
  return Cochain<V>(
      "kappa[" + w.name() + "," + zeta1.name() + "," + zeta2.name() + "]",
      n + m - 1,
      [w, pair, zeta1, zeta2, n, m](std::span<const V> args) {
        const std::span<const V> first = args.subspan(0, static_cast<std::size_t>(n));
        const std::span<const V> second =
            args.subspan(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        return detail::supported_sum(
            w, pair, args[static_cast<std::size_t>(n) - 1],
            args[static_cast<std::size_t>(n)], [&](const Fragment<V>& a) {
              return fragment_average(zeta1, a.head(), a.tail(), first) *
                     fragment_average(zeta2, a.head(), a.tail(), second);
            });
      },
      Invariance::kByConstruction);
}

// The weight quasimorphism as a (generally unbounded) degree-1 cochain.
template <class V>
Cochain<V> weight_qm_cochain(const WeightMap<V, double>& w,
                             const CoherentPair<V>& pair) {
  return Cochain<V>(
      "f[" + w.name() + "]", 1,
      [w, pair](std::span<const V> args) {
        return weight_sum(w, pair, args[0], args[1]);
      },
      Invariance::kByConstruction);
}

/**
 * The three-path alternating sum of W * tau for the triple (u,v,w), where
 * tau is the fragment average of one or two cochains with fixed trailing
 * arguments. This is the closed form that certifies boundedness.
 */
template <class V, class Tau>
double triangle_form(const WeightMap<V, double>& w, const CoherentPair<V>& pair,
                     const V& u, const V& v, const V& x, Tau&& tau) {
  return detail::supported_sum(w, pair, u, v, tau) +
         detail::supported_sum(w, pair, v, x, tau) -
         detail::supported_sum(w, pair, u, x, tau);
}

struct CertificateOptions {
  int samples = 10000;
  std::uint64_t seed = 1;
  double tolerance = 0.0;  // 0 means exact equality is required
};

namespace detail {

// Remembers the worst residual seen together with the tuple that caused it.
template <class V>
struct WorstCase {
  double value = 0.0;
  std::vector<V> tuple;

  void feed(double candidate, const std::vector<V>& at) {
    if (candidate > value) {
      value = candidate;
      tuple = at;
    }
  }
};

template <class V>
std::string describe_tuple(const std::vector<V>& tuple) {
  if (tuple.empty()) return "(none)";
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_convertible_v<V, long long>) {
      out += std::to_string(static_cast<long long>(tuple[i]));
    } else {
      out += "?";
    }
  }
  return out + ")";
}

inline std::string describe_tuple(const std::vector<ReducedWord>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    if (tuple[i].is_identity()) {
      out += "e";
    } else {
      for (std::size_t j = 0; j < tuple[i].length(); ++j) {
        const Letter l = tuple[i].letter(j);
        out += static_cast<char>((is_positive(l) ? 'a' : 'A') + generator_index(l));
      }
    }
  }
  return out + ")";
}

}  // namespace detail

/**
 * Certificate that a cup product with the weight class is a coboundary: the
 * primitive beta, the largest observed residual of d(beta) against the
 * product cocycle, the largest gap between beta and its closed triangle
 * form, and the sampled norm against the analytic bound
 * 3(R+1) c ||W|| ||zeta||.
 */
template <class V>
struct PrimitiveCertificate {
  std::string side;
  Cochain<V> primitive;

  double max_coboundary_residual = 0.0;
  double max_triangle_gap = 0.0;
  double sampled_norm = 0.0;
  double analytic_bound = 0.0;
  double bound_scale = 0.0;  // 3(R+1) c ||W||, before the cochain norms
  double declared_zeta_norm = 0.0;
  double sampled_zeta_norm = 0.0;
  double zeta_cocycle_residual = 0.0;

  std::uint64_t seed = 0;
  int sample_count = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::string failure;
};

namespace detail {

template <class V>
double declared_or(const Cochain<V>& zeta, double fallback) {
  return zeta.norm_bound() ? *zeta.norm_bound() : fallback;
}

template <class Cert, class V>
void fill_primitive_verdict(Cert& cert, const WorstCase<V>& residual,
                            const WorstCase<V>& gap, const WorstCase<V>& norm) {
  cert.pass = residual.value <= cert.tolerance && gap.value <= cert.tolerance &&
              norm.value <= cert.analytic_bound + 1e-9;
  if (cert.pass) return;
  if (residual.value > cert.tolerance) {
    cert.failure = "coboundary residual " + std::to_string(residual.value) +
                   " at " + describe_tuple(residual.tuple);
  } else if (gap.value > cert.tolerance) {
    cert.failure = "closed-form gap " + std::to_string(gap.value) + " at " +
                   describe_tuple(gap.tuple);
  } else {
    cert.failure = "sampled norm " + std::to_string(norm.value) +
                   " above the bound at " + describe_tuple(norm.tuple);
  }
}

template <class V>
double bound_scale(const CoherentPair<V>& pair, const WeightMap<V, double>& w) {
  return 3.0 * (pair.family.qmp_constant() + 1) *
         static_cast<double>(w.finiteness_c()) * w.norm_bound();
}

}  // namespace detail

/**
 * Builds beta = f_W u zeta + d(eta) and certifies d(beta) = d(f_W) u zeta
 * pointwise on seeded random tuples from the pool, together with the norm
 * bound via the triangle form.
 */
template <class V>
PrimitiveCertificate<V> cup_primitive_left(const WeightMap<V, double>& w,
                                           const CoherentPair<V>& pair,
                                           const Cochain<V>& zeta,
                                           const std::vector<V>& pool,
                                           const CertificateOptions& options,
                                           const StabilityProbe<V>& probe = {}) {
  const int n = zeta.degree();
  const Cochain<V> fw = weight_qm_cochain(w, pair);
  const Cochain<V> eta = eta_cochain(w, pair, zeta, probe);
  const Cochain<V> beta = sum(cup(fw, zeta), coboundary(eta));
  const Cochain<V> dbeta = coboundary(beta);
  const Cochain<V> target = cup(coboundary(fw), zeta);

  PrimitiveCertificate<V> cert{"left", beta};
  cert.seed = options.seed;
  cert.sample_count = options.samples;
  cert.tolerance = options.tolerance;
  cert.bound_scale = detail::bound_scale(pair, w);
  cert.declared_zeta_norm = detail::declared_or(zeta, 0.0);
  cert.analytic_bound = cert.bound_scale * cert.declared_zeta_norm;

  Rng rng(options.seed);
  detail::WorstCase<V> worst_residual, worst_gap, worst_norm;
  const auto coboundary_tuples = sample_tuples(pool, n + 3, options.samples, rng);
  for (const auto& t : coboundary_tuples) {
    const std::span<const V> args(t.data(), t.size());
    worst_residual.feed(std::abs(dbeta(args) - target(args)), t);
  }
  cert.max_coboundary_residual = worst_residual.value;

  const auto norm_tuples = sample_tuples(pool, n + 2, options.samples, rng);
  for (const auto& t : norm_tuples) {
    const std::span<const V> args(t.data(), t.size());
    const double direct = beta(args);
    const std::span<const V> rest = args.subspan(2);
    const double via_triangle =
        triangle_form(w, pair, t[0], t[1], t[2], [&](const Fragment<V>& a) {
          return fragment_average(zeta, a.head(), a.tail(), rest);
        });
    worst_gap.feed(std::abs(direct - via_triangle), t);
    worst_norm.feed(std::abs(direct), t);
  }
  cert.max_triangle_gap = worst_gap.value;
  cert.sampled_norm = worst_norm.value;

  const Cochain<V> dzeta = coboundary(zeta);
  const auto zeta_tuples = sample_tuples(pool, n + 2, std::min(options.samples, 1000), rng);
  for (const auto& t : zeta_tuples) {
    cert.zeta_cocycle_residual =
        std::max(cert.zeta_cocycle_residual,
                 std::abs(dzeta(std::span<const V>(t.data(), t.size()))));
    cert.sampled_zeta_norm =
        std::max(cert.sampled_zeta_norm,
                 std::abs(zeta(std::span<const V>(t.data(), t.size() - 1))));
  }

  detail::fill_primitive_verdict(cert, worst_residual, worst_gap, worst_norm);
  return cert;
}

/**
 * The mirrored primitive beta' = (-1)^n (zeta u f_W - d(nu)) certifying
 * d(beta') = zeta u d(f_W).
 */
template <class V>
PrimitiveCertificate<V> cup_primitive_right(const WeightMap<V, double>& w,
                                            const CoherentPair<V>& pair,
                                            const Cochain<V>& zeta,
                                            const std::vector<V>& pool,
                                            const CertificateOptions& options,
                                            const StabilityProbe<V>& probe = {}) {
  const int n = zeta.degree();
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const Cochain<V> fw = weight_qm_cochain(w, pair);
  const Cochain<V> nu = nu_cochain(w, pair, zeta, probe);
  const Cochain<V> beta =
      scaled(sign, sum(cup(zeta, fw), scaled(-1.0, coboundary(nu))));
  const Cochain<V> dbeta = coboundary(beta);
  const Cochain<V> target = cup(zeta, coboundary(fw));

  PrimitiveCertificate<V> cert{"right", beta};
  cert.seed = options.seed;
  cert.sample_count = options.samples;
  cert.tolerance = options.tolerance;
  cert.bound_scale = detail::bound_scale(pair, w);
  cert.declared_zeta_norm = detail::declared_or(zeta, 0.0);
  cert.analytic_bound = cert.bound_scale * cert.declared_zeta_norm;

  Rng rng(options.seed);
  detail::WorstCase<V> worst_residual, worst_gap, worst_norm;
  const auto coboundary_tuples = sample_tuples(pool, n + 3, options.samples, rng);
  for (const auto& t : coboundary_tuples) {
    const std::span<const V> args(t.data(), t.size());
    worst_residual.feed(std::abs(dbeta(args) - target(args)), t);
  }
  cert.max_coboundary_residual = worst_residual.value;

  const auto norm_tuples = sample_tuples(pool, n + 2, options.samples, rng);
  for (const auto& t : norm_tuples) {
    const std::span<const V> args(t.data(), t.size());
    const double direct = beta(args);
    const std::span<const V> rest = args.subspan(0, static_cast<std::size_t>(n));
    const double via_triangle = triangle_form(
        w, pair, t[static_cast<std::size_t>(n) - 1], t[static_cast<std::size_t>(n)],
        t[static_cast<std::size_t>(n) + 1], [&](const Fragment<V>& a) {
          return fragment_average(zeta, a.head(), a.tail(), rest);
        });
    worst_gap.feed(std::abs(direct - via_triangle), t);
    worst_norm.feed(std::abs(direct), t);
  }
  cert.max_triangle_gap = worst_gap.value;
  cert.sampled_norm = worst_norm.value;

  const Cochain<V> dzeta = coboundary(zeta);
  const auto zeta_tuples = sample_tuples(pool, n + 2, std::min(options.samples, 1000), rng);
  for (const auto& t : zeta_tuples) {
    cert.zeta_cocycle_residual =
        std::max(cert.zeta_cocycle_residual,
                 std::abs(dzeta(std::span<const V>(t.data(), t.size()))));
    cert.sampled_zeta_norm =
        std::max(cert.sampled_zeta_norm,
                 std::abs(zeta(std::span<const V>(t.data(), t.size() - 1))));
  }

  detail::fill_primitive_verdict(cert, worst_residual, worst_gap, worst_norm);
  return cert;
}

/**
 * Independent two-sided evaluation of the coboundary identity for kappa at
 * one tuple of n+m+1 vertices: the left side evaluates d(kappa) directly,
 * the right side assembles the two cup corrections and the closed triangle
 * form. Returns the absolute gap.
 */
template <class V>
double kappa_coboundary_identity(const WeightMap<V, double>& w,
                                 const CoherentPair<V>& pair,
                                 const Cochain<V>& zeta1, const Cochain<V>& zeta2,
                                 std::span<const V> args,
                                 const StabilityProbe<V>& probe = {}) {
  const int n = zeta1.degree();
  const int m = zeta2.degree();
  if (static_cast<int>(args.size()) != n + m + 1) {
    throw InputError("kappa identity takes n+m+1 vertices");
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;

  const Cochain<V> kappa = kappa_cochain(w, pair, zeta1, zeta2, probe);
  const double lhs = coboundary(kappa)(args);

  const Cochain<V> eta = eta_cochain(w, pair, zeta2, probe);
  const Cochain<V> nu = nu_cochain(w, pair, zeta1, probe);
  const double cup_part = cup(zeta1, eta)(args) + sign * cup(nu, zeta2)(args);

  const std::span<const V> first = args.subspan(0, static_cast<std::size_t>(n));
  const std::span<const V> second = args.subspan(static_cast<std::size_t>(n) + 1);
  const auto tau = [&](const Fragment<V>& a) {
    return fragment_average(zeta1, a.head(), a.tail(), first) *
           fragment_average(zeta2, a.head(), a.tail(), second);
  };
  const double rhs =
      cup_part - sign * triangle_form(w, pair, args[static_cast<std::size_t>(n) - 1],
                                      args[static_cast<std::size_t>(n)],
                                      args[static_cast<std::size_t>(n) + 1], tau);
  return std::abs(lhs - rhs);
}

/**
 * Certificate for the triple product: the two cup primitives, the bilinear
 * correction kappa, and the witness
 *   beta = zeta1 u eta + (-1)^n nu u zeta2 - d(kappa),
 * with d(beta) checked against (-1)^n zeta1 u beta2 - beta1 u zeta2 and the
 * norm of beta checked against 3(R+1) c ||W|| ||zeta1|| ||zeta2||.
 */
template <class V>
struct MasseyCertificate {
  int n = 0;
  int m = 0;
  Cochain<V> beta1, beta2, kappa, witness;

  double max_kappa_identity_residual = 0.0;
  double max_coboundary_residual = 0.0;
  double max_triangle_gap = 0.0;
  double max_leibniz_residual = 0.0;
  // primitive well-formedness: d(beta1) against zeta1 u d(f_W) and d(beta2)
  // against d(f_W) u zeta2
  double max_beta1_residual = 0.0;
  double max_beta2_residual = 0.0;
  double sampled_norm = 0.0;
  double analytic_bound = 0.0;
  double bound_scale = 0.0;

  std::uint64_t seed = 0;
  int sample_count = 0;
  double tolerance = 0.0;
  bool pass = false;
  std::string failure;
};

template <class V>
MasseyCertificate<V> massey_witness(const WeightMap<V, double>& w,
                                    const CoherentPair<V>& pair,
                                    const Cochain<V>& zeta1, const Cochain<V>& zeta2,
                                    const std::vector<V>& pool,
                                    const CertificateOptions& options,
                                    const StabilityProbe<V>& probe = {}) {
  const int n = zeta1.degree();
  const int m = zeta2.degree();
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;

  const Cochain<V> fw = weight_qm_cochain(w, pair);
  const Cochain<V> eta = eta_cochain(w, pair, zeta2, probe);
  const Cochain<V> nu = nu_cochain(w, pair, zeta1, probe);
  const Cochain<V> beta1 =
      scaled(sign, sum(cup(zeta1, fw), scaled(-1.0, coboundary(nu))));
  const Cochain<V> beta2 = sum(cup(fw, zeta2), coboundary(eta));
  const Cochain<V> kappa = kappa_cochain(w, pair, zeta1, zeta2, probe);
  const Cochain<V> unbounded_primitive = sum(cup(zeta1, eta), scaled(sign, cup(nu, zeta2)));
  const Cochain<V> beta = sum(unbounded_primitive, scaled(-1.0, coboundary(kappa)));

  MasseyCertificate<V> cert{n, m, beta1, beta2, kappa, beta};
  cert.seed = options.seed;
  cert.sample_count = options.samples;
  cert.tolerance = options.tolerance;
  cert.bound_scale = detail::bound_scale(pair, w);
  cert.analytic_bound = cert.bound_scale * detail::declared_or(zeta1, 0.0) *
                        detail::declared_or(zeta2, 0.0);

  const Cochain<V> dbeta = coboundary(beta);
  const Cochain<V> target =
      sum(scaled(sign, cup(zeta1, beta2)), scaled(-1.0, cup(beta1, zeta2)));
  const Cochain<V> d_unbounded = coboundary(unbounded_primitive);

  // The coboundary identity for kappa, both sides evaluated independently:
  // d(kappa) against the cup corrections minus the signed triangle form.
  const Cochain<V> dkappa = coboundary(kappa);
  const Cochain<V> cup_zeta1_eta = cup(zeta1, eta);
  const Cochain<V> cup_nu_zeta2 = cup(nu, zeta2);

  Rng rng(options.seed);
  detail::WorstCase<V> worst_kappa, worst_residual, worst_leibniz, worst_gap,
      worst_norm;
  const auto kappa_tuples = sample_tuples(pool, n + m + 1, options.samples, rng);
  for (const auto& t : kappa_tuples) {
    const std::span<const V> args(t.data(), t.size());
    const double lhs = dkappa(args);
    const std::span<const V> first = args.subspan(0, static_cast<std::size_t>(n));
    const std::span<const V> second = args.subspan(static_cast<std::size_t>(n) + 1);
    const double rhs =
        cup_zeta1_eta(args) + sign * cup_nu_zeta2(args) -
        sign * triangle_form(w, pair, args[static_cast<std::size_t>(n) - 1],
                             args[static_cast<std::size_t>(n)],
                             args[static_cast<std::size_t>(n) + 1],
                             [&](const Fragment<V>& a) {
                               return fragment_average(zeta1, a.head(), a.tail(), first) *
                                      fragment_average(zeta2, a.head(), a.tail(), second);
                             });
    worst_kappa.feed(std::abs(lhs - rhs), t);
  }
  cert.max_kappa_identity_residual = worst_kappa.value;

  const auto coboundary_tuples = sample_tuples(pool, n + m + 2, options.samples, rng);
  for (const auto& t : coboundary_tuples) {
    const std::span<const V> args(t.data(), t.size());
    const double lhs = dbeta(args);
    const double rhs = target(args);
    worst_residual.feed(std::abs(lhs - rhs), t);
    worst_leibniz.feed(std::abs(rhs - d_unbounded(args)), t);
  }
  cert.max_coboundary_residual = worst_residual.value;
  cert.max_leibniz_residual = worst_leibniz.value;

  const auto norm_tuples = sample_tuples(pool, n + m + 1, options.samples, rng);
  for (const auto& t : norm_tuples) {
    const std::span<const V> args(t.data(), t.size());
    const double direct = beta(args);
    const std::span<const V> first = args.subspan(0, static_cast<std::size_t>(n));
    const std::span<const V> second = args.subspan(static_cast<std::size_t>(n) + 1);
    const double via_triangle =
        sign * triangle_form(w, pair, args[static_cast<std::size_t>(n) - 1],
                             args[static_cast<std::size_t>(n)],
                             args[static_cast<std::size_t>(n) + 1],
                             [&](const Fragment<V>& a) {
                               return fragment_average(zeta1, a.head(), a.tail(), first) *
                                      fragment_average(zeta2, a.head(), a.tail(), second);
                             });
    worst_gap.feed(std::abs(direct - via_triangle), t);
    worst_norm.feed(std::abs(direct), t);
  }
  cert.max_triangle_gap = worst_gap.value;
  cert.sampled_norm = worst_norm.value;

  // both entries really are primitives of their cup products
  const Cochain<V> dfw = coboundary(fw);
  const Cochain<V> dbeta1 = coboundary(beta1);
  const Cochain<V> dbeta2 = coboundary(beta2);
  const Cochain<V> target1 = cup(zeta1, dfw);
  const Cochain<V> target2 = cup(dfw, zeta2);
  const auto primitive_tuples =
      sample_tuples(pool, n + 3, std::min(options.samples, 1000), rng);
  for (const auto& t : primitive_tuples) {
    const std::span<const V> args(t.data(), t.size());
    cert.max_beta1_residual =
        std::max(cert.max_beta1_residual, std::abs(dbeta1(args) - target1(args)));
  }
  const auto primitive_tuples2 =
      sample_tuples(pool, m + 3, std::min(options.samples, 1000), rng);
  for (const auto& t : primitive_tuples2) {
    const std::span<const V> args(t.data(), t.size());
    cert.max_beta2_residual =
        std::max(cert.max_beta2_residual, std::abs(dbeta2(args) - target2(args)));
  }

  cert.pass = cert.max_beta1_residual <= cert.tolerance &&
              cert.max_beta2_residual <= cert.tolerance &&
              cert.max_kappa_identity_residual <= cert.tolerance &&
              cert.max_coboundary_residual <= cert.tolerance &&
              cert.max_leibniz_residual <= cert.tolerance &&
              cert.max_triangle_gap <= cert.tolerance &&
              cert.sampled_norm <= cert.analytic_bound + 1e-9;
  if (!cert.pass) {
    if (worst_kappa.value > cert.tolerance) {
      cert.failure = "coboundary identity residual " +
                     std::to_string(worst_kappa.value) + " at " +
                     detail::describe_tuple(worst_kappa.tuple);
    } else if (worst_residual.value > cert.tolerance) {
      cert.failure = "coboundary residual " + std::to_string(worst_residual.value) +
                     " at " + detail::describe_tuple(worst_residual.tuple);
    } else if (worst_leibniz.value > cert.tolerance) {
      cert.failure = "product-rule residual " + std::to_string(worst_leibniz.value) +
                     " at " + detail::describe_tuple(worst_leibniz.tuple);
    } else if (worst_gap.value > cert.tolerance) {
      cert.failure = "closed-form gap " + std::to_string(worst_gap.value) + " at " +
                     detail::describe_tuple(worst_gap.tuple);
    } else {
      cert.failure = "sampled norm " + std::to_string(worst_norm.value) +
                     " above the bound at " + detail::describe_tuple(worst_norm.tuple);
    }
  }
  return cert;
}

}  // namespace wqm

#endif  // WQM_VANISHING_HPP
