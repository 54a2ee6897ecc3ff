#include <cmath>

#include "doctest.h"
#include "wqm/brooks_delta.hpp"
#include "wqm/sampling.hpp"
#include "wqm/vanishing.hpp"

using namespace wqm;

namespace {

const Alphabet f2(2);

ReducedWord w(const std::string& text) { return parse_word(f2, text); }

// hand-rolled evaluation of d(hat(phi)) straight from the definitions,
// bypassing the cochain combinators
double dhat_by_hand(const ReducedWord& omega, const ReducedWord& a,
                    const ReducedWord& b, const ReducedWord& c) {
  const auto phi = [&omega](const ReducedWord& g) {
    return static_cast<double>(brooks_count(omega, g));
  };
  return phi(b.inverse() * c) - phi(a.inverse() * c) + phi(a.inverse() * b);
}

// independent re-summation of the correction sum along the geodesic from x0
// to x1: slides a window over the spelled word instead of enumerating
// fragments
double eta_by_hand(const ReducedWord& weight_word, const ReducedWord& zeta_word,
                   const ReducedWord& x0, const ReducedWord& x1,
                   const ReducedWord& x2) {
  const std::size_t ell = weight_word.length();
  const ReducedWord diff = x0.inverse() * x1;
  if (diff.length() < ell) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i + ell <= diff.length(); ++i) {
    const ReducedWord window = diff.subword(i, ell);
    double sign = 0.0;
    if (window == weight_word) sign = 1.0;
    if (window == weight_word.inverse()) sign = -1.0;
    if (sign == 0.0) continue;
    const ReducedWord head = x0 * diff.prefix(i);
    const ReducedWord tail = x0 * diff.prefix(i + ell);
    total += sign * 0.5 *
             (dhat_by_hand(zeta_word, head, x1, x2) +
              dhat_by_hand(zeta_word, tail, x1, x2));
  }
  return total;
}

}  // namespace

TEST_SUITE("vanishing") {
  TEST_CASE("fragment averages") {
    // a constant cochain averages to itself
    const auto c = constant_cochain<ReducedWord>(2, 3.25);
    const std::vector<ReducedWord> rest{w("a"), w("b")};
    CHECK(fragment_average(c, ReducedWord{}, w("a"),
                           std::span<const ReducedWord>(rest.data(), 2)) == 3.25);

    // symmetric under swapping head and tail
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("ab")));
    Rng rng(31);
    const auto pool = ball(f2, 3);
    for (const auto& t : sample_tuples(pool, 4, 500, rng)) {
      const std::span<const ReducedWord> rest2(t.data() + 2, 2);
      CHECK(fragment_average(zeta, t[0], t[1], rest2) ==
            fragment_average(zeta, t[1], t[0], rest2));
    }
  }

  TEST_CASE("fragment average against a hand oracle") {
    // zeta(x, y) = [y = e] - [x = e] is the coboundary of the indicator of
    // the identity; averaging over the edge from e to a gives
    // [x1 = e] - 1/2
    const Cochain<ReducedWord> zeta(
        "d(ind_e)", 1,
        [](std::span<const ReducedWord> args) {
          return (args[1].is_identity() ? 1.0 : 0.0) -
                 (args[0].is_identity() ? 1.0 : 0.0);
        },
        Invariance::kSampled);
    const std::vector<ReducedWord> at_e{ReducedWord{}};
    const std::vector<ReducedWord> at_b{w("b")};
    CHECK(fragment_average(zeta, ReducedWord{}, w("a"),
                           std::span<const ReducedWord>(at_e.data(), 1)) == 0.5);
    CHECK(fragment_average(zeta, ReducedWord{}, w("a"),
                           std::span<const ReducedWord>(at_b.data(), 1)) == -0.5);
  }

  TEST_CASE("correction cochains vanish in degenerate situations") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));

    const auto zero2 = zero_cochain<ReducedWord>(2);
    const auto eta0 = eta_cochain(weight, pair, zero2);
    CHECK(eta0({w("a"), w("ab"), w("b")}) == 0.0);
    const auto nu0 = nu_cochain(weight, pair, zero2);
    CHECK(nu0({w("a"), w("ab"), w("b")}) == 0.0);
    const auto kappa0 = kappa_cochain(weight, pair, zero2, zero2);
    CHECK(kappa0({w("a"), w("ab"), w("b"), w("bb")}) == 0.0);

    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("aab")));
    const auto eta = eta_cochain(weight, pair, zeta);
    CHECK(eta({w("ab"), w("ab"), w("b")}) == 0.0);  // equal leading pair
    const auto nu = nu_cochain(weight, pair, zeta);
    CHECK(nu({w("b"), w("ab"), w("ab")}) == 0.0);  // equal trailing pair
    const auto kappa = kappa_cochain(weight, pair, zeta, zeta);
    CHECK(kappa({w("a"), w("ab"), w("ab"), w("b")}) == 0.0);  // equal middle pair

    CHECK_THROWS_AS(eta_cochain(weight, pair, constant_cochain<ReducedWord>(0, 1.0)),
                    InputError);
  }

  TEST_CASE("correction sum against independent re-summation") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("a")));
    const auto eta = eta_cochain(weight, pair, zeta);

    Rng rng(32);
    const auto pool = ball(f2, 2);
    for (const auto& t : sample_tuples(pool, 3, 400, rng)) {
      CHECK(eta({t[0], t[1], t[2]}) ==
            eta_by_hand(w("ab"), w("a"), t[0], t[1], t[2]));
    }
    // a specific hand-checkable tuple: the geodesic from e to "abab" carries
    // two supported windows
    const double direct = eta({ReducedWord{}, w("abab"), w("b")});
    CHECK(direct == eta_by_hand(w("ab"), w("a"), ReducedWord{}, w("abab"), w("b")));
  }

  TEST_CASE("mirrored correction relates to the forward one by reversal") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("aab")));
    const auto eta = eta_cochain(weight, pair, zeta);
    const auto nu = nu_cochain(weight, pair, zeta);
    Rng rng(33);
    const auto pool = ball(f2, 2);
    for (const auto& t : sample_tuples(pool, 3, 300, rng)) {
      // nu reads the path between the last two arguments
      const double direct = nu({t[0], t[1], t[2]});
      double expected = 0.0;
      const auto p = tree_geodesic(t[1], t[2]);
      for (const auto& a : fragments(p, 2)) {
        const double wa = weight.value(a);
        if (wa == 0.0) continue;
        const std::vector<ReducedWord> rest{t[0], t[1]};
        expected += wa * fragment_average(zeta, a.head(), a.tail(),
                                          std::span<const ReducedWord>(rest.data(), 2));
      }
      CHECK(direct == expected);
    }
  }

  TEST_CASE("bilinear correction against independent re-summation") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta1 = hat_coboundary(brooks_group_qm(f2, w("a")));
    const auto zeta2 = hat_coboundary(brooks_group_qm(f2, w("b")));
    const auto kappa = kappa_cochain(weight, pair, zeta1, zeta2);

    // slide a window over the word between the middle arguments and sum the
    // product of the two endpoint averages, straight from the definitions
    const auto by_hand = [](const ReducedWord& x1, const ReducedWord& x2,
                            const ReducedWord& x3, const ReducedWord& x4) {
      const ReducedWord diff = x2.inverse() * x3;
      double total = 0.0;
      for (std::size_t i = 0; i + 2 <= diff.length(); ++i) {
        const ReducedWord window = diff.subword(i, 2);
        double sign = 0.0;
        if (window == parse_word(f2, "ab")) sign = 1.0;
        if (window == parse_word(f2, "BA")) sign = -1.0;
        if (sign == 0.0) continue;
        const ReducedWord head = x2 * diff.prefix(i);
        const ReducedWord tail = x2 * diff.prefix(i + 2);
        const double avg1 = 0.5 * (dhat_by_hand(parse_word(f2, "a"), head, x1, x2) +
                                   dhat_by_hand(parse_word(f2, "a"), tail, x1, x2));
        const double avg2 = 0.5 * (dhat_by_hand(parse_word(f2, "b"), head, x3, x4) +
                                   dhat_by_hand(parse_word(f2, "b"), tail, x3, x4));
        total += sign * avg1 * avg2;
      }
      return total;
    };

    Rng rng(34);
    const auto pool = ball(f2, 2);
    for (const auto& t : sample_tuples(pool, 4, 300, rng)) {
      // kappa reads (x1, x2, x3, x4) with the path between x2 and x3 and the
      // averages against (x1, x2) and (x3, x4)
      CHECK(kappa({t[0], t[1], t[2], t[3]}) == by_hand(t[0], t[1], t[2], t[3]));
    }
  }

  TEST_CASE("stability holds vacuously for identity bijections") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("aab")));
    StabilityProbe<ReducedWord> probe;
    probe.pairs = {{ReducedWord{}, w("abab")}};
    probe.trailing = {{w("a"), w("b")}};
    CHECK(phi_stability_check(zeta, pair, weight, probe).stable);
  }

  TEST_CASE("left cup primitive on the counting instance") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("aab")));
    CertificateOptions options;
    options.samples = 300;
    options.seed = 41;
    options.tolerance = 0.0;
    const auto cert =
        cup_primitive_left(weight, pair, zeta, ball(f2, 3), options);
    CHECK(cert.pass);
    CHECK(cert.max_coboundary_residual == 0.0);
    CHECK(cert.max_triangle_gap == 0.0);
    CHECK(cert.zeta_cocycle_residual == 0.0);
    CHECK(cert.analytic_bound == doctest::Approx(6.0 * 12.0));
    CHECK(cert.sampled_norm <= cert.analytic_bound);
  }

  TEST_CASE("right cup primitive mirrors the left one") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("aab")));
    CertificateOptions options;
    options.samples = 300;
    options.seed = 42;
    const auto cert =
        cup_primitive_right(weight, pair, zeta, ball(f2, 3), options);
    CHECK(cert.pass);
    CHECK(cert.max_coboundary_residual == 0.0);
    CHECK(cert.max_triangle_gap == 0.0);
  }

  TEST_CASE("cup primitives of the zero cochain vanish") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zero2 = zero_cochain<ReducedWord>(2);
    CertificateOptions options;
    options.samples = 50;
    options.seed = 43;
    const auto cert = cup_primitive_left(weight, pair, zero2, ball(f2, 2), options);
    CHECK(cert.pass);
    CHECK(cert.sampled_norm == 0.0);
    CHECK(cert.analytic_bound == 0.0);
  }

  TEST_CASE("degree zero reduces to the cup identity and the defect bound") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto one = constant_cochain<ReducedWord>(0, 1.0);
    const auto fw = weight_qm_cochain(weight, pair);
    const auto dfw = coboundary(fw);
    const auto prod = cup(one, dfw);
    Rng rng(44);
    const auto pool = ball(f2, 3);
    double worst = 0.0;
    for (const auto& t : sample_tuples(pool, 3, 500, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(prod(args) == dfw(args));
      worst = std::max(worst, std::abs(dfw(args)));
    }
    CHECK(worst <= 6.0);  // 3 (R+1) c with R = 1, c = 1
  }

  TEST_CASE("kappa coboundary identity is exact") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta1 = hat_coboundary(brooks_group_qm(f2, w("aab")));
    const auto zeta2 = hat_coboundary(brooks_group_qm(f2, w("bba")));
    Rng rng(45);
    const auto pool = ball(f2, 3);
    for (const auto& t : sample_tuples(pool, 5, 150, rng)) {
      CHECK(kappa_coboundary_identity(weight, pair, zeta1, zeta2,
                                      std::span<const ReducedWord>(t.data(), 5)) ==
            0.0);
    }
    // degenerate tuple
    const std::vector<ReducedWord> same(5, w("ab"));
    CHECK(kappa_coboundary_identity(weight, pair, zeta1, zeta2,
                                    std::span<const ReducedWord>(same.data(), 5)) ==
          0.0);
  }

  TEST_CASE("triple product witness on the counting instance") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zeta1 = hat_coboundary(brooks_group_qm(f2, w("aab")));
    const auto zeta2 = hat_coboundary(brooks_group_qm(f2, w("bba")));
    CertificateOptions options;
    options.samples = 120;
    options.seed = 46;
    const auto cert =
        massey_witness(weight, pair, zeta1, zeta2, ball(f2, 3), options);
    CHECK(cert.pass);
    CHECK(cert.max_kappa_identity_residual == 0.0);
    CHECK(cert.max_coboundary_residual == 0.0);
    CHECK(cert.max_leibniz_residual == 0.0);
    CHECK(cert.max_triangle_gap == 0.0);
    CHECK(cert.max_beta1_residual == 0.0);
    CHECK(cert.max_beta2_residual == 0.0);
    CHECK(cert.analytic_bound == doctest::Approx(6.0 * 12.0 * 12.0));
    CHECK(cert.sampled_norm <= cert.analytic_bound);

    // swapping the outer classes certifies the mirrored product
    const auto mirrored =
        massey_witness(weight, pair, zeta2, zeta1, ball(f2, 3), options);
    CHECK(mirrored.pass);
  }

  TEST_CASE("zero outer class trivializes the triple product") {
    const auto weight = to_real(brooks_weight(w("ab")));
    const auto pair = brooks_pair(w("ab"));
    const auto zero2 = zero_cochain<ReducedWord>(2);
    const auto zeta2 = hat_coboundary(brooks_group_qm(f2, w("bba")));
    CertificateOptions options;
    options.samples = 40;
    options.seed = 47;
    const auto cert = massey_witness(weight, pair, zero2, zeta2, ball(f2, 2), options);
    CHECK(cert.pass);
    CHECK(cert.sampled_norm == 0.0);
  }
}
