#include <cmath>

#include "doctest.h"
#include "wqm/brooks_delta.hpp"
#include "wqm/cayley_tree.hpp"
#include "wqm/cochain.hpp"
#include "wqm/sampling.hpp"

using namespace wqm;

namespace {

const Alphabet f2(2);

ReducedWord w(const std::string& text) { return parse_word(f2, text); }

// a bounded real-valued cochain with no special structure
Cochain<ReducedWord> wobble(int degree) {
  return Cochain<ReducedWord>(
      "wobble", degree,
      [](std::span<const ReducedWord> args) {
        double x = 0.0;
        for (std::size_t i = 0; i < args.size(); ++i) {
          x += std::sin(static_cast<double>((i + 1) * (args[i].length() + 1)));
        }
        return x / 3.0;
      },
      Invariance::kSampled);
}

}  // namespace

TEST_SUITE("cochain") {
  TEST_CASE("coboundary of a constant") {
    const auto c = constant_cochain<ReducedWord>(0, 5.0);
    const auto d = coboundary(c);
    CHECK(d({w("a"), w("b")}) == 0.0);
    const auto z = zero_cochain<ReducedWord>(1);
    CHECK(coboundary(z)({w("a"), w("b"), w("ab")}) == 0.0);
  }

  TEST_CASE("coboundary squares to zero") {
    Rng rng(21);
    const auto pool = ball(f2, 3);

    // integer-valued: exact
    const auto zeta = hat_coboundary(brooks_group_qm(f2, w("ab")));
    const auto dd_int = coboundary(coboundary(zeta));
    for (const auto& t : sample_tuples(pool, 5, 2000, rng)) {
      CHECK(dd_int(std::span<const ReducedWord>(t.data(), t.size())) == 0.0);
    }

    // real-valued: within 1e-9
    const auto dd_real = coboundary(coboundary(wobble(1)));
    for (const auto& t : sample_tuples(pool, 4, 2000, rng)) {
      CHECK(std::abs(dd_real(std::span<const ReducedWord>(t.data(), t.size()))) <=
            1e-9);
    }
  }

  TEST_CASE("cup with zero and with the constant one") {
    const auto g = hat_coboundary(brooks_group_qm(f2, w("ab")));
    const auto zero = zero_cochain<ReducedWord>(1);
    const auto prod = cup(g, zero);
    CHECK(prod.degree() == 3);
    CHECK(prod({w("a"), w("b"), w("ab"), w("aB")}) == 0.0);

    const auto one = constant_cochain<ReducedWord>(0, 1.0);
    const auto same = cup(one, g);
    Rng rng(22);
    for (const auto& t : sample_tuples(ball(f2, 2), 3, 200, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(same(args) == g(args));
    }
  }

  TEST_CASE("leibniz rule") {
    Rng rng(23);
    const auto pool = ball(f2, 2);

    // integer-valued pair: exact equality
    const auto f = hat_cochain(brooks_group_qm(f2, w("ab")));
    const auto g = hat_cochain(brooks_group_qm(f2, w("ba")));
    const auto lhs = coboundary(cup(f, g));
    const auto rhs = sum(cup(coboundary(f), g), scaled(-1.0, cup(f, coboundary(g))));
    for (const auto& t : sample_tuples(pool, 4, 2000, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(lhs(args) == rhs(args));
    }

    // real-valued pair, even degree front factor: within 1e-9
    const auto a = wobble(2);
    const auto b = wobble(1);
    const auto lhs2 = coboundary(cup(a, b));
    const auto rhs2 =
        sum(cup(coboundary(a), b), cup(a, coboundary(b)));  // (-1)^2 = +1
    for (const auto& t : sample_tuples(pool, 5, 1000, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(std::abs(lhs2(args) - rhs2(args)) <= 1e-9);
    }
  }

  TEST_CASE("hat form") {
    const auto phi = brooks_group_qm(f2, w("ab"));
    const auto h = hat_cochain(phi);
    for (const auto& g : ball(f2, 3)) {
      CHECK(h({ReducedWord{}, g}) == phi(g));
    }
    // left invariance by construction, still asserted
    Rng rng(24);
    const auto pool = ball(f2, 2);
    for (const auto& t : sample_tuples(pool, 3, 300, rng)) {
      CHECK(h({t[0] * t[1], t[0] * t[2]}) == h({t[1], t[2]}));
    }
  }

  TEST_CASE("hat coboundary of a homomorphism vanishes") {
    const auto phi = brooks_group_qm(f2, w("a"));  // exponent sum
    const auto d = hat_coboundary(phi);
    const auto pool = ball(f2, 3);
    for (const auto& t : all_triples(pool)) {
      if (d({t[0], t[1], t[2]}) != 0.0) {
        FAIL("nonzero at a triple");
        return;
      }
    }
  }

  TEST_CASE("hat coboundary respects the defect bound") {
    const auto phi = brooks_group_qm(f2, w("ab"));
    const auto d = hat_coboundary(phi);
    double worst = 0.0;
    for (const auto& t : all_triples(ball(f2, 2))) {
      worst = std::max(worst, std::abs(d({t[0], t[1], t[2]})));
    }
    CHECK(worst <= phi.defect_bound);
  }

  TEST_CASE("invariance residual of a built cochain is zero") {
    const auto d = hat_coboundary(brooks_group_qm(f2, w("aab")));
    std::vector<std::function<ReducedWord(const ReducedWord&)>> gens;
    for (const auto& g : left_translation_action(f2).generators) gens.push_back(g.map);
    Rng rng(25);
    const auto tuples = sample_tuples(ball(f2, 2), 3, 400, rng);
    CHECK(invariance_residual(d, gens, tuples) == 0.0);
  }

  TEST_CASE("orbit pullback") {
    const auto zero = zero_cochain<ReducedWord>(2);
    const std::function<ReducedWord(const ReducedWord&, const ReducedWord&)> apply =
        [](const ReducedWord& g, const ReducedWord& v) { return g * v; };
    const auto back = orbit_pullback<ReducedWord, ReducedWord>(zero, apply, w("a"));
    CHECK(back({w("a"), w("b"), w("ab")}) == 0.0);

    // pulling back along the identity orbit point changes nothing for
    // left-invariant cochains
    const auto f = hat_coboundary(brooks_group_qm(f2, w("ab")));
    const auto pulled = orbit_pullback<ReducedWord, ReducedWord>(f, apply, ReducedWord{});
    Rng rng(26);
    const auto pool = ball(f2, 2);
    for (const auto& t : sample_tuples(pool, 3, 300, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(pulled(args) == f(args));
    }

    // compatible with products
    const auto g2 = hat_cochain(brooks_group_qm(f2, w("b")));
    const auto s = w("ab");
    const auto left = orbit_pullback<ReducedWord, ReducedWord>(cup(f, g2), apply, s);
    const auto right = cup(orbit_pullback<ReducedWord, ReducedWord>(f, apply, s),
                           orbit_pullback<ReducedWord, ReducedWord>(g2, apply, s));
    for (const auto& t : sample_tuples(pool, 4, 1000, rng)) {
      const std::span<const ReducedWord> args(t.data(), t.size());
      CHECK(left(args) == right(args));
    }
  }

  TEST_CASE("sampled sup norm") {
    const auto zero = zero_cochain<ReducedWord>(1);
    const auto c = constant_cochain<ReducedWord>(1, -2.5);
    Rng rng(27);
    const auto tuples = sample_tuples(ball(f2, 2), 2, 100, rng);
    CHECK(sup_norm_sampled(zero, tuples) == 0.0);
    CHECK(sup_norm_sampled(c, tuples) == 2.5);

    const auto d = hat_coboundary(brooks_group_qm(f2, w("ab")));
    const auto triples = sample_tuples(ball(f2, 3), 3, 2000, rng);
    CHECK(sup_norm_sampled(d, triples) <= 6.0);
  }

  TEST_CASE("table cochains extend by translation") {
    // one row pinned at the identity, queried at a translate
    const auto t = table_cochain(
        1, {{{ReducedWord{}, w("a")}, 2.0}, {{ReducedWord{}, w("b")}, -1.0}});
    CHECK(t({ReducedWord{}, w("a")}) == 2.0);
    CHECK(t({w("b"), w("ba")}) == 2.0);  // translate of (e, a) by b
    CHECK(t({w("a"), w("ab")}) == -1.0);  // translate of (e, b) by a
    CHECK(t({ReducedWord{}, w("bb")}) == 0.0);
    CHECK_THROWS_AS(table_cochain(2, {{{w("a")}, 1.0}}), InputError);
  }

  TEST_CASE("arity and norm guards") {
    const auto c = constant_cochain<ReducedWord>(1, 1.0);
    CHECK_THROWS_AS(c({w("a")}), InputError);
    const Cochain<ReducedWord> liar(
        "liar", 0, [](std::span<const ReducedWord>) { return 3.0; },
        Invariance::kSampled, 1.0);
    CHECK_THROWS_AS(liar({w("a")}), InputError);
  }
}
