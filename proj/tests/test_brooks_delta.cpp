#include <algorithm>

#include "doctest.h"
#include "wqm/brooks_delta.hpp"
#include "wqm/sampling.hpp"

using namespace wqm;

namespace {

const Alphabet f2(2);

ReducedWord w(const std::string& text) { return parse_word(f2, text); }

}  // namespace

TEST_SUITE("brooks") {
  TEST_CASE("pattern sign") {
    CHECK(pattern_sign(w("ab"), w("ab")) == 1);
    CHECK(pattern_sign(w("ab"), w("BA")) == -1);
    CHECK(pattern_sign(w("ab"), w("aa")) == 0);
  }

  TEST_CASE("sliding window count") {
    CHECK(brooks_count(w("ab"), w("ab")) == 1);
    CHECK(brooks_count(w("ab"), w("abab")) == 2);
    CHECK(brooks_count(w("ab"), ReducedWord{}) == 0);
    CHECK(brooks_count(w("ab"), w("BA")) == -1);
    CHECK(brooks_count(w("aa"), w("aaa")) == 2);  // overlaps count
    CHECK(brooks_count(w("aab"), w("aab")) == 1);
    CHECK_THROWS_AS(brooks_count(ReducedWord{}, w("a")), InputError);
  }

  TEST_CASE("weight evaluates the label product of linked tuples") {
    const auto weight = brooks_weight(w("ab"));
    const EdgeTuple<ReducedWord> linked{{ReducedWord{}, w("a")}, {w("a"), w("ab")}};
    CHECK(weight(linked) == 1);
    CHECK(weight(reversed_tuple(linked)) == -1);
    // a gap between the edges forces the value to zero
    const EdgeTuple<ReducedWord> gapped{{ReducedWord{}, w("a")}, {w("b"), w("ba")}};
    CHECK(weight(gapped) == 0);
    CHECK_FALSE(weight.in_support(gapped));
    // linked but spelling something else
    const EdgeTuple<ReducedWord> other{{ReducedWord{}, w("a")}, {w("a"), w("aa")}};
    CHECK(weight(other) == 0);
    // not an edge of the tree at all
    const EdgeTuple<ReducedWord> bogus{{ReducedWord{}, w("ab")}, {w("ab"), w("a")}};
    CHECK_THROWS_AS(weight(bogus), InputError);
  }

  TEST_CASE("fragment sums reproduce the sliding window count") {
    for (const char* pattern : {"a", "ab", "aab"}) {
      const auto omega = w(pattern);
      const auto f = weight_qm(brooks_weight(omega), brooks_pair(omega));
      for (const auto& g : ball(f2, 5, 8)) {
        CHECK(f(ReducedWord{}, g) == brooks_count(omega, g));
      }
    }
  }

  TEST_CASE("group quasimorphism carries the defect bound") {
    const auto phi = brooks_group_qm(f2, w("aab"));
    CHECK(phi.defect_bound == doctest::Approx(12.0));
    CHECK(phi(w("aab")) == doctest::Approx(1.0));
    const auto single = brooks_group_qm(f2, w("a"));
    CHECK(single.defect_bound == 0.0);
  }
}

TEST_SUITE("delta") {
  TEST_CASE("letter decomposition axioms on a ball") {
    const auto delta = DeltaDecomposition::letters(f2);
    const auto report = verify_delta_axioms(delta, ball(f2, 4), f2);
    CHECK(report.all_pass());
    CHECK(report.empirical_r == 0);
  }

  TEST_CASE("letter paths are the tree geodesics from the identity") {
    const auto delta = DeltaDecomposition::letters(f2);
    const auto family = delta_path_family(delta);
    for (const auto& g : ball(f2, 5, 8)) {
      CHECK(family.first_path(ReducedWord{}, g) == tree_geodesic(ReducedWord{}, g));
    }
  }

  TEST_CASE("syllable decomposition axioms on a ball") {
    const auto delta = DeltaDecomposition::syllables(f2);
    const auto dec = delta.decompose(w("aabba"));
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == w("aa"));
    CHECK(dec[1] == w("bb"));
    CHECK(dec[2] == w("a"));
    const auto report = verify_delta_axioms(delta, ball(f2, 4), f2);
    CHECK(report.concatenation.pass);
    CHECK(report.inversion.pass);
    CHECK(report.subproducts.pass);
    CHECK(report.triangles.pass);
    CHECK(report.empirical_r <= delta.declared_r());
  }

  TEST_CASE("breaking subproduct closure is detected") {
    // letters everywhere except one word that is kept whole
    const auto broken = DeltaDecomposition(
        "broken",
        [](const ReducedWord& g) {
          if (g == parse_word(Alphabet(2), "ab")) return PieceSequence{g};
          PieceSequence out;
          for (std::size_t i = 0; i < g.length(); ++i) out.push_back(g.subword(i, 1));
          return out;
        },
        [](const ReducedWord& p) {
          return p.length() == 1 || p == parse_word(Alphabet(2), "ab");
        },
        0);
    const auto report = verify_delta_axioms(broken, ball(f2, 3), f2);
    CHECK_FALSE(report.subproducts.pass);
    CHECK_FALSE(report.subproducts.counterexample.empty());
  }

  TEST_CASE("triangles of the letter decomposition are exact") {
    const auto delta = DeltaDecomposition::letters(f2);
    Rng rng(13);
    const auto pool = ball(f2, 4);
    for (const auto& t : sample_triples(pool, 150, rng)) {
      const auto witness = delta_triangle_witness(delta, t[0], t[1], t[2]);
      CHECK(witness.max_r_length() == 0);
      CHECK(witness_valid(witness, delta_path_family(delta), 0));
    }
  }

  TEST_CASE("syllable triangle witnesses stay within the declared constant") {
    const auto delta = DeltaDecomposition::syllables(f2);
    Rng rng(14);
    const auto pool = ball(f2, 4);
    for (const auto& t : sample_triples(pool, 100, rng)) {
      const auto witness = delta_triangle_witness(delta, t[0], t[1], t[2]);
      CHECK(witness.max_r_length() <= delta.declared_r());
      CHECK(witness_valid(witness, delta_path_family(delta), delta.declared_r()));
    }
  }

  TEST_CASE("decomposition paths through the generic witness search") {
    const auto delta = DeltaDecomposition::letters(f2);
    const auto pair = delta_pair(delta);
    const auto found = qmp_witness(pair, w("ab"), w("b"), w("Ba"), 0);
    REQUIRE(found.has_value());
    CHECK(found->max_r_length() == 0);
  }

  TEST_CASE("piece weights reject inconsistent values") {
    CHECK_THROWS_AS(PieceWeight::from_values({{w("a"), 1.0}, {w("A"), 1.0}}),
                    InputError);
    const auto lambda = PieceWeight::from_values({{w("a"), 1.0}});
    CHECK(lambda.value(w("a")) == 1.0);
    CHECK(lambda.value(w("A")) == -1.0);
    CHECK(lambda.value(w("b")) == 0.0);
    CHECK(lambda.norm_bound() == 1.0);
  }

  TEST_CASE("zero piece weight gives the zero quasimorphism") {
    const auto delta = DeltaDecomposition::letters(f2);
    const auto qm = delta_qm(PieceWeight{}, delta);
    for (const auto& g : ball(f2, 3)) CHECK(qm.direct(g) == 0.0);
  }

  TEST_CASE("letter indicator gives the exponent sum") {
    const auto delta = DeltaDecomposition::letters(f2);
    const auto lambda = PieceWeight::from_values({{w("a"), 1.0}});
    const auto qm = delta_qm(lambda, delta);
    CHECK(qm.direct(w("abaB")) == doctest::Approx(2.0));
    CHECK(qm.direct(w("A")) == doctest::Approx(-1.0));

    // the weight route agrees with the direct sum and is antisymmetric
    const auto pool = ball(f2, 5, 8);
    for (const auto& g : pool) {
      CHECK(qm.as_action(ReducedWord{}, g) == doctest::Approx(qm.direct(g)));
      CHECK(qm.direct(g.inverse()) == doctest::Approx(-qm.direct(g)));
    }

    // a homomorphism has zero defect
    ActionQuasimorphism<ReducedWord, double> f = qm.as_action;
    CHECK(defect_over_points(f, ball(f2, 3)) == 0.0);
  }

  TEST_CASE("syllable weight through the action route") {
    const auto delta = DeltaDecomposition::syllables(f2);
    const auto lambda = PieceWeight::from_values({{w("aa"), 0.5}, {w("b"), 0.25}});
    const auto qm = delta_qm(lambda, delta);
    Rng rng(15);
    for (const auto& t : sample_tuples(ball(f2, 4), 2, 120, rng)) {
      CHECK(qm.as_action(t[0], t[1]) ==
            doctest::Approx(qm.direct(t[0].inverse() * t[1])));
    }
  }
}
