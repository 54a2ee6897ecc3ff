// Path-choice independence of the correction cochains: rebuilding the same
// geodesic family with a different canonical path must not change any value,
// provided the cochain respects the fragment bijections.

#include <algorithm>
#include <set>

#include "doctest.h"
#include "wqm/brooks_delta.hpp"
#include "wqm/complexes.hpp"
#include "wqm/median.hpp"
#include "wqm/sampling.hpp"
#include "wqm/vanishing.hpp"

using namespace wqm;

namespace {

// same geodesics, opposite enumeration order, same bijection rule
CoherentPair<int> reversed_order_pair(const std::shared_ptr<const MedianComplex>& cx,
                                      int ell) {
  CoherentPair<int> base = median_geodesic_pair(cx, ell);
  PathFamily<int> flipped(
      "median-geodesics-flipped",
      [cx](const int& x, const int& y) {
        auto ps = cx->graph().all_geodesics(x, y);
        std::reverse(ps.begin(), ps.end());
        return ps;
      },
      base.family.qmp_constant());
  return CoherentPair<int>{flipped, base.phi};
}

// constant on grid columns, hence stable across the fragment bijections of
// column chains
Cochain<int> column_cochain(int degree) {
  return Cochain<int>(
      "column", degree,
      [](std::span<const int> args) {
        double x = 0.0;
        for (std::size_t i = 0; i < args.size(); ++i) {
          x += static_cast<double>((i + 1) * static_cast<std::size_t>(args[i] % 3));
        }
        return x;
      },
      Invariance::kSampled);
}

}  // namespace

TEST_SUITE("path-choice") {
  TEST_CASE("fragment bijections are bijections") {
    const auto cx = build_complex("grid:3x3").complex;
    const auto pair = median_geodesic_pair(cx, 2);
    const int n = cx->graph().num_vertices();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto paths = pair.family.paths(x, y);
        for (const auto& p : paths) {
          for (const auto& q : paths) {
            std::set<std::vector<int>> images;
            for (const auto& a : fragments(p, 2)) {
              images.insert(pair.phi.map(p, q, a).indices);
            }
            CHECK(images.size() == fragments(q, 2).size());
            // identity on the diagonal
            if (p == q) {
              for (const auto& a : fragments(p, 2)) {
                CHECK(pair.phi.map(p, p, a).indices == a.indices);
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("weight sums do not depend on the canonical path") {
    const auto cx = build_complex("grid:3x3").complex;
    const HSegment s{cx->dual_halfspace(0, 1), cx->dual_halfspace(1, 2)};
    const auto mw = median_weight(cx, s, GraphAction<int>{});
    const auto flipped = reversed_order_pair(cx, 2);
    const auto f1 = weight_qm(mw.weight, mw.pair);
    const auto f2 = weight_qm(mw.weight, flipped);
    for (int x = 0; x < 9; ++x) {
      for (int y = 0; y < 9; ++y) CHECK(f1(x, y) == f2(x, y));
    }
  }

  TEST_CASE("correction cochains do not depend on the canonical path") {
    const auto cx = build_complex("grid:3x3").complex;
    const HSegment s{cx->dual_halfspace(0, 1), cx->dual_halfspace(1, 2)};
    const auto mw = median_weight(cx, s, GraphAction<int>{});
    const auto weight = to_real(mw.weight);
    const auto flipped = reversed_order_pair(cx, 2);
    const auto zeta = column_cochain(2);

    const auto eta1 = eta_cochain(weight, mw.pair, zeta);
    const auto eta2 = eta_cochain(weight, flipped, zeta);
    const auto nu1 = nu_cochain(weight, mw.pair, zeta);
    const auto nu2 = nu_cochain(weight, flipped, zeta);
    const auto kappa1 = kappa_cochain(weight, mw.pair, zeta, zeta);
    const auto kappa2 = kappa_cochain(weight, flipped, zeta, zeta);

    Rng rng(61);
    const auto pool = vertex_pool(cx->graph());
    for (const auto& t : sample_tuples(pool, 3, 400, rng)) {
      const std::span<const int> args(t.data(), t.size());
      CHECK(eta1(args) == eta2(args));
      CHECK(nu1(args) == nu2(args));
    }
    for (const auto& t : sample_tuples(pool, 4, 400, rng)) {
      const std::span<const int> args(t.data(), t.size());
      CHECK(kappa1(args) == kappa2(args));
    }
  }

  TEST_CASE("correction cochains respect the vertex symmetries") {
    // half-turn of the square grid: a genuine automorphism
    const auto cx = build_complex("grid:3x3").complex;
    GraphAction<int> half_turn;
    half_turn.generators.push_back({"r2", [](const int& v) { return 8 - v; }});
    const HSegment s{cx->dual_halfspace(0, 1), cx->dual_halfspace(1, 2)};
    const auto mw = median_weight(cx, s, half_turn);
    const auto weight = to_real(mw.weight);

    // invariant under the half turn: reads distances to the centre column
    const auto zeta = Cochain<int>(
        "centre", 1,
        [](std::span<const int> args) {
          double x = 0.0;
          for (const auto& v : args) x += std::abs(v % 3 - 1);
          return x;
        },
        Invariance::kSampled);
    const auto eta = eta_cochain(weight, mw.pair, zeta);

    std::vector<std::function<int(const int&)>> gens{half_turn.generators[0].map};
    Rng rng(62);
    const auto tuples = sample_tuples(vertex_pool(cx->graph()), 2, 300, rng);
    CHECK(invariance_residual(eta, gens, tuples) == 0.0);
  }

  TEST_CASE("tree triples admit width-0 witnesses through the lazy family") {
    const Alphabet f2(2);
    const auto pair = tree_coherent_pair(2);
    Rng rng(63);
    const auto pool = ball(f2, 3);
    const auto triples = sample_triples(pool, 150, rng);
    CHECK(verify_qmp(pair, 0, triples).pass);
    CHECK(verify_qmp(pair, 1, triples).pass);
  }
}
