#include "kma/embedding.hpp"
#include "kma/random.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace kma;

namespace {
double diff(const CartanVector& a, const CartanVector& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}
}  // namespace

TEST_SUITE("embedding") {
  TEST_CASE("simplex refs") {
    const GCM f = fixtures::feingold_frenkel();
    const SimplexRef s{1, WeylWord{{1, 2}}, {}};
    CHECK(involution_image(involution_image(s)).sign == 1);
    CHECK(involution_image(SimplexRef{1, {}, {}}).sign == -1);
    CHECK(same_simplex(f, SimplexRef{1, WeylWord{{1}}, {1}}, SimplexRef{1, {}, {1}}));
    CHECK(!same_simplex(f, SimplexRef{1, WeylWord{{2}}, {1}}, SimplexRef{1, {}, {1}}));
    CHECK(same_simplex(f, SimplexRef{1, WeylWord{{1, 3}}, {1, 3}}, SimplexRef{1, WeylWord{{3}}, {3, 1}}));
    CHECK(!same_simplex(f, SimplexRef{1, {}, {}}, SimplexRef{-1, {}, {}}));
  }

  TEST_CASE("fundamental regions") {
    const CartanData d(GCM::rank2(3, 3));
    const auto arc = fundamental_chamber_region(d, 1, -2.5);
    REQUIRE(arc.vertices.size() == 2);
    // Vertex k lies on every wall except wall k: (−2, −3) is on wall 1, (−3, −2) on wall 2.
    CHECK(diff(arc.vertices[0], CartanVector{{-2, -3}, Basis::CompactZ}) < 1e-12);
    CHECK(diff(arc.vertices[1], CartanVector{{-3, -2}, Basis::CompactZ}) < 1e-12);
    const auto neg = fundamental_chamber_region(d, -1, -2.5);
    CHECK(diff(neg.vertices[0], -arc.vertices[0]) == 0);

    const CartanData f(fixtures::feingold_frenkel());
    const auto tri = fundamental_chamber_region(f, 1, -1);
    CHECK(tri.ideal_count() == 1);
    auto angles = vertex_angles(f, tri);
    std::sort(angles.begin(), angles.end());
    CHECK(angles[0] == 0);
    CHECK(angles[1] == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));
    CHECK(angles[2] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(region_volume(f, tri) == doctest::Approx(std::numbers::pi / 6).epsilon(1e-12));
    const CartanData i(fixtures::ideal_triangle());
    const auto ideal = fundamental_chamber_region(i, 1, -1);
    CHECK(ideal.ideal_count() == 3);
    CHECK(region_volume(i, ideal) == doctest::Approx(std::numbers::pi));
    CHECK_THROWS_AS(fundamental_chamber_region(CartanData(fixtures::e10()), 1, -1), Error);
    CHECK_THROWS_AS(fundamental_chamber_region(d, 1, 1), Error);
  }

  TEST_CASE("tessellate") {
    const CartanData d(GCM::rank2(3, 3));
    CHECK(tessellate(d, 1, -1, 0).size() == 1);
    const auto arcs = tessellate(d, 1, -1, 12);
    CHECK(arcs.size() == 13);
    for (const auto& a : arcs) CHECK(region_volume(d, a) == doctest::Approx(region_volume(d, arcs[0])).epsilon(1e-12));
    const CartanData f(fixtures::feingold_frenkel());
    const auto cells = tessellate(f, 1, -1, 4);
    CHECK(cells.size() == elements_up_to_length(f.matrix(), 4).size());
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) CHECK(interiors_disjoint(f, cells[a], cells[b]));
  }

  TEST_CASE("neighbors share a facet") {
    const CartanData f(fixtures::feingold_frenkel());
    const auto base = fundamental_chamber_region(f, 1, -1);
    for (std::size_t j = 1; j <= 3; ++j) {
      const auto other = chamber_region(f, base, WeylWord{{j}});
      std::size_t shared = 0;
      for (std::size_t k = 0; k < 3; ++k)
        if (k != j - 1) {
          CHECK(diff(base.vertices[k], other.vertices[k]) < 1e-12);
          ++shared;
        }
      CHECK(shared == 2);
    }
  }

  TEST_CASE("barycentric") {
    const CartanData d(GCM::rank2(3, 3));
    const auto arc = fundamental_chamber_region(d, 1, -1);
    const auto mid = embed_point(d, arc, {0.5, 0.5});
    CHECK(hyperbolic_distance(d, mid.point, arc.vertices[0], -1) ==
          doctest::Approx(hyperbolic_distance(d, mid.point, arc.vertices[1], -1)).epsilon(1e-10));
    const auto v0 = embed_point(d, arc, {1, 0});
    CHECK(diff(v0.point, arc.vertices[0]) == 0);
    const auto unit = evaluate_barycentric(d, arc, arc.vertices[1]);
    CHECK(unit[0] == doctest::Approx(0));
    CHECK(unit[1] == doctest::Approx(1));
    CHECK_THROWS_AS(embed_point(d, arc, {-0.5, 1.5}), Error);
    CHECK_THROWS_AS(evaluate_barycentric(d, arc, CartanVector{{-1, -1}, Basis::CompactZ}), Error);
    const auto next = chamber_region(d, arc, WeylWord{{1, 2}});
    CHECK_THROWS_AS(evaluate_barycentric(d, arc, next.vertices[0]), Error);

    Rng rng(61);
    for (const GCM& a : {fixtures::feingold_frenkel(), fixtures::ideal_triangle()}) {
      const CartanData g(a);
      const auto tri = fundamental_chamber_region(g, 1, -2);
      for (int c = 0; c < 100; ++c) {
        std::vector<double> l{rng.uniform(), rng.uniform(), rng.uniform()};
        const double s = l[0] + l[1] + l[2];
        for (double& x : l) x /= s;
        const auto p = embed_point(g, tri, l);
        const auto back = evaluate_barycentric(g, tri, p.point);
        for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(back[k] - l[k]) < 1e-8);
      }
    }
  }

  TEST_CASE("involution and equivariance") {
    const CartanData f(fixtures::feingold_frenkel());
    Rng rng(67);
    for (const auto& w : elements_up_to_length(f.matrix(), 4)) {
      std::vector<double> l{rng.uniform() + 0.1, rng.uniform() + 0.1, rng.uniform() + 0.1};
      const auto plus = embed(f, {SimplexRef{1, w, {}}, l}, -1);
      const auto minus = embed(f, {SimplexRef{-1, w, {}}, l}, -1);
      CHECK(diff(plus.point, -minus.point) <= 1e-12);
      const auto base = embed(f, {SimplexRef{1, {}, {}}, l}, -1);
      CHECK(diff(plus.point, act_on_cartan(f.matrix(), w, base.point)) <= 1e-10 * std::max(1.0, std::abs(plus.point[0])));
    }
  }

  TEST_CASE("disk projection") {
    const CartanData f(fixtures::feingold_frenkel());
    const auto frame = disk_frame(f);
    const auto tri = fundamental_chamber_region(f, 1, -1);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto p = project_to_disk(f, frame, tri.vertices[k], tri.ideal[k]);
      const double r2 = p[0] * p[0] + p[1] * p[1];
      if (tri.ideal[k])
        CHECK(r2 == doctest::Approx(1).epsilon(1e-12));
      else
        CHECK(r2 < 1);
    }
    const auto samples = geodesic_samples(f, tri.vertices[0], tri.ideal[0], tri.vertices[2], tri.ideal[2], -1, 32);
    CHECK(samples.size() == 33);
  }
}
