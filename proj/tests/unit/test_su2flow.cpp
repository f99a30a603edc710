#include "kma/lorentz.hpp"
#include "kma/random.hpp"
#include "kma/su2flow.hpp"
#include "kma/weyl.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace kma;

namespace {
constexpr double pi = std::numbers::pi;

SliceVector sv(std::size_t i, std::vector<double> z, double x = 0, double y = 0) { return SliceVector{i, std::move(z), x, y}; }
}  // namespace

TEST_SUITE("su2flow") {
  TEST_CASE("exp_rotation basics") {
    const GCM a = GCM::rank2(3, 3);
    const SliceVector v = sv(1, {0.3, -0.7}, 0.2, 0.9);
    CHECK(max_abs_difference(exp_rotation(a, 1, 0, 0, v), v) == 0);
    const SliceVector z1 = exp_rotation(a, 1, pi, 0, sv(1, {1, 0}));
    CHECK(max_abs_difference(z1, sv(1, {-1, 0})) < 1e-14);
    CHECK_THROWS_AS(exp_rotation(a, 2, 1, 0, v), Error);
    CHECK_THROWS_AS(exp_rotation(a, 1, NAN, 0, v), Error);
  }

  TEST_CASE("closed form against series") {
    Rng rng(53);
    for (const GCM& a : {GCM::rank2(3, 3), GCM::rank2(2, 3), fixtures::feingold_frenkel()}) {
      const CartanData d(a);
      for (int c = 0; c < 100; ++c) {
        const auto i = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(a.rank())));
        SliceVector v = sv(i, {});
        for (std::size_t j = 0; j < a.rank(); ++j) v.z.push_back(rng.uniform(-1, 1));
        v.x = rng.uniform(-1, 1);
        v.y = rng.uniform(-1, 1);
        const double s = rng.uniform(-3, 3), t = rng.uniform(-3, 3);
        const SliceVector e = exp_rotation(a, i, s, t, v);
        CHECK(max_abs_difference(e, series_oracle(a, i, s, t, v)) < 1e-10);
        CHECK(max_abs_difference(exp_rotation(a, i, -s, -t, e), v) < 1e-10);
        CHECK(slice_form(d, e, e) == doctest::Approx(slice_form(d, v, v)).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("series oracle") {
    const GCM a = GCM::rank2(3, 3);
    const SliceVector v = sv(1, {0, 1});
    CHECK(max_abs_difference(series_oracle(a, 1, 0.4, 0.8, v, 1), v) == 0);
    // One bracket: z_2 + Ā_1(z_2)(t x_1 − s y_1) with Ā_1(z_2) = −3/2.
    const SliceVector first = series_oracle(a, 1, 0.4, 0.8, v, 2);
    CHECK(max_abs_difference(first, sv(1, {0, 1}, -1.5 * 0.8, 1.5 * 0.4)) < 1e-15);
  }

  TEST_CASE("reflection pinning") {
    for (const GCM& a : {GCM::rank2(2, 3), fixtures::feingold_frenkel()})
      for (std::size_t i = 1; i <= a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) {
          CartanVector z{std::vector<double>(a.rank(), 0.0), Basis::CompactZ};
          z.coords[j] = 1;
          const SliceVector e = exp_rotation(a, i, pi, 0, slice_from_cartan(i, z));
          const CartanVector w = act_on_cartan(a, WeylWord{{i}}, z);
          CHECK(max_abs_difference(e, slice_from_cartan(i, w)) < 1e-10);
        }
  }

  TEST_CASE("fixed points are the wall") {
    const GCM a = GCM::rank2(3, 3);
    const SliceVector on_wall = sv(1, {3, 2});
    CHECK(max_abs_difference(exp_rotation(a, 1, 0.7, -1.1, on_wall), on_wall) < 1e-14);
    const SliceVector off = sv(1, {1, 1});
    CHECK(max_abs_difference(exp_rotation(a, 1, 0.7, -1.1, off), off) > 1e-3);
  }

  TEST_CASE("orbit tangent") {
    const GCM a = GCM::rank2(3, 3);
    const CartanData d(a);
    const auto tz = orbit_tangent(a, 1, 1, 0, CartanVector{{0, 1}, Basis::CompactZ});
    CHECK(tz.x == 0);
    CHECK(tz.y == doctest::Approx(1.5));
    const auto zero = orbit_tangent(a, 1, 0.3, 0.4, CartanVector{{3, 2}, Basis::CompactZ});
    CHECK(max_abs_difference(zero, sv(1, {0, 0})) == 0);
    Rng rng(59);
    for (int c = 0; c < 50; ++c) {
      const CartanVector z{{rng.uniform(-2, 2), rng.uniform(-2, 2)}, Basis::CompactZ};
      const auto tangent = orbit_tangent(a, 2, rng.uniform(-1, 1), rng.uniform(-1, 1), z);
      for (std::size_t j = 0; j < 2; ++j) {
        CartanVector e{{0, 0}, Basis::CompactZ};
        e.coords[j] = 1;
        CHECK(std::abs(slice_form(d, tangent, slice_from_cartan(2, e))) < 1e-15);
      }
    }
  }

  TEST_CASE("slice gram") {
    for (const GCM& a : {GCM::rank2(3, 3), GCM::rank2(2, 3), fixtures::feingold_frenkel()}) {
      const CartanData d(a);
      for (std::size_t i = 1; i <= a.rank(); ++i) {
        CHECK(signature(slice_gram_exact(d, i)) == Inertia{a.rank() + 1, 1, 0});
        CHECK(slice_gram_exact(d, i)(a.rank(), a.rank()) == d.symmetrizer().d[i - 1] / 2);
      }
    }
  }

  TEST_CASE("hemisphere") {
    const auto origin = hemisphere_point(0, 0);
    CHECK(origin.r == 0);
    CHECK(!origin.psi.has_value());
    const auto p = hemisphere_point(1, 0);
    CHECK(p.r == doctest::Approx(1));
    CHECK(*p.psi == doctest::Approx(0));
    // (r, ψ) ~ (π − r, ψ + π): parameters of length 2 and angle 0.3 meet those of length π − 2 and angle 0.3 + π.
    const auto a = hemisphere_point(2 * std::cos(0.3), 2 * std::sin(0.3));
    const auto b = hemisphere_point((pi - 2) * std::cos(0.3 + pi), (pi - 2) * std::sin(0.3 + pi));
    CHECK(a.r == doctest::Approx(b.r));
    CHECK(*a.psi == doctest::Approx(*b.psi));
    CHECK(a.r < pi);
    CHECK(*a.psi < pi);
  }
}
