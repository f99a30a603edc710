#include "kma/roots.hpp"
#include "kma/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kma;

namespace {
Root r2(std::int64_t a, std::int64_t b) { return Root{{a, b}}; }
}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("reflect_root") {
    const GCM a = GCM::rank2(3, 3);
    CHECK(reflect_root(a, 1, r2(1, 0)) == r2(-1, 0));
    CHECK(reflect_root(a, 1, r2(0, 1)) == r2(3, 1));
    CHECK_THROWS_AS(reflect_root(a, 3, r2(1, 0)), Error);
    Rng rng(5);
    const GCM f = fixtures::feingold_frenkel();
    for (int c = 0; c < 100; ++c) {
      Root x{{rng.integer(-9, 9), rng.integer(-9, 9), rng.integer(-9, 9)}};
      for (std::size_t i = 1; i <= 3; ++i) CHECK(reflect_root(f, i, reflect_root(f, i, x)) == x);
    }
  }

  TEST_CASE("real_roots_up_to_height") {
    const GCM f = fixtures::feingold_frenkel();
    const auto simple = real_roots_up_to_height(f, 1);
    CHECK(simple.size() == 6);
    for (const auto& r : simple) CHECK(std::abs(r.height()) == 1);
    // 𝓕 at height 2: ±α1, ±α2, ±α3, ±(α2+α3).
    CHECK(real_roots_up_to_height(f, 2).size() == 8);

    const GCM a = GCM::rank2(3, 3);
    const CartanData d(a);
    std::set<Root> lib;
    for (const auto& r : real_roots_up_to_height(a, 5)) lib.insert(r);
    std::set<Root> scan;
    for (std::int64_t i = -5; i <= 5; ++i)
      for (std::int64_t j = -5; j <= 5; ++j)
        if (2 * i * i - 6 * i * j + 2 * j * j == 2 && std::abs(i + j) <= 5) scan.insert(r2(i, j));
    CHECK(lib == scan);
    CHECK(lib.count(r2(3, 1)) == 1);

    const auto sorted = real_roots_up_to_height(a, 8);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) CHECK(canonical_less(sorted[i], sorted[i + 1]));
    for (const auto& r : sorted) CHECK(std::find(sorted.begin(), sorted.end(), -r) != sorted.end());
  }

  TEST_CASE("classify_root") {
    const CartanData d(GCM::rank2(3, 3));
    const auto s = classify_root(d, r2(1, 0));
    CHECK(s.kind == RootKind::Real);
    CHECK(s.norm == 2);
    const auto im = classify_root(d, r2(1, 1));
    CHECK(im.kind == RootKind::Imaginary);
    CHECK(im.norm == -2);
    // 3α1 + α2 = w1 α2 is real.
    const auto real = classify_root(d, r2(3, 1));
    CHECK(real.kind == RootKind::Real);
    CHECK(real.witness == std::vector<std::size_t>{1});
    CHECK(classify_root(d, r2(2, 0)).kind == RootKind::NotARoot);
    CHECK(classify_root(d, r2(-1, -1)).kind == RootKind::Imaginary);
    CHECK_THROWS_AS(classify_root(d, r2(1, -1)), Error);
  }

  TEST_CASE("classify_root norms") {
    for (const GCM& a : {GCM::rank2(3, 3), GCM::rank2(2, 3), fixtures::feingold_frenkel()}) {
      const CartanData d(a);
      const auto& norms = d.symmetrizer().root_norms;
      for (const auto& r : real_roots_up_to_height(a, 6)) {
        const auto c = classify_root(d, r);
        CHECK(c.kind == RootKind::Real);
        CHECK(std::find(norms.begin(), norms.end(), c.norm) != norms.end());
        Root x = r;
        for (auto it = c.witness.begin(); it != c.witness.end(); ++it) x = reflect_root(a, *it, x);
        CHECK(std::abs(x.height()) == 1);
      }
    }
  }

  TEST_CASE("phi_root and phi_label") {
    const GCM a = GCM::rank2(3, 3);
    CHECK(phi_root(a, 1, 0) == r2(1, 0));
    CHECK(phi_root(a, 2, 1) == r2(1, 3));
    // a != b: w2 α1 = α1 + a α2.
    const GCM u = GCM::rank2(2, 3);
    CHECK(phi_root(u, 2, 1) == r2(1, 2));
    for (std::int64_t n = -20; n <= 20; ++n) {
      CHECK(phi_root(a, 2, n).positive() == (n >= 0));
      CHECK(phi_root(a, 1, n).positive() == (n <= 0));
    }
    for (const GCM& g : {a, u}) {
      const CartanData d(g);
      std::set<Root> seen;
      for (int branch = 1; branch <= 2; ++branch)
        for (std::int64_t n = -8; n <= 8; ++n) {
          const Root r = phi_root(g, branch, n);
          CHECK(seen.insert(r).second);
          CHECK(phi_label(d, r) == PhiLabel{branch, n});
        }
      for (const auto& r : real_roots_up_to_height(g, 12)) {
        const auto l = phi_label(d, r);
        CHECK(phi_root(g, l.branch, l.index) == r);
      }
      CHECK_THROWS_AS(phi_label(d, r2(1, 1)), Error);
    }
    CHECK_THROWS_AS(phi_label(CartanData(fixtures::feingold_frenkel()), Root{{1, 0, 0}}), Error);
  }
}
