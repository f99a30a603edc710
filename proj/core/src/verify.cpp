#include "kma/verify.hpp"

#include "kma/embedding.hpp"
#include "kma/io.hpp"
#include "kma/lorentz.hpp"
#include "kma/random.hpp"
#include "kma/roots.hpp"
#include "kma/su2flow.hpp"
#include "kma/twintree.hpp"
#include "kma/weyl.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>

namespace kma {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      if (result_.failures == 0) result_.detail = what;
      ++result_.failures;
    }
  }
  void skip(const std::string& why) {
    result_.skipped = true;
    result_.detail = why;
  }
  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

using Body = std::function<void(Suite&)>;

SuiteResult run_suite(const std::string& name, const Body& body) {
  Suite s(name);
  try {
    body(s);
  } catch (const Error& e) {
    s.check(false, std::string(to_string(e.code())) + ": " + e.detail());
  } catch (const std::exception& e) {
    s.check(false, e.what());
  }
  return s.finish();
}

WeylWord random_word(Rng& rng, std::size_t rank, std::size_t max_len) {
  WeylWord w;
  const auto len = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(max_len)));
  for (std::size_t k = 0; k < len; ++k) w.letters.push_back(static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(rank))));
  return w;
}

Root random_root_vector(Rng& rng, std::size_t rank, std::int64_t bound) {
  Root r{std::vector<std::int64_t>(rank)};
  for (auto& v : r.k) v = rng.integer(-bound, bound);
  return r;
}

std::vector<Rational> random_rational(Rng& rng, std::size_t rank) {
  std::vector<Rational> v(rank);
  for (auto& c : v) c = Rational(rng.integer(-20, 20), rng.integer(1, 7));
  return v;
}

bool lorentzian(const CartanData& data) {
  Inertia in = signature(data.grams().coroot_gram);
  return in.plus + 1 == data.rank() && in.minus == 1 && in.zero == 0;
}

bool rank2_infinite(const CartanData& data) { return data.rank() == 2 && data.a(0, 1) * data.a(1, 0) >= 4; }

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

std::string fmt_err(double e) { return fmt::format("{:.3e}", e); }

/// Exact interior point w·(ρ + δ) of the forward cone.
ExactCartanVector random_timelike(const CartanData& data, Rng& rng, std::size_t max_len) {
  ExactCartanVector x = forward_reference(data);
  for (auto& c : x.coords) c += Rational(rng.integer(-5, 5), 100) * c;
  return act_on_cartan(data.matrix(), random_word(rng, data.rank(), max_len), x);
}

void suite_symmetrizer(const CartanData& data, Suite& s) {
  const std::size_t n = data.rank();
  const auto& d = data.symmetrizer().d;
  const auto& g = data.grams();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string at = fmt::format("({},{})", i + 1, j + 1);
      s.check(d[i] * data.a(i, j) == d[j] * data.a(j, i), "D*A not symmetric at " + at);
      s.check(g.coroot_gram(i, j) == d[i] * data.a(i, j), "coroot Gram != d_i a_ij at " + at);
      s.check(g.root_gram(i, j) == data.a(i, j) / d[j], "root Gram != a_ij/d_j at " + at);
      s.check(g.root_gram(i, j) == g.root_gram(j, i), "root Gram not symmetric at " + at);
      s.check(g.coroot_gram(i, j) == 4 * g.compact_gram(i, j), "coroot Gram != 4 compact Gram at " + at);
      s.check(std::abs(data.compact_gram_real()(i, j) - to_double(g.compact_gram(i, j))) <= 1e-15,
              "floating compact Gram drifts at " + at);
    }
  Rational top = *std::max_element(data.symmetrizer().root_norms.begin(), data.symmetrizer().root_norms.end());
  s.check(top == 2, "longest simple root norm != 2");
}

void suite_classify(const CartanData& data, Suite& s, Rng& rng) {
  const std::size_t n = data.rank();
  const TypeClassification base = data.classification();
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (n <= 4) {
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    for (int k = 0; k < 12; ++k) {
      for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(i - 1)))]);
      perms.push_back(p);
    }
  }
  for (const auto& q : perms) {
    TypeClassification c = classify(data.matrix().permuted(q));
    s.check(c.kind == base.kind && c.det_sign == base.det_sign, "classification changes under a permutation");
  }
  if (base.hyperbolic()) {
    s.check(determinant(data.matrix().as_rational()) < 0, "hyperbolic matrix with det >= 0");
    Inertia in = signature(data.grams().coroot_gram);
    s.check(in.plus + 1 == n && in.minus == 1 && in.zero == 0, "hyperbolic coroot Gram not of signature (l-1,1)");
  }
}

void suite_root_enumeration(const CartanData& data, Suite& s) {
  const std::size_t n = data.rank();
  if (n > 3) return s.skip("lattice scan limited to rank <= 3");
  const std::int64_t h = 6;
  std::vector<Root> bfs = real_roots_up_to_height(data.matrix(), h);
  std::set<Rational> norms(data.symmetrizer().root_norms.begin(), data.symmetrizer().root_norms.end());
  for (const auto& r : bfs) s.check(norms.count(norm(data, r)) == 1, "real root " + to_string(r) + " has a non-simple norm");
  std::set<Root> scan;
  std::vector<std::int64_t> k(n, -h);
  while (true) {
    Root r{k};
    if (!r.zero() && (r.positive() || r.negative()) && std::abs(r.height()) <= h && norms.count(norm(data, r)) &&
        classify_root(data, r).kind == RootKind::Real)
      scan.insert(r);
    std::size_t pos = 0;
    while (pos < n && ++k[pos] > h) k[pos++] = -h;
    if (pos == n) break;
  }
  std::set<Root> from_bfs(bfs.begin(), bfs.end());
  s.check(from_bfs == scan, fmt::format("BFS found {} real roots, lattice scan {}", from_bfs.size(), scan.size()));
}

void suite_reflection(const CartanData& data, Suite& s, Rng& rng) {
  for (int t = 0; t < 100; ++t) {
    Root r = random_root_vector(rng, data.rank(), 6);
    const auto i = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(data.rank())));
    Root once = reflect_root(data.matrix(), i, r);
    s.check(reflect_root(data.matrix(), i, once) == r, "reflection is not an involution on " + to_string(r));
    s.check(norm(data, once) == norm(data, r), "reflection changes the norm of " + to_string(r));
  }
}

void suite_cartan_action(const CartanData& data, Suite& s, Rng& rng) {
  const GCM& a = data.matrix();
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    WeylWord w = random_word(rng, data.rank(), 6);
    ExactCartanVector x{random_rational(rng, data.rank()), Basis::CompactZ};
    ExactCartanVector y{random_rational(rng, data.rank()), Basis::CompactZ};
    ExactCartanVector wx = act_on_cartan(a, w, x), wy = act_on_cartan(a, w, y);
    s.check(form(data, wx, wy) == form(data, x, y), "Weyl action does not preserve the compact Gram exactly");
    ExactCartanVector hx{x.coords, Basis::SplitH}, hwx{wx.coords, Basis::SplitH};
    s.check(form(data, hwx, hwx) == form(data, hx, hx), "Weyl action does not preserve the coroot Gram exactly");
    CartanVector rx = to_real(x), rwx = to_real(wx);
    const double scale = 1 + std::abs(form(data, rx, rx)) + max_abs(rwx.coords) * max_abs(rwx.coords);
    worst = std::max(worst, std::abs(form(data, rwx, rwx) - form(data, rx, rx)) / scale);
    Root alpha = random_root_vector(rng, data.rank(), 4);
    Root walpha = act_on_root(a, w, alpha);
    auto pairing_of = [&](const Root& r, const ExactCartanVector& v) {
      Rational p(0);
      for (std::size_t i = 0; i < r.rank(); ++i) p += r.k[i] * 2 * alpha_bar(a, v, i + 1);
      return p;
    };
    s.check(pairing_of(walpha, wx) == pairing_of(alpha, x), "root and Cartan actions are not intertwined");
  }
  s.check(worst <= 1e-12, "floating Weyl action breaks the compact form by " + fmt_err(worst));
}

void suite_rank2_labels(const CartanData& data, Suite& s) {
  if (!rank2_infinite(data)) return s.skip("rank-2 labels need an infinite dihedral Weyl group");
  const GCM& a = data.matrix();
  for (std::int64_t n = -12; n <= 12; ++n) {
    s.check(rank2_label(rank2_word(n)) == n, fmt::format("label(word({})) != {}", n, n));
    s.check(rank2_label(reduce(a, rank2_word(n).inverse())) == rank2_inverse(n), fmt::format("inverse({}) mismatch", n));
    for (std::int64_t k = -12; k <= 12; ++k)
      s.check(rank2_label(reduce(a, rank2_word(n) * rank2_word(k))) == rank2_compose(n, k),
              fmt::format("compose({},{}) mismatch", n, k));
    for (std::size_t j = 1; j <= 2; ++j)
      s.check(chamber_action(j, chamber_action(j, n)) == n, fmt::format("w_{} is not an involution on chambers", j));
    s.check(chamber_action(2, chamber_action(1, n)) == n + 2, "(w_2 w_1) does not shift chambers by 2");
  }
}

void suite_reduce(const CartanData& data, Suite& s, Rng& rng) {
  const GCM& a = data.matrix();
  if (!rank2_infinite(data) && determinant(a.as_rational()) == 0) return s.skip("singular matrix");
  ExactCartanVector rho{random_rational(rng, data.rank()), Basis::CompactZ};
  if (determinant(a.as_rational()) != 0) rho = forward_reference(data);
  for (int t = 0; t < 60; ++t) {
    WeylWord w = random_word(rng, data.rank(), 8);
    WeylWord r = reduce(a, w);
    s.check(act_on_cartan(a, r, rho) == act_on_cartan(a, w, rho), "reduce(" + to_string(w) + ") acts differently");
    s.check(reduce(a, r) == r, "reduce is not idempotent on " + to_string(w));
    s.check(r.length() <= w.length() && r.length() % 2 == w.length() % 2, "reduce changes the length parity of " + to_string(w));
  }
}

void suite_causal(const CartanData& data, Suite& s, Rng& rng) {
  if (!lorentzian(data)) return s.skip("compact form is not Lorentzian");
  const GCM& a = data.matrix();
  for (int t = 0; t < 200; ++t) {
    CartanVector x{std::vector<double>(data.rank()), Basis::CompactZ};
    for (auto& c : x.coords) c = rng.uniform(-3, 3);
    WeylWord w = random_word(rng, data.rank(), 8);
    s.check(classify_vector(data, act_on_cartan(a, w, x)) == classify_vector(data, x),
            "causal class changes under " + to_string(w));
  }
  for (int t = 0; t < 50; ++t) {
    ExactCartanVector x = random_timelike(data, rng, 8);
    if (rng.integer(0, 1)) x = -x;
    TitsReduction<Rational> red = tits_cone_reduce(data, x);
    s.check(act_on_cartan(a, red.word, red.x0) == x, "Tits cone reduction does not round-trip");
    const int side = classify_vector(data, x) == CausalClass::TimelikeForward ? 1 : -1;
    bool inside = true;
    for (std::size_t i = 1; i <= data.rank(); ++i) inside = inside && side * alpha_bar(a, red.x0, i) >= 0;
    s.check(inside, "reduced point is outside the fundamental chamber");
  }
}

void suite_distance(const CartanData& data, Suite& s, Rng& rng) {
  if (!lorentzian(data)) return s.skip("compact form is not Lorentzian");
  const double r = -1;
  auto point = [&] { return sheet_point(data, to_real(random_timelike(data, rng, 5)), r); };
  for (int t = 0; t < 100; ++t) {
    CartanVector x = point(), y = point(), z = point();
    const double dxy = hyperbolic_distance(data, x, y, r, 1e-9);
    const double dyx = hyperbolic_distance(data, y, x, r, 1e-9);
    const double dxz = hyperbolic_distance(data, x, z, r, 1e-9);
    const double dzy = hyperbolic_distance(data, z, y, r, 1e-9);
    s.check(dxy >= 0 && std::abs(dxy - dyx) <= 1e-9, fmt::format("distance is not symmetric: {} vs {}", dxy, dyx));
    s.check(dxy <= dxz + dzy + 1e-9, "triangle inequality fails");
    s.check(hyperbolic_distance(data, x, x, r, 1e-9) <= 1e-6, "d(x,x) != 0");
  }
}

void suite_su2(const CartanData& data, Suite& s, Rng& rng) {
  const GCM& a = data.matrix();
  const std::size_t n = data.rank();
  double series = 0, iso = 0, inv = 0, pin = 0;
  for (int t = 0; t < 200; ++t) {
    const auto i = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n)));
    const double sv = rng.uniform(-3, 3), tv = rng.uniform(-3, 3);
    SliceVector v{i, std::vector<double>(n), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (auto& c : v.z) c = rng.uniform(-1, 1);
    SliceVector closed = exp_rotation(a, i, sv, tv, v);
    series = std::max(series, max_abs_difference(closed, series_oracle(a, i, sv, tv, v, 60)));
    iso = std::max(iso, std::abs(slice_form(data, closed, closed) - slice_form(data, v, v)));
    inv = std::max(inv, max_abs_difference(exp_rotation(a, i, -sv, -tv, closed), v));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      CartanVector e{std::vector<double>(n, 0.0), Basis::CompactZ};
      e.coords[j - 1] = 1;
      SliceVector rot = exp_rotation(a, i, std::numbers::pi, 0, slice_from_cartan(i, e));
      CartanVector refl = act_on_cartan(a, WeylWord{{i}}, e);
      pin = std::max({pin, std::abs(rot.x), std::abs(rot.y)});
      for (std::size_t k = 0; k < n; ++k) pin = std::max(pin, std::abs(rot.z[k] - refl[k]));
    }
  s.check(series <= 1e-10, "closed form deviates from the series by " + fmt_err(series));
  s.check(iso <= 1e-10, "exp_rotation breaks the slice form by " + fmt_err(iso));
  s.check(inv <= 1e-10, "exp_rotation(-s,-t) is not the inverse: " + fmt_err(inv));
  s.check(pin <= 1e-10, "rotation by pi differs from the Weyl reflection by " + fmt_err(pin));
}

void suite_embedding(const CartanData& data, Suite& s, Rng& rng) {
  if (data.rank() != 2 && data.rank() != 3) return s.skip("chamber geometry needs rank 2 or 3");
  if (!lorentzian(data)) return s.skip("compact form is not Lorentzian");
  const double r = -1;
  ChamberRegion base;
  try {
    base = fundamental_chamber_region(data, 1, r);
  } catch (const Error& e) {
    return s.skip(e.detail());
  }
  const std::size_t depth = data.rank() == 2 ? 12 : 4;
  std::vector<ChamberRegion> regions = tessellate(data, 1, r, depth);
  const double vol = region_volume(data, base);
  double vol_err = 0, equi = 0, round = 0, anti = 0;
  for (const auto& reg : regions) vol_err = std::max(vol_err, std::abs(region_volume(data, reg) - vol));
  std::size_t overlaps = 0;
  for (std::size_t p = 0; p < regions.size(); ++p)
    for (std::size_t q = p + 1; q < regions.size(); ++q)
      if (!interiors_disjoint(data, regions[p], regions[q])) ++overlaps;
  const ChamberRegion minus = fundamental_chamber_region(data, -1, r);
  for (std::size_t t = 0; t < 20; ++t) {
    const ChamberRegion& reg = regions[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(regions.size() - 1)))];
    std::vector<double> lambda(data.rank());
    for (auto& l : lambda) l = 0.05 + rng.uniform();
    const double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
    for (auto& l : lambda) l /= sum;
    EmbeddedPoint direct = embed_point(data, reg, lambda);
    CartanVector moved = act_on_cartan(data.matrix(), reg.word, embed_point(data, base, lambda).point);
    const double size = std::max(1.0, max_abs(moved.coords));
    for (std::size_t k = 0; k < data.rank(); ++k) equi = std::max(equi, std::abs(direct.point[k] - moved[k]) / size);
    std::vector<double> back = evaluate_barycentric(data, reg, direct.point, 1e-8);
    for (std::size_t k = 0; k < lambda.size(); ++k) round = std::max(round, std::abs(back[k] - lambda[k]));
    CartanVector neg = embed_point(data, minus, lambda).point;
    CartanVector pos = embed_point(data, base, lambda).point;
    for (std::size_t k = 0; k < data.rank(); ++k) anti = std::max(anti, std::abs(neg[k] + pos[k]));
  }
  s.check(vol_err <= 1e-9, "chamber volumes differ by " + fmt_err(vol_err));
  s.check(overlaps == 0, fmt::format("{} pairs of chambers overlap", overlaps));
  s.check(equi <= 1e-10, "embedding is not Weyl-equivariant: " + fmt_err(equi));
  s.check(round <= 1e-8, "barycentric round trip error " + fmt_err(round));
  s.check(anti <= 1e-12, "involution is not antipodal: " + fmt_err(anti));
}

void suite_tree(const CartanData& data, Suite& s, Rng& rng) {
  if (!rank2_infinite(data)) return s.skip("tree model needs rank 2 with ab >= 4");
  const GCM& a = data.matrix();
  for (std::int64_t k = -10; k <= 10; ++k)
    for (std::int64_t n = -10; n <= 10; ++n) {
      const U2Element u{{k, Gaussian{1, 0}}};
      const TreeChamber c{1, n, {}};
      const bool fixed = act_on_chamber(u, c) == c;
      const bool oracle = act_on_root(a, rank2_word(n).inverse(), phi_root(a, 2, k)).positive();
      s.check(fixed == oracle, fmt::format("fixing law fails for hinge {} and chamber {}", k, n));
    }
  auto random_u = [&] {
    U2Element u;
    const auto count = rng.integer(0, 3);
    for (std::int64_t c = 0; c < count; ++c) u.set(rng.integer(-6, 6), Gaussian{Rational(rng.integer(-3, 3)), Rational(rng.integer(-3, 3))});
    return u;
  };
  auto random_chamber = [&] { return normal_form(1, rng.integer(-6, 6), random_u()); };
  for (int t = 0; t < 200; ++t) {
    TreeChamber x = random_chamber(), y = random_chamber(), z = random_chamber();
    const auto dxy = gallery_distance(x, y);
    s.check(dxy == gallery_distance(y, x), "gallery distance is not symmetric");
    s.check((dxy == 0) == (x == y), "gallery distance does not separate chambers");
    s.check(dxy <= gallery_distance(x, z) + gallery_distance(z, y), "gallery distance triangle inequality fails");
    const U2Element u = random_u();
    const std::int64_t m = rng.integer(-3, 3);
    s.check(act_on_chamber(translate_u2(m, u), translate_chamber(m, x)) == translate_chamber(m, act_on_chamber(u, x)),
            "translation does not intertwine the U2 action");
    s.check(mirror_to_u1(mirror_to_u1(u)) == u, "mirror is not an involution");
    ModelLine line = line_through_chambers(x, y);
    s.check(line.contains(x) && line.contains(y), "no model line through two chambers");
  }
}

void suite_halo(const CartanData& data, Suite& s, Rng& rng) {
  if (!rank2_infinite(data) || !lorentzian(data)) return s.skip("halo needs a rank-2 hyperbolic matrix");
  const GCM& a = data.matrix();
  NullRays rays = null_rays_rank2(data);
  for (const NullRay* ray : {&rays.x1_plus, &rays.x2_plus, &rays.x1_minus, &rays.x2_minus})
    s.check(std::abs(form(data, ray->direction, ray->direction)) <= 1e-14, "asymptote ray is not null");
  s.check(alpha_bar(a, rays.x1_plus.direction, 1) < 0 && alpha_bar(a, rays.x1_plus.direction, 2) > 0, "x1+ sign conditions");
  s.check(alpha_bar(a, rays.x2_plus.direction, 1) > 0 && alpha_bar(a, rays.x2_plus.direction, 2) < 0, "x2+ sign conditions");
  for (int sign : {1, -1})
    for (int i : {1, 2})
      for (std::size_t j : {1, 2}) {
        const End e = fundamental_end(i, sign);
        s.check(halo_embed(data, apply_weyl_to_end(j, e)).same_ray(halo_embed(data, WeylWord{{j}}, e), 1e-9),
                "halo embedding is not Weyl-equivariant");
      }
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto i = static_cast<std::size_t>(rng.integer(1, 2));
    SliceVector v = halo_rotate(data, i, rng.uniform(-3, 3), rng.uniform(-3, 3), rays.x1_plus);
    worst = std::max(worst, std::abs(slice_form(data, v, v)));
  }
  s.check(worst <= 1e-12, "rotated asymptote rays leave the nullcone by " + fmt_err(worst));
  using G = BKGenerator;
  s.check(b_k_stabilizer_check(data, {G{G::Kind::Weyl, WeylWord{{2, 1}}, {}}}), "even word does not fix the rays");
  s.check(!b_k_stabilizer_check(data, {G{G::Kind::Weyl, WeylWord{{1}}, {}}}), "odd word fixes the rays");
  s.check(b_k_stabilizer_check(data, {G{G::Kind::TorusPhase, {}, {0.3, 1.1}}}), "torus phase moves the rays");
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::string VerifyReport::render() const {
  std::string out = fmt::format("kma verify\nmatrix: {}\nseed: {}\n\n", matrix, seed);
  out += fmt::format("{:<22} {:<6} {:>7} {:>8}  {}\n", "suite", "status", "checks", "failures", "detail");
  for (const auto& s : suites) {
    const char* status = s.skipped ? "SKIP" : s.passed() ? "PASS" : "FAIL";
    out += fmt::format("{:<22} {:<6} {:>7} {:>8}  {}\n", s.name, status, s.checks, s.failures, s.detail);
  }
  out += fmt::format("\nresult: {}\n", all_passed() ? "PASS" : "FAIL");
  return out;
}

VerifyReport run_verify(const CartanData& data, std::uint64_t seed) {
  VerifyReport report;
  report.matrix = data.matrix().to_string();
  report.seed = seed;
  Rng rng(seed);
  auto add = [&](const std::string& name, const Body& body) { report.suites.push_back(run_suite(name, body)); };
  add("gcm.symmetrizer", [&](Suite& s) { suite_symmetrizer(data, s); });
  add("gcm.classify", [&](Suite& s) { suite_classify(data, s, rng); });
  add("roots.enumeration", [&](Suite& s) { suite_root_enumeration(data, s); });
  add("roots.reflection", [&](Suite& s) { suite_reflection(data, s, rng); });
  add("weyl.cartan_action", [&](Suite& s) { suite_cartan_action(data, s, rng); });
  add("weyl.rank2_labels", [&](Suite& s) { suite_rank2_labels(data, s); });
  add("weyl.reduce", [&](Suite& s) { suite_reduce(data, s, rng); });
  add("lorentz.causal", [&](Suite& s) { suite_causal(data, s, rng); });
  add("lorentz.distance", [&](Suite& s) { suite_distance(data, s, rng); });
  add("su2flow.closed_form", [&](Suite& s) { suite_su2(data, s, rng); });
  add("embedding.geometry", [&](Suite& s) { suite_embedding(data, s, rng); });
  add("twintree.model", [&](Suite& s) { suite_tree(data, s, rng); });
  add("twintree.halo", [&](Suite& s) { suite_halo(data, s, rng); });
  return report;
}

}  // namespace kma
