#include "kma/su2flow.hpp"

#include "kma/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kma {

namespace {

void check_slice(const GCM& a, std::size_t i, const SliceVector& v) {
  if (i < 1 || i > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "slice " + std::to_string(i));
  if (v.slice != i) throw Error(ErrorCode::SliceMismatch, "vector lives in slice " + std::to_string(v.slice));
  if (v.z.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "slice vector rank");
}

void check_finite(double s, double t, const SliceVector& v) {
  bool ok = std::isfinite(s) && std::isfinite(t) && std::isfinite(v.x) && std::isfinite(v.y);
  for (double c : v.z) ok = ok && std::isfinite(c);
  if (!ok) throw Error(ErrorCode::NonFinite, "non-finite rotation input");
}

}  // namespace

SliceVector slice_from_cartan(std::size_t i, const CartanVector& z) {
  if (z.basis != Basis::CompactZ) throw Error(ErrorCode::BasisMismatch, "slice vectors live in 𝔱");
  return SliceVector{i, z.coords, 0, 0};
}

CartanVector cartan_part(const SliceVector& v) { return CartanVector{v.z, Basis::CompactZ}; }

double max_abs_difference(const SliceVector& a, const SliceVector& b) {
  double m = std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
  for (std::size_t k = 0; k < a.z.size(); ++k) m = std::max(m, std::abs(a.z[k] - b.z[k]));
  return m;
}

SliceVector bracket(const GCM& a, std::size_t i, double s, double t, const SliceVector& v) {
  check_slice(a, i, v);
  const double p = alpha_bar(a, v.z, i);
  SliceVector out{i, std::vector<double>(a.rank(), 0.0), t * p, -s * p};
  out.z[i - 1] = s * v.y - t * v.x;
  return out;
}

SliceVector exp_rotation(const GCM& a, std::size_t i, double s, double t, const SliceVector& v) {
  check_slice(a, i, v);
  check_finite(s, t, v);
  const double r = std::hypot(s, t);
  if (r == 0) return v;
  const double c = std::cos(r), sn = std::sin(r);
  const double p = alpha_bar(a, v.z, i);
  // z ↦ z + Ā_i(z)(cos r − 1) z_i + Ā_i(z) sin r / r (t x_i − s y_i)
  // x_i ↦ x_i − t sin r / r z_i + t (cos r − 1)/r² (t x_i − s y_i)
  // y_i ↦ y_i + s sin r / r z_i − s (cos r − 1)/r² (t x_i − s y_i)
  SliceVector out = v;
  out.z[i - 1] += p * (c - 1) + (s * v.y - t * v.x) * sn / r;
  const double u = p * sn / r + (t * v.x - s * v.y) * (c - 1) / (r * r);
  out.x += u * t;
  out.y -= u * s;
  return out;
}

SliceVector series_oracle(const GCM& a, std::size_t i, double s, double t, const SliceVector& v, std::size_t n_terms) {
  check_slice(a, i, v);
  SliceVector sum = v;
  SliceVector term = v;
  for (std::size_t k = 1; k < n_terms; ++k) {
    term = bracket(a, i, s, t, term);
    const double inv = 1.0 / static_cast<double>(k);
    for (double& c : term.z) c *= inv;
    term.x *= inv;
    term.y *= inv;
    for (std::size_t j = 0; j < sum.z.size(); ++j) sum.z[j] += term.z[j];
    sum.x += term.x;
    sum.y += term.y;
  }
  return sum;
}

SliceVector orbit_tangent(const GCM& a, std::size_t i, double s, double t, const CartanVector& z) {
  return bracket(a, i, s, t, slice_from_cartan(i, z));
}

double slice_form(const CartanData& data, const SliceVector& u, const SliceVector& v) {
  if (u.slice != v.slice) throw Error(ErrorCode::SliceMismatch, "different slices");
  const double half_d = to_double(data.symmetrizer().d[u.slice - 1]) / 2;
  return bilinear(data.compact_gram_real(), u.z, v.z) + half_d * (u.x * v.x + u.y * v.y);
}

RationalMatrix slice_gram_exact(const CartanData& data, std::size_t i) {
  const std::size_t n = data.rank();
  RationalMatrix g(n + 2, n + 2, Rational(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g(a, b) = data.grams().compact_gram(a, b);
  g(n, n) = g(n + 1, n + 1) = data.symmetrizer().d[i - 1] / 2;
  return g;
}

RealMatrix slice_gram(const CartanData& data, std::size_t i) {
  RealMatrix g = matrix_cast<double>(slice_gram_exact(data, i));
  const std::size_t n = data.rank();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g(a, b) = data.compact_gram_real()(a, b);
  return g;
}

HemispherePoint hemisphere_point(double s, double t) {
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(std::hypot(s, t), pi);
  if (r == 0) return {0.0, std::nullopt};
  double psi = std::atan2(t, s);
  if (psi < 0) psi += 2 * pi;
  if (psi >= pi) {
    psi -= pi;
    r = pi - r;
  }
  return {r, psi};
}

}  // namespace kma
