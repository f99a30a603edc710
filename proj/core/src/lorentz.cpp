#include "kma/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace kma {

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::TimelikeForward: return "TimelikeForward";
    case CausalClass::TimelikeBackward: return "TimelikeBackward";
    case CausalClass::Null: return "Null";
    case CausalClass::Spacelike: return "Spacelike";
    case CausalClass::Zero: return "Zero";
  }
  return "Unknown";
}

ExactCartanVector forward_reference(const CartanData& data) {
  return ExactCartanVector{generic_chamber_point(data.matrix()), Basis::CompactZ};
}

namespace {

double form_scale(const RealMatrix& g, const std::vector<double>& c) {
  double s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) s += std::abs(g(i, j) * c[i] * c[j]);
  return s;
}

CartanVector rho_real(const CartanData& data, Basis b) {
  return CartanVector{to_double(generic_chamber_point(data.matrix())), b};
}

template <class T>
TitsReduction<T> reduce_impl(const CartanData& data, const BasicCartanVector<T>& x, int side, std::size_t max_steps,
                             const T& tol) {
  const GCM& a = data.matrix();
  TitsReduction<T> out{WeylWord{}, x};
  for (std::size_t step = 0;; ++step) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i <= a.rank() && pick == 0; ++i)
      if (T(side) * alpha_bar(a, out.x0.coords, i) < -tol) pick = i;
    if (pick == 0) return out;
    if (step == max_steps)
      throw Error(ErrorCode::NonTermination, "tits_cone_reduce exceeded " + std::to_string(max_steps) + " reflections");
    reflect_coords(a, pick, out.x0.coords);
    out.word.letters.push_back(pick);
  }
}

}  // namespace

int cone_side(const CartanData& data, const CartanVector& x) {
  if (std::all_of(x.coords.begin(), x.coords.end(), [](double v) { return v == 0.0; })) return 0;
  return form(data, x, rho_real(data, x.basis)) < 0 ? 1 : -1;
}

CausalClass classify_vector(const CartanData& data, const CartanVector& x, double tol) {
  if (x.size() != data.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank");
  if (std::all_of(x.coords.begin(), x.coords.end(), [](double v) { return v == 0.0; })) return CausalClass::Zero;
  const double q = form(data, x, x);
  if (std::abs(q) <= tol * form_scale(detail::gram_for<double>(data, x.basis), x.coords)) return CausalClass::Null;
  if (q > 0) return CausalClass::Spacelike;
  return cone_side(data, x) > 0 ? CausalClass::TimelikeForward : CausalClass::TimelikeBackward;
}

CausalClass classify_vector(const CartanData& data, const ExactCartanVector& x) {
  if (x.size() != data.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank");
  if (std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& v) { return v == 0; })) return CausalClass::Zero;
  const Rational q = form(data, x, x);
  if (q == 0) return CausalClass::Null;
  if (q > 0) return CausalClass::Spacelike;
  ExactCartanVector rho = forward_reference(data);
  rho.basis = x.basis;
  return form(data, x, rho) < 0 ? CausalClass::TimelikeForward : CausalClass::TimelikeBackward;
}

TitsReduction<Rational> tits_cone_reduce(const CartanData& data, const ExactCartanVector& x, std::size_t max_steps) {
  CausalClass c = classify_vector(data, x);
  if (c == CausalClass::Spacelike) throw Error(ErrorCode::OutsideClosedCone, "spacelike vector");
  if (c == CausalClass::Zero) return {WeylWord{}, x};
  int side = 1;
  if (c == CausalClass::TimelikeBackward) side = -1;
  if (c == CausalClass::Null) {
    ExactCartanVector rho = forward_reference(data);
    rho.basis = x.basis;
    side = form(data, x, rho) < 0 ? 1 : -1;
  }
  return reduce_impl<Rational>(data, x, side, max_steps, Rational(0));
}

TitsReduction<double> tits_cone_reduce(const CartanData& data, const CartanVector& x, std::size_t max_steps,
                                       double tol) {
  CausalClass c = classify_vector(data, x, tol);
  if (c == CausalClass::Spacelike) throw Error(ErrorCode::OutsideClosedCone, "spacelike vector");
  if (c == CausalClass::Zero) return {WeylWord{}, x};
  double size = 0;
  for (double v : x.coords) size = std::max(size, std::abs(v));
  return reduce_impl<double>(data, x, cone_side(data, x), max_steps, tol * size);
}

Wall wall(const GCM& a, std::size_t i) {
  if (i < 1 || i > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "wall " + std::to_string(i));
  Wall w{i, {}};
  for (std::size_t j = 1; j <= a.rank(); ++j) {
    if (j == i) continue;
    ExactCartanVector v{std::vector<Rational>(a.rank(), Rational(0)), Basis::CompactZ};
    v.coords[j - 1] = 2;
    v.coords[i - 1] = -a(i - 1, j - 1);
    w.span.push_back(std::move(v));
  }
  return w;
}

CartanVector sheet_point(const CartanData& data, const CartanVector& x, double r) {
  if (!(r < 0) || !std::isfinite(r)) throw Error(ErrorCode::NotOnSheet, "sheet parameter r must be negative");
  const double q = form(data, x, x);
  if (!(q < 0)) throw Error(ErrorCode::NotOnSheet, "vector is not timelike");
  return std::sqrt(r / q) * x;
}

double hyperbolic_distance(const CartanData& data, const CartanVector& x, const CartanVector& y, double r, double tol) {
  if (!(r < 0)) throw Error(ErrorCode::NotOnSheet, "sheet parameter r must be negative");
  const RealMatrix& g = detail::gram_for<double>(data, x.basis);
  for (const auto* v : {&x, &y}) {
    const double q = form(data, *v, *v);
    if (std::abs(q - r) > tol * std::max(std::abs(r), form_scale(g, v->coords)))
      throw Error(ErrorCode::NotOnSheet, "form value " + std::to_string(q) + " != " + std::to_string(r));
  }
  if (cone_side(data, x) != cone_side(data, y)) throw Error(ErrorCode::DifferentSheets, "opposite cone components");
  const CartanVector diff = x - y;
  const double chord = std::max(0.0, form(data, diff, diff));
  return 2 * std::sqrt(-r) * std::asinh(std::sqrt(chord / -r) / 2);
}

bool NullRay::same_ray(const NullRay& other, double tol) const {
  if (forward != other.forward || direction.basis != other.direction.basis) return false;
  if (direction.size() != other.direction.size()) return false;
  for (std::size_t i = 0; i < direction.size(); ++i)
    if (std::abs(direction[i] - other.direction[i]) > tol * (1 + std::abs(direction[i]))) return false;
  return true;
}

NullRay make_null_ray(const CartanData& data, const CartanVector& x, double tol) {
  if (classify_vector(data, x, tol) != CausalClass::Null) throw Error(ErrorCode::NotOnSheet, "vector is not null");
  double size = 0;
  for (double v : x.coords) size = std::max(size, std::abs(v));
  double lead = 0;
  for (double v : x.coords)
    if (std::abs(v) > tol * size) {
      lead = std::abs(v);
      break;
    }
  return NullRay{(1.0 / lead) * x, cone_side(data, x) > 0};
}

NullRays null_rays_rank2(const CartanData& data) {
  if (data.rank() != 2) throw Error(ErrorCode::NotRank2, "null_rays_rank2 needs rank 2");
  const RealMatrix& g = data.compact_gram_real();
  const double disc = g(0, 1) * g(0, 1) - g(0, 0) * g(1, 1);
  if (!(disc > 0)) throw Error(ErrorCode::NotLorentzian, "compact form is not Lorentzian");
  const GCM& a = data.matrix();
  NullRays out;
  for (double sgn : {1.0, -1.0}) {
    CartanVector v{{(-g(0, 1) + sgn * std::sqrt(disc)) / g(0, 0), 1.0}, Basis::CompactZ};
    if (cone_side(data, v) < 0) v = -v;
    NullRay ray = make_null_ray(data, v);
    if (alpha_bar(a, v, 1) < 0 && alpha_bar(a, v, 2) > 0) out.x1_plus = ray;
    else out.x2_plus = ray;
  }
  out.x2_minus = NullRay{-out.x1_plus.direction, false};
  out.x1_minus = NullRay{-out.x2_plus.direction, false};
  return out;
}

}  // namespace kma
