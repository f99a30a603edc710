#pragma once

#include "kma/cartan_vector.hpp"
#include "kma/gcm.hpp"
#include "kma/weyl.hpp"

#include <cmath>
#include <string_view>

namespace kma {

namespace detail {
template <class T>
const Matrix<T>& gram_for(const CartanData& data, Basis b);
template <>
inline const Matrix<double>& gram_for<double>(const CartanData& data, Basis b) {
  return b == Basis::CompactZ ? data.compact_gram_real() : data.coroot_gram_real();
}
template <>
inline const Matrix<Rational>& gram_for<Rational>(const CartanData& data, Basis b) {
  return b == Basis::CompactZ ? data.grams().compact_gram : data.grams().coroot_gram;
}
}  // namespace detail

/// (x, y) with the Gram matching the basis tag: compact Gram on 𝔱, coroot Gram on 𝔥_ℝ.
template <class T>
T form(const CartanData& data, const BasicCartanVector<T>& x, const BasicCartanVector<T>& y) {
  if (x.basis != y.basis) throw Error(ErrorCode::BasisMismatch, "form of SplitH and CompactZ vectors");
  if (x.size() != data.rank() || y.size() != data.rank())
    throw Error(ErrorCode::DimensionMismatch, "vector rank");
  return bilinear(detail::gram_for<T>(data, x.basis), x.coords, y.coords);
}

/// Ā_i(x) = ½ Σ_j a_ij c_j, the real pairing −𝐢α_i on 𝔱 (i is 1-based).
template <class T>
T alpha_bar(const GCM& a, const std::vector<T>& c, std::size_t i) {
  if (i < 1 || i > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  if (c.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank");
  T s(0);
  for (std::size_t j = 0; j < c.size(); ++j) s += T(a(i - 1, j)) * c[j];
  return s / T(2);
}

template <class T>
T alpha_bar(const GCM& a, const BasicCartanVector<T>& x, std::size_t i) {
  return alpha_bar(a, x.coords, i);
}

enum class CausalClass { TimelikeForward, TimelikeBackward, Null, Spacelike, Zero };
std::string_view to_string(CausalClass c);

/// Interior point ρ of the fundamental chamber (Ā_i(ρ) = 1), in 𝔱 coordinates.
ExactCartanVector forward_reference(const CartanData& data);

/// Floating classification; |(x,x)| below tol times Σ|G_ij c_i c_j| counts as null.
CausalClass classify_vector(const CartanData& data, const CartanVector& x, double tol = 1e-12);
CausalClass classify_vector(const CartanData& data, const ExactCartanVector& x);

/// +1 forward, −1 backward, 0 zero vector; valid for vectors in the closed lightcone.
int cone_side(const CartanData& data, const CartanVector& x);

template <class T>
struct TitsReduction {
  WeylWord word;
  BasicCartanVector<T> x0;
};

/// word · x0 = x with x0 in the closed fundamental chamber of x's component
/// (𝓒 for forward input, −𝓒 for backward input).
TitsReduction<Rational> tits_cone_reduce(const CartanData& data, const ExactCartanVector& x,
                                         std::size_t max_steps = 100000);
TitsReduction<double> tits_cone_reduce(const CartanData& data, const CartanVector& x,
                                       std::size_t max_steps = 100000, double tol = 1e-12);

struct Wall {
  std::size_t index = 1;
  /// ℓ−1 vectors 2e_j − a_ij e_i (j ≠ i) spanning ker Ā_i.
  std::vector<ExactCartanVector> span;
};

Wall wall(const GCM& a, std::size_t i);

/// Rescales a timelike vector onto 𝔱_r = {(x,x) = r}, keeping its component.
CartanVector sheet_point(const CartanData& data, const CartanVector& x, double r);

/// √|r| arccosh((x,y)/r) for x, y on the same sheet 𝔱_r.
double hyperbolic_distance(const CartanData& data, const CartanVector& x, const CartanVector& y, double r,
                           double tol = 1e-12);

/// Null direction up to positive scaling; canonical form has the first nonzero
/// coordinate of absolute value 1.
struct NullRay {
  CartanVector direction;
  bool forward = true;

  bool same_ray(const NullRay& other, double tol = 1e-12) const;
};

NullRay make_null_ray(const CartanData& data, const CartanVector& x, double tol = 1e-12);

struct NullRays {
  NullRay x1_plus, x2_plus, x1_minus, x2_minus;
};

/// The four asymptote rays of a rank-2 hyperbolic lightcone, labelled by
/// Ā_1(x_1^+) < 0 < Ā_2(x_1^+), Ā_1(x_2^+) > 0 > Ā_2(x_2^+), x_2^- = −x_1^+, x_1^- = −x_2^+.
NullRays null_rays_rank2(const CartanData& data);

}  // namespace kma
