#pragma once

#include "kma/cartan_vector.hpp"
#include "kma/gcm.hpp"

#include <optional>

namespace kma {

/// Element of the slice 𝔱 ⊕ ℝx_i ⊕ ℝy_i.
struct SliceVector {
  std::size_t slice = 1;  // 1-based generator index i
  std::vector<double> z;  // coefficients over z_1..z_ℓ
  double x = 0;
  double y = 0;
};

SliceVector slice_from_cartan(std::size_t i, const CartanVector& z);
CartanVector cartan_part(const SliceVector& v);
double max_abs_difference(const SliceVector& a, const SliceVector& b);

/// ad_{s x_i + t y_i}(v) with [x_i, z] = −Ā_i(z) y_i, [y_i, z] = Ā_i(z) x_i, [x_i, y_i] = z_i.
SliceVector bracket(const GCM& a, std::size_t i, double s, double t, const SliceVector& v);

/// exp(ad_{s x_i + t y_i}) v in closed form, r = √(s² + t²).
SliceVector exp_rotation(const GCM& a, std::size_t i, double s, double t, const SliceVector& v);

/// Σ_{k < n_terms} ad^k(v)/k!.
SliceVector series_oracle(const GCM& a, std::size_t i, double s, double t, const SliceVector& v,
                          std::size_t n_terms = 60);

/// The bracket [s x_i + t y_i, z] for z ∈ 𝔱.
SliceVector orbit_tangent(const GCM& a, std::size_t i, double s, double t, const CartanVector& z);

/// Compact form extended to the slice: (x_i, x_i) = (y_i, y_i) = d_i/2, no cross terms.
double slice_form(const CartanData& data, const SliceVector& u, const SliceVector& v);
RealMatrix slice_gram(const CartanData& data, std::size_t i);
/// Exact version of slice_gram, for the signature.
RationalMatrix slice_gram_exact(const CartanData& data, std::size_t i);

struct HemispherePoint {
  double r = 0;
  std::optional<double> psi;  // empty at r = 0
};

/// Canonical point under (r, ψ) ~ (π − r, ψ + π) with r ∈ [0, π), ψ ∈ [0, π).
HemispherePoint hemisphere_point(double s, double t);

}  // namespace kma
