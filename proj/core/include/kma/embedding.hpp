#pragma once

#include "kma/lorentz.hpp"
#include "kma/weyl.hpp"

#include <array>
#include <optional>

namespace kma {

/// Face J of the chamber w·𝓒^± (J empty for the top cell). Letters and J are 1-based.
struct SimplexRef {
  int sign = 1;
  WeylWord word;
  std::vector<std::size_t> face;
};

/// Same cell iff equal sign, equal J, and w⁻¹w′ ∈ W_J.
bool same_simplex(const GCM& a, const SimplexRef& x, const SimplexRef& y);

/// The building involution ω: flips the sign, keeps word and face.
SimplexRef involution_image(const SimplexRef& s);

/// w·𝓒 ∩ 𝔱_r. Vertex k lies on every wall except wall k (direction w·2A⁻¹e_k);
/// a null vertex is stored as its canonical null direction and flagged ideal.
struct ChamberRegion {
  int sign = 1;
  WeylWord word;
  double r = -1;
  std::vector<CartanVector> vertices;
  std::vector<bool> ideal;

  std::size_t ideal_count() const;
};

ChamberRegion fundamental_chamber_region(const CartanData& data, int sign, double r);
ChamberRegion chamber_region(const CartanData& data, const ChamberRegion& fundamental, const WeylWord& w);
ChamberRegion region_for(const CartanData& data, const SimplexRef& s, double r);

/// Rank 2: the depth+1 chambers with labels in [−⌊depth/2⌋, ⌈depth/2⌉], in label order.
/// Rank 3: every group element of length ≤ depth.
std::vector<ChamberRegion> tessellate(const CartanData& data, int sign, double r, std::size_t depth);

/// Interior angle at each vertex (0 at ideal vertices).
std::vector<double> vertex_angles(const CartanData& data, const ChamberRegion& region);
/// Hyperbolic length (rank 2) or area (rank 3) of the region, in units of the sheet metric.
double region_volume(const CartanData& data, const ChamberRegion& region);

/// Normalized hyperbolic barycentric coordinates λ_k = V_k / V of a point of the region.
std::vector<double> evaluate_barycentric(const CartanData& data, const ChamberRegion& region, const CartanVector& p,
                                         double tol = 1e-9);

struct EmbeddedPoint {
  CartanVector point;
  bool ideal = false;
};

/// Inverse of evaluate_barycentric: closed form along the geodesic in rank 2,
/// damped Newton on log-weights in rank 3.
EmbeddedPoint embed_point(const CartanData& data, const ChamberRegion& region, const std::vector<double>& lambda);

struct BarycentricPoint {
  SimplexRef simplex;
  std::vector<double> lambda;
};

EmbeddedPoint embed(const CartanData& data, const BarycentricPoint& bp, double r);

/// True if some facet of one region has every vertex of the other on its closed outer side.
bool interiors_disjoint(const CartanData& data, const ChamberRegion& x, const ChamberRegion& y, double tol = 1e-9);

/// Points along the geodesic between two vertices (either may be ideal), segments+1 samples.
std::vector<CartanVector> geodesic_samples(const CartanData& data, const CartanVector& p, bool p_ideal,
                                           const CartanVector& q, bool q_ideal, double r, std::size_t segments);

/// Orthonormal frame for the Poincaré disk: e_0 along ρ, spatial vectors spanning ρ^⊥.
struct DiskFrame {
  CartanVector e0;
  std::vector<CartanVector> spatial;
};

DiskFrame disk_frame(const CartanData& data);
/// p ↦ spatial/(1 + time) after scaling to the unit sheet; ideal directions land on the unit circle.
std::vector<double> project_to_disk(const CartanData& data, const DiskFrame& frame, const CartanVector& p,
                                    bool ideal = false);

}  // namespace kma
