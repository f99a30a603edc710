#pragma once

#include "kma/lorentz.hpp"
#include "kma/su2flow.hpp"
#include "kma/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kma {

/// Exact complex number with rational real and imaginary parts.
struct Gaussian {
  Rational re;
  Rational im;

  bool zero() const { return re == 0 && im == 0; }
  Gaussian operator-() const { return {-re, -im}; }
  bool operator==(const Gaussian&) const = default;
};

Gaussian operator+(const Gaussian& a, const Gaussian& b);
Gaussian operator-(const Gaussian& a, const Gaussian& b);
/// Accepts "3", "-1/2", "1+2i", "0.5-i", "i".
Gaussian parse_gaussian(std::string_view text);
std::string to_string(const Gaussian& z);

/// Finitely supported hinge map ℤ → ℂ; zero values are never stored.
class U2Element {
 public:
  U2Element() = default;
  U2Element(std::initializer_list<std::pair<const std::int64_t, Gaussian>> init);

  void set(std::int64_t k, const Gaussian& z);
  Gaussian at(std::int64_t k) const;
  const std::map<std::int64_t, Gaussian>& hinges() const noexcept { return hinges_; }
  bool empty() const noexcept { return hinges_.empty(); }
  std::optional<std::int64_t> min_hinge() const;
  /// Hinges strictly below n.
  U2Element below(std::int64_t n) const;

  U2Element operator-() const;
  bool operator==(const U2Element&) const = default;

 private:
  std::map<std::int64_t, Gaussian> hinges_;
};

U2Element operator+(const U2Element& u, const U2Element& v);
U2Element operator-(const U2Element& u, const U2Element& v);
U2Element u2_compose(const U2Element& u, const U2Element& v);
/// Conjugation by (w_2 w_1)^m: hinge k moves to k + 2m.
U2Element translate_u2(std::int64_t m, const U2Element& u);
/// Hinge k moves to 1 − k.
U2Element mirror_to_u1(const U2Element& u);
std::string to_string(const U2Element& u);

/// Chamber (n, f) of the horoball model; f only has hinges below n.
struct TreeChamber {
  int sign = 1;
  std::int64_t n = 0;
  U2Element f;
  bool operator==(const TreeChamber&) const = default;
};

TreeChamber normal_form(int sign, std::int64_t n, const U2Element& f);
TreeChamber act_on_chamber(const U2Element& u, const TreeChamber& c);
TreeChamber translate_chamber(std::int64_t m, const TreeChamber& c);
/// |n − n′| on a common apartment, else (n − d) + (n′ − d) with d the branch label.
std::int64_t gallery_distance(const TreeChamber& c, const TreeChamber& c2);

enum class RaySide { L, R };

/// L(n) = {C(m) : m <= n}, R(n) = {C(m) : m >= n}.
struct RayRef {
  int sign = 1;
  RaySide side = RaySide::L;
  std::int64_t n = 0;
  bool operator==(const RayRef&) const = default;
  bool contains(std::int64_t label) const { return side == RaySide::L ? label <= n : label >= n; }
};

RayRef apply_weyl_to_ray(std::size_t j, const RayRef& ray);
RayRef translate_ray(std::int64_t m, const RayRef& ray);

/// e_1 is the upward end (labels → +∞), e_2 the downward one; u·e_2 = e_2 for u ∈ U_2.
struct End {
  enum class Kind { Fundamental, Deformed };
  Kind kind = Kind::Fundamental;
  int index = 1;
  U2Element u;
  int sign = 1;
  bool operator==(const End&) const = default;
};

End fundamental_end(int index, int sign);
/// u·e_1; the zero element gives FundamentalEnd(1).
End deformed_end(const U2Element& u, int sign);
/// w_j swaps e_1 and e_2; deformed ends are not representable.
End apply_weyl_to_end(std::size_t j, const End& e);
std::string to_string(const End& e);

struct DeformedApartment {
  bool fundamental = false;
  RayRef fixed_ray;
  std::vector<std::pair<std::int64_t, Gaussian>> hinges;  // descending index
  End first;   // e_2
  End second;  // u·e_1
};

DeformedApartment deformed_apartment(const U2Element& u, int sign);

/// A line of the model: either the apartment u·A (ends e_2 and u·e_1), or the
/// bent line from u·e_1 down to the branch label and back up to v·e_1.
struct ModelLine {
  int sign = 1;
  bool bent = false;
  U2Element u;
  U2Element v;
  std::int64_t turn = 0;
  End first;
  End second;

  bool contains(const TreeChamber& c) const;
};

ModelLine line_through_ends(const End& a, const End& b);
ModelLine line_through_chambers(const TreeChamber& c, const TreeChamber& c2);

/// Ψ_∞ on fundamental ends: e_i^± ↦ x_i^±.
NullRay halo_embed(const CartanData& data, const End& e);
/// Ψ_∞(w̃·e) = w·Ψ_∞(e).
NullRay halo_embed(const CartanData& data, const WeylWord& w, const End& e);
/// exp(ad_{s x_i + t y_i}) applied to the ray direction.
SliceVector halo_rotate(const CartanData& data, std::size_t i, double s, double t, const NullRay& ray);

struct BKGenerator {
  enum class Kind { TorusPhase, Weyl };
  Kind kind = Kind::Weyl;
  WeylWord word;               // Weyl generators
  std::vector<double> phases;  // torus generators; they act trivially on 𝔱
};

/// True iff the product fixes all four asymptote rays x_i^±.
bool b_k_stabilizer_check(const CartanData& data, const std::vector<BKGenerator>& k);

}  // namespace kma
