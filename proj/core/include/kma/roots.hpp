#pragma once

#include "kma/gcm.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kma {

/// Σ k_i α_i as an integer coefficient vector (an element of the root lattice Q).
struct Root {
  std::vector<std::int64_t> k;

  std::size_t rank() const noexcept { return k.size(); }
  std::int64_t height() const;
  bool positive() const;  // nonzero, all k_i >= 0
  bool negative() const;  // nonzero, all k_i <= 0
  bool zero() const;

  Root operator-() const;
  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;
};

/// Canonical ordering used for every root listing: by height, then lexicographically.
bool canonical_less(const Root& a, const Root& b);

Root simple_root(std::size_t rank, std::size_t i);
std::string to_string(const Root& r);

/// ⟨α, h_i⟩ = Σ_j k_j a_ji.
std::int64_t pairing(const GCM& a, const Root& alpha, std::size_t i);

/// (α, α) from the root Gram matrix.
Rational norm(const CartanData& data, const Root& alpha);

/// w_i α = α − ⟨α, h_i⟩ α_i  (i is 1-based).
Root reflect_root(const GCM& a, std::size_t i, const Root& alpha);

/// Real roots with |height| <= max_height, in canonical order.
/// Built by reflection closure from the simple roots; the closure only ever needs
/// positive roots of height <= max_height because descent from a positive real root
/// strictly lowers height at every step.
std::vector<Root> real_roots_up_to_height(const GCM& a, std::int64_t max_height);

enum class RootKind { Real, Imaginary, NotARoot };
std::string_view to_string(RootKind kind);

struct RootClass {
  RootKind kind = RootKind::NotARoot;
  /// Reflections applied during descent, in order (1-based). For a real root the
  /// descent ends at a simple root; for an imaginary root at the fundamental set.
  std::vector<std::size_t> witness;
  Rational norm;
};

/// Height-descent classification. Throws MixedSignCoefficients for vectors that are
/// neither all-nonnegative nor all-nonpositive.
RootClass classify_root(const CartanData& data, const Root& alpha);

/// Rank-2 labels of the non-standard partition Φ^re = Φ_1 ∪ Φ_2.
struct PhiLabel {
  int branch = 1;  // 1 or 2
  std::int64_t index = 0;
  bool operator==(const PhiLabel&) const = default;
};

/// Φ_i(2m) = w(2m) α_i, Φ_i(2m+1) = w(2m+1) α_{3−i}.
Root phi_root(const GCM& a, int branch, std::int64_t n);
/// Inverse of phi_root; throws NotRealRoot / NotRank2.
PhiLabel phi_label(const CartanData& data, const Root& alpha);

}  // namespace kma
