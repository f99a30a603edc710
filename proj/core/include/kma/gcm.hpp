#pragma once

#include "kma/linalg.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kma {

/// Integer matrix satisfying the generalized Cartan matrix axioms:
/// a_ii = 2, a_ij <= 0 off the diagonal, a_ij = 0 iff a_ji = 0.
///
/// Convention throughout the library: a_ij = α_i(h_j). Generator indices in
/// public APIs are 1-based; coefficient vectors are ordinary 0-based containers.
class GeneralizedCartanMatrix {
 public:
  explicit GeneralizedCartanMatrix(IntMatrix entries);

  /// Text form "2,-3;-3,2": rows separated by ';', entries by ','.
  static GeneralizedCartanMatrix parse(std::string_view text);
  /// [[2,-a],[-b,2]]
  static GeneralizedCartanMatrix rank2(std::int64_t a, std::int64_t b);

  std::size_t rank() const noexcept { return entries_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }
  RationalMatrix as_rational() const;

  /// Connected components of the Dynkin graph, each sorted ascending.
  std::vector<std::vector<std::size_t>> components() const;
  bool indecomposable() const { return components().size() == 1; }

  GeneralizedCartanMatrix principal(const std::vector<std::size_t>& idx) const;
  GeneralizedCartanMatrix permuted(const std::vector<std::size_t>& perm) const;

  std::string to_string() const;
  bool operator==(const GeneralizedCartanMatrix&) const = default;

 private:
  IntMatrix entries_;
};

using GCM = GeneralizedCartanMatrix;

enum class CartanKind {
  Finite,
  Affine,
  HyperbolicStrict,
  HyperbolicNonStrict,
  IndefiniteOther,
};

std::string_view to_string(CartanKind kind);

struct TypeClassification {
  CartanKind kind = CartanKind::Finite;
  int det_sign = 0;

  bool hyperbolic() const {
    return kind == CartanKind::HyperbolicStrict || kind == CartanKind::HyperbolicNonStrict;
  }
  bool strict() const { return kind == CartanKind::HyperbolicStrict; }
};

struct Symmetrizer {
  std::vector<Rational> d;           // d_i = 2 / (α_i, α_i)
  std::vector<Rational> root_norms;  // (α_i, α_i), max entry 2
};

struct GramMatrices {
  RationalMatrix root_gram;     // B_ij = (α_i, α_j) = a_ij / d_j
  RationalMatrix coroot_gram;   // C_ij = d_i a_ij
  RationalMatrix compact_gram;  // (z_i, z_j)_k = C_ij / 4
};

/// Throws NotSymmetrizable or Decomposable (with the block list) when the
/// trichotomy does not apply.
TypeClassification classify(const GCM& a);

/// Unique symmetrizer with max root norm 2. Throws Decomposable / NotSymmetrizable.
Symmetrizer symmetrize(const GCM& a);

GramMatrices gram_matrices(const GCM& a, const Symmetrizer& s);

/// Everything downstream modules need about one indecomposable symmetrizable GCM.
/// Immutable after construction.
class CartanData {
 public:
  explicit CartanData(GCM a);

  const GCM& matrix() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.rank(); }
  std::int64_t a(std::size_t i, std::size_t j) const { return a_(i, j); }
  const Symmetrizer& symmetrizer() const noexcept { return sym_; }
  const GramMatrices& grams() const noexcept { return grams_; }
  const TypeClassification& classification() const noexcept { return type_; }

  /// compact_gram as doubles, for floating geometry.
  const RealMatrix& compact_gram_real() const noexcept { return compact_real_; }
  const RealMatrix& root_gram_real() const noexcept { return root_real_; }
  const RealMatrix& coroot_gram_real() const noexcept { return coroot_real_; }

  /// Returns a copy whose floating compact Gram has entry (0,0) perturbed.
  /// Exists so invariant suites can demonstrate they detect corruption.
  CartanData with_corrupted_gram(double delta) const;

 private:
  GCM a_;
  Symmetrizer sym_;
  GramMatrices grams_;
  TypeClassification type_;
  RealMatrix compact_real_;
  RealMatrix root_real_;
  RealMatrix coroot_real_;
};

namespace fixtures {
/// Rank-3 hyperbolic with Weyl group T(2,3,∞).
GCM feingold_frenkel();
/// Rank-3 "ideal" hyperbolic with Weyl group T(∞,∞,∞).
GCM ideal_triangle();
/// a = b = 3.
GCM fibonacci();
GCM a2();
GCM affine_a1();
GCM e10();
}  // namespace fixtures

}  // namespace kma
