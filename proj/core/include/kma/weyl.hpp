#pragma once

#include "kma/cartan_vector.hpp"
#include "kma/gcm.hpp"
#include "kma/roots.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kma {

/// Product w_{l_0} w_{l_1} ... w_{l_k} of simple reflections (1-based letters).
/// Acting on a vector applies the rightmost letter first.
struct WeylWord {
  std::vector<std::size_t> letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  WeylWord inverse() const;
  bool operator==(const WeylWord&) const = default;
  auto operator<=>(const WeylWord&) const = default;
};

WeylWord operator*(const WeylWord& a, const WeylWord& b);

/// "2,1" <-> {2,1}; the empty word serializes as "".
std::string to_string(const WeylWord& w);
WeylWord parse_word(std::string_view text);

Root act_on_root(const GCM& a, const WeylWord& w, Root alpha);

/// Generator i on 𝔱 (or 𝔥_ℝ): z_j ↦ z_j − a_ij z_i, i.e. c_i ← c_i − Σ_j a_ij c_j.
template <class T>
void reflect_coords(const GCM& a, std::size_t i, std::vector<T>& c) {
  if (i < 1 || i > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  if (c.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank");
  T shift(0);
  for (std::size_t j = 0; j < c.size(); ++j) shift += T(a(i - 1, j)) * c[j];
  c[i - 1] -= shift;
}

template <class T>
BasicCartanVector<T> act_on_cartan(const GCM& a, const WeylWord& w, BasicCartanVector<T> x) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) reflect_coords(a, *it, x.coords);
  return x;
}

/// Exact interior point ρ of the fundamental chamber with Ā_i(ρ) = 1 for all i.
/// Requires an invertible GCM.
std::vector<Rational> generic_chamber_point(const GCM& a);

/// Canonical reduced word. Rank 2: cancel adjacent equal letters. Otherwise the word
/// is read off by descending w·ρ to ρ (smallest index with Ā_i < 0 first), so two
/// words reduce identically iff they act identically.
WeylWord reduce(const GCM& a, const WeylWord& w);

/// All group elements of length <= max_length as canonical reduced words,
/// ordered by length then lexicographically.
std::vector<WeylWord> elements_up_to_length(const GCM& a, std::size_t max_length);

// Rank-2 integer labels: w(2m) = (w_2 w_1)^m, w(2m+1) = (w_2 w_1)^m w_2.

WeylWord rank2_word(std::int64_t n);
std::int64_t rank2_label(const WeylWord& w);
std::int64_t rank2_compose(std::int64_t n, std::int64_t k);
std::int64_t rank2_inverse(std::int64_t n);
/// w_1 C(n) = C(−1−n), w_2 C(n) = C(1−n).
std::int64_t chamber_action(std::size_t j, std::int64_t n);

}  // namespace kma
