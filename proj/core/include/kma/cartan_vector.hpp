#pragma once

#include "kma/rational.hpp"

#include <string_view>
#include <vector>

namespace kma {

/// Coordinates over {h_j} (split real Cartan) or {z_j} (compact Cartan 𝔱).
enum class Basis { SplitH, CompactZ };

inline std::string_view to_string(Basis b) { return b == Basis::SplitH ? "SplitH" : "CompactZ"; }

template <class T>
struct BasicCartanVector {
  std::vector<T> coords;
  Basis basis = Basis::CompactZ;

  std::size_t size() const noexcept { return coords.size(); }
  T& operator[](std::size_t i) { return coords[i]; }
  const T& operator[](std::size_t i) const { return coords[i]; }
  bool operator==(const BasicCartanVector&) const = default;
};

using CartanVector = BasicCartanVector<double>;
using ExactCartanVector = BasicCartanVector<Rational>;

inline CartanVector to_real(const ExactCartanVector& v) { return {to_double(v.coords), v.basis}; }

template <class T>
BasicCartanVector<T> operator*(const T& s, BasicCartanVector<T> v) {
  for (auto& c : v.coords) c *= s;
  return v;
}

template <class T>
BasicCartanVector<T> operator+(BasicCartanVector<T> a, const BasicCartanVector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
  return a;
}

template <class T>
BasicCartanVector<T> operator-(BasicCartanVector<T> a, const BasicCartanVector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] -= b.coords[i];
  return a;
}

template <class T>
BasicCartanVector<T> operator-(BasicCartanVector<T> a) {
  for (auto& c : a.coords) c = -c;
  return a;
}

}  // namespace kma
