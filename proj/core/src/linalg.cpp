#include "kma/linalg.hpp"

#include <cmath>
#include <sstream>

namespace kma {

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      BigInt p(s.substr(0, slash));
      BigInt q(s.substr(slash + 1));
      if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
      return Rational(p, q);
    }
    auto e = s.find_first_of("eE");
    std::string mantissa = s.substr(0, e);
    long exponent = 0;
    if (e != std::string::npos) exponent = std::stol(s.substr(e + 1));
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(mantissa.begin());
    }
    auto dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
      digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
    BigInt n(digits);
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    Rational value = exponent >= 0 ? Rational(n * scale) : Rational(n, scale);
    return negative ? Rational(-value) : value;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
  }
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "non-finite value");
  int exp = 0;
  double m = std::frexp(x, &exp);
  // m * 2^53 is an integer for every double.
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) return r * Rational(pow(BigInt(2), static_cast<unsigned>(exp)));
  return r / Rational(pow(BigInt(2), static_cast<unsigned>(-exp)));
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_double(q));
  return out;
}

bool is_symmetric(const RationalMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Rational determinant(RationalMatrix m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& input) {
  if (!input.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix m = input;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::DimensionMismatch, "singular matrix");
    if (pivot != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    Rational p = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  RationalMatrix mk(n, n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RationalMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long long>(k));
  }
  return c;
}

namespace {

std::size_t sign_changes(const std::vector<Rational>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : coeffs) {
    int s = q.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia signature(const RationalMatrix& m) {
  if (!is_symmetric(m)) throw Error(ErrorCode::NotSymmetric, "signature requires a symmetric matrix");
  auto c = characteristic_polynomial(m);
  Inertia out;
  std::size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  out.zero = k;
  std::vector<Rational> reduced(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
  out.plus = sign_changes(reduced);
  std::vector<Rational> mirrored = reduced;
  for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
  out.minus = sign_changes(mirrored);
  return out;
}

}  // namespace kma
