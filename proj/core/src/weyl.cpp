#include "kma/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kma {

WeylWord WeylWord::inverse() const {
  WeylWord w{letters};
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  WeylWord w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

std::string to_string(const WeylWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
  return os.str();
}

WeylWord parse_word(std::string_view text) {
  WeylWord w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad word letter '" + token + "'");
    }
    if (pos != token.size() || v < 1) throw Error(ErrorCode::ParseError, "bad word letter '" + token + "'");
    w.letters.push_back(static_cast<std::size_t>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')') flush();
    else token.push_back(c);
  }
  flush();
  return w;
}

Root act_on_root(const GCM& a, const WeylWord& w, Root alpha) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) alpha = reflect_root(a, *it, alpha);
  return alpha;
}

std::vector<Rational> generic_chamber_point(const GCM& a) {
  RationalMatrix inv = inverse(a.as_rational());
  std::vector<Rational> rho(a.rank(), Rational(0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) rho[i] += 2 * inv(i, j);
  return rho;
}

namespace {

WeylWord cancel_adjacent(const WeylWord& w) {
  WeylWord out;
  for (auto l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == l) out.letters.pop_back();
    else out.letters.push_back(l);
  }
  return out;
}

bool infinite_dihedral(const GCM& a) { return a.rank() == 2 && a(0, 1) * a(1, 0) >= 4; }

void check_letters(const GCM& a, const WeylWord& w) {
  for (auto l : w.letters)
    if (l < 1 || l > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(l));
}

}  // namespace

WeylWord reduce(const GCM& a, const WeylWord& w) {
  check_letters(a, w);
  if (infinite_dihedral(a)) return cancel_adjacent(w);
  if (determinant(a.as_rational()) == 0)
    throw Error(ErrorCode::UnsupportedRank, "reduce needs an invertible matrix outside the infinite dihedral case");
  std::vector<Rational> p = generic_chamber_point(a);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) reflect_coords(a, *it, p);
  WeylWord out;
  while (true) {
    std::size_t step = 0;
    for (std::size_t i = 0; i < a.rank() && step == 0; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < a.rank(); ++j) s += a(i, j) * p[j];
      if (s < 0) step = i + 1;
    }
    if (step == 0) break;
    reflect_coords(a, step, p);
    out.letters.push_back(step);
  }
  return out;
}

std::vector<WeylWord> elements_up_to_length(const GCM& a, std::size_t max_length) {
  std::vector<WeylWord> all{WeylWord{}};
  std::set<WeylWord> seen{WeylWord{}};
  std::vector<WeylWord> layer{WeylWord{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::set<WeylWord> next;
    for (const auto& w : layer)
      for (std::size_t i = 1; i <= a.rank(); ++i) {
        WeylWord r = reduce(a, w * WeylWord{{i}});
        if (r.length() == len && !seen.count(r)) next.insert(r);
      }
    layer.assign(next.begin(), next.end());
    for (const auto& w : layer) {
      seen.insert(w);
      all.push_back(w);
    }
    if (layer.empty()) break;
  }
  return all;
}

WeylWord rank2_word(std::int64_t n) {
  std::int64_t m = (n >= 0) ? n / 2 : -((-n + 1) / 2);
  bool odd = n - 2 * m == 1;
  WeylWord w;
  for (std::int64_t i = 0; i < m; ++i) w.letters.insert(w.letters.end(), {2, 1});
  for (std::int64_t i = 0; i < -m; ++i) w.letters.insert(w.letters.end(), {1, 2});
  if (odd) w.letters.push_back(2);
  return cancel_adjacent(w);
}

std::int64_t chamber_action(std::size_t j, std::int64_t n) {
  if (j == 1) return -1 - n;
  if (j == 2) return 1 - n;
  throw Error(ErrorCode::IndexOutOfRange, "rank-2 generator " + std::to_string(j));
}

std::int64_t rank2_label(const WeylWord& w) {
  std::int64_t n = 0;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) n = chamber_action(*it, n);
  return n;
}

std::int64_t rank2_compose(std::int64_t n, std::int64_t k) { return (n % 2 == 0) ? n + k : n - k; }

std::int64_t rank2_inverse(std::int64_t n) { return (n % 2 == 0) ? -n : n; }

}  // namespace kma
