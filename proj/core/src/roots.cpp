#include "kma/roots.hpp"

#include "kma/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kma {

std::int64_t Root::height() const {
  std::int64_t h = 0;
  for (auto v : k) h += v;
  return h;
}

bool Root::zero() const {
  return std::all_of(k.begin(), k.end(), [](auto v) { return v == 0; });
}

bool Root::positive() const {
  return !zero() && std::all_of(k.begin(), k.end(), [](auto v) { return v >= 0; });
}

bool Root::negative() const {
  return !zero() && std::all_of(k.begin(), k.end(), [](auto v) { return v <= 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& v : r.k) v = -v;
  return r;
}

bool canonical_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.k < b.k;
}

Root simple_root(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw Error(ErrorCode::IndexOutOfRange, "simple root " + std::to_string(i));
  Root r{std::vector<std::int64_t>(rank, 0)};
  r.k[i - 1] = 1;
  return r;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.k.size(); ++i) os << (i ? "," : "") << r.k[i];
  os << ')';
  return os.str();
}

std::int64_t pairing(const GCM& a, const Root& alpha, std::size_t i) {
  if (i < 1 || i > a.rank()) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
  if (alpha.rank() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "root rank");
  std::int64_t p = 0;
  for (std::size_t j = 0; j < alpha.rank(); ++j) p += alpha.k[j] * a(j, i - 1);
  return p;
}

Rational norm(const CartanData& data, const Root& alpha) {
  std::vector<Rational> v(alpha.k.begin(), alpha.k.end());
  return bilinear(data.grams().root_gram, v, v);
}

Root reflect_root(const GCM& a, std::size_t i, const Root& alpha) {
  Root r = alpha;
  r.k[i - 1] -= pairing(a, alpha, i);
  return r;
}

std::vector<Root> real_roots_up_to_height(const GCM& a, std::int64_t max_height) {
  const std::size_t n = a.rank();
  std::set<Root> positive;
  std::vector<Root> frontier;
  if (max_height >= 1)
    for (std::size_t i = 1; i <= n; ++i) {
      positive.insert(simple_root(n, i));
      frontier.push_back(simple_root(n, i));
    }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& r : frontier)
      for (std::size_t i = 1; i <= n; ++i) {
        Root s = reflect_root(a, i, r);
        if (!s.positive() || s.height() > max_height) continue;
        if (positive.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  std::vector<Root> out;
  out.reserve(2 * positive.size());
  for (const auto& r : positive) {
    out.push_back(r);
    out.push_back(-r);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::string_view to_string(RootKind kind) {
  switch (kind) {
    case RootKind::Real: return "real";
    case RootKind::Imaginary: return "imaginary";
    case RootKind::NotARoot: return "not_a_root";
  }
  return "unknown";
}

namespace {

bool connected_support(const GCM& a, const Root& r) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < r.rank(); ++i)
    if (r.k[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  return a.principal(support).indecomposable();
}

}  // namespace

RootClass classify_root(const CartanData& data, const Root& alpha) {
  const GCM& a = data.matrix();
  if (alpha.rank() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "root rank");
  if (alpha.zero()) return RootClass{RootKind::NotARoot, {}, Rational(0)};
  if (!alpha.positive() && !alpha.negative())
    throw Error(ErrorCode::MixedSignCoefficients, to_string(alpha));
  RootClass out;
  out.norm = norm(data, alpha);
  Root cur = alpha.positive() ? alpha : -alpha;
  // Each step strictly lowers the height of a positive vector, so at most height() steps.
  while (true) {
    if (cur.height() == 1) {
      out.kind = RootKind::Real;
      return out;
    }
    std::size_t step = 0;
    for (std::size_t i = 1; i <= a.rank() && step == 0; ++i)
      if (pairing(a, cur, i) > 0) step = i;
    if (step == 0) {
      out.kind = (connected_support(a, cur) && norm(data, cur) <= 0) ? RootKind::Imaginary : RootKind::NotARoot;
      return out;
    }
    cur = reflect_root(a, step, cur);
    out.witness.push_back(step);
    if (!cur.positive()) {
      out.kind = RootKind::NotARoot;
      return out;
    }
  }
}

Root phi_root(const GCM& a, int branch, std::int64_t n) {
  if (a.rank() != 2) throw Error(ErrorCode::NotRank2, "phi_root needs rank 2");
  if (branch != 1 && branch != 2) throw Error(ErrorCode::IndexOutOfRange, "branch must be 1 or 2");
  bool even = (n % 2) == 0;
  std::size_t base = even ? static_cast<std::size_t>(branch) : static_cast<std::size_t>(3 - branch);
  return act_on_root(a, rank2_word(n), simple_root(2, base));
}

PhiLabel phi_label(const CartanData& data, const Root& alpha) {
  const GCM& a = data.matrix();
  if (a.rank() != 2) throw Error(ErrorCode::NotRank2, "phi_label needs rank 2");
  if (!alpha.positive() && !alpha.negative()) throw Error(ErrorCode::NotRealRoot, to_string(alpha));
  RootClass c = classify_root(data, alpha);
  if (c.kind != RootKind::Real) throw Error(ErrorCode::NotRealRoot, to_string(alpha));
  // Descent gives u with u·(±α) = α_j; then α = u^{-1}(±α_j).
  Root cur = alpha.positive() ? alpha : -alpha;
  WeylWord u;
  for (auto s : c.witness) {
    cur = reflect_root(a, s, cur);
    u.letters.insert(u.letters.begin(), s);
  }
  std::size_t j = cur.k[0] == 1 ? 1 : 2;
  WeylWord w = u.inverse();
  if (alpha.negative()) w = w * WeylWord{{j}};  // −α_j = w_j α_j
  std::int64_t n = rank2_label(w);
  bool even = (n % 2) == 0;
  int branch = even ? static_cast<int>(j) : static_cast<int>(3 - j);
  return PhiLabel{branch, n};
}

}  // namespace kma
