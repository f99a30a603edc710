#include "kma/gcm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kma {

namespace {

std::string describe_blocks(const std::vector<std::vector<std::size_t>>& blocks) {
  std::ostringstream os;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << ' ';
    os << '{';
    for (std::size_t k = 0; k < blocks[b].size(); ++k) os << (k ? "," : "") << blocks[b][k] + 1;
    os << '}';
  }
  return os.str();
}

}  // namespace

GeneralizedCartanMatrix::GeneralizedCartanMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square() || entries_.rows() == 0)
    throw Error(ErrorCode::NotGCM, "matrix must be square and non-empty");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 2)
      throw Error(ErrorCode::NotGCM, "diagonal entry a_" + std::to_string(i + 1) + std::to_string(i + 1) + " != 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_(i, j) > 0)
        throw Error(ErrorCode::NotGCM, "positive off-diagonal entry at (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")");
      if ((entries_(i, j) == 0) != (entries_(j, i) == 0))
        throw Error(ErrorCode::NotGCM, "zero pattern not symmetric at (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")");
    }
  }
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::parse(std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::string s(text);
  std::stringstream rs(s);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<std::int64_t> r;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      auto first = e.find_first_not_of(" \t[]");
      auto last = e.find_last_not_of(" \t[]");
      if (first == std::string::npos) throw Error(ErrorCode::ParseError, "empty matrix entry in '" + s + "'");
      std::string tok = e.substr(first, last - first + 1);
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
      }
      if (used != tok.size()) throw Error(ErrorCode::ParseError, "bad matrix entry '" + tok + "'");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw Error(ErrorCode::ParseError, "matrix text is not square: '" + s + "'");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return GeneralizedCartanMatrix(std::move(m));
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::rank2(std::int64_t a, std::int64_t b) {
  return GeneralizedCartanMatrix(IntMatrix{{2, -a}, {-b, 2}});
}

RationalMatrix GeneralizedCartanMatrix::as_rational() const {
  RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = Rational(entries_(i, j));
  return m;
}

std::vector<std::vector<std::size_t>> GeneralizedCartanMatrix::components() const {
  const std::size_t n = rank();
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<std::size_t> block{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < block.size(); ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (label[j] < 0 && entries_(block[k], j) != 0) {
          label[j] = label[s];
          block.push_back(j);
        }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  return out;
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::principal(const std::vector<std::size_t>& idx) const {
  return GeneralizedCartanMatrix(entries_.principal_submatrix(idx));
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::permuted(const std::vector<std::size_t>& perm) const {
  return principal(perm);
}

std::string GeneralizedCartanMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < rank(); ++j) os << (j ? "," : "") << entries_(i, j);
  }
  return os.str();
}

std::string_view to_string(CartanKind kind) {
  switch (kind) {
    case CartanKind::Finite: return "Finite";
    case CartanKind::Affine: return "Affine";
    case CartanKind::HyperbolicStrict: return "HyperbolicStrict";
    case CartanKind::HyperbolicNonStrict: return "HyperbolicNonStrict";
    case CartanKind::IndefiniteOther: return "IndefiniteOther";
  }
  return "Unknown";
}

Symmetrizer symmetrize(const GCM& a) {
  auto blocks = a.components();
  if (blocks.size() != 1)
    throw Error(ErrorCode::Decomposable, "blocks " + describe_blocks(blocks));
  const std::size_t n = a.rank();
  // Propagate d along a spanning tree from d_0 = 1, then check every edge.
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> seen(n, false);
  d[0] = 1;
  seen[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t i = queue[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[j] || a(i, j) == 0) continue;
      d[j] = d[i] * Rational(a(i, j)) / Rational(a(j, i));
      seen[j] = true;
      queue.push_back(j);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i] * Rational(a(i, j)) != d[j] * Rational(a(j, i)))
        throw Error(ErrorCode::NotSymmetrizable,
                    "no diagonal D makes DA symmetric (cycle condition fails at (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "))");
  Rational dmin = *std::min_element(d.begin(), d.end());
  Symmetrizer s;
  for (auto& di : d) {
    di /= dmin;
    s.root_norms.push_back(Rational(2) / di);
  }
  s.d = std::move(d);
  return s;
}

GramMatrices gram_matrices(const GCM& a, const Symmetrizer& s) {
  const std::size_t n = a.rank();
  GramMatrices g{RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.root_gram(i, j) = Rational(a(i, j)) / s.d[j];
      g.coroot_gram(i, j) = s.d[i] * Rational(a(i, j));
      g.compact_gram(i, j) = g.coroot_gram(i, j) / 4;
    }
  return g;
}

namespace {

// Definiteness type of an indecomposable symmetrizable matrix.
CartanKind definiteness_kind(const GCM& a) {
  auto s = symmetrize(a);
  auto g = gram_matrices(a, s);
  Inertia in = signature(g.coroot_gram);
  if (in.plus == a.rank()) return CartanKind::Finite;
  if (in.minus == 0 && in.zero == 1) return CartanKind::Affine;
  return CartanKind::IndefiniteOther;
}

}  // namespace

TypeClassification classify(const GCM& a) {
  auto s = symmetrize(a);  // Decomposable / NotSymmetrizable surface here
  (void)s;
  TypeClassification out;
  out.det_sign = determinant(a.as_rational()).sign();
  CartanKind base = definiteness_kind(a);
  if (base != CartanKind::IndefiniteOther) {
    out.kind = base;
    return out;
  }
  // Every connected proper subdiagram lies inside a component of some
  // "remove one vertex" subdiagram, and subdiagrams of finite/affine ones are finite.
  const std::size_t n = a.rank();
  bool all_finite = true;
  bool all_finite_or_affine = true;
  for (std::size_t drop = 0; drop < n && all_finite_or_affine; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    if (keep.empty()) continue;
    GCM sub = a.principal(keep);
    for (const auto& block : sub.components()) {
      CartanKind k = definiteness_kind(sub.principal(block));
      if (k == CartanKind::Affine) all_finite = false;
      if (k == CartanKind::IndefiniteOther) all_finite_or_affine = false;
    }
  }
  if (!all_finite_or_affine)
    out.kind = CartanKind::IndefiniteOther;
  else
    out.kind = all_finite ? CartanKind::HyperbolicStrict : CartanKind::HyperbolicNonStrict;
  return out;
}

CartanData::CartanData(GCM a) : a_(std::move(a)), sym_(symmetrize(a_)), grams_(gram_matrices(a_, sym_)), type_(classify(a_)) {
  compact_real_ = matrix_cast<double>(grams_.compact_gram);
  root_real_ = matrix_cast<double>(grams_.root_gram);
  coroot_real_ = matrix_cast<double>(grams_.coroot_gram);
}

CartanData CartanData::with_corrupted_gram(double delta) const {
  CartanData copy = *this;
  copy.compact_real_(0, 0) += delta;
  copy.coroot_real_(0, 0) += 4 * delta;
  copy.grams_.compact_gram(0, 0) += exact_rational(delta);
  copy.grams_.coroot_gram(0, 0) += exact_rational(4 * delta);
  return copy;
}

namespace fixtures {

GCM feingold_frenkel() { return GCM(IntMatrix{{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}); }
GCM ideal_triangle() { return GCM(IntMatrix{{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}); }
GCM fibonacci() { return GCM::rank2(3, 3); }
GCM a2() { return GCM(IntMatrix{{2, -1}, {-1, 2}}); }
GCM affine_a1() { return GCM(IntMatrix{{2, -2}, {-2, 2}}); }

GCM e10() {
  IntMatrix m(10, 10, 0);
  for (std::size_t i = 0; i < 10; ++i) m(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { m(i, j) = m(j, i) = -1; };
  for (std::size_t i = 0; i + 1 < 9; ++i) link(i, i + 1);
  link(2, 9);
  return GCM(std::move(m));
}

}  // namespace fixtures

}  // namespace kma
