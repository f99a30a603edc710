#include "kma/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kma {

namespace {

constexpr double pi = std::numbers::pi;

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

void check_geometry_rank(const CartanData& data) {
  if (data.rank() != 2 && data.rank() != 3)
    throw Error(ErrorCode::UnsupportedRank, "chamber geometry is implemented for ranks 2 and 3, got " +
                                                std::to_string(data.rank()));
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::IndexOutOfRange, "sign must be +1 or -1");
}

/// Unit-sheet representative: finite points scaled to (P,P) = −1, ideal directions untouched.
CartanVector unit(const CartanVector& v, bool ideal, double r) { return ideal ? v : (1.0 / std::sqrt(-r)) * v; }

/// Angle at the finite unit point A between the geodesics towards B and C.
double angle_at(const CartanData& data, const CartanVector& a, const CartanVector& b, const CartanVector& c) {
  CartanVector ub = b + form(data, a, b) * a;
  CartanVector uc = c + form(data, a, c) * a;
  const double nb = form(data, ub, ub), nc = form(data, uc, uc);
  if (!(nb > 0) || !(nc > 0)) return 0.0;
  return std::acos(std::clamp(form(data, ub, uc) / std::sqrt(nb * nc), -1.0, 1.0));
}

double triangle_area(const CartanData& data, const std::array<CartanVector, 3>& v, const std::array<bool, 3>& ideal) {
  double sum = 0;
  for (std::size_t k = 0; k < 3; ++k)
    if (!ideal[k]) sum += angle_at(data, v[k], v[(k + 1) % 3], v[(k + 2) % 3]);
  return pi - sum;
}

double unit_distance(const CartanData& data, const CartanVector& p, const CartanVector& q) {
  const CartanVector diff = p - q;
  return 2 * std::asinh(std::sqrt(std::max(0.0, form(data, diff, diff))) / 2);
}

std::vector<double> barycentric_unchecked(const CartanData& data, const ChamberRegion& region, const CartanVector& p) {
  const std::size_t n = region.vertices.size();
  const CartanVector pu = unit(p, false, region.r);
  std::vector<CartanVector> vu;
  for (std::size_t k = 0; k < n; ++k) vu.push_back(unit(region.vertices[k], region.ideal[k], region.r));
  for (std::size_t k = 0; k < n; ++k)
    if (!region.ideal[k] && unit_distance(data, pu, vu[k]) < 1e-12) {
      std::vector<double> e(n, 0.0);
      e[k] = 1.0;
      return e;
    }
  std::vector<double> lambda(n);
  if (n == 2) {
    if (region.ideal[0] || region.ideal[1])
      throw Error(ErrorCode::UnsupportedRank, "rank-2 chamber with an ideal endpoint");
    const double len = unit_distance(data, vu[0], vu[1]);
    lambda[0] = unit_distance(data, pu, vu[1]) / len;
    lambda[1] = unit_distance(data, pu, vu[0]) / len;
    return lambda;
  }
  std::array<bool, 3> id{region.ideal[0], region.ideal[1], region.ideal[2]};
  const double total = triangle_area(data, {vu[0], vu[1], vu[2]}, id);
  for (std::size_t k = 0; k < 3; ++k) {
    std::array<CartanVector, 3> t{vu[0], vu[1], vu[2]};
    std::array<bool, 3> ti = id;
    t[k] = pu;
    ti[k] = false;
    lambda[k] = triangle_area(data, t, ti) / total;
  }
  return lambda;
}

CartanVector weighted_point(const CartanData& data, const ChamberRegion& region, const std::vector<double>& w) {
  CartanVector s{std::vector<double>(data.rank(), 0.0), Basis::CompactZ};
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) s = s + w[k] * region.vertices[k];
  return sheet_point(data, s, region.r);
}

double facet_value(const CartanData& data, const ChamberRegion& region, std::size_t i, const CartanVector& x) {
  CartanVector y = act_on_cartan(data.matrix(), region.word.inverse(), x);
  return region.sign * alpha_bar(data.matrix(), y, i);
}

/// The same region moved back to the fundamental chamber by word⁻¹.
ChamberRegion pulled_back(const CartanData& data, const ChamberRegion& region) {
  ChamberRegion base = region;
  base.word = WeylWord{};
  const WeylWord inv = region.word.inverse();
  for (std::size_t k = 0; k < base.vertices.size(); ++k) {
    base.vertices[k] = act_on_cartan(data.matrix(), inv, region.vertices[k]);
    if (base.ideal[k]) base.vertices[k] = make_null_ray(data, base.vertices[k]).direction;
  }
  return base;
}

}  // namespace

bool same_simplex(const GCM& a, const SimplexRef& x, const SimplexRef& y) {
  if (x.sign != y.sign) return false;
  std::vector<std::size_t> fx = x.face, fy = y.face;
  std::sort(fx.begin(), fx.end());
  std::sort(fy.begin(), fy.end());
  if (fx != fy) return false;
  WeylWord d = reduce(a, x.word.inverse() * y.word);
  return std::all_of(d.letters.begin(), d.letters.end(),
                     [&](std::size_t l) { return std::binary_search(fx.begin(), fx.end(), l); });
}

SimplexRef involution_image(const SimplexRef& s) { return SimplexRef{-s.sign, s.word, s.face}; }

std::size_t ChamberRegion::ideal_count() const { return static_cast<std::size_t>(std::count(ideal.begin(), ideal.end(), true)); }

ChamberRegion fundamental_chamber_region(const CartanData& data, int sign, double r) {
  check_geometry_rank(data);
  check_sign(sign);
  if (!(r < 0)) throw Error(ErrorCode::NotOnSheet, "sheet parameter r must be negative");
  const std::size_t n = data.rank();
  RationalMatrix inv = inverse(data.matrix().as_rational());
  ChamberRegion region{sign, WeylWord{}, r, {}, {}};
  for (std::size_t k = 0; k < n; ++k) {
    ExactCartanVector v{std::vector<Rational>(n), Basis::CompactZ};
    for (std::size_t i = 0; i < n; ++i) v.coords[i] = 2 * inv(i, k);
    CausalClass c = classify_vector(data, v);
    CartanVector vr = to_real(v);
    if (c == CausalClass::TimelikeForward) {
      region.vertices.push_back(sheet_point(data, vr, r));
      region.ideal.push_back(false);
    } else if (c == CausalClass::Null) {
      region.vertices.push_back(make_null_ray(data, vr).direction);
      region.ideal.push_back(true);
    } else {
      throw Error(ErrorCode::NotLorentzian, "chamber vertex " + std::to_string(k + 1) + " is " +
                                                std::string(to_string(c)));
    }
    if (sign < 0) region.vertices.back() = -region.vertices.back();
  }
  return region;
}

ChamberRegion chamber_region(const CartanData& data, const ChamberRegion& fundamental, const WeylWord& w) {
  ChamberRegion out = fundamental;
  out.word = fundamental.word * w;
  for (std::size_t k = 0; k < out.vertices.size(); ++k) {
    out.vertices[k] = act_on_cartan(data.matrix(), w, fundamental.vertices[k]);
    if (out.ideal[k]) out.vertices[k] = make_null_ray(data, out.vertices[k], 1e-9).direction;
  }
  return out;
}

ChamberRegion region_for(const CartanData& data, const SimplexRef& s, double r) {
  return chamber_region(data, fundamental_chamber_region(data, s.sign, r), s.word);
}

std::vector<ChamberRegion> tessellate(const CartanData& data, int sign, double r, std::size_t depth) {
  const ChamberRegion base = fundamental_chamber_region(data, sign, r);
  std::vector<ChamberRegion> out;
  if (data.rank() == 2) {
    const auto lo = -static_cast<std::int64_t>(depth / 2);
    const auto hi = static_cast<std::int64_t>((depth + 1) / 2);
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(chamber_region(data, base, rank2_word(n)));
  } else {
    for (const auto& w : elements_up_to_length(data.matrix(), depth)) out.push_back(chamber_region(data, base, w));
  }
  return out;
}

std::vector<double> vertex_angles(const CartanData& data, const ChamberRegion& region) {
  const std::size_t n = region.vertices.size();
  std::vector<double> out(n, 0.0);
  if (n != 3) return out;
  for (std::size_t k = 0; k < 3; ++k) {
    if (region.ideal[k]) continue;
    out[k] = angle_at(data, unit(region.vertices[k], false, region.r),
                      unit(region.vertices[(k + 1) % 3], region.ideal[(k + 1) % 3], region.r),
                      unit(region.vertices[(k + 2) % 3], region.ideal[(k + 2) % 3], region.r));
  }
  return out;
}

double region_volume(const CartanData& data, const ChamberRegion& region) {
  if (region.vertices.size() == 2) {
    if (region.ideal[0] || region.ideal[1]) return INFINITY;
    return std::sqrt(-region.r) *
           unit_distance(data, unit(region.vertices[0], false, region.r), unit(region.vertices[1], false, region.r));
  }
  std::array<CartanVector, 3> v;
  std::array<bool, 3> id{};
  for (std::size_t k = 0; k < 3; ++k) {
    v[k] = unit(region.vertices[k], region.ideal[k], region.r);
    id[k] = region.ideal[k];
  }
  return -region.r * triangle_area(data, v, id);
}

std::vector<double> evaluate_barycentric(const CartanData& data, const ChamberRegion& region, const CartanVector& p,
                                         double tol) {
  if (p.size() != data.rank()) throw Error(ErrorCode::DimensionMismatch, "point rank");
  const double q = form(data, p, p);
  const double size = std::max(1.0, max_abs(p.coords));
  if (std::abs(q - region.r) > tol * size * size || cone_side(data, p) != region.sign)
    throw Error(ErrorCode::NotOnSimplex, "point is not on the sheet of the region");
  for (std::size_t i = 1; i <= data.rank(); ++i)
    if (facet_value(data, region, i, p) < -tol * size)
      throw Error(ErrorCode::NotOnSimplex, "point violates facet " + std::to_string(i));
  if (region.word.empty()) return barycentric_unchecked(data, region, p);
  return barycentric_unchecked(data, pulled_back(data, region),
                               act_on_cartan(data.matrix(), region.word.inverse(), p));
}

EmbeddedPoint embed_point(const CartanData& data, const ChamberRegion& region, const std::vector<double>& lambda_in) {
  const std::size_t n = region.vertices.size();
  if (lambda_in.size() != n) throw Error(ErrorCode::DimensionMismatch, "barycentric coordinate count");
  double total = 0;
  for (double l : lambda_in) {
    if (!(l >= 0) || !std::isfinite(l)) throw Error(ErrorCode::NotOnSimplex, "barycentric coordinates must be >= 0");
    total += l;
  }
  if (!(total > 0)) throw Error(ErrorCode::NotOnSimplex, "barycentric coordinates sum to zero");
  std::vector<double> lambda = lambda_in;
  for (double& l : lambda) l /= total;

  const std::size_t ref = static_cast<std::size_t>(std::max_element(lambda.begin(), lambda.end()) - lambda.begin());
  if (!region.word.empty()) {
    const EmbeddedPoint base = embed_point(data, pulled_back(data, region), lambda);
    if (base.ideal) return EmbeddedPoint{region.vertices[ref], true};
    return EmbeddedPoint{act_on_cartan(data.matrix(), region.word, base.point), false};
  }
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < n; ++k)
    if (k != ref && lambda[k] > 1e-15) free.push_back(k);
  if (free.empty()) return EmbeddedPoint{region.vertices[ref], static_cast<bool>(region.ideal[ref])};

  if (n == 2) {
    if (region.ideal[0] || region.ideal[1])
      throw Error(ErrorCode::UnsupportedRank, "rank-2 chamber with an ideal endpoint");
    const CartanVector v0 = unit(region.vertices[0], false, region.r);
    const CartanVector v1 = unit(region.vertices[1], false, region.r);
    const double d = unit_distance(data, v0, v1);
    CartanVector p = (std::sinh(lambda[0] * d) / std::sinh(d)) * v0 + (std::sinh(lambda[1] * d) / std::sinh(d)) * v1;
    return EmbeddedPoint{std::sqrt(-region.r) * p, false};
  }

  const std::size_t m = free.size();
  auto point_of = [&](const std::vector<double>& theta) {
    std::vector<double> w(n, 0.0);
    w[ref] = 1.0;
    for (std::size_t j = 0; j < m; ++j) w[free[j]] = std::exp(theta[j]);
    return weighted_point(data, region, w);
  };
  auto residual = [&](const std::vector<double>& theta) {
    std::vector<double> lam = barycentric_unchecked(data, region, point_of(theta));
    std::vector<double> res(m);
    for (std::size_t j = 0; j < m; ++j) res[j] = lam[free[j]] - lambda[free[j]];
    return res;
  };

  std::vector<double> theta(m);
  for (std::size_t j = 0; j < m; ++j) theta[j] = std::log(lambda[free[j]] / lambda[ref]);
  std::vector<double> res = residual(theta);
  double err = max_abs(res);
  constexpr double h = 1e-6;
  for (int iter = 0; iter < 100 && err > 1e-14; ++iter) {
    std::array<std::array<double, 2>, 2> jac{};
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> tp = theta, tm = theta;
      tp[j] += h;
      tm[j] -= h;
      std::vector<double> rp = residual(tp), rm = residual(tm);
      for (std::size_t i = 0; i < m; ++i) jac[i][j] = (rp[i] - rm[i]) / (2 * h);
    }
    std::vector<double> step(m);
    if (m == 1) {
      if (jac[0][0] == 0) break;
      step[0] = -res[0] / jac[0][0];
    } else {
      const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
      if (det == 0 || !std::isfinite(det)) break;
      step[0] = -(jac[1][1] * res[0] - jac[0][1] * res[1]) / det;
      step[1] = -(-jac[1][0] * res[0] + jac[0][0] * res[1]) / det;
    }
    double alpha = 1.0;
    bool improved = false;
    while (alpha > 1e-6) {
      std::vector<double> trial = theta;
      for (std::size_t j = 0; j < m; ++j) trial[j] += alpha * step[j];
      std::vector<double> tr = residual(trial);
      if (max_abs(tr) < err) {
        theta = trial;
        res = tr;
        err = max_abs(tr);
        improved = true;
        break;
      }
      alpha /= 2;
    }
    if (!improved) break;
  }
  if (err > 1e-10) throw Error(ErrorCode::SolverDiverged, "barycentric inversion residual " + std::to_string(err));
  return EmbeddedPoint{point_of(theta), false};
}

EmbeddedPoint embed(const CartanData& data, const BarycentricPoint& bp, double r) {
  return embed_point(data, region_for(data, bp.simplex, r), bp.lambda);
}

bool interiors_disjoint(const CartanData& data, const ChamberRegion& x, const ChamberRegion& y, double tol) {
  auto separated_by = [&](const ChamberRegion& facets, const ChamberRegion& other) {
    for (std::size_t i = 1; i <= data.rank(); ++i) {
      bool all_out = true;
      for (const auto& v : other.vertices)
        if (facet_value(data, facets, i, v) > tol * std::max(1.0, max_abs(v.coords))) {
          all_out = false;
          break;
        }
      if (all_out) return true;
    }
    return false;
  };
  if (x.sign != y.sign) return true;
  return separated_by(x, y) || separated_by(y, x);
}

std::vector<CartanVector> geodesic_samples(const CartanData& data, const CartanVector& p, bool p_ideal,
                                           const CartanVector& q, bool q_ideal, double r, std::size_t segments) {
  if (segments < 1) segments = 1;
  const double scale = std::sqrt(-r);
  std::vector<CartanVector> out;
  if (p_ideal && !q_ideal) {
    out = geodesic_samples(data, q, false, p, true, r, segments);
    std::reverse(out.begin(), out.end());
    return out;
  }
  const CartanVector pu = unit(p, p_ideal, r), qu = unit(q, q_ideal, r);
  if (!p_ideal && !q_ideal) {
    const double d = unit_distance(data, pu, qu);
    for (std::size_t k = 0; k <= segments; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(segments);
      if (d == 0) {
        out.push_back(p);
        continue;
      }
      out.push_back(scale * ((std::sinh((1 - s) * d) / std::sinh(d)) * pu + (std::sinh(s * d) / std::sinh(d)) * qu));
    }
    return out;
  }
  if (!p_ideal) {
    CartanVector u = qu + form(data, pu, qu) * pu;
    u = (1.0 / std::sqrt(form(data, u, u))) * u;
    for (std::size_t k = 0; k < segments; ++k) {
      const double tau = 2 * std::atanh(static_cast<double>(k) / static_cast<double>(segments));
      out.push_back(scale * (std::cosh(tau) * pu + std::sinh(tau) * u));
    }
    out.push_back(q);
    return out;
  }
  const double c = 1.0 / std::sqrt(-2 * form(data, pu, qu));
  out.push_back(p);
  for (std::size_t k = 1; k < segments; ++k) {
    const double s = std::atanh(1 - 2 * static_cast<double>(k) / static_cast<double>(segments));
    out.push_back(scale * ((c * std::exp(s)) * pu + (c * std::exp(-s)) * qu));
  }
  out.push_back(q);
  return out;
}

DiskFrame disk_frame(const CartanData& data) {
  CartanVector rho = to_real(forward_reference(data));
  DiskFrame f{(1.0 / std::sqrt(-form(data, rho, rho))) * rho, {}};
  for (std::size_t k = 0; k < data.rank() && f.spatial.size() + 1 < data.rank(); ++k) {
    CartanVector u{std::vector<double>(data.rank(), 0.0), Basis::CompactZ};
    u.coords[k] = 1.0;
    u = u + form(data, u, f.e0) * f.e0;
    for (const auto& e : f.spatial) u = u - form(data, u, e) * e;
    const double nn = form(data, u, u);
    if (nn > 1e-12) f.spatial.push_back((1.0 / std::sqrt(nn)) * u);
  }
  return f;
}

std::vector<double> project_to_disk(const CartanData& data, const DiskFrame& frame, const CartanVector& p, bool ideal) {
  CartanVector v = p;
  if (!ideal) v = (1.0 / std::sqrt(-form(data, p, p))) * p;
  double time = -form(data, v, frame.e0);
  if (time < 0) {
    v = -v;
    time = -time;
  }
  std::vector<double> out;
  for (const auto& e : frame.spatial) out.push_back(form(data, v, e) / (ideal ? time : 1 + time));
  return out;
}

}  // namespace kma
