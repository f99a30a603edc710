#include "kma/twintree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kma {

Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }

Gaussian parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty complex number");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  Rational imv;
  if (im.empty() || im == "+") imv = 1;
  else if (im == "-") imv = -1;
  else imv = parse_rational(im.front() == '+' ? im.substr(1) : im);
  return {re.empty() ? Rational(0) : parse_rational(re), imv};
}

std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = z.im == 1 ? "" : z.im == -1 ? "-" : to_string(z.im);
  if (z.re == 0) return im + "i";
  if (z.im > 0) im = "+" + im;
  return to_string(z.re) + im + "i";
}

U2Element::U2Element(std::initializer_list<std::pair<const std::int64_t, Gaussian>> init) {
  for (const auto& [k, z] : init) set(k, at(k) + z);
}

void U2Element::set(std::int64_t k, const Gaussian& z) {
  if (z.zero()) hinges_.erase(k);
  else hinges_[k] = z;
}

Gaussian U2Element::at(std::int64_t k) const {
  auto it = hinges_.find(k);
  return it == hinges_.end() ? Gaussian{} : it->second;
}

std::optional<std::int64_t> U2Element::min_hinge() const {
  if (hinges_.empty()) return std::nullopt;
  return hinges_.begin()->first;
}

U2Element U2Element::below(std::int64_t n) const {
  U2Element out;
  for (const auto& [k, z] : hinges_)
    if (k < n) out.hinges_.emplace(k, z);
  return out;
}

U2Element U2Element::operator-() const {
  U2Element out;
  for (const auto& [k, z] : hinges_) out.hinges_.emplace(k, -z);
  return out;
}

U2Element operator+(const U2Element& u, const U2Element& v) {
  U2Element out = u;
  for (const auto& [k, z] : v.hinges()) out.set(k, out.at(k) + z);
  return out;
}

U2Element operator-(const U2Element& u, const U2Element& v) { return u + (-v); }

U2Element u2_compose(const U2Element& u, const U2Element& v) { return u + v; }

U2Element translate_u2(std::int64_t m, const U2Element& u) {
  U2Element out;
  for (const auto& [k, z] : u.hinges()) out.set(k + 2 * m, z);
  return out;
}

U2Element mirror_to_u1(const U2Element& u) {
  U2Element out;
  for (const auto& [k, z] : u.hinges()) out.set(1 - k, z);
  return out;
}

std::string to_string(const U2Element& u) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, z] : u.hinges()) {
    os << (first ? "" : ", ") << k << "->" << to_string(z);
    first = false;
  }
  os << '}';
  return os.str();
}

TreeChamber normal_form(int sign, std::int64_t n, const U2Element& f) { return TreeChamber{sign, n, f.below(n)}; }

TreeChamber act_on_chamber(const U2Element& u, const TreeChamber& c) { return normal_form(c.sign, c.n, c.f + u); }

TreeChamber translate_chamber(std::int64_t m, const TreeChamber& c) {
  return TreeChamber{c.sign, c.n + 2 * m, translate_u2(m, c.f)};
}

std::int64_t gallery_distance(const TreeChamber& c, const TreeChamber& c2) {
  if (c.sign != c2.sign) throw Error(ErrorCode::SignMismatch, "chambers of opposite trees");
  if (c.f == c2.f) return c.n > c2.n ? c.n - c2.n : c2.n - c.n;
  const std::int64_t d = std::min({*(c.f - c2.f).min_hinge(), c.n, c2.n});
  return (c.n - d) + (c2.n - d);
}

RayRef apply_weyl_to_ray(std::size_t j, const RayRef& ray) {
  const RaySide flipped = ray.side == RaySide::L ? RaySide::R : RaySide::L;
  return RayRef{ray.sign, flipped, chamber_action(j, ray.n)};
}

RayRef translate_ray(std::int64_t m, const RayRef& ray) { return RayRef{ray.sign, ray.side, ray.n + 2 * m}; }

End fundamental_end(int index, int sign) {
  if (index != 1 && index != 2) throw Error(ErrorCode::IndexOutOfRange, "end index must be 1 or 2");
  return End{End::Kind::Fundamental, index, U2Element{}, sign};
}

End deformed_end(const U2Element& u, int sign) {
  if (u.empty()) return fundamental_end(1, sign);
  return End{End::Kind::Deformed, 1, u, sign};
}

End apply_weyl_to_end(std::size_t j, const End& e) {
  if (j != 1 && j != 2) throw Error(ErrorCode::IndexOutOfRange, "rank-2 generator " + std::to_string(j));
  if (e.kind == End::Kind::Deformed) throw Error(ErrorCode::UnrepresentableEnd, "Weyl image of a deformed end");
  return fundamental_end(3 - e.index, e.sign);
}

std::string to_string(const End& e) {
  std::string s = e.sign > 0 ? "+" : "-";
  if (e.kind == End::Kind::Fundamental) return "e" + std::to_string(e.index) + s;
  return to_string(e.u) + "e1" + s;
}

DeformedApartment deformed_apartment(const U2Element& u, int sign) {
  DeformedApartment out;
  out.first = fundamental_end(2, sign);
  out.second = deformed_end(u, sign);
  if (u.empty()) {
    out.fundamental = true;
    return out;
  }
  out.fixed_ray = RayRef{sign, RaySide::L, *u.min_hinge()};
  for (auto it = u.hinges().rbegin(); it != u.hinges().rend(); ++it) out.hinges.emplace_back(it->first, it->second);
  return out;
}

bool ModelLine::contains(const TreeChamber& c) const {
  if (c.sign != sign) return false;
  if (!bent) return c == normal_form(sign, c.n, u);
  return (c.n >= turn && c == normal_form(sign, c.n, u)) || (c.n > turn && c == normal_form(sign, c.n, v));
}

ModelLine line_through_ends(const End& a, const End& b) {
  if (a.sign != b.sign) throw Error(ErrorCode::SignMismatch, "ends of opposite trees");
  if (a == b) throw Error(ErrorCode::UnrepresentableEnd, "a line needs two distinct ends");
  const bool a_down = a.kind == End::Kind::Fundamental && a.index == 2;
  const bool b_down = b.kind == End::Kind::Fundamental && b.index == 2;
  ModelLine line;
  line.sign = a.sign;
  line.first = a;
  line.second = b;
  if (a_down || b_down) {
    line.u = a_down ? b.u : a.u;
    return line;
  }
  line.bent = true;
  line.u = a.u;
  line.v = b.u;
  line.turn = *(a.u - b.u).min_hinge();
  return line;
}

ModelLine line_through_chambers(const TreeChamber& c, const TreeChamber& c2) {
  if (c.sign != c2.sign) throw Error(ErrorCode::SignMismatch, "chambers of opposite trees");
  const TreeChamber& lo = c.n <= c2.n ? c : c2;
  const TreeChamber& hi = c.n <= c2.n ? c2 : c;
  if (normal_form(hi.sign, lo.n, hi.f) == lo)
    return line_through_ends(fundamental_end(2, c.sign), deformed_end(hi.f, c.sign));
  return line_through_ends(deformed_end(c.f, c.sign), deformed_end(c2.f, c.sign));
}

NullRay halo_embed(const CartanData& data, const End& e) {
  if (e.kind == End::Kind::Deformed) throw Error(ErrorCode::UnrepresentableEnd, "Psi_inf of " + to_string(e));
  NullRays rays = null_rays_rank2(data);
  if (e.index == 1) return e.sign > 0 ? rays.x1_plus : rays.x1_minus;
  return e.sign > 0 ? rays.x2_plus : rays.x2_minus;
}

NullRay halo_embed(const CartanData& data, const WeylWord& w, const End& e) {
  NullRay base = halo_embed(data, e);
  return make_null_ray(data, act_on_cartan(data.matrix(), w, base.direction), 1e-9);
}

SliceVector halo_rotate(const CartanData& data, std::size_t i, double s, double t, const NullRay& ray) {
  return exp_rotation(data.matrix(), i, s, t, slice_from_cartan(i, ray.direction));
}

bool b_k_stabilizer_check(const CartanData& data, const std::vector<BKGenerator>& k) {
  WeylWord w;
  for (const auto& g : k)
    if (g.kind == BKGenerator::Kind::Weyl) w = w * g.word;
  NullRays rays = null_rays_rank2(data);
  for (const NullRay* ray : {&rays.x1_plus, &rays.x2_plus, &rays.x1_minus, &rays.x2_minus}) {
    NullRay image = make_null_ray(data, act_on_cartan(data.matrix(), w, ray->direction), 1e-9);
    if (!image.same_ray(*ray, 1e-9)) return false;
  }
  return true;
}

}  // namespace kma
