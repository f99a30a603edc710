#include "kma/embedding.hpp"
#include "kma/io.hpp"
#include "kma/lorentz.hpp"
#include "kma/roots.hpp"
#include "kma/su2flow.hpp"
#include "kma/svg.hpp"
#include "kma/twintree.hpp"
#include "kma/verify.hpp"
#include "kma/weyl.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using Json = nlohmann::ordered_json;
using namespace kma;

struct RunConfig {
  std::string matrix = "2,-3;-3,2";
  std::int64_t height = 4;
  double r = -1;
  std::size_t depth = 6;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string out;
  std::string format = "json";
  int sign = 1;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed_given) return cfg.seed;
  if (const char* env = std::getenv("KMA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("KMA_SEED is not an integer: ") + env);
    }
  }
  return cfg.seed;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + cfg.out);
  f << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

Json exact_vector(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json real_vector(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json exact_matrix(const RationalMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(to_double(parse_rational(tok)));
  return out;
}

/// "0:1+i,3:-2" → {0 ↦ 1+i, 3 ↦ −2}
U2Element parse_u2(const std::string& text) {
  U2Element u;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.find_first_not_of(' ') == std::string::npos) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "hinge '" + tok + "' needs the form k:z");
    std::int64_t k = 0;
    try {
      k = std::stoll(tok.substr(0, colon));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad hinge index in '" + tok + "'");
    }
    u.set(k, u.at(k) + parse_gaussian(tok.substr(colon + 1)));
  }
  return u;
}

/// "n" or "n|k:z,..."
TreeChamber parse_chamber(const std::string& text, int sign) {
  auto bar = text.find('|');
  std::int64_t n = 0;
  try {
    n = std::stoll(text.substr(0, bar));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad chamber label in '" + text + "'");
  }
  return normal_form(sign, n, bar == std::string::npos ? U2Element{} : parse_u2(text.substr(bar + 1)));
}

Json u2_json(const U2Element& u) {
  Json a = Json::array();
  for (const auto& [k, z] : u.hinges()) a.push_back(Json{{"k", k}, {"re", to_string(z.re)}, {"im", to_string(z.im)}});
  return a;
}

Json chamber_json(const TreeChamber& c) { return Json{{"sign", c.sign}, {"n", c.n}, {"hinges", u2_json(c.f)}}; }

Json end_json(const End& e) {
  Json j{{"sign", e.sign}};
  if (e.kind == End::Kind::Fundamental) {
    j["kind"] = "fundamental";
    j["index"] = e.index;
  } else {
    j["kind"] = "deformed";
    j["hinges"] = u2_json(e.u);
  }
  return j;
}

Json ray_json(const NullRay& ray) {
  return Json{{"direction", real_vector(ray.direction.coords)}, {"forward", ray.forward}};
}

Json header(const std::string& command, const RunConfig& cfg, std::uint64_t seed) {
  return Json{{"command", command}, {"matrix", cfg.matrix}, {"seed", seed}};
}

std::string header_line(const std::string& command, const RunConfig& cfg, std::uint64_t seed) {
  return fmt::format("kma {} matrix={} seed={}", command, cfg.matrix, seed);
}

void require_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed)
    if (cfg.format == f) return;
  throw Error(ErrorCode::ParseError, "format '" + cfg.format + "' is not available for this command");
}

int cmd_classify(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  const auto& c = data.classification();
  Inertia in = signature(data.grams().coroot_gram);
  Json j = header("classify", cfg, seed);
  j["kind"] = std::string(to_string(c.kind));
  j["strict"] = c.strict();
  j["det_sign"] = c.det_sign;
  j["d"] = exact_vector(data.symmetrizer().d);
  j["root_norms"] = exact_vector(data.symmetrizer().root_norms);
  j["coroot_gram"] = exact_matrix(data.grams().coroot_gram);
  j["signature"] = Json::array({in.plus, in.minus, in.zero});
  emit_json(cfg, j);
  return 0;
}

std::vector<Root> roots_for(const CartanData& data, std::int64_t height) {
  return real_roots_up_to_height(data.matrix(), std::max<std::int64_t>(height, 1));
}

int cmd_roots(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  const std::vector<Root> roots = roots_for(data, cfg.height);
  const bool rank2 = data.rank() == 2 && data.a(0, 1) * data.a(1, 0) >= 4;
  if (cfg.format == "csv") {
    std::string out = "# " + header_line("roots", cfg, seed) + "\r\n";
    std::vector<std::string> head;
    for (std::size_t i = 1; i <= data.rank(); ++i) head.push_back("k" + std::to_string(i));
    head.insert(head.end(), {"height", "norm", "class"});
    if (rank2) head.insert(head.end(), {"phi_branch", "phi_index"});
    out += csv_row(head);
    for (const auto& r : roots) {
      std::vector<std::string> row;
      for (auto k : r.k) row.push_back(std::to_string(k));
      row.push_back(std::to_string(r.height()));
      row.push_back(to_string(norm(data, r)));
      row.emplace_back("real");
      if (rank2) {
        PhiLabel l = phi_label(data, r);
        row.push_back(std::to_string(l.branch));
        row.push_back(std::to_string(l.index));
      }
      out += csv_row(row);
    }
    emit(cfg, out);
    return 0;
  }
  Json j = header("roots", cfg, seed);
  j["height"] = std::max<std::int64_t>(cfg.height, 1);
  j["count"] = roots.size();
  Json list = Json::array();
  for (const auto& r : roots) {
    Json e{{"k", r.k}, {"height", r.height()}, {"norm", to_string(norm(data, r))}, {"class", "real"}};
    if (rank2) {
      PhiLabel l = phi_label(data, r);
      e["phi_branch"] = l.branch;
      e["phi_index"] = l.index;
    }
    list.push_back(e);
  }
  j["roots"] = list;
  emit_json(cfg, j);
  return 0;
}

struct ExpArgs {
  std::size_t slice = 1;
  double s = 0, t = 0;
  std::string vector;
};

int cmd_exp(const RunConfig& cfg, const ExpArgs& args) {
  require_format(cfg, {"json"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  const std::size_t n = data.rank();
  std::vector<double> raw = parse_reals(args.vector);
  if (raw.size() != n && raw.size() != n + 2)
    throw Error(ErrorCode::DimensionMismatch, fmt::format("--vector needs {} or {} entries", n, n + 2));
  SliceVector v{args.slice, std::vector<double>(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n)),
                raw.size() > n ? raw[n] : 0.0, raw.size() > n ? raw[n + 1] : 0.0};
  SliceVector closed = exp_rotation(data.matrix(), args.slice, args.s, args.t, v);
  SliceVector oracle = series_oracle(data.matrix(), args.slice, args.s, args.t, v, 60);
  auto sv = [](const SliceVector& x) { return Json{{"z", real_vector(x.z)}, {"x", x.x}, {"y", x.y}}; };
  Json j = header("exp", cfg, seed);
  j["slice"] = args.slice;
  j["s"] = args.s;
  j["t"] = args.t;
  j["closed_form"] = sv(closed);
  j["series_oracle"] = sv(oracle);
  j["max_abs_deviation"] = max_abs_difference(closed, oracle);
  HemispherePoint h = hemisphere_point(args.s, args.t);
  j["hemisphere"] = Json{{"r", h.r}, {"psi", h.psi ? Json(*h.psi) : Json(nullptr)}};
  emit_json(cfg, j);
  return 0;
}

int cmd_tessellate(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "svg"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  std::vector<ChamberRegion> regions = tessellate(data, cfg.sign, cfg.r, cfg.depth);
  const bool rank2 = data.rank() == 2;
  if (cfg.format == "svg") {
    emit(cfg, tessellation_svg(data, regions, header_line("tessellate", cfg, seed)));
    return 0;
  }
  if (cfg.format == "csv") {
    std::string out = "# " + header_line("tessellate", cfg, seed) + "\r\n";
    std::vector<std::string> head{"word", "w_label", "vertex", "ideal"};
    for (std::size_t i = 1; i <= data.rank(); ++i) head.push_back("c" + std::to_string(i));
    out += csv_row(head);
    for (const auto& reg : regions)
      for (std::size_t k = 0; k < reg.vertices.size(); ++k) {
        std::vector<std::string> row{to_string(reg.word), rank2 ? std::to_string(rank2_label(reg.word)) : "",
                                     std::to_string(k + 1), reg.ideal[k] ? "1" : "0"};
        for (double c : reg.vertices[k].coords) row.push_back(format_number(c));
        out += csv_row(row);
      }
    emit(cfg, out);
    return 0;
  }
  Json j = header("tessellate", cfg, seed);
  j["r"] = cfg.r;
  j["depth"] = cfg.depth;
  j["sign"] = cfg.sign;
  j["count"] = regions.size();
  Json list = Json::array();
  for (const auto& reg : regions) {
    Json e{{"word", to_string(reg.word)}};
    if (rank2) e["w_label"] = rank2_label(reg.word);
    Json verts = Json::array();
    for (const auto& v : reg.vertices) verts.push_back(real_vector(v.coords));
    e["vertices"] = verts;
    e["ideal"] = reg.ideal;
    e[rank2 ? "length" : "area"] = region_volume(data, reg);
    if (!rank2) e["angles"] = vertex_angles(data, reg);
    list.push_back(e);
  }
  j["chambers"] = list;
  emit_json(cfg, j);
  return 0;
}

struct EmbedArgs {
  std::string word;
  std::string lambda;
};

int cmd_embed(const RunConfig& cfg, const EmbedArgs& args) {
  require_format(cfg, {"json"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  BarycentricPoint bp{SimplexRef{cfg.sign, parse_word(args.word), {}}, parse_reals(args.lambda)};
  ChamberRegion region = region_for(data, bp.simplex, cfg.r);
  EmbeddedPoint p = embed_point(data, region, bp.lambda);
  Json j = header("embed", cfg, seed);
  j["r"] = cfg.r;
  j["sign"] = cfg.sign;
  j["word"] = to_string(bp.simplex.word);
  j["lambda"] = bp.lambda;
  j["point"] = real_vector(p.point.coords);
  j["ideal"] = p.ideal;
  if (!p.ideal) j["lambda_roundtrip"] = evaluate_barycentric(data, region, p.point);
  emit_json(cfg, j);
  return 0;
}

struct TreeArgs {
  std::string c1 = "0", c2 = "0";
  std::string u;
};

int cmd_tree(const RunConfig& cfg, const std::string& query, const TreeArgs& args) {
  require_format(cfg, {"json"});
  const std::uint64_t seed = resolve_seed(cfg);
  Json j = header("tree " + query, cfg, seed);
  j.erase("matrix");
  if (query == "distance") {
    TreeChamber a = parse_chamber(args.c1, cfg.sign), b = parse_chamber(args.c2, cfg.sign);
    j["chambers"] = Json::array({chamber_json(a), chamber_json(b)});
    j["distance"] = gallery_distance(a, b);
  } else if (query == "apartment") {
    DeformedApartment ap = deformed_apartment(parse_u2(args.u), cfg.sign);
    j["fundamental"] = ap.fundamental;
    if (!ap.fundamental) {
      j["fixed_ray"] = Json{{"side", "L"}, {"n", ap.fixed_ray.n}};
      Json hs = Json::array();
      for (const auto& [k, z] : ap.hinges) hs.push_back(Json{{"k", k}, {"re", to_string(z.re)}, {"im", to_string(z.im)}});
      j["hinges"] = hs;
    }
    j["ends"] = Json::array({end_json(ap.first), end_json(ap.second)});
  } else {
    TreeChamber c = parse_chamber(args.c1, cfg.sign);
    U2Element u = parse_u2(args.u);
    TreeChamber image = act_on_chamber(u, c);
    j["chamber"] = chamber_json(c);
    j["u"] = u2_json(u);
    j["image"] = chamber_json(image);
    j["fixed"] = image == c;
  }
  emit_json(cfg, j);
  return 0;
}

struct HaloArgs {
  std::size_t slice = 0;
  double s = 0, t = 0;
};

int cmd_halo(const RunConfig& cfg, const HaloArgs& args) {
  require_format(cfg, {"json"});
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  Json j = header("halo", cfg, seed);
  Json rays = Json::object();
  for (int sign : {1, -1})
    for (int i : {1, 2}) {
      NullRay ray = halo_embed(data, fundamental_end(i, sign));
      Json e = ray_json(ray);
      e["alpha_bar"] = Json::array({alpha_bar(data.matrix(), ray.direction, 1), alpha_bar(data.matrix(), ray.direction, 2)});
      e["norm"] = form(data, ray.direction, ray.direction);
      rays[fmt::format("x{}{}", i, sign > 0 ? "+" : "-")] = e;
    }
  j["rays"] = rays;
  if (args.slice) {
    SliceVector v = halo_rotate(data, args.slice, args.s, args.t, halo_embed(data, fundamental_end(1, 1)));
    j["rotated_x1+"] = Json{{"slice", args.slice}, {"s", args.s}, {"t", args.t}, {"z", real_vector(v.z)}, {"x", v.x},
                            {"y", v.y}, {"slice_norm", slice_form(data, v, v)}};
  }
  emit_json(cfg, j);
  return 0;
}

int cmd_plot_roots(const RunConfig& cfg) {
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  emit(cfg, plot_roots_svg(data, roots_for(data, cfg.height), header_line("plot roots", cfg, seed)));
  return 0;
}

int cmd_verify(const RunConfig& cfg, double corrupt) {
  const std::uint64_t seed = resolve_seed(cfg);
  CartanData data(GCM::parse(cfg.matrix));
  if (corrupt != 0) data = data.with_corrupted_gram(corrupt);
  VerifyReport report = run_verify(data, seed);
  emit(cfg, report.render());
  return report.all_passed() ? 0 : 1;
}

int fail(int code, std::string_view error, std::string_view detail) {
  std::cerr << Json{{"error", error}, {"detail", detail}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-Moody root systems, Weyl groups and lightcone embeddings"};
  app.require_subcommand(1);
  RunConfig cfg;
  ExpArgs exp_args;
  EmbedArgs embed_args;
  TreeArgs tree_args;
  HaloArgs halo_args;
  double corrupt = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-m,--matrix", cfg.matrix, "GCM rows separated by ';', entries by ','");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks (falls back to KMA_SEED)")
        ->each([&](const std::string&) { cfg.seed_given = true; });
    sub->add_option("-o,--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  };

  auto* classify = app.add_subcommand("classify", "type classification and Gram data");
  common(classify);
  auto* roots = app.add_subcommand("roots", "real roots up to a height");
  common(roots);
  roots->add_option("--height", cfg.height, "height cap (values below 1 mean 1)");
  auto* exp = app.add_subcommand("exp", "closed-form exp(ad) on a slice against the series oracle");
  common(exp);
  exp->add_option("--slice", exp_args.slice, "generator index i")->required();
  exp->add_option("--s", exp_args.s, "coefficient of x_i");
  exp->add_option("--t", exp_args.t, "coefficient of y_i");
  exp->add_option("--vector", exp_args.vector, "z_1,...,z_l[,x,y]")->required();
  auto* tess = app.add_subcommand("tessellate", "Weyl chambers on the sheet (x,x) = r");
  common(tess);
  tess->add_option("--r", cfg.r, "sheet parameter r < 0");
  tess->add_option("--depth", cfg.depth, "word length (rank 2: chamber count minus one)");
  tess->add_option("--sign", cfg.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  auto* embed = app.add_subcommand("embed", "embed a barycentric point of a chamber");
  common(embed);
  embed->add_option("--r", cfg.r, "sheet parameter r < 0");
  embed->add_option("--sign", cfg.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
  embed->add_option("--word", embed_args.word, "chamber word, e.g. 2,1");
  embed->add_option("--lambda", embed_args.lambda, "barycentric coordinates")->required();
  auto* tree = app.add_subcommand("tree", "rank-2 twin-tree model");
  tree->require_subcommand(1);
  std::string tree_query;
  const std::array<std::pair<const char*, const char*>, 3> tree_queries{{
      {"distance", "gallery distance between two chambers"},
      {"apartment", "deformed apartment of a U2 element"},
      {"act", "U2 element acting on a chamber"},
  }};
  for (const auto& [q, help] : tree_queries) {
    auto* sub = tree->add_subcommand(q, help);
    common(sub);
    sub->add_option("--sign", cfg.sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
    sub->callback([&, q] { tree_query = q; });
    if (std::string_view(q) == "distance") {
      sub->add_option("--c1", tree_args.c1, "chamber n|k:z,...")->required();
      sub->add_option("--c2", tree_args.c2, "chamber n|k:z,...")->required();
    } else if (std::string_view(q) == "apartment") {
      sub->add_option("--u", tree_args.u, "U2 element k:z,...")->required();
    } else {
      sub->add_option("--c", tree_args.c1, "chamber n|k:z,...")->required();
      sub->add_option("--u", tree_args.u, "U2 element k:z,...")->required();
    }
  }
  auto* halo = app.add_subcommand("halo", "asymptote null rays and su(2) rotations of them");
  common(halo);
  halo->add_option("--slice", halo_args.slice, "rotate x1+ in this slice");
  halo->add_option("--s", halo_args.s, "coefficient of x_i");
  halo->add_option("--t", halo_args.t, "coefficient of y_i");
  auto* plot = app.add_subcommand("plot", "figures");
  plot->require_subcommand(1);
  auto* plot_roots = plot->add_subcommand("roots", "real roots coloured by partition branch");
  common(plot_roots);
  plot_roots->add_option("--height", cfg.height, "height cap");
  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  common(verify);
  verify->add_option("--corrupt-gram", corrupt, "perturb the compact Gram (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "UsageError", e.what());
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*roots) return cmd_roots(cfg);
    if (*exp) return cmd_exp(cfg, exp_args);
    if (*tess) return cmd_tessellate(cfg);
    if (*embed) return cmd_embed(cfg, embed_args);
    if (*tree) return cmd_tree(cfg, tree_query, tree_args);
    if (*halo) return cmd_halo(cfg, halo_args);
    if (*plot_roots) return cmd_plot_roots(cfg);
    if (*verify) return cmd_verify(cfg, corrupt);
  } catch (const Error& e) {
    const bool internal = e.code() == ErrorCode::SolverDiverged || e.code() == ErrorCode::NonTermination;
    return fail(internal ? 1 : 2, to_string(e.code()), e.detail());
  } catch (const std::exception& e) {
    return fail(1, "InternalError", e.what());
  }
  return fail(1, "InternalError", "no command ran");
}
