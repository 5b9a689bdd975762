#include "sqz/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sqz {

Json rational_to_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::BadInput, "rational must be a string");
  return rational_from_string(j.get<std::string>());
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_to_json(s.rat_part());
  Json j;
  j["a"] = rational_to_json(s.rat_part());
  j["b"] = rational_to_json(s.quad_part());
  j["d"] = s.discriminant().get_str();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(rational_from_json(j));
  if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.contains("d"))
    throw Error(ErrorCode::BadInput, "scalar must be \"p/q\" or {a,b,d}");
  Rational a = rational_from_json(j.at("a"));
  Rational b = rational_from_json(j.at("b"));
  Integer d(j.at("d").get<std::string>());
  return Scalar::quadratic(a, b, Rational(d));
}

Json mat2_to_json(const Mat2& m) {
  Json j;
  j["a"] = scalar_to_json(m.a());
  j["b"] = scalar_to_json(m.b());
  j["c"] = scalar_to_json(m.c());
  j["d"] = scalar_to_json(m.d());
  return j;
}

Mat2 mat2_from_json(const Json& j) {
  return Mat2(scalar_from_json(j.at("a")), scalar_from_json(j.at("b")),
              scalar_from_json(j.at("c")), scalar_from_json(j.at("d")));
}

Json point_to_json(const Point2& p) {
  Json j;
  j["x"] = scalar_to_json(p.x);
  j["y"] = scalar_to_json(p.y);
  return j;
}

Point2 point_from_json(const Json& j) {
  return Point2{scalar_from_json(j.at("x")), scalar_from_json(j.at("y"))};
}

Json projpoint_to_json(const ProjPoint& p) {
  Json j;
  j["x"] = scalar_to_json(p.x());
  j["y"] = scalar_to_json(p.y());
  return j;
}

ProjPoint projpoint_from_json(const Json& j) {
  return ProjPoint(scalar_from_json(j.at("x")), scalar_from_json(j.at("y")));
}

Json region_to_json(const RegionSet& r) {
  Json polys = Json::array();
  for (const auto& poly : r.polygons()) {
    Json verts = Json::array();
    for (const Point2& v : poly.vertices()) verts.push_back(point_to_json(v));
    polys.push_back(std::move(verts));
  }
  return polys;
}

RegionSet region_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadInput, "region must be an array");
  std::vector<ConvexPolygon> polys;
  for (const Json& pj : j) {
    std::vector<Point2> verts;
    for (const Json& vj : pj) verts.push_back(point_from_json(vj));
    polys.push_back(ConvexPolygon::from_vertices(std::move(verts)));
  }
  return RegionSet(std::move(polys));
}

Json arc_to_json(const Arc& a) {
  Json j;
  j["p"] = projpoint_to_json(a.p());
  j["q"] = projpoint_to_json(a.q());
  j["w"] = projpoint_to_json(a.witness());
  return j;
}

Arc arc_from_json(const Json& j) {
  return Arc(projpoint_from_json(j.at("p")), projpoint_from_json(j.at("q")),
             projpoint_from_json(j.at("w")));
}

Json arcset_to_json(const ArcSet& a) {
  Json out = Json::array();
  for (const Arc& x : a) out.push_back(arc_to_json(x));
  return out;
}

ArcSet arcset_from_json(const Json& j) {
  ArcSet out;
  for (const Json& x : j) out.push_back(arc_from_json(x));
  return out;
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const WordLetter& l : w) {
    Json lj;
    lj["gen"] = l.gen;
    lj["exp"] = l.exp;
    out.push_back(std::move(lj));
  }
  return out;
}

Word word_from_json(const Json& j) {
  Word w;
  for (const Json& lj : j)
    w.push_back(WordLetter{lj.at("gen").get<std::string>(), lj.at("exp").get<long>()});
  return w;
}

Json group_element_to_json(const GroupElement& g) {
  Json j;
  j["word"] = word_to_json(g.word);
  j["matrix"] = mat2_to_json(g.matrix);
  return j;
}

GroupElement group_element_from_json(const Json& j) {
  return GroupElement{word_from_json(j.at("word")), mat2_from_json(j.at("matrix"))};
}

Json crown_to_json(const Crown& c) {
  Json j;
  j["frame"] = mat2_to_json(c.frame);
  j["r1_sq"] = rational_to_json(c.r1_sq);
  j["r2_sq"] = rational_to_json(c.r2_sq);
  return j;
}

Crown crown_from_json(const Json& j) {
  return Crown{mat2_from_json(j.at("frame")), rational_from_json(j.at("r1_sq")),
               rational_from_json(j.at("r2_sq"))};
}

Json squeeze_cert_to_json(const SqueezeCertificate& c) {
  Json j;
  j["schema_version"] = c.schema_version;
  j["kind"] = "squeeze";
  j["base_h"] = mat2_to_json(c.base_h);
  j["conj_n"] = c.conj_n;
  j["gamma"] = mat2_to_json(c.gamma);
  j["n"] = c.n;
  j["lambda_sq_lower"] = rational_to_json(c.lambda_sq_lower);
  j["M"] = rational_to_json(c.M);
  j["min_corner_sq"] = rational_to_json(c.min_corner_sq);
  j["margin"] = rational_to_json(c.margin);
  j["frame_u"] = mat2_to_json(c.frame_u);
  j["r1_sq"] = rational_to_json(c.r1_sq);
  j["r2_sq"] = rational_to_json(c.r2_sq);
  j["hull_sides"] = c.hull_sides;
  Json subset = Json::array();
  for (const GroupElement& g : c.subset) subset.push_back(group_element_to_json(g));
  j["subset"] = std::move(subset);
  Json pairs = Json::array();
  for (const PairEmptiness& p : c.pair_checks) {
    Json pj;
    pj["g"] = p.g_index;
    pj["h"] = p.h_index;
    pj["empty"] = p.empty;
    pairs.push_back(std::move(pj));
  }
  j["pair_checks"] = std::move(pairs);
  return j;
}

SqueezeCertificate squeeze_cert_from_json(const Json& j) {
  if (j.value("kind", "") != "squeeze")
    throw Error(ErrorCode::BadInput, "not a squeeze certificate");
  SqueezeCertificate c;
  c.schema_version = j.at("schema_version").get<int>();
  c.base_h = mat2_from_json(j.at("base_h"));
  c.conj_n = j.at("conj_n").get<long>();
  c.gamma = mat2_from_json(j.at("gamma"));
  c.n = j.at("n").get<long>();
  c.lambda_sq_lower = rational_from_json(j.at("lambda_sq_lower"));
  c.M = rational_from_json(j.at("M"));
  c.min_corner_sq = rational_from_json(j.at("min_corner_sq"));
  c.margin = rational_from_json(j.at("margin"));
  c.frame_u = mat2_from_json(j.at("frame_u"));
  c.r1_sq = rational_from_json(j.at("r1_sq"));
  c.r2_sq = rational_from_json(j.at("r2_sq"));
  c.hull_sides = j.at("hull_sides").get<int>();
  c.subset.clear();
  for (const Json& gj : j.at("subset"))
    c.subset.push_back(group_element_from_json(gj));
  c.pair_checks.clear();
  for (const Json& pj : j.at("pair_checks"))
    c.pair_checks.push_back(PairEmptiness{pj.at("g").get<size_t>(),
                                          pj.at("h").get<size_t>(),
                                          pj.at("empty").get<bool>()});
  return c;
}

Json contractive_pair_to_json(const ContractivePair& c) {
  Json j;
  j["kind"] = "contractive_pair";
  j["U"] = arc_to_json(c.U);
  j["t"] = mat2_to_json(c.t);
  j["power"] = c.power;
  j["margin"] = rational_to_json(c.margin);
  j["frame"] = mat2_to_json(c.frame);
  j["half_width"] = rational_to_json(c.half_width);
  return j;
}

ContractivePair contractive_pair_from_json(const Json& j) {
  if (j.value("kind", "") != "contractive_pair")
    throw Error(ErrorCode::BadInput, "not a contractive pair");
  return ContractivePair{arc_from_json(j.at("U")),
                         mat2_from_json(j.at("t")),
                         j.at("power").get<long>(),
                         rational_from_json(j.at("margin")),
                         mat2_from_json(j.at("frame")),
                         rational_from_json(j.at("half_width"))};
}

Json paradox_family_to_json(const ParadoxFamily& f) {
  Json j;
  j["kind"] = "paradox_family";
  j["n"] = f.n;
  j["m"] = f.m;
  Json items = Json::array();
  for (const ParadoxItem& it : f.items) {
    Json ij;
    ij["t"] = mat2_to_json(it.t);
    ij["U"] = arc_to_json(it.U);
    items.push_back(std::move(ij));
  }
  j["items"] = std::move(items);
  return j;
}

ParadoxFamily paradox_family_from_json(const Json& j) {
  if (j.value("kind", "") != "paradox_family")
    throw Error(ErrorCode::BadInput, "not a paradox family");
  ParadoxFamily f;
  f.n = j.at("n").get<long>();
  f.m = j.at("m").get<long>();
  for (const Json& ij : j.at("items"))
    f.items.push_back(ParadoxItem{mat2_from_json(ij.at("t")), arc_from_json(ij.at("U"))});
  return f;
}

Json paradox_cert_to_json(const ParadoxCertificate& c) {
  Json j;
  j["kind"] = "paradox_certificate";
  j["verified"] = c.verified;
  j["cover_first"] = c.cover_first;
  j["cover_second"] = c.cover_second;
  j["images_disjoint"] = c.images_disjoint;
  j["union_proper"] = c.union_proper;
  j["contractive"] = c.contractive;
  j["min_image_gap_sq"] = rational_to_json(c.min_image_gap_sq);
  j["uncovered_point"] =
      c.uncovered_point ? projpoint_to_json(*c.uncovered_point) : Json();
  j["overlap_pair"] = c.overlap_pair
                          ? Json::array({c.overlap_pair->first, c.overlap_pair->second})
                          : Json();
  j["complement_point"] =
      c.complement_point ? projpoint_to_json(*c.complement_point) : Json();
  j["failure"] = c.failure;
  return j;
}

Json falsify_report_to_json(const FalsifyReport& r) {
  Json j;
  j["kind"] = "falsify_report";
  j["density"] = r.density;
  j["seed"] = r.seed;
  j["samples_checked"] = r.samples_checked;
  Json cex = Json::array();
  for (const Point2& p : r.counterexamples) cex.push_back(point_to_json(p));
  j["counterexamples"] = std::move(cex);
  j["none_found"] = r.none_found();
  return j;
}

Json error_to_json(const Error& e) {
  Json j;
  j["error"] = error_code_name(e.code());
  j["message"] = e.what();
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::BadInput, std::string("json parse: ") + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << dump_json(j);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace sqz
