#include "sunlab/scene_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sunlab {

using json = nlohmann::json;

namespace {

json point_to_json(const Point& p) {
  json arr = json::array();
  for (int j = 0; j < p.dim(); ++j) arr.push_back(p[j].str());
  return arr;
}

Point point_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("scene: coordinate list expected");
  std::vector<Rational> c;
  for (const auto& v : arr) {
    if (!v.is_string()) throw std::invalid_argument("scene: coordinates must be rational strings");
    auto r = Rational::parse(v.get<std::string>());
    if (!r) throw std::invalid_argument("scene: bad rational literal '" + v.get<std::string>() + "'");
    c.push_back(*r);
  }
  return Point(std::move(c));
}

json primitive_to_json(const Primitive& prim) {
  json out;
  if (const auto* sp = std::get_if<SinglePoint>(&prim)) {
    out["type"] = "point";
    out["coords"] = point_to_json(sp->p);
  } else if (const auto* seg = std::get_if<Segment>(&prim)) {
    out["type"] = "segment";
    out["a"] = point_to_json(seg->a);
    out["b"] = point_to_json(seg->b);
  } else if (const auto* box = std::get_if<AxisBox>(&prim)) {
    out["type"] = "box";
    out["lo"] = point_to_json(box->lo);
    out["hi"] = point_to_json(box->hi);
  } else {
    const auto& poly = std::get<Polytope>(prim);
    out["type"] = "polytope";
    json verts = json::array();
    for (const auto& v : poly.vertices) verts.push_back(point_to_json(v));
    out["vertices"] = std::move(verts);
  }
  return out;
}

Primitive primitive_from_json(const json& v) {
  const std::string type = v.at("type").get<std::string>();
  if (type == "point") return SinglePoint{point_from_json(v.at("coords"))};
  if (type == "segment") return Segment{point_from_json(v.at("a")), point_from_json(v.at("b"))};
  if (type == "box") return AxisBox{point_from_json(v.at("lo")), point_from_json(v.at("hi"))};
  if (type == "polytope") {
    Polytope poly;
    for (const auto& w : v.at("vertices")) poly.vertices.push_back(point_from_json(w));
    return poly;
  }
  throw std::invalid_argument("scene: unknown primitive type '" + type + "'");
}

}  // namespace

std::string scene_to_json(const SetModel& m) {
  json out;
  out["dim"] = m.dim();
  out["name"] = m.name();
  json prims = json::array();
  for (const auto& prim : m.primitives()) prims.push_back(primitive_to_json(prim));
  out["primitives"] = std::move(prims);
  return out.dump(2) + "\n";
}

SetModel scene_from_json(const std::string& text) {
  json v = json::parse(text);
  int dim = v.at("dim").get<int>();
  std::string name = v.value("name", std::string("scene"));
  std::vector<Primitive> prims;
  for (const auto& p : v.at("primitives")) prims.push_back(primitive_from_json(p));
  return SetModel(dim, std::move(name), std::move(prims));
}

SetModel load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scene_from_json(buf.str());
}

void save_scene(const SetModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scene file: " + path);
  out << scene_to_json(m);
}

namespace {

json verdict_to_json(const Verdict& v) {
  json out;
  switch (v.kind) {
    case VerdictKind::Proven: out["kind"] = "proven"; break;
    case VerdictKind::Refuted: out["kind"] = "refuted"; break;
    case VerdictKind::SampledPass: out["kind"] = "sampled-pass"; break;
  }
  out["pairs_checked"] = v.pairs_checked;
  if (v.resolution.sign() != 0) out["resolution"] = v.resolution.str();
  if (!v.detail.empty()) out["detail"] = v.detail;
  out["ff_pairs_seen"] = v.ff_pairs_seen;
  return out;
}

json verdict_witnesses(const std::string& check, const Verdict& v) {
  json out;
  out["check"] = check;
  json pts = json::object();
  for (const auto& [name, p] : v.points) pts[name] = point_to_json(p);
  json scs = json::object();
  for (const auto& [name, s] : v.scalars) scs[name] = s.str();
  out["points"] = std::move(pts);
  out["scalars"] = std::move(scs);
  return out;
}

json classification_to_json(const Classification& c, int dim) {
  json out;
  out["eqc"] = c.eqc.to_vector(dim);
  out["is_cross"] = c.is_cross();
  if (c.cross_center) out["cross_center"] = point_to_json(*c.cross_center);
  out["is_cocross"] = c.is_cocross();
  if (c.cocross) {
    out["cocross_center"] = point_to_json(c.cocross->center);
    out["cocross_frozen"] = c.cocross->frozen.to_vector(dim);
  }
  if (c.main_cross_subset_center)
    out["main_cross_subset_center"] = point_to_json(*c.main_cross_subset_center);
  out["component_count"] = c.component_count;
  if (c.prop1_expected_strictly_l1_convex)
    out["prop1_expected_strictly_l1_convex"] = *c.prop1_expected_strictly_l1_convex;
  return out;
}

json config_to_json(const Config& cfg) {
  json out;
  out["seed"] = cfg.seed;
  out["extent"] = cfg.extent.str();
  json sched = json::array();
  for (const auto& l : cfg.lambda_schedule) sched.push_back(l.str());
  out["lambda_schedule"] = std::move(sched);
  json dens = json::array();
  for (const auto& d : cfg.densities) dens.push_back(d.str());
  out["densities"] = std::move(dens);
  out["pair_budget"] = cfg.pair_budget;
  out["sweep_budget"] = cfg.sweep_budget;
  out["oracle_resolution"] = cfg.oracle_resolution.str();
  return out;
}

json report_to_json_value(const ScenarioReport& rep, bool include_timings) {
  json out;
  out["scene"] = rep.scene;
  out["seed"] = rep.seed;
  json verdicts;
  verdicts["classification"] = classification_to_json(rep.classification, rep.dim);
  verdicts["l1_convex"] = verdict_to_json(rep.l1_convex);
  verdicts["strictly_l1_convex"] = verdict_to_json(rep.strictly_l1_convex);
  verdicts["sun"] = verdict_to_json(rep.sun_verdict);
  verdicts["strict_sun"] = verdict_to_json(rep.strict_sun_verdict);
  verdicts["cone_holds_but_not_solar"] = rep.cone_holds_but_not_solar;
  verdicts["sphere_segment_cases"] = rep.sphere_segment_cases;
  verdicts["sphere_segments_ok"] = rep.sphere_segments_ok;
  if (rep.distinct_pair) {
    verdicts["distinct_pair"] =
        json::array({point_to_json(rep.distinct_pair->first), point_to_json(rep.distinct_pair->second)});
  }
  out["verdicts"] = std::move(verdicts);
  json agreements;
  if (rep.dim == 3) agreements["theorem1"] = rep.agree_theorem1();
  agreements["theoremA"] = rep.agree_theoremA();
  agreements["berens_hetzelt"] = rep.agree_berens_hetzelt();
  if (auto p1 = rep.agree_prop1()) agreements["prop1"] = *p1;
  out["agreements"] = std::move(agreements);
  json witnesses = json::array();
  const std::pair<const char*, const Verdict*> named[] = {
      {"l1_convex", &rep.l1_convex},
      {"strictly_l1_convex", &rep.strictly_l1_convex},
      {"sun", &rep.sun_verdict},
      {"strict_sun", &rep.strict_sun_verdict}};
  for (const auto& [name, v] : named)
    if (!v->points.empty() || !v->scalars.empty()) witnesses.push_back(verdict_witnesses(name, *v));
  out["witnesses"] = std::move(witnesses);
  out["config"] = config_to_json(rep.config);
  if (include_timings) out["timings"] = {{"elapsed_seconds", rep.elapsed_seconds}};
  return out;
}

}  // namespace

std::string report_to_json(const ScenarioReport& rep, bool include_timings) {
  return report_to_json_value(rep, include_timings).dump(2) + "\n";
}

std::string suite_report_to_json(const SuiteReport& rep, bool include_timings) {
  json out;
  out["config"] = config_to_json(rep.config);
  out["all_agree"] = rep.all_agree();
  json scenes = json::array();
  for (const auto& s : rep.scenes) scenes.push_back(report_to_json_value(s, include_timings));
  out["scenes"] = std::move(scenes);
  return out.dump(2) + "\n";
}

Point parse_point_literal(const std::string& text) {
  std::vector<Rational> c;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    // trim spaces
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("bad point literal: " + text);
    auto r = Rational::parse(cur.substr(b, e - b + 1));
    if (!r) throw std::invalid_argument("bad rational in point literal: " + cur);
    c.push_back(*r);
  }
  return Point(std::move(c));
}

}  // namespace sunlab
