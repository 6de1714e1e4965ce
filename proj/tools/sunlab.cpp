// sunlab: exact geometry of best approximation in linf(n), n <= 4.
//
// Subcommands classify scenes, project points, test l1-convexity and sun
// properties, generate scene families, and cross-validate the structural
// characterizations on single scenes or a full suite.
//
// Exit codes: 0 pass/agreement, 1 refutation/disagreement, 2 usage error.
#include <cstdio>
#include <iostream>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "sunlab/classification.hpp"
#include "sunlab/scenario_lab.hpp"
#include "sunlab/scene_io.hpp"
#include "sunlab/sun_checker.hpp"

using namespace sunlab;

namespace {

int g_decimals = 0;

std::string show(const Rational& r) {
  std::string out = r.str();
  if (g_decimals > 0) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (%.*f)", g_decimals, r.to_double());
    out += buf;
  }
  return out;
}

std::string show(const Point& p) {
  std::string out = "(";
  for (int j = 0; j < p.dim(); ++j) {
    if (j) out += ", ";
    out += show(p[j]);
  }
  return out + ")";
}

void print_verdict(const std::string& name, const Verdict& v) {
  const char* kind = v.kind == VerdictKind::Refuted
                         ? "REFUTED"
                         : (v.kind == VerdictKind::Proven ? "PROVEN" : "SAMPLED-PASS");
  std::cout << name << ": " << kind;
  if (v.pairs_checked) std::cout << "  [" << v.pairs_checked << " checked]";
  if (v.ff_pairs_seen) std::cout << "  [" << v.ff_pairs_seen << " fully-distinct pairs]";
  std::cout << "\n";
  if (!v.detail.empty()) std::cout << "  " << v.detail << "\n";
  for (const auto& [n, p] : v.points) std::cout << "  " << n << " = " << show(p) << "\n";
  for (const auto& [n, s] : v.scalars) std::cout << "  " << n << " = " << show(s) << "\n";
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto r = Rational::parse(text);
  if (!r) throw CLI::ValidationError(flag, "expected a rational literal like 3/2");
  return *r;
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ','))
    out.push_back(parse_rational_flag(cur, flag));
  return out;
}

struct GlobalOpts {
  std::optional<std::uint64_t> seed;
  std::string extent = "4";
  std::string lambda_schedule = "2,4,8,16";
  std::string densities = "1/2,1/4,1/8";
  long pair_budget = 200;
  long sweep_budget = 64;
  std::string oracle_resolution = "1/16";
  int jobs = 0;

  Config to_config() const {
    Config cfg;
    std::uint64_t s = seed ? *seed : 0;
    cfg.seed = seed_or_env(seed ? &s : nullptr);
    cfg.extent = parse_rational_flag(extent, "--extent");
    cfg.lambda_schedule = parse_rational_list(lambda_schedule, "--lambda-schedule");
    cfg.densities = parse_rational_list(densities, "--densities");
    cfg.pair_budget = pair_budget;
    cfg.sweep_budget = sweep_budget;
    cfg.oracle_resolution = parse_rational_flag(oracle_resolution, "--oracle-resolution");
    cfg.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (cfg.jobs <= 0) cfg.jobs = 1;
    cfg.validate();
    return cfg;
  }
};

void print_classification(const Classification& c, int dim) {
  std::cout << "eqc: " << c.eqc.str() << "\n";
  std::cout << "is_cross: " << (c.is_cross() ? "true" : "false");
  if (c.cross_center) std::cout << "  center " << show(*c.cross_center);
  std::cout << "\n";
  std::cout << "is_cocross: " << (c.is_cocross() ? "true" : "false");
  if (c.cocross)
    std::cout << "  center " << show(c.cocross->center) << "  frozen " << c.cocross->frozen.str();
  std::cout << "\n";
  if (c.main_cross_subset_center)
    std::cout << "main_cross_subset_center: " << show(*c.main_cross_subset_center) << "\n";
  std::cout << "component_count: " << c.component_count << "\n";
  if (c.prop1_expected_strictly_l1_convex)
    std::cout << "prop1_expected_strictly_l1_convex: "
              << (*c.prop1_expected_strictly_l1_convex ? "true" : "false") << "\n";
  (void)dim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tests for suns, strict suns and l1-convexity in linf(n)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "seed (fallback: SUNLAB_SEED, then 1)");
  app.add_option("--extent", opts.extent, "default truncation extent");
  app.add_option("--lambda-schedule", opts.lambda_schedule, "ray multipliers, comma-separated");
  app.add_option("--densities", opts.densities, "geodesic search densities, comma-separated");
  app.add_option("--pair-budget", opts.pair_budget, "random pair budget for convexity sweeps");
  app.add_option("--sweep-budget", opts.sweep_budget, "external point budget for sun sweeps");
  app.add_option("--oracle-resolution", opts.oracle_resolution, "grid oracle resolution");
  app.add_option("--decimal", g_decimals, "also render rationals to K decimal places");
  app.add_option("--jobs", opts.jobs, "parallel jobs (default: available cores)");

  std::string scene_path, out_path, point_text, x_text, y_text, z_text;
  std::string family_text, theorem_text, norm_text = "linf";
  int gen_dim = 3;
  int gen_pieces = 4;
  bool gen_disconnected = false;
  std::string gen_extent, gen_center, gen_frozen, gen_frozen_values;

  auto* classify_cmd = app.add_subcommand("classify", "structural classes of a scene");
  classify_cmd->add_option("scene", scene_path)->required();

  auto* project_cmd = app.add_subcommand("project", "metric projection of a point onto a scene");
  project_cmd->add_option("scene", scene_path)->required();
  project_cmd->add_option("--point", point_text, "query point, e.g. \"1,1,0\"")->required();
  project_cmd->add_option("--norm", norm_text, "linf (default) or l1")
      ->check(CLI::IsMember({"linf", "l1"}));

  auto* l1_cmd = app.add_subcommand("check-l1", "Menger l1-convexity");
  l1_cmd->add_option("scene", scene_path)->required();

  auto* sl1_cmd = app.add_subcommand("check-strict-l1", "strict l1-convexity");
  sl1_cmd->add_option("scene", scene_path)->required();

  auto* sun_cmd = app.add_subcommand("check-sun", "sun property over an external sweep");
  sun_cmd->add_option("scene", scene_path)->required();

  auto* ssun_cmd = app.add_subcommand("check-strict-sun", "strict sun property");
  ssun_cmd->add_option("scene", scene_path)->required();

  auto* cone_cmd = app.add_subcommand("cone-test", "supporting-cone membership, both forms");
  cone_cmd->add_option("scene", scene_path)->required();
  cone_cmd->add_option("--x", x_text)->required();
  cone_cmd->add_option("--y", y_text)->required();
  cone_cmd->add_option("--z", z_text)->required();

  auto* gen_cmd = app.add_subcommand("generate", "emit a scene of a named family");
  gen_cmd->add_option("--family", family_text, "main-cross, cross-subset, main-cocross, "
                                               "cocross-cj, box, monotone-tube, cocross-line4, "
                                               "two-points, random-l1-convex")
      ->required();
  std::string gen_lo, gen_hi;
  gen_cmd->add_option("--dim", gen_dim);
  gen_cmd->add_option("--extent", gen_extent, "family extent (defaults to global)");
  gen_cmd->add_option("--center", gen_center, "center point literal");
  gen_cmd->add_option("--lo", gen_lo, "box: explicit low corner");
  gen_cmd->add_option("--hi", gen_hi, "box: explicit high corner");
  gen_cmd->add_option("--pieces", gen_pieces);
  gen_cmd->add_flag("--disconnected", gen_disconnected, "cross-subset: detach one arm");
  gen_cmd->add_option("--frozen", gen_frozen, "cocross-cj: frozen coordinates, e.g. \"2\"");
  gen_cmd->add_option("--frozen-values", gen_frozen_values, "cocross-cj: frozen values");
  gen_cmd->add_option("-o,--output", out_path)->required();

  auto* val_cmd = app.add_subcommand("validate", "cross-validate a characterization on a scene");
  val_cmd->add_option("--theorem", theorem_text, "1, A, BH or prop1")->required();
  val_cmd->add_option("scene", scene_path)->required();

  auto* suite_cmd = app.add_subcommand("suite", "full validation sweep over the family roster");
  suite_cmd->add_option("-o,--output", out_path);

  bool with_timings = false;
  val_cmd->add_flag("--timings", with_timings);
  suite_cmd->add_flag("--timings", with_timings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Config cfg = opts.to_config();

    if (*classify_cmd) {
      SetModel m = load_scene(scene_path);
      print_classification(classify(m), m.dim());
      return 0;
    }

    if (*project_cmd) {
      SetModel m = load_scene(scene_path);
      Norm which = norm_text == "l1" ? Norm::L1 : Norm::Linf;
      auto pr = project(m, parse_point_literal(point_text), which);
      std::cout << "rho: " << show(pr.rho) << "\n";
      for (const auto& w : pr.witnesses) {
        std::cout << "witness[" << w.primitive_index << "]: " << show(w.minimizer)
                  << (w.is_unique ? "  (unique)" : "  (face)") << "\n";
        if (!w.is_unique)
          for (const auto& s : w.face_samples) std::cout << "  face sample " << show(s) << "\n";
      }
      return 0;
    }

    if (*l1_cmd || *sl1_cmd) {
      SetModel m = load_scene(scene_path);
      Verdict v = *l1_cmd ? is_l1_convex(m, cfg.search_budget())
                          : is_strictly_l1_convex(m, cfg.search_budget());
      print_verdict(*l1_cmd ? "l1-convex" : "strictly-l1-convex", v);
      return v.passed() ? 0 : 1;
    }

    if (*sun_cmd || *ssun_cmd) {
      SetModel m = load_scene(scene_path);
      auto sweep = sun_sweep(m, cfg);
      Verdict v = *sun_cmd ? sweep.sun_verdict() : sweep.strict_sun_verdict();
      print_verdict(*sun_cmd ? "sun" : "strict-sun", v);
      return v.passed() ? 0 : 1;
    }

    if (*cone_cmd) {
      SetModel m = load_scene(scene_path);
      ConeSpec spec(parse_point_literal(y_text), parse_point_literal(x_text));
      Point z = parse_point_literal(z_text);
      bool a = cone_contains(spec, z);
      bool b = cone_contains_by_definition(spec, z);
      std::cout << "r: " << show(spec.r) << "  active: " << spec.active.str() << "\n";
      std::cout << "halfspace form: " << (a ? "inside" : "outside") << "\n";
      std::cout << "definitional form: " << (b ? "inside" : "outside") << "\n";
      auto clearance = check_supporting_cone(m, spec);
      std::cout << "cone clear of set: " << (clearance.holds ? "holds" : "violated") << "\n";
      if (clearance.witness) std::cout << "  witness " << show(*clearance.witness) << "\n";
      return a == b ? 0 : 1;
    }

    if (*gen_cmd) {
      auto family = family_from_name(family_text);
      if (!family) throw std::invalid_argument("unknown family: " + family_text);
      FamilySpec spec;
      spec.family = *family;
      spec.dim = gen_dim;
      spec.extent = gen_extent.empty() ? cfg.extent : parse_rational_flag(gen_extent, "--extent");
      if (!gen_center.empty()) spec.center = parse_point_literal(gen_center);
      if (!gen_lo.empty()) spec.box_lo = parse_point_literal(gen_lo);
      if (!gen_hi.empty()) spec.box_hi = parse_point_literal(gen_hi);
      spec.pieces = gen_pieces;
      spec.connected = !gen_disconnected;
      if (!gen_frozen.empty()) {
        for (const auto& r : parse_rational_list(gen_frozen, "--frozen")) {
          if (!r.is_integer()) throw std::invalid_argument("--frozen expects coordinate indices");
          spec.frozen.add(static_cast<int>(r.to_double()));
        }
        spec.frozen_values = parse_rational_list(gen_frozen_values, "--frozen-values");
      }
      SetModel m = generate(spec, cfg.seed);
      save_scene(m, out_path);
      std::cout << "wrote " << out_path << " (" << m.primitives().size() << " primitives)\n";
      return 0;
    }

    if (*val_cmd) {
      SetModel m = load_scene(scene_path);
      ScenarioReport rep;
      bool agree = false;
      if (theorem_text == "1") {
        rep = validate_theorem1(m, cfg);
        agree = rep.agree_theorem1();
      } else if (theorem_text == "A") {
        rep = validate_theoremA(m, cfg);
        agree = rep.agree_theoremA();
      } else if (theorem_text == "BH") {
        rep = validate_bh(m, cfg);
        agree = rep.agree_berens_hetzelt();
      } else if (theorem_text == "prop1") {
        rep = validate_prop1(m, cfg);
        auto p1 = rep.agree_prop1();
        agree = p1 && *p1;
      } else {
        throw std::invalid_argument("--theorem must be one of: 1, A, BH, prop1");
      }
      std::cout << report_to_json(rep, with_timings);
      std::cerr << "theorem " << theorem_text << ": " << (agree ? "agreement" : "DISAGREEMENT")
                << "\n";
      return agree ? 0 : 1;
    }

    if (*suite_cmd) {
      SuiteReport rep = run_suite(cfg);
      std::string text = suite_report_to_json(rep, with_timings);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
      } else {
        std::cout << text;
      }
      int disagreements = 0;
      for (const auto& s : rep.scenes)
        if (!s.all_agree()) ++disagreements;
      std::cerr << rep.scenes.size() << " scenes, " << disagreements << " disagreement(s)\n";
      return rep.all_agree() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
