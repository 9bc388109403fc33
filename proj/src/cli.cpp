#include "maro/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "maro/efficiency.hpp"
#include "maro/fixtures.hpp"
#include "maro/images.hpp"
#include "maro/scalarize.hpp"
#include "maro/svg.hpp"
#include "maro/verify.hpp"

namespace maro::cli {

namespace {

using ojson = nlohmann::ordered_json;

/// Integral values print as integers so outputs read like the input data.
ojson num(double v) {
  if (std::isfinite(v) && v == std::trunc(v) && std::fabs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

ojson num(XReal v) { return v.is_finite() ? num(v.value()) : ojson(v.to_string()); }

ojson point_json(const ObjVec& p) {
  ojson a = ojson::array();
  for (double v : p) a.push_back(num(v));
  return a;
}

ojson point_json(const std::vector<XReal>& p) {
  ojson a = ojson::array();
  for (XReal v : p) a.push_back(num(v));
  return a;
}

std::string csv_num(double v) { return num(v).dump(); }

struct Globals {
  std::string instance_path;
  std::string fixture_name;
  double tol = 1e-9;
  std::string format = "json";
};

Instance load(const Globals& g) {
  if (!g.instance_path.empty() && !g.fixture_name.empty()) throw Error("use either --instance or --fixture, not both");
  if (!g.fixture_name.empty()) return fixture(g.fixture_name);
  if (!g.instance_path.empty()) return load_instance_file(g.instance_path);
  throw Error("an instance is required: pass --instance FILE or --fixture NAME");
}

void require_format(const Globals& g, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), g.format) == allowed.end()) {
    throw Error("format '" + g.format + "' is not supported by this command");
  }
}

ojson ids(const Instance& inst, const std::vector<DecisionIndex>& xs) {
  ojson a = ojson::array();
  for (DecisionIndex x : xs) a.push_back(inst.decision_id(x));
  return a;
}

ojson solution_json(const Instance& inst, const ScalarSolution& sol) {
  ojson values = ojson::object();
  for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) values[inst.decision_id(x)] = num(sol.values[x]);
  ojson efficient = ojson::array();
  ojson guarantees = ojson::object();
  for (const Guarantee& g : sol.efficient) {
    efficient.push_back(inst.decision_id(g.decision));
    guarantees[inst.decision_id(g.decision)] = num(g.value);
  }
  ojson j;
  j["values"] = std::move(values);
  j["efficient"] = std::move(efficient);
  j["guarantees"] = std::move(guarantees);
  j["optimum"] = num(sol.optimum);
  j["empty_due_to_ties"] = sol.empty_due_to_ties;
  return j;
}

Weight parse_weight(const std::string& text, const Tolerance& tol) { return Weight(parse_csv_reals(text), tol); }

std::size_t objective_index(int j_one_based, std::size_t n) {
  if (j_one_based < 1 || static_cast<std::size_t>(j_one_based) > n) {
    throw Error("--j must lie in [1, " + std::to_string(n) + "]");
  }
  return static_cast<std::size_t>(j_one_based - 1);
}

/// Bounds from a JSON file holding an array of eps vectors; the j-th slot
/// may be null or "_".
std::vector<GenBound> read_eps_list(const std::string& path, std::size_t j, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw Error("parse error in " + path);
  if (!doc.is_array()) throw Error("eps list must be a JSON array of vectors");
  std::vector<GenBound> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& row = doc[k];
    const std::string where = "$[" + std::to_string(k) + "]";
    if (!row.is_array() || row.size() != n) throw Error("eps vector of length " + std::to_string(n) + " expected at " + where);
    ObjVec eps(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j && (row[i].is_null() || row[i] == "_")) {
        eps[i] = 0.0;
      } else if (row[i].is_number()) {
        eps[i] = row[i].get<double>();
      } else {
        throw Error("number expected at " + where + "[" + std::to_string(i) + "]");
      }
    }
    out.emplace_back(std::move(eps), j);
  }
  return out;
}

struct ImageArgs {
  std::string which = "pb";
  std::size_t grid_k = 50;
  std::string lambda;
  std::string eps;
  std::string eps_list;
  int j = 1;
};

struct ImageSeries {
  PlotSeries plot;
  ojson json;
  std::vector<std::string> csv;
};

ImageSeries compute_image(const Instance& inst, const ImageArgs& a, const Tolerance& tol) {
  ImageSeries r;
  r.json["image"] = a.which;
  if (a.which == "ws") {
    std::vector<Weight> weights;
    if (!a.lambda.empty()) {
      weights.push_back(parse_weight(a.lambda, tol));
    } else {
      if (a.grid_k < 1) throw Error("--grid-k must be positive");
      weights = WeightGrid(inst.n(), a.grid_k).weights();
    }
    ojson points = ojson::array();
    std::string header;
    for (std::size_t i = 0; i < inst.n(); ++i) header += "lambda" + std::to_string(i + 1) + ",";
    for (std::size_t i = 0; i < inst.n(); ++i) header += "f" + std::to_string(i + 1) + (i + 1 < inst.n() ? "," : "");
    r.csv.push_back(header);
    for (const Weight& w : weights) {
      for (const ObjVec& p : image_ws(inst, w, tol)) {
        ojson e;
        e["lambda"] = point_json(w.values());
        e["point"] = point_json(p);
        points.push_back(std::move(e));
        std::string line;
        for (double v : w.values()) line += csv_num(v) + ",";
        for (std::size_t i = 0; i < p.size(); ++i) line += csv_num(p[i]) + (i + 1 < p.size() ? "," : "");
        r.csv.push_back(line);
        r.plot.points.push_back(p);
      }
    }
    r.json["points"] = std::move(points);
    r.json["strictly_dominated"] = ojson::array();
    for (const ObjVec& p : strictly_dominated_members(r.plot.points, tol)) r.json["strictly_dominated"].push_back(point_json(p));
    r.plot.label = "weighted-sum image";
  } else if (a.which == "eps") {
    const std::size_t j = objective_index(a.j, inst.n());
    std::vector<GenBound> bounds;
    if (!a.eps_list.empty()) bounds = read_eps_list(a.eps_list, j, inst.n());
    if (!a.eps.empty()) bounds.push_back(parse_gen_bound(a.eps, j));
    if (bounds.empty()) throw Error("image eps needs --eps or --eps-list");
    const EpsImage image = image_eps_grid(inst, BoundGrid{j, [&] {
                                                           std::vector<ObjVec> e;
                                                           for (const GenBound& gb : bounds) e.push_back(gb.eps);
                                                           return e;
                                                         }()},
                                          tol);
    auto entry = [&](const EpsImagePoint& p) {
      ojson e;
      e["point"] = point_json(p.point);
      e["producers"] = ids(inst, p.producers);
      return e;
    };
    r.json["j"] = a.j;
    r.json["points"] = ojson::array();
    r.json["infeasible"] = ojson::array();
    std::string header;
    for (std::size_t i = 0; i < inst.n(); ++i) header += "f" + std::to_string(i + 1) + ",";
    r.csv.push_back(header + "producers");
    for (const EpsImagePoint& p : image.front) {
      r.json["points"].push_back(entry(p));
      ObjVec q;
      std::string line;
      for (XReal v : p.point) {
        q.push_back(v.value());
        line += csv_num(v.value()) + ",";
      }
      std::string producers;
      for (DecisionIndex x : p.producers) producers += (producers.empty() ? "" : " ") + inst.decision_id(x);
      r.csv.push_back(line + producers);
      r.plot.points.push_back(std::move(q));
    }
    for (const EpsImagePoint& p : image.infeasible) {
      ObjVec eps;
      for (std::size_t i = 0; i < p.point.size(); ++i) eps.push_back(i == j ? 0.0 : p.point[i].value());
      ojson e;
      e["eps"] = point_json(eps);
      r.json["infeasible"].push_back(std::move(e));
    }
    r.plot.label = "constraint image (j=" + std::to_string(a.j) + ")";
  } else if (a.which == "pb") {
    const PointSet image = image_pb(inst, tol);
    r.json["points"] = ojson::array();
    std::string header;
    for (std::size_t i = 0; i < inst.n(); ++i) header += "f" + std::to_string(i + 1) + (i + 1 < inst.n() ? "," : "");
    r.csv.push_back(header);
    for (const ObjVec& p : image) {
      r.json["points"].push_back(point_json(p));
      std::string line;
      for (std::size_t i = 0; i < p.size(); ++i) line += csv_num(p[i]) + (i + 1 < p.size() ? "," : "");
      r.csv.push_back(line);
    }
    r.plot = {"point-based image", image, false};
  } else {
    throw Error("unknown image kind '" + a.which + "' (expected ws, eps or pb)");
  }
  return r;
}

void add_image_options(CLI::App* cmd, ImageArgs& a) {
  cmd->add_option("--grid-k", a.grid_k, "weight grid resolution for the weighted-sum image");
  cmd->add_option("--lambda", a.lambda, "single weight, comma separated");
  cmd->add_option("--eps", a.eps, "single generating bound, e.g. _,7");
  cmd->add_option("--eps-list", a.eps_list, "JSON file with an array of generating bounds");
  cmd->add_option("--j", a.j, "constrained objective, 1-based");
}

ojson verdict_json(const Instance& inst, DecisionIndex x, const std::string& kind, const std::string& strictness,
                   const std::string& relation, const Verdict& v, bool point_based) {
  ojson j;
  j["decision"] = inst.decision_id(x);
  j["kind"] = kind;
  j["strictness"] = strictness;
  j["relation"] = relation;
  j["efficient"] = v.efficient;
  if (v.witness) {
    ojson w = ojson::array();
    for (const Domination& d : v.witness->dominations) {
      ojson e;
      if (!point_based) e["scenario"] = inst.scenario_id(d.scenario);
      e["competitor"] = inst.decision_id(d.competitor);
      w.push_back(std::move(e));
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-objective adjustable robust optimization toolkit", "maro"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--instance", g.instance_path, "instance JSON file");
  app.add_option("--fixture", g.fixture_name, "built-in instance name");
  app.add_option("--tol", g.tol, "comparison tolerance");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv", "md", "svg"}));

  auto* validate = app.add_subcommand("validate", "check an instance file");

  auto* fixtures = app.add_subcommand("fixtures", "list built-in instances or print one");
  std::string fixture_print;
  fixtures->add_option("--name", fixture_print, "print this fixture as instance JSON");

  auto* efficiency = app.add_subcommand("efficiency", "efficiency verdict of a decision");
  std::string eff_x;
  std::string eff_kind = "flimsy";
  std::string eff_rel = "l";
  bool eff_strict = false;
  bool eff_weak = false;
  efficiency->add_option("--x", eff_x, "decision id (all decisions if omitted)");
  efficiency->add_option("--kind", eff_kind, "flimsy, highly, multi-scenario, point-based or smaro");
  auto* strict_flag = efficiency->add_flag("--strict", eff_strict, "strict efficiency (default)");
  efficiency->add_flag("--weak", eff_weak, "weak efficiency")->excludes(strict_flag);
  efficiency->add_option("--rel", eff_rel, "relation: u, l, lmin:w1,w2,... or leqq, leq, lt");

  auto* solve_ws = app.add_subcommand("solve-ws", "weighted-sum concept");
  std::string ws_lambda;
  bool ws_strict = false;
  solve_ws->add_option("--lambda", ws_lambda, "weight, comma separated")->required();
  solve_ws->add_flag("--strict", ws_strict, "unique minimizer only");

  auto* solve_eps = app.add_subcommand("solve-eps", "constraint concept");
  std::string eps_text;
  int eps_j = 1;
  bool eps_strict = false;
  solve_eps->add_option("--eps", eps_text, "generating bound, '_' marks slot j")->required();
  solve_eps->add_option("--j", eps_j, "minimized objective, 1-based")->required();
  solve_eps->add_flag("--strict", eps_strict, "unique minimizer only");

  auto* solve_pb = app.add_subcommand("solve-pb", "point-based concept");
  std::string pb_strictness = "plain";
  solve_pb->add_option("--strictness", pb_strictness, "strict, plain or weak");

  auto* image = app.add_subcommand("image", "objective-space images");
  ImageArgs image_args;
  image->add_option("which", image_args.which, "ws, eps or pb")->required();
  add_image_options(image, image_args);

  auto* verify = app.add_subcommand("verify", "randomized property battery");
  VerifyOptions vopts;
  std::string vcheck;
  verify->add_option("--seed", vopts.seed, "master seed");
  verify->add_option("--count", vopts.count, "number of generated instances");
  verify->add_option("--check", vcheck, "run a single check id");
  verify->add_flag("--jitter", vopts.jitter, "add sub-integer noise to coordinates");

  auto* compare = app.add_subcommand("compare", "compare the scalarized concepts");
  std::string cmp_lambda;
  std::string cmp_eps;
  int cmp_j = 1;
  compare->add_option("--lambda", cmp_lambda, "weight")->required();
  compare->add_option("--eps", cmp_eps, "generating bound")->required();
  compare->add_option("--j", cmp_j, "minimized objective, 1-based")->required();

  auto* plot = app.add_subcommand("plot", "SVG plot of recourse sets or an image");
  ImageArgs plot_args;
  plot_args.which = "recourse";
  std::string plot_out;
  bool plot_step = false;
  plot->add_option("--image", plot_args.which, "recourse, ws, eps or pb");
  plot->add_option("--out", plot_out, "output file (standard output if omitted)");
  plot->add_flag("--step", plot_step, "connect points by a staircase");
  add_image_options(plot, plot_args);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Tolerance tol{g.tol};
    if (!(g.tol >= 0.0) || !std::isfinite(g.tol)) throw Error("--tol must be a finite non-negative number");

    if (*validate) {
      require_format(g, {"json"});
      const Instance inst = load(g);
      ojson j;
      j["valid"] = true;
      j["name"] = inst.name();
      j["n"] = inst.n();
      j["decisions"] = inst.num_decisions();
      j["scenarios"] = inst.num_scenarios();
      j["singleton_recourse"] = inst.singleton_recourse();
      j["sampled"] = inst.sampled();
      out << j.dump() << "\n";
      return 0;
    }

    if (*fixtures) {
      require_format(g, {"json"});
      if (!fixture_print.empty()) {
        out << serialize_instance(fixture(fixture_print)) << "\n";
      } else {
        out << ojson(fixture_names()).dump() << "\n";
      }
      return 0;
    }

    if (*efficiency) {
      require_format(g, {"json"});
      const Instance inst = load(g);
      std::vector<DecisionIndex> xs;
      if (eff_x.empty()) {
        for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) xs.push_back(x);
      } else {
        xs.push_back(inst.decision_index(eff_x));
      }
      if (eff_kind == "smaro") {
        const SmaroResult r = smaro_set(inst, tol);
        ojson j;
        j["kind"] = "smaro";
        j["decisions"] = ids(inst, r.decisions);
        j["front"] = ojson::array();
        for (const ObjVec& p : r.front.points) j["front"].push_back(point_json(p));
        out << j.dump() << "\n";
        return 0;
      }
      const RelationSelector rel = parse_relation(eff_rel);
      ojson results = ojson::array();
      if (const VecRel* vr = std::get_if<VecRel>(&rel)) {
        if (eff_strict || eff_weak) throw Error("with a vector relation the strictness follows from --rel");
        const MroKind kind = parse_mro_kind(eff_kind);
        const Strictness s = *vr == VecRel::Leqq ? Strictness::Strict : *vr == VecRel::Leq ? Strictness::Plain : Strictness::Weak;
        for (DecisionIndex x : xs) {
          results.push_back(verdict_json(inst, x, to_string(kind), to_string(s), eff_rel,
                                         mro_efficient(inst, x, kind, s, tol), kind == MroKind::PointBased));
        }
      } else {
        const SetRelSpec& spec = std::get<SetRelSpec>(rel);
        if (spec.strict) throw Error("set relation strictness is chosen by --strict/--weak, not by --rel");
        if (eff_kind == "point-based") throw Error("point-based efficiency needs a vector relation (leqq, leq, lt)");
        const MaroKind kind = parse_maro_kind(eff_kind);
        const Strictness s = eff_weak ? Strictness::Weak : Strictness::Strict;
        const FrontTable fronts(inst, tol);
        for (DecisionIndex x : xs) {
          results.push_back(verdict_json(inst, x, to_string(kind), to_string(s), eff_rel,
                                         maro_efficient(fronts, x, kind, s, spec, tol), false));
        }
      }
      out << (eff_x.empty() ? results.dump() : results.front().dump()) << "\n";
      return 0;
    }

    if (*solve_ws) {
      require_format(g, {"json"});
      const Instance inst = load(g);
      const Weight w = parse_weight(ws_lambda, tol);
      const Strictness s = ws_strict ? Strictness::Strict : Strictness::Plain;
      ojson j;
      j["concept"] = "weighted-sum";
      j["lambda"] = point_json(w.values());
      j["strictness"] = to_string(s);
      j.update(solution_json(inst, ws_efficient_set(inst, w, s, tol)));
      out << j.dump() << "\n";
      return 0;
    }

    if (*solve_eps) {
      require_format(g, {"json"});
      const Instance inst = load(g);
      const std::size_t j_index = objective_index(eps_j, inst.n());
      const GenBound gb = parse_gen_bound(eps_text, j_index);
      if (gb.eps.size() != inst.n()) throw Error("--eps must have " + std::to_string(inst.n()) + " entries");
      const Strictness s = eps_strict ? Strictness::Strict : Strictness::Plain;
      const ScalarSolution sol = eps_efficient_set(inst, gb, s, tol);
      ojson j;
      j["concept"] = "constraint";
      ojson eps = point_json(gb.eps);
      eps[j_index] = "_";
      j["eps"] = std::move(eps);
      j["j"] = eps_j;
      j["strictness"] = to_string(s);
      j.update(solution_json(inst, sol));
      j["all_infeasible"] = sol.all_infeasible;
      out << j.dump() << "\n";
      return 0;
    }

    if (*solve_pb) {
      require_format(g, {"json"});
      const Instance inst = load(g);
      const Strictness s = parse_strictness(pb_strictness);
      ojson j;
      j["efficient"] = ids(inst, pb_efficient_set(inst, s, tol));
      ojson fpb = ojson::object();
      for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) fpb[inst.decision_id(x)] = point_json(f_pb(inst, x));
      j["fpb"] = std::move(fpb);
      out << j.dump() << "\n";
      return 0;
    }

    if (*image) {
      require_format(g, {"json", "csv"});
      const Instance inst = load(g);
      const ImageSeries r = compute_image(inst, image_args, tol);
      if (g.format == "csv") {
        for (const std::string& line : r.csv) out << line << "\n";
      } else {
        out << r.json.dump() << "\n";
      }
      return 0;
    }

    if (*verify) {
      require_format(g, {"json"});
      if (!vcheck.empty()) vopts.check = vcheck;
      vopts.tol = tol;
      const VerificationReport report = run_verification(vopts);
      out << to_json(report).dump() << "\n";
      return report.pass() ? 0 : 1;
    }

    if (*compare) {
      require_format(g, {"json", "md"});
      const Instance inst = load(g);
      const Weight w = parse_weight(cmp_lambda, tol);
      const GenBound gb = parse_gen_bound(cmp_eps, objective_index(cmp_j, inst.n()));
      const ConceptTable table = compare_concepts(inst, w, gb, tol);
      if (g.format == "md") {
        out << to_markdown(table, inst);
      } else {
        out << to_json(table, inst).dump() << "\n";
      }
      return 0;
    }

    if (*plot) {
      require_format(g, {"json", "svg"});
      const Instance inst = load(g);
      if (inst.n() != 2) throw Error("plotting needs an instance with two objectives");
      std::vector<PlotSeries> series;
      if (plot_args.which == "recourse") {
        for (DecisionIndex x = 0; x < inst.num_decisions(); ++x) {
          for (ScenarioIndex u = 0; u < inst.num_scenarios(); ++u) {
            series.push_back({"f(" + inst.decision_id(x) + "," + inst.scenario_id(u) + ")", inst.recourse(x, u), plot_step});
          }
        }
      } else {
        ImageSeries r = compute_image(inst, plot_args, tol);
        r.plot.step = plot_step;
        series.push_back(std::move(r.plot));
      }
      const std::string svg = render_svg(series, inst.name());
      if (plot_out.empty()) {
        out << svg;
      } else {
        std::ofstream file(plot_out, std::ios::binary);
        if (!file) throw Error("cannot write " + plot_out);
        file << svg;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace maro::cli
