// Command line front door for the library: build example cycles, project
// them, decide zero-ness, run the experiment suites, and emit JSON/CSV/SVG
// artifacts. Exit codes: 0 success, 1 failed --expect, 2 usage error,
// 3 numeric failure.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nullproj/embed.hpp"
#include "nullproj/examples.hpp"
#include "nullproj/experiments.hpp"
#include "nullproj/io.hpp"
#include "nullproj/ovaloid.hpp"
#include "nullproj/svg.hpp"
#include "nullproj/zero.hpp"

namespace np = nullproj;

namespace {

int g_exit = 0;

std::string read_all_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

np::Json load_json(const std::string& path) {
  const std::string text = path == "-" ? read_all_stdin() : np::read_text_file(path);
  return np::Json::parse(text);
}

// Either flavor of chain, loaded from a file or stdin. --exact promotes
// float coordinates to exact rationals bitwise.
struct LoadedChain {
  std::optional<np::Chain<np::Rational>> exact;
  std::optional<np::Chain<double>> approx;
};

LoadedChain load_chain(const std::string& path, bool force_exact) {
  const np::Json j = load_json(path);
  LoadedChain out;
  if (np::chain_json_is_exact(j)) {
    out.exact = np::rational_chain_from_json(j);
  } else if (force_exact) {
    out.exact = np::to_exact(np::float_chain_from_json(j));
  } else {
    out.approx = np::float_chain_from_json(j);
  }
  return out;
}

np::Hyperplane<double> to_float_plane(const np::Hyperplane<np::Rational>& p) {
  return np::Hyperplane<double>(np::to_float(p.normal()),
                                np::ScalarTraits<np::Rational>::approx(p.offset()));
}

// JSON artifacts go to --out when given (summary to stdout), otherwise to
// stdout (summary to stderr) so commands compose in pipes.
void emit(const std::string& out_path, const std::string& payload,
          const std::string& summary) {
  if (out_path.empty()) {
    std::cout << payload;
    std::cerr << summary << "\n";
  } else {
    np::write_text_file(out_path, payload);
    std::cout << summary << " -> " << out_path << "\n";
  }
}

std::string dump(const np::Json& j) { return j.dump(2) + "\n"; }

std::string verdict_line(const np::ZeroVerdict& v) {
  std::ostringstream ss;
  ss << np::to_string(v.status) << " method=" << v.method
     << " samples=" << v.samples_used;
  if (v.witness_point) {
    ss << " witness=[";
    for (std::size_t i = 0; i < v.witness_point->size(); ++i) {
      if (i) ss << ",";
      ss << (*v.witness_point)[i];
    }
    ss << "]";
    if (v.witness_winding) ss << " winding=" << *v.witness_winding;
  }
  if (v.witness_cell) ss << " witness_cell=\"" << *v.witness_cell << "\"";
  return ss.str();
}

std::map<std::string, std::string> param_map(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--param expects k=v, got: " + kv);
    }
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

np::Vec<double> parse_point(const std::string& text, std::size_t d) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    xs.push_back(std::stod(item, &used));
  }
  if (xs.size() != d) {
    throw std::invalid_argument("point needs " + std::to_string(d) + " coordinates");
  }
  np::Vec<double> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = xs[i];
  return v;
}

void cmd_example(const std::string& name, const std::vector<std::string>& kvs,
                 bool full_bundle, bool list_only, const std::string& out_path) {
  if (list_only) {
    for (const auto& e : np::gallery()) {
      std::cout << e.name << "  [" << e.default_params << "]  " << e.summary << "\n";
    }
    return;
  }
  if (name.empty()) throw std::invalid_argument("example needs a name (or --list)");
  const np::ExampleBundle bundle = np::make_example(name, param_map(kvs));
  std::ostringstream summary;
  summary << bundle.name << ": " << bundle.chain.cells().size() << " cells, dim "
          << bundle.chain.dim() << " in R^" << bundle.chain.ambient_dim() << ", "
          << bundle.claims.size() << " claims";
  const np::Json payload =
      full_bundle ? np::bundle_to_json(bundle) : np::chain_to_json(bundle.chain);
  emit(out_path, dump(payload), summary.str());
}

void cmd_project(const std::string& chain_path, const std::string& plane_text,
                 bool force_exact, const std::string& out_path) {
  const LoadedChain in = load_chain(chain_path, force_exact);
  np::Json payload;
  std::ostringstream summary;
  if (in.exact) {
    const auto p = np::parse_rational_plane(plane_text);
    const auto chart = np::plane_chart(p);
    const auto image = np::pushforward(*in.exact, chart.to_chart);
    payload = np::chain_to_json(image);
    summary << "projected " << in.exact->cells().size() << " cells to "
            << image.cells().size() << " in chart R^" << image.ambient_dim();
  } else {
    const auto p = np::parse_float_plane(plane_text);
    const auto chart = np::plane_chart(p);
    const auto image = np::pushforward(*in.approx, chart.to_chart);
    payload = np::chain_to_json(image);
    summary << "projected " << in.approx->cells().size() << " cells to "
            << image.cells().size() << " in chart R^" << image.ambient_dim();
  }
  emit(out_path, dump(payload), summary.str());
}

void cmd_check_zero(const std::string& chain_path, const std::string& plane_text,
                    bool force_exact, long budget, std::uint64_t seed,
                    const std::string& expect, const std::string& out_path) {
  const LoadedChain in = load_chain(chain_path, force_exact);
  np::ZeroOptions opt;
  opt.budget = budget;
  opt.seed = seed;
  np::ZeroVerdict v;
  if (in.exact) {
    v = np::projects_to_zero(*in.exact, np::parse_rational_plane(plane_text), opt);
  } else {
    v = np::projects_to_zero(*in.approx, np::parse_float_plane(plane_text), opt);
  }
  std::cout << verdict_line(v) << "\n";
  if (!out_path.empty()) np::write_text_file(out_path, dump(np::verdict_to_json(v)));
  if (!expect.empty()) {
    const bool want_zero = expect == "zero";
    if (want_zero != v.zero()) {
      std::cerr << "expectation failed: wanted " << expect << ", got "
                << np::to_string(v.status) << "\n";
      g_exit = 1;
    }
  }
}

void cmd_sweep(const std::string& chain_path, const std::string& planes_arg,
               bool force_exact, long budget, std::uint64_t seed,
               const std::string& out_path) {
  const LoadedChain in = load_chain(chain_path, force_exact);
  const std::size_t d = in.exact ? in.exact->ambient_dim() : in.approx->ambient_dim();
  const std::string text =
      planes_arg == "coordinate" ? planes_arg : np::read_text_file(planes_arg);
  const auto exact_planes = np::parse_plane_list(text, d);
  np::ZeroOptions opt;
  opt.budget = budget;
  opt.seed = seed;

  np::Json entries = np::Json::array();
  std::size_t zero_count = 0;
  std::size_t max_independent = 0;
  auto record = [&](const np::Json& plane_json, const np::ZeroVerdict& v) {
    std::cout << plane_json["normal"].dump() << " offset " << plane_json["offset"].dump()
              << ": " << verdict_line(v) << "\n";
    if (v.zero()) ++zero_count;
    entries.push_back(np::Json{{"plane", plane_json}, {"verdict", np::verdict_to_json(v)}});
  };
  if (in.exact) {
    const auto sweep = np::null_directions_sweep(*in.exact, exact_planes, opt);
    for (const auto& e : sweep.entries) record(np::plane_to_json(e.plane), e.verdict);
    max_independent = sweep.max_independent_zero;
  } else {
    std::vector<np::Hyperplane<double>> planes;
    planes.reserve(exact_planes.size());
    for (const auto& p : exact_planes) planes.push_back(to_float_plane(p));
    const auto sweep = np::null_directions_sweep(*in.approx, planes, opt);
    for (const auto& e : sweep.entries) {
      np::Json normal = np::Json::array();
      for (std::size_t i = 0; i < e.plane.normal().dim(); ++i) {
        normal.push_back(e.plane.normal()[i]);
      }
      record(np::Json{{"normal", std::move(normal)}, {"offset", e.plane.offset()}},
             e.verdict);
    }
    max_independent = sweep.max_independent_zero;
  }
  std::cout << "zero on " << zero_count << " of " << exact_planes.size()
            << " planes; max independent zero normals: " << max_independent << "\n";
  if (!out_path.empty()) {
    np::write_text_file(out_path, dump(np::Json{{"entries", entries},
                                                {"max_independent_zero", max_independent}}));
  }
}

void cmd_involution(const std::string& body_path, const std::string& plane_text,
                    const std::string& point_text, const std::string& out_path) {
  const auto body = np::body_from_json(load_json(body_path));
  const auto plane = np::parse_float_plane(plane_text);
  const auto x = parse_point(point_text, body->ambient_dim());
  const auto s = np::steiner(*body, plane, x);
  const double height = np::signed_height(*body, plane, x);
  const auto image = np::involution(*body, plane, x);
  np::Json payload{{"point", np::Json::array()},
                   {"steiner", np::Json::array()},
                   {"height", height},
                   {"involution", np::Json::array()}};
  for (std::size_t i = 0; i < x.dim(); ++i) {
    payload["point"].push_back(x[i]);
    payload["steiner"].push_back(s[i]);
    payload["involution"].push_back(image[i]);
  }
  std::ostringstream summary;
  summary << "height " << height << ", displacement " << np::distance(image, x);
  emit(out_path, dump(payload), summary.str());
}

void cmd_equator(const std::string& body_path, const std::string& plane_text,
                 std::size_t resolution, const std::string& out_path) {
  const auto body = np::body_from_json(load_json(body_path));
  const auto* ell = dynamic_cast<const np::Ellipsoid*>(body.get());
  if (!ell) throw std::invalid_argument("equator needs an ellipsoid body");
  const auto plane = np::parse_float_plane(plane_text);
  const auto eq = np::equator(*ell, plane, resolution);
  std::ostringstream summary;
  summary << "equator with " << eq.cells().size() << " cells, dim " << eq.dim()
          << " in R^" << eq.ambient_dim();
  emit(out_path, dump(np::chain_to_json(eq)), summary.str());
}

void cmd_verify(const std::string& experiment, std::uint64_t seed, std::uint64_t trials,
                std::size_t cycle_dim, const std::string& out_path) {
  np::ExperimentReport rep;
  if (experiment == "prop_or") {
    rep = np::involution_cycle_suite(seed);
  } else if (experiment == "thm_tech") {
    rep = np::displacement_suite(seed, trials);
  } else if (experiment == "thm_main") {
    rep = np::obstruction_search(seed, trials, cycle_dim);
  } else if (experiment == "degree") {
    rep = np::degree_suite(seed);
  } else {
    throw std::invalid_argument(
        "unknown experiment (use prop_or, thm_tech, thm_main, or degree): " + experiment);
  }
  std::cout << rep.experiment << ": seed=" << rep.seed << " trials=" << rep.trials
            << " failures=" << rep.failures.size() << " runtime="
            << rep.runtime_seconds << "s\n";
  np::write_text_file(out_path, dump(np::report_to_json(rep)));
}

void cmd_render(const std::string& chain_path, const std::string& plane_text,
                const std::string& svg_path, double width, bool no_labels) {
  const LoadedChain in = load_chain(chain_path, true);
  np::Chain<np::Rational> planar = *in.exact;
  if (!plane_text.empty()) {
    const auto chart = np::plane_chart(np::parse_rational_plane(plane_text));
    planar = np::pushforward(planar, chart.to_chart);
  }
  np::SvgOptions opt;
  opt.width = width;
  opt.face_labels = !no_labels;
  const std::string svg = np::render_svg(planar, opt);
  np::write_text_file(svg_path, svg);
  const auto field = np::planar_winding_field(planar);
  std::cout << "wrote " << svg_path << " (" << field.cycle.cells().size()
            << " segments, " << field.samples.size() << " face labels)\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* eps = std::getenv("NULLPROJ_EPSILON")) {
    char* end = nullptr;
    const double v = std::strtod(eps, &end);
    if (end != eps && v > 0.0) np::set_epsilon(v);
  }

  CLI::App app{"Integer-multiplicity cycles and their hyperplane projections"};
  app.require_subcommand(1);

  // example
  std::string ex_name, ex_out;
  std::vector<std::string> ex_params;
  bool ex_bundle = false, ex_list = false;
  auto* ex = app.add_subcommand("example", "Build a named example cycle");
  ex->add_option("name", ex_name, "gallery name");
  ex->add_option("--param", ex_params, "k=v construction parameter")->take_all();
  ex->add_flag("--bundle", ex_bundle, "emit the full bundle with claims");
  ex->add_flag("--list", ex_list, "list gallery entries");
  ex->add_option("--out", ex_out, "output file (stdout when omitted)");
  ex->callback([&] { cmd_example(ex_name, ex_params, ex_bundle, ex_list, ex_out); });

  // project
  std::string pr_chain = "-", pr_plane, pr_out;
  bool pr_exact = false;
  auto* pr = app.add_subcommand("project", "Project a chain into a hyperplane chart");
  pr->add_option("chain", pr_chain, "chain JSON file (- for stdin)");
  pr->add_option("--plane", pr_plane, "u1,...,ud[:offset]")->required();
  pr->add_flag("--exact", pr_exact, "promote float coordinates to exact rationals");
  pr->add_option("--out", pr_out, "output file (stdout when omitted)");
  pr->callback([&] { cmd_project(pr_chain, pr_plane, pr_exact, pr_out); });

  // check-zero
  std::string cz_chain = "-", cz_plane, cz_expect, cz_out;
  bool cz_exact = false;
  long cz_budget = 256;
  std::uint64_t cz_seed = 0xb0b5eedULL;
  auto* cz = app.add_subcommand("check-zero", "Decide if the projection vanishes");
  cz->add_option("chain", cz_chain, "chain JSON file (- for stdin)");
  cz->add_option("--plane", cz_plane, "u1,...,ud[:offset]")->required();
  cz->add_flag("--exact", cz_exact, "promote float coordinates to exact rationals");
  cz->add_option("--budget", cz_budget, "sampling budget");
  cz->add_option("--seed", cz_seed, "sampling seed");
  cz->add_option("--expect", cz_expect, "zero|nonzero; mismatch exits 1")
      ->check(CLI::IsMember({"zero", "nonzero"}));
  cz->add_option("--out", cz_out, "write the verdict JSON here");
  cz->callback([&] {
    cmd_check_zero(cz_chain, cz_plane, cz_exact, cz_budget, cz_seed, cz_expect, cz_out);
  });

  // sweep
  std::string sw_chain = "-", sw_planes = "coordinate", sw_out;
  bool sw_exact = false;
  long sw_budget = 256;
  std::uint64_t sw_seed = 0xb0b5eedULL;
  auto* sw = app.add_subcommand("sweep", "Projection verdicts over a plane family");
  sw->add_option("chain", sw_chain, "chain JSON file (- for stdin)");
  sw->add_option("--planes", sw_planes, "plane list file, or the preset 'coordinate'");
  sw->add_flag("--exact", sw_exact, "promote float coordinates to exact rationals");
  sw->add_option("--budget", sw_budget, "sampling budget per plane");
  sw->add_option("--seed", sw_seed, "sampling seed");
  sw->add_option("--out", sw_out, "write the sweep report JSON here");
  sw->callback([&] {
    cmd_sweep(sw_chain, sw_planes, sw_exact, sw_budget, sw_seed, sw_out);
  });

  // involution
  std::string in_body, in_plane, in_point, in_out;
  auto* iv = app.add_subcommand("involution", "Reflect a boundary point through a plane's symmetrization");
  iv->add_option("body", in_body, "body JSON file")->required();
  iv->add_option("--plane", in_plane, "u1,...,ud[:offset]")->required();
  iv->add_option("--point", in_point, "x1,...,xd boundary point")->required();
  iv->add_option("--out", in_out, "output file (stdout when omitted)");
  iv->callback([&] { cmd_involution(in_body, in_plane, in_point, in_out); });

  // equator
  std::string eq_body, eq_plane, eq_out;
  std::size_t eq_res = 64;
  auto* eq = app.add_subcommand("equator", "Discretize the shadow boundary of an ellipsoid");
  eq->add_option("body", eq_body, "body JSON file")->required();
  eq->add_option("--plane", eq_plane, "u1,...,ud[:offset]")->required();
  eq->add_option("--resolution", eq_res, "number of cells (lower bound in R^4)");
  eq->add_option("--out", eq_out, "output file (stdout when omitted)");
  eq->callback([&] { cmd_equator(eq_body, eq_plane, eq_res, eq_out); });

  // verify
  std::string vf_id, vf_out = "report.json";
  std::uint64_t vf_seed = 7, vf_trials = 50;
  std::size_t vf_dim = 2;
  auto* vf = app.add_subcommand("verify", "Run a seeded experiment suite");
  vf->add_option("experiment", vf_id, "prop_or | thm_tech | thm_main | degree")->required();
  vf->add_option("--seed", vf_seed, "base seed");
  vf->add_option("--trials", vf_trials, "randomized trial count");
  vf->add_option("--cycle-dim", vf_dim, "thm_main cycle dimension (1..3)");
  vf->add_option("--out", vf_out, "report file");
  vf->callback([&] { cmd_verify(vf_id, vf_seed, vf_trials, vf_dim, vf_out); });

  // render
  std::string rd_chain, rd_plane, rd_svg;
  double rd_width = 640.0;
  bool rd_nolabels = false;
  auto* rd = app.add_subcommand("render", "Draw a planar projection as SVG");
  rd->add_option("chain", rd_chain, "chain JSON file (- for stdin)")->required();
  rd->add_option("--plane", rd_plane, "project onto this plane first");
  rd->add_option("--svg", rd_svg, "output SVG file")->required();
  rd->add_option("--width", rd_width, "drawing width in pixels");
  rd->add_flag("--no-labels", rd_nolabels, "skip face winding labels");
  rd->callback([&] { cmd_render(rd_chain, rd_plane, rd_svg, rd_width, rd_nolabels); });

  try {
    app.parse(argc, argv);
    return g_exit;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const np::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const np::Json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
