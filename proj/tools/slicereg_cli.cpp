// slicereg: command-line front end for the quaternionic entire-function
// library: series algebra, zero classification, factorization, growth and
// integral-formula analysis, plus the full verification suite.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>

#include "slicereg/config.hpp"
#include "slicereg/evaluation.hpp"
#include "slicereg/factorization.hpp"
#include "slicereg/integral.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/report.hpp"
#include "slicereg/verify.hpp"

namespace sr = slicereg;

namespace {

sr::ImaginaryUnit parse_slice(const std::string& s) {
  if (s == "i") return sr::ImaginaryUnit::i();
  if (s == "j") return sr::ImaginaryUnit::j();
  if (s == "k") return sr::ImaginaryUnit::k();
  double x = 0, y = 0, z = 0;
  if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &x, &y, &z) == 3)
    return sr::ImaginaryUnit(sr::Quaternion{0, x, y, z});
  sr::fail(sr::Errc::parse_error, "--slice expects i|j|k or x,y,z");
}

sr::PowerSeries load_series(const std::string& path) {
  sr::LoadedFunction f = sr::load_function(path);
  if (f.is_series) return f.series;
  return sr::expand(f.form);
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content << "\n";
  else
    sr::write_text_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entire slice regular functions over the quaternions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, input, input2, output;
  std::uint64_t seed = 7;
  int nodes = 0, truncation = 0;
  double tolerance = 0, radius_flag = 0;
  std::string slice = "i";
  app.add_option("--config", config_path, "TOML-style config file");
  app.add_option("--seed", seed, "RNG seed for verification runs");
  app.add_option("--nodes", nodes, "quadrature node count (power of two >= 64)");
  app.add_option("--truncation", truncation, "series truncation cap");
  app.add_option("--tolerance", tolerance, "override the relative tolerance");

  // ---- series -------------------------------------------------------------
  auto* series = app.add_subcommand("series", "star-algebra operations");
  series->require_subcommand(1);
  std::string point_json;
  for (const char* name : {"mul", "conj", "symm", "inv", "compose"}) {
    auto* sub = series->add_subcommand(name);
    sub->add_option("--input", input, "first operand (JSON series)")->required();
    if (std::string(name) == "mul" || std::string(name) == "compose")
      sub->add_option("--rhs", input2, "second operand (JSON series)")->required();
    sub->add_option("--output", output, "output path (stdout if omitted)");
  }

  auto* seval = series->add_subcommand("eval", "evaluate on a slice grid, CSV out");
  seval->add_option("--input", input, "JSON series")->required();
  double eval_radius = 1.0;
  int eval_count = 64;
  seval->add_option("--radius", eval_radius, "grid radius");
  seval->add_option("--count", eval_count, "angular sample count");
  seval->add_option("--slice", slice, "slice unit: i|j|k or x,y,z");
  seval->add_option("--output", output, "output path");

  // ---- zeros --------------------------------------------------------------
  auto* zeros = app.add_subcommand("zeros", "zero classification and statistics");
  zeros->require_subcommand(1);
  auto* zfind = zeros->add_subcommand("find", "classify the zeros of a polynomial");
  zfind->add_option("--input", input, "JSON series or factor form")->required();
  zfind->add_option("--output", output, "output path");
  std::string loci_csv;
  zfind->add_option("--csv", loci_csv, "also write zero loci as CSV plot data");
  auto* zstats = zeros->add_subcommand("stats", "counting function and exponent");
  zstats->add_option("--input", input, "JSON zero list")->required();
  zstats->add_option("--output", output, "output path");
  double tmax = 10;
  int tcount = 64;
  zstats->add_option("--tmax", tmax, "largest grid radius");
  zstats->add_option("--tcount", tcount, "grid size");

  // ---- factor -------------------------------------------------------------
  auto* factor = app.add_subcommand("factor", "build and evaluate factored forms");
  factor->require_subcommand(1);
  auto* fbuild = factor->add_subcommand("build", "Weierstrass product from a zero list");
  fbuild->add_option("--input", input, "JSON zero list")->required();
  fbuild->add_option("--output", output, "output path");
  double wradius = 1.0;
  int puniform = -1;
  fbuild->add_option("--radius", wradius, "certification radius");
  fbuild->add_option("--p", puniform, "uniform elementary exponent (default p_n = n)");
  auto* feval = factor->add_subcommand("eval", "evaluate a factor form at a point");
  feval->add_option("--input", input, "JSON factor form")->required();
  feval->add_option("--point", point_json, "quaternion [w,x,y,z]")->required();
  feval->add_option("--output", output, "output path");
  auto* fcert = factor->add_subcommand("certify", "convergence certificate for a modulus rule");
  std::string rule = "geometric:1,2";
  fcert->add_option("--rule", rule,
                    "geometric:c,ratio | power:c,alpha | blaschke-geometric:c,ratio | blaschke-power:c,alpha");
  fcert->add_option("--radius", wradius, "certification radius");
  fcert->add_option("--output", output, "output path");

  // ---- growth ------------------------------------------------------------
  auto* growth = app.add_subcommand("growth", "order/type, Jensen, lower bounds");
  growth->require_subcommand(1);
  auto* gorder = growth->add_subcommand("order", "order and type from coefficients");
  gorder->add_option("--input", input, "JSON series")->required();
  gorder->add_option("--output", output, "output path");
  auto* gjensen = growth->add_subcommand("jensen", "Jensen identity for f = g h");
  gjensen->add_option("--g-part", input, "intrinsic part (JSON factor form)")->required();
  gjensen->add_option("--h-part", input2, "isolated part (JSON factor form)")->required();
  gjensen->add_option("--radius", radius_flag, "contour radius")->required();
  gjensen->add_option("--output", output, "output path");
  auto* gbounds = growth->add_subcommand("bounds", "Ehrenpreis-Malgrange lower bound");
  gbounds->add_option("--input", input, "JSON factor form (polynomial)")->required();
  gbounds->add_option("--radius", radius_flag, "R")->required();
  std::string mode = "origin";
  gbounds->add_option("--mode", mode, "origin | general | exterior");
  gbounds->add_option("--point", point_json, "center quaternion [w,x,y,z]");
  gbounds->add_option("--output", output, "output path");
  auto* gcurve = growth->add_subcommand("curve", "modulus curve (r, M_f(r)) as CSV");
  gcurve->add_option("--input", input, "JSON series")->required();
  double rmin = 0.5, rmax = 5.0;
  int rcount = 32;
  gcurve->add_option("--rmin", rmin, "smallest radius");
  gcurve->add_option("--rmax", rmax, "largest radius");
  gcurve->add_option("--count", rcount, "sample count");
  gcurve->add_option("--output", output, "output path");
  auto* gcartan = growth->add_subcommand("cartan", "Cartan exclusion balls");
  gcartan->add_option("--input", input, "JSON zero list")->required();
  double H = 1.0;
  gcartan->add_option("--H", H, "ball budget H");
  gcartan->add_option("--output", output, "output path");

  // ---- integral ----------------------------------------------------------
  auto* integral = app.add_subcommand("integral", "Cauchy, Schwarz and Borel formulas");
  integral->require_subcommand(1);
  auto* icauchy = integral->add_subcommand("cauchy", "value or derivative by the Cauchy formula");
  icauchy->add_option("--input", input, "JSON series")->required();
  icauchy->add_option("--point", point_json, "quaternion [w,x,y,z]")->required();
  icauchy->add_option("--radius", radius_flag, "contour radius")->required();
  int deriv_order = 0;
  icauchy->add_option("--order", deriv_order, "derivative order (default 0)");
  icauchy->add_option("--slice", slice, "contour slice: i|j|k or x,y,z");
  icauchy->add_option("--output", output, "output path");
  auto* ischwarz = integral->add_subcommand("schwarz", "Schwarz formula reconstruction");
  ischwarz->add_option("--input", input, "JSON series with f(0) real")->required();
  ischwarz->add_option("--point", point_json, "quaternion [w,x,y,z]")->required();
  ischwarz->add_option("--radius", radius_flag, "contour radius")->required();
  ischwarz->add_option("--slice", slice, "contour slice");
  ischwarz->add_option("--output", output, "output path");
  auto* iborel = integral->add_subcommand("borel", "Borel transform (optionally invert)");
  iborel->add_option("--input", input, "JSON series sum q^k a_k/k!")->required();
  std::string invert_point;
  iborel->add_option("--invert-at", invert_point, "quaternion: also invert at this point");
  iborel->add_option("--radius", radius_flag, "inversion contour radius");
  iborel->add_option("--slice", slice, "contour slice");
  iborel->add_option("--output", output, "output path");

  // ---- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run acceptance criteria");
  auto* vall = verify->add_subcommand("all", "run every criterion");
  std::string report_dir;
  vall->add_option("--output", report_dir, "directory for report.csv / summary.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) sr::config() = sr::Config::from_file(config_path);
    if (tolerance > 0) sr::config().eps_rel = tolerance;
    if (truncation > 0) sr::config().truncation_cap = truncation;
    if (nodes > 0) sr::config().quadrature_nodes = nodes;
    sr::config().seed = seed;

    if (seval->parsed()) {
      sr::PowerSeries f = load_series(input);
      sr::Quaternion I = parse_slice(slice).value();
      std::string body = "qw,qx,qy,qz,vw,vx,vy,vz\n";
      for (int k = 0; k < eval_count; ++k) {
        double t = 6.283185307179586 * k / eval_count;
        sr::Quaternion q = eval_radius * std::cos(t) * sr::Quaternion::one() +
                           eval_radius * std::sin(t) * I;
        sr::Quaternion v = sr::eval(f, q);
        body += sr::format_double(q.w) + "," + sr::format_double(q.x) + "," +
                sr::format_double(q.y) + "," + sr::format_double(q.z) + "," +
                sr::format_double(v.w) + "," + sr::format_double(v.x) + "," +
                sr::format_double(v.y) + "," + sr::format_double(v.z) + "\n";
      }
      emit(output, body);
      return 0;
    }
    if (series->parsed()) {
      sr::PowerSeries f = load_series(input);
      sr::PowerSeries out_series;
      if (series->get_subcommand("mul")->parsed())
        out_series = sr::star_mul(f, load_series(input2));
      else if (series->get_subcommand("conj")->parsed())
        out_series = sr::conjugate(f);
      else if (series->get_subcommand("symm")->parsed())
        out_series = sr::symmetrize(f);
      else if (series->get_subcommand("inv")->parsed())
        out_series = sr::star_inverse(f);
      else
        out_series = sr::bullet_compose(f, load_series(input2));
      emit(output, sr::to_json(out_series));
      return 0;
    }
    if (zfind->parsed()) {
      sr::ZeroList z = sr::find_zeros(load_series(input));
      if (!loci_csv.empty()) {
        std::string body = "kind,x,y,mult,modulus\n";
        for (const auto& r : z.records) {
          const char* kind = r.kind == sr::ZeroRecord::Kind::sphere
                                 ? "sphere"
                                 : (r.kind == sr::ZeroRecord::Kind::real ? "real" : "isolated");
          body += std::string(kind) + "," + sr::format_double(r.x) + "," +
                  sr::format_double(r.y) + "," + std::to_string(r.multiplicity) + "," +
                  sr::format_double(r.modulus()) + "\n";
        }
        sr::write_text_file(loci_csv, body);
      }
      emit(output, sr::to_json(z));
      return 0;
    }
    if (zstats->parsed()) {
      sr::ZeroList z = sr::zeros_from_json(sr::read_text_file(input));
      std::vector<double> grid;
      for (int k = 1; k <= tcount; ++k) grid.push_back(tmax * k / tcount);
      sr::ZeroStatistics st = sr::zero_statistics(z, grid);
      std::vector<std::pair<double, double>> curve;
      for (size_t i = 0; i < st.t_grid.size(); ++i) curve.push_back({st.t_grid[i], st.counting[i]});
      std::string body = sr::render_curve_csv("t", "n(t)", curve);
      body += "# convergence_exponent," + sr::format_double(st.convergence_exponent) + "\n";
      body += "# upper_density," + sr::format_double(st.upper_density) + "\n";
      emit(output, body);
      return 0;
    }
    if (fbuild->parsed()) {
      sr::ZeroList z = sr::zeros_from_json(sr::read_text_file(input));
      sr::PRule p = puniform >= 0 ? sr::PRule::constant(puniform) : sr::PRule::linear();
      sr::WeierstrassCertificate cert;
      sr::FactorForm form = sr::weierstrass_product(z, p, wradius, &cert);
      emit(output, sr::to_json(form));
      std::cerr << "condition_sum=" << cert.condition_sum << "\n";
      return 0;
    }
    if (feval->parsed()) {
      sr::FactorForm form = sr::factor_form_from_json(sr::read_text_file(input));
      sr::Quaternion p = sr::quaternion_from_json(point_json);
      emit(output, sr::to_json(sr::eval_factored(form, p)));
      return 0;
    }
    if (fcert->parsed()) {
      auto colon = rule.find(':');
      if (colon == std::string::npos) sr::fail(sr::Errc::parse_error, "--rule needs kind:c,param");
      std::string kind = rule.substr(0, colon);
      double cc = 1, param = 1;
      if (std::sscanf(rule.c_str() + colon + 1, "%lf,%lf", &cc, &param) != 2)
        sr::fail(sr::Errc::parse_error, "--rule needs kind:c,param");
      bool certified = false;
      double sum = 0;
      if (kind == "geometric" || kind == "power") {
        sr::ModulusRule mr{kind == "geometric" ? sr::ModulusRule::Kind::geometric
                                               : sr::ModulusRule::Kind::power_law,
                           cc, param};
        auto cert = sr::certify_weierstrass(mr, sr::PRule::linear(), wradius, 0);
        certified = cert.certified;
        sum = cert.condition_sum;
      } else if (kind == "blaschke-geometric" || kind == "blaschke-power") {
        sr::BlaschkeRule br{kind == "blaschke-geometric" ? sr::BlaschkeRule::Kind::geometric
                                                         : sr::BlaschkeRule::Kind::power,
                            cc, param};
        auto cert = sr::blaschke_condition(br);
        certified = cert.certified;
        sum = cert.condition_sum;
      } else {
        sr::fail(sr::Errc::parse_error, "unknown rule kind " + kind);
      }
      std::string sum_text = std::isfinite(sum) ? sr::format_double(sum) : "\"divergent\"";
      emit(output, std::string("{\"certified\":") + (certified ? "true" : "false") +
                       ",\"condition_sum\":" + sum_text + "}");
      return certified ? 0 : 1;
    }
    if (gorder->parsed()) {
      sr::GrowthEstimate g = sr::order_type_from_coeffs(load_series(input));
      emit(output, "{\"order\":" + sr::format_double(g.order) + ",\"type\":" +
                       sr::format_double(g.type) + ",\"method\":\"" + g.method +
                       "\",\"fit_residual\":" + sr::format_double(g.fit_residual) + "}");
      return 0;
    }
    if (gjensen->parsed()) {
      sr::FactorForm g = sr::factor_form_from_json(sr::read_text_file(input));
      sr::FactorForm h = sr::factor_form_from_json(sr::read_text_file(input2));
      sr::JensenReport rep = sr::jensen_check(g, h, radius_flag);
      std::vector<sr::CheckRow> rows;
      rows.push_back({"jensen", "R=" + sr::format_double(rep.used_radius), rep.lhs, rep.rhs,
                      rep.rhs - rep.lhs, rep.residual <= 1e-6});
      emit(output, sr::render_csv(rows));
      return sr::all_pass(rows) ? 0 : 1;
    }
    if (gbounds->parsed()) {
      sr::FactorForm P = sr::factor_form_from_json(sr::read_text_file(input));
      sr::Quaternion center = point_json.empty() ? sr::Quaternion::zero()
                                                 : sr::quaternion_from_json(point_json);
      sr::LowerBoundMode m = sr::LowerBoundMode::origin;
      if (mode == "general") m = sr::LowerBoundMode::general;
      else if (mode == "exterior") m = sr::LowerBoundMode::exterior;
      else if (mode != "origin") sr::fail(sr::Errc::parse_error, "unknown mode " + mode);
      sr::ExclusionRegion reg = sr::lower_bound_region(P, center, radius_flag, m);
      std::string body = "{\"bound\":" + sr::format_double(reg.certified_bound) +
                         ",\"gamma_radius\":" + sr::format_double(reg.gamma_radius) + ",\"disks\":[";
      for (size_t i = 0; i < reg.disks.size(); ++i) {
        if (i) body += ",";
        body += "{\"center\":" + sr::to_json(reg.disks[i].center) +
                ",\"radius\":" + sr::format_double(reg.disks[i].radius) + "}";
      }
      body += "]}";
      emit(output, body);
      return 0;
    }
    if (gcurve->parsed()) {
      sr::PowerSeries f = load_series(input);
      std::vector<std::pair<double, double>> pts;
      for (int k = 0; k < rcount; ++k) {
        double r = rmin * std::pow(rmax / rmin, rcount > 1 ? k / double(rcount - 1) : 0.0);
        pts.push_back({r, sr::max_modulus(f, r).M});
      }
      emit(output, sr::render_curve_csv("r", "M_f(r)", pts));
      return 0;
    }
    if (gcartan->parsed()) {
      sr::ZeroList z = sr::zeros_from_json(sr::read_text_file(input));
      sr::ExclusionRegion reg = sr::cartan_balls(z, H);
      std::string body = "{\"bound\":" + sr::format_double(reg.certified_bound) + ",\"balls\":[";
      for (size_t i = 0; i < reg.disks.size(); ++i) {
        if (i) body += ",";
        body += "{\"center\":" + sr::to_json(reg.disks[i].center) +
                ",\"radius\":" + sr::format_double(reg.disks[i].radius) + "}";
      }
      body += "]}";
      emit(output, body);
      return 0;
    }
    if (icauchy->parsed()) {
      sr::PowerSeries f = load_series(input);
      sr::Quaternion q = sr::quaternion_from_json(point_json);
      int n = nodes > 0 ? nodes : 256;
      sr::ContourSpec C = sr::ContourSpec::make(parse_slice(slice), radius_flag, n);
      emit(output, sr::to_json(sr::cauchy_eval(f, q, deriv_order, C)));
      return 0;
    }
    if (ischwarz->parsed()) {
      sr::PowerSeries f = load_series(input);
      sr::Quaternion q = sr::quaternion_from_json(point_json);
      int n = nodes > 0 ? nodes : 1024;
      sr::ContourSpec C = sr::ContourSpec::make(parse_slice(slice), radius_flag, n);
      emit(output, sr::to_json(sr::schwarz_eval(f, C, q)));
      return 0;
    }
    if (iborel->parsed()) {
      sr::PowerSeries f = load_series(input);
      sr::BorelSeries phi = sr::borel(f);
      std::string body = "{\"sigma\":" + sr::format_double(phi.sigma);
      if (!invert_point.empty()) {
        double rad = radius_flag > 0 ? radius_flag : 2.0 * phi.sigma + 1.0;
        int n = nodes > 0 ? nodes : 512;
        sr::ContourSpec C = sr::ContourSpec::make(parse_slice(slice), rad, n);
        sr::Quaternion q = sr::quaternion_from_json(invert_point);
        body += ",\"inverted\":" + sr::to_json(sr::borel_invert(phi, q, C));
      }
      body += "}";
      emit(output, body);
      return 0;
    }
    if (vall->parsed()) {
      sr::VerifyReport rep = sr::run_verification(seed);
      for (const auto& c : rep.criteria)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.index << ": " << c.label
                  << "\n";
      if (!report_dir.empty()) {
        sr::write_text_file(report_dir + "/report.csv", rep.csv);
        sr::write_text_file(report_dir + "/summary.json", rep.summary_json);
      } else {
        std::cout << rep.summary_json << "\n";
      }
      return rep.all_pass ? 0 : 1;
    }
  } catch (const sr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
