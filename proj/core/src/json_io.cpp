#include "slicereg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slicereg/config.hpp"

namespace slicereg {

using nlohmann::json;

namespace {

json q_to_j(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion j_to_q(const json& j) {
  if (!j.is_array() || j.size() != 4) fail(Errc::parse_error, "quaternion must be a 4-array");
  for (const auto& c : j)
    if (!c.is_number()) fail(Errc::parse_error, "quaternion components must be numbers");
  return Quaternion{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON");
  return j;
}

json series_to_j(const PowerSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(q_to_j(c));
  return json{{"coeffs", coeffs}, {"truncation_order", f.truncation_order()}};
}

PowerSeries j_to_series(const json& j) {
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    fail(Errc::parse_error, "series needs a coeffs array");
  std::vector<Quaternion> c;
  for (const auto& item : j["coeffs"]) c.push_back(j_to_q(item));
  if (c.empty()) fail(Errc::invariant_violation, "series needs at least one coefficient");
  if (j.contains("truncation_order")) {
    int n = j["truncation_order"].get<int>();
    if (n != static_cast<int>(c.size()) - 1)
      fail(Errc::invariant_violation, "truncation_order disagrees with the coefficient count");
  }
  return PowerSeries(std::move(c));
}

json zeros_to_j(const ZeroList& z) {
  json arr = json::array();
  for (const auto& r : z.records) {
    switch (r.kind) {
      case ZeroRecord::Kind::sphere:
        arr.push_back(json{{"kind", "sphere"}, {"x", r.x}, {"y", r.y}, {"mult", r.multiplicity}});
        break;
      case ZeroRecord::Kind::isolated:
        arr.push_back(json{{"kind", "isolated"}, {"point", q_to_j(r.point)}, {"mult", r.multiplicity}});
        break;
      case ZeroRecord::Kind::real:
        arr.push_back(json{{"kind", "real"}, {"x", r.x}, {"mult", r.multiplicity}});
        break;
    }
  }
  return arr;
}

ZeroList j_to_zeros(const json& j) {
  if (!j.is_array()) fail(Errc::parse_error, "zero list must be an array");
  ZeroList out;
  for (const auto& item : j) {
    std::string kind = item.value("kind", "");
    int mult = item.value("mult", 1);
    if (mult < 1) fail(Errc::invariant_violation, "multiplicity must be positive");
    if (kind == "sphere") {
      double x = item.at("x").get<double>(), y = item.at("y").get<double>();
      if (y <= config().eps_sphere) fail(Errc::invariant_violation, "sphere records need y > 0");
      out.records.push_back(ZeroRecord::sphere(x, y, mult));
    } else if (kind == "isolated") {
      Quaternion p = j_to_q(item.at("point"));
      if (abs_imag(p) <= config().eps_sphere)
        fail(Errc::invariant_violation, "isolated points must be nonreal");
      out.records.push_back(ZeroRecord::isolated(p, mult));
    } else if (kind == "real") {
      out.records.push_back(ZeroRecord::real_root(item.at("x").get<double>(), mult));
    } else {
      fail(Errc::parse_error, "unknown zero kind '" + kind + "'");
    }
  }
  return out;
}

json form_to_j(const FactorForm& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, LinearFactor>)
            factors.push_back(json{{"kind", "linear"}, {"a", q_to_j(x.a)}});
          else if constexpr (std::is_same_v<T, SphericalQuadratic>)
            factors.push_back(json{{"kind", "sphere"}, {"x", x.x}, {"y", x.y}});
          else if constexpr (std::is_same_v<T, ElementaryExpFactor>)
            factors.push_back(json{{"kind", "elementary_exp"}, {"a", q_to_j(x.a)}, {"p", x.p}});
          else if constexpr (std::is_same_v<T, SphericalElementaryExp>)
            factors.push_back(json{{"kind", "sphere_elementary_exp"}, {"beta", q_to_j(x.beta)}, {"p", x.p}});
          else if constexpr (std::is_same_v<T, BlaschkeLinear>)
            factors.push_back(json{{"kind", "blaschke"}, {"a", q_to_j(x.a)}});
          else if constexpr (std::is_same_v<T, BlaschkeSpherical>)
            factors.push_back(json{{"kind", "blaschke_sphere"}, {"a", q_to_j(x.a)}});
          else if constexpr (std::is_same_v<T, ElementaryLinear>)
            factors.push_back(json{{"kind", "elementary_linear"}, {"a", q_to_j(x.a)}});
          else
            factors.push_back(json{{"kind", "elementary_sphere"}, {"beta", q_to_j(x.beta)}});
        },
        fac);
  }
  return json{{"constant", q_to_j(f.constant)}, {"factors", factors}};
}

FactorForm j_to_form(const json& j) {
  FactorForm out;
  if (j.contains("constant")) out.constant = j_to_q(j["constant"]);
  if (!j.contains("factors") || !j["factors"].is_array())
    fail(Errc::parse_error, "factor form needs a factors array");
  for (const auto& item : j["factors"]) {
    std::string kind = item.value("kind", "");
    if (kind == "linear") {
      out.factors.push_back(LinearFactor{j_to_q(item.at("a"))});
    } else if (kind == "sphere") {
      double x = item.at("x").get<double>(), y = item.at("y").get<double>();
      if (y <= 0) fail(Errc::invariant_violation, "sphere factor needs y > 0");
      out.factors.push_back(SphericalQuadratic{x, y});
    } else if (kind == "elementary_exp") {
      int p = item.at("p").get<int>();
      if (p < 0) fail(Errc::invariant_violation, "elementary exponent needs p >= 0");
      out.factors.push_back(ElementaryExpFactor{j_to_q(item.at("a")), p});
    } else if (kind == "sphere_elementary_exp") {
      int p = item.at("p").get<int>();
      if (p < 0) fail(Errc::invariant_violation, "elementary exponent needs p >= 0");
      out.factors.push_back(SphericalElementaryExp{j_to_q(item.at("beta")), p});
    } else if (kind == "blaschke") {
      Quaternion a = j_to_q(item.at("a"));
      if (abs(a) >= 1.0) fail(Errc::invariant_violation, "Blaschke root must satisfy |a| < 1");
      out.factors.push_back(BlaschkeLinear{a});
    } else if (kind == "blaschke_sphere") {
      Quaternion a = j_to_q(item.at("a"));
      if (abs(a) >= 1.0) fail(Errc::invariant_violation, "Blaschke sphere must satisfy |a| < 1");
      out.factors.push_back(BlaschkeSpherical{a});
    } else if (kind == "elementary_linear") {
      out.factors.push_back(ElementaryLinear{j_to_q(item.at("a"))});
    } else if (kind == "elementary_sphere") {
      out.factors.push_back(ElementarySpherical{j_to_q(item.at("beta"))});
    } else {
      fail(Errc::parse_error, "unknown factor kind '" + kind + "'");
    }
  }
  return out;
}

}  // namespace

std::string to_json(const Quaternion& q) { return q_to_j(q).dump(); }
std::string to_json(const PowerSeries& f) { return series_to_j(f).dump(); }
std::string to_json(const ZeroList& z) { return zeros_to_j(z).dump(); }
std::string to_json(const FactorForm& f) { return form_to_j(f).dump(); }

Quaternion quaternion_from_json(const std::string& text) { return j_to_q(parse(text)); }
PowerSeries series_from_json(const std::string& text) { return j_to_series(parse(text)); }
ZeroList zeros_from_json(const std::string& text) { return j_to_zeros(parse(text)); }
FactorForm factor_form_from_json(const std::string& text) { return j_to_form(parse(text)); }

LoadedFunction load_function(const std::string& path) {
  json j = parse(read_text_file(path));
  LoadedFunction out;
  if (j.is_object() && j.contains("factors")) {
    out.is_series = false;
    out.form = j_to_form(j);
  } else {
    out.is_series = true;
    out.series = j_to_series(j);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << content;
  if (!out) fail(Errc::io_error, "short write to " + path);
}

}  // namespace slicereg
