#include "ii/serialize.hpp"

#include <cstdio>

#include <json.hpp>

namespace ii {

using nlohmann::json;

namespace {

json scalar_json(const Scalar& c) {
  if (c.im.is_zero()) return to_string(c.re);
  return json{{"re", to_string(c.re)}, {"im", to_string(c.im)}};
}

Scalar scalar_of(const json& j, const std::string& field) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_object()) {
    Rational re(0), im(0);
    if (j.contains("re")) re = parse_rational(j.at("re").get<std::string>());
    if (j.contains("im")) im = parse_rational(j.at("im").get<std::string>());
    return Scalar(re, im);
  }
  throw error("field '" + field + "' is not a scalar");
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(scalar_json(c));
  return a;
}

Vec vec_of(const json& j, const std::string& field) {
  if (!j.is_array()) throw error("field '" + field + "' is not an array");
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(scalar_of(e, field));
  return v;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols; ++j) row.push_back(scalar_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_of(const json& j, const std::string& field) {
  if (!j.is_array()) throw error("field '" + field + "' is not a matrix");
  Mat m;
  m.rows = j.size();
  m.cols = m.rows ? j.at(0).size() : 0;
  m.a.reserve(m.rows * m.cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != m.cols) throw error("field '" + field + "' is ragged");
    for (const auto& e : row) m.a.push_back(scalar_of(e, field));
  }
  return m;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error("malformed JSON input");
  return j;
}

int int_field(const json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw error("field '" + field + "' missing or not an integer");
  return j.at(field).get<int>();
}

Exponent exponent_field(const json& j, const std::string& field) {
  if (!j.contains(field)) throw error("field '" + field + "' missing");
  const json& v = j.at(field);
  if (v.is_string()) return parse_exponent(v.get<std::string>());
  if (v.is_number_integer()) return Exponent::of(Rational(v.get<long long>()));
  throw error("field '" + field + "' is not an exponent");
}

json norm_json(const NormSpec& n) {
  switch (n.kind) {
    case NormSpec::Kind::weighted_p: {
      json j{{"kind", "p"}, {"p", to_string(n.p)}};
      if (!n.weights.empty()) {
        json ws = json::array();
        for (const auto& w : n.weights) ws.push_back(to_string(w));
        j["weights"] = std::move(ws);
      }
      return j;
    }
    case NormSpec::Kind::euclidean:
      return json{{"kind", "euclidean"}};
    case NormSpec::Kind::sup:
      return json{{"kind", "sup"}};
    case NormSpec::Kind::dual_table:
      return json{{"kind", "dual_table"}, {"table", mat_json(n.table)}};
  }
  throw error("unknown norm kind");
}

NormSpec norm_of(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw error("field 'norm.kind' missing");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "euclidean") return NormSpec::euclidean_norm();
  if (kind == "sup") return NormSpec::sup_norm();
  if (kind == "dual_table") return NormSpec::dual(mat_of(j.at("table"), "norm.table"));
  if (kind == "p") {
    std::vector<Rational> ws;
    if (j.contains("weights"))
      for (const auto& w : j.at("weights")) ws.push_back(parse_rational(w.get<std::string>()));
    return NormSpec::weighted(exponent_field(j, "p"), std::move(ws));
  }
  throw error("field 'norm.kind' has unknown value: " + kind);
}

json space_json(const FiniteMeasureSpace& X) {
  json ws = json::object();
  for (size_t i = 0; i < X.size(); ++i) ws[X.points[i]] = to_string(X.weights[i]);
  return json{{"points", X.points}, {"weights", std::move(ws)}};
}

FiniteMeasureSpace space_of(const json& j) {
  if (!j.contains("points") || !j.at("points").is_array())
    throw error("field 'points' missing or not an array");
  std::vector<std::string> pts = j.at("points").get<std::vector<std::string>>();
  std::vector<Rational> ws;
  ws.reserve(pts.size());
  if (!j.contains("weights") || !j.at("weights").is_object())
    throw error("field 'weights' missing or not an object");
  for (const auto& p : pts) {
    if (!j.at("weights").contains(p)) throw error("field 'weights." + p + "' missing");
    ws.push_back(parse_rational(j.at("weights").at(p).get<std::string>()));
  }
  return FiniteMeasureSpace(std::move(pts), std::move(ws));
}

} // namespace

std::string to_json(const Scalar& c) { return scalar_json(c).dump(); }

std::string to_json(const DyadicStep& f) {
  return json{{"level", f.level}, {"coeffs", vec_json(f.coeffs)}}.dump();
}

std::string to_json(const PiecewiseLinear& F) {
  return json{{"level", F.level}, {"values", vec_json(F.values)}}.dump();
}

std::string to_json(const FiniteSeq& a) { return json{{"coeffs", vec_json(a.coeffs)}}.dump(); }

namespace {

json algebra_target_json(const AlgebraTarget& t) {
  json j{{"dim", t.dim},
         {"p", to_string(t.p)},
         {"basepoint", vec_json(t.basepoint)},
         {"delta", mat_json(t.delta)},
         {"norm", norm_json(t.norm)}};
  if (!t.name.empty()) j["name"] = t.name;
  if (t.allow_bounded) j["allow_bounded"] = true;
  return j;
}

AlgebraTarget algebra_target_of(const json& j) {
  AlgebraTarget t;
  t.dim = int_field(j, "dim");
  t.p = exponent_field(j, "p");
  if (!j.contains("basepoint")) throw error("field 'basepoint' missing");
  t.basepoint = vec_of(j.at("basepoint"), "basepoint");
  if (!j.contains("delta")) throw error("field 'delta' missing");
  t.delta = mat_of(j.at("delta"), "delta");
  t.norm = j.contains("norm") ? norm_of(j.at("norm")) : NormSpec::sup_norm();
  if (j.contains("name")) t.name = j.at("name").get<std::string>();
  if (j.contains("allow_bounded")) t.allow_bounded = j.at("allow_bounded").get<bool>();
  return t;
}

} // namespace

std::string to_json(const AlgebraTarget& t) { return algebra_target_json(t).dump(); }

std::string to_json(const MorphismTable& t) {
  json levels = json::array();
  for (const auto& m : t.levels) levels.push_back(mat_json(m));
  return json{{"target", algebra_target_json(t.target)}, {"levels", std::move(levels)}}.dump();
}

std::string to_json(const SeqTarget& t) {
  json j{{"dim", t.dim},
         {"p", to_string(t.p)},
         {"delta", mat_json(t.delta)},
         {"norm", norm_json(t.norm)}};
  if (!t.name.empty()) j["name"] = t.name;
  return j.dump();
}

std::string to_json(const FiniteMeasureSpace& X) { return space_json(X).dump(); }

std::string to_json(const PartialMap& f) {
  json domain = json::array();
  json map = json::object();
  for (size_t k = 0; k < f.domain.size(); ++k) {
    const std::string& from = f.source.points[static_cast<size_t>(f.domain[k])];
    domain.push_back(from);
    map[from] = f.target.points[static_cast<size_t>(f.map[k])];
  }
  return json{{"source", space_json(f.source)},
              {"target", space_json(f.target)},
              {"domain", std::move(domain)},
              {"map", std::move(map)}}
      .dump();
}

std::string to_json(const SimpleFn& f) {
  json vals = json::object();
  for (size_t i = 0; i < f.space.size(); ++i) vals[f.space.points[i]] = scalar_json(f.values[i]);
  return json{{"space", space_json(f.space)}, {"values", std::move(vals)}}.dump();
}

std::string to_json(const SignedMeasure& nu) {
  json mass = json::object();
  for (size_t i = 0; i < nu.space.size(); ++i) mass[nu.space.points[i]] = scalar_json(nu.mass[i]);
  return json{{"space", space_json(nu.space)}, {"mass", std::move(mass)}}.dump();
}

Scalar scalar_from_json(const std::string& text) { return scalar_of(parse(text), "scalar"); }

DyadicStep step_from_json(const std::string& text) {
  json j = parse(text);
  return DyadicStep(int_field(j, "level"), vec_of(j.at("coeffs"), "coeffs"));
}

PiecewiseLinear pl_from_json(const std::string& text) {
  json j = parse(text);
  return PiecewiseLinear(int_field(j, "level"), vec_of(j.at("values"), "values"));
}

FiniteSeq seq_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("coeffs")) throw error("field 'coeffs' missing");
  return FiniteSeq(vec_of(j.at("coeffs"), "coeffs"));
}

AlgebraTarget algebra_target_from_json(const std::string& text) {
  return algebra_target_of(parse(text));
}

MorphismTable morphism_table_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("target")) throw error("field 'target' missing");
  MorphismTable t;
  t.target = algebra_target_of(j.at("target"));
  if (!j.contains("levels") || !j.at("levels").is_array())
    throw error("field 'levels' missing or not an array");
  for (const auto& m : j.at("levels")) t.levels.push_back(mat_of(m, "levels"));
  return t;
}

SeqTarget seq_target_from_json(const std::string& text) {
  json j = parse(text);
  SeqTarget t;
  t.dim = int_field(j, "dim");
  t.p = exponent_field(j, "p");
  if (!j.contains("delta")) throw error("field 'delta' missing");
  t.delta = mat_of(j.at("delta"), "delta");
  t.norm = j.contains("norm") ? norm_of(j.at("norm")) : NormSpec::sup_norm();
  if (j.contains("name")) t.name = j.at("name").get<std::string>();
  return t;
}

FiniteMeasureSpace space_from_json(const std::string& text) { return space_of(parse(text)); }

PartialMap partial_map_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("source") || !j.contains("target"))
    throw error("field 'source' or 'target' missing");
  FiniteMeasureSpace src = space_of(j.at("source"));
  FiniteMeasureSpace tgt = space_of(j.at("target"));
  if (!j.contains("domain") || !j.at("domain").is_array())
    throw error("field 'domain' missing or not an array");
  if (!j.contains("map") || !j.at("map").is_object())
    throw error("field 'map' missing or not an object");
  std::vector<int> domain, map;
  for (const auto& d : j.at("domain")) {
    std::string name = d.get<std::string>();
    int idx = src.index_of(name);
    if (idx < 0) throw error("field 'domain' names unknown point: " + name);
    if (!j.at("map").contains(name)) throw error("field 'map." + name + "' missing");
    std::string to = j.at("map").at(name).get<std::string>();
    int tidx = tgt.index_of(to);
    if (tidx < 0) throw error("field 'map' names unknown target point: " + to);
    domain.push_back(idx);
    map.push_back(tidx);
  }
  return make_partial(std::move(src), std::move(tgt), std::move(domain), std::move(map));
}

SimpleFn simple_fn_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("space")) throw error("field 'space' missing");
  FiniteMeasureSpace X = space_of(j.at("space"));
  if (!j.contains("values") || !j.at("values").is_object())
    throw error("field 'values' missing or not an object");
  Vec vals(X.size());
  for (size_t i = 0; i < X.size(); ++i) {
    if (!j.at("values").contains(X.points[i]))
      throw error("field 'values." + X.points[i] + "' missing");
    vals[i] = scalar_of(j.at("values").at(X.points[i]), "values." + X.points[i]);
  }
  return SimpleFn(std::move(X), std::move(vals));
}

SignedMeasure signed_measure_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("space")) throw error("field 'space' missing");
  SignedMeasure nu;
  nu.space = space_of(j.at("space"));
  if (!j.contains("mass") || !j.at("mass").is_object())
    throw error("field 'mass' missing or not an object");
  nu.mass.resize(nu.space.size());
  for (size_t i = 0; i < nu.space.size(); ++i) {
    if (!j.at("mass").contains(nu.space.points[i]))
      throw error("field 'mass." + nu.space.points[i] + "' missing");
    nu.mass[i] = scalar_of(j.at("mass").at(nu.space.points[i]), "mass");
  }
  return nu;
}

FunctorTargetPtr functor_target_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("kind")) throw error("field 'kind' missing");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "field-total") return field_total_target();
  if (kind == "simple")
    return simple_lp_target(j.contains("p") ? exponent_field(j, "p") : Exponent::of(1));
  if (kind == "measures") return measures_target();
  if (kind == "hilbert")
    return hilbert_twist_target(j.contains("seed") ? j.at("seed").get<uint64_t>() : 1);
  throw error("field 'kind' has unknown value: " + kind);
}

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace ii
