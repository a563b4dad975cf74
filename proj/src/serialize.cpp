#include "littlewood/serialize.hpp"

#include "littlewood/error.hpp"

namespace littlewood {

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const QSeries& s) {
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < s.dense().size(); ++k) {
    if (sgn(s.dense()[k]) != 0) coeffs[std::to_string(k)] = s.dense()[k].get_str();
  }
  Json out;
  out["order"] = s.is_exact() ? Json(nullptr) : Json(s.order());
  out["coefficients"] = std::move(coeffs);
  return out;
}

QSeries qseries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coefficients")) throw Error(ErrorCode::ParseError, "malformed series");
  LaurentPoly p;
  for (const auto& [k, v] : j.at("coefficients").items()) {
    p += LaurentPoly::monomial(parse_rational(v.get<std::string>()), std::stoi(k));
  }
  const auto& order = j.at("order");
  return QSeries(p, order.is_null() ? QSeries::kExact : order.get<int>());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (std::size_t k = 0; k < p.dense().size(); ++k) {
    if (sgn(p.dense()[k]) != 0) out[std::to_string(p.valuation() + static_cast<int>(k))] = p.dense()[k].get_str();
  }
  return out;
}

Json to_json(const RationalFunction& f) {
  Json out;
  out["numerator"] = to_json(f.numerator());
  out["denominator"] = to_json(f.denominator());
  out["text"] = f.to_string();
  return out;
}

}  // namespace littlewood
