#include "hrr2/form_json.hpp"

#include "hrr2/errors.hpp"

namespace hrr2 {

Json rational_to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& node) {
  if (!node.is_string()) throw DomainError("rational must be encoded as a string");
  return parse_rational(node.get<std::string>());
}

Json form_to_json(const BivariateForm& form) {
  Json out = Json::object();
  out["degree"] = form.degree();
  Json coeffs = Json::array();
  for (const auto& c : form.normalized()) coeffs.push_back(rational_to_json(c));
  out["normalized_coeffs"] = std::move(coeffs);
  return out;
}

BivariateForm form_from_json(const Json& node) {
  if (!node.is_object()) throw DomainError("form must be a JSON object");
  if (!node.contains("degree") || !node.contains("normalized_coeffs")) {
    throw DomainError("form needs \"degree\" and \"normalized_coeffs\"");
  }
  const Json& deg = node.at("degree");
  if (!deg.is_number_integer() || deg.get<long long>() < 0) {
    throw DomainError("\"degree\" must be a non-negative integer");
  }
  const Json& coeffs = node.at("normalized_coeffs");
  if (!coeffs.is_array()) throw DomainError("\"normalized_coeffs\" must be an array");
  if (coeffs.size() != static_cast<std::size_t>(deg.get<long long>()) + 1) {
    throw DomainError("\"normalized_coeffs\" must have degree + 1 entries");
  }
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& entry : coeffs) c.push_back(rational_from_json(entry));
  return BivariateForm(std::move(c));
}

std::string print_form(const BivariateForm& form) { return form_to_json(form).dump(); }

BivariateForm parse_form(std::string_view text) {
  Json node;
  try {
    node = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("malformed form JSON: ") + e.what());
  }
  return form_from_json(node);
}

}  // namespace hrr2
