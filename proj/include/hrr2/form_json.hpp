#pragma once

// JSON encoding of forms:
//   {"degree": 2, "normalized_coeffs": ["1", "3/2", "1"]}
// Rationals are strings "p/q" or "p". Canonically written input prints back
// byte for byte.

#include "hrr2/forms.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hrr2 {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& node);

Json form_to_json(const BivariateForm& form);

/// Throws DomainError on schema violations (missing keys, degree mismatch,
/// malformed rationals).
BivariateForm form_from_json(const Json& node);

std::string print_form(const BivariateForm& form);
BivariateForm parse_form(std::string_view text);

}  // namespace hrr2
