#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "hym/algebra.hpp"
#include "hym/hypermatrix.hpp"

namespace hym::io {

using json = nlohmann::json;

/// Malformed input document (bad JSON, wrong field, unparsable number).
/// Distinct from hym::Error, which signals a domain failure.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyHypermatrix = std::variant<Hypermatrix<Rational>, Hypermatrix<double>>;

/// "p/q" or "p" with optional sign; reduced on return. Throws FormatError.
Rational parse_rational(const std::string& text);

json scalar_to_json(const Rational& x);
json scalar_to_json(double x);

/// {"dims":[...],"field":"rational"|"f64","data":[...]} with data in canonical
/// lexicographic order. Rationals are reduced "p/q" strings ("p" when the
/// denominator is 1); floats are JSON numbers.
template <class T>
json to_json(const Hypermatrix<T>& a) {
  json data = json::array();
  for (const T& x : a.data()) data.push_back(scalar_to_json(x));
  return json{{"dims", a.dims()}, {"field", FieldTraits<T>::name}, {"data", std::move(data)}};
}

AnyHypermatrix from_json(const json& doc);
AnyHypermatrix parse(const std::string& text);
AnyHypermatrix read_file(const std::string& path);

json to_json(const GroupReport& report);

}  // namespace hym::io
