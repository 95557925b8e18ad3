#include "hym/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hym::io {

namespace {

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Rational rational_entry(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return parse_rational(std::to_string(v.get<std::uint64_t>()));
    return parse_rational(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw FormatError("non-finite number in rational data");
    return Rational(d);
  }
  throw FormatError("rational entries must be \"p/q\" strings or numbers");
}

double float_entry(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw FormatError("f64 entries must be numbers");
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw FormatError("not a rational literal: '" + text + "'");
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class q(den[0] == '+' ? den.substr(1) : den, 10);
  if (q == 0) throw FormatError("zero denominator in '" + text + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

json scalar_to_json(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r.get_str();
}
json scalar_to_json(double x) { return x; }

AnyHypermatrix from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("hypermatrix document must be a JSON object");
  if (!doc.contains("dims") || !doc["dims"].is_array())
    throw FormatError("missing \"dims\" array");
  if (!doc.contains("data") || !doc["data"].is_array())
    throw FormatError("missing \"data\" array");
  Dims dims;
  for (const auto& n : doc["dims"]) {
    if (!n.is_number_integer() || n.get<std::int64_t>() < 1)
      throw FormatError("dims must be positive integers");
    dims.push_back(n.get<std::size_t>());
  }
  const std::string field = doc.value("field", std::string("rational"));
  const json& data = doc["data"];
  Shape shape = [&] {
    try {
      return Shape(dims);
    } catch (const Error& e) {
      throw FormatError(e.what());
    }
  }();
  if (data.size() != shape.volume())
    throw FormatError("data length " + std::to_string(data.size()) +
                      " does not match dims volume " + std::to_string(shape.volume()));
  if (field == "rational") {
    std::vector<Rational> xs;
    xs.reserve(data.size());
    for (const auto& v : data) xs.push_back(rational_entry(v));
    return Hypermatrix<Rational>(std::move(shape), std::move(xs));
  }
  if (field == "f64") {
    std::vector<double> xs;
    xs.reserve(data.size());
    for (const auto& v : data) xs.push_back(float_entry(v));
    return Hypermatrix<double>(std::move(shape), std::move(xs));
  }
  throw FormatError("unknown field '" + field + "' (expected rational or f64)");
}

AnyHypermatrix parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(doc);
}

AnyHypermatrix read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

json to_json(const GroupReport& report) {
  json axioms = json::array();
  for (const auto& a : report.axioms) {
    json entry{{"axiom", a.axiom},
               {"status", a.status == AxiomStatus::Pass ? "pass" : "fail"},
               {"checks", a.checks},
               {"seed", report.seed}};
    if (a.witness) entry["witness"] = *a.witness;
    axioms.push_back(std::move(entry));
  }
  return json{{"signature", {{"n", report.signature.n}, {"mids", report.signature.mids}}},
              {"seed", report.seed},
              {"passed", report.passed()},
              {"axioms", std::move(axioms)}};
}

}  // namespace hym::io
