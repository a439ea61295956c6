#include "pickdisc/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <limits>

namespace pickdisc {

namespace {

Polynomial polynomial_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw InvalidInput(std::string(what) + " must be a nonempty coefficient array");
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const Json& e : j) coeffs.push_back(complex_from_json(e));
  return Polynomial(std::move(coeffs));
}

Json polynomial_to_json(const Polynomial& p) {
  Json arr = Json::array();
  if (p.is_zero()) {
    arr.push_back(complex_to_json(Complex(0.0, 0.0)));
    return arr;
  }
  for (const Complex& c : p.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

Rat rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InvalidInput("exact coefficients must be [num, den] integer pairs");
  }
  const std::int64_t num = j[0].get<std::int64_t>();
  const std::int64_t den = j[1].get<std::int64_t>();
  if (den == 0) throw InvalidInput("exact coefficient with zero denominator");
  return Rat(num) / Rat(den);
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput("complex values must be [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json embedding_to_json(const EmbeddingMap& f) {
  Json j;
  j["dimension"] = f.dimension();
  Json coords = Json::array();
  for (const RationalFunction& c : f.coordinates()) {
    Json entry;
    entry["num"] = polynomial_to_json(c.numerator());
    entry["den"] = polynomial_to_json(c.denominator());
    coords.push_back(std::move(entry));
  }
  j["coordinates"] = std::move(coords);
  return j;
}

EmbeddingMap embedding_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("coordinates")) {
    throw InvalidInput("embedding needs \"dimension\" and \"coordinates\"");
  }
  if (!j["dimension"].is_number_integer()) throw InvalidInput("\"dimension\" must be an integer");
  const int d = j["dimension"].get<int>();
  const Json& coords = j["coordinates"];
  if (!coords.is_array() || static_cast<int>(coords.size()) != d || d < 1) {
    throw InvalidInput("\"coordinates\" must list exactly \"dimension\" entries");
  }
  std::vector<RationalFunction> out;
  out.reserve(coords.size());
  for (const Json& entry : coords) {
    if (!entry.is_object() || !entry.contains("num") || !entry.contains("den")) {
      throw InvalidInput("each coordinate needs \"num\" and \"den\"");
    }
    out.emplace_back(polynomial_from_json(entry["num"], "num"),
                     polynomial_from_json(entry["den"], "den"));
  }
  return EmbeddingMap(std::move(out));
}

Json coefficients_to_json(const CoefficientSequence& c) {
  Json j;
  j["generator"] = c.generator();
  if (c.is_exact()) {
    j["mode"] = "exact";
    Json arr = Json::array();
    for (const Rat& v : c.exact_values()) {
      const auto num = boost::multiprecision::numerator(v);
      const auto den = boost::multiprecision::denominator(v);
      if (num < std::numeric_limits<std::int64_t>::min() ||
          num > std::numeric_limits<std::int64_t>::max() ||
          den > std::numeric_limits<std::int64_t>::max()) {
        throw InvalidInput("exact coefficient does not fit the [num, den] wire format");
      }
      arr.push_back(Json::array(
          {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)}));
    }
    j["c"] = std::move(arr);
  } else {
    j["mode"] = "float";
    j["c"] = c.values();
  }
  return j;
}

CoefficientSequence coefficients_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("c")) {
    throw InvalidInput("coefficient sequence needs \"mode\" and \"c\"");
  }
  const std::string mode = j["mode"].get<std::string>();
  const std::string generator = j.value("generator", std::string("custom"));
  const Json& c = j["c"];
  if (!c.is_array() || c.empty()) throw InvalidInput("\"c\" must be a nonempty array");

  try {
    if (mode == "exact") {
      std::vector<Rat> values;
      values.reserve(c.size());
      for (const Json& e : c) values.push_back(rational_from_json(e));
      return CoefficientSequence::exact(std::move(values), generator);
    }
    if (mode == "float") {
      std::vector<double> values;
      values.reserve(c.size());
      for (const Json& e : c) {
        if (!e.is_number()) throw InvalidInput("float coefficients must be numbers");
        values.push_back(e.get<double>());
      }
      return CoefficientSequence::floating(std::move(values), generator);
    }
  } catch (const ParameterOutOfRange& e) {
    throw InvalidInput(e.what());
  }
  throw InvalidInput("\"mode\" must be \"exact\" or \"float\"");
}

namespace {

void dump_value(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        out += Json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in;
        dump_value(e, out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += "\n";
  return out;
}

}  // namespace pickdisc
