// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#include "jacobicode/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "jacobicode/error.hpp"

namespace jacobicode {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  s = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

template <typename T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

json field_to_json(const Field& field) {
  return json{{"p", field.p()}, {"a", field.a()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const json& j) {
  if (j.is_object() && j.contains("q") && !j.contains("p")) {
    return field_of_order(get_field<std::uint64_t>(j, "q"));
  }
  const auto p = get_field<std::uint32_t>(j, "p");
  const auto a = j.contains("a") ? get_field<unsigned>(j, "a") : 1u;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) modulus = get_field<std::vector<std::uint32_t>>(j, "modulus");
  return make_field(p, a, modulus);
}

json poly_to_json(const Poly& poly) { return json(poly.encodings()); }

Poly poly_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a coefficient array");
  Poly::Storage s;
  for (const auto& c : j) {
    if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<std::int64_t>() >= 0)) {
      throw Error(ErrorCode::ParseError, "coefficients must be non-negative integers");
    }
    s.push_back(field.from_encoding(c.get<std::uint64_t>()));
  }
  return Poly(std::move(s));
}

Poly parse_poly(std::string_view text, const Field& field) {
  text = strip(text);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  Poly out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t plus = text.find('+', start);
    const std::string_view term = strip(text.substr(start, plus == std::string_view::npos ? text.npos : plus - start));
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty monomial in '" + std::string(text) + "'");

    std::uint64_t coeff = 1;
    int degree = 0;
    const std::size_t xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coeff = parse_uint(term, "coefficient");
    } else {
      std::string_view head = strip(term.substr(0, xpos));
      if (!head.empty()) {
        if (head.back() != '*') throw Error(ErrorCode::ParseError, "expected '*' before x in '" + std::string(term) + "'");
        coeff = parse_uint(head.substr(0, head.size() - 1), "coefficient");
      }
      std::string_view tail = strip(term.substr(xpos + 1));
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw Error(ErrorCode::ParseError, "expected '^' after x in '" + std::string(term) + "'");
        const std::uint64_t e = parse_uint(tail.substr(1), "exponent");
        if (e > 64) throw Error(ErrorCode::ParseError, "exponent too large");
        degree = static_cast<int>(e);
      }
    }
    const Elem c = field.from_encoding(coeff);
    out.set(degree, field.add(out[degree], c));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

std::string format_poly(const Poly& poly) {
  if (poly.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly.degree(); i >= 0; --i) {
    const auto c = poly[i].value;
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

json curve_to_json(const CurveModel& curve) {
  return json{{"field", field_to_json(*curve.field)},
              {"h", poly_to_json(curve.h)},
              {"f", poly_to_json(curve.f)},
              {"kind", curve.imaginary() ? "imaginary" : "real"}};
}

CurveModel curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw Error(ErrorCode::ParseError, "curve needs a 'field'");
  FieldPtr field = field_from_json(j.at("field"));
  const Poly h = j.contains("h") ? poly_from_json(j.at("h"), *field) : Poly{};
  if (!j.contains("f")) throw Error(ErrorCode::ParseError, "curve needs 'f'");
  const Poly f = poly_from_json(j.at("f"), *field);
  return validate_curve(std::move(field), h, f);
}

json weil_to_json(const WeilData& w) { return json{{"q", w.q}, {"p", w.p}, {"c1", w.c1}, {"c2", w.c2}}; }

WeilData weil_from_json(const json& j) {
  WeilData w{get_field<std::uint64_t>(j, "q"), get_field<std::uint32_t>(j, "p"), get_field<std::int64_t>(j, "c1"),
             get_field<std::int64_t>(j, "c2")};
  validate_weil(w);
  return w;
}

json factorization_to_json(const WeilFactorization& fac) {
  json factors = json::array();
  for (const auto& [g, mult] : fac.factors) {
    factors.push_back(json{{"coeffs", g}, {"multiplicity", mult}, {"text", format_int_poly(g)}});
  }
  return json{{"shape", to_string(fac.shape)}, {"factors", factors}};
}

json simplicity_to_json(const SimplicityVerdict& v) {
  return json{{"verdict", to_string(v.verdict)}, {"reason", v.reason}};
}

json divisor_to_json(const MumfordDivisor& d) { return json{{"u", poly_to_json(d.u)}, {"v", poly_to_json(d.v)}}; }

MumfordDivisor divisor_from_json(const json& j, const Field& field) {
  if (!j.is_object() || !j.contains("u")) throw Error(ErrorCode::ParseError, "divisor needs 'u'");
  return MumfordDivisor{poly_from_json(j.at("u"), field), j.contains("v") ? poly_from_json(j.at("v"), field) : Poly{}};
}

json report_to_json(const CodeReport& report) {
  return json{{"q", report.q},
              {"r", report.r},
              {"N1", report.n1},
              {"n", report.n},
              {"k", report.k},
              {"d_lb", report.d_lb},
              {"branch", to_string(report.branch)},
              {"threshold_r",
               json{{"num", report.threshold_r.num}, {"den", report.threshold_r.den}, {"value", report.threshold_r.value()}}},
              {"simplicity", simplicity_to_json(report.simplicity)},
              {"certified", report.certified},
              {"warnings", report.warnings}};
}

json experiment_to_json(const TranslateExperiment& e) {
  json pts = json::array();
  for (const auto& d : e.points) pts.push_back(divisor_to_json(d));
  return json{{"points", pts},
              {"support_count", e.support_count},
              {"attained", e.attained},
              {"weight_surrogate", e.weight_surrogate}};
}

std::string csv_header() { return "q,h,f,N1,N2,c1,c2,simplicity,r,n,k,d_lb,certified"; }

std::string csv_row(const CurveModel& curve, std::int64_t n2, const WeilData& w, const CodeReport& report) {
  std::ostringstream os;
  os << w.q << ',' << format_poly(curve.h) << ',' << format_poly(curve.f) << ',' << report.n1 << ',' << n2 << ','
     << w.c1 << ',' << w.c2 << ',' << to_string(report.simplicity.verdict) << ',' << report.r << ',' << report.n
     << ',' << report.k << ',' << report.d_lb << ',' << (report.certified ? "true" : "false");
  return os.str();
}

}  // namespace jacobicode
