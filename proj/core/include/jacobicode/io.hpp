// Copyright 2026 The jacobicode Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "jacobicode/codes.hpp"
#include "jacobicode/curve.hpp"
#include "jacobicode/jacobian.hpp"
#include "jacobicode/zeta.hpp"

namespace jacobicode {

using json = nlohmann::ordered_json;

/// Version tag written at the top level of every JSON document.
inline constexpr const char* kSchemaVersion = "1";

// Field: {"p": 2, "a": 2, "modulus": [1, 1, 1]}. On input {"q": 4} selects the
// default modulus.
json field_to_json(const Field& field);
FieldPtr field_from_json(const json& j);

// Polynomials: coefficient arrays, low degree first, integer-encoded elements.
json poly_to_json(const Poly& poly);
Poly poly_from_json(const json& j, const Field& field);

/// Inline syntax: '+'-separated monomials "c*x^e", "x^e", "c*x", "x", "c",
/// where c is an integer-encoded element. Throws ParseError.
Poly parse_poly(std::string_view text, const Field& field);
std::string format_poly(const Poly& poly);

// Curve: {"field": ..., "h": [...], "f": [...]}; input is validated.
json curve_to_json(const CurveModel& curve);
CurveModel curve_from_json(const json& j);

// WeilData: {"q": .., "p": .., "c1": .., "c2": ..}.
json weil_to_json(const WeilData& w);
WeilData weil_from_json(const json& j);
json factorization_to_json(const WeilFactorization& fac);
json simplicity_to_json(const SimplicityVerdict& v);

// MumfordDivisor: {"u": [...], "v": [...]}.
json divisor_to_json(const MumfordDivisor& d);
MumfordDivisor divisor_from_json(const json& j, const Field& field);

json report_to_json(const CodeReport& report);
json experiment_to_json(const TranslateExperiment& e);

/// Column order: q,h,f,N1,N2,c1,c2,simplicity,r,n,k,d_lb,certified
std::string csv_header();
std::string csv_row(const CurveModel& curve, std::int64_t n2, const WeilData& w, const CodeReport& report);

}  // namespace jacobicode
