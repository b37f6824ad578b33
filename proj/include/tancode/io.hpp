// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "tancode/construct.hpp"
#include "tancode/decode.hpp"
#include "tancode/variety.hpp"

namespace tancode::io {

using nlohmann::json;

// All index sets in files are 1-based (coordinates 1..n, variables x1..xn).

/// Writes p, M, modulus into the object; reads them back (modulus optional,
/// defaulting to the session rule).
void field_to_json(const Field& f, json& j);
Field field_from_json(const json& j);

/// Point syntax: element literals joined by commas, brackets nest.
std::vector<Element> parse_point(const Field& f, const std::string& text);
std::string format_point(const std::vector<Element>& a);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const json& j, uint32_t expect_cols);

/// Variety files: {p, e, M, n, generators, dim_hint?, modulus?, section?, meta?}
json variety_to_json(const AffineVariety& X, const json& meta = json::object());
AffineVariety variety_from_json(const json& j);

/// Code files: {p, m_sub, n, parity_check, M?, modulus?}
json code_to_json(const LinearCode& c);
/// Ambient defaults to GF(p^m_sub) when the file carries no M.
LinearCode code_from_json(const json& j);

/// Family files: {p, e, M, n, points, matrices, modulus?}
json family_to_json(const CodeFamily& fam);
CodeFamily family_from_json(const json& j);

/// Morphism files: {p, e, M, n, components, excluded?, modulus?}
json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const json& j);

/// Decoder tables: {p, e, M, n, t, generators, tuples, dets, modulus?};
/// eliminant Jacobians are rebuilt on load.
json tables_to_json(const DecoderTables& t);
DecoderTables tables_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace tancode::io
