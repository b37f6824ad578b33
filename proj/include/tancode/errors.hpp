// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tancode {

/// Malformed input text or files.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition does not hold (point off the variety,
/// reducible modulus, undecodable word, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (enumeration, Groebner basis size,
/// polynomial degree). Distinct from domain_error so callers can tell a
/// failed computation from a refused one.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tancode
