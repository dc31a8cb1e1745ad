// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "latwidth/matrix.hpp"

namespace latwidth::cli {

using Json = nlohmann::ordered_json;

// Every number leaves the tool as a string holding an integer or a reduced fraction.
Json num(const Integer& x);
Json num(const Rational& x);
Json num(std::size_t x);
Json vec(const IntVector& v);
Json vec(const RatVector& v);
Json columns(const IntMatrix& m);  // list of column vectors
Json rows(const IntMatrix& m);
Json rows(const RatMatrix& m);

std::string text(const IntVector& v);  // "(1 0 -2)"
std::string text(const RatVector& v);

}  // namespace latwidth::cli
