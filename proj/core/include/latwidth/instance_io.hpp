// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "latwidth/cone_ip.hpp"
#include "latwidth/cones.hpp"

namespace latwidth {

// Plain-text instance files. One header line "KIND n", then rows of
// whitespace-separated numbers; '#' starts a comment.
//
//   H n       n+1 rows "a_1 ... a_n b", the simplex {x : A·x <= b}
//   V n       n+1 rows "x_1 ... x_n", one vertex per row
//   CONE n    n rows, one generator per row (row i is column i of the
//             generator matrix)
//   CONEIP n  tagged rows in any order:
//               APEX p_1 ... p_n      once; rationals as "num/den"
//               GEN g_1 ... g_n       n times, one generator each
//               ROW a_1 ... a_n b     one or more constraints a·x <= b
//
// Any kind may carry one "OBJ c_1 ... c_n" row with an integer objective.

enum class InstanceKind { kHForm, kVForm, kCone, kConeIp };

struct InstanceFile {
  std::variant<HSimplex, VSimplex, Cone, ConeIpInstance> body;
  std::optional<IntVector> objective;  // mirrors ConeIpInstance::objective for CONEIP

  InstanceKind kind() const { return static_cast<InstanceKind>(body.index()); }
  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Syntax and dimension errors carry "line L, column C: ..." locations;
/// invariant failures of the parsed object (for example a singular
/// subsystem of an H-simplex) are reported with the offending line range.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

InstanceFile parse_instance(std::string_view text);
std::string format_instance(const InstanceFile& inst);

const char* kind_name(InstanceKind kind);

}  // namespace latwidth
