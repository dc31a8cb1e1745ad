// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "latwidth/instance_io.hpp"

namespace latwidth::cli {

struct Flags {
  bool json = false;
  bool lattice_free = false;
  std::optional<long> oracle_radius;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
};

int cmd_decompose(const InstanceFile& inst, const Flags& f, Output o);
int cmd_width(const InstanceFile& inst, const Flags& f, Output o);
int cmd_cone_ip(const InstanceFile& inst, const Flags& f, Output o);
int cmd_opt_punctured(const InstanceFile& inst, const Flags& f, Output o);

int cmd_oracle(const std::string& sub, const InstanceFile& inst, const Flags& f, Output o);
int cmd_verify(const std::string& sub, const InstanceFile& inst, const Flags& f, Output o);

struct GenParams {
  std::size_t dim = 2;
  std::uint64_t det = 2;
  std::int64_t bound = 5;
  std::int64_t objective_bound = 0;  // 0: no OBJ row
};
int cmd_gen(const std::string& kind, const GenParams& p, const Flags& f, Output o);

}  // namespace latwidth::cli
