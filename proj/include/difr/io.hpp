#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "difr/instance.hpp"

namespace difr {

// Canonical instance text, one section per keyword, in this order:
//
//   difr 1
//   n <count>
//   p <num>/<den>
//   colors <B|R per vertex>
//   kind <tag>                 optional
//   edges <m>                  then m lines "tail head", ascending
//   coords                     optional, then n lines "row col"
//   layers <l_0> ... <l_n-1>   optional
//   demand <c>                 optional, then one line of c ascending ids
//
// Blank lines and '#' comments are accepted on input; emit never writes them.
struct InstanceFile {
  Instance instance;
  std::optional<DemandSet> demand;
};

/// Errors are InvalidInput with "line L, col C:" prefixes.
InstanceFile parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance, const std::optional<DemandSet>& demand = {});
std::string emit_instance(const InstanceFile& file);

/// One flipped vertex id per line.
Recoloring parse_solution(std::string_view text, int n);
std::string emit_solution(const Recoloring& recoloring);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

inline constexpr std::string_view kBenchHeader = "instance,solver,p,size,verified,micros";

}  // namespace difr
