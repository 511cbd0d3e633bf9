#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unate::harness {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `unate` tool. args excludes the program name.
/// Returns 0 on success (or accept), 1 when `test` rejects, and 2 on usage,
/// parse, I/O or cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unate::harness
