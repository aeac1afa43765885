#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace setseq::cli {

inline constexpr const char* kVersion = "setseq 1.0.0";
inline constexpr const char* kCacheEnv = "SETSEQ_CACHE";

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInconclusive = 3 };

// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace setseq::cli
