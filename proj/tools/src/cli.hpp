#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 a verification scan found a counterexample.

#include <iosfwd>
#include <string>
#include <vector>

#include "qrecip/verify.hpp"

namespace qrecip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One JSON-lines object for a record, without the trailing newline.
std::string record_json(const VerifyRecord& rec);
std::string summary_json(const Summary& s);

}  // namespace qrecip::cli
