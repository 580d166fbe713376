#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace livc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoOrParse = 2,
  kCodec = 3,
  kRoundTrip = 4,
};

struct Hooks {
  // Corrupts lossless decoder output inside `bench` (gate testing).
  std::function<void(std::string&)> tamper_decoded;
};

// args excludes the program name. Failures print exactly one line starting
// with "error:" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace livc::cli
