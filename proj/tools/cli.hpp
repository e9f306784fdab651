#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slpz::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

/// Standard streams used when a path is "-".
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Parses args (args[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, Streams io);

int cmd_compress(const std::string& input, const std::string& output, Streams io);
int cmd_decompress(const std::string& input, const std::string& output, Streams io);
int cmd_access(const std::string& input, unsigned long long rule, Streams io);
int cmd_stats(const std::string& input, Streams io);
int cmd_verify(const std::string& input, const std::string& original, Streams io);

}  // namespace slpz::cli
