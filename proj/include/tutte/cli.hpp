#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace tutte::cli {

enum ExitCode : int { ok = 0, parse_error = 1, capacity_exceeded = 2, consistency_failure = 3 };

struct RunConfig {
  std::string command;             // tutte | cover | tau | sigma | eval | chromatic | reliability | potts
  std::string algorithm = "auto";  // auto | dense | polyspace | split:s | connected | recursion
  bool oracle_check = false;
  bool json = false;
  int threads = 1;
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
  std::optional<int> split;
  std::optional<std::pair<std::string, std::string>> eval;
  std::optional<std::string> q;
  std::optional<std::string> p;
  std::string input = "-";
};

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv, opens the input file and calls run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tutte::cli
