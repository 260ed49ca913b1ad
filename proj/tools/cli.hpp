#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cohomlen::cli {

enum ExitCode : int { ok = 0, usage = 1, resource = 2, consistency = 3 };

struct RunConfig {
  std::uint32_t characteristic = 0;
  std::size_t n_first = 1;
  std::size_t n_last = 1;
  std::size_t max_period = 2;
  long max_degree = -1;  // -1: the number of variables
  unsigned threads = 1;
  std::string format = "json";
  std::string output_path;
};

/// "a..b" or a single "a". Throws std::invalid_argument.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

/// Runs one command line (argv[0] excluded). Results go to `out` or --out,
/// error envelopes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohomlen::cli
