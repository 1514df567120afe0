#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/verify.hpp"

namespace partlab::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kUsage = 2,
  kIoError = 3,
};

enum class OutputFormat { json, csv, text };

struct RunConfig {
  std::size_t n_max = 60;
  IntRange k_range{1, 4};
  IntRange ell_range{1, 3};
  bool all_residues = false;
  unsigned enum_cap = kDefaultPartitionCap;
  unsigned subset_cap = kDefaultSubsetCap;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  unsigned threads = 0;
  bool timings = false;

  VerifyConfig verify_config() const;
};

/// Parses "lo..hi" or a single value. Throws std::invalid_argument.
IntRange parse_range(std::string_view text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partlab::cli
