#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "revroot/bench/suite.hpp"

namespace revroot::bench {

class SuiteFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a suite definition. The format is INI: optional top-level keys
/// followed by one [section] per case.
///
///   # comment
///   repetitions = 100          ; timing repetitions, default 100
///   format = markdown          ; markdown | csv
///
///   [atan-near]
///   title = ...                ; optional markdown heading
///   expr = atan(x)             ; required
///   x0 = -0.9                  ; required
///   methods = order2, newton   ; required, may be empty
///   root = 0                   ; needed by orderN methods
///   derivs = 1, 0, -2          ; optional g'(l), g''(l), ...; needs root
///   atol, rtol, ftol, max_steps, x_max   ; optional stopping rule
///
/// Unknown keys and malformed values are rejected with SuiteFileError.
SuiteSpec parse_suite(std::istream& in, const std::string& source_name = "<suite>");
SuiteSpec load_suite_file(const std::filesystem::path& path);

}  // namespace revroot::bench
