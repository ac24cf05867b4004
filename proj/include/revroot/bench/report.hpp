#pragma once

#include <span>
#include <string>

#include "revroot/bench/suite.hpp"

namespace revroot::bench {

inline constexpr std::string_view kCsvHeader = "method,case,steps,status,residual,time_us,coc";

/// CSV uses the header above and shortest round-trip formatting for every
/// number. Markdown emits one table per case (Method / Time / Steps /
/// converge), in row order.
std::string emit_report(std::span<const SuiteRow> rows, ReportFormat format);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_real(double v);

}  // namespace revroot::bench
