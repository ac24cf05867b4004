#pragma once

#include "revroot/bench/suite.hpp"

namespace revroot::bench {

/// Built-in "paper-tables" suite: atan(x) from -0.9 and from -1e6, and
/// sqrt(abs(x)) - 4 from -1e-6, each against the proposed orders 2 to 4 and
/// every baseline, with default tolerances.
SuiteSpec paper_tables_suite(int repetitions = 100);

}  // namespace revroot::bench
