#pragma once

#include "distributions.hpp"
#include "error.hpp"
#include "gap_schedule.hpp"
#include "harness.hpp"
#include "sorters.hpp"
#include "stats/diagnostics.hpp"
#include "stats/regression.hpp"
#include "stats/report_io.hpp"
#include "stats/special_functions.hpp"
#include "svg.hpp"
