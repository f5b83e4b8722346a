#pragma once

#include "burnside/group.hpp"
#include "burnside/intlin.hpp"

#include <functional>

namespace burnside {

// Execution policy for the data-parallel sweeps. Serial variants are the
// reference implementations; the parallel ones must produce identical output.
enum class ExecMode { Serial, Parallel, Auto };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);
bool openmp_enabled();

// Runs fn(i) for i in [0, n). Iterations must be independent; any output must
// be written to per-index slots so results do not depend on scheduling.
void parallel_for(long n, const std::function<void(long)>& fn, ExecMode mode = ExecMode::Auto);

// Complete list of subgroups, sorted by (order, element set).
std::vector<Elems> enumerate_subgroups(const Group& g, ExecMode mode = ExecMode::Auto);

// Table of marks: entry (i, j) counts fixed points of class-j representatives
// on G/H_i. Lower triangular in canonical class order.
IntMat table_of_marks(const Group& g, ExecMode mode = ExecMode::Auto);

}  // namespace burnside
