#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mstsp/grid.hpp"

namespace mstsp {

struct BenchRow {
  GridDims dims;
  std::int64_t nodes = 0;
  double seconds = 0.0;       // best of `repeats` runs
  double ns_per_node = 0.0;
};

/// Times build_tour on each grid. Takes the best of `repeats` runs after
/// one warmup to keep small grids out of timer noise.
std::vector<BenchRow> run_benchmark(const std::vector<GridDims>& sizes,
                                    int repeats = 5);

}  // namespace mstsp
