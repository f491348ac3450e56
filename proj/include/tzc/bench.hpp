#pragma once

#include "tzc/codec.hpp"

namespace tzc {

struct BenchLine {
  std::string label;
  size_t points = 0;
  double mean_ms = 0;
  double root_share = 0;  // fraction of decompression time in root extraction
  DecompressStats stats;
};

// Times compression or decompression over freshly sampled trace zero points.
// Sampling and (for decompression) the compressions are excluded from the
// measurement; a short warmup runs first. Membership checking is off by
// default so that only the arithmetic under test is measured.
BenchLine bench_compress(const TzParams& P, Variant v, size_t npoints, uint64_t seed,
                         bool check_membership = false);
BenchLine bench_decompress(const TzParams& P, Variant v, size_t npoints, uint64_t seed);

void print_bench_table(const std::vector<BenchLine>& lines, std::ostream& os);

}  // namespace tzc
