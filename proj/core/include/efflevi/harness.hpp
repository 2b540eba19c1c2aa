#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "efflevi/matrix.hpp"
#include "efflevi/rng.hpp"

namespace efflevi {

// Random element of SL_N(Z) with entries bounded by B: a product of
// elementary column operations, extended while the bound holds.
IntMat random_conjugator(int N, long B, Rng& rng);

struct BenchConfig {
  std::vector<std::string> seeds;  // fixture names
  std::vector<long> entry_bounds = {10, 100, 1000};
  int samples = 20;
  uint64_t rng_seed = 1;
};

struct BenchRow {
  std::string fixture;
  long B = 0;
  int k = 0;  // sample index
  Int T;      // subspace height of the conjugated algebra
  Int ht_h;
  Int ht_r;
  Rat a_sq;  // profile size of the conjugator
  Rat ht;    // height of the conjugator at the archimedean place
  int depth = 0;
  bool valid = false;
};

// Least-squares slope of log ht_h against log T over one (fixture, B) cell.
struct SlopeFit {
  std::string fixture;
  long B = 0;
  int n = 0;
  bool degenerate = false;  // no spread in log T, slope meaningless
  double slope = 0.0;
  double slope_se = 0.0;
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRow> rows;
  std::vector<SlopeFit> slopes;
};

// Deterministic under a fixed config: conjugates each seed by random
// unimodular matrices per entry bound and records the pipeline outputs.
BenchReport run_bench(const BenchConfig& config);

// Natural log of a positive integer or rational through a mantissa-exponent
// split, safe far beyond double range.
double log_int(const Int& x);
double log_rat(const Rat& x);

}  // namespace efflevi
