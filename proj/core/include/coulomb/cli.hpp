#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

struct RunConfig {
  // hilbert | present | poisson | quantize-check | check-duality |
  // from-quiver | verify
  std::string command;
  std::string input_path;
  int order = 0;
  bool refined = false;
  std::vector<Int> shift;  // empty = unshifted grading
  std::optional<long long> seed;
  bool json = false;
  int trials = 100;
  std::vector<std::string> exprs;  // poisson operands
  std::string output_path;         // from-quiver destination; empty = stdout
};

// Exit status: 0 success, 1 mathematical verdicts and domain errors,
// 2 input or usage errors.  Randomized commands print their seed.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace coulomb
