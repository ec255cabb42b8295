#pragma once

#include <span>

namespace factcheck::eval {

struct F1Scores {
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
};

// Single-label F1. Macro averages per-class F1 over classes that occur in
// gold; micro pools all decisions and so equals accuracy. Throws
// LengthMismatch or EmptyInput.
F1Scores ComputeF1(std::span<const int> gold, std::span<const int> pred);

}  // namespace factcheck::eval
