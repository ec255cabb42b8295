#include "factcheck/eval/metrics.hpp"

#include <map>
#include <set>

#include "factcheck/errors.hpp"

namespace factcheck::eval {

F1Scores ComputeF1(std::span<const int> gold, std::span<const int> pred) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(gold.size()) + " gold vs " +
                                                std::to_string(pred.size()) + " predicted");
  }
  if (gold.empty()) throw Error(ErrorCode::kEmptyInput, "no labels to score");

  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<int, Counts> per_class;
  std::set<int> gold_classes(gold.begin(), gold.end());
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] == pred[i]) {
      ++correct;
      ++per_class[gold[i]].tp;
    } else {
      ++per_class[pred[i]].fp;
      ++per_class[gold[i]].fn;
    }
  }

  double macro = 0.0;
  for (int c : gold_classes) {
    const Counts& k = per_class[c];
    const double tp = static_cast<double>(k.tp);
    const double p = k.tp + k.fp == 0 ? 0.0 : tp / static_cast<double>(k.tp + k.fp);
    const double r = k.tp + k.fn == 0 ? 0.0 : tp / static_cast<double>(k.tp + k.fn);
    macro += p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
  macro /= static_cast<double>(gold_classes.size());
  return {macro, static_cast<double>(correct) / static_cast<double>(gold.size())};
}

}  // namespace factcheck::eval
