#include "factcheck/model/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "factcheck/errors.hpp"
#include "factcheck/kernels/vector_kernels.hpp"

namespace factcheck::model {

EmbeddingVector MakeEmbedding(std::vector<double> values) {
  EmbeddingVector v;
  v.norm = std::sqrt(kernels::SquaredNorm(values));
  v.values = std::move(values);
  return v;
}

EmbeddingVector Normalized(std::vector<double> values) {
  const double norm = std::sqrt(kernels::SquaredNorm(values));
  if (!(norm > 0.0)) throw Error(ErrorCode::kZeroVector, "cannot normalize a zero vector");
  kernels::Scale(values, 1.0 / norm);
  return MakeEmbedding(std::move(values));
}

double CosineSimilarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, std::to_string(a.dimension()) + " vs " +
                                                   std::to_string(b.dimension()));
  }
  if (!(a.norm > 0.0) || !(b.norm > 0.0)) {
    throw Error(ErrorCode::kZeroVector, "cosine similarity of a zero vector");
  }
  const double cos = kernels::Dot(a.values, b.values) / (a.norm * b.norm);
  return std::clamp(cos, -1.0, 1.0);
}

}  // namespace factcheck::model
