#pragma once

#include <cstddef>
#include <vector>

namespace factcheck::model {

struct EmbeddingVector {
  std::vector<double> values;
  double norm = 0.0;

  std::size_t dimension() const { return values.size(); }
};

// Builds a vector and records its L2 norm.
EmbeddingVector MakeEmbedding(std::vector<double> values);

// Scales to unit length; throws ZeroVector for an all-zero input.
EmbeddingVector Normalized(std::vector<double> values);

// dot(a, b) / (|a| |b|), clamped to [-1, 1].
// Throws DimensionMismatch or ZeroVector.
double CosineSimilarity(const EmbeddingVector& a, const EmbeddingVector& b);

}  // namespace factcheck::model
