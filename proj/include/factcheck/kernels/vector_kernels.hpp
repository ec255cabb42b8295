#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

// Dense double-precision kernels behind the embedding math. Each kernel has a
// portable scalar reference and an AVX2 variant; the public entry points
// dispatch once at startup based on CPUID. Setting FACTCHECK_SIMD=scalar in
// the environment pins the scalar path.
namespace factcheck::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view IsaName(Isa isa);

// True when the running CPU supports AVX2+FMA and the binary was built with
// the AVX2 translation unit.
bool Avx2Available();

Isa ActiveIsa();

// Overrides dispatch; std::nullopt restores the CPU-detected choice. Requests
// for an unavailable ISA fall back to scalar. Not thread-safe against
// concurrent kernel calls; meant for tests and benchmarks.
void ForceIsa(std::optional<Isa> isa);

// Both spans must have equal length.
double Dot(std::span<const double> a, std::span<const double> b);
double SquaredNorm(std::span<const double> a);
void Scale(std::span<double> a, double factor);

namespace scalar {
double Dot(const double* a, const double* b, std::size_t n);
double SquaredNorm(const double* a, std::size_t n);
void Scale(double* a, std::size_t n, double factor);
}  // namespace scalar

namespace avx2 {
// Callable only when Avx2Available().
double Dot(const double* a, const double* b, std::size_t n);
double SquaredNorm(const double* a, std::size_t n);
void Scale(double* a, std::size_t n, double factor);
}  // namespace avx2

}  // namespace factcheck::kernels
