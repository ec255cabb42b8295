#include <atomic>
#include <cstdlib>
#include <cstring>

#include "factcheck/errors.hpp"
#include "factcheck/kernels/vector_kernels.hpp"

namespace factcheck::kernels {
namespace {

bool DetectAvx2() {
#if defined(FACTCHECK_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa DetectIsa() {
  if (const char* env = std::getenv("FACTCHECK_SIMD"); env && std::strcmp(env, "scalar") == 0) {
    return Isa::kScalar;
  }
  return DetectAvx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& ActiveSlot() {
  static std::atomic<Isa> slot{DetectIsa()};
  return slot;
}

}  // namespace

std::string_view IsaName(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool Avx2Available() {
  static const bool available = DetectAvx2();
  return available;
}

Isa ActiveIsa() { return ActiveSlot().load(std::memory_order_relaxed); }

void ForceIsa(std::optional<Isa> isa) {
  Isa chosen = isa.value_or(DetectIsa());
  if (chosen == Isa::kAvx2 && !Avx2Available()) chosen = Isa::kScalar;
  ActiveSlot().store(chosen, std::memory_order_relaxed);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "dot operands differ in length");
#if defined(FACTCHECK_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return avx2::Dot(a.data(), b.data(), a.size());
#endif
  return scalar::Dot(a.data(), b.data(), a.size());
}

double SquaredNorm(std::span<const double> a) {
#if defined(FACTCHECK_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return avx2::SquaredNorm(a.data(), a.size());
#endif
  return scalar::SquaredNorm(a.data(), a.size());
}

void Scale(std::span<double> a, double factor) {
#if defined(FACTCHECK_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return avx2::Scale(a.data(), a.size(), factor);
#endif
  scalar::Scale(a.data(), a.size(), factor);
}

}  // namespace factcheck::kernels
