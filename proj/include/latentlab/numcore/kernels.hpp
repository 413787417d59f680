#pragma once

// Inner-loop arithmetic kernels. Each kernel has a portable scalar reference
// and, on x86-64, an AVX2/FMA variant compiled in its own translation unit.
// The variant is picked once at startup from CPUID and can be overridden for
// equivalence testing.

#include <cstddef>
#include <string_view>

namespace latentlab::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  // Σ a[i]·b[i], accumulated in double.
  double (*dot)(const float* a, const float* b, std::size_t n);
  // C[m×n] (+)= A[m×k] · B[n×k]ᵀ with row strides lda/ldb/ldc. Partial sums
  // are flushed to double at least every 64 products.
  void (*gemm_nt)(const float* a, std::size_t lda, const float* b, std::size_t ldb, float* c,
                  std::size_t ldc, std::size_t m, std::size_t n, std::size_t k, bool accumulate);
  // y += alpha·x
  void (*axpy)(float alpha, const float* x, float* y, std::size_t n);
  // Σ x[i]², accumulated in double.
  double (*sum_squares)(const float* x, std::size_t n);
};

namespace scalar {
const KernelTable& table();
}
#if defined(LATENTLAB_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif

bool isa_supported(Isa isa);
Isa best_isa();
Isa active_isa();
// Throws DomainError when the ISA is not supported by this build or CPU.
void set_active_isa(Isa isa);
const KernelTable& table(Isa isa);
const KernelTable& active();

inline double dot(const float* a, const float* b, std::size_t n) { return active().dot(a, b, n); }
inline void gemm_nt(const float* a, const float* b, float* c, std::size_t m, std::size_t n,
                    std::size_t k, bool accumulate = false) {
  active().gemm_nt(a, k, b, k, c, n, m, n, k, accumulate);
}
inline void gemm_nt(const float* a, std::size_t lda, const float* b, std::size_t ldb, float* c,
                    std::size_t ldc, std::size_t m, std::size_t n, std::size_t k, bool accumulate = false) {
  active().gemm_nt(a, lda, b, ldb, c, ldc, m, n, k, accumulate);
}
inline void axpy(float alpha, const float* x, float* y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}
inline double sum_squares(const float* x, std::size_t n) { return active().sum_squares(x, n); }

// RAII override used by the equivalence tests.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

}  // namespace latentlab::kernels
