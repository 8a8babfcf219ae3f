#pragma once

#include <cstdint>
#include <stdexcept>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#endif

namespace bcslab {

/// GF(2^ell) for ell in {16, 32, 64}. Elements are the low ell bits of a
/// uint64_t, reduction polynomials:
///   ell=64: x^64 + x^4 + x^3 + x + 1
///   ell=32: x^32 + x^7 + x^3 + x^2 + 1
///   ell=16: x^16 + x^5 + x^3 + x + 1
bool valid_ell(int ell);
void require_ell(int ell);

/// True when the carry-less multiply instruction is compiled in and the CPU has it.
bool has_pclmul();

namespace gf2_detail {

struct Wide {
  std::uint64_t lo;
  std::uint64_t hi;
};

inline Wide clmul_soft(std::uint64_t a, std::uint64_t b) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  for (int i = 0; i < 64; ++i)
    if ((b >> i) & 1) {
      lo ^= a << i;
      if (i) hi ^= a >> (64 - i);
    }
  return {lo, hi};
}

extern const bool kUsePclmul;

inline Wide clmul(std::uint64_t a, std::uint64_t b) {
#if defined(__PCLMUL__)
  if (kUsePclmul) {
    const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                           _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
    return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(r)),
            static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
  }
#endif
  return clmul_soft(a, b);
}

}  // namespace gf2_detail

template <int L>
struct GF2 {
  static_assert(L == 16 || L == 32 || L == 64);

  static constexpr std::uint64_t mask() { return L == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << L) - 1; }

  // h * (x^L mod poly), dropping anything shifted past bit 63.
  static constexpr std::uint64_t fold(std::uint64_t h) {
    if constexpr (L == 64) return h ^ (h << 1) ^ (h << 3) ^ (h << 4);
    else if constexpr (L == 32) return h ^ (h << 2) ^ (h << 3) ^ (h << 7);
    else return h ^ (h << 1) ^ (h << 3) ^ (h << 5);
  }

  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const gf2_detail::Wide p = gf2_detail::clmul(a, b);
    if constexpr (L == 64) {
      const std::uint64_t h = p.hi;
      const std::uint64_t over = (h >> 63) ^ (h >> 61) ^ (h >> 60);
      return p.lo ^ fold(h) ^ fold(over);
    } else {
      const std::uint64_t h = p.lo >> L;
      const std::uint64_t t = fold(h);
      return ((p.lo ^ t) & mask()) ^ fold(t >> L);
    }
  }
};

std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, int ell);
std::uint64_t gf_pow(std::uint64_t a, std::uint64_t e, int ell);
/// Multiplicative inverse as a^(2^ell - 2); a must be nonzero.
std::uint64_t gf_inv(std::uint64_t a, int ell);

/// Value type over a runtime-chosen ell, for tests and small code.
struct GF2lElement {
  std::uint64_t bits = 0;
  int ell = 64;

  friend GF2lElement operator+(GF2lElement a, GF2lElement b) { return {a.bits ^ b.bits, a.ell}; }
  friend GF2lElement operator*(GF2lElement a, GF2lElement b) { return {gf_mul(a.bits, b.bits, a.ell), a.ell}; }
  friend bool operator==(GF2lElement a, GF2lElement b) { return a.bits == b.bits && a.ell == b.ell; }
  GF2lElement inverse() const { return {gf_inv(bits, ell), ell}; }
};

}  // namespace bcslab
