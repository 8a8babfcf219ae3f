#include "bcslab/gf2.hpp"

#include <string>

namespace bcslab {

namespace gf2_detail {

const bool kUsePclmul = [] {
#if defined(__PCLMUL__) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("pclmul") != 0;
#else
  return false;
#endif
}();

}  // namespace gf2_detail

bool has_pclmul() { return gf2_detail::kUsePclmul; }

bool valid_ell(int ell) { return ell == 16 || ell == 32 || ell == 64; }

void require_ell(int ell) {
  if (!valid_ell(ell)) throw std::invalid_argument("field width must be 16, 32 or 64, got " + std::to_string(ell));
}

std::uint64_t gf_mul(std::uint64_t a, std::uint64_t b, int ell) {
  switch (ell) {
    case 16: return GF2<16>::mul(a, b);
    case 32: return GF2<32>::mul(a, b);
    case 64: return GF2<64>::mul(a, b);
    default: require_ell(ell);
  }
  return 0;
}

std::uint64_t gf_pow(std::uint64_t a, std::uint64_t e, int ell) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = gf_mul(r, a, ell);
    a = gf_mul(a, a, ell);
    e >>= 1;
  }
  return r;
}

std::uint64_t gf_inv(std::uint64_t a, int ell) {
  require_ell(ell);
  if (a == 0) throw std::domain_error("zero has no inverse");
  const std::uint64_t order_minus_one = ell == 64 ? ~std::uint64_t{0} - 1 : (std::uint64_t{1} << ell) - 2;
  return gf_pow(a, order_minus_one, ell);
}

}  // namespace bcslab
