#include "pisano/recurrence.hpp"

#include <array>
#include <stdexcept>

namespace pisano {

namespace {

void require_modulus(u64 m) {
  if (m < 2) throw std::domain_error("modulus must be at least 2");
}

u64 add_mod(u64 x, u64 y, u64 m) {
  return static_cast<u64>((static_cast<u128>(x) + y) % m);
}

using Mat2 = std::array<u64, 4>;  // row-major

Mat2 mat_mul(const Mat2& x, const Mat2& y, u64 m) {
  auto dot = [m](u64 p, u64 q, u64 r, u64 s) { return add_mod(mul_mod(p, q, m), mul_mod(r, s, m), m); };
  return {dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]),
          dot(x[2], y[0], x[3], y[2]), dot(x[2], y[1], x[3], y[3])};
}

}  // namespace

StatePair initial_state(const RecurrenceParams& params, u64 m) {
  require_modulus(m);
  return {reduce(params.c, m), reduce(params.d, m), m};
}

StatePair step(const RecurrenceParams& params, const StatePair& s) {
  require_modulus(s.modulus);
  const u64 m = s.modulus;
  const u64 a = reduce(params.a, m);
  const u64 b = reduce(params.b, m);
  return {s.v, add_mod(mul_mod(a, s.v, m), mul_mod(b, s.u, m), m), m};
}

std::vector<u64> sequence_mod(const RecurrenceParams& params, u64 m, u64 count) {
  std::vector<u64> out;
  out.reserve(count);
  StatePair s = initial_state(params, m);
  for (u64 i = 0; i < count; ++i) {
    out.push_back(s.u);
    s = step(params, s);
  }
  return out;
}

StatePair matrix_power_state(const RecurrenceParams& params, u64 n, u64 m) {
  require_modulus(m);
  // [U_{n+1}, U_n]^T = M^n [U_1, U_0]^T
  Mat2 base = {reduce(params.a, m), reduce(params.b, m), 1 % m, 0};
  Mat2 acc = {1, 0, 0, 1};
  while (n > 0) {
    if (n & 1) acc = mat_mul(acc, base, m);
    base = mat_mul(base, base, m);
    n >>= 1;
  }
  const u64 c = reduce(params.c, m);
  const u64 d = reduce(params.d, m);
  u64 next = add_mod(mul_mod(acc[0], d, m), mul_mod(acc[1], c, m), m);
  u64 cur = add_mod(mul_mod(acc[2], d, m), mul_mod(acc[3], c, m), m);
  return {cur, next, m};
}

}  // namespace pisano
