#include "fvkit/tower.hpp"

#include "fvkit/errors.hpp"

namespace fvkit {

BigInt tower(int level, const BigInt& base, std::size_t max_bits) {
  if (level < 0) throw InputError("tower level must be non-negative");
  if (base < 0) throw InputError("tower base must be non-negative");
  BigInt v = base;
  for (int i = 0; i < level; ++i) {
    if (v >= max_bits) throw CapExceeded("tower value exceeds the magnitude cap");
    BigInt next = 1;
    next <<= static_cast<unsigned>(v);
    v = std::move(next);
  }
  return v;
}

bool tower_at_least(int level, const BigInt& base, const BigInt& value) {
  if (level == 0) return base >= value;
  if (value <= 1) return true;
  // 2^t >= v  iff  t >= ceil(log2 v) = msb(v - 1) + 1
  BigInt need = boost::multiprecision::msb(BigInt(value - 1)) + 1;
  return tower_at_least(level - 1, base, need);
}

std::string tower_string(int level, const BigInt& base, std::size_t max_bits) {
  try {
    return tower(level, base, max_bits).str();
  } catch (const CapExceeded&) {
    return "tower(" + std::to_string(level) + ", " + base.str() + ")";
  }
}

}  // namespace fvkit
