#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fvkit {

using BigInt = boost::multiprecision::cpp_int;

// tower(0, b) = b, tower(l, b) = 2^tower(l-1, b). Throws CapExceeded when the
// result would need more than max_bits bits.
BigInt tower(int level, const BigInt& base, std::size_t max_bits = 1u << 20);

// tower(level, base) >= value, decided without materializing the tower.
bool tower_at_least(int level, const BigInt& base, const BigInt& value);

// Exact decimal digits when the value fits under max_bits, else "tower(l, b)".
std::string tower_string(int level, const BigInt& base, std::size_t max_bits = 256);

}  // namespace fvkit
