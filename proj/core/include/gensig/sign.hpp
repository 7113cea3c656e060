#pragma once

#include <cstdint>
#include <stdexcept>

namespace gensig {

enum class Sign : std::uint8_t { Minus = 0, Plus = 1 };

constexpr Sign operator-(Sign s) {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

constexpr char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

constexpr Sign sign_from_char(char c) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw std::invalid_argument("sign character must be '+' or '-'");
}

}  // namespace gensig
