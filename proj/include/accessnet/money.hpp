#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace accessnet {

// Money is held in the smallest currency unit (paise, cents) so cost sums and
// golden-number comparisons stay exact integer arithmetic.
using Money = std::int64_t;

inline constexpr Money kMinorPerMajor = 100;

// 15.0 -> 1500. Exact for any value with at most two decimals and sane magnitude.
Money money_from_major(double major);

// "1212.80" -> 121280, "15" -> 1500, "-3.5" -> -350. Rejects more than two
// fractional digits or any non-numeric content.
std::optional<Money> money_from_string(std::string_view text);

double money_to_major(Money amount);

// 121280 -> "1212.80"
std::string money_to_string(Money amount);

}  // namespace accessnet
