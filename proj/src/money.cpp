#include "accessnet/money.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace accessnet {

Money money_from_major(double major) {
    return static_cast<Money>(std::llround(major * static_cast<double>(kMinorPerMajor)));
}

std::optional<Money> money_from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;

    Money whole = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        whole = whole * 10 + (text[i] - '0');
        if (whole > 90'000'000'000'000'000LL) return std::nullopt;  // keep well inside int64
        ++i;
    }

    Money frac = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        int digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (++digits > 2) return std::nullopt;
            frac = frac * 10 + (text[i] - '0');
            ++i;
        }
        if (digits == 0) return std::nullopt;
        if (digits == 1) frac *= 10;
    }
    if (i != text.size()) return std::nullopt;

    Money minor = whole * kMinorPerMajor + frac;
    return negative ? -minor : minor;
}

double money_to_major(Money amount) {
    return static_cast<double>(amount) / static_cast<double>(kMinorPerMajor);
}

std::string money_to_string(Money amount) {
    Money abs = amount < 0 ? -amount : amount;
    std::string out = amount < 0 ? "-" : "";
    out += std::to_string(abs / kMinorPerMajor);
    Money frac = abs % kMinorPerMajor;
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

}  // namespace accessnet
