#include "sidon/rational.hpp"

#include <algorithm>
#include <cctype>

namespace sidon {

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_fraction(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_decimal_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::optional<Int> parse_decimal(const std::string& text) {
    if (!is_decimal_token(text)) return std::nullopt;
    return Int(text);
}

std::optional<Rat> parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        auto n = parse_decimal(text);
        if (!n) return std::nullopt;
        return Rat(*n);
    }
    auto num = parse_decimal(text.substr(0, slash));
    auto den = parse_decimal(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    Rat q(*num, *den);
    q.canonicalize();
    return q;
}

RatInterval operator+(RatInterval a, const RatInterval& b) {
    a += b;
    return a;
}

RatInterval operator*(const Rat& c, const RatInterval& v) {
    if (c >= 0) return {c * v.lo, c * v.hi};
    return {c * v.hi, c * v.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    const Rat p1 = a.lo * b.lo;
    const Rat p2 = a.lo * b.hi;
    const Rat p3 = a.hi * b.lo;
    const Rat p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

}  // namespace sidon
