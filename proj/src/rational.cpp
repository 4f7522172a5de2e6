#include "rebc/rational.hpp"

#include <charconv>

namespace rebc {

std::int64_t floor_of(const Frac& q) {
    // boost::rational keeps the denominator positive.
    const auto n = q.numerator();
    const auto d = q.denominator();
    auto quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

Frac frac_part(const Frac& q) { return q - Frac(floor_of(q)); }

std::string to_string(const Frac& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t value = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc{} || ptr != last) {
        throw InputError("malformed fraction '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Frac parse_frac(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Frac(parse_int(text, text));
    const auto num = parse_int(text.substr(0, slash), text);
    const auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Frac(num, den);
}

}  // namespace rebc
