#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// boost's mixed rational/integer operator== recurses forever under C++20
// reversed-operand rewriting. These exact overloads win overload resolution.
inline bool operator==(const rational<std::int64_t>& q, int n) { return q == rational<std::int64_t>(n); }
inline bool operator==(const rational<std::int64_t>& q, long n) { return q == rational<std::int64_t>(n); }
inline bool operator==(const rational<std::int64_t>& q, long long n) {
    return q == rational<std::int64_t>(static_cast<std::int64_t>(n));
}

}  // namespace boost

namespace rebc {

/// Exact rational scalar used for every coordinate in the library.
using Frac = boost::rational<std::int64_t>;

/// Precondition violation or malformed input. The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Largest integer not exceeding q.
std::int64_t floor_of(const Frac& q);

/// Residue of q in [0, 1).
Frac frac_part(const Frac& q);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Frac& q);

/// Accepts "p", "-p", "p/q"; the result is reduced. Throws InputError.
Frac parse_frac(std::string_view text);

}  // namespace rebc
