#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slodowy {

/// Arbitrary-precision rational, always kept canonical.
using Rat = mpq_class;

/// "p/q" or "p" for integers.
std::string to_string(const Rat& r);

/// Parses "p", "-p", "p/q"; throws InputError on malformed text or zero denominator.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace slodowy
