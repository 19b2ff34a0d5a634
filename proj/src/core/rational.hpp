#pragma once

// Exact scalar types. Int is a GMP integer, Rat a GMP rational that is kept
// in lowest terms by every helper in this header.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kmchar {

using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

// "p/q" always carries the denominator, including integers ("3/1").
std::string to_fraction_string(const Rat& r);
// Accepts "p/q", "p", with optional sign. Throws Error(InvalidArgument).
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

Int floor_rat(const Rat& r);
std::int64_t to_i64(const Int& v);

std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t denominator_i64(const Rat& r);

}  // namespace kmchar
