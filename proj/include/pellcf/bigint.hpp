#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pellcf {

using BigInt = mpz_class;

// Parses a non-empty decimal string (optional leading '-'). Throws DomainError
// on anything else.
BigInt parse_bigint(std::string_view text);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline bool is_even(const BigInt& v) { return mpz_even_p(v.get_mpz_t()) != 0; }

}  // namespace pellcf
