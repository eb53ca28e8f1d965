#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lpcert {

using Integer = boost::multiprecision::mpz_int;

// Exact rational scalar. Values are kept canonical (lowest terms, positive
// denominator, zero as 0/1); GMP preserves canonical form under arithmetic,
// so only construction sites need care. Build values from integers, from
// integer pairs with a positive denominator, or through parse_rational.
using Rational = boost::multiprecision::mpq_rational;

using RVector = std::vector<Rational>;

// Renders "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts an optional sign, digits, and an optional "/digits" tail with a
// positive denominator. Anything else (including "1/0") is a ParseError.
Rational parse_rational(std::string_view text);

RVector zeros(std::size_t n);
RVector ones(std::size_t n);
RVector unit_vector(std::size_t n, std::size_t j);

Rational dot(const RVector& a, const RVector& b);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scaled(const RVector& a, const Rational& factor);

bool is_zero_vector(const RVector& v);
bool is_nonnegative(const RVector& v);

// Indices of strictly positive coordinates, ascending. Intended for vectors
// already known to be nonnegative.
std::vector<std::size_t> support(const RVector& v);

std::string to_string(const RVector& v);

}  // namespace lpcert
