#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace epscoh {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

// Accepts "p", "-p", "p/q"; result is canonical.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& q);
std::size_t bit_size(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool is_zero(const Vec& v);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a x
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& a, const Vec& x);
Vec kron(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

}  // namespace epscoh
