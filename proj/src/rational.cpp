#include "epscoh/rational.hpp"

#include <cctype>

#include "epscoh/errors.hpp"

namespace epscoh {

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ParseError("empty rational");
  auto slash = t.find('/');
  auto ok_int = [](std::string_view x) {
    if (!x.empty() && (x[0] == '-' || x[0] == '+')) x.remove_prefix(1);
    if (x.empty()) return false;
    for (char ch : x)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!ok_int(num) || !ok_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(s) + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  if (y.size() != x.size()) throw ShapeError("axpy: length mismatch");
  if (sgn(a) == 0) return y;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  return y;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  return axpy(r, 1, b);
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  return axpy(r, -1, b);
}

Vec operator*(const Rational& a, const Vec& x) {
  Vec r(x.size());
  if (sgn(a) == 0) return r;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i];
  return r;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + "]";
}

}  // namespace epscoh
