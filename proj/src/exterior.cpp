#include "epscoh/exterior.hpp"

#include "epscoh/errors.hpp"

namespace epscoh {

std::optional<Canonical> canonicalize(const SignTable& s, Monomial t) {
  int sign = 1;
  for (std::size_t k = 1; k < t.size(); ++k)
    for (std::size_t j = k; j > 0 && t[j - 1] > t[j]; --j) {
      sign *= -s(t[j - 1], t[j]);
      std::swap(t[j - 1], t[j]);
    }
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] >= s.dim) throw ShapeError("canonicalize: index out of range");
    if (k > 0 && t[k] == t[k - 1] && s.parity[t[k]] == 1) return std::nullopt;
  }
  return Canonical{sign, std::move(t)};
}

std::vector<Monomial> exterior_monomials(const SignTable& s, std::size_t n) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::uint32_t start) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t i = start; i < s.dim; ++i) {
      cur.push_back(i);
      // odd indices may repeat
      self(self, s.parity[i] == -1 ? i : i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ExteriorBasis::ExteriorBasis(const SignTable& s, std::size_t n) : n_(n), monos_(exterior_monomials(s, n)) {
  index_.reserve(monos_.size());
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], static_cast<std::uint32_t>(k));
}

std::optional<std::size_t> ExteriorBasis::find(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Degree monomial_degree(const EpsLieAlgebra& L, const Monomial& m) {
  Degree d = L.factor().zero();
  for (auto i : m) d = L.factor().add(d, L.degree(i));
  return d;
}

namespace {
std::uint64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}
}  // namespace

std::uint64_t super_exterior_dimension(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t r = 0; r <= std::min(p, n); ++r) {
    std::uint64_t sym = q == 0 ? (n == r ? 1 : 0) : binom(static_cast<std::int64_t>(q + n - r - 1), static_cast<std::int64_t>(n - r));
    total += binom(static_cast<std::int64_t>(p), static_cast<std::int64_t>(r)) * sym;
  }
  return total;
}

std::string to_string(const EpsLieAlgebra& L, const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) s += "^";
    s += L.label(m[k]);
  }
  return s;
}

}  // namespace epscoh
