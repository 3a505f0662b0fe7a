#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "epscoh/algebra.hpp"

namespace epscoh {

// Weakly increasing basis indices; even indices never repeat.
using Monomial = std::vector<std::uint32_t>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct Canonical {
  int sign;
  Monomial mono;
};

// Sorting by adjacent swaps, each swap x^y -> -eps(x,y) y^x. nullopt when an
// even index repeats (the tuple is zero in the exterior algebra).
std::optional<Canonical> canonicalize(const SignTable& s, Monomial tuple);
inline std::optional<Canonical> canonicalize(const EpsLieAlgebra& L, Monomial tuple) {
  return canonicalize(L.signs(), std::move(tuple));
}

std::vector<Monomial> exterior_monomials(const SignTable& s, std::size_t n);

class ExteriorBasis {
 public:
  ExteriorBasis(const SignTable& s, std::size_t n);
  ExteriorBasis(const EpsLieAlgebra& L, std::size_t n) : ExteriorBasis(L.signs(), n) {}

  std::size_t level() const { return n_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& operator[](std::size_t k) const { return monos_[k]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::optional<std::size_t> find(const Monomial& m) const;

 private:
  std::size_t n_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

// Degree of a monomial = sum of basis degrees.
Degree monomial_degree(const EpsLieAlgebra& L, const Monomial& m);

// Sum_r C(p,r) C(q+n-r-1, n-r) for a (p|q) super space.
std::uint64_t super_exterior_dimension(std::uint64_t p, std::uint64_t q, std::uint64_t n);

std::string to_string(const EpsLieAlgebra& L, const Monomial& m);

}  // namespace epscoh
