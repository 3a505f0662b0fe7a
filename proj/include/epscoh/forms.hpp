#pragma once

#include <map>

#include "epscoh/exterior.hpp"
#include "epscoh/gmodule.hpp"

namespace epscoh {

// An r-linear form on a module M, stored on basis r-tuples (no symmetry implied).
struct InvariantForm {
  ModulePtr M;
  std::size_t r = 0;
  Degree eta;
  std::map<Monomial, Rational> values;

  Rational operator()(const Monomial& tuple) const {
    auto it = values.find(tuple);
    return it == values.end() ? Rational(0) : it->second;
  }
  // Multilinear evaluation on arbitrary vectors of M.
  Rational evaluate(const std::vector<Vec>& args) const;
};

// sum_k eps(alpha, eta + xi_1 + .. + xi_{k-1}) phi(.., A x_k, ..) = 0 for every basis A.
bool is_invariant_form(const InvariantForm& phi);

}  // namespace epscoh
