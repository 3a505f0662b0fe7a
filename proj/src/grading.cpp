#include "epscoh/grading.hpp"

#include <algorithm>
#include <numeric>

#include "epscoh/errors.hpp"

namespace epscoh {

std::string to_string(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.c[i]);
  }
  return s + ")";
}

std::size_t DegreeHash::operator()(const Degree& d) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : d.c) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}

Degree GradingGroup::reduce(Degree d) const {
  if (d.size() != size()) throw ShapeError("degree " + to_string(d) + " has wrong length");
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    auto& x = d.c[free_rank + k];
    x %= torsion[k];
    if (x < 0) x += torsion[k];
  }
  return d;
}

bool GradingGroup::valid(const Degree& d) const {
  if (d.size() != size()) return false;
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    auto x = d.c[free_rank + k];
    if (x < 0 || x >= torsion[k]) return false;
  }
  return true;
}

Degree GradingGroup::add(const Degree& a, const Degree& b) const {
  if (a.size() != size() || b.size() != size()) throw ShapeError("degree shape mismatch");
  Degree r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.c[i] += b.c[i];
  return reduce(std::move(r));
}

Degree GradingGroup::sub(const Degree& a, const Degree& b) const { return add(a, neg(b)); }

Degree GradingGroup::neg(const Degree& a) const {
  if (a.size() != size()) throw ShapeError("degree shape mismatch");
  Degree r = a;
  for (auto& x : r.c) x = -x;
  return reduce(std::move(r));
}

CommutationFactor::CommutationFactor(GradingGroup g, std::vector<std::vector<std::int64_t>> form)
    : group_(std::move(g)), form_(std::move(form)) {
  const std::size_t k = group_.size();
  if (group_.free_rank < 0) throw ShapeError("negative free rank");
  for (auto t : group_.torsion)
    if (t < 2) throw ShapeError("torsion orders must be >= 2");
  if (form_.size() != k) throw ShapeError("form has wrong number of rows");
  for (auto& row : form_) {
    if (row.size() != k) throw ShapeError("form has wrong number of columns");
    for (auto& x : row) x = ((x % 2) + 2) % 2;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (form_[i][j] != form_[j][i]) throw ShapeError("form is not symmetric mod 2");
  // A Z_t coordinate with t odd must pair evenly with everything.
  for (std::size_t q = 0; q < group_.torsion.size(); ++q) {
    if (group_.torsion[q] % 2 == 0) continue;
    std::size_t i = group_.free_rank + q;
    for (std::size_t j = 0; j < k; ++j)
      if (form_[i][j]) throw ShapeError("form not well defined on odd torsion coordinate");
  }
}

CommutationFactor CommutationFactor::super_z2() { return {GradingGroup{0, {2}}, {{1}}}; }
CommutationFactor CommutationFactor::super_z() { return {GradingGroup{1, {}}, {{1}}}; }

CommutationFactor CommutationFactor::lattice(const std::vector<int>& odd_mask) {
  const std::size_t k = odd_mask.size();
  std::vector<std::vector<std::int64_t>> B(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) B[i][j] = (odd_mask[i] && odd_mask[j]) ? 1 : 0;
  return {GradingGroup{static_cast<int>(k), {}}, B};
}

void CommutationFactor::check(const Degree& a) const {
  if (!group_.valid(a)) throw ShapeError("invalid degree " + to_string(a));
}

int CommutationFactor::eps(const Degree& a, const Degree& b) const {
  const std::size_t k = group_.size();
  if (a.size() != k || b.size() != k) throw ShapeError("degree shape mismatch in eps");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if ((a.c[i] & 1) == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (form_[i][j] && (b.c[j] & 1)) ++s;
  }
  return (s & 1) ? -1 : 1;
}

int CommutationFactor::eps_n(const std::vector<int>& perm, const std::vector<Degree>& degs) const {
  const std::size_t n = perm.size();
  if (degs.size() != n) throw ShapeError("eps_n: permutation and degree list differ in length");
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= n || inv[perm[i]] != -1)
      throw ShapeError("eps_n: not a permutation");
    inv[perm[i]] = static_cast<int>(i);
  }
  int s = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (inv[i] > inv[j]) s *= eps(degs[i], degs[j]);
  return s;
}

Degree CommutationFactor::sum(const std::vector<Degree>& ds) const {
  Degree r = zero();
  for (const auto& d : ds) r = add(r, d);
  return r;
}

int permutation_sign(const std::vector<int>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

}  // namespace epscoh
