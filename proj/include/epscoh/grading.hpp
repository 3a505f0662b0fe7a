#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace epscoh {

struct Degree {
  std::vector<std::int64_t> c;

  Degree() = default;
  explicit Degree(std::vector<std::int64_t> coords) : c(std::move(coords)) {}
  Degree(std::initializer_list<std::int64_t> coords) : c(coords) {}

  std::size_t size() const { return c.size(); }
  auto operator<=>(const Degree&) const = default;
};

std::string to_string(const Degree& d);

struct DegreeHash {
  std::size_t operator()(const Degree& d) const noexcept;
};

// Z^free_rank x prod Z_{t_i}.
struct GradingGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::size_t size() const { return free_rank + torsion.size(); }
  bool operator==(const GradingGroup&) const = default;

  Degree zero() const { return Degree(std::vector<std::int64_t>(size(), 0)); }
  Degree reduce(Degree d) const;
  bool valid(const Degree& d) const;
  Degree add(const Degree& a, const Degree& b) const;
  Degree sub(const Degree& a, const Degree& b) const;
  Degree neg(const Degree& a) const;
};

// eps(a,b) = (-1)^{a^T B b}, B symmetric mod 2.
class CommutationFactor {
 public:
  CommutationFactor() = default;
  CommutationFactor(GradingGroup g, std::vector<std::vector<std::int64_t>> form);

  static CommutationFactor super_z2();
  static CommutationFactor super_z();
  // Z^k whose parity is the sum of the coordinates flagged in odd_mask;
  // used for root-lattice gradings of gl(m|n).
  static CommutationFactor lattice(const std::vector<int>& odd_mask);

  const GradingGroup& group() const { return group_; }
  const std::vector<std::vector<std::int64_t>>& form() const { return form_; }
  bool operator==(const CommutationFactor& o) const {
    return group_ == o.group_ && form_ == o.form_;
  }

  int eps(const Degree& a, const Degree& b) const;
  int parity(const Degree& a) const { return eps(a, a); }
  // perm[i] = pi(i), 0-based.
  int eps_n(const std::vector<int>& perm, const std::vector<Degree>& degs) const;

  Degree zero() const { return group_.zero(); }
  Degree add(const Degree& a, const Degree& b) const { return group_.add(a, b); }
  Degree sub(const Degree& a, const Degree& b) const { return group_.sub(a, b); }
  Degree neg(const Degree& a) const { return group_.neg(a); }
  Degree sum(const std::vector<Degree>& ds) const;
  void check(const Degree& a) const;

 private:
  GradingGroup group_;
  std::vector<std::vector<std::int64_t>> form_;  // reduced to {0,1}
};

int permutation_sign(const std::vector<int>& perm);

}  // namespace epscoh
