#include "epscoh/glmn.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "epscoh/errors.hpp"

namespace epscoh::glmn {

namespace {

void check_shape(const GlWeight& w) {
  if (w.m == 0 && w.n == 0) throw ShapeError("gl weight: m + n must be positive");
  if (w.L.size() != w.m + w.n) throw ShapeError("gl weight: expected m + n entries");
}

Rational power(const Rational& x, unsigned s) {
  Rational p = 1;
  for (unsigned k = 0; k < s; ++k) p *= x;
  return p;
}

bool is_natural(const Rational& x) { return x.get_den() == 1 && sgn(x) >= 0; }
bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace

GlWeight zero_weight(std::size_t m, std::size_t n) { return {m, n, std::vector<Rational>(m + n)}; }

int sigma(std::size_t m, std::size_t n, std::size_t i) {
  if (i < 1 || i > m + n) throw ShapeError("sigma: index out of range");
  return i <= m ? 1 : -1;
}

std::vector<Rational> rho_values(std::size_t m, std::size_t n) {
  // rho(X_kk) = 1/2 (sum_{j>k} sigma_k sigma_j - sum_{i<k} sigma_i sigma_k)
  std::vector<Rational> r;
  for (std::size_t k = 1; k <= m + n; ++k) {
    Rational rho = 0;
    for (std::size_t i = 1; i <= m + n; ++i)
      for (std::size_t j = i + 1; j <= m + n; ++j) {
        int s = sigma(m, n, i) * sigma(m, n, j);
        if (i == k) rho += Rational(s, 2);
        if (j == k) rho -= Rational(s, 2);
      }
    r.push_back(sigma(m, n, k) * rho);
  }
  return r;
}

std::vector<Rational> ell_values(const GlWeight& w) {
  check_shape(w);
  auto r = rho_values(w.m, w.n);
  std::vector<Rational> l;
  for (std::size_t i = 0; i < w.L.size(); ++i) l.push_back(sigma(w.m, w.n, i + 1) * w.L[i] + r[i]);
  return l;
}

Rational q_s(const GlWeight& w, unsigned s) {
  if (s < 1) throw ShapeError("Q_s: s >= 1 required");
  auto l = ell_values(w);
  auto r = rho_values(w.m, w.n);
  Rational q = 0;
  for (std::size_t i = 0; i < l.size(); ++i) q += sigma(w.m, w.n, i + 1) * (power(l[i], s) - power(r[i], s));
  return q;
}

bool all_casimirs_vanish(const GlWeight& w) {
  auto l = ell_values(w);
  auto r = rho_values(w.m, w.n);
  std::vector<Rational> a, b;
  for (std::size_t i = 0; i < l.size(); ++i) {
    a.push_back(i < w.m ? l[i] : r[i]);
    b.push_back(i < w.m ? r[i] : l[i]);
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_dominant(const GlWeight& w) {
  check_shape(w);
  for (std::size_t i = 0; i + 1 < w.L.size(); ++i) {
    if (i + 1 == w.m) continue;
    if (!is_natural(w.L[i] - w.L[i + 1])) return false;
  }
  return true;
}

std::size_t matched_pairs(const GlWeight& w) {
  auto l = ell_values(w);
  std::map<Rational, std::size_t> even, odd;
  for (std::size_t i = 0; i < l.size(); ++i) ++(i < w.m ? even : odd)[l[i]];
  std::size_t c = 0;
  for (const auto& [v, k] : even) {
    auto it = odd.find(v);
    if (it != odd.end()) c += std::min(k, it->second);
  }
  return c;
}

GlWeight enumerate_family(std::size_t m, std::size_t n, std::size_t branch, const std::vector<Rational>& free) {
  if (m == 0 || n == 0) throw ShapeError("family: m, n >= 1 required");
  GlWeight w = zero_weight(m, n);
  const Rational d(static_cast<long>(m) - static_cast<long>(n));
  auto L = [&](std::size_t i) -> Rational& { return w.L[i - 1]; };
  auto check_free = [&](std::size_t first, std::size_t count) {
    if (free.size() != count) throw PreconditionError("family: wrong number of free values");
    for (std::size_t i = 0; i < count; ++i) {
      if (!is_integer(free[i])) throw PreconditionError("family: free values must be integers");
      if (i + 1 < count && !is_natural(free[i] - free[i + 1]))
        throw PreconditionError("family: free values are not dominant");
      L(first + i) = free[i];
    }
  };
  if (m == n) {
    if (branch != 0) throw PreconditionError("family: m = n has no branch parameter");
    check_free(1, m);
    for (std::size_t i = 1; i <= m; ++i) L(m + i) = -L(m + 1 - i);
  } else if (m > n) {
    const std::size_t k = branch;
    if (k > n) throw PreconditionError("family: k must lie in 0..n");
    check_free(1, m);
    for (std::size_t i = n + 1 - k; i <= m - k; ++i)
      if (L(i) != Rational(static_cast<long>(n - k))) throw PreconditionError("family: plateau condition violated");
    for (std::size_t i = 1; i <= k; ++i) L(m + i) = -L(m + 1 - i);
    for (std::size_t i = k + 1; i <= n; ++i) L(m + i) = -L(n + 1 - i) - d;
  } else {
    const std::size_t h = branch;
    if (h > m) throw PreconditionError("family: h must lie in 0..m");
    check_free(m + 1, n);
    for (std::size_t i = m + 1 + h; i <= n + h; ++i)
      if (L(i) != -Rational(static_cast<long>(m - h))) throw PreconditionError("family: plateau condition violated");
    for (std::size_t i = 1; i <= m - h; ++i) L(i) = -L(m + n + 1 - i) - d;
    for (std::size_t i = m - h + 1; i <= m; ++i) L(i) = -L(2 * m + 1 - i);
  }
  Rational sum = 0;
  for (const auto& x : w.L) sum += x;
  if (sgn(sum) != 0 || !is_dominant(w) || !all_casimirs_vanish(w))
    throw ValidationError("family: constructed weight fails its postconditions");
  return w;
}

namespace {

// Weakly decreasing integer sequences of length len with entries in [lo, hi].
void decreasing_sequences(std::size_t len, long lo, long hi, const std::function<void(const std::vector<Rational>&)>& f) {
  std::vector<Rational> cur;
  std::function<void(long)> rec = [&](long top) {
    if (cur.size() == len) {
      f(cur);
      return;
    }
    for (long x = top; x >= lo; --x) {
      cur.push_back(Rational(x));
      rec(x);
      cur.pop_back();
    }
  };
  rec(hi);
}

bool in_box(const GlWeight& w, long lo, long hi) {
  for (const auto& x : w.L)
    if (x < lo || x > hi) return false;
  return true;
}

}  // namespace

std::vector<GlWeight> family_in_box(std::size_t m, std::size_t n, long lo, long hi) {
  std::vector<std::vector<Rational>> seen;
  const std::size_t branches = m == n ? 1 : std::min(m, n) + 1;
  const std::size_t len = m >= n ? m : n;
  for (std::size_t br = 0; br < branches; ++br)
    decreasing_sequences(len, lo, hi, [&](const std::vector<Rational>& free) {
      try {
        auto w = enumerate_family(m, n, br, free);
        if (in_box(w, lo, hi)) seen.push_back(w.L);
      } catch (const PreconditionError&) {
      }
    });
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<GlWeight> out;
  for (auto& L : seen) out.push_back({m, n, std::move(L)});
  return out;
}

std::vector<GlWeight> dominant_weights_in_box(std::size_t m, std::size_t n, long lo, long hi) {
  std::vector<GlWeight> out;
  decreasing_sequences(m, lo, hi, [&](const std::vector<Rational>& a) {
    decreasing_sequences(n, lo, hi, [&](const std::vector<Rational>& b) {
      GlWeight w{m, n, a};
      w.L.insert(w.L.end(), b.begin(), b.end());
      out.push_back(std::move(w));
    });
  });
  return out;
}

std::vector<Rational> sl_generator_diagonal(std::size_t m, std::size_t n, std::size_t i) {
  if (m == n) throw PreconditionError("sl variant: m != n required");
  const Rational d(static_cast<long>(m) - static_cast<long>(n));
  std::vector<Rational> x(m + n, -Rational(sigma(m, n, i)) / d);
  x[i - 1] += 1;
  return x;
}

GlWeight sl_variant(const GlWeight& w) {
  check_shape(w);
  GlWeight out = zero_weight(w.m, w.n);
  for (std::size_t i = 1; i <= w.m + w.n; ++i) {
    auto x = sl_generator_diagonal(w.m, w.n, i);
    for (std::size_t j = 0; j < x.size(); ++j) out.L[i - 1] += x[j] * w.L[j];
  }
  return out;
}

GlWeight sl12_weight(const Rational& b, const Rational& q) {
  // X_11 = -2B, X_22 = B + Q3, X_33 = B - Q3 in the matrix realization.
  GlWeight w{1, 2, {-2 * b, b + q, b - q}};
  // (Lambda, eps_2 - eps_1) = -L_2 - L_1
  if (sgn(w.L[0] + w.L[1]) != 0) {
    w.L[0] += 1;
    w.L[1] -= 1;
  }
  return w;
}

}  // namespace epscoh::glmn
