#pragma once

// Reference implementations used as test oracles. They work on raw mpq_class
// tables and share no code with the library beyond reading its LP type.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "simplexlab/lp.hpp"

namespace reference {

using Table = std::vector<std::vector<mpq_class>>;

struct Problem {
  Table A;
  std::vector<mpq_class> b, c;
  std::size_t m = 0, n = 0;
};

inline Problem from_lp(const simplexlab::StandardFormLP& lp) {
  Problem p;
  p.m = lp.m();
  p.n = lp.n();
  p.A.assign(p.m, std::vector<mpq_class>(p.n));
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) p.A[i][j] = lp.A(i, j).raw();
    p.b.push_back(lp.b[i].raw());
  }
  for (std::size_t j = 0; j < p.n; ++j) p.c.push_back(lp.c[j].raw());
  return p;
}

// Reduces [A_B | A | b] to [I | A_B^-1 A | A_B^-1 b]. Empty when A_B is singular.
inline std::optional<Table> canonical_tableau(const Problem& p, const std::vector<std::size_t>& basis) {
  Table t(p.m, std::vector<mpq_class>(p.n + 1));
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) t[i][j] = p.A[i][j];
    t[i][p.n] = p.b[i];
  }
  for (std::size_t r = 0; r < p.m; ++r) {
    const std::size_t col = basis[r];
    std::size_t piv = r;
    while (piv < p.m && t[piv][col] == 0) ++piv;
    if (piv == p.m) return std::nullopt;
    std::swap(t[r], t[piv]);
    const mpq_class scale = t[r][col];
    for (auto& v : t[r]) v /= scale;
    for (std::size_t i = 0; i < p.m; ++i) {
      if (i == r || t[i][col] == 0) continue;
      const mpq_class f = t[i][col];
      for (std::size_t j = 0; j <= p.n; ++j) t[i][j] -= f * t[r][j];
    }
  }
  return t;
}

// Steepest edge: among nonbasic k with negative reduced cost, minimise
// cbar_k / ||eta_k||_2 where eta_k is the edge direction (-abar_k on the
// basis, 1 at k). Compared through squares; ties go to the smaller index.
inline std::optional<std::size_t> steepest_edge(const Problem& p, const std::vector<std::size_t>& basis) {
  const auto t = canonical_tableau(p, basis);
  if (!t) return std::nullopt;
  std::optional<std::size_t> best;
  mpq_class best_c, best_len;
  for (std::size_t k = 0; k < p.n; ++k) {
    if (std::find(basis.begin(), basis.end(), k) != basis.end()) continue;
    mpq_class cbar = p.c[k];
    mpq_class len = 1;
    for (std::size_t r = 0; r < p.m; ++r) {
      cbar -= p.c[basis[r]] * (*t)[r][k];
      len += (*t)[r][k] * (*t)[r][k];
    }
    if (cbar >= 0) continue;
    // cbar_k^2 / len_k > best^2 / best_len  <=>  k is strictly steeper
    if (!best || cbar * cbar * best_len > best_c * best_c * len) {
      best = k;
      best_c = cbar;
      best_len = len;
    }
  }
  return best;
}

struct Vertex {
  std::vector<std::size_t> basis;
  std::vector<mpq_class> x;
  mpq_class objective;
};

// Every feasible basis by brute force over m-subsets.
inline std::vector<Vertex> vertices(const Problem& p) {
  std::vector<Vertex> out;
  std::vector<bool> pick(p.n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p.m), true);
  do {
    std::vector<std::size_t> basis;
    for (std::size_t j = 0; j < p.n; ++j) {
      if (pick[j]) basis.push_back(j);
    }
    const auto t = canonical_tableau(p, basis);
    if (!t) continue;
    Vertex v{basis, std::vector<mpq_class>(p.n), 0};
    bool feasible = true;
    for (std::size_t r = 0; r < p.m; ++r) {
      const mpq_class val = (*t)[r][p.n];
      if (val < 0) feasible = false;
      v.x[basis[r]] = val;
    }
    if (!feasible) continue;
    for (std::size_t j = 0; j < p.n; ++j) v.objective += p.c[j] * v.x[j];
    out.push_back(std::move(v));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace reference
