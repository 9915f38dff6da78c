#pragma once

#include <cstddef>
#include <cstdint>

#include "simplexlab/lp.hpp"
#include "simplexlab/pivot_rules.hpp"

namespace simplexlab {

struct GeneratedInstance {
  StandardFormLP lp;
  Basis initial;
};

// Klee-Minty cube in standard form:
//   min  -sum_j 2^(m-j) x_j
//   s.t. sum_{j<i} 2^(i-j+1) x_j + x_i + s_i = 5^i,  i = 1..m
// with the all-slack basis (the origin) as the initial basis.
GeneratedInstance klee_minty(std::size_t m);

struct ValueRange {
  long lo = -9;
  long hi = 9;
};

inline constexpr unsigned kDefaultResampleLimit = 1000;

// Random standard-form LP with a feasible, nondegenerate, non-optimal starting
// basis. Instances are resampled until rank(A) = m, every BFS is
// nondegenerate, the LP is bounded, and the start is not already optimal.
GeneratedInstance random_lp(std::size_t m, std::size_t n, std::uint64_t seed,
                            ValueRange range = {}, unsigned resample_limit = kDefaultResampleLimit);

// Discounted MDP with m states and k actions per state (n = m k), as the LP
//   min c'x  s.t.  (E - theta P) x = e,  x >= 0.
struct DmdpInstance {
  std::size_t m = 0;
  std::size_t k = 0;
  Rational theta;
  Matrix P;      // m x n, column j is the next-state distribution of action j
  Matrix E;      // m x n, E(i, j) = 1 iff action j belongs to state i
  Vector costs;  // immediate costs, used directly as c
  GeneratedInstance instance;  // initial basis: the first action of every state
};

DmdpInstance dmdp_generate(std::size_t m, std::size_t k, const Rational& theta, std::uint64_t seed);

// (n - m) * ceil( m^(3 + 1/p) / (1 - theta)^2 * ln(m^2 / (1 - theta)) )
mpz_class dmdp_bound(std::size_t m, std::size_t n, const Rational& theta, NormOrder order);

}  // namespace simplexlab
