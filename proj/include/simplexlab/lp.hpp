#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simplexlab/matrix.hpp"
#include "simplexlab/rational.hpp"

namespace simplexlab {

// minimize c'x  s.t.  Ax = b, x >= 0.
struct StandardFormLP {
  std::string name;
  Matrix A;
  Vector b;
  Vector c;

  std::size_t m() const { return A.rows(); }
  std::size_t n() const { return A.cols(); }
  std::size_t ell() const { return n() - m(); }

  friend bool operator==(const StandardFormLP&, const StandardFormLP&) = default;
};

// Checks shapes, n > m >= 1 and rank(A) = m. Returns the LP unchanged.
StandardFormLP validate(StandardFormLP lp);

struct Dictionary;

// An ordered set of m basic variable indices (0-based). Position i of the
// basis is the variable that is basic in row i of the dictionary.
class Basis {
 public:
  Basis() = default;
  // Throws IndexOutOfRange, InvalidArgument (size/duplicates) or SingularBasis.
  Basis(const StandardFormLP& lp, std::vector<std::size_t> indices);
  static std::optional<Basis> try_make(const StandardFormLP& lp, std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  bool contains(std::size_t var) const;

  // Complement in ascending order.
  const std::vector<std::size_t>& nonbasis() const { return nonbasis_; }

  // Same variables, ignoring row order.
  bool same_set(const Basis& other) const;

  // Replaces the variable basic in `row` by `entering`. The caller guarantees
  // the exchange is nonsingular (nonzero pivot).
  Basis exchanged(std::size_t row, std::size_t entering) const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.indices_ == b.indices_; }

 private:
  friend std::optional<Dictionary> try_dictionary(const StandardFormLP&, std::vector<std::size_t>);
  Basis(std::vector<std::size_t> indices, std::size_t n);
  std::vector<std::size_t> indices_;
  std::vector<std::size_t> nonbasis_;
};

// Basis-relative view of the LP:
//   minimize z0 + c_bar' x_N  s.t.  x_B = b_bar - A_bar x_N.
struct Dictionary {
  Basis basis;
  Vector b_bar;   // A_B^-1 b
  Vector c_bar;   // c_N - A_N' (A_B')^-1 c_B, ordered as basis.nonbasis()
  Matrix A_bar;   // A_B^-1 A_N, m x ell
  Rational z0;    // c_B' A_B^-1 b

  const std::vector<std::size_t>& nonbasis() const { return basis.nonbasis(); }
  std::size_t ell() const { return c_bar.size(); }
  bool primal_feasible() const;
  bool optimal() const;  // c_bar >= 0
};

struct BasicSolution {
  Vector x;
  Basis basis;
  Rational objective;
  bool feasible = false;
  bool degenerate = false;
};

struct DualSolution {
  Vector y;
  Vector s;
};

Dictionary dictionary(const StandardFormLP& lp, const Basis& basis);
// nullopt when the columns are singular; indices must be m distinct in-range values.
std::optional<Dictionary> try_dictionary(const StandardFormLP& lp, std::vector<std::size_t> indices);
BasicSolution basic_solution(const StandardFormLP& lp, const Basis& basis);
BasicSolution basic_solution(const StandardFormLP& lp, const Dictionary& dict);
DualSolution dual_solution(const StandardFormLP& lp, const Basis& basis);

Rational objective(const StandardFormLP& lp, const Vector& x);

}  // namespace simplexlab
