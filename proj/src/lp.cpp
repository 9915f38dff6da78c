#include "simplexlab/lp.hpp"

#include <algorithm>
#include <utility>

#include "simplexlab/error.hpp"

namespace simplexlab {

StandardFormLP validate(StandardFormLP lp) {
  const std::size_t m = lp.A.rows();
  const std::size_t n = lp.A.cols();
  if (lp.b.size() != m || lp.c.size() != n) {
    throw Error(Errc::DimensionMismatch, "A is " + std::to_string(m) + "x" + std::to_string(n) +
                                             " but b has " + std::to_string(lp.b.size()) +
                                             " entries and c has " + std::to_string(lp.c.size()));
  }
  if (m < 1) throw Error(Errc::DegenerateShape, "need at least one constraint");
  if (const auto r = rank(lp.A); r < m) {
    throw Error(Errc::RankDeficient, "rank(A) = " + std::to_string(r) + " < m = " + std::to_string(m));
  }
  if (n <= m) {
    throw Error(Errc::DegenerateShape, "need n > m, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  return lp;
}

Basis::Basis(std::vector<std::size_t> indices, std::size_t n) : indices_(std::move(indices)) {
  std::vector<bool> in_basis(n, false);
  for (const auto j : indices_) in_basis[j] = true;
  nonbasis_.reserve(n - indices_.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (!in_basis[j]) nonbasis_.push_back(j);
  }
}

std::optional<Basis> Basis::try_make(const StandardFormLP& lp, std::vector<std::size_t> indices) {
  if (indices.size() != lp.m()) return std::nullopt;
  std::vector<bool> seen(lp.n(), false);
  for (const auto j : indices) {
    if (j >= lp.n() || seen[j]) return std::nullopt;
    seen[j] = true;
  }
  if (rank(lp.A.select_columns(indices)) < lp.m()) return std::nullopt;
  return Basis(std::move(indices), lp.n());
}

Basis::Basis(const StandardFormLP& lp, std::vector<std::size_t> indices) {
  if (indices.size() != lp.m()) {
    throw Error(Errc::InvalidArgument, "basis needs " + std::to_string(lp.m()) + " indices, got " +
                                           std::to_string(indices.size()));
  }
  std::vector<bool> seen(lp.n(), false);
  for (const auto j : indices) {
    if (j >= lp.n()) throw Error(Errc::IndexOutOfRange, "basis index " + std::to_string(j + 1));
    if (seen[j]) throw Error(Errc::InvalidArgument, "duplicate basis index " + std::to_string(j + 1));
    seen[j] = true;
  }
  if (rank(lp.A.select_columns(indices)) < lp.m()) {
    throw Error(Errc::SingularBasis, "basis columns are linearly dependent");
  }
  *this = Basis(std::move(indices), lp.n());
}

bool Basis::contains(std::size_t var) const {
  return std::find(indices_.begin(), indices_.end(), var) != indices_.end();
}

bool Basis::same_set(const Basis& other) const {
  auto a = indices_;
  auto b = other.indices_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Basis Basis::exchanged(std::size_t row, std::size_t entering) const {
  auto next = indices_;
  next.at(row) = entering;
  return Basis(std::move(next), indices_.size() + nonbasis_.size());
}

bool Dictionary::primal_feasible() const {
  return std::all_of(b_bar.begin(), b_bar.end(), [](const Rational& v) { return v.sign() >= 0; });
}

bool Dictionary::optimal() const {
  return std::all_of(c_bar.begin(), c_bar.end(), [](const Rational& v) { return v.sign() >= 0; });
}

namespace {

std::optional<Dictionary> build_dictionary(const StandardFormLP& lp, const Basis& basis) {
  const std::size_t m = lp.m();
  const auto& nb = basis.nonbasis();
  // One elimination on [A_N | b].
  Matrix rhs(m, nb.size() + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < nb.size(); ++k) rhs(i, k) = lp.A(i, nb[k]);
    rhs(i, nb.size()) = lp.b[i];
  }
  auto sol = solve(lp.A.select_columns(basis.indices()), std::move(rhs));
  if (!sol) return std::nullopt;

  Dictionary d{basis, Vector(m), Vector(nb.size()), Matrix(m, nb.size()), Rational()};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < nb.size(); ++k) d.A_bar(i, k) = (*sol)(i, k);
    d.b_bar[i] = (*sol)(i, nb.size());
  }
  // c_bar = c_N - A_bar' c_B, since A_N'(A_B')^-1 = (A_B^-1 A_N)'.
  for (std::size_t k = 0; k < nb.size(); ++k) {
    Rational v = lp.c[nb[k]];
    for (std::size_t i = 0; i < m; ++i) v -= d.A_bar(i, k) * lp.c[basis[i]];
    d.c_bar[k] = std::move(v);
  }
  for (std::size_t i = 0; i < m; ++i) d.z0 += lp.c[basis[i]] * d.b_bar[i];
  return d;
}

}  // namespace

Dictionary dictionary(const StandardFormLP& lp, const Basis& basis) {
  if (basis.size() != lp.m() || basis.size() + basis.nonbasis().size() != lp.n()) {
    throw Error(Errc::DimensionMismatch, "basis does not belong to this LP");
  }
  auto d = build_dictionary(lp, basis);
  if (!d) throw Error(Errc::SingularBasis, "A_B is not invertible");
  return std::move(*d);
}

std::optional<Dictionary> try_dictionary(const StandardFormLP& lp, std::vector<std::size_t> indices) {
  return build_dictionary(lp, Basis(std::move(indices), lp.n()));
}

BasicSolution basic_solution(const StandardFormLP& lp, const Dictionary& dict) {
  BasicSolution out{Vector(lp.n()), dict.basis, dict.z0, true, false};
  for (std::size_t i = 0; i < lp.m(); ++i) {
    out.x[dict.basis[i]] = dict.b_bar[i];
    if (dict.b_bar[i].sign() < 0) out.feasible = false;
    if (dict.b_bar[i].is_zero()) out.degenerate = true;
  }
  out.degenerate = out.degenerate && out.feasible;
  return out;
}

BasicSolution basic_solution(const StandardFormLP& lp, const Basis& basis) {
  return basic_solution(lp, dictionary(lp, basis));
}

DualSolution dual_solution(const StandardFormLP& lp, const Basis& basis) {
  Vector c_b(lp.m());
  for (std::size_t i = 0; i < lp.m(); ++i) c_b[i] = lp.c[basis[i]];
  auto y = solve(lp.A.select_columns(basis.indices()).transpose(), c_b);
  if (!y) throw Error(Errc::SingularBasis, "A_B is not invertible");
  DualSolution out{std::move(*y), Vector(lp.n())};
  for (std::size_t j = 0; j < lp.n(); ++j) {
    Rational s = lp.c[j];
    for (std::size_t i = 0; i < lp.m(); ++i) s -= lp.A(i, j) * out.y[i];
    out.s[j] = std::move(s);
  }
  return out;
}

Rational objective(const StandardFormLP& lp, const Vector& x) { return dot(lp.c, x); }

}  // namespace simplexlab
