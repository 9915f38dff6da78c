#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "simplexlab/error.hpp"
#include "simplexlab/lp.hpp"

namespace fixtures {

inline simplexlab::Vector vec(std::initializer_list<simplexlab::Rational> v) { return simplexlab::Vector(v); }

inline simplexlab::StandardFormLP make_lp(std::string name, std::vector<simplexlab::Vector> rows,
                                          simplexlab::Vector b, simplexlab::Vector c) {
  return simplexlab::StandardFormLP{std::move(name), simplexlab::Matrix::from_rows(rows), std::move(b),
                                    std::move(c)};
}

// min -x1 - x2  s.t.  x1 + x3 = 1,  x2 + x4 = 1
inline simplexlab::StandardFormLP e1() {
  return simplexlab::validate(make_lp("e1", {vec({1, 0, 1, 0}), vec({0, 1, 0, 1})}, vec({1, 1}), vec({-1, -1, 0, 0})));
}

// 1-based variable list to a Basis.
inline simplexlab::Basis basis(const simplexlab::StandardFormLP& lp, std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> idx;
  for (auto v : one_based) idx.push_back(v - 1);
  return simplexlab::Basis(lp, std::move(idx));
}

// Code of the simplexlab::Error thrown by f.
inline simplexlab::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const simplexlab::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return simplexlab::Errc::InvalidArgument;
}

}  // namespace fixtures
