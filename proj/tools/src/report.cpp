// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

namespace latwidth::cli {

Json num(const Integer& x) { return x.get_str(); }

Json num(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Json num(std::size_t x) { return std::to_string(x); }

namespace {

template <typename V>
Json vec_impl(const V& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

}  // namespace

Json vec(const IntVector& v) { return vec_impl(v); }
Json vec(const RatVector& v) { return vec_impl(v); }

Json columns(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(vec(m.column(j)));
  return a;
}

Json rows(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec(m.row_vector(i)));
  return a;
}

Json rows(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec(m.row_vector(i)));
  return a;
}

std::string text(const IntVector& v) { return to_string(v); }
std::string text(const RatVector& v) { return to_string(v); }

}  // namespace latwidth::cli
