#ifndef ANTISUB_TESTS_SUPPORT_HPP
#define ANTISUB_TESTS_SUPPORT_HPP

// Seeded generators and small helpers shared by the test binaries.

#include <random>
#include <string>
#include <vector>

#include "antisub/linalg.hpp"

namespace testing_support {

using antisub::Matrix;
using antisub::Scalar;
using antisub::Vector;

inline Scalar small_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return antisub::rational(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int span = 5) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng, span);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (sgn(antisub::determinant(m)) != 0) return m;
  }
}

inline Matrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = small_rational(rng);
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) x = small_rational(rng);
  return v;
}

inline Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testing_support

#endif  // ANTISUB_TESTS_SUPPORT_HPP
