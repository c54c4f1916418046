#include <gtest/gtest.h>

#include "antisub/algebras.hpp"
#include "literal_tables.hpp"

using namespace antisub;

namespace {

std::shared_ptr<const AlgebraTable> table_ptr(AlgebraKind k) { return std::make_shared<const AlgebraTable>(builtin(k)); }

AlgebraElement element(const std::shared_ptr<const AlgebraTable>& t, std::initializer_list<int> c) {
  Vector v;
  for (int x : c) v.emplace_back(x);
  return AlgebraElement(t, v);
}

void expect_matches_literal(AlgebraKind kind, const std::vector<std::vector<std::string>>& literal) {
  const auto t = builtin(kind);
  ASSERT_EQ(t.dim(), literal.size());
  for (std::size_t a = 0; a < t.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b) {
      const auto want = literal_tables::parse_entry(literal[a][b]);
      EXPECT_EQ(t.product(a, b).sign, want.sign) << "e" << a << "*e" << b;
      EXPECT_EQ(t.product(a, b).index, want.index) << "e" << a << "*e" << b;
    }
}

}  // namespace

TEST(Builtin, QuaternionMatchesLiteralTable) { expect_matches_literal(AlgebraKind::quaternion, literal_tables::quaternion); }

TEST(Builtin, ParaQuaternionMatchesLiteralTable) {
  expect_matches_literal(AlgebraKind::para_quaternion, literal_tables::para_quaternion);
}

TEST(Builtin, OctonionMatchesLiteralTable) { expect_matches_literal(AlgebraKind::octonion, literal_tables::octonion); }

TEST(Builtin, SpotProducts) {
  const auto q = builtin(AlgebraKind::quaternion);
  EXPECT_EQ(q.product(1, 2), (SignedUnit{1, 3}));
  const auto pq = builtin(AlgebraKind::para_quaternion);
  EXPECT_EQ(pq.product(2, 2), (SignedUnit{1, 0}));
  const auto o = builtin(AlgebraKind::octonion);
  EXPECT_EQ(o.product(1, 2), (SignedUnit{1, 3}));
  EXPECT_EQ(o.product(2, 1), (SignedUnit{-1, 3}));
}

TEST(Builtin, ParaComplexIsSplit) {
  const auto t = builtin(AlgebraKind::para_complex);
  EXPECT_EQ(t.product(1, 1), (SignedUnit{1, 0}));
  EXPECT_EQ(t.form_signs(), (std::vector<int>{1, -1}));
}

TEST(Builtin, UnitLawAllTables) {
  for (auto k : {AlgebraKind::complex, AlgebraKind::para_complex, AlgebraKind::quaternion,
                 AlgebraKind::para_quaternion, AlgebraKind::octonion})
    EXPECT_TRUE(builtin(k).is_unital()) << to_string(k);
}

TEST(Builtin, Associativity) {
  EXPECT_TRUE(builtin(AlgebraKind::quaternion).is_associative());
  EXPECT_TRUE(builtin(AlgebraKind::para_quaternion).is_associative());
  EXPECT_FALSE(builtin(AlgebraKind::octonion).is_associative());
  // Witness: (e1 e2) e4 = e3 e4 = e7 while e1 (e2 e4) = e1 e6 = -e7.
  const auto o = table_ptr(AlgebraKind::octonion);
  const auto e1 = AlgebraElement::basis(o, 1), e2 = AlgebraElement::basis(o, 2), e4 = AlgebraElement::basis(o, 4);
  EXPECT_NE(multiply(multiply(e1, e2), e4).coeffs(), multiply(e1, multiply(e2, e4)).coeffs());
}

TEST(Multiply, Examples) {
  const auto q = table_ptr(AlgebraKind::quaternion);
  const auto x = element(q, {0, 1, 1, 0});
  EXPECT_EQ(multiply(x, AlgebraElement::basis(q, 3)).coeffs(), element(q, {0, 1, -1, 0}).coeffs());
  EXPECT_EQ(multiply(AlgebraElement::basis(q, 0), x).coeffs(), x.coeffs());
  const auto o = table_ptr(AlgebraKind::octonion);
  EXPECT_EQ(multiply(AlgebraElement::basis(o, 4), AlgebraElement::basis(o, 5)).coeffs(),
            AlgebraElement::basis(o, 1).coeffs());
}

TEST(Multiply, TableMismatch) {
  const auto q = table_ptr(AlgebraKind::quaternion), o = table_ptr(AlgebraKind::octonion);
  EXPECT_THROW(multiply(AlgebraElement::basis(q, 1), AlgebraElement::basis(o, 1)), TableMismatch);
}

TEST(Norm, Examples) {
  const auto q = table_ptr(AlgebraKind::quaternion);
  EXPECT_EQ(norm(AlgebraElement::basis(q, 0)), Scalar(1));
  EXPECT_EQ(norm(element(q, {1, 2, 3, 0})), Scalar(14));
  const auto pq = table_ptr(AlgebraKind::para_quaternion);
  EXPECT_EQ(norm(AlgebraElement::basis(pq, 2)), Scalar(-1));
}

TEST(Conjugate, NormIsProductWithConjugate) {
  std::mt19937_64 rng(3);
  for (auto k : {AlgebraKind::quaternion, AlgebraKind::para_quaternion, AlgebraKind::octonion}) {
    const auto t = table_ptr(k);
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement x(t, random_rational_vector(rng, t->dim()));
      const auto p = multiply(x, conjugate(x));
      Vector want = zero_vector(t->dim());
      want[0] = norm(x);
      EXPECT_EQ(p.coeffs(), want) << to_string(k);
    }
  }
}

TEST(Composition, AllBuiltinTables) {
  for (auto k : {AlgebraKind::complex, AlgebraKind::para_complex, AlgebraKind::quaternion,
                 AlgebraKind::para_quaternion, AlgebraKind::octonion})
    EXPECT_TRUE(check_composition(builtin(k), 1000, 42)) << to_string(k);
}

TEST(Composition, OracleOnRandomPairs) {
  // Independent of check_composition: direct N(xy) == N(x) N(y).
  std::mt19937_64 rng(99);
  const auto o = table_ptr(AlgebraKind::octonion);
  for (int i = 0; i < 200; ++i) {
    const AlgebraElement x(o, random_rational_vector(rng, 8)), y(o, random_rational_vector(rng, 8));
    EXPECT_EQ(norm(multiply(x, y)), norm(x) * norm(y));
  }
}

TEST(Composition, CorruptedTableFails) {
  const auto bad = builtin(AlgebraKind::octonion).with_flipped_sign(3, 5);
  EXPECT_FALSE(check_composition(bad, 1000, 42));
}

TEST(Composition, EverySingleFlipDetected) {
  for (auto k : {AlgebraKind::quaternion, AlgebraKind::para_quaternion, AlgebraKind::octonion}) {
    const auto t = builtin(k);
    for (std::size_t a = 1; a < t.dim(); ++a)
      for (std::size_t b = 1; b < t.dim(); ++b)
        EXPECT_FALSE(check_composition(t.with_flipped_sign(a, b), 50, 5)) << to_string(k) << " " << a << "," << b;
  }
}

TEST(PureImaginary, Examples) {
  const auto q = table_ptr(AlgebraKind::quaternion);
  EXPECT_TRUE(is_pure_imaginary(AlgebraElement::basis(q, 1)));
  EXPECT_FALSE(is_pure_imaginary(element(q, {1, 1, 0, 0})));
  EXPECT_TRUE(is_pure_imaginary(AlgebraElement::basis(table_ptr(AlgebraKind::octonion), 7)));
}

TEST(PureImaginary, OctonionProductOrthogonal) {
  const auto o = table_ptr(AlgebraKind::octonion);
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const auto xy = multiply(AlgebraElement::basis(o, a), AlgebraElement::basis(o, b));
      EXPECT_EQ(xy[b], Scalar(0)) << a << "," << b;
    }
}

TEST(AlgebraTable, RejectsMalformed) {
  EXPECT_THROW(AlgebraTable(AlgebraKind::complex, {{{1, 0}}}, {1}), InvalidStructure);
  EXPECT_THROW(AlgebraTable(AlgebraKind::complex, {{{1, 0}, {1, 1}}, {{1, 1}, {-1, 5}}}, {1, 1}), InvalidStructure);
}

TEST(LeftMultiplication, MatchesMultiply) {
  const auto o = table_ptr(AlgebraKind::octonion);
  std::mt19937_64 rng(5);
  for (std::size_t a = 0; a < 8; ++a) {
    const Vector y = random_rational_vector(rng, 8);
    EXPECT_EQ(o->left_multiplication(a).apply(y), multiply(AlgebraElement::basis(o, a), AlgebraElement(o, y)).coeffs());
  }
}
