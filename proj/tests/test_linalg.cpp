#include "doctest.h"

#include "residuum/linalg.hpp"

using namespace residuum;

namespace {
Rational Q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
} // namespace

TEST_CASE("rank and rref") {
  RatMatrix m(3, 3);
  m.at(0, 0) = Q(1); m.at(0, 1) = Q(2); m.at(0, 2) = Q(3);
  m.at(1, 0) = Q(2); m.at(1, 1) = Q(4); m.at(1, 2) = Q(6);
  m.at(2, 0) = Q(0); m.at(2, 1) = Q(1); m.at(2, 2) = Q(1);
  CHECK(m.rank() == 2);

  auto kernel = m.kernel_basis();
  REQUIRE(kernel.size() == 1);
  for (const auto& y : m.apply(kernel[0])) CHECK(y.is_zero());
}

TEST_CASE("kernel of ((1,1),(1,1)) is spanned by (1,-1)") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Q(1); m.at(0, 1) = Q(1);
  m.at(1, 0) = Q(1); m.at(1, 1) = Q(1);
  auto kernel = m.kernel_basis();
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0][0] * Q(-1) == kernel[0][1]);
}

TEST_CASE("zero-column and zero-row matrices") {
  RatMatrix none(3, 0);
  CHECK(none.rank() == 0);
  CHECK(none.kernel_basis().empty());

  RatMatrix empty(0, 4);
  CHECK(empty.rank() == 0);
  CHECK(empty.kernel_basis().size() == 4);
}

TEST_CASE("rank-nullity") {
  RatMatrix m(2, 5);
  m.at(0, 0) = Q(1, 2); m.at(0, 3) = Q(-7, 3);
  m.at(1, 1) = Q(4); m.at(1, 4) = Q(1);
  CHECK(m.rank() + m.kernel_basis().size() == 5);
}

TEST_CASE("row space membership") {
  RatMatrix m(2, 3);
  m.at(0, 0) = Q(1); m.at(0, 1) = Q(1);
  m.at(1, 2) = Q(2);
  CHECK(m.row_space_contains({Q(3), Q(3), Q(1)}));
  CHECK(!m.row_space_contains({Q(1), Q(0), Q(0)}));
}

TEST_CASE("constraint system") {
  RatMatrix m(1, 2);
  m.at(0, 0) = Q(1); m.at(0, 1) = Q(1);
  ConstraintSystem sys(m, {"a", "b"});
  CHECK(sys.rank() == 1);
  CHECK(sys.nullity() == 1);
  CHECK(sys.satisfied_by({Q(2), Q(-2)}));
  CHECK(!sys.satisfied_by({Q(2), Q(2)}));
}
