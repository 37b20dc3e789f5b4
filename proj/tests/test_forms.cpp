#include <doctest.h>

#include "framecomplex/errors.hpp"
#include "framecomplex/forms.hpp"
#include "framecomplex/random_forms.hpp"

using namespace fcx;

namespace {

const BundleContext m2(2, 2);

ScalarForm du(const BundleContext& ctx, int alpha, std::vector<int> counts) {
  return ScalarForm::term(ctx, PolyExpr::constant(1), {jet(alpha, std::move(counts))});
}

}  // namespace

TEST_CASE("wedge of decomposable vector forms") {
  VectorForm a = VectorForm::term(du(m2, 1, {0, 0}), {1});
  VectorForm b = VectorForm::term(du(m2, 2, {0, 0}), {2});
  VectorForm ab = a.wedge(b);
  CHECK(ab.degree() == 2);
  CHECK(ab.covalence() == 2);
  VectorForm expected = VectorForm::term(du(m2, 1, {0, 0}).wedge(du(m2, 2, {0, 0})), {1, 2});
  CHECK(ab == expected);

  VectorForm repeated = a.wedge(VectorForm::term(du(m2, 2, {0, 0}), {1}));
  CHECK(repeated.is_zero());
}

TEST_CASE("graded commutativity of the wedge") {
  RandomGen gen(21);
  for (int i = 0; i < 30; ++i) {
    int ra = gen.uniform(0, 2), rb = gen.uniform(0, 2);
    int sa = gen.uniform(0, 1), sb = gen.uniform(0, 1);
    VectorForm a = gen.vector_form(m2, ra, sa, 1);
    VectorForm b = gen.vector_form(m2, rb, sb, 1);
    VectorForm lhs = a.wedge(b);
    VectorForm rhs = b.wedge(a);
    if ((ra * rb + sa * sb) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("wedge associativity on random triples") {
  RandomGen gen(22);
  for (int i = 0; i < 15; ++i) {
    VectorForm a = gen.vector_form(m2, gen.uniform(0, 1), gen.uniform(0, 1), 1);
    VectorForm b = gen.vector_form(m2, gen.uniform(0, 1), gen.uniform(0, 1), 1);
    VectorForm c = gen.vector_form(m2, gen.uniform(0, 1), gen.uniform(0, 1), 1);
    CHECK(a.wedge(b).wedge(c) == a.wedge(b.wedge(c)));
  }
}

TEST_CASE("exterior derivative basics") {
  BundleContext ctx(1, 2);
  // d(u1 du2) = du1 ^ du2
  ScalarForm form = ScalarForm::term(ctx, PolyExpr::coordinate(jet(1, {0})), {jet(2, {0})});
  ScalarForm expected =
      ScalarForm::term(ctx, PolyExpr::constant(1), {jet(1, {0}), jet(2, {0})});
  CHECK(form.d() == expected);

  // d(u1 tensor dt1) = du1 tensor dt1
  VectorForm f = VectorForm::term(
      ScalarForm::function(ctx, PolyExpr::coordinate(jet(1, {0}))), {1});
  CHECK(f.d() == VectorForm::term(du(ctx, 1, {0}), {1}));
}

TEST_CASE("d squares to zero on random forms") {
  RandomGen gen(23);
  for (int i = 0; i < 25; ++i) {
    VectorForm phi = gen.vector_form(m2, gen.uniform(0, 2), gen.uniform(0, 2), 2, 3, 2, 3);
    CHECK(phi.d().d().is_zero());
  }
}

TEST_CASE("d is an antiderivation in the scalar degree") {
  RandomGen gen(24);
  for (int i = 0; i < 20; ++i) {
    int ra = gen.uniform(0, 2);
    VectorForm a = gen.vector_form(m2, ra, gen.uniform(0, 1), 1, 2, 2, 2);
    VectorForm b = gen.vector_form(m2, gen.uniform(0, 2), gen.uniform(0, 1), 1, 2, 2, 2);
    VectorForm lhs = a.wedge(b).d();
    VectorForm db_part = a.wedge(b.d());
    if (ra % 2 == 1) db_part = -db_part;
    CHECK(lhs == a.d().wedge(b) + db_part);
  }
}

TEST_CASE("component extraction uses skew extension") {
  ScalarForm theta = du(m2, 1, {0, 0});
  VectorForm phi = VectorForm::term(theta, {1, 2});
  CHECK(phi.component({1, 2}) == theta);
  CHECK(phi.component({2, 1}) == -theta);
  CHECK(phi.component({1, 1}).is_zero());
  CHECK_THROWS_AS(phi.component({1}), DomainError);
  CHECK_THROWS_AS(phi.component({1, 3}), DomainError);
}

TEST_CASE("linear combinations") {
  RandomGen gen(25);
  VectorForm x = gen.vector_form(m2, 1, 1, 1);
  CHECK((x + x.scaled(make_rational(-1))).is_zero());

  VectorForm scaled = VectorForm::term(du(m2, 1, {0, 0}), {1})
                          .scaled(PolyExpr::coordinate(jet(2, {0, 0})));
  VectorForm expected = VectorForm::term(
      ScalarForm::term(m2, PolyExpr::coordinate(jet(2, {0, 0})), {jet(1, {0, 0})}), {1});
  CHECK(scaled == expected);

  // Disjoint-support addition keeps both terms.
  VectorForm a = VectorForm::term(du(m2, 1, {0, 0}), {1});
  VectorForm b = VectorForm::term(du(m2, 2, {0, 0}), {2});
  VectorForm sum = a + b;
  CHECK(sum.components().size() == 2);
}

TEST_CASE("shape mismatches are rejected") {
  VectorForm a = VectorForm::term(du(m2, 1, {0, 0}), {1});
  VectorForm b = VectorForm::term(du(m2, 1, {0, 0}).wedge(du(m2, 2, {0, 0})), {1});
  CHECK_THROWS_AS(a + b, DomainError);
  BundleContext other(2, 3);
  VectorForm c = VectorForm::term(du(other, 1, {0, 0}), {1});
  CHECK_THROWS_AS(a + c, DomainError);
}

TEST_CASE("canonicalization is idempotent and sign-correct") {
  BundleContext ctx(1, 2);
  ScalarForm swapped =
      ScalarForm::term(ctx, PolyExpr::constant(1), {jet(2, {0}), jet(1, {0})});
  ScalarForm sorted =
      ScalarForm::term(ctx, PolyExpr::constant(-1), {jet(1, {0}), jet(2, {0})});
  CHECK(swapped == sorted);
  ScalarForm repeated =
      ScalarForm::term(ctx, PolyExpr::constant(1), {jet(1, {0}), jet(1, {0})});
  CHECK(repeated.is_zero());
}

TEST_CASE("bar-space normal form strips component constants") {
  VectorForm phi = VectorForm::term(
      ScalarForm::function(m2, PolyExpr::coordinate(jet(1, {0, 0})) +
                                   PolyExpr::constant(make_rational(5))),
      {1});
  VectorForm stripped = phi.normalize_bar();
  CHECK(stripped ==
        VectorForm::term(ScalarForm::function(m2, PolyExpr::coordinate(jet(1, {0, 0}))), {1}));
  CHECK(stripped.normalize_bar() == stripped);
}
