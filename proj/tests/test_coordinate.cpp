#include "doctest.h"

#include <cstdlib>

#include "jaccoord/coordinate.hpp"
#include "jaccoord/errors.hpp"
#include "jaccoord/parse.hpp"
#include "oracles.hpp"

using namespace jaccoord;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

// Independent witness check: evaluate P at the witness components at
// random points and compare with the value of x.
bool replays_to_x(const BiPoly& p, const Witness& w, Rng& rng) {
  const auto [X, Y] = apply_witness(w);
  if (!(substitute(p, X, Y) == BiPoly::x())) return false;
  for (int k = 0; k < 3; ++k) {
    const Rat u = rng.rational(9), v = rng.rational(9);
    if (oracle::naive_eval(p, oracle::naive_eval(X, u, v), oracle::naive_eval(Y, u, v)) != u) return false;
  }
  return true;
}

Linear random_linear(Rng& rng) {
  Linear l;
  do {
    l.a = rng.rational(4);
    l.b = rng.rational(4);
    l.c = rng.rational(4);
    l.d = rng.rational(4);
  } while (sgn(l.det()) == 0);
  l.e = rng.rational(4);
  l.f = rng.rational(4);
  return l;
}

}  // namespace

TEST_SUITE("coordinate") {
  TEST_CASE("x is a coordinate with the identity witness") {
    const auto v = check(P("x"));
    REQUIRE(v.is_coordinate());
    const auto& c = std::get<Coordinate>(v.outcome);
    REQUIRE(c.witness.steps.size() == 1);
    CHECK(std::get<Linear>(c.witness.steps[0]) == Linear::identity());
    CHECK(c.complement == P("y"));
    CHECK(c.jac == 1);
  }

  TEST_CASE("y + x^3 reduces through one triangular step and a swap") {
    auto r = reduce_step(P("y + x^3"));
    REQUIRE(std::holds_alternative<ReduceStep>(r));
    CHECK(std::get<TriangularY>(std::get<ReduceStep>(r).step).phi == UniPoly::monomial(-1, 3));
    CHECK(std::get<ReduceStep>(r).next == P("y"));

    const auto v = check(P("y + x^3"));
    REQUIRE(v.is_coordinate());
    const auto& c = std::get<Coordinate>(v.outcome);
    REQUIRE(c.witness.steps.size() == 2);
    CHECK(std::get<TriangularY>(c.witness.steps[0]).phi == UniPoly::monomial(-1, 3));
    CHECK(std::get<Linear>(c.witness.steps[1]) == Linear::swap());
    CHECK((c.jac == 1 || c.jac == -1));
    CHECK(jacobian_det(P("y + x^3"), c.complement) == BiPoly(c.jac));
  }

  TEST_CASE("reduce_step gate failures") {
    auto both = reduce_step(P("x^2 + y^3"));
    REQUIRE(std::holds_alternative<Obstruction>(both));
    CHECK(std::get<Obstruction>(both) == Obstruction{FaceExponentsBothExceedOne{2, 3}});
    auto tri = reduce_step(P("x*y"));
    REQUIRE(std::holds_alternative<Obstruction>(tri));
    CHECK(std::holds_alternative<PolygonNotTriangle>(std::get<Obstruction>(tri)));
    CHECK_THROWS_AS(reduce_step(P("x^2")), UsageError);
  }

  TEST_CASE("obstruction corpus") {
    struct Case {
      const char* input;
      Obstruction expected;
    };
    const Case cases[] = {
        {"x*y", PolygonNotTriangle{{1, 0}, true}},
        {"x + x^2*y", PolygonNotTriangle{{2, 0}, true}},
        {"x^2 + y^3", FaceExponentsBothExceedOne{2, 3}},
        {"y^2 - x^3", FaceExponentsBothExceedOne{3, 2}},
        {"x^3 + y^3", FaceNotBinomialPower{1}},
        {"x^2", UnivariateNonlinear{Var::X, 2}},
        {"y^3 - 1", UnivariateNonlinear{Var::Y, 3}},
        {"7/2", ConstantPolynomial{}},
    };
    for (const auto& c : cases) {
      CAPTURE(c.input);
      const auto v = check(P(c.input));
      REQUIRE_FALSE(v.is_coordinate());
      const auto& n = std::get<NotCoordinate>(v.outcome);
      CHECK(n.obstruction == c.expected);
      CHECK(recheck(n.obstruction, n.at_stage));
    }
  }

  TEST_CASE("obstructions are reported at the failing stage") {
    // (y + x^2) composed into x*y: one reduction, then the product gate fails.
    const BiPoly p = P("x*(y + x^2) + x^5");
    const auto v = check(p);
    REQUIRE_FALSE(v.is_coordinate());
    const auto& n = std::get<NotCoordinate>(v.outcome);
    CHECK(recheck(n.obstruction, n.at_stage));
  }

  TEST_CASE("invert reverses and negates") {
    Witness w1{{TriangularY{UniPoly::monomial(1, 2)}}};
    CHECK(invert(w1) == Witness{{TriangularY{UniPoly::monomial(-1, 2)}}});
    Witness w2{{Linear::swap()}};
    CHECK(invert(w2) == w2);
    Witness w3{{TriangularY{UniPoly::monomial(1, 2)}, TriangularX{UniPoly::monomial(1, 3)}}};
    CHECK(invert(w3) == Witness{{TriangularX{UniPoly::monomial(-1, 3)}, TriangularY{UniPoly::monomial(-1, 2)}}});
  }

  TEST_CASE("apply_witness examples") {
    CHECK(apply_witness(Witness{}) == std::make_pair(P("x"), P("y")));
    CHECK(apply_witness(Witness{{TriangularY{UniPoly::monomial(1, 2)}}}) == std::make_pair(P("x"), P("y + x^2")));
    // s1 ∘ s2 with s1 = (x, y + x^2), s2 = swap: (x, y) ↦ s1(y, x) = (y, x + y^2).
    const Witness w{{TriangularY{UniPoly::monomial(1, 2)}, Linear::swap()}};
    const auto [X, Y] = apply_witness(w);
    CHECK(X == P("y"));
    CHECK(Y == P("x + y^2"));
    const auto [s1x, s1y] = components(w.steps[0]);
    const auto [s2x, s2y] = components(w.steps[1]);
    CHECK(substitute(s1x, s2x, s2y) == X);
    CHECK(substitute(s1y, s2x, s2y) == Y);
  }

  TEST_CASE("pair identity for random witnesses") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Witness w = gen_random_coordinate(seed, 2, 3, 4).truth;
      const auto [X, Y] = apply_witness(w);
      const auto [Xi, Yi] = apply_witness(invert(w));
      CHECK(substitute(Xi, X, Y) == P("x"));
      CHECK(substitute(Yi, X, Y) == P("y"));
      Rat jac = 1;
      for (const auto& s : w.steps) jac *= jacobian(s);
      CHECK(jacobian_det(X, Y) == BiPoly(jac));
    }
  }

  TEST_CASE("generator is deterministic and within the degree bound") {
    const auto a = gen_random_coordinate(7, 3, 3, 5), b = gen_random_coordinate(7, 3, 3, 5);
    CHECK(a.p == b.p);
    CHECK(a.truth == b.truth);
    CHECK_FALSE(gen_random_coordinate(8, 3, 3, 5).p == a.p);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = gen_random_coordinate(seed, 2, 3, 5);
      CHECK(g.p.total_degree() <= 9);
      CHECK(substitute(g.p, apply_witness(g.truth).first, apply_witness(g.truth).second) == P("x"));
    }
    CHECK(gen_random_coordinate(1, 1, 2, 3).p.total_degree() <= 2);
    CHECK_THROWS_AS(gen_random_coordinate(0, 0, 2, 3), UsageError);
  }

  TEST_CASE("closed loop over generated coordinates") {
    Rng rng(99);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const int steps = 1 + static_cast<int>(seed % 3);
      const auto g = gen_random_coordinate(seed, steps, 3, 5);
      const auto v = check(g.p);
      REQUIRE(v.is_coordinate());
      const auto& c = std::get<Coordinate>(v.outcome);
      CHECK(replays_to_x(g.p, c.witness, rng));
      const BiPoly j = jacobian_det(g.p, c.complement);
      CHECK(j.is_constant());
      CHECK_FALSE(j.is_zero());
      CHECK(j.constant_term() == c.jac);
    }
  }

  TEST_CASE("verdict kind is stable under linear changes of variables") {
    Rng rng(12);
    const char* inputs[] = {"x*y", "y + x^3", "x^2 + y^3", "(y - 2*x)^3 + x", "x^3 + y^3 + x"};
    for (const char* s : inputs) {
      for (int t = 0; t < 4; ++t) {
        const BiPoly p = P(s);
        const BiPoly q = compose_step(p, random_linear(rng));
        CAPTURE(s);
        const auto vp = check(p), vq = check(q);
        CHECK(vp.is_coordinate() == vq.is_coordinate());
        if (vq.is_coordinate()) CHECK(replays_to_x(q, std::get<Coordinate>(vq.outcome).witness, rng));
      }
    }
  }

  TEST_CASE("degree strictly decreases along a reduction") {
    const auto g = gen_random_coordinate(3, 3, 3, 4);
    BiPoly stage = g.p;
    int iterations = 0;
    const int budget = g.p.degx() + g.p.degy();
    while (stage.total_degree() > 1 && stage.degx() >= 1 && stage.degy() >= 1) {
      auto r = reduce_step(stage);
      REQUIRE(std::holds_alternative<ReduceStep>(r));
      const BiPoly& next = std::get<ReduceStep>(r).next;
      CHECK(next.degx() + next.degy() < stage.degx() + stage.degy());
      stage = next;
      ++iterations;
    }
    CHECK(iterations <= budget);
  }

  TEST_CASE("degree guard aborts instead of looping") {
    CheckOptions opts;
    opts.degree_guard = 3;
    CHECK_THROWS_AS(check(P("(y + x^2)^2 + y"), opts), InternalVerificationFailure);
    CHECK(check(P("(y + x^2)^2 + y")).is_coordinate() == false);
  }
}
