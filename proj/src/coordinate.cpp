#include "jaccoord/coordinate.hpp"

#include <cstdlib>
#include <string>

#include "jaccoord/errors.hpp"
#include "jaccoord/random.hpp"

namespace jaccoord {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

BiPoly linear_form(const Rat& a, const Rat& b, const Rat& e, const BiPoly& X, const BiPoly& Y) {
  return X.scaled(a) + Y.scaled(b) + BiPoly(e);
}

// s ∘ (X, Y).
std::pair<BiPoly, BiPoly> apply_step_outer(const ElementaryAuto& s, const BiPoly& X, const BiPoly& Y) {
  return std::visit(
      Overloaded{
          [&](const Linear& l) -> std::pair<BiPoly, BiPoly> {
            return {linear_form(l.a, l.b, l.e, X, Y), linear_form(l.c, l.d, l.f, X, Y)};
          },
          [&](const TriangularY& t) -> std::pair<BiPoly, BiPoly> { return {X, Y + compose_uni(t.phi, X)}; },
          [&](const TriangularX& t) -> std::pair<BiPoly, BiPoly> { return {X + compose_uni(t.psi, Y), Y}; },
      },
      s);
}

}  // namespace

std::pair<BiPoly, BiPoly> components(const ElementaryAuto& s) {
  return apply_step_outer(s, BiPoly::x(), BiPoly::y());
}

ElementaryAuto inverse(const ElementaryAuto& s) {
  return std::visit(Overloaded{
                        [](const Linear& l) -> ElementaryAuto {
                          const Rat det = l.det();
                          Linear inv;
                          inv.a = l.d / det;
                          inv.b = -l.b / det;
                          inv.c = -l.c / det;
                          inv.d = l.a / det;
                          inv.e = -(inv.a * l.e + inv.b * l.f);
                          inv.f = -(inv.c * l.e + inv.d * l.f);
                          return inv;
                        },
                        [](const TriangularY& t) -> ElementaryAuto { return TriangularY{-t.phi}; },
                        [](const TriangularX& t) -> ElementaryAuto { return TriangularX{-t.psi}; },
                    },
                    s);
}

Rat jacobian(const ElementaryAuto& s) {
  if (const auto* l = std::get_if<Linear>(&s)) return l->det();
  return 1;
}

BiPoly compose_step(const BiPoly& p, const ElementaryAuto& s) {
  return std::visit(Overloaded{
                        [&](const Linear& l) {
                          const BiPoly x = BiPoly::x(), y = BiPoly::y();
                          return substitute(p, linear_form(l.a, l.b, l.e, x, y), linear_form(l.c, l.d, l.f, x, y));
                        },
                        [&](const TriangularY& t) { return shift_y(p, t.phi); },
                        [&](const TriangularX& t) { return shift_x(p, t.psi); },
                    },
                    s);
}

Witness invert(const Witness& w) {
  Witness out;
  out.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) out.steps.push_back(inverse(*it));
  return out;
}

std::pair<BiPoly, BiPoly> apply_witness(const Witness& w) {
  // Φ = s1 ∘ … ∘ sk, built from the innermost step outwards.
  BiPoly X = BiPoly::x(), Y = BiPoly::y();
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    auto [nx, ny] = apply_step_outer(*it, X, Y);
    X = std::move(nx);
    Y = std::move(ny);
  }
  return {X, Y};
}

std::variant<ReduceStep, Obstruction> reduce_step(const BiPoly& p) {
  if (p.degx() < 1 || p.degy() < 1 || p.total_degree() < 2)
    throw UsageError("reduce_step requires degx >= 1, degy >= 1 and total degree >= 2");
  auto tri = triangle_face(p);
  if (auto* bad = std::get_if<PolygonNotTriangle>(&tri)) return *bad;
  const auto& face = std::get<TriangleFace>(tri);
  auto form = face_binomial_power(face);
  if (auto* bad = std::get_if<FaceNotBinomialPower>(&form)) return *bad;
  const auto& ff = std::get<FaceForm>(form);
  if (ff.p > 1 && ff.q > 1) return FaceExponentsBothExceedOne{ff.p, ff.q};

  if (ff.q == 1) {
    TriangularY step{UniPoly::monomial(ff.a, ff.p)};
    BiPoly next = shift_y(p, step.phi);
    if (next.degx() >= p.degx() || next.degy() != p.degy())
      throw InternalVerificationFailure("reduce_step: y-shift did not lower degx");
    return ReduceStep{step, std::move(next), ff};
  }
  TriangularX step{UniPoly::monomial(1 / ff.a, ff.q)};
  BiPoly next = shift_x(p, step.psi);
  if (next.degy() >= p.degy() || next.degx() > p.degx())
    throw InternalVerificationFailure("reduce_step: x-shift did not lower degy");
  return ReduceStep{step, std::move(next), ff};
}

CheckOptions CheckOptions::from_env() {
  CheckOptions o;
  if (const char* v = std::getenv("JACCOORD_DEGREE_GUARD")) {
    try {
      o.degree_guard = std::stoi(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("JACCOORD_DEGREE_GUARD is not an integer: ") + v);
    }
  }
  return o;
}

namespace {

// The step L with (α·x + β·y + γ)∘L = x.
Linear finishing_step(const BiPoly& p) {
  const Rat alpha = p.coeff(1, 0), beta = p.coeff(0, 1), gamma = p.constant_term();
  Linear l;
  if (sgn(alpha) != 0) {
    l.a = 1 / alpha;
    l.b = -beta / alpha;
    l.e = -gamma / alpha;
    l.c = 0;
    l.d = 1;
    l.f = 0;
  } else {
    l.a = 0;
    l.b = 1;
    l.e = 0;
    l.c = 1 / beta;
    l.d = 0;
    l.f = -gamma / beta;
  }
  return l;
}

}  // namespace

CoordinateVerdict check(const BiPoly& p, const CheckOptions& opts) {
  Witness w;
  BiPoly stage = p;
  for (;;) {
    if (stage.is_constant()) return {NotCoordinate{ConstantPolynomial{}, stage}};
    if (stage.degx() + stage.degy() > opts.degree_guard)
      throw InternalVerificationFailure("degree guard exceeded: degx + degy = " +
                                        std::to_string(stage.degx() + stage.degy()));
    if (stage.total_degree() == 1) {
      w.steps.push_back(finishing_step(stage));
      break;
    }
    if (stage.degy() == 0) return {NotCoordinate{UnivariateNonlinear{Var::X, stage.degx()}, stage}};
    if (stage.degx() == 0) return {NotCoordinate{UnivariateNonlinear{Var::Y, stage.degy()}, stage}};
    auto r = reduce_step(stage);
    if (auto* obs = std::get_if<Obstruction>(&r)) return {NotCoordinate{*obs, stage}};
    auto& rs = std::get<ReduceStep>(r);
    w.steps.push_back(rs.step);
    stage = std::move(rs.next);
  }

  BiPoly replay = p;
  for (const auto& s : w.steps) replay = compose_step(replay, s);
  if (!(replay == BiPoly::x()))
    throw InternalVerificationFailure("witness replay gave " + replay.to_string() + " instead of x");

  auto [first, second] = apply_witness(invert(w));
  if (!(first == p)) throw InternalVerificationFailure("inverse witness does not reproduce P");
  const BiPoly j = jacobian_det(p, second);
  if (!j.is_constant() || j.is_zero())
    throw InternalVerificationFailure("Jacobian of (P, complement) is not a nonzero constant");
  return {Coordinate{std::move(w), std::move(second), j.constant_term()}};
}

bool recheck(const Obstruction& o, const BiPoly& s) {
  return std::visit(
      Overloaded{
          [&](const ConstantPolynomial&) { return s.is_constant(); },
          [&](const UnivariateNonlinear& u) {
            if (s.total_degree() < 2) return false;
            return u.var == Var::X ? (s.degy() == 0 && s.degx() == u.degree)
                                   : (s.degx() == 0 && s.degy() == u.degree);
          },
          [&](const auto& gate) {
            if (s.degx() < 1 || s.degy() < 1 || s.total_degree() < 2) return false;
            auto r = reduce_step(s);
            const auto* got = std::get_if<Obstruction>(&r);
            return got != nullptr && *got == Obstruction{gate};
          },
      },
      o);
}

GeneratedCoordinate gen_random_coordinate(std::uint64_t seed, int steps, int max_step_deg, int coeff_bound) {
  if (steps < 1 || max_step_deg < 1 || coeff_bound < 1)
    throw UsageError("gen_random_coordinate: steps and bounds must be >= 1");
  Rng rng(seed);
  auto draw_linear = [&] {
    Linear l;
    do {
      l.a = rng.rational(coeff_bound);
      l.b = rng.rational(coeff_bound);
      l.c = rng.rational(coeff_bound);
      l.d = rng.rational(coeff_bound);
    } while (sgn(l.det()) == 0);
    l.e = rng.rational(coeff_bound);
    l.f = rng.rational(coeff_bound);
    return l;
  };
  auto draw_triangular = [&]() -> ElementaryAuto {
    const bool y_kind = rng.uniform(0, 1) == 0;
    const int deg = static_cast<int>(rng.uniform(std::min(2, max_step_deg), max_step_deg));
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 1; k < deg; ++k) c[static_cast<std::size_t>(k)] = rng.rational(coeff_bound);
    c[static_cast<std::size_t>(deg)] = rng.nonzero_rational(coeff_bound);
    UniPoly u(std::move(c));
    if (y_kind) return TriangularY{u};
    return TriangularX{u};
  };

  Witness forward;
  for (int t = 0; t < steps; ++t) {
    forward.steps.emplace_back(draw_linear());
    forward.steps.push_back(draw_triangular());
  }
  auto [X, Y] = apply_witness(forward);
  (void)Y;
  return {std::move(X), invert(forward)};
}

}  // namespace jaccoord
