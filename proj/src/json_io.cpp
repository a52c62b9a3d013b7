#include "jaccoord/json_io.hpp"

#include <algorithm>

namespace jaccoord::json_io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

json mono(const Mono& m) { return json::array({m.i, m.j}); }

json rats(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat(r));
  return out;
}

}  // namespace

json rat(const Rat& r) { return to_string(r); }

json step(const ElementaryAuto& s) {
  return std::visit(Overloaded{
                        [](const Linear& l) {
                          return json{{"kind", "Linear"}, {"a", rat(l.a)}, {"b", rat(l.b)}, {"c", rat(l.c)},
                                      {"d", rat(l.d)},    {"e", rat(l.e)}, {"f", rat(l.f)}};
                        },
                        [](const TriangularY& t) { return json{{"kind", "TriangularY"}, {"phi", t.phi.to_string('x')}}; },
                        [](const TriangularX& t) { return json{{"kind", "TriangularX"}, {"psi", t.psi.to_string('y')}}; },
                    },
                    s);
}

json witness(const Coordinate& c) {
  json steps = json::array();
  for (const auto& s : c.witness.steps) steps.push_back(step(s));
  return json{{"steps", steps}, {"complement", c.complement.to_string()}, {"jacobian", rat(c.jac)}};
}

json obstruction(const Obstruction& o) {
  json out = std::visit(Overloaded{
                            [](const PolygonNotTriangle& g) {
                              return json{{"point", mono(g.point)}, {"missing_vertex", g.missing_vertex}};
                            },
                            [](const FaceNotBinomialPower& g) { return json{{"k", g.k}}; },
                            [](const FaceExponentsBothExceedOne& g) { return json{{"p", g.p}, {"q", g.q}}; },
                            [](const UnivariateNonlinear& g) {
                              return json{{"var", g.var == Var::X ? "x" : "y"}, {"degree", g.degree}};
                            },
                            [](const ConstantPolynomial&) { return json::object(); },
                        },
                        o);
  out["kind"] = obstruction_kind(o);
  return out;
}

json verdict(const BiPoly& input, const CoordinateVerdict& v) {
  if (const auto* c = std::get_if<Coordinate>(&v.outcome)) {
    json out = witness(*c);
    out["outcome"] = "coordinate";
    out["input"] = input.to_string();
    return out;
  }
  const auto& n = std::get<NotCoordinate>(v.outcome);
  return json{{"outcome", "not_coordinate"},
              {"input", input.to_string()},
              {"obstruction", obstruction(n.obstruction)},
              {"at_stage", n.at_stage.to_string()}};
}

json polygon(const BiPoly& p) {
  const LatticePolygon poly = newton_polygon(p);
  const LatticeCounts lc = lattice_counts(poly);
  json verts = json::array();
  for (const auto& v : poly.vertices) verts.push_back(mono(v));
  json es = json::array();
  if (poly.dim >= 1) {
    for (const auto& e : edges(poly))
      es.push_back(json{{"from", mono(e.from)},
                        {"to", mono(e.to)},
                        {"lattice_length", e.lattice_length},
                        {"normal", json::array({e.normal_x, e.normal_y})}});
  }
  json out{{"input", p.to_string()},
           {"vertices", verts},
           {"edges", es},
           {"dim", poly.dim},
           {"interior", lc.interior},
           {"boundary", lc.boundary},
           {"twice_area", lc.twice_area},
           {"triangle", false},
           {"face", nullptr}};
  if (p.degx() >= 1 && p.degy() >= 1) {
    auto tri = triangle_face(p);
    if (const auto* face = std::get_if<TriangleFace>(&tri)) {
      out["triangle"] = true;
      json f{{"dx", face->dx}, {"dy", face->dy}, {"edge", face->edge.to_string()}};
      auto form = face_binomial_power(*face);
      if (const auto* ff = std::get_if<FaceForm>(&form)) {
        f["binomial_power"] =
            json{{"C", rat(ff->C)}, {"a", rat(ff->a)}, {"p", ff->p}, {"q", ff->q}, {"m", ff->m}};
        f["not_binomial_power_at"] = nullptr;
      } else {
        f["binomial_power"] = nullptr;
        f["not_binomial_power_at"] = std::get<FaceNotBinomialPower>(form).k;
      }
      out["face"] = f;
    } else {
      out["not_triangle"] = obstruction(std::get<PolygonNotTriangle>(tri));
    }
  }
  return out;
}

json count(const Count& c) {
  if (const auto* v = std::get_if<long long>(&c)) return *v;
  return json{{"unknown", to_string(std::get<Unknown>(c).reason)}};
}

json fibre(const FibreReport& r) {
  return json{{"c", rat(r.c)},
              {"abs_factor_count", r.abs_factor_count},
              {"multiplicity_reduced", r.multiplicity_reduced},
              {"nondegenerate", r.nondegenerate},
              {"genus", count(r.genus)},
              {"branches_at_infinity", count(r.branches_at_infinity)}};
}

json special_values(const SpecialValues& sv) {
  json irr = json::array();
  for (const auto& w : sv.irrational_witnesses)
    irr.push_back(json{{"minpoly", w.minpoly.to_string('c')}, {"source", w.source}});
  return json{{"rational_candidates", rats(sv.rational_candidates)},
              {"irrational_witnesses", irr},
              {"ruppert_component", sv.ruppert_component}};
}

json violation(const Violation& v) {
  json out = std::visit(Overloaded{
                            [](const NoViolation&) { return json::object(); },
                            [](const ReducibleFibre& r) { return json{{"c", rat(r.c)}}; },
                            [](const GenusJump& g) { return json{{"c1", rat(g.c1)}, {"c2", rat(g.c2)}}; },
                            [](const Inconclusive& i) {
                              json mp = json::array();
                              for (const auto& u : i.unsampled_minpolys) mp.push_back(u.to_string('c'));
                              return json{{"unknown_cs", rats(i.unknown_cs)},
                                          {"unsampled_minpolys", mp},
                                          {"ruppert_skipped", i.ruppert_skipped}};
                            },
                        },
                        v);
  out["kind"] = violation_kind(v);
  return out;
}

namespace {

json optional_int(const std::optional<long long>& v) { return v ? json(*v) : json(nullptr); }
json optional_rat(const std::optional<Rat>& v) { return v ? rat(*v) : json(nullptr); }

}  // namespace

json scan(const ScanReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    json j = fibre(s);
    j["special"] = std::binary_search(r.special_cs.begin(), r.special_cs.end(), s.c);
    samples.push_back(j);
  }
  json irr = json::array();
  for (const auto& w : r.irrational_special_values)
    irr.push_back(json{{"minpoly", w.minpoly.to_string('c')}, {"source", w.source}});
  json out{{"verdict", r.verdict.is_coordinate() ? "coordinate" : "not_coordinate"},
           {"samples", samples},
           {"irrational_special_values", irr},
           {"ruppert_component", r.ruppert_component},
           {"generic_genus", optional_int(r.generic_genus)},
           {"generic_genus_c", optional_rat(r.generic_genus_c)},
           {"generic_branches", optional_int(r.generic_branches)},
           {"generic_branches_c", optional_rat(r.generic_branches_c)},
           {"genus_constant_on_known", r.genus_constant_on_known},
           {"all_sampled_irreducible", r.all_sampled_irreducible},
           {"violation", violation(r.violation)},
           {"relation_failures", rats(r.relation_failures)},
           {"theorem_violation_suspected", r.theorem_violation_suspected}};
  if (const auto* n = std::get_if<NotCoordinate>(&r.verdict.outcome))
    out["obstruction"] = obstruction_kind(n->obstruction);
  return out;
}

json generated(const GeneratedCoordinate& g) {
  json steps = json::array();
  for (const auto& s : g.truth.steps) steps.push_back(step(s));
  return json{{"p", g.p.to_string()}, {"total_degree", g.p.total_degree()}, {"witness", json{{"steps", steps}}}};
}

json error(const std::string& kind, const std::string& detail) {
  return json{{"error", json{{"kind", kind}, {"detail", detail}}}};
}

}  // namespace jaccoord::json_io
