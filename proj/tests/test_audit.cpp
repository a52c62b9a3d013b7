#include "doctest.h"

#include <algorithm>

#include "jaccoord/audit.hpp"
#include "jaccoord/errors.hpp"
#include "jaccoord/json_io.hpp"
#include "jaccoord/parse.hpp"

using namespace jaccoord;

namespace {

BiPoly P(const char* s) { return parse_poly(s); }

bool contains(const std::vector<Rat>& v, const Rat& r) { return std::find(v.begin(), v.end(), r) != v.end(); }

std::string dump(const ScanReport& r) { return json_io::scan(r).dump(2); }

}  // namespace

TEST_SUITE("audit") {
  TEST_CASE("relation check examples") {
    CHECK(relation_check(0, 1));
    CHECK_FALSE(relation_check(1, 1));
    CHECK_FALSE(relation_check(0, 2));
    for (long long g = 0; g < 5; ++g)
      for (long long h = 0; h < 5; ++h) CHECK(relation_check(g, h) == (g == 0 && h == 1));
  }

  TEST_CASE("product of coordinates splits at zero") {
    const ScanReport r = theorem3_scan(P("x*y"), 8, 0);
    CHECK_FALSE(r.verdict.is_coordinate());
    REQUIRE(std::holds_alternative<ReducibleFibre>(r.violation));
    CHECK(std::get<ReducibleFibre>(r.violation).c == 0);
    CHECK(contains(r.special_cs, 0));
    CHECK_FALSE(r.all_sampled_irreducible);
    CHECK_FALSE(r.theorem_violation_suspected);
  }

  TEST_CASE("fibre atypical at infinity is found") {
    const ScanReport r = theorem3_scan(P("x + x^2*y"), 8, 0);
    CHECK_FALSE(r.verdict.is_coordinate());
    REQUIRE(std::holds_alternative<ReducibleFibre>(r.violation));
    CHECK(std::get<ReducibleFibre>(r.violation).c == 0);
    CHECK_FALSE(r.theorem_violation_suspected);
  }

  TEST_CASE("cusp fibre is named while the generic genus is one") {
    const ScanReport r = theorem3_scan(P("y^2 - x^3"), 8, 0);
    CHECK_FALSE(r.verdict.is_coordinate());
    REQUIRE(r.generic_genus.has_value());
    CHECK(*r.generic_genus == 1);
    bool names_zero = false;
    if (const auto* j = std::get_if<GenusJump>(&r.violation)) names_zero = j->c1 == 0 || j->c2 == 0;
    if (const auto* i = std::get_if<Inconclusive>(&r.violation)) names_zero = contains(i->unknown_cs, 0);
    CHECK(names_zero);
    CHECK_FALSE(r.theorem_violation_suspected);
  }

  TEST_CASE("elliptic curve as a map has generic genus one") {
    const ScanReport r = theorem3_scan(P("y^2 - x^3 - x - 1"), 8, 0);
    CHECK_FALSE(r.verdict.is_coordinate());
    REQUIRE(r.generic_genus.has_value());
    CHECK(*r.generic_genus == 1);
    CHECK_FALSE(std::holds_alternative<NoViolation>(r.violation));
    CHECK_FALSE(r.theorem_violation_suspected);
  }

  TEST_CASE("generated coordinates satisfy the relation on every known sample") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto g = gen_random_coordinate(seed, 1 + static_cast<int>(seed % 2), 3, 4);
      const ScanReport r = theorem3_scan(g.p, 6, seed);
      CAPTURE(g.p.to_string());
      CHECK(r.verdict.is_coordinate());
      CHECK(r.relation_failures.empty());
      CHECK(r.all_sampled_irreducible);
      CHECK_FALSE(r.theorem_violation_suspected);
      CHECK_FALSE(std::holds_alternative<ReducibleFibre>(r.violation));
      CHECK_FALSE(std::holds_alternative<GenusJump>(r.violation));
      for (const auto& s : r.samples) {
        if (known(s.genus)) CHECK(std::get<long long>(s.genus) == 0);
        if (known(s.branches_at_infinity)) CHECK(std::get<long long>(s.branches_at_infinity) == 1);
      }
    }
  }

  TEST_CASE("sample set is sorted, deduplicated and contains rational special values") {
    SpecialValues sv;
    const auto cs = scan_sample_values(P("y^2 - (x^3 - 3*x)"), 10, 4, &sv);
    CHECK(std::is_sorted(cs.begin(), cs.end()));
    CHECK(std::adjacent_find(cs.begin(), cs.end()) == cs.end());
    for (const auto& c : sv.rational_candidates) CHECK(contains(cs, c));
    CHECK(contains(cs, 2));
    CHECK(contains(cs, -2));
    CHECK(cs.size() <= 10 + sv.rational_candidates.size());
  }

  TEST_CASE("violation invariants") {
    for (const char* s : {"x*y", "x + x^2*y", "y^2 - x^3", "x^3 + y^3", "x^2 + y^3", "x^2 - y^2 + x"}) {
      CAPTURE(s);
      const ScanReport r = theorem3_scan(P(s), 6, 1);
      CHECK(std::is_sorted(r.samples.begin(), r.samples.end(), [](const auto& a, const auto& b) { return a.c < b.c; }));
      if (const auto* rf = std::get_if<ReducibleFibre>(&r.violation)) {
        const auto it = std::find_if(r.samples.begin(), r.samples.end(), [&](const auto& f) { return f.c == rf->c; });
        REQUIRE(it != r.samples.end());
        CHECK(it->abs_factor_count > 1);
      }
      if (const auto* gj = std::get_if<GenusJump>(&r.violation)) {
        Count g1, g2;
        for (const auto& f : r.samples) {
          if (f.c == gj->c1) g1 = f.genus;
          if (f.c == gj->c2) g2 = f.genus;
        }
        REQUIRE(known(g1));
        REQUIRE(known(g2));
        CHECK(g1 != g2);
      }
      CHECK_FALSE(r.theorem_violation_suspected);
    }
  }

  TEST_CASE("parallel and serial sampling agree byte for byte") {
    const BiPoly p = P("x^2*y + y^3 - x");
    const auto cs = scan_sample_values(p, 10, 3);
    const auto par = fibre_reports(p, cs, 3, true), ser = fibre_reports(p, cs, 3, false);
    REQUIRE(par.size() == ser.size());
    for (std::size_t k = 0; k < par.size(); ++k) CHECK(json_io::fibre(par[k]).dump() == json_io::fibre(ser[k]).dump());

    ScanOptions serial;
    serial.parallel = false;
    CHECK(dump(theorem3_scan(p, 10, 3)) == dump(theorem3_scan(p, 10, 3, serial)));
  }

  TEST_CASE("scan is deterministic for a fixed seed") {
    const BiPoly p = P("y^2 - x^3 + x*y");
    CHECK(dump(theorem3_scan(p, 6, 11)) == dump(theorem3_scan(p, 6, 11)));
  }

  TEST_CASE("scan preconditions") {
    CHECK_THROWS_AS(theorem3_scan(P("3"), 4, 0), ConstantInput);
    CHECK_THROWS_AS(theorem3_scan(P("x"), 0, 0), UsageError);
  }
}
