#include "jaccoord/audit.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "jaccoord/errors.hpp"
#include "jaccoord/random.hpp"

namespace jaccoord {

bool relation_check(long long g, long long h) { return 2 * g == 1 - h; }

std::string violation_kind(const Violation& v) {
  struct Visitor {
    std::string operator()(const NoViolation&) const { return "none"; }
    std::string operator()(const ReducibleFibre&) const { return "ReducibleFibre"; }
    std::string operator()(const GenusJump&) const { return "GenusJump"; }
    std::string operator()(const Inconclusive&) const { return "Inconclusive"; }
  };
  return std::visit(Visitor{}, v);
}

std::vector<Rat> scan_sample_values(const BiPoly& p, int n_random, std::uint64_t seed, SpecialValues* special) {
  if (p.is_constant()) throw ConstantInput("theorem3_scan");
  if (n_random < 1) throw UsageError("theorem3_scan: n_random must be >= 1");
  Rng rng(seed);
  std::vector<Rat> cs;
  for (int k = 0; k < n_random; ++k) cs.push_back(rng.rational(kSampleHeight));
  SpecialValues sv = special_value_candidates(p);
  cs.insert(cs.end(), sv.rational_candidates.begin(), sv.rational_candidates.end());
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  if (special) *special = std::move(sv);
  return cs;
}

std::vector<FibreReport> fibre_reports(const BiPoly& p, const std::vector<Rat>& cs, std::uint64_t seed,
                                       bool parallel) {
  std::vector<FibreReport> out(cs.size());
  if (!parallel) {
    for (std::size_t k = 0; k < cs.size(); ++k) out[k] = fibre_report(p, cs[k], seed);
    return out;
  }
  std::vector<std::exception_ptr> failures(cs.size());
  const long n = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = fibre_report(p, cs[idx], seed);
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

namespace {

// Most frequent value over the given (c, value) pairs in ascending c; ties
// go to the value first seen. Returns the value and the c that first had it.
std::optional<std::pair<long long, Rat>> mode(const std::vector<std::pair<Rat, long long>>& seen) {
  std::map<long long, std::pair<int, std::size_t>> tally;  // value -> (count, first index)
  for (std::size_t k = 0; k < seen.size(); ++k) {
    auto [it, fresh] = tally.try_emplace(seen[k].second, 0, k);
    ++it->second.first;
  }
  std::optional<std::pair<long long, Rat>> best;
  int best_count = 0;
  std::size_t best_first = 0;
  for (const auto& [value, cf] : tally) {
    if (!best || cf.first > best_count || (cf.first == best_count && cf.second < best_first)) {
      best = std::make_pair(value, seen[cf.second].first);
      best_count = cf.first;
      best_first = cf.second;
    }
  }
  return best;
}

}  // namespace

ScanReport theorem3_scan(const BiPoly& p, int n_random, std::uint64_t seed, const ScanOptions& opts) {
  ScanReport rep;
  SpecialValues sv;
  const std::vector<Rat> cs = scan_sample_values(p, n_random, seed, &sv);
  rep.special_cs = sv.rational_candidates;
  rep.irrational_special_values = sv.irrational_witnesses;
  rep.ruppert_component = sv.ruppert_component;
  rep.samples = fibre_reports(p, cs, seed, opts.parallel);
  rep.verdict = check(p, opts.check);

  std::vector<std::pair<Rat, long long>> random_genus, random_branches;
  std::optional<long long> first_genus;
  std::optional<Rat> first_genus_c, jump_c;
  std::optional<Rat> reducible_c;
  std::vector<Rat> unknown_cs;
  for (const auto& s : rep.samples) {
    const bool special = std::binary_search(rep.special_cs.begin(), rep.special_cs.end(), s.c);
    if (s.abs_factor_count > 1) {
      rep.all_sampled_irreducible = false;
      if (!reducible_c) reducible_c = s.c;
    }
    if (const auto* g = std::get_if<long long>(&s.genus)) {
      if (!first_genus) {
        first_genus = *g;
        first_genus_c = s.c;
      } else if (*g != *first_genus && !jump_c) {
        jump_c = s.c;
        rep.genus_constant_on_known = false;
      }
      if (!special) random_genus.emplace_back(s.c, *g);
    } else {
      unknown_cs.push_back(s.c);
    }
    if (const auto* h = std::get_if<long long>(&s.branches_at_infinity))
      if (!special) random_branches.emplace_back(s.c, *h);
  }
  if (auto m = mode(random_genus)) {
    rep.generic_genus = m->first;
    rep.generic_genus_c = m->second;
  }
  if (auto m = mode(random_branches)) {
    rep.generic_branches = m->first;
    rep.generic_branches_c = m->second;
  }

  if (reducible_c) {
    rep.violation = ReducibleFibre{*reducible_c};
  } else if (jump_c) {
    rep.violation = GenusJump{*first_genus_c, *jump_c};
  } else if (!unknown_cs.empty() || !sv.irrational_witnesses.empty() || !sv.ruppert_component) {
    Inconclusive inc;
    inc.unknown_cs = std::move(unknown_cs);
    for (const auto& w : sv.irrational_witnesses) inc.unsampled_minpolys.push_back(w.minpoly);
    inc.ruppert_skipped = !sv.ruppert_component;
    rep.violation = std::move(inc);
  } else {
    rep.violation = NoViolation{};
  }

  if (rep.verdict.is_coordinate()) {
    for (const auto& s : rep.samples) {
      const auto* g = std::get_if<long long>(&s.genus);
      const auto* h = std::get_if<long long>(&s.branches_at_infinity);
      if (g && h && !relation_check(*g, *h)) rep.relation_failures.push_back(s.c);
    }
    const bool contradiction = std::holds_alternative<ReducibleFibre>(rep.violation) ||
                               std::holds_alternative<GenusJump>(rep.violation);
    rep.theorem_violation_suspected = contradiction || !rep.relation_failures.empty();
  } else {
    rep.theorem_violation_suspected = std::holds_alternative<NoViolation>(rep.violation);
  }
  return rep;
}

}  // namespace jaccoord
