#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jaccoord/coordinate.hpp"
#include "jaccoord/fibre.hpp"

namespace jaccoord {

/// 2g == 1 − h.
bool relation_check(long long g, long long h);

struct NoViolation {
  friend bool operator==(const NoViolation&, const NoViolation&) = default;
};
struct ReducibleFibre {
  Rat c;
  friend bool operator==(const ReducibleFibre&, const ReducibleFibre&) = default;
};
struct GenusJump {
  Rat c1;
  Rat c2;
  friend bool operator==(const GenusJump&, const GenusJump&) = default;
};
/// Samples whose genus is Unknown, plus special values that could not be
/// sampled because they are irrational (or not computed at all).
struct Inconclusive {
  std::vector<Rat> unknown_cs;
  std::vector<UniPoly> unsampled_minpolys;
  bool ruppert_skipped = false;
};

using Violation = std::variant<NoViolation, ReducibleFibre, GenusJump, Inconclusive>;

std::string violation_kind(const Violation& v);

struct ScanReport {
  CoordinateVerdict verdict;
  /// Sorted by c.
  std::vector<FibreReport> samples;
  /// Values of c that came from special_value_candidates.
  std::vector<Rat> special_cs;
  std::vector<IrrationalWitness> irrational_special_values;
  bool ruppert_component = true;

  /// Most frequent known genus over the random samples; ties go to the value
  /// seen at the smallest c.
  std::optional<long long> generic_genus;
  std::optional<Rat> generic_genus_c;
  /// Same rule for branches at infinity (the horizontal-curve count h).
  std::optional<long long> generic_branches;
  std::optional<Rat> generic_branches_c;

  bool genus_constant_on_known = true;
  bool all_sampled_irreducible = true;
  Violation violation;

  /// Samples with known genus and branches where 2g = 1 − h failed
  /// (only checked for Coordinate verdicts).
  std::vector<Rat> relation_failures;
  /// The report contradicts the classification theorem: a non-coordinate
  /// with no evidence against the hypothesis, or a coordinate whose fibres
  /// are reducible, change genus, or fail the relation.
  bool theorem_violation_suspected = false;
};

struct ScanOptions {
  bool parallel = true;
  CheckOptions check = {};
};

/// Random samples have numerator and denominator bounded by this height.
inline constexpr long long kSampleHeight = 16;

/// Samples n_random seeded rationals together with the rational special
/// values of p, reports every fibre and classifies the evidence against the
/// verdict of check(p).
ScanReport theorem3_scan(const BiPoly& p, int n_random, std::uint64_t seed, const ScanOptions& opts = {});

/// The sample set used by theorem3_scan, sorted and without duplicates.
std::vector<Rat> scan_sample_values(const BiPoly& p, int n_random, std::uint64_t seed, SpecialValues* special = nullptr);

/// fibre_report for every c, in input order.
std::vector<FibreReport> fibre_reports(const BiPoly& p, const std::vector<Rat>& cs, std::uint64_t seed,
                                       bool parallel);

}  // namespace jaccoord
