#pragma once

// Cross-module invariant checks. Each check counts the cases it ran and the
// cases that falsified it; the suite runs them all.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace trisect {

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t falsified = 0;
  std::string first_failure;

  void record(bool holds, const std::string& what);
  bool ok() const { return falsified == 0; }
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::uint64_t falsifications() const;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  unsigned shards = 1;
  bool full = false;  // full-scale ranges instead of the quick ones
};

// Arithmetic and polynomials.
CheckResult check_canonical_forms(std::uint64_t seed, int n);
CheckResult check_field_laws(std::uint64_t seed, int n);
CheckResult check_interval_agreement(std::uint64_t seed, int n);
CheckResult check_height_symmetry(std::uint64_t seed, int n);
CheckResult check_poly_ring_laws(std::uint64_t seed, int n);
CheckResult check_planted_roots(std::uint64_t seed, int n);
CheckResult check_resultant_numerics();
CheckResult check_cyclotomic_products(std::uint64_t max_m);
CheckResult check_cos_minimal_polys(std::uint64_t max_m);
CheckResult check_chebyshev_tower(std::uint64_t max_n);

// Coprime counting.
CheckResult check_sieve_random(std::uint64_t seed, int n);
CheckResult check_floor_invariance(std::uint64_t seed, int n);
CheckResult check_count_monotone(std::uint64_t seed, int n);
CheckResult check_perturbation_bound(std::uint64_t seed, int n);
CheckResult check_error_scaling(const std::vector<std::int64_t>& Ns);

// Height balls.
CheckResult check_ball_counts(std::int64_t max_rational_R, std::int64_t max_quadratic_R);
CheckResult check_ball_nesting(std::uint64_t seed, int n);
CheckResult check_ball_asymptotics(std::int64_t rational_R, std::int64_t quadratic_R);
CheckResult check_qbox_membership(std::int64_t max_R, std::uint64_t cap);
CheckResult check_qbox_main_term(std::int64_t rational_R, std::int64_t quadratic_R, std::uint64_t cap);

// Trisection numbers.
CheckResult check_search_bound(std::int64_t max_rational_R, std::int64_t max_quadratic_R);
CheckResult check_fast_path_equivalence(std::int64_t R);
CheckResult check_ambient_consistency(std::int64_t H);
/// Also checks each member witness: f(beta) = a exactly and |beta| <= 2.
CheckResult check_numerator_identity(std::int64_t max_rational_R, std::int64_t max_quadratic_R, unsigned shards);
CheckResult check_gcd_bound(std::int64_t R, const std::vector<std::int64_t>& ds);
CheckResult check_density_monotone(unsigned shards);

// n-section and degrees.
CheckResult check_psection_numerics(std::uint64_t max_p, std::uint64_t seed, int samples);
CheckResult check_psection_structure(std::uint64_t max_p);
CheckResult check_psection_certificates(std::uint64_t seed, int n);
CheckResult check_tower_numerics(std::uint64_t max_n, std::uint64_t seed, int samples);
CheckResult check_degrees(std::uint64_t max_a, std::uint64_t max_cd);
CheckResult check_identities(std::uint64_t N);

SuiteReport verify_suite(const VerifyConfig& config);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace trisect
