#pragma once

// JSON (canonical) and CSV (projection) forms of every report, and atomic
// file output.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "trisect/algdeg.hpp"
#include "trisect/coprime_count.hpp"
#include "trisect/height_enum.hpp"
#include "trisect/trisect_core.hpp"

namespace trisect {

/// |B_K(R)| against its main term, |B_K(R) ∩ [-2, 2]|, and the Q(R) box when R >= k + 1.
struct BoxcountReport {
  FieldDescriptor field;
  std::int64_t R = 0;
  BigInt count;
  double main_term = 0;
  double ratio = 0;
  BigInt interval_count;
  std::optional<QBoxReport> qbox;
};
BoxcountReport boxcount_report(const FieldDescriptor& field, std::int64_t R, std::uint64_t cap, std::uint64_t seed,
                               unsigned shards = 1);

struct AlgdegReport {
  std::uint64_t n = 0;
  std::vector<TowerReport> towers;
  std::vector<DegreeCheck> a_degrees;
  std::vector<DegreeCheck> c_degrees;
  std::vector<DegreeCheck> d_degrees;
  IdentityReport identities;
  bool ok() const;
};
/// Everything for 1 <= i <= n.
AlgdegReport algdeg_report(std::uint64_t n, std::uint64_t degree_cap = kDefaultDegreeCap);

nlohmann::json field_json(const FieldDescriptor& field);

nlohmann::json to_json(const TrisectionVerdict& v);
nlohmann::json to_json(const DensityReport& r);
nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const QBoxReport& r);
nlohmann::json to_json(const BoxcountReport& r);
nlohmann::json to_json(const TowerReport& r);
nlohmann::json to_json(const DegreeCheck& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const AlgdegReport& r);

/// R,num,den,delta
std::string to_csv(const DensityReport& r);
/// k,side1,...,sidek,count,main_term,error,f_k,eccentricity
std::string to_csv(const CountReport& r);
/// field,d,R,count,mainterm,ratio
std::string to_csv(const BoxcountReport& r);

std::string format_double(double v);

/// Writes to a sibling temporary file, then renames it over path.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace trisect
