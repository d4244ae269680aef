#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trs/construct.hpp"
#include "trs/equiv.hpp"
#include "trs/mdscheck.hpp"

namespace trs {

enum class Family { Star, Plus, Twisted, RothLempel };

/// Where infinity may appear as an evaluation point in the general census.
enum class InfinityPolicy {
  Excluded,  // alpha within F_q
  HookOnly,  // infinity only together with h = k-1 ("strict")
  AnyHook,   // infinity for every hook ("liberal")
};

/// Upper end of the twist range in the general census.
enum class TwistRange {
  Redundancy,  // t <= n-k
  FieldOrder,  // t <= q-1-k, twist degree below q-1
};

std::string to_string(Family f);
std::string to_string(InfinityPolicy p);
std::string to_string(TwistRange r);
Family parse_family(const std::string& s);
InfinityPolicy parse_infinity_policy(const std::string& s);
TwistRange parse_twist_range(const std::string& s);

struct CensusOptions {
  std::optional<unsigned> t;
  std::optional<unsigned> h;
  InfinityPolicy inf_policy = InfinityPolicy::AnyHook;
  TwistRange twist_range = TwistRange::FieldOrder;
  /// Worker threads; 0 picks the TRS_JOBS environment variable or the core count.
  unsigned jobs = 0;
  /// Allow k <= 2 or k >= n-2 (every MDS code there is GRS).
  bool allow_small_dimensions = false;
};

struct CensusRow {
  unsigned q = 0;
  unsigned n = 0;
  unsigned k = 0;
  Family family = Family::Twisted;
  std::optional<unsigned> t;
  std::optional<unsigned> h;
  std::size_t total = 0;
  std::size_t inequivalent = 0;
  std::size_t non_grs = 0;
  double seconds = 0.0;
  InfinityPolicy inf_policy = InfinityPolicy::AnyHook;
  TwistRange twist_range = TwistRange::FieldOrder;

  std::string csv_line() const;
  static std::string csv_header();
};

struct ClassInfo {
  std::size_t members = 0;
  bool grs = false;
  LinearCode representative;
  std::string origin;  // parameters of the first tuple producing the class
};

/// GRS statistics of one (alpha, t, h) family over its MDS etas.
struct EtaFamily {
  EvalPoints alpha;
  unsigned t = 0;
  unsigned h = 0;
  std::size_t mds_etas = 0;
  std::size_t grs_etas = 0;
};

struct CensusResult {
  CensusRow row;
  std::map<CanonicalSignature, ClassInfo> classes;
  /// Twisted census with 2 < k < n-2 only. Largest GRS eta count per family:
  /// finite alpha, finite alpha with t <= n-k and every eta MDS, alpha
  /// containing infinity.
  std::size_t max_grs_etas_finite = 0;
  std::size_t max_grs_etas_finite_all_mds = 0;
  std::size_t max_grs_etas_infinite = 0;
  /// Families with more than `grs_eta_limit` GRS etas, in enumeration order.
  std::vector<EtaFamily> grs_heavy_families;
  static constexpr std::size_t grs_eta_limit = 6;
};

CensusResult census_star(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options = {});
CensusResult census_plus(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options = {});
CensusResult census_twisted(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options = {});
CensusResult census_roth_lempel(const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options = {});
CensusResult run_census(Family family, const FieldPtr& field, unsigned n, unsigned k, const CensusOptions& options);

/// For each admissible (t,h): does some (alpha-set, eta) give an MDS code.
/// Infinity follows options.inf_policy (callers usually pass Excluded).
std::map<std::pair<unsigned, unsigned>, bool> exotic_existence(const FieldPtr& field, unsigned n, unsigned k,
                                                               const CensusOptions& options = {});

/// Number of equivalence classes present in both results.
std::size_t cross_family_overlap(const CensusResult& a, const CensusResult& b);

/// Field of order q with the default modulus.
FieldPtr field_of_order(unsigned q);

}  // namespace trs
