// Comparison of a surgery K(p/q) against Seifert candidates M(p_1/q_1, ..., p_m/q_m).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtorsion/seifert.hpp"

namespace rt {

struct ObstructGroup {
  PermGroup group;
  /// Counting only when absent.
  std::optional<Representation> phi;
};

struct ObstructOptions {
  int m = 3;
  long max_p = 16;
  /// Bound on |q_i|; 0 means |q_i| < p_i.
  long max_q = 0;
  /// 0 = RTORSION_WORKERS or the hardware concurrency.
  int workers = 0;
};

enum class Verdict { Incompatible, CompatibleSoFar, Inconclusive };
std::string to_string(Verdict v);

struct GroupComparison {
  std::string group;
  long knot_count = 0;
  long seifert_count = 0;
  Verdict verdict = Verdict::CompatibleSoFar;
  std::string witness;
};

struct CandidateReport {
  SeifertParams params;
  Verdict verdict = Verdict::CompatibleSoFar;
  std::vector<GroupComparison> groups;
};

/// Knot side for one group: the surjection count and T_{K(p/q), beta}^phi for
/// every character beta (indexed by the exponent u of [mu]).
struct KnotSide {
  std::string group;
  long count = 0;
  std::vector<long> exponents;
  std::vector<ManifoldInvariantSet> sets;
};

struct ObstructReport {
  std::string knot;
  SurgerySlope slope;
  long examined = 0;           // parameter tuples within bounds
  long homology_filtered = 0;  // dropped because |H_1| != p
  std::vector<KnotSide> knot_side;
  std::vector<CandidateReport> candidates;  // the survivors of the homology filter
  bool all_incompatible() const;
};

/// Unordered parameter tuples within the bounds (fibers sorted by (p, q)).
std::vector<SeifertParams> seifert_candidates(const ObstructOptions& opts);

KnotSide knot_side(const MarkedPresentation& k, const SurgerySlope& s, const ObstructGroup& g);

/// Compares one candidate against the knot side of every group.
CandidateReport compare_candidate(const SeifertParams& params, const SurgerySlope& s,
                                  const std::vector<ObstructGroup>& groups, const std::vector<KnotSide>& sides);

ObstructReport obstruct(const MarkedPresentation& k, const SurgerySlope& s, const std::vector<ObstructGroup>& groups,
                        const ObstructOptions& opts = {});

/// RTORSION_WORKERS if set, else the hardware concurrency.
int default_workers();

}  // namespace rt
