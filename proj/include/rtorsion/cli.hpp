// Command-line jobs: torsion, homs, surgery, seifert, obstruct.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace rt {

enum ExitCode { kOk = 0, kParseError = 1, kHypothesisViolation = 2, kInconsistency = 3 };

struct JobSpec {
  std::string verb;
  std::string knot;                 // knot file
  bool mirror = false;              // use the mirror image of a PD diagram
  std::vector<std::string> groups;  // group names or files
  std::string rep;                  // representation name or file
  std::string slope;                // "p/q"
  std::string params;               // "a/b,c/d,..." or a params file
  std::vector<long> character;      // u (surgery) or a,b_1..b_m (seifert)
  std::string bounds;               // "max_p" or "max_p,max_q"
  std::string json;                 // output path, "-" for stdout
  bool verbose = false;
  int workers = 0;
};

struct JobResult {
  int status = kOk;
  nlohmann::json output;
  std::string text;  // human-readable summary
};

/// Runs a job; never throws.  Errors map to exit codes 1 (bad input),
/// 2 (hypothesis violation, partial results kept) and 3 (inconsistency).
JobResult run(const JobSpec& spec);

}  // namespace rt
