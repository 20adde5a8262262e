#include "rtorsion/obstruct.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace rt {

namespace {

std::string value_list(const std::vector<TorsionValue>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
  return out + "}";
}

bool same_set(const ManifoldInvariantSet& a, const ManifoldInvariantSet& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (compare_canonical(a.values[i].tau, b.values[i].tau) != 0) return false;
  return true;
}

GroupComparison compare_group(const SeifertParams& params, const SurgerySlope& s, const ObstructGroup& g,
                              const KnotSide& side) {
  GroupComparison c;
  c.group = side.group;
  c.knot_count = side.count;
  c.seifert_count = static_cast<long>(enumerate_SG(params, g.group).size());
  if (c.knot_count != c.seifert_count) {
    c.verdict = Verdict::Incompatible;
    c.witness = "|S(pi_1 K(" + s.str() + "), " + c.group + ")| = " + std::to_string(c.knot_count) + " but |S_" +
                c.group + "| = " + std::to_string(c.seifert_count);
    return c;
  }
  if (!g.phi || c.knot_count == 0) {
    c.witness = "counts agree (" + std::to_string(c.knot_count) + ")";
    return c;
  }
  std::vector<ManifoldInvariantSet> seifert_sets;
  for (const auto& chi : seifert_characters(params, s.p)) seifert_sets.push_back(seifert_invariant_set(params, g.group, *g.phi, chi));
  bool undecided = false;
  for (const auto& k : side.sets)
    for (const auto& m : seifert_sets) {
      if (k.complete() && m.complete()) {
        if (same_set(k, m)) {
          c.witness = "torsion sets agree: " + value_list(k.taus());
          return c;
        }
      } else {
        undecided = true;
      }
    }
  std::vector<TorsionValue> knot_values, seifert_values;
  for (const auto& k : side.sets)
    for (const auto& v : k.values) knot_values.push_back(v.tau);
  for (const auto& m : seifert_sets)
    for (const auto& v : m.values) seifert_values.push_back(v.tau);
  const std::string sets = "knot " + value_list(canonical_set(knot_values)) + ", Seifert " + value_list(canonical_set(seifert_values));
  if (undecided) {
    c.verdict = Verdict::Inconclusive;
    c.witness = "hypothesis violated for some character; " + sets;
  } else {
    c.verdict = Verdict::Incompatible;
    c.witness = "no pair of characters gives equal torsion sets: " + sets;
  }
  return c;
}

bool homology_matches(const SeifertParams& params, long p) {
  if (!(seifert_homology_order(params) == Integer(p))) return false;
  const auto inv = seifert_presentation(params).abelian_invariants();
  return inv.size() == 1 && inv[0] == Integer(p);
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Incompatible: return "INCOMPATIBLE";
    case Verdict::CompatibleSoFar: return "COMPATIBLE-SO-FAR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "";
}

bool ObstructReport::all_incompatible() const {
  for (const auto& c : candidates)
    if (c.verdict != Verdict::Incompatible) return false;
  return true;
}

int default_workers() {
  if (const char* env = std::getenv("RTORSION_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SeifertParams> seifert_candidates(const ObstructOptions& opts) {
  if (opts.m < 2) throw std::invalid_argument("need m >= 2");
  std::vector<std::pair<long, long>> fibers;
  for (long p = 2; p <= opts.max_p; ++p) {
    const long bound = opts.max_q > 0 ? opts.max_q : p - 1;
    for (long q = -bound; q <= bound; ++q)
      if (std::gcd(p, q) == 1) fibers.emplace_back(p, q);
  }
  std::vector<SeifertParams> out;
  std::vector<std::size_t> idx(opts.m, 0);
  auto build = [&](auto&& self, int i, std::size_t from) -> void {
    if (i == opts.m) {
      std::vector<std::pair<long, long>> f;
      for (auto k : idx) f.push_back(fibers[k]);
      out.push_back(seifert_params(f));
      return;
    }
    for (std::size_t k = from; k < fibers.size(); ++k) {
      idx[i] = k;
      self(self, i + 1, k);
    }
  };
  build(build, 0, 0);
  return out;
}

KnotSide knot_side(const MarkedPresentation& k, const SurgerySlope& s, const ObstructGroup& g) {
  KnotSide side;
  side.group = g.group.name();
  side.count = static_cast<long>(surgery_surjections(k, s, g.group).size());
  if (g.phi)
    for (long u = 1; u < s.p; ++u)
      if (std::gcd(u, s.p) == 1) {
        side.exponents.push_back(u);
        side.sets.push_back(surgery_invariant_set(k, s, g.group, *g.phi, u));
      }
  return side;
}

CandidateReport compare_candidate(const SeifertParams& params, const SurgerySlope& s,
                                  const std::vector<ObstructGroup>& groups, const std::vector<KnotSide>& sides) {
  CandidateReport r;
  r.params = params;
  bool inconclusive = false, incompatible = false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    r.groups.push_back(compare_group(params, s, groups[i], sides[i]));
    incompatible |= r.groups.back().verdict == Verdict::Incompatible;
    inconclusive |= r.groups.back().verdict == Verdict::Inconclusive;
  }
  r.verdict = incompatible ? Verdict::Incompatible : inconclusive ? Verdict::Inconclusive : Verdict::CompatibleSoFar;
  return r;
}

ObstructReport obstruct(const MarkedPresentation& k, const SurgerySlope& s, const std::vector<ObstructGroup>& groups,
                        const ObstructOptions& opts) {
  if (s.p < 2) throw std::invalid_argument("obstruct needs p >= 2");
  ObstructReport report;
  report.knot = k.name;
  report.slope = s;
  for (const auto& g : groups) report.knot_side.push_back(knot_side(k, s, g));

  const auto all = seifert_candidates(opts);
  report.examined = static_cast<long>(all.size());
  std::vector<SeifertParams> survivors;
  for (const auto& c : all)
    if (homology_matches(c, s.p)) survivors.push_back(c);
  report.homology_filtered = report.examined - static_cast<long>(survivors.size());

  report.candidates.resize(survivors.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i; (i = next++) < survivors.size();) {
      try {
        report.candidates[i] = compare_candidate(survivors[i], s, groups, report.knot_side);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(opts.workers > 0 ? opts.workers : default_workers(),
                                                static_cast<int>(survivors.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace rt
