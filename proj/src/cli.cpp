#include "rtorsion/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rtorsion/obstruct.hpp"
#include "rtorsion/serialize.hpp"

namespace rt {

namespace {

using nlohmann::json;

struct Inconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

MarkedPresentation load_knot_spec(const JobSpec& spec) {
  if (spec.knot.empty()) throw std::invalid_argument("--knot is required");
  std::ifstream in(spec.knot);
  if (!in) throw std::invalid_argument("cannot open knot file " + spec.knot);
  json j = json::parse(in);
  if (spec.mirror) {
    if (!j.contains("pd")) throw std::invalid_argument("--mirror needs a PD diagram");
    j["mirror"] = !j.value("mirror", false);
  }
  MarkedPresentation k = knot_from_json(j);
  if (k.name.empty()) k.name = std::filesystem::path(spec.knot).stem().string();
  return k;
}

PermGroup load_group_spec(const JobSpec& spec) {
  if (spec.groups.size() > 1) throw std::invalid_argument("this verb takes a single --group");
  return spec.groups.empty() ? trivial_group() : load_group(spec.groups[0]);
}

Representation load_rep_spec(const JobSpec& spec, const PermGroup& g) {
  if (!spec.rep.empty()) return load_representation(g, spec.rep);
  return g.order() == 1 ? trivial_representation(g, 1) : standard_representation(g);
}

SurgerySlope slope_spec(const JobSpec& spec) {
  if (spec.slope.empty()) throw std::invalid_argument("--slope is required");
  return parse_slope(spec.slope);
}

SeifertParams params_spec(const JobSpec& spec) {
  if (spec.params.empty()) throw std::invalid_argument("--params is required");
  if (std::filesystem::is_regular_file(spec.params)) return load_seifert_params(spec.params);
  return parse_seifert_params(spec.params);
}

json elements(const PermGroup& g, const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(g.str(x));
  return a;
}

std::string bracket(const PermGroup& g, const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + g.str(xs[i]);
  return out + "]";
}

json hom_json(const PermGroup& g, const HomClass& h) {
  json j{{"images", elements(g, h.images)}};
  if (!h.peripheral.empty()) j["peripheral"] = elements(g, peripheral_class(g, h.peripheral[0], h.peripheral[1]));
  return j;
}

json set_json(const PermGroup& g, const ManifoldInvariantSet& s, bool verbose) {
  json values = json::array();
  for (const auto& v : s.values) {
    json e = encode(v.tau);
    if (verbose) {
      json src = json::array();
      for (const auto& h : v.sources) src.push_back(hom_json(g, h));
      e["sources"] = src;
    }
    values.push_back(e);
  }
  json viol = json::array();
  for (const auto& v : s.violations) viol.push_back({{"class", elements(g, v.peripheral)}, {"condition", v.condition}});
  return {{"values", values}, {"violations", viol}, {"warnings", s.warnings}, {"complete", s.complete()}};
}

std::string set_text(const ManifoldInvariantSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? ", " : "") + s.values[i].tau.str();
  out += "}";
  for (const auto& v : s.violations) out += "\n  hypothesis violated: " + v.condition;
  for (const auto& w : s.warnings) out += "\n  warning: " + w;
  return out;
}

json invariants_json(const std::vector<Integer>& inv) {
  json a = json::array();
  for (const auto& d : inv) a.push_back(d.str());
  return a;
}

void run_torsion(const JobSpec& spec, JobResult& r) {
  const auto k = load_knot_spec(spec);
  const auto g = load_group_spec(spec);
  const auto phi = load_rep_spec(spec, g);
  const auto records = knot_torsion_records(k, g, phi);
  std::ostringstream text;
  json classes = json::array();
  for (const auto& s : knot_invariant_table(records)) {
    json values = json::array();
    text << bracket(g, s.peripheral) << ":";
    for (const auto& v : s.values) {
      values.push_back(encode(v));
      text << " " << v.str();
    }
    text << "\n";
    classes.push_back({{"peripheral", elements(g, s.peripheral)}, {"values", values}});
  }
  r.output = {{"verb", "torsion"}, {"knot", k.name}, {"group", g.name()}, {"rep", phi.name()}, {"classes", classes}};
  if (spec.verbose) {
    json homs = json::array();
    for (const auto& rec : records) {
      json h = hom_json(g, rec.hom);
      h["tau"] = encode(rec.tau);
      homs.push_back(h);
    }
    r.output["homs"] = homs;
  }
  r.text = text.str();
}

void run_homs(const JobSpec& spec, JobResult& r) {
  const auto g = load_group_spec(spec);
  std::ostringstream text;
  json classes = json::array();
  if (!spec.params.empty()) {
    const auto params = params_spec(spec);
    const auto sg = enumerate_SG(params, g);
    const auto direct = enumerate_surjections(seifert_presentation(params), g);
    if (direct.size() != sg.size())
      throw Inconsistency("|S_G| = " + std::to_string(sg.size()) + " but the presentation has " +
                          std::to_string(direct.size()) + " surjection classes");
    for (const auto& t : sg) {
      classes.push_back(elements(g, t));
      if (spec.verbose) text << bracket(g, t) << "\n";
    }
    text << "S_" << g.name() << "(" << params.str() << "): " << sg.size() << "\n";
    r.output = {{"verb", "homs"}, {"params", params.str()}, {"group", g.name()}, {"count", sg.size()}, {"classes", classes}};
    r.text = text.str();
    return;
  }
  const auto k = load_knot_spec(spec);
  const auto homs = knot_surjections(k, g);
  long filling = 0;
  const bool filtered = !spec.slope.empty();
  const SurgerySlope s = filtered ? slope_spec(spec) : SurgerySlope{};
  for (const auto& h : homs) {
    json j = hom_json(g, h);
    if (filtered) {
      const bool ok = satisfies_filling(g, h.peripheral[0], h.peripheral[1], s);
      j["filling"] = ok;
      filling += ok;
    }
    classes.push_back(j);
    if (spec.verbose) text << bracket(g, h.images) << "  peripheral " << bracket(g, peripheral_class(g, h.peripheral[0], h.peripheral[1])) << "\n";
  }
  text << "surjections onto " << g.name() << ": " << homs.size() << "\n";
  r.output = {{"verb", "homs"}, {"knot", k.name}, {"group", g.name()}, {"count", homs.size()}, {"classes", classes}};
  if (filtered) {
    const auto direct = enumerate_surjections(surgered_presentation(k, s), g,
                                              k.conjugate_generators ? meridian_search(g) : SurjectionSearch{});
    if (static_cast<long>(direct.size()) != filling)
      throw Inconsistency("filling filter gives " + std::to_string(filling) + " classes, surgered presentation " +
                          std::to_string(direct.size()));
    text << "satisfying the filling relation of " << s.str() << ": " << filling << "\n";
    r.output["slope"] = s.str();
    r.output["filling_count"] = filling;
  }
  r.text = text.str();
}

void run_surgery(const JobSpec& spec, JobResult& r) {
  const auto k = load_knot_spec(spec);
  const auto s = slope_spec(spec);
  const auto g = load_group_spec(spec);
  const auto phi = load_rep_spec(spec, g);
  if (spec.character.size() > 1) throw std::invalid_argument("--char takes one exponent for surgery");
  const long u = spec.character.empty() ? 1 : spec.character[0];
  const auto pres = surgered_presentation(k, s);
  const auto inv = pres.abelian_invariants();
  const auto set = surgery_invariant_set(k, s, g, phi, u);
  const auto direct = enumerate_surjections(pres, g, k.conjugate_generators ? meridian_search(g) : SurjectionSearch{});
  const auto filtered = surgery_surjections(k, s, g);
  if (direct.size() != filtered.size())
    throw Inconsistency("surgered presentation has " + std::to_string(direct.size()) +
                        " surjection classes, the filling filter " + std::to_string(filtered.size()));
  r.output = {{"verb", "surgery"},  {"knot", k.name},   {"slope", s.str()},
              {"r", s.r},           {"s", s.s},         {"group", g.name()},
              {"rep", phi.name()},  {"character", u},   {"homology", invariants_json(inv)},
              {"classes", filtered.size()}, {"set", set_json(g, set, spec.verbose)}};
  r.text = k.name + "(" + s.str() + "), " + g.name() + ", " + phi.name() + ": " + set_text(set) + "\n";
  if (!set.complete()) r.status = kHypothesisViolation;
}

void run_seifert(const JobSpec& spec, JobResult& r) {
  const auto params = params_spec(spec);
  const auto g = load_group_spec(spec);
  const auto phi = load_rep_spec(spec, g);
  const auto inv = seifert_presentation(params).abelian_invariants();
  const Integer order = seifert_homology_order(params);
  if (order.is_zero()) throw std::domain_error("H_1 is infinite; no character onto a finite cyclic group");
  std::vector<SeifertCharacter> chars = seifert_characters(params, order.to_long());
  if (!spec.character.empty()) {
    if (static_cast<int>(spec.character.size()) != params.m() + 1)
      throw std::invalid_argument("--char needs a,b_1,...,b_m");
    SeifertCharacter chi{order.to_long(), mod(spec.character[0], order.to_long()), {}};
    for (int i = 1; i <= params.m(); ++i) chi.b.push_back(mod(spec.character[i], order.to_long()));
    bool known = false;
    for (const auto& c : chars) known |= c.a == chi.a && c.b == chi.b;
    if (!known) throw std::invalid_argument("--char does not define a surjection onto Z/" + order.str());
    chars = {chi};
  }
  std::ostringstream text;
  json out = json::array();
  for (const auto& chi : chars) {
    const auto set = seifert_invariant_set(params, g, phi, chi);
    if (!set.complete()) r.status = kHypothesisViolation;
    json j = set_json(g, set, spec.verbose);
    j["a"] = chi.a;
    j["b"] = chi.b;
    out.push_back(j);
    text << "a=" << chi.a << " b=";
    for (std::size_t i = 0; i < chi.b.size(); ++i) text << (i ? "," : "") << chi.b[i];
    text << ": " << set_text(set) << "\n";
  }
  r.output = {{"verb", "seifert"}, {"params", params.str()}, {"group", g.name()}, {"rep", phi.name()},
              {"homology", invariants_json(inv)}, {"classes", enumerate_SG(params, g).size()}, {"characters", out}};
  r.text = "M(" + params.str() + "), " + g.name() + ", " + phi.name() + "\n" + text.str();
}

void run_obstruct(const JobSpec& spec, JobResult& r) {
  const auto k = load_knot_spec(spec);
  const auto s = slope_spec(spec);
  const std::vector<std::string> names = spec.groups.empty() ? std::vector<std::string>{"A4", "A5"} : spec.groups;
  const std::string rep = spec.rep.empty() ? "A5-standard" : spec.rep;
  std::vector<ObstructGroup> groups;
  json group_info = json::array();
  for (const auto& n : names) {
    ObstructGroup og{load_group(n), std::nullopt};
    try {
      og.phi = load_representation(og.group, rep);
    } catch (const std::invalid_argument&) {
      // The representation does not apply to this group: counting only.
    }
    group_info.push_back({{"group", og.group.name()}, {"rep", og.phi ? json(og.phi->name()) : json(nullptr)}});
    groups.push_back(std::move(og));
  }
  ObstructOptions opts;
  opts.workers = spec.workers;
  if (!spec.bounds.empty()) {
    const auto comma = spec.bounds.find(',');
    try {
      opts.max_p = std::stol(spec.bounds.substr(0, comma));
      if (comma != std::string::npos) opts.max_q = std::stol(spec.bounds.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed --bounds: " + spec.bounds);
    }
  }
  const auto report = obstruct(k, s, groups, opts);

  std::ostringstream text;
  json sides = json::array();
  for (std::size_t i = 0; i < report.knot_side.size(); ++i) {
    const auto& side = report.knot_side[i];
    json sets = json::array();
    for (std::size_t j = 0; j < side.sets.size(); ++j) {
      json e = set_json(groups[i].group, side.sets[j], spec.verbose);
      e["character"] = side.exponents[j];
      sets.push_back(e);
    }
    sides.push_back({{"group", side.group}, {"count", side.count}, {"sets", sets}});
    text << side.group << ": " << side.count << " classes";
    if (!side.sets.empty()) text << ", torsion " << set_text(side.sets[0]);
    text << "\n";
  }
  json candidates = json::array();
  std::map<std::string, long> tally;
  for (const auto& c : report.candidates) {
    json gs = json::array();
    std::string witness;
    for (const auto& g : c.groups) {
      gs.push_back({{"group", g.group},
                    {"knot_count", g.knot_count},
                    {"seifert_count", g.seifert_count},
                    {"verdict", to_string(g.verdict)},
                    {"witness", g.witness}});
      if (witness.empty() && g.verdict == c.verdict) witness = g.group + ": " + g.witness;
    }
    candidates.push_back({{"params", c.params.str()}, {"verdict", to_string(c.verdict)}, {"groups", gs}});
    ++tally[to_string(c.verdict)];
    text << "M(" << c.params.str() << ")  " << to_string(c.verdict) << "  " << witness << "\n";
  }
  text << report.examined << " candidates, " << report.homology_filtered << " with H_1 != Z/" << s.p << ", "
       << report.candidates.size() << " compared:";
  for (const auto& [v, n] : tally) text << " " << v << " " << n;
  text << "\n";
  r.output = {{"verb", "obstruct"},
              {"knot", k.name},
              {"slope", s.str()},
              {"groups", group_info},
              {"bounds", {{"max_p", opts.max_p}, {"max_q", opts.max_q}}},
              {"examined", report.examined},
              {"homology_filtered", report.homology_filtered},
              {"knot_side", sides},
              {"candidates", candidates},
              {"all_incompatible", report.all_incompatible()}};
  r.text = text.str();
}

}  // namespace

JobResult run(const JobSpec& spec) {
  JobResult r;
  try {
    if (spec.verb == "torsion") run_torsion(spec, r);
    else if (spec.verb == "homs") run_homs(spec, r);
    else if (spec.verb == "surgery") run_surgery(spec, r);
    else if (spec.verb == "seifert") run_seifert(spec, r);
    else if (spec.verb == "obstruct") run_obstruct(spec, r);
    else throw std::invalid_argument("unknown verb: " + spec.verb);
  } catch (const Inconsistency& e) {
    r.status = kInconsistency;
    r.output["error"] = std::string("inconsistency: ") + e.what();
  } catch (const std::invalid_argument& e) {
    r.status = kParseError;
    r.output["error"] = e.what();
  } catch (const nlohmann::json::exception& e) {
    r.status = kParseError;
    r.output["error"] = e.what();
  } catch (const std::domain_error& e) {
    r.status = kHypothesisViolation;
    r.output["error"] = e.what();
  } catch (const std::exception& e) {
    r.status = kInconsistency;
    r.output["error"] = e.what();
  }
  if (r.output.contains("error")) r.text += "error: " + r.output["error"].get<std::string>() + "\n";
  r.output["status"] = r.status;
  return r;
}

}  // namespace rt
