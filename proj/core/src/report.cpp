#include "pierce/report.hpp"

#include <cmath>
#include <limits>

#include <json.hpp>

#include "pierce/error.hpp"

namespace pierce {

using nlohmann::json;

namespace {

json real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double real_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json line_json(const LineEq& l) { return json::array({l.a, l.b, l.c}); }

LineEq line_from(const json& j) { return LineEq{j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

json simplex_json(const SimplexPoint& p) { return json(std::vector<double>(p.coords().begin(), p.coords().end())); }

std::optional<Property> property_from(std::string_view s) {
  for (Property p : {Property::T3, Property::T4, Property::TightTriples, Property::ColorfulTightTriples,
                     Property::ColorfulT4}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

json hypothesis_json(const HypothesisReport& h) {
  json j;
  j["property"] = std::string(to_string(h.property));
  j["holds"] = h.holds;
  if (h.witness.empty()) {
    j["witness_violation"] = nullptr;
  } else {
    j["witness_violation"] = json::array();
    for (const SetRef& r : h.witness) j["witness_violation"].push_back({{"family", r.family}, {"index", r.index}});
  }
  return j;
}

HypothesisReport hypothesis_from(const json& j) {
  HypothesisReport h;
  const auto p = property_from(j.at("property").get<std::string>());
  if (!p) throw Error(ErrorCode::WrongType, "unknown property in report");
  h.property = *p;
  h.holds = j.at("holds").get<bool>();
  if (const json& w = j.at("witness_violation"); !w.is_null()) {
    for (const json& r : w) h.witness.push_back({r.at("family").get<int>(), r.at("index").get<int>()});
  }
  return h;
}

json certificate_json(const PiercingCertificate& c) {
  json j;
  j["family"] = c.family;
  j["lines"] = json::array();
  for (const LineEq& l : c.lines) j["lines"].push_back(line_json(l));
  j["lines_original"] = json::array();
  for (const LineEq& l : c.lines_original) j["lines_original"].push_back(line_json(l));
  j["assignment"] = c.assignment;
  j["residual"] = real(c.residual);
  j["search_residual"] = real(c.search_residual);
  j["from_chords"] = c.from_chords;
  j["witness"] = simplex_json(c.witness);
  j["transform"] = {{"scale", c.transform.scale}, {"shift", json::array({c.transform.shift.x, c.transform.shift.y})}};
  return j;
}

PiercingCertificate certificate_from(const json& j) {
  PiercingCertificate c;
  c.family = j.at("family").get<int>();
  for (const json& l : j.at("lines")) c.lines.push_back(line_from(l));
  for (const json& l : j.at("lines_original")) c.lines_original.push_back(line_from(l));
  c.assignment = j.at("assignment").get<std::vector<int>>();
  c.residual = real_from(j.at("residual"));
  c.search_residual = real_from(j.at("search_residual"));
  c.from_chords = j.at("from_chords").get<bool>();
  c.witness = SimplexPoint(j.at("witness").get<std::vector<double>>());
  c.transform.scale = j.at("transform").at("scale").get<double>();
  const json& shift = j.at("transform").at("shift");
  c.transform.shift = {shift.at(0).get<double>(), shift.at(1).get<double>()};
  return c;
}

json dual_json(const DualWitness& d) {
  json j;
  j["permutation"] = d.kkm.permutation;
  j["point"] = simplex_json(d.kkm.point);
  j["margins"] = json::array();
  for (double m : d.kkm.margins) j["margins"].push_back(real(m));
  j["resolution"] = d.kkm.resolution;
  j["region_sets"] = json::array();
  for (const SetRef& r : d.region_sets) j["region_sets"].push_back({{"family", r.family}, {"index", r.index}});
  j["group"] = d.group;
  j["verified"] = d.verified;
  return j;
}

DualWitness dual_from(const json& j) {
  DualWitness d;
  d.kkm.permutation = j.at("permutation").get<std::vector<int>>();
  d.kkm.point = SimplexPoint(j.at("point").get<std::vector<double>>());
  for (const json& m : j.at("margins")) d.kkm.margins.push_back(real_from(m));
  d.kkm.resolution = j.at("resolution").get<int>();
  for (const json& r : j.at("region_sets")) d.region_sets.push_back({r.at("family").get<int>(), r.at("index").get<int>()});
  d.group = j.at("group").get<std::vector<int>>();
  d.verified = j.at("verified").get<bool>();
  return d;
}

}  // namespace

RunReport make_report(const SolveResult& result, std::uint64_t seed) {
  RunReport r;
  r.hypothesis = result.hypothesis;
  r.outcome = result.outcome;
  r.lines = result.lines;
  r.certificate = result.certificate;
  r.dual = result.dual;
  r.best_residual = result.best_residual;
  r.timings = result.timings;
  r.seed = seed;
  return r;
}

std::string report_to_json(const RunReport& report, bool include_timings) {
  json j;
  j["hypothesis"] = hypothesis_json(report.hypothesis);
  j["outcome"] = std::string(to_string(report.outcome));
  j["lines"] = report.lines;
  j["certificate"] = report.certificate ? certificate_json(*report.certificate) : json(nullptr);
  j["dual_witness"] = report.dual ? dual_json(*report.dual) : json(nullptr);
  j["best_residual"] = real(report.best_residual);
  j["seed"] = report.seed;
  if (include_timings) {
    j["timings_ms"] = {{"hypothesis", report.timings.hypothesis_ms},
                       {"scan", report.timings.scan_ms},
                       {"descent", report.timings.descent_ms},
                       {"dual", report.timings.dual_ms}};
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
    RunReport r;
    r.hypothesis = hypothesis_from(j.at("hypothesis"));
    const auto outcome = outcome_from_string(j.at("outcome").get<std::string>());
    if (!outcome) throw Error(ErrorCode::WrongType, "unknown outcome in report");
    r.outcome = *outcome;
    r.lines = j.at("lines").get<int>();
    if (const json& c = j.at("certificate"); !c.is_null()) r.certificate = certificate_from(c);
    if (const json& d = j.at("dual_witness"); !d.is_null()) r.dual = dual_from(d);
    r.best_residual = real_from(j.at("best_residual"));
    r.seed = j.at("seed").get<std::uint64_t>();
    if (auto t = j.find("timings_ms"); t != j.end()) {
      r.timings.hypothesis_ms = t->at("hypothesis").get<double>();
      r.timings.scan_ms = t->at("scan").get<double>();
      r.timings.descent_ms = t->at("descent").get<double>();
      r.timings.dual_ms = t->at("dual").get<double>();
    }
    return r;
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorCode::MalformedJson, "", 0, std::string("malformed report: ") + e.what());
  } catch (const json::exception& e) {
    throw ParseError(ErrorCode::WrongType, "", 0, std::string("invalid report: ") + e.what());
  }
}

std::string hypothesis_to_json(const HypothesisReport& report) { return hypothesis_json(report).dump(2) + "\n"; }

}  // namespace pierce
