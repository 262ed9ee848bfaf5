#pragma once

#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "emu/cone.hpp"
#include "emu/counterexample.hpp"
#include "emu/measure.hpp"
#include "emu/preference.hpp"

namespace emu::io {

using Json = nlohmann::ordered_json;

inline Error schema_error(const std::string& what) { return Error(ErrorKind::schema, what); }

inline Json to_json(const Rational& r) { return to_string(r); }

/// Accepts "n", "n/d" or a JSON integer. Floats are rejected: they are not
/// exact.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump(), 10);
  throw schema_error("expected a rational string \"num/den\", got " + j.dump());
}

inline Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str(10);
}

inline Json to_json(const IntVec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

inline Json to_json(const Vec& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

inline Json to_json(const Measure& m) {
  Json obj = Json::object();
  for (const auto& [i, v] : m.entries()) obj[m.space()->label(i)] = to_json(v);
  return obj;
}

inline Json to_json(const Utility& u) { return to_json(u.values()); }

inline Json to_json(const PolyhedralCone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(to_json(g));
  Json lin = Json::array();
  for (const auto& l : c.lineality()) lin.push_back(to_json(l));
  return Json{{"dim", c.dim()}, {"generators", gens}, {"lineality", lin}};
}

inline SpacePtr space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_array()) {
    throw schema_error("missing \"outcomes\" array");
  }
  std::vector<std::string> labels;
  for (const auto& o : j["outcomes"]) {
    if (!o.is_string()) throw schema_error("outcome labels must be strings");
    labels.push_back(o.get<std::string>());
  }
  return OutcomeSpace::create(std::move(labels));
}

/// {"label": "num/den", ...}; absent labels carry zero mass.
inline Measure measure_from_json(const SpacePtr& space, const Json& j) {
  if (!j.is_object()) throw schema_error("measure must be an object of label -> rational");
  Measure::Entries e;
  for (const auto& [label, value] : j.items()) {
    e[space->index_of(label)] += rational_from_json(value);
  }
  return Measure(space, e);
}

inline Lottery lottery_from_json(const SpacePtr& space, const Json& j) {
  return Lottery(measure_from_json(space, j));
}

inline Utility utility_from_json(const SpacePtr& space, const Json& j) {
  if (!j.is_array() || j.size() != space->size()) {
    throw schema_error("utility must be an array with one entry per outcome");
  }
  Vec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return Utility(space, std::move(v));
}

inline std::vector<Utility> utilities_from_json(const SpacePtr& space, const Json& j) {
  if (!j.is_array()) throw schema_error("\"utilities\" must be an array");
  std::vector<Utility> out;
  for (const auto& u : j) out.push_back(utility_from_json(space, u));
  return out;
}

inline MonotoneStructure monotone_from_json(const SpacePtr& space, const Json& j) {
  MonotoneStructure m;
  if (!j.is_array()) throw schema_error("\"monotone\" must be an array of pairs");
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw schema_error("monotone entries must be [\"a\", \"b\"] label pairs");
    }
    m.relation.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }
  validate(m, space);
  return m;
}

struct DatasetFile {
  PreferenceDataset dataset;
  MonotoneStructure monotone;
};

/// {"outcomes": [...], "prefers": [{"p": {...}, "q": {...}}, ...],
///  "monotone": [["a","b"], ...]}
inline DatasetFile dataset_from_json(const Json& j) {
  DatasetFile out{{space_from_json(j), {}}, {}};
  const auto& space = out.dataset.space;
  if (j.contains("prefers")) {
    if (!j["prefers"].is_array()) throw schema_error("\"prefers\" must be an array");
    for (const auto& s : j["prefers"]) {
      if (!s.is_object() || !s.contains("p") || !s.contains("q")) {
        throw schema_error("each statement needs \"p\" and \"q\"");
      }
      out.dataset.statements.push_back(
          {lottery_from_json(space, s["p"]), lottery_from_json(space, s["q"])});
    }
  }
  if (j.contains("monotone")) out.monotone = monotone_from_json(space, j["monotone"]);
  return out;
}

inline Json to_json(const DatasetFile& f) {
  Json prefers = Json::array();
  for (const auto& s : f.dataset.statements) {
    prefers.push_back(Json{{"p", to_json(s.p.measure())}, {"q", to_json(s.q.measure())}});
  }
  Json mono = Json::array();
  for (const auto& [a, b] : f.monotone.relation) mono.push_back(Json::array({a, b}));
  return Json{{"outcomes", f.dataset.space->labels()}, {"prefers", prefers}, {"monotone", mono}};
}

inline Json to_json(const Representation& r) {
  Json utils = Json::array();
  for (const auto& u : r.utilities) utils.push_back(to_json(u));
  return Json{{"outcomes", r.space->labels()},
              {"utilities", utils},
              {"cone", to_json(r.cone)},
              {"pin", r.pin}};
}

inline Json to_json(const MembershipCertificate& c, const PolyhedralCone& cone) {
  Json out{{"verdict", verdict_name(c.verdict)}};
  if (c.verdict == Verdict::in) {
    Json comb = Json::array();
    for (const auto& [k, lambda] : c.combination) {
      comb.push_back(Json{{"generator", to_json(cone.generators()[k])},
                          {"coefficient", to_json(lambda)}});
    }
    out["combination"] = comb;
    Json lin = Json::array();
    for (std::size_t j = 0; j < c.lineality_coefficients.size(); ++j) {
      lin.push_back(Json{{"direction", to_json(cone.lineality()[j])},
                         {"coefficient", to_json(c.lineality_coefficients[j])}});
    }
    out["lineality"] = lin;
  } else {
    out["separator"] = to_json(c.separator);
  }
  return out;
}

inline Json to_json(const QueryVerdict& v, const PolyhedralCone& cone) {
  return Json{{"classification", classification_name(v.classification)},
              {"forward", to_json(v.forward, cone)},
              {"backward", to_json(v.backward, cone)}};
}

inline Json to_json(const Decomposition& d) {
  return Json{{"alpha", to_json(d.alpha)},
              {"plus", to_json(d.plus.measure())},
              {"minus", to_json(d.minus.measure())}};
}

}  // namespace emu::io
