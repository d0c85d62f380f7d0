#include "gconn/report.hpp"

#include "json.hpp"

#include <sstream>

namespace gconn {

using nlohmann::json;

std::string realisation_name(const SubgroupType& s) {
  switch (s.realisation) {
    case Realisation::Self: return "Self";
    case Realisation::PinnedFixedPoint:
      return "PinnedFixedPoint(" + std::to_string(s.sigma_order) + ")";
    case Realisation::ViaD4: return "ViaD4";
  }
  return "?";
}

Report build_report(const ConnectionSpec& spec, const GaloisOptions& opt) {
  Report rep;
  rep.group_of = spec.base->type;
  rep.verdict = analyze(spec, opt);
  if (spec.kind == ConnectionKind::CoxeterFormal && spec.formal_type)
    rep.jordan = to_jordan(*spec.formal_type);
  else if (spec.kind == ConnectionKind::GeneralizedFG)
    rep.jordan = to_jordan(make_formal_type(spec.base, 1, {{1, {spec.a}}}));
  return rep;
}

std::string render_human(const Report& rep) {
  const GaloisVerdict& v = rep.verdict;
  std::ostringstream out;
  out << "connection group: " << rep.group_of.name() << "\n";
  out << "slope: " << rational_to_string(v.slope) << "\n";
  out << "connected monodromy: " << (v.connected_monodromy ? "yes" : "no") << "\n";
  out << "rigid: " << (v.rigid ? "yes" : "no") << "\n";
  if (v.group)
    out << "differential Galois group: " << v.group->type.name() << " ["
        << realisation_name(*v.group) << "]\n";
  else
    out << "differential Galois group: undetermined\n";
  if (v.local) {
    out << "local model: dim H = " << v.local->dim_h << ", theta order = "
        << v.local->theta_order << "\n";
  }
  if (rep.jordan) {
    out << "jordan terms (exponent, coordinates in the graded Cartan basis):\n";
    auto coords = jordan_term_coordinates(*rep.jordan);
    for (size_t k = 0; k < rep.jordan->terms.size(); ++k) {
      out << "  " << rep.jordan->terms[k].first << "/" << rep.jordan->base->h << " : [";
      for (size_t j = 0; j < coords[k].size(); ++j)
        out << (j ? ", " : "") << coords[k][j].to_string();
      out << "]\n";
    }
  }
  for (const auto& n : v.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string render_machine(const Report& rep) {
  const GaloisVerdict& v = rep.verdict;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["connection_group"] = rep.group_of.name();
  if (v.group) {
    j["group"] = {{"family", std::string(1, v.group->type.family)},
                  {"rank", v.group->type.rank},
                  {"realisation", realisation_name(*v.group)}};
  } else {
    j["group"] = nullptr;
  }
  j["slope"] = {{"num", static_cast<long long>(numerator(v.slope).convert_to<long long>())},
                {"den", static_cast<long long>(denominator(v.slope).convert_to<long long>())}};
  j["rigid"] = v.rigid;
  j["connected"] = v.connected_monodromy;
  if (v.local)
    j["local"] = {{"dim_h", v.local->dim_h}, {"theta_order", v.local->theta_order}};
  else
    j["local"] = nullptr;
  if (rep.jordan) {
    json terms = json::array();
    auto coords = jordan_term_coordinates(*rep.jordan);
    for (size_t k = 0; k < rep.jordan->terms.size(); ++k) {
      json cs = json::array();
      for (const auto& c : coords[k]) cs.push_back(c.to_string());
      terms.push_back({{"num", rep.jordan->terms[k].first},
                       {"den", rep.jordan->base->h},
                       {"coords", cs}});
    }
    j["jordan"] = {{"terms", terms}};
  } else {
    j["jordan"] = nullptr;
  }
  j["notes"] = v.notes;
  return j.dump(2) + "\n";
}

ParsedReport parse_machine_report(const std::string& json_text) {
  json j = json::parse(json_text);
  if (j.at("schema_version").get<int>() != kReportSchemaVersion)
    throw std::runtime_error("unsupported report schema version");
  ParsedReport p;
  if (j.at("group").is_null()) {
    p.group = "undetermined";
  } else {
    p.group = j["group"].at("family").get<std::string>() +
              std::to_string(j["group"].at("rank").get<int>());
    p.realisation = j["group"].at("realisation").get<std::string>();
  }
  p.connected = j.at("connected").get<bool>();
  p.rigid = j.at("rigid").get<bool>();
  p.slope = Rational(j.at("slope").at("num").get<long long>()) /
            j.at("slope").at("den").get<long long>();
  if (!j.at("local").is_null()) {
    p.dim_h = j["local"].at("dim_h").get<int>();
    p.theta_order = j["local"].at("theta_order").get<int>();
  }
  for (const auto& n : j.at("notes")) p.notes.push_back(n.get<std::string>());
  return p;
}

} // namespace gconn
