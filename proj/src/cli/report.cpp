#include "jstretch/report.hpp"

#include <sstream>

namespace jst::cli {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json length_json(const LocalLength& l) {
  return {{"value", l.value ? json(*l.value) : json("INFINITE")}, {"stabilized_at", l.stabilized_at}};
}

LocalLength length_from(const json& j) {
  LocalLength l;
  const auto& v = j.at("value");
  if (!v.is_string()) l.value = v.get<std::int64_t>();
  l.stabilized_at = j.at("stabilized_at").get<int>();
  return l;
}

json lengths_json(const std::vector<LocalLength>& ls) {
  json a = json::array();
  for (const auto& l : ls) a.push_back(length_json(l));
  return a;
}

std::vector<LocalLength> lengths_from(const json& j) {
  std::vector<LocalLength> out;
  for (const auto& e : j) out.push_back(length_from(e));
  return out;
}

json verdict_json(const std::optional<Verdict>& v) {
  if (!v) return nullptr;
  return {{"value", v->value}, {"status", v->status()}, {"unasserted", v->unasserted}};
}

std::optional<Verdict> verdict_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  const auto& o = j.at(key);
  Verdict v;
  v.value = o.at("value").get<bool>();
  v.asserted = o.at("status").get<std::string>() == "ASSERTED";
  v.unasserted = o.at("unasserted").get<std::vector<std::string>>();
  return v;
}

json hyps_json(const Hypotheses& h) { return {{"G_d", h.G_d}, {"AN_minus", h.AN_minus}, {"depth_RI", h.depth_RI}}; }

Hypotheses hyps_from(const json& j) {
  return {j.at("G_d").get<bool>(), j.at("AN_minus").get<bool>(), j.at("depth_RI").get<bool>()};
}

json value_json(const QuantityValue& v) { return v ? json(*v) : json("INFINITE"); }

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << path << ": " << j.get<std::string>() << "\n";
  } else {
    out << path << ": " << (j.is_null() ? "none" : j.dump()) << "\n";
  }
}

}  // namespace

json to_json(const AnalysisReport& r, const Caps& caps) {
  json j;
  j["seed"] = r.seed;
  j["p"] = r.p;
  j["trials"] = r.trials;
  j["caps"] = {{"gb_degree", caps.gb_degree}, {"truncation", caps.truncation}, {"search", r.cap}};
  j["chosen_seed"] = r.chosen_seed;
  j["d"] = r.d;
  j["ell_is_d"] = r.ell_is_d;
  j["m_primary"] = r.m_primary;
  j["j_mult"] = opt(r.j_mult);
  j["lambda_head"] = opt(r.lambda_head);
  j["lambda_tail"] = opt(r.lambda_tail);
  j["r_J"] = opt(r.r_J);
  j["s_J"] = opt(r.s_J);
  j["K"] = opt(r.K);
  j["nu"] = lengths_json(r.nu);
  j["nubar"] = lengths_json(r.nubar);
  j["h"] = opt(r.h);
  j["rbar_colength"] = opt(r.rbar_colength);
  j["tau"] = r.tau ? length_json(*r.tau) : json(nullptr);
  j["flags"] = {{"j_stretched", r.flags.j_stretched},
                {"minimal_j", r.flags.minimal_j},
                {"almost_minimal_j", r.flags.almost_minimal_j},
                {"almost_almost_minimal_j", r.flags.almost_almost_minimal_j},
                {"stretched", opt(r.flags.stretched)}};
  j["stretch_length"] = r.stretch_length ? length_json(*r.stretch_length) : json(nullptr);
  j["verdicts"] = {{"thm41_predicted_CM", verdict_json(r.verdicts.thm41_predicted_CM)},
                   {"cor46_acm", verdict_json(r.verdicts.cor46_acm)},
                   {"thm45_p", opt(r.verdicts.thm45_p)},
                   {"thm45_depth", verdict_json(r.verdicts.thm45_depth)},
                   {"thm49_smalltype", verdict_json(r.verdicts.thm49_smalltype)}};
  j["asserted_hypotheses"] = hyps_json(r.asserted);
  j["dissent"] = r.dissent;
  j["warnings"] = r.warnings;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.p = j.at("p").get<std::int64_t>();
  r.trials = j.at("trials").get<int>();
  r.cap = j.at("caps").at("search").get<int>();
  r.chosen_seed = j.at("chosen_seed").get<std::uint64_t>();
  r.d = j.at("d").get<int>();
  r.ell_is_d = j.at("ell_is_d").get<bool>();
  r.m_primary = j.at("m_primary").get<bool>();
  r.j_mult = get_opt<std::int64_t>(j, "j_mult");
  r.lambda_head = get_opt<std::int64_t>(j, "lambda_head");
  r.lambda_tail = get_opt<std::int64_t>(j, "lambda_tail");
  r.r_J = get_opt<int>(j, "r_J");
  r.s_J = get_opt<int>(j, "s_J");
  r.K = get_opt<int>(j, "K");
  r.nu = lengths_from(j.at("nu"));
  r.nubar = lengths_from(j.at("nubar"));
  r.h = get_opt<std::int64_t>(j, "h");
  r.rbar_colength = get_opt<std::int64_t>(j, "rbar_colength");
  if (!j.at("tau").is_null()) r.tau = length_from(j.at("tau"));
  const auto& f = j.at("flags");
  r.flags.j_stretched = f.at("j_stretched").get<bool>();
  r.flags.minimal_j = f.at("minimal_j").get<bool>();
  r.flags.almost_minimal_j = f.at("almost_minimal_j").get<bool>();
  r.flags.almost_almost_minimal_j = f.at("almost_almost_minimal_j").get<bool>();
  r.flags.stretched = get_opt<bool>(f, "stretched");
  if (!j.at("stretch_length").is_null()) r.stretch_length = length_from(j.at("stretch_length"));
  const auto& v = j.at("verdicts");
  r.verdicts.thm41_predicted_CM = verdict_from(v, "thm41_predicted_CM");
  r.verdicts.cor46_acm = verdict_from(v, "cor46_acm");
  r.verdicts.thm45_p = get_opt<int>(v, "thm45_p");
  r.verdicts.thm45_depth = verdict_from(v, "thm45_depth");
  r.verdicts.thm49_smalltype = verdict_from(v, "thm49_smalltype");
  r.asserted = hyps_from(j.at("asserted_hypotheses"));
  r.dissent = j.at("dissent").get<std::map<std::string, int>>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string emit_report(const AnalysisReport& report, const Caps& caps) { return to_json(report, caps).dump(2); }

AnalysisReport parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

json to_json(const RegistryResult& result, const Caps& caps) {
  json j;
  j["id"] = result.id;
  if (result.param) j[std::string(1, *result.param_name)] = *result.param;
  j["report"] = to_json(result.report, caps);
  json checks = json::array();
  for (const auto& c : result.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["golden"] = checks;
  j["golden_pass"] = result.all_pass();
  return j;
}

json to_json(const TrialReport& r) {
  json j;
  j["quantity"] = to_string(r.quantity);
  j["n"] = r.n;
  json values = json::array();
  for (const auto& v : r.values) {
    json e = {{"seed", v.seed}};
    if (v.ok) e["value"] = value_json(v.value);
    else e["error"] = v.error;
    values.push_back(e);
  }
  j["values"] = values;
  j["modal"] = r.modal ? value_json(*r.modal) : json(nullptr);
  j["stability"] = r.stability;
  json fixed = json::array();
  for (const auto& c : r.fixed_comparisons) {
    json e = {{"description", c.description},
              {"fixed", value_json(c.fixed)},
              {"general", value_json(c.general)},
              {"general_le_fixed", c.general_le_fixed}};
    if (c.intersection_hypothesis) e["intersection_hypothesis"] = *c.intersection_hypothesis;
    fixed.push_back(e);
  }
  j["fixed_comparisons"] = fixed;
  return j;
}

std::string render_human(const json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace jst::cli
