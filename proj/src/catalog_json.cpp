#include <stdexcept>

#include "internal.hpp"
#include "packbound/catalog.hpp"

namespace packbound {

using nlohmann::json;

namespace {

json var_to_json(const VarSpec& v) {
  return json{{"name", v.name},
              {"lo", v.lo_text.empty() ? std::to_string(v.lo) : v.lo_text},
              {"hi", v.hi_text.empty() ? std::to_string(v.hi) : v.hi_text}};
}

VarSpec var_from_json(const json& j) {
  VarSpec v;
  v.name = j["name"].get<std::string>();
  v.lo_text = j["lo"].get<std::string>();
  v.hi_text = j["hi"].get<std::string>();
  v.lo = std::strtod(v.lo_text.c_str(), nullptr);
  v.hi = std::strtod(v.hi_text.c_str(), nullptr);
  return v;
}

json record_to_json(const InequalityRecord& r) {
  json j;
  j["id"] = r.id;
  j["section"] = r.section;
  j["index"] = r.index;
  if (!r.case_tag.empty()) j["case"] = r.case_tag;
  j["statement"] = r.statement;
  json vars = json::array();
  for (const auto& v : r.vars) vars.push_back(var_to_json(v));
  j["vars"] = vars;
  j["expr"] = expr_to_jsonv(r.goal);
  j["strict"] = r.strict;
  j["mode"] = r.mode == Mode::kPlain ? "PLAIN"
              : r.mode == Mode::kCriticalPoint ? "CRITICAL_POINT"
                                               : "REDUCED";
  json cons = json::array();
  for (const auto& c : r.constraints)
    cons.push_back(json{{"label", c.label}, {"expr", expr_to_jsonv(c.expr)}});
  j["constraints"] = cons;
  if (!r.any_of.empty()) {
    json any = json::array();
    for (const auto& clause : r.any_of) {
      json cl = json::array();
      for (const auto& c : clause)
        cl.push_back(json{{"label", c.label}, {"expr", expr_to_jsonv(c.expr)}});
      any.push_back(cl);
    }
    j["any_of"] = any;
  }
  if (!r.reductions.empty()) {
    json red = json::array();
    for (const auto& d : r.reductions)
      red.push_back(json{{"var", d.var}, {"fix_at", d.fix_at_hi ? "hi" : "lo"}});
    j["reductions"] = red;
  }
  if (!r.critical_fns.empty()) j["critical_fns"] = r.critical_fns;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

InequalityRecord record_from_json(const json& j) {
  InequalityRecord r;
  r.id = j["id"].get<std::string>();
  r.section = j["section"].get<std::string>();
  r.index = j["index"].get<int>();
  if (j.contains("case")) r.case_tag = j["case"].get<std::string>();
  r.statement = j["statement"].get<std::string>();
  for (const json& v : j["vars"]) r.vars.push_back(var_from_json(v));
  r.goal = expr_from_jsonv(j["expr"]);
  r.strict = j["strict"].get<bool>();
  std::string m = j["mode"].get<std::string>();
  r.mode = m == "PLAIN" ? Mode::kPlain
           : m == "CRITICAL_POINT" ? Mode::kCriticalPoint
                                   : Mode::kReduced;
  for (const json& cj : j["constraints"])
    r.constraints.push_back(
        {expr_from_jsonv(cj["expr"]), cj["label"].get<std::string>()});
  if (j.contains("any_of")) {
    for (const json& clause : j["any_of"]) {
      std::vector<Constraint> cl;
      for (const json& cj : clause)
        cl.push_back({expr_from_jsonv(cj["expr"]), cj["label"].get<std::string>()});
      r.any_of.push_back(std::move(cl));
    }
  }
  if (j.contains("reductions")) {
    for (const json& d : j["reductions"])
      r.reductions.push_back(
          {d["var"].get<int>(), d["fix_at"].get<std::string>() == "hi"});
  }
  if (j.contains("critical_fns"))
    r.critical_fns = j["critical_fns"].get<std::vector<std::string>>();
  if (j.contains("notes")) r.notes = j["notes"].get<std::string>();
  return r;
}

}  // namespace

std::string Catalog::to_json() const {
  json j;
  j["format"] = "packbound-catalog";
  j["version"] = 1;
  j["count"] = records_.size();
  json recs = json::array();
  for (const auto& r : records_) recs.push_back(record_to_json(r));
  j["records"] = recs;
  return j.dump(1);
}

Catalog Catalog::from_json(const std::string& text) {
  json j = json::parse(text);
  if (j["format"] != "packbound-catalog")
    throw std::runtime_error("not a catalog file");
  Catalog c;
  for (const json& rj : j["records"]) c.add(record_from_json(rj));
  if (c.records_.size() != j["count"].get<size_t>())
    throw std::runtime_error("catalog count mismatch");
  return c;
}

}  // namespace packbound
