#include "packbound/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace packbound {

using nlohmann::json;

std::string report_jsonl_line(const VerifyReport& r) {
  json j;
  j["id"] = r.id;
  if (r.key != r.id) j["case"] = r.key.substr(r.id.size() + 1);
  j["section"] = r.section;
  j["status"] = status_name(r.status);
  j["cells"] = r.cells;
  j["depth"] = r.depth;
  j["seconds"] = r.seconds;
  if (r.counterexample) {
    j["counterexample"] = json{{"point", r.counterexample->point},
                               {"violation", r.counterexample->violation}};
  }
  if (!r.reductions_applied.empty()) j["reductions"] = r.reductions_applied;
  return j.dump();
}

std::string report_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  os << "id,section,status,seconds\n";
  for (const auto& r : reports)
    os << r.key << "," << r.section << "," << status_name(r.status) << ","
       << r.seconds << "\n";
  return os.str();
}

bool write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f << content;
    if (!f.good()) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

std::string state_to_json(const ProverState& st) {
  json j;
  j["format"] = "packbound-checkpoint";
  j["version"] = 1;
  j["key"] = st.key;
  j["cells"] = st.cells;
  j["depth"] = st.depth;
  json cells = json::array();
  for (const Cell& c : st.pending) {
    json b = json::array();
    for (const Interval& iv : c.box) b.push_back(json::array({iv.lo, iv.hi}));
    cells.push_back(json{{"box", b}, {"depth", c.depth}, {"label", c.label}});
  }
  j["pending"] = cells;
  return j.dump();
}

ProverState state_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j["format"] != "packbound-checkpoint" || j["version"] != 1)
    throw std::runtime_error("not a checkpoint file");
  ProverState st;
  st.key = j["key"].get<std::string>();
  st.cells = j["cells"].get<long>();
  st.depth = j["depth"].get<int>();
  for (const json& cj : j["pending"]) {
    Cell c;
    c.depth = cj["depth"].get<int>();
    c.label = cj["label"].get<std::uint64_t>();
    for (const json& b : cj["box"])
      c.box.emplace_back(b[0].get<double>(), b[1].get<double>());
    st.pending.push_back(std::move(c));
  }
  return st;
}

}  // namespace packbound
