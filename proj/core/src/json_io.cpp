#include "verikit/json_io.hpp"

#include <fstream>

#include "verikit/errors.hpp"

namespace verikit::io {

json group_to_json(const PermGroup& g) {
  json j;
  j["degree"] = g.degree();
  j["generators"] = json::array();
  for (const auto& gen : g.generators())
    j["generators"].push_back(gen.to_cycle_string());
  return j;
}

PermGroup group_from_json(const json& j) {
  unsigned degree = j.at("degree").get<unsigned>();
  std::vector<Permutation> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(Permutation::from_cycles(s.get<std::string>(), degree));
  return PermGroup(degree, gens);
}

json tuple_to_json(const branch::BranchTuple& t) {
  json j;
  j["degree"] = t.degree();
  j["entries"] = json::array();
  for (const auto& e : t.entries()) j["entries"].push_back(e.to_cycle_string());
  return j;
}

branch::BranchTuple tuple_from_json(const json& j) {
  unsigned degree = j.at("degree").get<unsigned>();
  std::vector<Permutation> entries;
  for (const auto& s : j.at("entries"))
    entries.push_back(Permutation::from_cycles(s.get<std::string>(), degree));
  return branch::BranchTuple(degree, std::move(entries));
}

json fingerprint_to_json(const GroupFingerprint& fp) {
  json j;
  j["degree"] = fp.degree;
  j["order"] = fp.order;
  j["transitive"] = fp.transitive;
  j["block_systems"] = fp.num_block_systems;
  j["maximal_block_systems"] = fp.num_maximal_block_systems;
  j["full_cycle"] = fp.contains_full_cycle;
  j["derived_order"] = fp.derived_order;
  j["abelian_quotient"] = fp.abelian_quotient_order;
  j["cycle_types_sampled"] = fp.cycle_types_sampled;
  j["cycle_types"] = fp.cycle_type_counts;
  return j;
}

json vector_to_json(const fp::FpVector& v) {
  json j;
  j["p"] = v.p;
  j["coords"] = v.c;
  return j;
}

fp::FpVector vector_from_json(const json& j) {
  return fp::FpVector(j.at("p").get<unsigned>(),
                      j.at("coords").get<std::vector<std::uint8_t>>());
}

json search_spec_to_json(const search::SearchSpec& spec) {
  json j;
  j["u"] = group_to_json(spec.u);
  j["v"] = group_to_json(spec.v);
  j["positions"] = json::array();
  for (const auto& p : spec.positions) {
    json jp;
    jp["base"] = p.base.to_cycle_string();
    jp["slots"] = json::array();
    for (const auto& s : p.slots)
      jp["slots"].push_back({{"cycle_length", s.base_cycle_length},
                             {"return_type", s.return_type.to_string()}});
    j["positions"].push_back(jp);
  }
  j["require"] = {{"transitive", spec.require_transitive},
                  {"genus0", spec.require_genus0},
                  {"full_cycle", spec.require_full_cycle}};
  j["budget"] = spec.node_budget;
  j["seed"] = spec.seed;
  return j;
}

search::SearchSpec search_spec_from_json(const json& j) {
  search::SearchSpec spec;
  spec.u = group_from_json(j.at("u"));
  spec.v = group_from_json(j.at("v"));
  for (const auto& jp : j.at("positions")) {
    search::PositionSpec pos;
    pos.base = Permutation::from_cycles(jp.at("base").get<std::string>(),
                                        spec.v.degree());
    if (jp.contains("slots"))
      for (const auto& js : jp.at("slots")) {
        search::ReturnSlot slot;
        slot.base_cycle_length = js.at("cycle_length").get<unsigned>();
        slot.return_type = CycleType::parse(
            js.at("return_type").get<std::string>(), spec.u.degree());
        pos.slots.push_back(slot);
      }
    spec.positions.push_back(std::move(pos));
  }
  if (j.contains("require")) {
    const auto& r = j.at("require");
    if (r.contains("transitive"))
      spec.require_transitive = r.at("transitive").get<bool>();
    if (r.contains("genus0")) spec.require_genus0 = r.at("genus0").get<bool>();
    if (r.contains("full_cycle"))
      spec.require_full_cycle = r.at("full_cycle").get<bool>();
  }
  if (j.contains("budget"))
    spec.node_budget = j.at("budget").get<unsigned long long>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<unsigned>();
  return spec;
}

json search_result_to_json(const search::SearchResult& r) {
  json j;
  j["exhaustive"] = r.exhaustive;
  j["nodes"] = r.nodes;
  j["raw_hits"] = r.raw_hits;
  j["classes"] = json::array();
  for (const auto& c : r.classes) {
    json jc;
    jc["tuple"] = tuple_to_json(c.tuple);
    jc["order"] = c.order;
    jc["group"] = fingerprint_to_json(c.group);
    j["classes"].push_back(jc);
  }
  return j;
}

std::vector<branch::BranchTuple> read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataFileMissing("cannot open tuple file: " + path);
  std::vector<branch::BranchTuple> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(tuple_from_json(json::parse(line)));
  }
  return out;
}

void write_tuple_file(const std::string& path,
                      const std::vector<branch::BranchTuple>& tuples) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write tuple file: " + path);
  for (const auto& t : tuples) out << tuple_to_json(t).dump() << "\n";
}

}  // namespace verikit::io
