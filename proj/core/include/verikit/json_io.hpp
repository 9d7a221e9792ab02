#pragma once

#include <json.hpp>

#include "verikit/branch_tuple.hpp"
#include "verikit/fingerprint.hpp"
#include "verikit/fp_linear.hpp"
#include "verikit/search.hpp"

namespace verikit::io {

using nlohmann::json;

// groups: {"degree": n, "generators": ["(1,2,3)", ...]}
json group_to_json(const PermGroup& g);
PermGroup group_from_json(const json& j);

// tuples: {"degree": n, "entries": ["(1,2)", ...], "tags": {...}}
json tuple_to_json(const branch::BranchTuple& t);
branch::BranchTuple tuple_from_json(const json& j);

json fingerprint_to_json(const GroupFingerprint& fp);

// vectors: {"p": p, "coords": [..]}
json vector_to_json(const fp::FpVector& v);
fp::FpVector vector_from_json(const json& j);

json search_spec_to_json(const search::SearchSpec& spec);
search::SearchSpec search_spec_from_json(const json& j);
json search_result_to_json(const search::SearchResult& r);

// JSONL tuple files
std::vector<branch::BranchTuple> read_tuple_file(const std::string& path);
void write_tuple_file(const std::string& path,
                      const std::vector<branch::BranchTuple>& tuples);

}  // namespace verikit::io
