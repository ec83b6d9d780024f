#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "alextop/flow.hpp"
#include "alextop/space.hpp"

namespace alextop {

/// Malformed input (syntax, schema, schedule shape). Distinct from
/// SpaceError, which reports a modeled axiom failure on well-formed input.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Space file: {"elements": [...]} plus exactly one of
///   "opens": [["a"],["a","b"],...]  (empty and full may be omitted or present)
///   "order": [["y","x"],...]        (pairs assert y <= x; reflexive-transitive
///                                    closure is applied, then down-sets)
FiniteSpace parse_space(const nlohmann::json& j);

/// Flow file: {"space": <inline object or file path>, "maps": {...},
/// "breakpoints": ["-1","0","1/2"], "pieces": ["id", ...]}.
FlowCandidate parse_flow(const nlohmann::json& j, const std::string& base_dir);

nlohmann::json space_to_json(const FiniteSpace& s);

nlohmann::json load_json_file(const std::string& path);

std::string read_file(const std::string& path);

/// FNV-1a 64-bit hex digest, used to echo input identity into reports.
std::string digest(const std::string& bytes);

std::string mask_to_string(const FiniteSpace& s, Mask m);

}  // namespace alextop
