#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "jgap/certificate.hpp"
#include "jgap/hard_body.hpp"
#include "jgap/polytope.hpp"
#include "jgap/simplex_frame.hpp"

namespace jgap::io {

/// Insertion-ordered JSON, so written files have a stable field order.
using Json = nlohmann::ordered_json;

Json polytope_to_json(const HPolytope& K);
/// Throws Parse on missing fields or inconsistent shapes.
HPolytope polytope_from_json(const Json& j);

Json frame_to_json(const SimplexFrame& frame);
SimplexFrame frame_from_json(const Json& j);

Json params_to_json(const HardBodyParams& p);
HardBodyParams params_from_json(const Json& j);

/// A hard body as stored on disk. The simplex rows are referenced by
/// dimension unless `inline_simplex` was requested when writing; `polytope`
/// then holds only the m facet rows.
struct BodyFile {
  HardBodyParams params;
  std::vector<KSubset> subsets;
  HPolytope polytope;  ///< the full body, simplex rows first
  Matrix facet_dirs;
  Matrix witnesses;
  std::shared_ptr<const SimplexFrame> frame;
};

Json body_to_json(const HardBodyInstance& inst, bool inline_simplex = false);
BodyFile body_from_json(const Json& j);

/// Certificate built from the stored witnesses and facet rows.
Certificate certificate_from_body(const BodyFile& body);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);
void write_file(const std::filesystem::path& path, const std::string& text);
Json read_json_file(const std::filesystem::path& path);

}  // namespace jgap::io
