#include "jgap/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jgap/error.hpp"

namespace jgap::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::kParse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_error(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Json rows_to_json(const Matrix& M) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_from_json(const Json& j, Eigen::Index cols, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of rows");
  Matrix M(static_cast<Eigen::Index>(j.size()), cols);
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      parse_error(std::string(what) + " row " + std::to_string(i) + " has the wrong length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) parse_error(std::string(what) + " entries must be numbers");
      M(i, c) = x.get<double>();
    }
  }
  return M;
}

template <class T>
T get_as(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("field \"") + name + "\": " + e.what());
  }
}

}  // namespace

Json polytope_to_json(const HPolytope& K) {
  Json j;
  j["dim"] = K.dim();
  j["normals"] = rows_to_json(K.normals());
  Json offsets = Json::array();
  for (Eigen::Index i = 0; i < K.num_facets(); ++i) offsets.push_back(K.offset(i));
  j["offsets"] = std::move(offsets);
  return j;
}

HPolytope polytope_from_json(const Json& j) {
  const auto dim = get_as<Eigen::Index>(j, "dim");
  if (dim < 1) parse_error("polytope dim must be positive");
  Matrix normals = rows_from_json(field(j, "normals"), dim, "normals");
  const Json& off = field(j, "offsets");
  if (!off.is_array() || static_cast<Eigen::Index>(off.size()) != normals.rows()) {
    parse_error("offsets must match the number of normals");
  }
  Vector offsets(normals.rows());
  for (Eigen::Index i = 0; i < offsets.size(); ++i) {
    const Json& x = off[static_cast<std::size_t>(i)];
    if (!x.is_number()) parse_error("offsets must be numbers");
    offsets[i] = x.get<double>();
  }
  return HPolytope(std::move(normals), std::move(offsets));
}

Json frame_to_json(const SimplexFrame& frame) {
  Json j;
  j["dim"] = frame.dim;
  j["contacts"] = rows_to_json(frame.contacts);
  j["c_n"] = frame.dim >= 3 ? equator_frame(frame).c_n
                            : std::sqrt(static_cast<double>(frame.dim - 1) /
                                        static_cast<double>(frame.dim + 1));
  return j;
}

SimplexFrame frame_from_json(const Json& j) {
  SimplexFrame frame;
  frame.dim = get_as<Eigen::Index>(j, "dim");
  if (frame.dim < 2) parse_error("frame dim must be at least 2");
  frame.contacts = rows_from_json(field(j, "contacts"), frame.dim, "contacts");
  if (frame.contacts.rows() != frame.dim + 1) parse_error("frame needs dim + 1 contacts");
  const double n = static_cast<double>(frame.dim);
  frame.weights = Vector::Constant(frame.dim + 1, n / (n + 1.0));
  return frame;
}

Json params_to_json(const HardBodyParams& p) {
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["m"] = p.m;
  j["R_requested"] = p.R_requested;
  j["R"] = p.R;
  j["threshold"] = 1.0 / (2.0 * p.R);
  j["seed"] = p.seed;
  j["m_capped"] = p.m_capped;
  Json a;
  a["tail_regime"] = p.admissible.tail_regime;
  a["separation_regime"] = p.admissible.separation_regime;
  a["ratio_window"] = p.admissible.ratio_window;
  a["above_sqrt_en"] = p.admissible.above_sqrt_en;
  a["below_c1_n"] = p.admissible.below_c1_n;
  j["admissible"] = std::move(a);
  return j;
}

HardBodyParams params_from_json(const Json& j) {
  HardBodyParams p = params_from_k(get_as<std::int64_t>(j, "n"), get_as<std::int64_t>(j, "k"),
                                   get_as<std::size_t>(j, "m"), get_as<std::uint64_t>(j, "seed"));
  if (j.contains("R_requested")) p.R_requested = get_as<double>(j, "R_requested");
  if (j.contains("m_capped")) p.m_capped = get_as<bool>(j, "m_capped");
  return p;
}

Json body_to_json(const HardBodyInstance& inst, bool inline_simplex) {
  Json j;
  j["params"] = params_to_json(inst.params);
  Json ref;
  ref["type"] = "regular_simplex";
  ref["dim"] = inst.params.n;
  ref["rows"] = inst.frame->contacts.rows();
  ref["inline"] = inline_simplex;
  j["frame_ref"] = std::move(ref);
  Json subsets = Json::array();
  for (const KSubset& s : inst.subsets) {
    Json idx = Json::array();
    for (std::int64_t i : s.indices()) idx.push_back(i);
    subsets.push_back(std::move(idx));
  }
  j["subsets"] = std::move(subsets);
  if (inline_simplex) {
    j["polytope"] = polytope_to_json(inst.body());
  } else {
    j["polytope"] = polytope_to_json(
        HPolytope(inst.facet_dirs, Vector::Ones(inst.facet_dirs.rows())));
  }
  j["witnesses"] = rows_to_json(inst.witnesses);
  return j;
}

BodyFile body_from_json(const Json& j) {
  BodyFile body;
  body.params = params_from_json(field(j, "params"));
  const Json& ref = field(j, "frame_ref");
  if (get_as<std::string>(ref, "type") != "regular_simplex") parse_error("unknown frame_ref type");
  if (get_as<std::int64_t>(ref, "dim") != body.params.n) parse_error("frame_ref dim differs from n");
  const bool inline_simplex = ref.contains("inline") && get_as<bool>(ref, "inline");

  const Json& subsets = field(j, "subsets");
  if (!subsets.is_array()) parse_error("subsets must be an array");
  for (const Json& s : subsets) {
    try {
      body.subsets.emplace_back(body.params.n, s.get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
      parse_error(std::string("subsets: ") + e.what());
    }
  }

  body.frame = std::make_shared<const SimplexFrame>(build_simplex(body.params.n));
  const Eigen::Index simplex_rows = body.frame->contacts.rows();
  HPolytope stored = polytope_from_json(field(j, "polytope"));
  if (stored.dim() != body.params.n) parse_error("polytope dim differs from n");
  if (inline_simplex) {
    if (stored.num_facets() < simplex_rows) parse_error("inline polytope lacks simplex rows");
    body.facet_dirs = stored.normals().bottomRows(stored.num_facets() - simplex_rows);
    body.polytope = std::move(stored);
  } else {
    body.facet_dirs = stored.normals();
    body.polytope = intersect(simplex_hrep(*body.frame), stored);
  }
  body.witnesses = rows_from_json(field(j, "witnesses"), body.params.n, "witnesses");
  if (body.witnesses.rows() != body.facet_dirs.rows()) {
    parse_error("witness count differs from facet count");
  }
  return body;
}

Certificate certificate_from_body(const BodyFile& body) {
  Certificate cert;
  cert.witnesses = body.witnesses;
  cert.facet_dirs = body.facet_dirs;
  cert.polar_generators = std::shared_ptr<const Matrix>(body.frame, &body.frame->contacts);
  cert.polar_family = PolarFamily::kSimplexContacts;
  cert.R = body.params.R;
  cert.threshold = 1.0 / (2.0 * body.params.R);
  return cert;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kParse, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(Errc::kParse, "write to " + path.string() + " failed");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, path.string() + ": " + e.what());
  }
}

}  // namespace jgap::io
