#include <gtest/gtest.h>

#include <filesystem>

#include "jgap/error.hpp"
#include "jgap/io.hpp"

using namespace jgap;

TEST(Io, PolytopeRoundTripIsExact) {
  Rng rng = make_stream(1);
  Matrix A(7, 3);
  for (Eigen::Index i = 0; i < 7; ++i) A.row(i) = random_unit_vector(rng, 3).transpose();
  Vector b = Vector::LinSpaced(7, 0.1, 1.0 / 3.0);
  const HPolytope K(A, b);
  const io::Json j = io::polytope_to_json(K);
  const HPolytope back = io::polytope_from_json(io::Json::parse(io::dump(j)));
  EXPECT_EQ(back.normals(), K.normals());
  EXPECT_EQ(back.offsets(), K.offsets());
  EXPECT_EQ(j.begin().key(), "dim");
}

TEST(Io, FrameRoundTrip) {
  const SimplexFrame f = build_simplex(6);
  const io::Json j = io::frame_to_json(f);
  EXPECT_NEAR(j["c_n"].get<double>(), std::sqrt(5.0 / 7.0), 1e-14);
  const SimplexFrame back = io::frame_from_json(io::Json::parse(io::dump(j)));
  EXPECT_EQ(back.contacts, f.contacts);
}

TEST(Io, BodyRoundTrip) {
  const HardBodyInstance inst = build_instance(params_from_k(200, 3, 12, 9));
  for (bool inline_simplex : {false, true}) {
    const io::BodyFile body = io::body_from_json(io::Json::parse(io::dump(io::body_to_json(inst, inline_simplex))));
    EXPECT_EQ(body.params.k, 3);
    EXPECT_EQ(body.params.R, inst.params.R);
    EXPECT_EQ(body.subsets, inst.subsets);
    EXPECT_EQ(body.witnesses, inst.witnesses);
    EXPECT_EQ(body.facet_dirs, inst.facet_dirs);
    EXPECT_EQ(body.polytope.normals(), inst.body().normals());
  }
  const io::Json j = io::body_to_json(inst);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"params", "frame_ref", "subsets", "polytope", "witnesses"}));
}

TEST(Io, ParseErrors) {
  auto code = [](const std::string& text) {
    try {
      io::polytope_from_json(io::Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kBadRange;
  };
  EXPECT_EQ(code(R"({"dim": 2, "normals": [[1, 0]]})"), Errc::kParse);
  EXPECT_EQ(code(R"({"dim": 2, "normals": [[1, 0, 3]], "offsets": [1]})"), Errc::kParse);
  EXPECT_EQ(code(R"({"dim": 2, "normals": [[1, 0]], "offsets": [1, 2]})"), Errc::kParse);
  EXPECT_EQ(code(R"({"dim": 2, "normals": [["a", 0]], "offsets": [1]})"), Errc::kParse);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), Error);
}
