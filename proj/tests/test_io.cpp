#include "test_support.hpp"

#include "tropint/io.hpp"
#include "tropint/svg.hpp"

using namespace testing_support;
namespace tio = tropint::io;

namespace {

std::string parse_error_path(const std::string& text) {
  try {
    tio::parse(text);
  } catch (const tio::ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Io, CycleDocument) {
  const std::string text = R"({"kind":"cycle","ambient_dim":2,"cells":[
    {"ineqs":[[1,0,0]],"eqs":[[1,-1,0]]},
    {"ineqs":[[-1,0,0]],"eqs":[[0,1,0]]},
    {"ineqs":[[0,-1,0]],"eqs":[[1,0,0]]}]})";
  tio::Document d = tio::parse(text);
  EXPECT_EQ(d.kind, tio::Kind::cycle);
  Cycle c = d.cycle();
  EXPECT_EQ(c.size(), 3u);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.weight(i), 1);
  EXPECT_TRUE(cycles_equal(c, standard_skeleton(2, 1)));
}

TEST(Io, FunctionDocument) {
  const std::string text = R"({"type":"max_affine","terms":[{"linear":[1,0],"constant":0},
    {"linear":[0,1],"constant":0},{"linear":[0,0],"constant":0}]})";
  tio::Document d = tio::parse(text);
  EXPECT_EQ(d.kind, tio::Kind::function);
  EXPECT_EQ(d.function().ambient_dim(), 2u);
  EXPECT_EQ(d.function().polynomial().terms, hyperplane_function(2).terms);
  const std::string rational = R"({"type":"max_affine","ambient_dim":1,"terms":[{"linear":[1],"constant":"-3/6"}]})";
  EXPECT_EQ(tio::parse(rational).function().polynomial().terms.front().constant, make_rational(-1, 2));
}

TEST(Io, MapDocument) {
  tio::Document d = tio::parse(R"({"matrix":[[1,1]]})");
  EXPECT_EQ(d.kind, tio::Kind::map);
  EXPECT_EQ(d.map().matrix(), examples::map_f1().matrix());
  EXPECT_THROW(d.cycle(), tio::ParseError);
}

TEST(Io, RoundTrip) {
  std::vector<tio::Document> docs;
  for (const std::string name : {"Lnk:3:1", "hyperplane:3", "space:2", "rigid-surface", "rigid-surface-refined",
                                 "rigid-function", "rigid-curve", "pushfwd-fan", "map-f1", "map-f2", "conic",
                                 "conic-function", "quadrilateral", "sawtooth"}) {
    auto d = tio::builtin(name);
    ASSERT_TRUE(d) << name;
    docs.push_back(*d);
  }
  docs.push_back({tio::Kind::cycle, Cycle::empty_cycle(2, 0).complex()});
  docs.push_back({tio::Kind::cycle, point_cycle(rats({1, -2}), -3).complex()});
  for (const auto& d : docs) {
    std::string once = tio::serialize(tio::to_json(d));
    tio::Document back = tio::parse(once);
    EXPECT_EQ(back.kind, d.kind);
    EXPECT_EQ(tio::serialize(tio::to_json(back)), once);
  }
  // Exact rationals survive the trip.
  Cycle p = point_cycle({make_rational(1, 3), make_rational(-7, 2)});
  tio::Document back = tio::parse(tio::serialize(tio::to_json(p)));
  EXPECT_EQ(back.cycle().cell(0), p.cell(0));
}

TEST(Io, RejectsFloats) {
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":1,"cells":[{"eqs":[[1,0.5]]}]})"), "cells[0].eqs[0][1]");
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":1,"type":"max_affine","terms":[{"linear":[1],"constant":0.25}]})"),
            "terms[0].constant");
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":1,"type":"max_affine","terms":[{"linear":[1],"constant":"0.25"}]})"),
            "terms[0].constant");
  EXPECT_EQ(parse_error_path(R"({"matrix":[[1.0]]})"), "matrix[0][0]");
}

TEST(Io, SchemaErrors) {
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":2,"cells":[{"eqs":[[1,0]]}]})"), "cells[0].eqs[0]");
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":1,"cells":[{"eqs":[[1,0]],"weight":"x"}]})"), "cells[0].weight");
  EXPECT_EQ(parse_error_path(R"({"kind":"surface"})"), "kind");
  EXPECT_EQ(parse_error_path(R"({"foo":1})"), "");
  EXPECT_EQ(parse_error_path(R"([1,2])"), "");
  EXPECT_EQ(parse_error_path(R"({"cells":[)"), "");
  EXPECT_EQ(parse_error_path(R"({"type":"spline","ambient_dim":1})"), "type");
  EXPECT_EQ(parse_error_path(R"({"format_version":"9","matrix":[[1]]})"), "format_version");
  EXPECT_EQ(parse_error_path(R"({"cells":[]})"), "ambient_dim");
  EXPECT_EQ(parse_error_path(R"({"ambient_dim":1,"cells":[{"ineqs":[[-1,0]],"eqs":[[1,1]]}]})"), "cells[0]");
  // Discontinuous piecewise input.
  EXPECT_EQ(parse_error_path(R"({"type":"piecewise","ambient_dim":1,"pieces":[
      {"cell":{"ineqs":[[1,0]]},"linear":[1],"constant":0},
      {"cell":{"ineqs":[[-1,0]]},"linear":[0],"constant":1}]})"),
            "pieces");
  // Unbalanced cycles parse but do not become cycles.
  tio::Document d = tio::parse(R"({"ambient_dim":1,"cells":[{"ineqs":[[1,0]]}]})");
  EXPECT_THROW(d.cycle(), Error);
  EXPECT_FALSE(is_balanced(d.complex()));
}

TEST(Io, KindInference) {
  EXPECT_EQ(tio::infer_kind(tio::json::parse(R"({"cells":[]})")), tio::Kind::cycle);
  EXPECT_EQ(tio::infer_kind(tio::json::parse(R"({"matrix":[]})")), tio::Kind::map);
  EXPECT_EQ(tio::infer_kind(tio::json::parse(R"({"terms":[]})")), tio::Kind::function);
  EXPECT_EQ(tio::infer_kind(tio::json::parse(R"({"kind":"map","cells":[]})")), tio::Kind::map);
}

TEST(Io, Builtins) {
  EXPECT_TRUE(cycles_equal(tio::builtin("Lnk:3:2")->cycle(), standard_skeleton(3, 2)));
  EXPECT_TRUE(cycles_equal(tio::builtin("rigid-surface")->cycle(), examples::rigid_surface()));
  EXPECT_TRUE(cycles_equal(tio::builtin("pushfwd-fan")->cycle(), examples::pushforward_fan()));
  EXPECT_FALSE(tio::builtin("no-such-thing"));
  EXPECT_THROW(tio::builtin("Lnk:2:3"), tio::ParseError);
  EXPECT_THROW(tio::builtin("Lnk:x:1"), tio::ParseError);
  EXPECT_THROW(tio::load("no-such-thing"), tio::ParseError);
  EXPECT_FALSE(tio::builtin_names().empty());
}

TEST(Io, SerializationIsDeterministic) {
  Cycle a = examples::conic();
  Cycle b = stable_intersect(whole_space_cycle(2), examples::conic());
  EXPECT_EQ(tio::serialize(tio::to_json(a)), tio::serialize(tio::to_json(a)));
  EXPECT_EQ(tio::serialize(tio::to_json(a.reduced())), tio::serialize(tio::to_json(b.reduced())));
}

TEST(Svg, RendersClippedEdges) {
  auto segs = svg::clip(standard_skeleton(2, 1).complex(), {});
  ASSERT_EQ(segs.size(), 3u);
  for (const auto& s : segs)
    for (const auto* p : {&s.a, &s.b})
      for (const auto& x : *p) {
        EXPECT_LE(x, 5);
        EXPECT_GE(x, -5);
      }
  std::string out = svg::render(examples::conic().complex());
  EXPECT_EQ(out.rfind("<svg", 0), 0u);
  EXPECT_NE(out.find("</svg>"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t pos = out.find("<line"); pos != std::string::npos; pos = out.find("<line", pos + 1)) ++lines;
  EXPECT_EQ(lines, examples::conic().size());
  EXPECT_THROW(svg::render(standard_skeleton(3, 1).complex()), Error);
  // A box far away from the curve draws nothing.
  EXPECT_TRUE(svg::clip(standard_skeleton(2, 1).complex(), {100, -101, 101, -100}).empty());
}
