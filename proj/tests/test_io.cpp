#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qpkit/io.hpp"

using namespace qpkit;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const json& j) {
  std::string path = "/tmp/qpkit_test_" + name + ".json";
  std::ofstream out(path);
  out << j.dump();
  return path;
}

}  // namespace

TEST_CASE("parse toric, graph, and points inputs") {
  auto toric = model_from_json(json::parse(R"({"type":"toric","lattice_points":[[0],[1],[2],[3]]})"));
  CHECK(toric.model.kind == ModelKind::toric);
  CHECK(toric.model.n == 3);
  CHECK(toric.model.quadrics.dim() == 3);

  auto graph = model_from_json(
      json::parse(R"({"type":"graph","vertices":3,"edges":[[1,2]],"acm":false})"));
  CHECK(graph.model.kind == ModelKind::graph);
  CHECK(graph.model.quadrics.dim() == 2);

  auto points = model_from_json(json::parse(
      R"({"type":"points","n":2,"coords":[["1","0","0"],["0","1","0"],["1","1","1/2"]]})"));
  CHECK(points.model.kind == ModelKind::pointset);
  CHECK(points.model.n == 2);
}

TEST_CASE("parse diagnostics name the offending field") {
  CHECK_THROWS_WITH_AS(model_from_json(json::parse(R"({"type":"toric"})")),
                       doctest::Contains("lattice_points"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(model_from_json(json::parse(R"({"type":"graph","vertices":3})")),
                       doctest::Contains("edges"), std::invalid_argument);
  CHECK_THROWS(model_from_json(json::parse(R"({"type":"nope"})")));
  // loops and duplicate points rejected
  CHECK_THROWS(model_from_json(json::parse(R"({"type":"graph","vertices":3,"edges":[[1,1]]})")));
  CHECK_THROWS(
      model_from_json(json::parse(R"({"type":"toric","lattice_points":[[0],[0]]})")));
}

TEST_CASE("digest is stable across field and container ordering") {
  auto a = model_from_json(
      json::parse(R"({"type":"graph","vertices":4,"edges":[[0,1],[2,3],[1,2]]})"));
  auto b = model_from_json(
      json::parse(R"({"edges":[[2,1],[0,1],[3,2]],"vertices":4,"type":"graph"})"));
  CHECK(model_digest(a.model) == model_digest(b.model));

  auto t1 = model_from_json(json::parse(R"({"type":"toric","lattice_points":[[1],[0],[2]]})"));
  auto t2 = model_from_json(json::parse(R"({"lattice_points":[[0],[1],[2]],"type":"toric"})"));
  CHECK(model_digest(t1.model) == model_digest(t2.model));

  CHECK(model_digest(a.model) != model_digest(t1.model));
}

TEST_CASE("run_command output is byte-identical across runs") {
  json toric = {{"type", "toric"}, {"lattice_points", {{0}, {1}, {2}, {3}}}};
  RunOptions opts;
  opts.command = "qp";
  opts.input_path = write_temp("determinism", toric);

  std::ostringstream out1, out2, err;
  CHECK(run_command(opts, out1, err) == 0);
  CHECK(run_command(opts, out2, err) == 0);
  CHECK(out1.str() == out2.str());
  CHECK(!out1.str().empty());

  auto parsed = json::parse(out1.str());
  CHECK(parsed["result"]["qp"] == 2);
  CHECK(parsed["result"]["kappa"] == json({3, 1, 0}));
  CHECK(parsed["seed"] == 42);
  CHECK(parsed["trials"] == 3);
}

TEST_CASE("exit codes: error and inconclusive") {
  RunOptions opts;
  opts.command = "qp";
  opts.input_path = "/nonexistent/file.json";
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 1);
  CHECK(err.str().find("error") != std::string::npos);

  // graph search capped at size 1 on the Petersen graph: inconclusive
  json petersen = {{"type", "graph"},
                   {"vertices", 10},
                   {"edges", {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6},
                              {6, 8}, {8, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}}};
  RunOptions incon;
  incon.command = "qp";
  incon.input_path = write_temp("petersen", petersen);
  incon.max_gamma = 1;
  std::ostringstream out2, err2;
  CHECK(run_command(incon, out2, err2) == 2);
  CHECK(json::parse(out2.str())["result"]["status"] == "inconclusive");
}

TEST_CASE("strand command respects the budget flag") {
  json v3;
  v3["type"] = "toric";
  json pts = json::array();
  for (int x = 0; x <= 3; ++x)
    for (int y = 0; x + y <= 3; ++y) pts.push_back({x, y});
  v3["lattice_points"] = pts;

  RunOptions opts;
  opts.command = "strand";
  opts.input_path = write_temp("budget", v3);
  opts.budget = 2000;
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 0);
  CHECK(json::parse(out.str())["result"]["truncated"] == true);
}

TEST_CASE("bounds command emits the report frame") {
  json square = {{"type", "toric"}, {"lattice_points", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}};
  RunOptions opts;
  opts.command = "bounds";
  opts.input_path = write_temp("frame", square);
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 0);
  auto j = json::parse(out.str());
  CHECK(j["command"] == "bounds");
  CHECK(j["input_digest"].is_string());
  CHECK(j["result"]["py"] == 3);  // minimal degree: dim + 1
  CHECK(j["result"]["interval"] == json({3, 3}));
}

TEST_CASE("table format renders") {
  json toric = {{"type", "toric"}, {"lattice_points", {{0}, {1}, {2}, {3}}}};
  RunOptions opts;
  opts.command = "quadrics";
  opts.input_path = write_temp("table", toric);
  opts.format = "table";
  std::ostringstream out, err;
  CHECK(run_command(opts, out, err) == 0);
  CHECK(out.str().find("dim_I2") != std::string::npos);
}

TEST_CASE("rational serialization round trip") {
  CHECK(rational_string(parse_rational("22/7")) == "22/7");
  CHECK(rational_string(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_string(parse_rational("5")) == "5");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK(json_int(Int("12345")).is_number());
  CHECK(json_int(Int("123456789123456789123456789")).is_string());
}
