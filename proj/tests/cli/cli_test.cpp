#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "../common/reference_values.hpp"
#include "instance_file.hpp"
#include "replay_file.hpp"
#include "report.hpp"
#include "run.hpp"
#include "termlq/trajectory.hpp"

namespace termlq::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

const std::string kData = TERMLQ_TEST_DATA_DIR;
const std::string kReference = kData + "/reference_instance.json";
const std::string kUnreachable = kData + "/unreachable_instance.json";

std::string scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "termlq_cli_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string reference_text_with(const std::string& from,
                                const std::string& to) {
  std::string text = slurp(kReference);
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos);
  return text.replace(pos, from.size(), to);
}

RunOptions on(const std::string& instance) {
  RunOptions o;
  o.instance_path = instance;
  return o;
}

ErrorCode parse_error_code(const std::string& text, std::string* message) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(LoadInstance, ReferenceFixture) {
  const InstanceFile f = load_instance(kReference);
  EXPECT_EQ(f.instance.state_dim, 2);
  EXPECT_EQ(f.instance.input_dim, 1);
  EXPECT_EQ(f.instance.horizon, 2);
  EXPECT_EQ(f.instance.A[2](1, 1), 5.0);
  EXPECT_EQ(f.instance.B[0](1, 0), -1.0);
  EXPECT_EQ(f.learn.samples, 30);
  EXPECT_EQ(f.learn.seed, 42u);
}

TEST(LoadInstance, ShortSequenceNamesKeyAndLength) {
  std::string msg;
  const std::string text =
      reference_text_with("    [[5, 3], [-2, 1]],\n", "");
  EXPECT_EQ(parse_error_code(text, &msg), ErrorCode::kParseError);
  EXPECT_NE(msg.find("\"A\""), std::string::npos) << msg;
  EXPECT_NE(msg.find("expected length 3, got 2"), std::string::npos) << msg;
}

TEST(LoadInstance, EmptyDocument) {
  std::string msg;
  EXPECT_EQ(parse_error_code("", &msg), ErrorCode::kParseError);
  EXPECT_NE(msg.find("document root"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_code("  \n", &msg), ErrorCode::kParseError);
  EXPECT_EQ(parse_error_code("[1, 2]", &msg), ErrorCode::kParseError);
  EXPECT_NE(msg.find("document root"), std::string::npos) << msg;
}

TEST(LoadInstance, SyntaxErrorReportsPosition) {
  std::string msg;
  EXPECT_EQ(parse_error_code("{\"n\": 2,\n \"m\": }", &msg),
            ErrorCode::kParseError);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(LoadInstance, ShapeErrorsNameIndex) {
  std::string msg;
  parse_error_code(reference_text_with("[[5, 3], [-2, 1]]", "[[5, 3], [-2]]"),
                   &msg);
  EXPECT_NE(msg.find("\"A[1][1]\""), std::string::npos) << msg;
  parse_error_code(reference_text_with("\"x0\": [1, 2]", "\"x0\": [1]"), &msg);
  EXPECT_NE(msg.find("\"x0\""), std::string::npos) << msg;
  parse_error_code(reference_text_with("\"R\": [[1]],", ""), &msg);
  EXPECT_NE(msg.find("\"R\": missing"), std::string::npos) << msg;
  parse_error_code(reference_text_with("\"m\": 1", "\"m\": 1.5"), &msg);
  EXPECT_NE(msg.find("\"m\""), std::string::npos) << msg;
}

TEST(LoadInstance, NumericValidationAfterShapes) {
  std::string msg;
  EXPECT_EQ(parse_error_code(reference_text_with("\"R\": [[1]]", "\"R\": [[0]]"),
                             &msg),
            ErrorCode::kValidationError);
  EXPECT_NE(msg.find("positive definite R"), std::string::npos) << msg;
  EXPECT_EQ(parse_error_code(reference_text_with("\"N\": 2", "\"N\": -1"), &msg),
            ErrorCode::kValidationError);
}

TEST(LoadInstance, MissingFileIsIoError) {
  try {
    load_instance(kData + "/does_not_exist.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

TEST(InstanceHash, IgnoresFormatting) {
  const InstanceFile a = load_instance(kReference);
  const InstanceFile b = parse_instance(
      "{\"xi\":[6,7],\"x0\":[1,2],\"H\":[[1,0],[0,1]],\"R\":[[1.0]],"
      "\"Q\":[[1,0],[0,1]],\"B\":[[[1],[-1]],[[2],[1]],[[4],[2]]],"
      "\"A\":[[[1,2],[-1,4]],[[5,3],[-2,1]],[[-4,1],[2,5]]],"
      "\"N\":2,\"m\":1,\"n\":2}");
  EXPECT_EQ(instance_hash(a.instance), instance_hash(b.instance));
  ProblemInstance c = a.instance;
  c.x0(0) = std::nextafter(1.0, 2.0);
  EXPECT_NE(instance_hash(a.instance), instance_hash(c));
}

TEST(Run, SolveReference) {
  const RunResult r = run(Command::kSolve, on(kReference));
  ASSERT_EQ(r.exit_code, kExitOk) << r.message;
  const ordered_json& s = r.report["solve"];
  EXPECT_NEAR(s["lambda_star"][0].get<double>(), -7.2802, 1e-4);
  EXPECT_NEAR(s["lambda_star"][1].get<double>(), -6.6461, 1e-4);
  EXPECT_LE(s["terminal_error"].get<double>(), 1e-6);
  EXPECT_EQ(r.report["version"], kToolVersion);
  EXPECT_EQ(r.report["instance_hash"].get<std::string>().size(), 16u);
}

TEST(Run, LearnReference) {
  const RunResult r = run(Command::kLearn, on(kReference));
  ASSERT_EQ(r.exit_code, kExitOk) << r.message;
  EXPECT_EQ(r.report["seed"], 42u);
  const ordered_json& L = r.report["learn"];
  EXPECT_EQ(L["learning"]["samples"], 30);
  const ordered_json& stage2 = L["learning"]["stages"][2];
  ASSERT_EQ(stage2["k"], 2);
  for (int i = 0; i < 15; ++i) {
    EXPECT_NEAR(stage2["nu"][i].get<double>(), testing::kNu2[i], 1e-6);
  }
  const ordered_json& K2 = L["schedule"]["stages"][2]["K"][0];
  EXPECT_NEAR(K2[0].get<double>(), 4.0 / 7.0, 1e-12);
  EXPECT_NEAR(K2[1].get<double>(), -2.0 / 3.0, 1e-12);
  EXPECT_LE(L["terminal_error"].get<double>(), 1e-6);
}

TEST(Run, SamplesFlagOverridesFile) {
  RunOptions o = on(kReference);
  o.samples = 40;
  const RunResult r = run(Command::kLearn, o);
  ASSERT_EQ(r.exit_code, kExitOk) << r.message;
  EXPECT_EQ(r.report["learn"]["learning"]["samples"], 40);
}

TEST(Run, ReachUnreachableExitsThree) {
  const RunResult r = run(Command::kReach, on(kUnreachable));
  EXPECT_EQ(r.exit_code, kExitNotReachable);
  EXPECT_EQ(r.report["status"], "error");
  EXPECT_EQ(r.report["error"]["code"], "NotReachable");
  EXPECT_EQ(r.report["reachability"]["reachable"], false);
  EXPECT_EQ(r.report["reachability"]["rank"], 0);
}

TEST(Run, ReachReachable) {
  const RunResult r = run(Command::kReach, on(kReference));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["reachability"]["reachable"], true);
  EXPECT_EQ(r.report["reachability"]["rank"], 2);
}

TEST(Run, SolveUnreachableExitsThree) {
  EXPECT_EQ(run(Command::kSolve, on(kUnreachable)).exit_code,
            kExitNotReachable);
}

TEST(Run, SeedIsMandatory) {
  // The unreachable fixture has no learn block, so no fallback seed.
  const RunResult r = run(Command::kLearn, on(kUnreachable));
  EXPECT_EQ(r.exit_code, kExitValidation);
  EXPECT_EQ(r.report["error"]["code"], "InvalidArgument");
  RunOptions c;
  c.trials = 3;
  EXPECT_EQ(run(Command::kCampaign, c).exit_code, kExitValidation);
}

TEST(Run, InsufficientSamplesExitsFour) {
  RunOptions o = on(kReference);
  o.samples = 14;
  const RunResult r = run(Command::kLearn, o);
  EXPECT_EQ(r.exit_code, kExitData);
  EXPECT_EQ(r.report["error"]["code"], "InsufficientSamples");
}

TEST(Run, ParseErrorExitsFive) {
  const std::string path = scratch("broken.json");
  std::ofstream(path) << "{\"n\": 2";
  const RunResult r = run(Command::kSolve, on(path));
  EXPECT_EQ(r.exit_code, kExitIo);
  EXPECT_EQ(r.report["error"]["code"], "ParseError");
  EXPECT_TRUE(r.report["instance_hash"].is_null());
}

TEST(Run, VerifyReference) {
  const RunResult r = run(Command::kVerify, on(kReference));
  ASSERT_EQ(r.exit_code, kExitOk) << r.message;
  const ordered_json& c = r.report["comparison"];
  EXPECT_LE(c["max_gain_error"].get<double>(), 1e-8);
  EXPECT_LE(c["cost_gap"].get<double>(), 1e-8);
  EXPECT_LE(c["learned_terminal_error"].get<double>(), 1e-6);
  EXPECT_EQ(c["per_stage_condition"].size(), 3u);
}

TEST(Run, Campaign) {
  RunOptions o;
  o.trials = 10;
  o.seed = 5;
  const RunResult r = run(Command::kCampaign, o);
  ASSERT_EQ(r.exit_code, kExitOk) << r.message;
  const ordered_json& c = r.report["campaign"];
  EXPECT_EQ(c["trials"], 10);
  EXPECT_EQ(c["reach_disagreements"], 0);
  EXPECT_EQ(c["reachable"].get<int>() + c["unreachable"].get<int>(), 10);
}

TEST(Report, ByteIdenticalAcrossRuns) {
  for (const Command cmd : {Command::kSolve, Command::kLearn, Command::kVerify}) {
    const std::string a = scratch("a.json"), b = scratch("b.json");
    write_report(run(cmd, on(kReference)).report, a);
    write_report(run(cmd, on(kReference)).report, b);
    EXPECT_EQ(slurp(a), slurp(b)) << to_string(cmd);
  }
}

TEST(Report, SeventeenSignificantDigits) {
  ReportFile r;
  r["third"] = 1.0 / 3.0;
  r["inf"] = std::numeric_limits<double>::infinity();
  r["int"] = 3;
  const std::string text = serialize_report(r);
  EXPECT_NE(text.find("0.33333333333333331"), std::string::npos) << text;
  EXPECT_NE(text.find("\"inf\": null"), std::string::npos) << text;
  EXPECT_NE(text.find("\"int\": 3"), std::string::npos) << text;
}

void expect_same_numbers(const ordered_json& a, const ordered_json& b,
                         const std::string& where) {
  ASSERT_EQ(a.type() == ordered_json::value_t::object,
            b.type() == ordered_json::value_t::object)
      << where;
  if (a.is_number()) {
    ASSERT_TRUE(b.is_number()) << where;
    EXPECT_EQ(a.get<double>(), b.get<double>()) << where;
  } else if (a.is_array() || a.is_object()) {
    ASSERT_EQ(a.size(), b.size()) << where;
    if (a.is_array()) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        expect_same_numbers(a[i], b[i], where + "[" + std::to_string(i) + "]");
      }
    } else {
      for (const auto& [k, v] : a.items()) {
        ASSERT_TRUE(b.contains(k)) << where << "." << k;
        expect_same_numbers(v, b[k], where + "." + k);
      }
    }
  } else {
    EXPECT_EQ(a, b) << where;
  }
}

TEST(Report, RoundTrip) {
  for (const Command cmd : {Command::kSolve, Command::kVerify}) {
    const ReportFile original = run(cmd, on(kReference)).report;
    const std::string path = scratch("roundtrip.json");
    write_report(original, path);
    const ReportFile back = read_report(path);
    expect_same_numbers(original, back, to_string(cmd));
    EXPECT_EQ(serialize_report(back), serialize_report(original));
  }
}

TEST(Report, StatesReSimulate) {
  const InstanceFile f = load_instance(kReference);
  for (const Command cmd : {Command::kSolve, Command::kLearn}) {
    const std::string path = scratch("resim.json");
    write_report(run(cmd, on(kReference)).report, path);
    const ReportFile back = read_report(path);
    const ordered_json& traj =
        back[cmd == Command::kSolve ? "solve" : "learn"]["trajectory"];
    Trajectory t;
    for (const auto& x : traj["states"]) t.states.push_back(vector_from_json(x));
    for (const auto& u : traj["inputs"]) t.inputs.push_back(vector_from_json(u));
    ASSERT_EQ(t.states.size(), 4u);
    EXPECT_LE(replay_error(f.instance, t), 1e-12);
    const Trajectory again = rollout(f.instance, open_loop_policy(t.inputs));
    for (std::size_t k = 0; k < t.states.size(); ++k) {
      EXPECT_LE((again.states[k] - t.states[k]).lpNorm<Eigen::Infinity>(),
                1e-12);
    }
  }
}

TEST(Replay, LearnFromLogMatchesPlantByteForByte) {
  const std::string log = scratch("transitions.log");
  RunOptions rec = on(kReference);
  rec.record_path = log;
  const RunResult plant = run(Command::kLearn, rec);
  ASSERT_EQ(plant.exit_code, kExitOk) << plant.message;

  RunOptions rep = on(kReference);
  rep.replay_path = log;
  const RunResult replay = run(Command::kLearn, rep);
  ASSERT_EQ(replay.exit_code, kExitOk) << replay.message;
  EXPECT_EQ(serialize_report(plant.report), serialize_report(replay.report));
}

TEST(Replay, DifferentSeedMissesLog) {
  const std::string log = scratch("transitions_42.log");
  RunOptions rec = on(kReference);
  rec.record_path = log;
  ASSERT_EQ(run(Command::kLearn, rec).exit_code, kExitOk);

  RunOptions rep = on(kReference);
  rep.replay_path = log;
  rep.seed = 43;
  const RunResult r = run(Command::kLearn, rep);
  EXPECT_EQ(r.exit_code, kExitData);
  EXPECT_EQ(r.report["error"]["code"], "OracleMiss");
}

TEST(Replay, FormatRoundTrip) {
  qlearn::TransitionSample s;
  s.k = 1;
  s.x = (Vector(2) << 0.1, -1.0 / 3.0).finished();
  s.u = Vector::Constant(1, 1e-300);
  s.lam = (Vector(2) << 2.5, -0.0).finished();
  s.x_next = (Vector(2) << 1e17, 7).finished();
  const std::string text = "# comment\n\n" + format_replay_log({s});
  const qlearn::ReplayLog log = parse_replay_log(text, 2, 1);
  ASSERT_EQ(log.size(), 1u);
  EXPECT_EQ(log.step(1, s.x, s.u), s.x_next);
  EXPECT_EQ(log.samples()[0].lam, s.lam);
}

TEST(Replay, MalformedLineNamesLine) {
  try {
    parse_replay_log("0 1 2 3 4 5 6 7\n0 1 2 3\n", 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_replay_log("0 1 2 3 4 5 6 x\n", 2, 1), Error);
  EXPECT_THROW(parse_replay_log("0.5 1 2 3 4 5 6 7\n", 2, 1), Error);
}

int tool(const std::string& args) {
  const std::string cmd =
      std::string(TERMLQ_TOOL) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Tool, ExitStatuses) {
  const std::string out = scratch("tool.json");
  EXPECT_EQ(tool("solve --instance " + kReference + " --out " + out), 0);
  EXPECT_NE(slurp(out).find("\"lambda_star\""), std::string::npos);
  EXPECT_EQ(tool("reach --instance " + kUnreachable), 3);
  EXPECT_EQ(tool("learn --instance " + kUnreachable), 2);
  EXPECT_EQ(tool("learn --instance " + kReference + " --samples 10"), 4);
  EXPECT_EQ(tool("solve --instance " + kData + "/missing.json"), 5);
  EXPECT_EQ(tool("frobnicate"), 2);
}

TEST(Tool, OutputMatchesLibrary) {
  const std::string out = scratch("tool_learn.json");
  ASSERT_EQ(tool("learn --instance " + kReference + " --out " + out), 0);
  EXPECT_EQ(slurp(out),
            serialize_report(run(Command::kLearn, on(kReference)).report));
}

}  // namespace
}  // namespace termlq::cli
