#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "app.hpp"
#include "output.hpp"
#include "problem_file.hpp"
#include "quatode/errors.hpp"
#include "quatode/verify.hpp"

using namespace quatode;
using namespace quatode::cli;

namespace {

const std::filesystem::path kData = QUATODE_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// A problem file in the temp directory that removes itself.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("quatode_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
             ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

std::string fixture(const std::string& name) { return (kData / name).string(); }

}  // namespace

TEST_CASE("matrix modes print the expected values") {
  const Result detp = run_cli({"-i", fixture("detp_2x2.json")});
  CHECK(detp.code == kExitOk);
  CHECK(detp.out == "-2i\n");
  const Result dd = run_cli({"-i", fixture("ddet_2x2.json")});
  CHECK(dd.code == kExitOk);
  CHECK(dd.out == "4\n");
  const Result inv = run_cli({"-i", fixture("inverse_2x2.json")});
  CHECK(inv.code == kExitOk);
  CHECK(inv.out == "-0.5j,0.5\n0.5i,-0.5k\n");
}

TEST_CASE("ivp CSV output") {
  const Result r = run_cli({"-i", fixture("ivp_diagonal_jk.json")});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "t,x1.w,x1.i,x1.j,x1.k,x2.w,x2.i,x2.j,x2.k");
  CHECK(rows[1] == "0,0,0,1,0,0,0,0,1");
  CHECK(r.err.empty());
}

TEST_CASE("verify flag reports diagnostics and appends residuals") {
  const Result r = run_cli({"-i", fixture("ivp_lower_triangular.json"), "--verify"});
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out)[0].ends_with(",residual"));
  CHECK(r.err.find("max interior residual") != std::string::npos);
  CHECK(r.err.find("distance to reference") != std::string::npos);
}

TEST_CASE("periodic fixtures") {
  const Result ok = run_cli({"-i", fixture("periodic_scalar.json"), "--verify"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.err.find("periodicity defect") != std::string::npos);
  const Result q = run_cli({"-i", fixture("periodic_quaternion.json")});
  CHECK(q.code == kExitOk);
  const Result resonant = run_cli({"-i", fixture("periodic_resonant.json")});
  CHECK(resonant.code == kExitNumericalError);
  CHECK(resonant.err.find("singular") != std::string::npos);
}

TEST_CASE("other fixtures run") {
  for (const char* name : {"ivp_time_varying.json", "fundamental_diagonal_jk.json",
                           "eig_lower_triangular.json"}) {
    CAPTURE(name);
    CHECK(run_cli({"-i", fixture(name)}).code == kExitOk);
  }
}

TEST_CASE("JSON output round trip") {
  const Result r = run_cli({"-i", fixture("ivp_lower_triangular.json"), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const SolutionTable back = read_json_table(r.out);
  const ProblemFile file = load_problem(fixture("ivp_lower_triangular.json"));
  const SolutionTable direct = solve(file.problem);
  CHECK(back.times == direct.times);
  CHECK(verify::compare(back, direct) == 0.0);
  CHECK(back.fundamental == "exponential");
}

TEST_CASE("output is deterministic") {
  const Result a = run_cli({"-i", fixture("ivp_lower_triangular.json")});
  const Result b = run_cli({"-i", fixture("ivp_lower_triangular.json")});
  CHECK(a.out == b.out);
}

TEST_CASE("option overrides") {
  const Result r = run_cli({"-i", fixture("ivp_diagonal_jk.json"), "--samples", "11"});
  REQUIRE(r.code == kExitOk);
  CHECK(lines(r.out).size() == 12);
  CHECK(run_cli({"-i", fixture("ivp_diagonal_jk.json"), "--samples", "1"}).code ==
        kExitInputError);
  CHECK(run_cli({"-i", fixture("ivp_diagonal_jk.json"), "--tol", "-1"}).code == kExitInputError);
  CHECK(run_cli({"-i", fixture("ivp_diagonal_jk.json"), "--format", "xml"}).code ==
        kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == kExitInputError);
  CHECK(run_cli({"-i", fixture("does_not_exist.json")}).code == kExitInputError);
  const Result help = run_cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("--input") != std::string::npos);
}

TEST_CASE("schema errors exit with the input code") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"], "t_end": 1, "bogus": 1})",
       "unknown key 'bogus'"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "t_end": 1})", "requires 'x0'"},
      {R"({"mode": "ivp", "n": 2, "A": [["1"]], "x0": ["1", "1"], "t_end": 1})", "'A'"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["t"], "t_end": 1})", "x0"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"]})", "t_end"},
      {R"({"mode": "periodic", "n": 1, "A": [["1"]], "t_end": 1})", "'T'"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"], "t_end": 1, "T": 2})", "'T'"},
      {R"({"mode": "warp", "n": 1, "A": [["1"]]})", "unknown mode"},
      {R"({"mode": "ivp", "n": 0, "A": []})", "'n'"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"], "t_end": 1, "samples": 0})",
       "samples"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"], "t_end": 1, "f": ["2t"]})",
       "implicit multiplication"},
      {R"({"mode": "ivp", "n": 1, "A": [["1"]], "x0": ["1"], "t_end": 1, "f": [true]})", "'f'"},
      {R"([1, 2])", "JSON object"},
      {R"({"mode": )", "not valid JSON"},
  };
  for (const auto& [text, needle] : cases) {
    CAPTURE(text);
    TempFile file(text);
    const Result r = run_cli({"-i", file.path()});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find(needle) != std::string::npos);
  }
}

TEST_CASE("parse errors name the key and cell") {
  try {
    parse_problem(R"({"mode": "detp", "n": 2, "A": [["1", "2"], ["3", "(4"]]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("A") != std::string::npos);
    CHECK(what.find("[1][1]") != std::string::npos);
  }
}

TEST_CASE("numerical failures exit with the numerical code") {
  TempFile singular(R"({"mode": "inverse", "n": 2, "A": [["1", "i"], ["j", "-k"]]})");
  const Result r = run_cli({"-i", singular.path()});
  CHECK(r.code == kExitNumericalError);
  TempFile defective(R"({"mode": "eig", "n": 2, "A": [["1", "1"], ["0", "1"]]})");
  CHECK(run_cli({"-i", defective.path()}).code == kExitNumericalError);
  TempFile varying(R"({"mode": "eig", "n": 1, "A": [["t"]]})");
  CHECK(run_cli({"-i", varying.path()}).code == kExitInputError);
}

TEST_CASE("output file option") {
  const auto target = std::filesystem::temp_directory_path() / "quatode_cli_test_out.csv";
  const Result r = run_cli({"-i", fixture("detp_2x2.json"), "-o", target.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(target);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "-2i\n");
  std::filesystem::remove(target);
}
