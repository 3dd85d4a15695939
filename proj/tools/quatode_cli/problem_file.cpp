#include "problem_file.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quatode/errors.hpp"

namespace quatode::cli {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::ivp: return "ivp";
    case Command::homogeneous: return "homogeneous";
    case Command::periodic: return "periodic";
    case Command::fundamental: return "fundamental";
    case Command::detp: return "detp";
    case Command::ddet: return "ddet";
    case Command::inverse: return "inverse";
    case Command::eig: return "eig";
  }
  return "unknown";
}

namespace {

constexpr std::array<std::string_view, 14> kKnownKeys{
    "n",        "mode",      "A",         "f",           "x0",          "t0",   "t_end",
    "T",        "samples",   "quad_tol",  "ode_steps",   "reference",   "description",
    "prefer_eigen"};

[[noreturn]] void schema_error(const std::string& what) {
  throw InputError("schema error: " + what);
}

Command parse_command(const std::string& mode) {
  constexpr std::array<Command, 8> all{Command::ivp,      Command::homogeneous, Command::periodic,
                                       Command::fundamental, Command::detp,     Command::ddet,
                                       Command::inverse,  Command::eig};
  for (const Command c : all) {
    if (to_string(c) == mode) {
      return c;
    }
  }
  schema_error("unknown mode '" + mode +
               "' (expected ivp, homogeneous, periodic, fundamental, detp, ddet, inverse or eig)");
}

double number_at(const json& doc, const char* key, double fallback) {
  if (!doc.contains(key)) {
    return fallback;
  }
  const json& v = doc.at(key);
  if (!v.is_number()) {
    schema_error(std::string("'") + key + "' must be a number");
  }
  return v.get<double>();
}

int positive_int_at(const json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) {
    return fallback;
  }
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 100'000'000) {
    schema_error(std::string("'") + key + "' must be a positive integer");
  }
  return v.get<int>();
}

std::vector<std::string> string_array(const json& v, const std::string& key, std::size_t n) {
  if (!v.is_array() || v.size() != n) {
    schema_error("'" + key + "' must be an array of " + std::to_string(n) + " expression strings");
  }
  std::vector<std::string> out;
  for (const auto& cell : v) {
    if (cell.is_string()) {
      out.push_back(cell.get<std::string>());
    } else if (cell.is_number()) {
      // Bare JSON numbers are accepted as real constants.
      out.push_back(format_real(cell.get<double>()));
    } else {
      schema_error("'" + key + "' entries must be expression strings");
    }
  }
  return out;
}

template <typename F>
auto in_key(const std::string& key, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw e.in_context(key);
  }
}

ExprMatrix parse_coefficients(const json& doc, std::size_t n) {
  if (!doc.contains("A")) {
    schema_error("missing required key 'A'");
  }
  const json& v = doc.at("A");
  if (!v.is_array() || v.size() != n) {
    schema_error("'A' must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<std::string>> cells;
  for (std::size_t r = 0; r < n; ++r) {
    cells.push_back(string_array(v[r], "A[" + std::to_string(r) + "]", n));
  }
  return in_key("A", [&] { return parse_matrix(cells); });
}

bool needs_time_window(Command c) {
  return c == Command::ivp || c == Command::homogeneous || c == Command::periodic ||
         c == Command::fundamental;
}

}  // namespace

ProblemFile parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    schema_error("top level must be a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      schema_error("unknown key '" + key + "'");
    }
  }

  ProblemFile out;
  if (!doc.contains("mode") || !doc.at("mode").is_string()) {
    schema_error("'mode' is required and must be a string");
  }
  out.command = parse_command(doc.at("mode").get<std::string>());

  if (!doc.contains("n") || !doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 1 ||
      doc.at("n").get<long long>() > 64) {
    schema_error("'n' is required and must be an integer in [1, 64]");
  }
  Problem& p = out.problem;
  p.n = doc.at("n").get<std::size_t>();
  p.a = parse_coefficients(doc, p.n);

  if (doc.contains("f")) {
    p.f = in_key("f", [&] { return parse_vector(string_array(doc.at("f"), "f", p.n)); });
  }
  if (doc.contains("reference")) {
    out.reference = in_key("reference", [&] {
      return parse_vector(string_array(doc.at("reference"), "reference", p.n));
    });
  }

  p.t0 = number_at(doc, "t0", 0.0);
  if (needs_time_window(out.command)) {
    if (!doc.contains("t_end")) {
      schema_error("mode '" + to_string(out.command) + "' requires 't_end'");
    }
    p.t_end = number_at(doc, "t_end", 0.0);
  } else {
    p.t_end = number_at(doc, "t_end", p.t0 + 1.0);
  }

  p.settings.samples = positive_int_at(doc, "samples", 101);
  p.settings.ode_steps = positive_int_at(doc, "ode_steps", 4096);
  p.settings.quad_tol = number_at(doc, "quad_tol", 1e-10);
  if (doc.contains("prefer_eigen")) {
    if (!doc.at("prefer_eigen").is_boolean()) {
      schema_error("'prefer_eigen' must be a boolean");
    }
    p.settings.prefer_eigen = doc.at("prefer_eigen").get<bool>();
  }

  const bool wants_x0 = out.command == Command::ivp || out.command == Command::homogeneous;
  if (doc.contains("x0") && !wants_x0) {
    schema_error("'x0' is only allowed in ivp and homogeneous modes");
  }
  if (wants_x0) {
    if (!doc.contains("x0")) {
      schema_error("mode '" + to_string(out.command) + "' requires 'x0'");
    }
    const auto cells = string_array(doc.at("x0"), "x0", p.n);
    for (std::size_t r = 0; r < cells.size(); ++r) {
      const std::string where = "x0 entry [" + std::to_string(r) + "]";
      try {
        p.x0.push_back(in_key(where, [&] { return parse_quaternion(cells[r]); }));
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        schema_error(where + ": " + e.what());
      }
    }
  }

  if (doc.contains("T") && out.command != Command::periodic) {
    schema_error("'T' is only allowed in periodic mode");
  }
  if (out.command == Command::periodic) {
    if (!doc.contains("T")) {
      schema_error("periodic mode requires 'T'");
    }
    p.period = number_at(doc, "T", 0.0);
  }

  switch (out.command) {
    case Command::ivp: p.mode = Mode::ivp; break;
    case Command::homogeneous: p.mode = Mode::homogeneous; break;
    case Command::periodic: p.mode = Mode::periodic; break;
    default: break;
  }
  if (out.command == Command::ivp || out.command == Command::homogeneous ||
      out.command == Command::periodic) {
    p.validate();
  } else if (out.command == Command::fundamental && !(p.t0 < p.t_end)) {
    schema_error("t0 must be smaller than t_end");
  }
  return out;
}

ProblemFile load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open problem file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace quatode::cli
