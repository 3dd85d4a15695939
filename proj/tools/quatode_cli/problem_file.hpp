#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "quatode/expr.hpp"
#include "quatode/solver.hpp"

namespace quatode::cli {

enum class Command { ivp, homogeneous, periodic, fundamental, detp, ddet, inverse, eig };

std::string to_string(Command c);

/// A parsed problem file: which command to run plus everything the solver
/// needs. Matrix-only commands (detp, ddet, inverse, eig) evaluate A at t0.
struct ProblemFile {
  Command command = Command::ivp;
  Problem problem;
  std::optional<ExprVector> reference;  // closed form to compare against, if given
};

/// Parses the JSON problem schema. Schema violations and expression syntax
/// errors throw InputError (ParseError for the latter, naming the key and
/// cell).
ProblemFile parse_problem(std::string_view json_text);
ProblemFile load_problem(const std::filesystem::path& path);

}  // namespace quatode::cli
