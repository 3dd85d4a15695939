#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quatode/eigen.hpp"
#include "quatode/qmatrix.hpp"
#include "quatode/solver.hpp"

namespace quatode::cli {

enum class Format { csv, json };

/// "%.17g": enough digits to round-trip any double.
std::string format_csv_real(double v);

/// Header "t,x1.w,x1.i,x1.j,x1.k,…[,residual]" then one row per sample.
void write_csv(std::ostream& os, const SolutionTable& table, bool with_residual);
void write_json(std::ostream& os, const SolutionTable& table, bool with_residual);

/// Reads back what write_json produced.
SolutionTable read_json_table(std::string_view text);

/// Sampled fundamental matrix: one row per time, entries row-major.
void write_fundamental(std::ostream& os, Format fmt, const std::vector<double>& times,
                       const std::vector<QMatrix>& values);

void write_quaternion(std::ostream& os, Format fmt, std::string_view mode, const Quaternion& q);
void write_real(std::ostream& os, Format fmt, std::string_view mode, double v);
void write_matrix(std::ostream& os, Format fmt, std::string_view mode, const QMatrix& m);
void write_eigenpairs(std::ostream& os, Format fmt, const std::vector<RightEigenpair>& pairs);

}  // namespace quatode::cli
