#include "app.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "output.hpp"
#include "problem_file.hpp"
#include "quatode/determinant.hpp"
#include "quatode/eigen.hpp"
#include "quatode/errors.hpp"
#include "quatode/solver.hpp"
#include "quatode/verify.hpp"

namespace quatode::cli {

namespace {

struct Options {
  std::string input;
  std::string output = "-";
  Format format = Format::csv;
  std::optional<double> tol;
  std::optional<int> samples;
  bool verify = false;
};

void execute(const Options& opts, std::ostream& out, std::ostream& err) {
  ProblemFile file = load_problem(opts.input);
  Problem& p = file.problem;
  if (opts.tol) {
    if (!(*opts.tol > 0.0)) {
      throw InputError("--tol must be positive");
    }
    p.settings.quad_tol = *opts.tol;
  }
  if (opts.samples) {
    if (*opts.samples < 2) {
      throw InputError("--samples must be at least 2");
    }
    p.settings.samples = *opts.samples;
  }

  switch (file.command) {
    case Command::ivp:
    case Command::homogeneous:
    case Command::periodic: {
      SolutionTable table = solve(p);
      for (const auto& w : table.warnings) {
        err << "warning: " << w << '\n';
      }
      if (opts.verify) {
        const ExprVector no_forcing;
        const double worst = verify::residual_max(
            table, p.a, p.mode == Mode::homogeneous ? no_forcing : p.f);
        err << "max interior residual: " << format_csv_real(worst) << '\n';
        if (file.reference) {
          err << "distance to reference: "
              << format_csv_real(verify::compare(table, *file.reference)) << '\n';
        }
        if (table.periodicity_defect) {
          err << "periodicity defect |x(0) - x(T)|: "
              << format_csv_real(*table.periodicity_defect) << '\n';
        }
      }
      if (opts.format == Format::json) {
        write_json(out, table, opts.verify);
      } else {
        write_csv(out, table, opts.verify);
      }
      return;
    }
    case Command::fundamental: {
      const FundamentalMatrix phi = make_fundamental(p.a, p.t0, p.t0, p.t_end, p.settings);
      const auto times = sample_grid(p.t0, p.t_end, p.settings.samples);
      std::vector<QMatrix> values;
      for (const double t : times) {
        values.push_back(phi(t));
      }
      write_fundamental(out, opts.format, times, values);
      return;
    }
    case Command::detp:
      write_quaternion(out, opts.format, "detp", det_p(eval_matrix(p.a, p.t0)));
      return;
    case Command::ddet:
      write_real(out, opts.format, "ddet", ddet(eval_matrix(p.a, p.t0)));
      return;
    case Command::inverse:
      write_matrix(out, opts.format, "inverse", inverse(eval_matrix(p.a, p.t0)));
      return;
    case Command::eig:
      if (!is_constant(p.a, p.t0, p.t_end)) {
        throw InputError("mode 'eig' needs a constant coefficient matrix");
      }
      write_eigenpairs(out, opts.format, right_eigenpairs(eval_matrix(p.a, p.t0)));
      return;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve linear quaternion-valued ODEs x' = A(t)x + f(t)", "quatode"};
  Options opts;
  app.add_option("-i,--input", opts.input, "Problem file (JSON)")->required()->type_name("PATH");
  app.add_option("-o,--output", opts.output, "Output path, '-' for stdout")
      ->capture_default_str()
      ->type_name("PATH");
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  app.add_option("--format", opts.format, "Output format: csv (default) or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("FORMAT");
  app.add_option("--tol", opts.tol, "Override quad_tol")->type_name("TOL");
  app.add_option("--samples", opts.samples, "Override the number of output samples")
      ->type_name("N");
  app.add_flag("--verify", opts.verify,
               "Append finite-difference residuals and report diagnostics on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (opts.output == "-") {
      execute(opts, out, err);
    } else {
      std::ofstream file(opts.output, std::ios::binary);
      if (!file) {
        throw InputError("cannot open output file '" + opts.output + "'");
      }
      execute(opts, file, err);
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const SingularMatrixError& e) {
    err << "numerical failure: singular matrix: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const QuadratureError& e) {
    err << "numerical failure: quadrature: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalError;
  }
  return kExitOk;
}

}  // namespace quatode::cli
