#include "output.hpp"

#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

#include "quatode/errors.hpp"

namespace quatode::cli {

using nlohmann::json;

std::string format_csv_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

namespace {

void write_components(std::ostream& os, const Quaternion& q) {
  os << ',' << format_csv_real(q.w) << ',' << format_csv_real(q.x) << ','
     << format_csv_real(q.y) << ',' << format_csv_real(q.z);
}

json components(const Quaternion& q) {
  return json::array({q.w, q.x, q.y, q.z});
}

Quaternion from_components(const json& v) {
  if (!v.is_array() || v.size() != 4) {
    throw InputError("quaternion must be an array of 4 numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
}

json matrix_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(components(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_csv(std::ostream& os, const SolutionTable& table, bool with_residual) {
  const std::size_t n = table.values.empty() ? 0 : table.values.front().size();
  os << 't';
  for (std::size_t m = 1; m <= n; ++m) {
    for (const char* part : {"w", "i", "j", "k"}) {
      os << ",x" << m << '.' << part;
    }
  }
  if (with_residual) {
    os << ",residual";
  }
  os << '\n';
  for (std::size_t s = 0; s < table.times.size(); ++s) {
    os << format_csv_real(table.times[s]);
    for (const auto& q : table.values[s]) {
      write_components(os, q);
    }
    if (with_residual) {
      os << ',' << format_csv_real(s < table.residuals.size() ? table.residuals[s] : 0.0);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const SolutionTable& table, bool with_residual) {
  json doc;
  doc["mode"] = to_string(table.mode);
  doc["fundamental"] = table.fundamental;
  doc["quad_tol"] = table.quad_tol;
  doc["times"] = table.times;
  json values = json::array();
  for (const auto& v : table.values) {
    json row = json::array();
    for (const auto& q : v) {
      row.push_back(components(q));
    }
    values.push_back(std::move(row));
  }
  doc["values"] = std::move(values);
  if (with_residual) {
    doc["residuals"] = table.residuals;
  }
  if (table.periodicity_defect) {
    doc["periodicity_defect"] = *table.periodicity_defect;
  }
  if (!table.warnings.empty()) {
    doc["warnings"] = table.warnings;
  }
  os << doc.dump(2) << '\n';
}

SolutionTable read_json_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("solution file is not valid JSON: ") + e.what());
  }
  SolutionTable table;
  try {
    const std::string mode = doc.at("mode").get<std::string>();
    table.mode = mode == "periodic" ? Mode::periodic
                 : mode == "homogeneous" ? Mode::homogeneous
                                         : Mode::ivp;
    table.fundamental = doc.value("fundamental", "");
    table.quad_tol = doc.value("quad_tol", 0.0);
    table.times = doc.at("times").get<std::vector<double>>();
    for (const auto& row : doc.at("values")) {
      QVector v;
      for (const auto& q : row) {
        v.push_back(from_components(q));
      }
      table.values.push_back(std::move(v));
    }
    if (doc.contains("residuals")) {
      table.residuals = doc.at("residuals").get<std::vector<double>>();
    }
    if (doc.contains("periodicity_defect")) {
      table.periodicity_defect = doc.at("periodicity_defect").get<double>();
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed solution file: ") + e.what());
  }
  if (table.values.size() != table.times.size()) {
    throw InputError("malformed solution file: times and values differ in length");
  }
  return table;
}

void write_fundamental(std::ostream& os, Format fmt, const std::vector<double>& times,
                       const std::vector<QMatrix>& values) {
  if (fmt == Format::json) {
    json doc;
    doc["mode"] = "fundamental";
    doc["times"] = times;
    json mats = json::array();
    for (const auto& m : values) {
      mats.push_back(matrix_json(m));
    }
    doc["values"] = std::move(mats);
    os << doc.dump(2) << '\n';
    return;
  }
  const std::size_t n = values.empty() ? 0 : values.front().rows();
  os << 't';
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = 1; c <= n; ++c) {
      for (const char* part : {"w", "i", "j", "k"}) {
        os << ",Phi" << r << c << '.' << part;
      }
    }
  }
  os << '\n';
  for (std::size_t s = 0; s < times.size(); ++s) {
    os << format_csv_real(times[s]);
    for (const auto& q : values[s].entries()) {
      write_components(os, q);
    }
    os << '\n';
  }
}

void write_quaternion(std::ostream& os, Format fmt, std::string_view mode, const Quaternion& q) {
  if (fmt == Format::json) {
    json doc;
    doc["mode"] = mode;
    doc["value"] = to_string(q);
    doc["components"] = components(q);
    os << doc.dump(2) << '\n';
    return;
  }
  os << to_string(q) << '\n';
}

void write_real(std::ostream& os, Format fmt, std::string_view mode, double v) {
  if (fmt == Format::json) {
    json doc;
    doc["mode"] = mode;
    doc["value"] = v;
    os << doc.dump(2) << '\n';
    return;
  }
  os << format_csv_real(v) << '\n';
}

void write_matrix(std::ostream& os, Format fmt, std::string_view mode, const QMatrix& m) {
  if (fmt == Format::json) {
    json doc;
    doc["mode"] = mode;
    json text = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_string(m(r, c)));
      }
      text.push_back(std::move(row));
    }
    doc["value"] = std::move(text);
    doc["components"] = matrix_json(m);
    os << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      os << (c == 0 ? "" : ",") << to_string(m(r, c));
    }
    os << '\n';
  }
}

void write_eigenpairs(std::ostream& os, Format fmt, const std::vector<RightEigenpair>& pairs) {
  if (fmt == Format::json) {
    json doc;
    doc["mode"] = "eig";
    json list = json::array();
    for (const auto& p : pairs) {
      json vec = json::array();
      for (const auto& q : p.vector) {
        vec.push_back(to_string(q));
      }
      list.push_back({{"lambda", to_string(p.value)}, {"vector", std::move(vec)}});
    }
    doc["eigenpairs"] = std::move(list);
    os << doc.dump(2) << '\n';
    return;
  }
  const std::size_t n = pairs.empty() ? 0 : pairs.front().vector.size();
  os << "lambda";
  for (std::size_t m = 1; m <= n; ++m) {
    os << ",v" << m;
  }
  os << '\n';
  for (const auto& p : pairs) {
    os << to_string(p.value);
    for (const auto& q : p.vector) {
      os << ',' << to_string(q);
    }
    os << '\n';
  }
}

}  // namespace quatode::cli
