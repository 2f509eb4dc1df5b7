// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "relsemi/errors.hpp"

namespace relsemi::io {

namespace {

std::vector<double> flat(const Matrix& m, bool imag) {
  std::vector<double> out;
  out.reserve(m.size());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out.push_back(imag ? m(i, j).imag() : m(i, j).real());
  return out;
}

std::vector<double> numbers(const Json& j, const char* what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + ": expected an array");
  std::vector<double> out;
  for (const auto& e : j) {
    if (e.is_array()) {
      for (const auto& x : e) {
        if (!x.is_number()) throw ConfigError(std::string(what) + ": non-numeric entry");
        out.push_back(x.get<double>());
      }
    } else {
      if (!e.is_number()) throw ConfigError(std::string(what) + ": non-numeric entry");
      out.push_back(e.get<double>());
    }
  }
  return out;
}

template <class T>
T field_or(const Json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw ConfigError(std::string(what) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string(what) + ": field '" + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["field"] = std::string(to_string(s.field()));
  j["basis_real"] = flat(s.basis(), false);
  j["basis_imag"] = flat(s.basis(), true);
  j["rank_tol"] = s.rank_tol();
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const auto m = field_or<Index>(j, "ambient_dim", "subspace");
  const Field f = field_from_string(field_or<std::string>(j, "field", "subspace"));
  const double tol = j.contains("rank_tol") ? j["rank_tol"].get<double>() : kDefaultRankTol;
  const std::vector<double> re = numbers(field_or<Json>(j, "basis_real", "subspace"), "basis_real");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("basis_imag")) im = numbers(j["basis_imag"], "basis_imag");
  if (m < 0 || im.size() != re.size() || (m > 0 && re.size() % m != 0) || (m == 0 && !re.empty()))
    throw ConfigError("subspace: basis size does not match ambient_dim");
  const Index r = m == 0 ? 0 : static_cast<Index>(re.size()) / m;
  Matrix b(m, r);
  for (Index k = 0; k < m * r; ++k) b(k % m, k / m) = Scalar(re[k], im[k]);
  // Re-span rather than trust the stored orthonormality.
  return Subspace::from_spanning(b, tol, f);
}

Json to_json(const LinearRelation& a) {
  Json j;
  j["state_dim"] = a.state_dim();
  j["field"] = std::string(to_string(a.field()));
  j["graph"] = to_json(a.graph());
  return j;
}

LinearRelation relation_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("relation: expected an object");
  if (j.contains("graph")) {
    Subspace g = subspace_from_json(j["graph"]);
    if (j.contains("state_dim") && 2 * j["state_dim"].get<Index>() != g.ambient_dim())
      throw ConfigError("relation: state_dim does not match graph ambient_dim");
    return LinearRelation(std::move(g));
  }
  if (j.contains("matrix_real")) {
    const std::vector<double> re = numbers(j["matrix_real"], "matrix_real");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("matrix_imag")) im = numbers(j["matrix_imag"], "matrix_imag");
    const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(re.size()))));
    if (d * d != static_cast<Index>(re.size()) || im.size() != re.size())
      throw ConfigError("relation: matrix must be square");
    if (j.contains("state_dim") && j["state_dim"].get<Index>() != d)
      throw ConfigError("relation: state_dim does not match matrix size");
    Matrix m(d, d);
    for (Index k = 0; k < d * d; ++k) m(k / d, k % d) = Scalar(re[k], im[k]);
    Field f = j.contains("field") ? field_from_string(j["field"].get<std::string>()) : field_of(m);
    return LinearRelation::from_matrix(m, join(f, field_of(m)));
  }
  throw ConfigError("relation: need 'graph' or 'matrix_real'");
}

Vector vector_from_json(const Json& j) {
  if (j.is_array()) {
    const std::vector<double> re = numbers(j, "vector");
    Vector v(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) v(k) = re[k];
    return v;
  }
  if (j.is_object() && j.contains("real")) {
    const std::vector<double> re = numbers(j["real"], "vector.real");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("imag")) im = numbers(j["imag"], "vector.imag");
    if (im.size() != re.size()) throw ConfigError("vector: real and imag lengths differ");
    Vector v(re.size());
    for (std::size_t k = 0; k < re.size(); ++k) v(k) = Scalar(re[k], im[k]);
    return v;
  }
  throw ConfigError("vector: expected an array or {real, imag}");
}

Matrix matrix_from_json(const Json& j) {
  auto rows_of = [](const Json& r, const char* what) {
    if (!r.is_array() || r.empty()) throw ConfigError(std::string(what) + ": expected a nonempty list of rows");
    std::vector<std::vector<double>> out;
    for (const auto& row : r) {
      if (!row.is_array()) throw ConfigError(std::string(what) + ": each row must be an array");
      out.push_back(numbers(row, what));
      if (out.back().size() != out.front().size()) throw ConfigError(std::string(what) + ": ragged rows");
    }
    return out;
  };
  const bool split = j.is_object();
  if (split && !j.contains("real")) throw ConfigError("matrix: need 'real'");
  const auto re = rows_of(split ? j["real"] : j, "matrix.real");
  std::vector<std::vector<double>> im;
  if (split && j.contains("imag")) {
    im = rows_of(j["imag"], "matrix.imag");
    if (im.size() != re.size() || im.front().size() != re.front().size())
      throw ConfigError("matrix: real and imag shapes differ");
  }
  Matrix m(static_cast<Index>(re.size()), static_cast<Index>(re.front().size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) m(i, k) = Scalar(re[i][k], im.empty() ? 0.0 : im[i][k]);
  return m;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("grid '" + spec + "': '" + item + "' is not a number");
    }
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw ConfigError("grid '" + spec + "': expected a:step:b");
  const double a = parts[0], step = parts[1], b = parts[2];
  if (!(step > 0.0) || !std::isfinite(a) || !std::isfinite(b)) throw ConfigError("grid '" + spec + "': bad step");
  if (b < a) throw ConfigError("grid '" + spec + "' is empty");
  const auto n = static_cast<long long>(std::floor((b - a) / step + 1e-9));
  if (n > 10000000) throw ConfigError("grid '" + spec + "' is too large");
  std::vector<double> out;
  for (long long k = 0; k <= n; ++k) out.push_back(a + static_cast<double>(k) * step);
  return out;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv(const std::string& schema, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "# " << schema << "\n";
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << "\n";
  }
  return os.str();
}

std::string svg_line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                           const std::vector<Series>& series, bool log_y) {
  const double w = 640, h = 420, left = 70, right = 20, top = 40, bottom = 55;
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  auto ty = [&](double y) { return log_y ? std::log10(y) : y; };
  for (const auto& s : series)
    for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
      if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k]) || (log_y && s.y[k] <= 0)) continue;
      x0 = std::min(x0, s.x[k]);
      x1 = std::max(x1, s.x[k]);
      y0 = std::min(y0, ty(s.y[k]));
      y1 = std::max(y1, ty(s.y[k]));
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (w - left - right); };
  auto py = [&](double y) { return h - bottom - (ty(y) - y0) / (y1 - y0) * (h - top - bottom); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
     << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
    const double xp = left + (w - left - right) * k / 4, yp = h - bottom - (h - top - bottom) * k / 4;
    os << "<text x=\"" << xp << "\" y=\"" << h - bottom + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
       << xv << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << yp + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
       << (log_y ? "1e" : "") << yv << "</text>\n";
  }
  os << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\" font-size=\"13\">"
     << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << (top + h - bottom) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
     << "transform=\"rotate(-90 16 " << (top + h - bottom) / 2 << ")\">" << y_label << "</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* c = colors[s % 6];
    os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < series[s].x.size() && k < series[s].y.size(); ++k) {
      const double y = series[s].y[k];
      if (!std::isfinite(y) || (log_y && y <= 0)) continue;
      os << px(series[s].x[k]) << "," << py(y) << " ";
    }
    os << "\"/>\n";
    os << "<text x=\"" << w - right - 6 << "\" y=\"" << top + 14 * (s + 1) << "\" text-anchor=\"end\" fill=\"" << c
       << "\" font-size=\"12\">" << series[s].label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace relsemi::io
