#include "dyana/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace dyana::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json number_or_pair(cd v) {
  if (v.imag() == 0.0) return v.real();
  return json::array({v.real(), v.imag()});
}

cd scalar_from(const json& j, const std::string& where) {
  if (j.is_number()) return cd(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd(j[0].get<double>(), j[1].get<double>());
  throw ParseError("expected number or [re,im] at " + where);
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON input");
  return j;
}

// raw emission so floats keep 17 significant digits
void emit(std::ostringstream& os, const json& j) {
  switch (j.type()) {
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      break;
    case json::value_t::array: {
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << ',';
        first = false;
        emit(os, e);
      }
      os << ']';
      break;
    }
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << json(it.key()).dump() << ':';
        emit(os, it.value());
      }
      os << '}';
      break;
    }
    default:
      os << j.dump();
  }
}

std::string dump17(const json& j) {
  std::ostringstream os;
  emit(os, j);
  return os.str();
}

}  // namespace

std::string stepfn_to_json(const DyadicStepFn& f) {
  json j;
  j["m"] = f.resolution();
  json vals = json::array();
  for (const cd& v : f.values()) vals.push_back(number_or_pair(v));
  j["values"] = vals;
  return dump17(j);
}

DyadicStepFn stepfn_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("values"))
    throw ParseError("step function needs fields \"m\" and \"values\"");
  if (!j["m"].is_number_integer()) throw ParseError("field \"m\" must be an integer");
  const int m = j["m"].get<int>();
  if (m < 0 || m > 26) throw ParseError("field \"m\" out of range [0,26]");
  if (!j["values"].is_array()) throw ParseError("field \"values\" must be an array");
  std::vector<cd> vals;
  vals.reserve(j["values"].size());
  for (std::size_t i = 0; i < j["values"].size(); ++i)
    vals.push_back(scalar_from(j["values"][i], "values[" + std::to_string(i) + "]"));
  if (vals.size() != (std::size_t{1} << m))
    throw ParseError("field \"values\" must hold exactly 2^m entries");
  return DyadicStepFn(m, std::move(vals));
}

std::string matrix_to_json(const Matrix& a) {
  json j;
  j["rows"] = static_cast<int>(a.rows());
  j["cols"] = static_cast<int>(a.cols());
  json entries = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      entries.push_back(json::array({a(r, c).real(), a(r, c).imag()}));
  j["entries"] = entries;
  return dump17(j);
}

Matrix matrix_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix needs fields \"rows\", \"cols\", \"entries\"");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("matrix dimensions must be integers");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  if (rows < 1 || cols < 1 || rows > 4096 || cols > 4096)
    throw ParseError("matrix dimensions out of range");
  if (!j["entries"].is_array() ||
      j["entries"].size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ParseError("field \"entries\" must hold rows*cols pairs");
  Matrix a(rows, cols);
  std::size_t idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      a(r, c) = scalar_from(j["entries"][idx], "entries[" + std::to_string(idx) + "]");
      ++idx;
    }
  return a;
}

std::string level_set_to_json(const LevelSetReport& rep) {
  json j;
  j["lambda"] = rep.lambda;
  json iv = json::array();
  for (const auto& I : rep.intervals)
    iv.push_back(json::array({I.k, static_cast<std::uint64_t>(I.j)}));
  j["intervals"] = iv;
  j["measure"] = rep.measure;
  j["bound"] = rep.bound;
  j["refined_bound"] = rep.refined_bound;
  return dump17(j);
}

std::string haar_to_json(const HaarExpansion& e) {
  json j;
  j["c0"] = number_or_pair(e.c0);
  json coeffs = json::array();
  for (const auto& [I, c] : e.coeffs) {
    json entry;
    entry["k"] = I.k;
    entry["j"] = static_cast<std::uint64_t>(I.j);
    entry["value"] = number_or_pair(c);
    coeffs.push_back(entry);
  }
  j["coeffs"] = coeffs;
  return dump17(j);
}

GridProblem grid_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("points"))
    throw ParseError("grid needs fields \"n\" and \"points\"");
  if (!j["n"].is_number_integer()) throw ParseError("field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["points"].is_array()) throw ParseError("field \"points\" must be an array");
  std::vector<GridPoint> pts;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    const json& p = j["points"][i];
    if (!p.is_array() || p.size() != static_cast<std::size_t>(n))
      throw ParseError("points[" + std::to_string(i) + "] must hold n integers");
    GridPoint gp;
    for (const auto& c : p) {
      if (!c.is_number_integer())
        throw ParseError("points[" + std::to_string(i) + "] must hold integers");
      gp.push_back(c.get<int>());
    }
    pts.push_back(std::move(gp));
  }
  GridProblem prob{GridDomain(n, std::move(pts)), {}};

  if (j.contains("boundary_values")) {
    if (!j["boundary_values"].is_object())
      throw ParseError("field \"boundary_values\" must be an object");
    for (auto it = j["boundary_values"].begin(); it != j["boundary_values"].end(); ++it) {
      // key "(x1,x2,...)"
      const std::string& key = it.key();
      if (key.size() < 2 || key.front() != '(' || key.back() != ')')
        throw ParseError("boundary key must look like \"(x1,..,xn)\": " + key);
      GridPoint gp;
      std::stringstream ss(key.substr(1, key.size() - 2));
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          gp.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw ParseError("bad coordinate in boundary key " + key);
        }
      }
      const auto idx = prob.domain.index_of(gp);
      if (!idx) throw ParseError("boundary key " + key + " is not a domain point");
      prob.boundary[*idx] = scalar_from(it.value(), "boundary_values[" + key + "]");
    }
  }
  return prob;
}

std::string solution_to_csv(const GridDomain& U, const GridFn& f) {
  std::ostringstream os;
  os << "point,value\n";
  for (std::size_t i = 0; i < U.size(); ++i) {
    os << "\"(";
    for (std::size_t d = 0; d < U.points[i].size(); ++d) {
      if (d) os << ',';
      os << U.points[i][d];
    }
    os << ")\",";
    if (f[i].imag() == 0.0)
      os << format_double(f[i].real());
    else
      os << format_double(f[i].real()) << "+" << format_double(f[i].imag()) << "i";
    os << '\n';
  }
  return os.str();
}

std::string modulus_table_to_csv(const ModulusTable& table) {
  std::ostringstream os;
  os << "t,eta\n";
  for (std::size_t i = 0; i < table.t.size(); ++i)
    os << format_double(table.t[i]) << ',' << format_double(table.eta[i]) << '\n';
  return os.str();
}

MapSamples map_samples_from_csv(const std::string& text) {
  MapSamples out;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("source", 0) == 0) continue;  // header
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected source,target");
    try {
      Eigen::VectorXd s(1), t(1);
      s[0] = std::stod(line.substr(0, comma));
      t[0] = std::stod(line.substr(comma + 1));
      out.source.push_back(s);
      out.target.push_back(t);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad number");
    }
  }
  if (out.source.size() < 3) throw ParseError("need at least 3 sample rows");
  return out;
}

std::string intervals_to_json(const std::vector<RealInterval>& intervals) {
  json arr = json::array();
  for (const auto& I : intervals) arr.push_back(json::array({I.a, I.b}));
  return dump17(arr);
}

}  // namespace dyana::io
