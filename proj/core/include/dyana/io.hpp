#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyana/dyadic.hpp"
#include "dyana/hardy.hpp"
#include "dyana/linalg.hpp"
#include "dyana/quasisym.hpp"
#include "dyana/varmin.hpp"

namespace dyana::io {

/// Malformed input; the message carries the offending field or line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, locale-independent.
std::string format_double(double v);

// {"m": int, "values": [number | [re,im], ...]}
std::string stepfn_to_json(const DyadicStepFn& f);
DyadicStepFn stepfn_from_json(const std::string& text);

// {"rows": r, "cols": c, "entries": [[re,im], ...]} row-major
std::string matrix_to_json(const Matrix& a);
Matrix matrix_from_json(const std::string& text);

// {"lambda":..., "intervals":[[k,j],...], "measure":..., "bound":...}
std::string level_set_to_json(const LevelSetReport& rep);

// {"c0":..., "coeffs":[{"k":..,"j":..,"value":..}, ...]}
std::string haar_to_json(const HaarExpansion& e);

struct GridProblem {
  GridDomain domain;
  std::map<std::size_t, cd> boundary;
};

// {"n":dim, "points":[[...],...], "boundary_values":{"(x1,..)": value}}
GridProblem grid_from_json(const std::string& text);
std::string solution_to_csv(const GridDomain& U, const GridFn& f);

// "t,eta" header plus one row per bucket
std::string modulus_table_to_csv(const ModulusTable& table);

struct MapSamples {
  std::vector<Eigen::VectorXd> source;
  std::vector<Eigen::VectorXd> target;
};

// "source,target" header plus scalar rows
MapSamples map_samples_from_csv(const std::string& text);
std::string intervals_to_json(const std::vector<RealInterval>& intervals);

}  // namespace dyana::io
