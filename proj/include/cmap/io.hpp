#pragma once

#include "cmap/eval.hpp"
#include "cmap/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cmap::io {

/// "%.17g": enough digits to round-trip every double.
std::string format_real(Real x);

/// Parses "1.5+1.0i", "-0.3i", "2", "i", "1-i" (whitespace ignored).
Complex parse_complex(const std::string& text);

/// Region file: {"curves":[{"kind":"ellipse","center":[re,im],"a":..,"b":..,"rot":..}, ...]}
Region parse_region(const std::string& json_text);
Region load_region(const std::string& path);
std::string region_json(const Region& region);

/// Solution file.  Besides the documented fields it carries the region and the
/// auxiliary parameters so that a loaded solution can be evaluated directly.
std::string solution_json(const MapSolution& sol);
MapSolution parse_solution(const std::string& json_text);
MapSolution load_solution(const std::string& path);

void write_eval_csv(std::ostream& os, const std::vector<PointEvaluation>& rows);
void write_invert_csv(std::ostream& os, const std::vector<InverseEvaluation>& rows);
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows, bool timing = true);
void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines);
/// Plain polylines, y axis pointing up; points far outside the boundary
/// image's bounding box are clipped.
void write_polylines_svg(std::ostream& os, const std::vector<Polyline>& lines);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace cmap::io
