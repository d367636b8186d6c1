#pragma once

#include "cupcap/geometry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cupcap {

// Point text format: one `x y` pair per line, coordinates as optionally
// signed decimal integers or fractions `p/q` (q positive); `#` starts a
// comment line; blank lines are skipped. Throws ParseError with the
// 1-based line number.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

void write_points(std::ostream& out, const std::vector<Point>& pts,
                  const std::vector<std::string>& comments = {});
void write_points_file(const std::string& path, const std::vector<Point>& pts,
                       const std::vector<std::string>& comments = {});

} // namespace cupcap
