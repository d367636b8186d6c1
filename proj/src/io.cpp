#include "cupcap/io.hpp"

#include "cupcap/errors.hpp"

#include <fstream>
#include <sstream>

namespace cupcap {

std::vector<Point> read_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string xs, ys, extra;
        if (!(ss >> xs)) continue; // blank or comment-only line
        if (!(ss >> ys)) throw ParseError("expected two coordinates", lineno);
        if (ss >> extra) throw ParseError("trailing tokens after the two coordinates", lineno);
        try {
            pts.push_back({Scalar::parse(xs), Scalar::parse(ys)});
        } catch (const Error&) {
            throw ParseError("malformed coordinate", lineno);
        }
    }
    return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& pts,
                  const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    for (const Point& p : pts) out << p.x << " " << p.y << "\n";
}

void write_points_file(const std::string& path, const std::vector<Point>& pts,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
    write_points(out, pts, comments);
}

} // namespace cupcap
