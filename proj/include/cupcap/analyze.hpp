#pragma once

#include "cupcap/chain.hpp"
#include "cupcap/convexify.hpp"
#include "cupcap/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cupcap {

struct AnalyzeOptions {
    int n = 6; // target polygon size for the bound comparison and search
    bool certificates = false;
    int cert_m = 5;
    int cert_l = 5;
};

// Everything `analyze` reports about one input set.
struct AnalysisReport {
    std::size_t set_size = 0;
    std::optional<Chain> longest_cup;   // absent when degenerate
    std::optional<Chain> longest_cap;
    std::optional<ConvexPolygon> largest_convex; // absent below 3 points
    std::size_t upper_size = 0;                  // zero when |S| < 2
    std::size_t lower_size = 0;

    int n = 6;
    std::string ngon_bound;      // decimal string of the guarantee threshold
    bool ngon_guaranteed = false;
    std::optional<ConvexPolygon> ngon; // present when the search ran and succeeded
    std::string ngon_note;

    std::string certificate_tree; // empty unless requested
    std::string certificate_note;
};

AnalysisReport analyze_set(const PointSet& s, const AnalyzeOptions& options);

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r); // schema_version 1

} // namespace cupcap
