#include "cupcap/analyze.hpp"

#include "cupcap/bounds.hpp"
#include "cupcap/errors.hpp"
#include "cupcap/partition.hpp"
#include "cupcap/pipeline.hpp"

#include <json.hpp>

#include <sstream>

namespace cupcap {

AnalysisReport analyze_set(const PointSet& s, const AnalyzeOptions& options) {
    AnalysisReport r;
    r.set_size = s.size();
    r.n = options.n;

    if (s.size() >= 3) {
        Chain cup = longest_chain(s, ChainKind::Cup);
        if (!cup.is_degenerate()) r.longest_cup = cup;
        Chain cap = longest_chain(s, ChainKind::Cap);
        if (!cap.is_degenerate()) r.longest_cap = cap;
        r.largest_convex = largest_convex_subset(s);
    }
    if (s.size() >= 2) {
        Partition part = ul_partition(s);
        r.upper_size = part.upper().size();
        r.lower_size = part.lower().size();
    }

    const BigInt bound =
        binomial(2 * options.n - 5, options.n - 2) - binomial(2 * options.n - 8, options.n - 3) + 2;
    r.ngon_bound = bound.str();
    r.ngon_guaranteed = BigInt(s.size()) >= bound;
    if (r.ngon_guaranteed) {
        r.ngon = find_ngon(s, options.n);
    } else {
        r.ngon_note = "below the guarantee threshold; the exact search was not run";
        if (r.largest_convex && r.largest_convex->size() >= static_cast<std::size_t>(options.n)) {
            std::vector<Point> pts(r.largest_convex->points().begin(),
                                   r.largest_convex->points().end());
            r.ngon_note = "below the guarantee threshold, but the convex-subset table found one";
        }
    }

    if (options.certificates) {
        try {
            Certificate cert = find_certificate(s, options.cert_m, options.cert_l);
            r.certificate_tree = cert.describe();
        } catch (const Error& e) {
            r.certificate_note = e.what();
        }
    }
    return r;
}

namespace {

std::string points_line(const std::vector<Point>& pts) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) ss << " ";
        ss << pts[i];
    }
    return ss.str();
}

nlohmann::json point_json(const Point& p) {
    return nlohmann::json{{"x", p.x.str()}, {"y", p.y.str()}};
}

nlohmann::json points_json(const std::vector<Point>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Point& p : pts) arr.push_back(point_json(p));
    return arr;
}

} // namespace

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "points: " << r.set_size << "\n";
    if (r.upper_size + r.lower_size > 0)
        out << "partition: upper " << r.upper_size << ", lower " << r.lower_size << "\n";
    if (r.longest_cup)
        out << "longest cup: " << r.longest_cup->size() << "  ["
            << points_line(r.longest_cup->points()) << "]\n";
    else
        out << "longest cup: none of length 3\n";
    if (r.longest_cap)
        out << "longest cap: " << r.longest_cap->size() << "  ["
            << points_line(r.longest_cap->points()) << "]\n";
    else
        out << "longest cap: none of length 3\n";
    if (r.largest_convex)
        out << "largest convex subset: " << r.largest_convex->size() << "  ["
            << points_line(r.largest_convex->points()) << "]\n";
    out << "n-gon guarantee (n=" << r.n << "): threshold " << r.ngon_bound << ", set "
        << (r.ngon_guaranteed ? "meets it" : "does not meet it") << "\n";
    if (r.ngon)
        out << "convex " << r.n << "-gon: [" << points_line(r.ngon->points()) << "]\n";
    else if (!r.ngon_note.empty())
        out << "convex " << r.n << "-gon: " << r.ngon_note << "\n";
    if (!r.certificate_tree.empty()) out << "certificate tree:\n" << r.certificate_tree;
    if (!r.certificate_note.empty()) out << "certificate: " << r.certificate_note << "\n";
    return out.str();
}

std::string report_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["points"] = r.set_size;
    j["partition"] = {{"upper", r.upper_size}, {"lower", r.lower_size}};
    j["longest_cup"] =
        r.longest_cup ? nlohmann::json{{"length", r.longest_cup->size()},
                                       {"points", points_json(r.longest_cup->points())}}
                      : nlohmann::json(nullptr);
    j["longest_cap"] =
        r.longest_cap ? nlohmann::json{{"length", r.longest_cap->size()},
                                       {"points", points_json(r.longest_cap->points())}}
                      : nlohmann::json(nullptr);
    j["largest_convex_subset"] =
        r.largest_convex ? nlohmann::json{{"size", r.largest_convex->size()},
                                          {"points", points_json(r.largest_convex->points())}}
                         : nlohmann::json(nullptr);
    j["ngon"] = {{"n", r.n},
                 {"threshold", r.ngon_bound},
                 {"guaranteed", r.ngon_guaranteed},
                 {"witness", r.ngon ? points_json(r.ngon->points()) : nlohmann::json(nullptr)},
                 {"note", r.ngon_note}};
    if (!r.certificate_tree.empty()) j["certificate_tree"] = r.certificate_tree;
    if (!r.certificate_note.empty()) j["certificate_note"] = r.certificate_note;
    return j.dump(2) + "\n";
}

} // namespace cupcap
