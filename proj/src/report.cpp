#include "planevar/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace planevar {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

ordered_json perturbed_line_to_json(const PerturbedLine& l) {
    ordered_json out;
    out["line"] = line_to_json(l.base);
    ordered_json move;
    if (std::holds_alternative<NoPerturb>(l.pert)) {
        move["kind"] = "none";
    } else if (const auto* t = std::get_if<TranslateToSide>(&l.pert)) {
        move["kind"] = "translate";
        move["side"] = t->s;
    } else if (const auto* r = std::get_if<RotateAboutPoint>(&l.pert)) {
        move["kind"] = "rotate";
        move["pivot"] = point_to_json(r->pivot);
        move["side"] = r->s;
    } else {
        const auto& rn = std::get<RotateAndNudge>(l.pert);
        move["kind"] = "rotate-nudge";
        move["pivot"] = point_to_json(rn.pivot);
        move["rotate"] = rn.rot;
        move["nudge"] = rn.nudge;
    }
    out["move"] = std::move(move);
    return out;
}

ordered_json estimate_to_json(const VariationEstimate& est, const PointList& original_points) {
    ordered_json out;
    out["lower"] = est.lower;
    out["upper"] = est.upper;
    out["exact"] = est.exact;
    if (est.exact) out["value"] = est.upper;
    std::vector<std::size_t> witness;
    witness.reserve(est.lower_witness.size());
    for (const Point& p : est.lower_witness) {
        auto it = std::find(original_points.begin(), original_points.end(), p);
        if (it == original_points.end()) {
            throw ValidationError("witness point missing from the input points");
        }
        witness.push_back(static_cast<std::size_t>(it - original_points.begin()));
    }
    out["witness"] = witness;
    out["upper_rule"] = to_string(est.upper_rule);
    return out;
}

std::string emit_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << csv_field(header[i]);
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size()) {
            throw ValidationError("csv row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_field(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string emit_svg(const PointList& points, const PointList& witness,
                     const std::optional<Line>& line) {
    if (points.empty()) throw ValidationError("nothing to plot");
    double xmin = rat_to_double(points[0].x), xmax = xmin;
    double ymin = rat_to_double(points[0].y), ymax = ymin;
    for (const Point& p : points) {
        double x = rat_to_double(p.x), y = rat_to_double(p.y);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double pad = std::max({1.0, (xmax - xmin) * 0.1, (ymax - ymin) * 0.1});
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;

    // SVG y grows downward; plot with y mirrored about the box.
    auto sx = [&](double x) { return x; };
    auto sy = [&](double y) { return ymin + ymax - y; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin) << ' '
        << fmt(ymin) << ' ' << fmt(xmax - xmin) << ' ' << fmt(ymax - ymin) << "\">\n";

    if (line) {
        double a = rat_to_double(line->a());
        double b = rat_to_double(line->b());
        double c = rat_to_double(line->c());
        double x1, y1, x2, y2;
        if (std::abs(b) >= std::abs(a)) {
            x1 = xmin;
            x2 = xmax;
            y1 = (-c - a * x1) / b;
            y2 = (-c - a * x2) / b;
        } else {
            y1 = ymin;
            y2 = ymax;
            x1 = (-c - b * y1) / a;
            x2 = (-c - b * y2) / a;
        }
        out << "  <line x1=\"" << fmt(sx(x1)) << "\" y1=\"" << fmt(sy(y1)) << "\" x2=\""
            << fmt(sx(x2)) << "\" y2=\"" << fmt(sy(y2))
            << "\" stroke=\"#888888\" stroke-width=\"0.04\"/>\n";
    }

    if (witness.size() > 1) {
        out << "  <polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"0.05\" points=\"";
        for (std::size_t i = 0; i < witness.size(); ++i) {
            if (i) out << ' ';
            out << fmt(sx(rat_to_double(witness[i].x))) << ','
                << fmt(sy(rat_to_double(witness[i].y)));
        }
        out << "\"/>\n";
    }

    for (const Point& p : points) {
        out << "  <circle cx=\"" << fmt(sx(rat_to_double(p.x))) << "\" cy=\""
            << fmt(sy(rat_to_double(p.y))) << "\" r=\"0.08\" fill=\"#d1495b\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace planevar
