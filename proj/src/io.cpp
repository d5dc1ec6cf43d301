#include "jack/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "jack/errors.hpp"

namespace jack {

std::string fmt_double(double x)
{
    if (x == 0) return "0";   // also folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json poly_json(const Poly& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [id, e] : m) mono[var::name(id)] = e;
        out.push_back({{"monomial", mono}, {"coeff", to_string(c)}});
    }
    return out;
}

json powersum_json(const PowerSumPoly& f)
{
    json out = json::array();
    for (const auto& [mu, c] : f.terms()) out.push_back({{"p_mu", mu.parts()}, {"coeff", to_string(c)}});
    return out;
}

namespace {

const char* orientation_name(Orientation o)
{
    switch (o) {
    case Orientation::finite: return "finite";
    case Orientation::to_plus_infinity: return "extends_to_+inf";
    case Orientation::to_minus_infinity: return "extends_to_-inf";
    }
    return "?";
}

json number_list(const std::vector<double>& xs)
{
    json a = json::array();
    for (double x : xs) a.push_back(std::stod(fmt_double(x)));
    return a;
}

}  // namespace

json staircase_json(const NumericStaircase& s)
{
    return {{"orientation", orientation_name(s.orientation)},
            {"minima", number_list(s.minima)},
            {"maxima", number_list(s.maxima)}};
}

json staircase_json(const StaircaseShape& s)
{
    json mn = json::array(), mx = json::array();
    for (const auto& x : s.minima) mn.push_back(to_string(x));
    for (const auto& y : s.maxima) mx.push_back(to_string(y));
    return {{"orientation", "finite"}, {"minima", mn}, {"maxima", mx}};
}

std::string staircase_csv(const NumericStaircase& s, double x_min, double x_max, int points)
{
    if (points < 2) throw parameter_error("need at least two grid points");
    if (!(x_max > x_min)) throw parameter_error("empty window");
    std::ostringstream os;
    os << "x,omega\n";
    for (int i = 0; i < points; ++i) {
        double x = x_min + (x_max - x_min) * i / (points - 1);
        os << fmt_double(x) << ',' << fmt_double(s.omega(x)) << '\n';
    }
    return os.str();
}

std::string samples_jsonl(const SampleRun& run)
{
    std::ostringstream os;
    json head = {{"type", "run"},     {"ensemble", run.ensemble}, {"alpha", to_string(run.alpha)},
                 {"d", run.d},        {"seed", run.seed},         {"count", run.count},
                 {"method", run.method}};
    os << head.dump() << '\n';
    for (std::size_t k = 0; k < run.samples.size(); ++k) {
        json rec = {{"type", "sample"}, {"index", k}, {"lambda", run.samples[k].parts()}};
        os << rec.dump() << '\n';
    }
    return os.str();
}

std::string render_svg(const std::vector<SvgSeries>& series, double x_min, double x_max, double y_min,
                       double y_max, const std::string& title)
{
    if (!(x_max > x_min) || !(y_max > y_min)) throw parameter_error("empty plot window");
    const double W = 640, H = 400, pad = 40;
    const double sx = (W - 2 * pad) / (x_max - x_min);
    const double sy = (H - 2 * pad) / (y_max - y_min);
    // Equal scales keep the +-1 slopes at 45 degrees.
    const double s = std::min(sx, sy);
    auto X = [&](double x) { return pad + (x - x_min) * s; };
    auto Y = [&](double y) { return H - pad - (y - y_min) * s; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    os << "<title>" << title << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (y_min <= 0 && y_max >= 0)
        os << "<line x1=\"" << fmt_double(X(x_min)) << "\" y1=\"" << fmt_double(Y(0)) << "\" x2=\""
           << fmt_double(X(x_max)) << "\" y2=\"" << fmt_double(Y(0)) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    if (x_min <= 0 && x_max >= 0)
        os << "<line x1=\"" << fmt_double(X(0)) << "\" y1=\"" << fmt_double(Y(y_min)) << "\" x2=\""
           << fmt_double(X(0)) << "\" y2=\"" << fmt_double(Y(y_max)) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    // omega = |x|
    double r = std::max(std::abs(x_min), std::abs(x_max));
    os << "<polyline fill=\"none\" stroke=\"gray\" stroke-width=\"0.75\" stroke-dasharray=\"4 3\" points=\""
       << fmt_double(X(-r)) << ',' << fmt_double(Y(r)) << ' ' << fmt_double(X(0)) << ',' << fmt_double(Y(0)) << ' '
       << fmt_double(X(r)) << ',' << fmt_double(Y(r)) << "\"/>\n";
    for (const auto& sr : series) {
        if (sr.points.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"" << sr.color << "\" stroke-width=\"" << fmt_double(sr.width) << '"';
        if (sr.dashed) os << " stroke-dasharray=\"6 3\"";
        os << " points=\"";
        for (std::size_t i = 0; i < sr.points.size(); ++i) {
            if (i) os << ' ';
            os << fmt_double(X(sr.points[i].first)) << ',' << fmt_double(Y(sr.points[i].second));
        }
        os << "\"/>\n";
    }
    os << "<text x=\"" << pad << "\" y=\"" << pad / 2 << "\" font-family=\"sans-serif\" font-size=\"12\">" << title
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

SvgSeries staircase_series(const NumericStaircase& s, double x_min, double x_max)
{
    SvgSeries out;
    std::vector<double> xs{x_min, x_max};
    for (double x : s.minima) xs.push_back(x);
    for (double y : s.maxima) xs.push_back(y);
    std::sort(xs.begin(), xs.end());
    for (double x : xs)
        if (x >= x_min && x <= x_max) out.points.emplace_back(x, s.omega(x));
    return out;
}

SvgSeries csv_series(const std::string& csv)
{
    SvgSeries out;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line)) {
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        try {
            out.points.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            // header line
        }
    }
    return out;
}

}  // namespace jack
