#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jack/limit_shape.hpp"
#include "jack/poly.hpp"
#include "jack/sampler.hpp"
#include "jack/symmetric.hpp"

namespace jack {

using json = nlohmann::ordered_json;

// Fixed "%.12g" formatting so identical inputs give identical bytes.
std::string fmt_double(double x);

// [{"monomial": {"g": 1, "v2": 1}, "coeff": "p/q"}, ...]
json poly_json(const Poly& p);
// [{"p_mu": [2, 1], "coeff": "p/q"}, ...]
json powersum_json(const PowerSumPoly& f);

json staircase_json(const NumericStaircase& s);
json staircase_json(const StaircaseShape& s);

// "x,omega" lines on a uniform grid.
std::string staircase_csv(const NumericStaircase& s, double x_min, double x_max, int points);

// One header record {"type":"run",...} then one {"type":"sample",...} per draw.
std::string samples_jsonl(const SampleRun& run);

struct SvgSeries {
    std::vector<std::pair<double, double>> points;
    std::string color = "black";
    double width = 1.5;
    bool dashed = false;
};

// SVG 1.1 plot in the (x, omega) plane with the lines omega = |x| drawn dashed.
std::string render_svg(const std::vector<SvgSeries>& series, double x_min, double x_max, double y_min,
                       double y_max, const std::string& title);

SvgSeries staircase_series(const NumericStaircase& s, double x_min, double x_max);
// Parses the output of staircase_csv / profile_csv.
SvgSeries csv_series(const std::string& csv);

}  // namespace jack
