#include "amplifiber/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "amplifiber/errors.hpp"

namespace amplifiber {

namespace {

double angle_of(const Vec& v) {
    return std::atan2(v[1].get_d(), v[0].get_d());
}

} // namespace

std::string fan_svg(const ChamberFan& fan, int size) {
    if (fan.rays.r != 2) {
        throw ValidationError("fan_svg: only 2-dimensional fans are drawn");
    }
    const double cx = size / 2.0;
    const double cy = size / 2.0;
    const double rad = 0.42 * size;
    const char* fills[] = {"#cfe8ff", "#ffe3c9", "#d8f5d0",
                           "#f3d9f5", "#fff3b8", "#dcdcdc"};
    const int nfills = 6;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " "
        << size << "\">\n";
    out << "  <rect width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\"/>\n";

    // Wedge boundaries: the sorted circle of ray angles.  Each chamber is
    // the sector between the two boundaries flanking its witness.
    std::vector<double> bounds;
    for (const Vec& ray : fan.rays.rays) {
        bounds.push_back(angle_of(ray));
    }
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    auto sector_of = [&](double a) {
        // boundaries flanking angle a on the circle
        size_t hi = 0;
        while (hi < bounds.size() && bounds[hi] <= a) {
            ++hi;
        }
        double b1 = (hi == 0) ? bounds.back() - 2 * M_PI : bounds[hi - 1];
        double b2 = (hi == bounds.size()) ? bounds.front() + 2 * M_PI
                                          : bounds[hi];
        return std::make_pair(b1, b2);
    };

    for (size_t c = 0; c < fan.chambers.size(); ++c) {
        double a = angle_of(fan.chambers[c].witness);
        auto [b1, b2] = sector_of(a);
        double x1 = cx + rad * std::cos(b1);
        double y1 = cy - rad * std::sin(b1);
        double x2 = cx + rad * std::cos(b2);
        double y2 = cy - rad * std::sin(b2);
        int large = (b2 - b1 > M_PI) ? 1 : 0;
        out << "  <path d=\"M " << cx << " " << cy << " L " << x1 << " "
            << y1 << " A " << rad << " " << rad << " 0 " << large
            << " 0 " << x2 << " " << y2 << " Z\" fill=\""
            << fills[c % nfills] << "\" stroke=\"none\" opacity=\"0.8\"/>\n";
        double mid = (b1 + b2) / 2;
        out << "  <text x=\"" << cx + 0.55 * rad * std::cos(mid) << "\" y=\""
            << cy - 0.55 * rad * std::sin(mid)
            << "\" font-size=\"12\" text-anchor=\"middle\">c" << c
            << "</text>\n";
    }

    for (size_t i = 0; i < fan.rays.rays.size(); ++i) {
        double a = angle_of(fan.rays.rays[i]);
        double x = cx + rad * std::cos(a);
        double y = cy - rad * std::sin(a);
        out << "  <line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << x
            << "\" y2=\"" << y
            << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
        out << "  <text x=\"" << cx + (rad + 14) * std::cos(a) << "\" y=\""
            << cy - (rad + 14) * std::sin(a)
            << "\" font-size=\"12\" text-anchor=\"middle\">r" << i + 1
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace amplifiber
