#include "toric/io.hpp"
#include "toric/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace toric {

namespace {

constexpr double kUnit = 32.0;
constexpr double kPad = 24.0;
constexpr double kTitle = 22.0;

struct P2 {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s(buf);
    if (s == "-0.00") s = "0.00";
    return s;
}

// Convex hull, counter-clockwise (monotone chain).
std::vector<P2> hull(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end(), [](P2 a, P2 b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    if (pts.size() < 3) return pts;
    auto cross = [](P2 o, P2 a, P2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
        h[k++] = pts[i - 1];
    }
    h.resize(k - 1);
    return h;
}

double to_d(const Rational &q) { return q.get_d(); }

class Panel {
public:
    Panel(double ox, double oy, std::int64_t xmin, std::int64_t xmax, std::int64_t ymin, std::int64_t ymax)
        : ox_(ox), oy_(oy), xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {}

    double px(double x) const { return ox_ + kPad + (x - static_cast<double>(xmin_)) * kUnit; }
    double py(double y) const { return oy_ + kTitle + kPad + (static_cast<double>(ymax_) - y) * kUnit; }
    double width() const { return static_cast<double>(xmax_ - xmin_) * kUnit + 2 * kPad; }
    double height() const { return static_cast<double>(ymax_ - ymin_) * kUnit + 2 * kPad + kTitle; }
    // Far enough to leave the viewport along any primitive direction.
    double reach() const { return static_cast<double>(xmax_ - xmin_ + ymax_ - ymin_ + 2); }

    std::string polygon(const std::vector<P2> &pts) const {
        std::string s;
        for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + num(px(pts[i].x)) + "," + num(py(pts[i].y));
        return s;
    }

private:
    double ox_, oy_;
    std::int64_t xmin_, xmax_, ymin_, ymax_;
};

} // namespace

std::string plot_svg(const ShiftedNewton &sn, const std::vector<FixedIdealRecord> &records) {
    if (sn.ambient->dim() != 2) throw Error(ErrorKind::Unsupported, "plot needs dimension 2");
    const Cone &sigma = sn.ambient->cone();

    // Window: origin, base, every generator, every vertex of base + P, plus two units.
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    auto include = [&](double x, double y) {
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    };
    include(to_d(sn.base[0]), to_d(sn.base[1]));
    for (const auto &v : sn.polytope.vertices()) include(to_d(v[0] + sn.base[0]), to_d(v[1] + sn.base[1]));
    for (const auto &r : records)
        for (const auto &g : r.ideal.generators()) include(static_cast<double>(g[0]), static_cast<double>(g[1]));
    for (const auto &h : sn.ambient->hilbert()) include(static_cast<double>(h[0]), static_cast<double>(h[1]));
    const auto xmin = static_cast<std::int64_t>(std::floor(lo_x)) - 2, xmax = static_cast<std::int64_t>(std::ceil(hi_x)) + 2;
    const auto ymin = static_cast<std::int64_t>(std::floor(lo_y)) - 2, ymax = static_cast<std::int64_t>(std::ceil(hi_y)) + 2;

    const std::size_t cols = std::min<std::size_t>(3, std::max<std::size_t>(1, records.size()));
    const std::size_t rows = (records.size() + cols - 1) / cols;
    Panel probe(0, 0, xmin, xmax, ymin, ymax);
    const double pw = probe.width(), ph = probe.height();

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(pw * static_cast<double>(cols)) << "\" height=\""
       << num(ph * static_cast<double>(std::max<std::size_t>(rows, 1))) << "\" font-family=\"serif\">\n";

    for (std::size_t k = 0; k < records.size(); ++k) {
        const Panel pn(pw * static_cast<double>(k % cols), ph * static_cast<double>(k / cols), xmin, xmax, ymin, ymax);
        const double L = pn.reach();
        const std::string clip = "clip" + std::to_string(k);
        os << "<g id=\"panel-" << records[k].label << "\">\n";
        os << "<clipPath id=\"" << clip << "\"><rect x=\"" << num(pn.px(static_cast<double>(xmin))) << "\" y=\""
           << num(pn.py(static_cast<double>(ymax))) << "\" width=\"" << num(static_cast<double>(xmax - xmin) * kUnit)
           << "\" height=\"" << num(static_cast<double>(ymax - ymin) * kUnit) << "\"/></clipPath>\n";
        os << "<text x=\"" << num(pn.px(static_cast<double>(xmin))) << "\" y=\"" << num(pn.py(static_cast<double>(ymax)) - 8)
           << "\" font-size=\"16\">" << records[k].label << ": " << records[k].ideal.str() << "</text>\n";
        os << "<g clip-path=\"url(#" << clip << ")\">\n";

        // Shaded exponent set of the ideal: union of g + sigma.
        for (const auto &g : records[k].ideal.generators()) {
            std::vector<P2> pts{{static_cast<double>(g[0]), static_cast<double>(g[1])}};
            for (const auto &r : sigma.rays())
                pts.push_back({static_cast<double>(g[0]) + L * static_cast<double>(r[0]),
                               static_cast<double>(g[1]) + L * static_cast<double>(r[1])});
            os << "<polygon class=\"ideal\" points=\"" << pn.polygon(hull(pts)) << "\" fill=\"#999999\" stroke=\"none\"/>\n";
        }

        // base + P, dashed.
        std::vector<P2> region;
        for (const auto &v : sn.polytope.vertices()) {
            P2 b{to_d(v[0] + sn.base[0]), to_d(v[1] + sn.base[1])};
            region.push_back(b);
            for (const auto &r : sn.polytope.recession().rays())
                region.push_back({b.x + L * static_cast<double>(r[0]), b.y + L * static_cast<double>(r[1])});
        }
        os << "<polygon class=\"region\" points=\"" << pn.polygon(hull(region))
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";

        // Boundary rays of sigma.
        for (const auto &r : sigma.rays())
            os << "<line class=\"cone\" x1=\"" << num(pn.px(0)) << "\" y1=\"" << num(pn.py(0)) << "\" x2=\""
               << num(pn.px(L * static_cast<double>(r[0]))) << "\" y2=\"" << num(pn.py(L * static_cast<double>(r[1])))
               << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        os << "</g>\n";

        for (std::int64_t y = ymin; y <= ymax; ++y)
            for (std::int64_t x = xmin; x <= xmax; ++x) {
                bool in_s = sigma.contains(LatticePoint{x, y});
                os << "<circle cx=\"" << num(pn.px(static_cast<double>(x))) << "\" cy=\""
                   << num(pn.py(static_cast<double>(y))) << "\" r=\"" << (in_s ? "3" : "1.5") << "\" fill=\""
                   << (in_s ? "black" : "#bbbbbb") << "\"/>\n";
            }

        os << "<circle class=\"base\" cx=\"" << num(pn.px(to_d(sn.base[0]))) << "\" cy=\"" << num(pn.py(to_d(sn.base[1])))
           << "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace toric
