#include "torstab/svg.hpp"

#include <algorithm>
#include <sstream>

namespace torstab {

namespace {

constexpr long long kUnit = 40;

long long to_ll(const Int& x) {
    if (!x.fits_slong_p())
        fail(errc::bad_parameter, "ray coordinate too large to draw: " + x.get_str());
    return x.get_si();
}

} // namespace

std::string fan_svg(const Fan2D& fan) {
    long long m = 1;
    for (const LatticeVector& v : fan.rays)
        m = std::max({m, std::llabs(to_ll(v.c[0])), std::llabs(to_ll(v.c[1]))});

    long long half = (m + 1) * kUnit;
    long long size = 2 * half;
    auto px = [&](long long x) { return half + x * kUnit; };
    auto py = [&](long long y) { return half - y * kUnit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << size
       << " " << size << "\" width=\"" << size << "\" height=\"" << size << "\">\n";
    os << "<defs><marker id=\"arrow\" markerWidth=\"10\" markerHeight=\"8\" refX=\"7\" "
          "refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#1a1a1a\"/>"
          "</marker></defs>\n";
    os << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"#ffffff\"/>\n";

    // Shaded wedges for the singular cones. The generators scaled past the
    // border give a polygon whose visible part is exactly the cone.
    long long reach = 2 * (m + 1);
    for (std::size_t i : fan.singular_cones) {
        long long ux = to_ll(fan.rays[i].c[0]), uy = to_ll(fan.rays[i].c[1]);
        std::size_t j = (i + 1) % fan.size();
        long long vx = to_ll(fan.rays[j].c[0]), vy = to_ll(fan.rays[j].c[1]);
        os << "<polygon class=\"singular-cone\" points=\"" << px(0) << "," << py(0) << " "
           << px(ux * reach) << "," << py(uy * reach) << " "
           << px((ux + vx) * reach) << "," << py((uy + vy) * reach) << " "
           << px(vx * reach) << "," << py(vy * reach)
           << "\" fill=\"#c8c8c8\" fill-opacity=\"0.6\"/>\n";
    }

    os << "<line x1=\"0\" y1=\"" << half << "\" x2=\"" << size << "\" y2=\"" << half
       << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << half << "\" y1=\"0\" x2=\"" << half << "\" y2=\"" << size
       << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";

    // Lattice dots; skipped for very spread-out fans to keep the file small.
    if (m <= 16)
        for (long long x = -m - 1; x <= m + 1; ++x)
            for (long long y = m + 1; y >= -m - 1; --y)
                os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
                   << "\" r=\"2\" fill=\"#707070\"/>\n";

    for (const LatticeVector& v : fan.rays) {
        long long x = to_ll(v.c[0]), y = to_ll(v.c[1]);
        os << "<line class=\"ray\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
           << px(x) << "\" y2=\"" << py(y)
           << "\" stroke=\"#1a1a1a\" stroke-width=\"2.5\" marker-end=\"url(#arrow)\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

} // namespace torstab
