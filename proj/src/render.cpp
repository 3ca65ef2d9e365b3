#include "chebrad/render.hpp"

#include <algorithm>
#include <sstream>

namespace chebrad {

namespace {

std::string vertex_list(const NewtonPolygon& np) {
    std::ostringstream os;
    for (size_t i = 0; i < np.vertices.size(); ++i) {
        if (i) os << " ";
        os << "(" << np.vertices[i].first << "," << np.vertices[i].second << ")";
    }
    return os.str();
}

}  // namespace

std::string render_ascii(const NewtonPolygon& np, long deg_phi, const RenderOptions& opts) {
    std::ostringstream os;
    long long ind = ind_phi(np, deg_phi);
    if (np.empty()) {
        os << "empty principal polygon (no negative slopes); ind = 0\n";
        return os.str();
    }
    long xmax_full = np.vertices.back().first;
    long ymax_full = np.vertices.front().second;
    for (const auto& [x, u] : np.points)
        if (x <= xmax_full) ymax_full = std::max(ymax_full, u);
    long xmax = std::min(xmax_full, opts.max_width);
    long ymax = std::min(ymax_full, opts.max_height);
    bool xcut = xmax < xmax_full, ycut = ymax < ymax_full;

    // grid[y][x], y = 0 at the bottom
    std::vector<std::string> grid(static_cast<size_t>(ymax) + 1,
                                  std::string(static_cast<size_t>(xmax) + 1, ' '));
    auto put = [&](long x, long y, char c) {
        if (x < 0 || x > xmax || y < 0 || y > ymax) return;
        grid[static_cast<size_t>(y)][static_cast<size_t>(x)] = c;
    };
    // counted lattice points
    for (long x = std::max(1L, np.vertices.front().first); x <= std::min(xmax, xmax_full); ++x) {
        long fy = np.floor_ordinate(x);
        for (long y = 1; y <= fy; ++y) put(x, y, '.');
    }
    // boundary of the polygon at integer abscissas
    for (long x = np.vertices.front().first; x <= std::min(xmax, xmax_full); ++x) {
        auto [num, den] = np.ordinate(x);
        if (num % den == 0) put(x, num / den, '-');
    }
    // development points and vertices on top
    for (const auto& [x, u] : np.points) put(x, u, 'o');
    for (const auto& [x, y] : np.vertices) put(x, y, '*');

    for (long y = ymax; y >= 0; --y) {
        os << (y % 5 == 0 ? std::to_string(y) : std::string()) << "\t|"
           << grid[static_cast<size_t>(y)] << (ycut && y == ymax ? " (truncated above)" : "")
           << "\n";
    }
    os << "\t+";
    for (long x = 0; x <= xmax; ++x) os << (x % 10 == 0 ? '+' : '-');
    os << (xcut ? " ..." : "") << "\n";
    os << "vertices: " << vertex_list(np);
    if (xcut) os << "  (end vertex (" << xmax_full << "," << np.vertices.back().second
                 << ") not shown)";
    os << "\n";
    os << "sides:";
    for (const Side& s : np.sides)
        os << " [(" << s.x0 << "," << s.y0 << ")->(" << s.x1 << "," << s.y1 << ") slope -" << s.h
           << "/" << s.e << " deg " << s.degree() << "]";
    os << "\n";
    os << "ind contribution: " << ind << " (deg phi = " << deg_phi << ")\n";
    return os.str();
}

std::string render_svg(const NewtonPolygon& np, long deg_phi, const RenderOptions&) {
    std::ostringstream os;
    long long ind = ind_phi(np, deg_phi);
    long xmax = np.empty() ? 1 : np.vertices.back().first;
    long ymax = 1;
    for (const auto& [x, u] : np.points) {
        ymax = std::max(ymax, u);
        xmax = std::max(xmax, x);
    }
    const double sx = 720.0 / (xmax + 2), sy = 400.0 / (ymax + 2);
    auto X = [&](double x) { return 40.0 + x * sx; };
    auto Y = [&](double y) { return 440.0 - 20.0 - y * sy; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
          "viewBox=\"0 0 800 500\">\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax + 1) << "\" y2=\""
       << Y(0) << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(ymax + 1) << "\" stroke=\"black\"/>\n";
    if (!np.empty()) {
        // counted lattice points
        for (long x = std::max(1L, np.vertices.front().first); x <= np.vertices.back().first; ++x) {
            long fy = np.floor_ordinate(x);
            for (long y = 1; y <= fy; ++y)
                os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y)
                   << "\" r=\"2.5\" fill=\"orange\"/>\n";
        }
        os << "  <polyline fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
        for (const auto& [x, y] : np.vertices) os << X(x) << "," << Y(y) << " ";
        os << "\"/>\n";
    }
    for (const auto& [x, u] : np.points)
        os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(u) << "\" r=\"3.5\" fill=\"gray\"/>\n";
    for (const auto& [x, y] : np.vertices)
        os << "  <circle cx=\"" << X(x) << "\" cy=\"" << Y(y) << "\" r=\"4.5\" fill=\"blue\"/>\n";
    os << "  <text x=\"40\" y=\"480\" font-family=\"monospace\" font-size=\"14\">vertices "
       << vertex_list(np) << "; ind contribution " << ind << " (deg phi = " << deg_phi
       << ")</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace chebrad
