#include "cbsg/svg.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace cbsg {

namespace {

std::string num(double v)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
}

void draw_dilate(std::ostream& out, const ConvexBody2& body, double i)
{
    const char* style = R"( fill="#4a90d9" fill-opacity="0.18" stroke="#2b5d8f" stroke-width="0.04")";
    if (auto* c = std::get_if<Circle>(&body)) {
        out << "<circle cx=\"" << num(i * c->a.get_d()) << "\" cy=\"" << num(i * c->b.get_d()) << "\" r=\""
            << num(i * c->r.get_d()) << "\"" << style << "/>\n";
    } else if (auto* p = std::get_if<Polygon>(&body)) {
        out << "<polygon points=\"";
        for (const QPoint& v : p->vertices())
            out << num(i * v.x.to_double()) << "," << num(i * v.y.to_double()) << " ";
        out << "\"" << style << "/>\n";
    } else if (auto* s = std::get_if<RaySegment>(&body)) {
        const double gx = static_cast<double>(s->direction.x), gy = static_cast<double>(s->direction.y);
        const double a = s->alpha.to_double() * i, b = s->beta.to_double() * i;
        out << "<line x1=\"" << num(a * gx) << "\" y1=\"" << num(a * gy) << "\" x2=\"" << num(b * gx) << "\" y2=\""
            << num(b * gy) << "\" stroke=\"#2b5d8f\" stroke-width=\"0.12\"/>\n";
    }
}

void draw_ray(std::ostream& out, double dx, double dy, double len)
{
    const double n = std::hypot(dx, dy);
    if (n == 0)
        return;
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << num(dx / n * len) << "\" y2=\"" << num(dy / n * len)
        << "\" stroke=\"#c0392b\" stroke-width=\"0.05\" stroke-dasharray=\"0.3,0.2\"/>\n";
}

}

std::string render_svg(const PlotInput& in)
{
    const double N = static_cast<double>(in.norm_bound);
    const double scale = 600.0 / (N + 2);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num((N + 2) * scale) << "\" height=\""
        << num((N + 2) * scale) << "\" viewBox=\"-1 -1 " << num(N + 2) << " " << num(N + 2) << "\""
        << " data-lattice-points=\"" << in.members.size() << "\" data-generators=\"" << in.generators.size() << "\">\n";
    out << "<rect x=\"-1\" y=\"-1\" width=\"" << num(N + 2) << "\" height=\"" << num(N + 2) << "\" fill=\"white\"/>\n";
    // flip so that y points up
    out << "<g transform=\"translate(0," << num(N) << ") scale(1,-1)\">\n";
    out << "<line x1=\"0\" y1=\"0\" x2=\"" << num(N) << "\" y2=\"0\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
    out << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << num(N) << "\" stroke=\"black\" stroke-width=\"0.04\"/>\n";
    for (std::int64_t i = 1; i <= in.dilations; ++i)
        draw_dilate(out, in.body, static_cast<double>(i));
    const double len = N * std::sqrt(2.0);
    switch (in.rays.status) {
    case ConeStatus::proper:
        draw_ray(out, in.rays.hi.direction.x.to_double(), in.rays.hi.direction.y.to_double(), len);
        draw_ray(out, in.rays.lo.direction.x.to_double(), in.rays.lo.direction.y.to_double(), len);
        break;
    case ConeStatus::single_ray:
        draw_ray(out, in.rays.hi.direction.x.to_double(), in.rays.hi.direction.y.to_double(), len);
        break;
    case ConeStatus::full_quadrant:
    case ConeStatus::empty_body:
        break;
    }
    for (IntVec2 p : in.members)
        out << "<circle class=\"pt\" cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"0.12\" fill=\"#333333\"/>\n";
    for (IntVec2 p : in.generators)
        out << "<circle class=\"gen\" cx=\"" << p.x << "\" cy=\"" << p.y
            << "\" r=\"0.22\" fill=\"none\" stroke=\"#e67e22\" stroke-width=\"0.08\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace cbsg
