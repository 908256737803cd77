#include "cbsg/cli.hpp"

#include "cbsg/bodyspec.hpp"
#include "cbsg/circle_sg.hpp"
#include "cbsg/kernels.hpp"
#include "cbsg/oracle.hpp"
#include "cbsg/polygon_sg.hpp"
#include "cbsg/ray_semigroups.hpp"
#include "cbsg/surgery.hpp"
#include "cbsg/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

namespace cbsg::cli {

namespace {

GenSet body_gens(const ConvexBody2& body, const std::string& method)
{
    if (auto* c = std::get_if<Circle>(&body))
        return circle_min_gens(*c);
    if (auto* p = std::get_if<Polygon>(&body)) {
        if (method == "lift") {
            if (polygon_fg_decision(*p).verdict != FgVerdict::finitely_generated)
                throw PreconditionError("not finitely generated: " + polygon_fg_decision(*p).witness);
            return polygon_min_gens_rational(*p);
        }
        if (method == "decompose")
            return polygon_min_gens_decomposed(*p);
        return polygon_min_gens(*p);
    }
    return segment_semigroup(std::get<RaySegment>(body));
}

FgDecision body_fg(const ConvexBody2& body)
{
    if (auto* c = std::get_if<Circle>(&body))
        return circle_fg_decision(*c);
    if (auto* p = std::get_if<Polygon>(&body))
        return polygon_fg_decision(*p);
    const RaySegment& s = std::get<RaySegment>(body);
    if (s.direction.x < 0 || s.direction.y < 0)
        return {FgVerdict::trivial_zero, "the segment lies outside the closed quadrant"};
    return {FgVerdict::finitely_generated, ""};
}

bool body_member(IntVec2 X, const ConvexBody2& body)
{
    if (X.x < 0 || X.y < 0)
        return false;
    if (auto* c = std::get_if<Circle>(&body))
        return circle_member(X.x, X.y, *c);
    if (auto* p = std::get_if<Polygon>(&body))
        return polygon_dilation_member(X, *p);
    const RaySegment& s = std::get<RaySegment>(body);
    const IntVec2 g = s.direction;
    if (X == IntVec2{0, 0})
        return true;
    if (g.x < 0 || g.y < 0 || cross(g, X) != 0)
        return false;
    const std::int64_t t = g.x != 0 ? X.x / g.x : X.y / g.y;
    return in_dilated_interval(t, s.alpha, s.beta);
}

BoundInputs body_bound(const ConvexBody2& body)
{
    if (auto* c = std::get_if<Circle>(&body))
        return circle_bound_inputs(*c);
    if (auto* p = std::get_if<Polygon>(&body))
        return polygon_bound_inputs(*p);
    throw PreconditionError("bound is available for circles and for polygons cut by both rays in segments");
}

void print_gens(std::ostream& out, const GenSet& g, bool json)
{
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (IntVec2 p : g.points)
            arr.push_back({p.x, p.y});
        out << arr.dump() << "\n";
        return;
    }
    for (IntVec2 p : g.points)
        out << p << "\n";
}

}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite generation and minimal generators of convex-body semigroups in the plane"};
    app.name("cbsg");
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP threads for the library kernels (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    std::string file;
    std::int64_t x = 0, y = 0;

    auto* gens = app.add_subcommand("gens", "Minimal generators, one (x,y) per line");
    bool json = false;
    std::string method = "auto";
    gens->add_option("file", file, "body description")->required();
    gens->add_flag("--json", json, "print a JSON array of [x, y] pairs");
    gens->add_option("--method", method, "polygon pipeline")->check(CLI::IsMember({"auto", "lift", "decompose"}));

    auto* fg = app.add_subcommand("check-fg", "Decide finite generation");
    fg->add_option("file", file)->required();

    auto* member = app.add_subcommand("member", "Membership of (x, y) in the semigroup");
    member->add_option("file", file)->required();
    member->add_option("x", x)->required();
    member->add_option("y", y)->required();

    auto* bound = app.add_subcommand("bound", "Norm bound 3^l (2k-1) M on the minimal generators");
    bound->add_option("file", file)->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference paths");
    oracle->require_subcommand(1);
    std::int64_t norm_bound = 0;
    auto* ogens = oracle->add_subcommand("gens", "Minimal generators by exhaustive enumeration");
    ogens->add_option("file", file)->required();
    ogens->add_option("--norm-bound", norm_bound, "largest x + y examined")->required()->check(CLI::NonNegativeNumber);
    auto* omember = oracle->add_subcommand("member", "Membership by scanning dilations");
    omember->add_option("file", file)->required();
    omember->add_option("x", x)->required();
    omember->add_option("y", y)->required();

    auto* plot = app.add_subcommand("plot", "SVG figure of the dilations, cone and semigroup");
    std::string svg_path;
    std::int64_t dilations = 3, plot_bound = 20;
    plot->add_option("file", file)->required();
    plot->add_option("-o,--output", svg_path, "output SVG")->required();
    plot->add_option("--dilations", dilations, "number of dilated bodies drawn")->check(CLI::NonNegativeNumber);
    plot->add_option("--norm-bound", plot_bound, "side of the plotted square")->check(CLI::PositiveNumber);

    std::vector<std::string> argv_store{"cbsg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (threads > 0)
        kernels::set_threads(threads);

    try {
        const ConvexBody2 body = load_body_spec(file);
        if (gens->parsed()) {
            print_gens(out, body_gens(body, method), json);
            return 0;
        }
        if (fg->parsed()) {
            const FgDecision d = body_fg(body);
            out << verdict_name(d.verdict) << "\n";
            if (!d.witness.empty())
                out << d.witness << "\n";
            return d.verdict == FgVerdict::not_finitely_generated ? 1 : 0;
        }
        if (member->parsed()) {
            const bool in = body_member({x, y}, body);
            out << (in ? "IN" : "OUT") << "\n";
            return in ? 0 : 1;
        }
        if (bound->parsed()) {
            const BoundInputs b = body_bound(body);
            out << "M = " << b.M << "\nk = " << b.k << "\nl = " << b.l << "\nbound = " << generator_norm_bound(b) << "\n";
            return 0;
        }
        if (ogens->parsed()) {
            print_gens(out, oracle::naive_min_gens(oracle::from_body(body), norm_bound), false);
            return 0;
        }
        if (omember->parsed()) {
            const bool in = x >= 0 && y >= 0 && oracle::dilation_member(x, y, oracle::from_body(body));
            out << (in ? "IN" : "OUT") << "\n";
            return in ? 0 : 1;
        }
        if (plot->parsed()) {
            PlotInput in{body, dilations, plot_bound, {}, {}, cone_of_body(body)};
            in.members = kernels::scan_box({plot_bound, plot_bound}, [&](IntVec2 p) { return body_member(p, body); });
            if (body_fg(body).verdict != FgVerdict::not_finitely_generated) {
                for (IntVec2 g : body_gens(body, "auto").points)
                    if (g.x <= plot_bound && g.y <= plot_bound)
                        in.generators.push_back(g);
            }
            std::ofstream f(svg_path);
            if (!f)
                throw ParseError("cannot write " + svg_path);
            f << render_svg(in);
            out << "wrote " << svg_path << " (" << in.members.size() << " lattice points, " << in.generators.size()
                << " generators)\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace cbsg::cli
