#include "cbsg/cli.hpp"
#include "example_circle.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace fs = std::filesystem;
namespace tst = cbsg::testing;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cbsg_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cbsg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CBSG_DATA_DIR) + "/" + name; }

// Scratch body file, removed with the fixture.
class CliFiles : public ::testing::Test {
protected:
    fs::path dir;

    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("cbsg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text)
    {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        v.push_back(l);
    return v;
}

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

}

TEST(Cli, GensOnTheExampleCircle)
{
    auto r = cbsg_run({"gens", data("example_circle.toml")});
    EXPECT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 32u);
    EXPECT_EQ(ls.front(), "(5,3)");
    EXPECT_EQ(ls.back(), "(139,58)");
    for (std::size_t i = 0; i < ls.size(); ++i)
        EXPECT_EQ(ls[i], "(" + std::to_string(tst::kExampleGens[i].x) + "," + std::to_string(tst::kExampleGens[i].y) + ")");
}

TEST(Cli, GensJson)
{
    auto r = cbsg_run({"gens", "--json", data("example_circle.toml")});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 32u);
    EXPECT_EQ(j.back(), nlohmann::json::array({139, 58}));
}

TEST(Cli, GensIsDeterministic)
{
    for (const char* f : {"example_circle.toml", "triangle_irrational_base.toml", "square.toml"}) {
        auto a = cbsg_run({"gens", data(f)});
        auto b = cbsg_run({"gens", data(f)});
        auto c = cbsg_run({"--threads", "2", "gens", data(f)});
        EXPECT_EQ(a.out, b.out) << f;
        EXPECT_EQ(a.out, c.out) << f;
    }
    cbsg_run({"--threads", "1", "gens", data("square.toml")});
}

TEST(Cli, PolygonMethodsAgree)
{
    auto a = cbsg_run({"gens", "--method", "lift", data("square.toml")});
    auto b = cbsg_run({"gens", "--method", "decompose", data("square.toml")});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(cbsg_run({"gens", "--method", "lift", data("triangle_irrational_base.toml")}).code, 3);
    EXPECT_EQ(cbsg_run({"gens", "--method", "sideways", data("square.toml")}).code, 2);
}

TEST(Cli, Member)
{
    auto r = cbsg_run({"member", data("example_circle.toml"), "2", "1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "OUT\n");
    r = cbsg_run({"member", data("example_circle.toml"), "7", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "IN\n");
    EXPECT_EQ(cbsg_run({"member", data("segment_x_axis.toml"), "3", "0"}).code, 0);
    EXPECT_EQ(cbsg_run({"member", data("segment_x_axis.toml"), "1", "0"}).code, 1);
    EXPECT_EQ(cbsg_run({"oracle", "member", data("example_circle.toml"), "2", "1"}).out, "OUT\n");
    EXPECT_EQ(cbsg_run({"oracle", "member", data("example_circle.toml"), "5", "3"}).code, 0);
}

TEST(Cli, CheckFg)
{
    auto r = cbsg_run({"check-fg", data("circle_1_1_half.toml")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(lines(r.out).front(), "NOT_FINITELY_GENERATED");
    EXPECT_EQ(lines(r.out).size(), 2u);
    r = cbsg_run({"check-fg", data("example_circle.toml")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).front(), "FINITELY_GENERATED");
    r = cbsg_run({"check-fg", data("triangle_sqrt2_apex.toml")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("tau_1"), std::string::npos);
}

TEST_F(CliFiles, CheckFgOtherVerdicts)
{
    auto r = cbsg_run({"check-fg", write("z.toml", "[body]\nkind = \"circle\"\ncenter = [-5, -5]\nradius = 1\n")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).front(), "ZERO");
    r = cbsg_run({"check-fg", write("f.toml", "[body]\nkind = \"circle\"\ncenter = [\"1/2\", \"1/2\"]\nradius = \"3/4\"\n")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).front(), "FULL_CONE");
}

TEST(Cli, Bound)
{
    auto r = cbsg_run({"bound", data("example_circle.toml")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "M = 17\nk = 8\nl = 13\nbound = 406552365\n");
    EXPECT_EQ(cbsg_run({"bound", data("segment_x_axis.toml")}).code, 3);
}

TEST(Cli, OracleGensMatchesPipeline)
{
    auto a = cbsg_run({"gens", data("circle_2_1_1.toml")});
    auto b = cbsg_run({"oracle", "gens", data("circle_2_1_1.toml"), "--norm-bound", "60"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(cbsg_run({"oracle", "gens", data("circle_2_1_1.toml")}).code, 2); // bound is required
}

TEST_F(CliFiles, MalformedInputIsExitTwo)
{
    EXPECT_EQ(cbsg_run({}).code, 2);
    EXPECT_EQ(cbsg_run({"frobnicate"}).code, 2);
    EXPECT_EQ(cbsg_run({"gens", (dir / "missing.toml").string()}).code, 2);
    EXPECT_EQ(cbsg_run({"member", data("square.toml"), "x", "1"}).code, 2);
    const std::vector<std::string> bad{
        "kind = \"circle\"\n",                                                           // no [body]
        "[body]\nkind = \"ellipse\"\n",                                                  // unknown kind
        "[body]\nkind = \"circle\"\ncenter = [1, 1]\n",                                  // missing radius
        "[body]\nkind = \"circle\"\ncenter = [1, 1]\nradius = \"1/0\"\n",                // bad number
        "[body]\nkind = \"circle\"\ncenter = [1, 1]\nradius = 0\n",                      // invalid body
        "[body]\nkind = \"polygon\"\nvertices = [[\"sqrt(2)\", 1], [\"sqrt(3)\", 2], [3, 1]]\n", // two roots
        "[body]\nkind = \"polygon\"\nvertices = [[1, 1], [2, 2]\n",                      // unclosed array
    };
    for (std::size_t i = 0; i < bad.size(); ++i) {
        auto r = cbsg_run({"gens", write("bad" + std::to_string(i) + ".toml", bad[i])});
        EXPECT_EQ(r.code, 2) << bad[i];
        EXPECT_NE(r.err.find("error"), std::string::npos);
    }
}

TEST(Cli, PreconditionViolationsAreExitThree)
{
    auto r = cbsg_run({"gens", data("circle_1_1_half.toml")});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("not finitely generated"), std::string::npos);
    EXPECT_EQ(cbsg_run({"gens", data("triangle_sqrt2_apex.toml")}).code, 3);
}

TEST(Cli, Help)
{
    auto r = cbsg_run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("gens"), std::string::npos);
}

TEST_F(CliFiles, PlotWritesDeclaredMarkers)
{
    const std::string svg = (dir / "c.svg").string();
    auto r = cbsg_run({"plot", data("example_circle.toml"), "-o", svg, "--dilations", "4", "--norm-bound", "40"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(svg);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    std::smatch m;
    ASSERT_TRUE(std::regex_search(text, m, std::regex("data-lattice-points=\"(\\d+)\"")));
    const std::size_t pts = std::stoul(m[1]);
    ASSERT_TRUE(std::regex_search(text, m, std::regex("data-generators=\"(\\d+)\"")));
    const std::size_t gens = std::stoul(m[1]);
    EXPECT_EQ(count(text, "class=\"pt\""), pts);
    EXPECT_EQ(count(text, "class=\"gen\""), gens);
    // generators inside the 40 x 40 window: (5,3) up to (38,16)
    EXPECT_EQ(gens, 23u);
    EXPECT_NE(r.out.find(std::to_string(pts) + " lattice points"), std::string::npos);

    // not finitely generated: lattice points only
    r = cbsg_run({"plot", data("circle_1_1_half.toml"), "-o", svg, "--dilations", "2", "--norm-bound", "10"});
    EXPECT_EQ(r.code, 0);
}
