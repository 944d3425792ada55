#include "support/common.hpp"
#include "support/gen.hpp"

#include "toric/io.hpp"

#include <json.hpp>

#include <regex>

using namespace toric;
using testing::Pts;

namespace {

const char *kP2 = R"(# cone over (1,0),(1,3)
format_version = 1
dimension = 2
rays = [(1,0),(1,3)]
w = (-1,-2)
p = 2
e = 1
)";

std::string with(const std::string &extra) { return std::string(kP2) + extra; }

std::string instance(const std::string &w, std::int64_t p, const std::string &extra = "") {
    return "dimension = 2\nrays = [(1,0),(1,3)]\nw = " + w + "\np = " + std::to_string(p) + "\n" + extra;
}

CommandResult run(const std::string &cmd, const std::string &text, CommandOptions opt = {}) {
    return run_command(cmd, build_instance(parse_instance(text)), opt);
}

std::size_t count(const std::string &hay, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

void check_parse_error(const std::string &text, const std::string &fragment) {
    try {
        parse_instance(text);
        FAIL("no error for: " << text);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, std::string(e.what()));
    }
}

} // namespace

TEST_CASE("parse the final example instance") {
    auto cfg = parse_instance(kP2);
    CHECK(cfg.dimension == 2);
    CHECK(cfg.rays == Pts{{1, 0}, {1, 3}});
    CHECK(cfg.w == LatticePoint{-1, -2});
    CHECK(cfg.p == 2);
    CHECK(cfg.e == 1);
    CHECK(cfg.a_generators.empty());
    CHECK(cfg.t == 0);
    auto inst = build_instance(cfg);
    CHECK(inst.N == 3);
    CHECK(inst.ambient->hilbert() == Pts{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
    CHECK(inst.triple.cartier().base() == RationalVector{1, 2});
}

TEST_CASE("divisor input") {
    auto cfg = parse_instance("dimension = 2\nrays = [(1,0),(1,3)]\ndivisor = [3, 2]\np = 2\n");
    CHECK(build_instance(cfg).triple.cartier().w() == LatticePoint{-1, -2});
    try {
        parse_instance("dimension = 2\nrays = [(1,0),(1,3)]\ndivisor = [0, 0]\np = 2\n");
        FAIL("Delta = 0 at p = 2 was accepted");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::IndexNotCoprime);
        CHECK(std::string(e.what()).find("index") != std::string::npos);
    }
}

TEST_CASE("instance validation errors") {
    CHECK_THROWS_KIND(parse_instance(with("a_generators = [(1,1)]\nt = 1/2\n")), ErrorKind::PDividesDenominator);
    check_parse_error(with("divisor = [3, 2]\n"), "exactly one");
    check_parse_error("dimension = 2\nrays = [(1,0),(1,3)]\np = 2\n", "exactly one");
    check_parse_error(with("p = 3\n"), "duplicate");
    check_parse_error(with("colour = blue\n"), "unknown key");
    check_parse_error("rays = [(1,0),(1,3)]\nw = (0,0)\np = 2\n", "dimension");
    check_parse_error(with("t = 1/0\n"), "line 8");
    check_parse_error(with("N = three\n"), "field 'N'");
    check_parse_error(with("margin = -1\n"), "margin");
    check_parse_error("dimension = 2\nrays = [(1,0),(1,3,4)]\nw = (0,0)\np = 2\n", "rays");
    check_parse_error("dimension = 2\nrays = [(1,0),(1,3)]\nw = (0,0\np = 2\n", "line 3");
    check_parse_error("format_version = 2\n", "version");
    CHECK_THROWS_KIND(parse_instance(instance("(0,0)", 4)), ErrorKind::InvalidCartierData);
    CHECK_THROWS_KIND(parse_instance("dimension = 2\nrays = [(1,0),(-1,0)]\nw = (0,0)\np = 2\n"), ErrorKind::NotPointed);
    CHECK_THROWS_KIND(parse_instance(instance("(0,0)", 3, "a_generators = [(2,0)]\nt = 2/5\nN = 2\n")),
                      ErrorKind::InadmissibleExponent);
    CHECK_THROWS_KIND(parse_instance(instance("(0,0)", 3, "a_generators = [(0,1)]\nt = 1\n")),
                      ErrorKind::PointOutsideSemigroup);
}

TEST_CASE("serialize round trip") {
    auto cfg = parse_instance(kP2);
    CHECK(parse_instance(serialize_instance(cfg)) == cfg);
    auto tri = parse_instance(instance("(-1,-2)", 3, "a_generators = [(2,1),(1,3)]\nt = 1/2\nN = 6\nmargin = 2\npool_cap = 15\n"));
    CHECK(parse_instance(serialize_instance(tri)) == tri);
    CHECK(serialize_instance(parse_instance(serialize_instance(tri))) == serialize_instance(tri));

    gen::Rng rng(31);
    for (int it = 0; it < 100; ++it) {
        InstanceConfig c;
        c.dimension = rng.coin() ? 2 : 3;
        c.rays = gen::cone_rays(rng, c.dimension);
        c.p = rng.pick(std::vector<std::int64_t>{2, 3, 5});
        c.e = rng.uniform(1, 2);
        c.w = rng.point(c.dimension, -3, 3);
        c.t = Rational(rng.uniform(0, 6), rng.pick(std::vector<long>{1, 7, 11}));
        c.t.canonicalize();
        c.margin = rng.uniform(0, 3);
        if (rng.coin()) c.N = admissible_exponents(c.t, c.p, c.e) * rng.uniform(1, 3);
        auto text = serialize_instance(c);
        CHECK(parse_instance(text) == c);
    }
}

TEST_CASE("ideal parsing and printing") {
    auto s = make_semigroup({{1, 0}, {1, 3}});
    CHECK(parse_ideal(s, "0").is_zero());
    CHECK(parse_ideal(s, "R").is_unit());
    CHECK(parse_ideal(s, "1").is_unit());
    CHECK(parse_ideal(s, " [(2,4), (2,3)] ").generators() == Pts{{2, 3}, {2, 4}});
    CHECK_THROWS_KIND(parse_ideal(s, "[(2,4),(0,1)]"), ErrorKind::PointOutsideSemigroup);
    CHECK_THROWS_KIND(parse_ideal(s, "[(2,4,1)]"), ErrorKind::ParseError);
    CHECK_THROWS_KIND(parse_ideal(s, "[(2,4)"), ErrorKind::ParseError);

    CHECK(monomial_string({0, 0}) == "1");
    CHECK(monomial_string({1, 2}) == "xy^2");
    CHECK(monomial_string({2, 0, 1}) == "x^2z");
    CHECK(monomial_string({-1, 3}) == "x^{-1}y^3");
    CHECK(monomial_string({1, 1, 1, 1}).empty());

    auto j = ideal_json(MonomialIdeal::from_generators(s, {{2, 3}, {2, 4}}));
    CHECK(j["text"] == "[(2,3),(2,4)]");
    CHECK(j["monomials"] == nlohmann::json::array({"x^2y^3", "x^2y^4"}));
    CHECK(j["generators"] == nlohmann::json::array({{2, 3}, {2, 4}}));
}

TEST_CASE("enumerate command") {
    auto r = run("enumerate", kP2);
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["count"] == 6);
    CHECK(doc["fixed_ideals"].size() == 6);
    CHECK(doc["largest"]["text"] == "[(1,2)]");
    CHECK(doc["smallest_nonzero"]["text"] == "[(2,3),(2,4)]");
    CHECK(doc["format_version"] == 1);
    CHECK_FALSE(doc.contains("timing_ms"));
    // Byte stable.
    CHECK(run("enumerate", kP2).output == r.output);

    CommandOptions timed;
    timed.timing = true;
    CHECK(nlohmann::json::parse(run("enumerate", kP2, timed).output).contains("timing_ms"));
}

TEST_CASE("verify command") {
    CommandOptions o;
    o.ideal = "[(2,3),(2,4)]";
    auto ok = run("verify", kP2, o);
    CHECK(ok.exit_code == 0);
    CHECK(nlohmann::json::parse(ok.output)["verdict"] == "fixed");

    o.ideal = "[(1,1)]";
    auto bad = run("verify", instance("(-1,-2)", 3), o);
    CHECK(bad.exit_code == 1);
    auto doc = nlohmann::json::parse(bad.output);
    CHECK(doc["verdict"] == "not_fixed");
    CHECK(doc["witness"] == nlohmann::json::array({1, 2}));
    CHECK(doc["witness_monomial"] == "xy^2");

    CHECK_THROWS_KIND(run("verify", kP2), ErrorKind::ParseError);
    CommandOptions n;
    n.ideal = "0";
    n.N = 1;
    CHECK(run("verify", kP2, n).exit_code == 0);
}

TEST_CASE("other commands") {
    CHECK(nlohmann::json::parse(run("test-ideal", instance("(0,1)", 3)).output)["ideal"]["text"] == "[(1,0),(1,1),(1,2)]");
    CHECK(nlohmann::json::parse(run("non-lc", kP2).output)["ideal"]["text"] == "[(1,2)]");
    auto st = nlohmann::json::parse(run("stable-image", kP2).output);
    CHECK(st["ideal"]["text"] == "[(1,2)]");
    CHECK(st["chain"].front() == "[(0,0)]");
    auto cv = run("cross-validate", kP2);
    CHECK(cv.exit_code == 0);
    CHECK(nlohmann::json::parse(cv.output)["pass"] == true);
    CommandOptions tiny;
    tiny.margin = 3;
    auto cv2 = run("cross-validate", with("pool_cap = 4\n"), tiny);
    CHECK(cv2.exit_code == 1);
    CHECK_THROWS_KIND(run("frobnicate", kP2), ErrorKind::Unsupported);
    CommandOptions svg;
    svg.format = "svg";
    CHECK_THROWS_KIND(run("enumerate", kP2, svg), ErrorKind::Unsupported);
    svg.format = "png";
    CHECK_THROWS_KIND(run("plot", kP2, svg), ErrorKind::ParseError);
}

TEST_CASE("plot output") {
    CommandOptions o;
    o.format = "svg";
    auto a = run("plot", kP2, o);
    CHECK(a.exit_code == 0);
    CHECK(a.output.rfind("<svg", 0) == 0);
    CHECK(count(a.output, "<g id=\"panel-") == 6);
    CHECK(count(a.output, "class=\"region\"") == 6);
    CHECK(count(a.output, "class=\"base\"") == 6);
    CHECK(a.output.find("#999999") != std::string::npos);
    CHECK(a.output == run("plot", kP2, o).output);
    CHECK(a.output.find("nan") == std::string::npos);
    // The zero panel carries no shading.
    auto zero = a.output.substr(a.output.find("<g id=\"panel-0\""));
    zero = zero.substr(0, zero.find("<g id=\"panel-I\""));
    CHECK(count(zero, "class=\"ideal\"") == 0);

    auto doc = nlohmann::json::parse(run("plot", kP2).output);
    CHECK(doc["svg"].get<std::string>() == a.output);

    auto three = "dimension = 3\nrays = [(1,0,0),(0,1,0),(0,0,1)]\nw = (0,0,0)\np = 2\n";
    CHECK_THROWS_KIND(run("plot", three, o), ErrorKind::Unsupported);
    CHECK(run("enumerate", three).exit_code == 0);
}
