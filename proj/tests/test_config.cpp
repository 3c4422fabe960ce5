#include "latdisc/config.hpp"
#include "latdisc/csv.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

using namespace latdisc;

TEST_CASE("minimal body configs parse") {
    const auto sphere = parse_config("[body]\nfamily = sphere\nradius = 1\n");
    CHECK(sphere.family == Family::Sphere);
    CHECK(sphere.radius == 1);
    CHECK(sphere.body().describe() == "sphere(1)");

    const auto sb = parse_config("[body]\nfamily = superball\np = 4\n");
    CHECK(sb.family == Family::Superball);
    CHECK(sb.p == 4);
    CHECK(sb.radius == 1);  // default

    const auto sp = parse_config("[body]\nfamily = spheroid\na = 2\nb = 1\n");
    CHECK(sp.family == Family::Spheroid);
    CHECK(sp.axis == 2);
    CHECK(sp.cross == 1);
}

TEST_CASE("run keys, sections and comments") {
    const std::string text =
        "# comment\n"
        "[body]\n"
        "family = superball\n"
        "p = 6\n"
        "radius = 3/2\n"
        "\n"
        "[run]\n"
        "J = 9\n"
        "density = 16\n"
        "t = 2,7/2,10/3\n"
        "T = 16,32\n"
        "workers = 4\n"
        "out = results.csv\n";
    const auto cfg = parse_config(text);
    CHECK(cfg.p == 6);
    CHECK(cfg.radius == Rational(3, 2));
    CHECK(cfg.J == 9);
    CHECK(cfg.density == 16);
    REQUIRE(cfg.t_list.size() == 3);
    CHECK(cfg.t_list[2] == Rational(10, 3));
    CHECK(cfg.T_list == std::vector<Rational>{16, 32});
    CHECK(cfg.workers == 4);
    CHECK(cfg.out_path == "results.csv");
    CHECK(cfg.effective_J() == 9);
}

TEST_CASE("errors carry line numbers and name the rule broken") {
    // odd superball exponent
    try {
        parse_config("[body]\nfamily = superball\np = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        REQUIRE(e.errors.size() >= 1);
        CHECK(e.errors[0].find("line 3") != std::string::npos);
        CHECK(e.errors[0].find("even") != std::string::npos);
    }

    // missing family lists the required keys
    try {
        parse_config("[body]\nradius = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.errors[0].find("family") != std::string::npos);
        CHECK(e.errors[0].find("required") != std::string::npos);
    }

    // unknown key, malformed rational: both reported at once
    try {
        parse_config("[body]\nfamily = sphere\nbogus = 1\nradius = 1/x\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        REQUIRE(e.errors.size() == 2);
        CHECK(e.errors[0].find("line 3") != std::string::npos);
        CHECK(e.errors[0].find("bogus") != std::string::npos);
        CHECK(e.errors[1].find("line 4") != std::string::npos);
        CHECK(e.errors[1].find("malformed rational") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config("[body]\nfamily = cube\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[body]\nfamily = spheroid\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[weird]\nfamily = sphere\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[body]\nfamily = sphere\nradius = -1\n"), ConfigError);
}

TEST_CASE("render/parse round trip is the identity") {
    ExperimentConfig a;
    a.family = Family::Superball;
    a.p      = 6;
    a.radius = Rational(3, 2);
    a.J      = 9;
    a.K      = 50'000;
    a.density = 16;
    a.T_list  = {16, 32, 64};
    a.t_list  = {Rational(7, 2), Rational(10, 3)};
    a.X_list  = {10, 100};
    a.Y_list  = {100};
    a.workers = 3;
    a.out_path = "x.csv";
    CHECK(parse_config(render_config(a)) == a);

    ExperimentConfig b;
    b.family = Family::Spheroid;
    b.axis   = 2;
    b.cross  = 1;
    CHECK(parse_config(render_config(b)) == b);

    // defaults for a plain sphere survive the trip too
    ExperimentConfig c;
    CHECK(parse_config(render_config(c)) == c);
}

TEST_CASE("config hash distinguishes configs and is stable") {
    ExperimentConfig a, b;
    b.density = 16;
    CHECK(config_hash(a) == config_hash(a));
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("csv escaping quotes only when needed") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("3.14") == "3.14");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(fmt_double(2.0) == "2");
    CHECK(fmt_double(0.03125) == "0.03125");
}
