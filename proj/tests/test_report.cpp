#include <doctest.h>

#include "chebrad/render.hpp"
#include "chebrad/report.hpp"

using namespace chebrad;
using nlohmann::json;

TEST_CASE("json report carries the schema version and round-trips") {
    AnalysisReport r = analyze(make_instance(Int(3), 3, Int(451251)));
    json j = to_json(r);
    CHECK(j.at("schema_version") == kReportSchemaVersion);
    CHECK(j.at("input").at("t") == "451251");
    CHECK(j.at("primes").at(0).at("ind") == 13);
    CHECK(j.at("delta_k").at("structured").at(0).at("exponent") == 55);
    CHECK(j.at("fully_determined") == true);

    // big integers are decimal strings, never numbers
    CHECK(j.at("disc_phi").at("numeric").is_string());
    CHECK(j.at("input").at("ell").is_string());

    std::string dumped = j.dump(2);
    json parsed = json::parse(dumped);
    CHECK(parsed == j);
    CHECK(parsed.dump(2) == dumped);
}

TEST_CASE("text and json carry the same numeric content") {
    AnalysisReport r = analyze(make_instance(Int(3), 1, Int(27)));
    json j = to_json(r);
    std::string text = to_text(r);
    // the delta value, the per-prime indices, and the verdict all appear
    CHECK(text.find("-87") != std::string::npos);
    CHECK(j.at("delta_k").at("numeric") == "-87");
    CHECK(text.find("monogenic: no") != std::string::npos);
    CHECK(j.at("monogenic").at("verdict") == "no");
    bool saw5 = false;
    for (const auto& row : j.at("primes"))
        if (row.at("p") == "5") {
            saw5 = true;
            CHECK(row.at("ind") == 1);
        }
    CHECK(saw5);
    CHECK(text.find("p = 5") != std::string::npos);
}

TEST_CASE("undetermined parts serialize with ranges") {
    // even t with a non-maximal 2-part
    AnalysisReport r = analyze(make_instance(Int(3), 1, Int(6)));
    json j = to_json(r);
    CHECK(j.at("fully_determined") == false);
    bool saw2 = false;
    for (const auto& u : j.at("delta_k").at("undetermined")) {
        if (u.at("p") == "2") saw2 = true;
        CHECK(u.at("exponent_range").size() == 2);
    }
    CHECK(saw2);
}

TEST_CASE("ascii and svg renderings") {
    Instance inst = make_instance(Int(3), 3, Int(451251));
    PhiDevelopment dev = phi_development(inst.phi, IntPoly::x(), Int(3));
    NewtonPolygon np = principal_polygon(dev);
    std::string ascii = render_ascii(np, 1);
    CHECK(ascii.find("(0,6) (1,3) (3,2) (9,1) (27,0)") != std::string::npos);
    CHECK(ascii.find("ind contribution: 13") != std::string::npos);
    std::string svg = render_svg(np, 1);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("ind contribution 13") != std::string::npos);

    // wide polygons truncate with the end vertex noted
    Instance wide = make_instance(Int(7), 3, Int(451251));
    PhiDevelopment wdev = phi_development(wide.phi, IntPoly{-3, 1}, Int(7));
    std::string wascii = render_ascii(principal_polygon(wdev), 1);
    CHECK(wascii.find("(343,0) not shown") != std::string::npos);
}
