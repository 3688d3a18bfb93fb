#include "doctest.h"

#include <sstream>

#include "finitop/error.hpp"
#include "finitop/genop.hpp"
#include "finitop/json_io.hpp"
#include "fixtures.hpp"

using namespace finitop;
using fixtures::set;

namespace {

ErrorCode parse_error(const std::string& text) {
    try {
        space_from_json(parse_json(text));
    } catch (const TopologyError& e) {
        return e.code();
    }
    FAIL("expected a TopologyError");
    return ErrorCode::Malformed;
}

}  // namespace

TEST_CASE("space documents round-trip") {
    const Space s = space_from_json(parse_json(R"({"n": 4, "opens": [[], [0], [1], [0,1], [0,2,3], [0,1,2,3]]})"));
    CHECK(s == fixtures::s1());
    const json j = space_json(s);
    CHECK(j["schema"] == schema::space);
    CHECK(j["opens"][4] == json::array({0, 2, 3}));
    CHECK(space_from_json(parse_json(j.dump())) == s);
}

TEST_CASE("string labels map to indices in sorted order and are echoed back") {
    PointLabels labels;
    const Space s = space_from_json(
        parse_json(R"({"opens": [[], ["a"], ["b"], ["a","b"], ["a","b","c"], ["a","b","c","d"]]})"), &labels);
    CHECK(s == fixtures::s2());
    CHECK(labels.names == std::vector<std::string>{"a", "b", "c", "d"});
    const json j = space_json(s, labels);
    CHECK(j["opens"][4] == json::array({"a", "b", "c"}));
    PointLabels again;
    CHECK(space_from_json(parse_json(j.dump()), &again) == s);
    CHECK(again == labels);

    const SetFamily f = theta_open_family(s, ThetaKind::EStarTheta);
    CHECK(family_from_json(parse_json(family_json(f, labels).dump()), labels) == f);
}

TEST_CASE("malformed space documents name the problem") {
    CHECK(parse_error("{") == ErrorCode::Malformed);
    CHECK(parse_error(R"({"n": 2})") == ErrorCode::Malformed);
    CHECK(parse_error(R"({"n": 2, "opens": [[], [0], [1]]})") == ErrorCode::MissingFull);
    CHECK(parse_error(R"({"n": 2, "opens": [[], [0], [5], [0,1]]})") == ErrorCode::PointOutOfRange);
    CHECK(parse_error(R"({"n": 20, "opens": [[]]})") == ErrorCode::TooManyPoints);
    CHECK(parse_error(R"({"n": 2, "opens": [[], [0.5], [0,1]]})") == ErrorCode::Malformed);
    CHECK(parse_error(R"({"points": ["a","b"], "opens": [[], ["z"], ["a","b"]]})") == ErrorCode::Malformed);
}

TEST_CASE("family, map and verdict documents round-trip") {
    const Space s = fixtures::s1();
    const SetFamily f = open_family(s, Kind::Beta);
    const json fj = family_json(f);
    CHECK(fj["space"] == s.fingerprint_hex());
    CHECK(fj["kind"] == "BETA");
    CHECK(family_from_json(parse_json(fj.dump())) == f);

    const Space sp = fixtures::sierpinski();
    const SpaceMap m(s, sp, {0, 1, 1, 0});
    const json mj = map_json(m);
    CHECK(mj["image"] == json::array({0, 1, 1, 0}));
    CHECK(map_from_json(parse_json(mj.dump()), s, sp).image() == m.image());
    CHECK_THROWS_AS(map_from_json(mj, sp, s), TopologyError);

    const Lattice lat(s);
    const Verdict v = regularity(lat, RegularityVariant::BetaTheta);
    const Verdict back = verdict_from_json(parse_json(verdict_json(v).dump()));
    CHECK(back == v);
    CHECK(replay_witness(lat, back));

    Witness w;
    w.role = "mixed";
    w.add_set("A", set({1, 3})).add_point("x", 2).add_text("note", "t");
    CHECK(witness_from_json(witness_json(w)) == w);

    const ClauseVector c = ClauseVector::from("demo", {true, false});
    CHECK(clauses_from_json(parse_json(clauses_json(c).dump())) == c);
}

TEST_CASE("report documents round-trip") {
    const ScanReport r = scan({fixtures::s1(), fixtures::s3()}, Campaign::Implications);
    const json j = scan_json(r);
    CHECK(j["schema"] == schema::scan);
    const ScanReport back = scan_from_json(parse_json(j.dump()));
    CHECK(scan_json(back) == j);
    CHECK(back.matrix == r.matrix);
    CHECK(back.arrows == r.arrows);
    CHECK(back.converses == r.converses);

    const ScanReport t = scan({fixtures::s2()}, Campaign::Theorems);
    CHECK(scan_json(scan_from_json(scan_json(t))) == scan_json(t));

    const MapCampaignReport m = map_campaign({fixtures::sierpinski(), Space::discrete(2)});
    const json mj = map_campaign_json(m);
    CHECK(map_campaign_json(map_campaign_from_json(parse_json(mj.dump()))) == mj);

    const OpenQuestionReport q = search_open_question(2);
    CHECK(search_from_json(parse_json(search_json(q).dump())) == q);
    OpenQuestionReport fake = q;
    fake.found = true;
    fake.canonical_id = "2:0,1,3";
    fake.n = 2;
    fake.opens = {0, 1, 3};
    fake.evidence = {holds("regular.estar")};
    CHECK(search_from_json(search_json(fake)) == fake);
}

TEST_CASE("corpus lines round-trip") {
    std::vector<ZooRecord> records;
    for (const Space& s : enumerate_topologies(3, EnumerationMode::Canonical)) records.push_back(make_record(s, true));
    std::stringstream ss;
    write_corpus(ss, records);
    const std::string text = ss.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
    const json first = parse_json(text.substr(0, text.find('\n')));
    CHECK(first.contains("opens_hex"));
    CHECK(first["opens_hex"][0] == "0");

    std::stringstream in(text + "\n\n");
    const auto back = read_corpus(in);
    CHECK(back == records);
    for (const ZooRecord& r : back) CHECK(replay_record(r));

    std::stringstream bad(R"({"id": "x", "n": 2, "opens_hex": ["0", "q"]})");
    CHECK_THROWS_AS(read_corpus(bad), TopologyError);
}
