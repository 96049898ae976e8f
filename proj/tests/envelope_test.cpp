#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "hncalc/envelope.hpp"

using namespace hncalc;

namespace {

CompleteIntersectionSpec ci(int n, std::vector<long long> degrees) {
    CompleteIntersectionSpec spec;
    spec.n = n;
    spec.degrees = std::move(degrees);
    return spec;
}

RuledSurfaceSpec ruled_unstable(int n, long long s, long long t, long long alpha) {
    RuledSurfaceSpec spec;
    spec.n = n;
    spec.stability = Stability::Unstable;
    spec.s = s;
    spec.t = t;
    spec.alpha = alpha;
    return spec;
}

RuledSurfaceSpec ruled_semistable(int n, long long e, long long alpha) {
    RuledSurfaceSpec spec;
    spec.n = n;
    spec.stability = Stability::Semistable;
    spec.e = e;
    spec.alpha = alpha;
    return spec;
}

TwoHypersurfaceSpec two_hyp(int n1, int n2, long long a1, long long a2, long long e) {
    TwoHypersurfaceSpec spec;
    spec.n1 = n1;
    spec.n2 = n2;
    spec.alpha1 = a1;
    spec.alpha2 = a2;
    spec.e = e;
    return spec;
}

AcyclicSpec acyclic(long long cover, long long rank, long long degree, long long genus) {
    AcyclicSpec spec;
    spec.cover_degree = cover;
    spec.bundle_rank = rank;
    spec.bundle_degree = degree;
    spec.genus = genus;
    return spec;
}

SplittingType make_split(std::initializer_list<long> values) {
    std::vector<Integer> v;
    for (long x : values) {
        v.emplace_back(x);
    }
    return SplittingType{std::move(v)};
}

void check_roundtrip(const OutputEnvelope& env) {
    std::string line = env.to_json_line();
    Json parsed = Json::parse(line);
    CHECK(parsed.dump() == line);
}

} // namespace

TEST_CASE("json_int range checking") {
    CHECK(json_int(Integer(0)) == 0);
    CHECK(json_int(Integer(-42)) == -42);
    CHECK(json_int(Integer("9223372036854775807")) == 9223372036854775807LL);
    CHECK_THROWS_AS(json_int(Integer("9223372036854775808")), DomainError);
    CHECK_THROWS_AS(json_int(Integer("-99999999999999999999")), DomainError);
}

TEST_CASE("polygon serialization") {
    Json poly = polygon_to_json(polygon_from_splitting(make_split({1, 2, 2, 1})));
    REQUIRE(poly.at("pieces").size() == 4);
    CHECK(poly["pieces"][1]["rank"] == 2);
    CHECK(poly["pieces"][1]["degree"] == -2);
    CHECK(poly["pieces"][1]["slope_numerator"] == -1);
    CHECK(poly["pieces"][1]["slope_denominator"] == 1);
    CHECK(poly["pieces"][1]["label"] == "O(−1)^2");
    REQUIRE(poly.at("vertices").size() == 5);
    CHECK(poly["vertices"][0][0] == 0);
    CHECK(poly["vertices"][4][0] == 6);
    CHECK(poly["vertices"][4][1] == -9);
    CHECK(poly["pieces"][0]["rank"].is_number_integer());
}

TEST_CASE("slopes serialize as reduced fractions with positive denominator") {
    std::vector<GradedPiece> pieces{GradedPiece{Integer(4), Integer(-6), "X"}};
    Json poly = polygon_to_json(polygon_from_pieces(pieces));
    CHECK(poly["pieces"][0]["slope_numerator"] == -3);
    CHECK(poly["pieces"][0]["slope_denominator"] == 2);

    std::vector<GradedPiece> integral{GradedPiece{Integer(3), Integer(12), "Y"}};
    Json whole = polygon_to_json(polygon_from_pieces(integral));
    CHECK(whole["pieces"][0]["slope_numerator"] == 4);
    CHECK(whole["pieces"][0]["slope_denominator"] == 1);
}

TEST_CASE("splitting envelope carries everything") {
    OutputEnvelope env = splitting_envelope(ci(3, {2, 3}));
    CHECK(env.command == "splitting -n 3 -d 2,3");
    CHECK(env.all_checks_pass());
    REQUIRE(env.checks.size() == 5);
    CHECK(env.checks[0].name == "three-route");
    CHECK(env.checks[1].name == "rank");
    CHECK(env.checks[2].name == "chi");
    CHECK(env.checks[3].name == "palindrome");
    CHECK(env.checks[4].name == "order-invariant");

    Json j = env.to_json();
    CHECK(j["inputs"]["n"] == 3);
    CHECK(j["inputs"]["degrees"][0] == 2);
    CHECK(j["inputs"]["degrees"][1] == 3);
    REQUIRE(j["result"]["a"].size() == 4);
    CHECK(j["result"]["a"][1] == 2);
    CHECK(j["result"]["bundle"] == "O ⊕ O(−1)^2 ⊕ O(−2)^2 ⊕ O(−3)");
    CHECK(j["result"]["polygon"]["pieces"].size() == 4);
    CHECK(j["checks"][0]["pass"] == true);

    std::string line = env.to_json_line();
    CHECK(line.rfind("{\"command\":", 0) == 0);
}

TEST_CASE("degree order is echoed but does not change the result") {
    OutputEnvelope sorted = splitting_envelope(ci(3, {2, 3}));
    OutputEnvelope reversed = splitting_envelope(ci(3, {3, 2}));
    CHECK(reversed.command == "splitting -n 3 -d 3,2");
    CHECK(reversed.all_checks_pass());
    CHECK(sorted.result["a"] == reversed.result["a"]);
}

TEST_CASE("hn-sym envelope") {
    OutputEnvelope env = hn_sym_envelope(2, 3, 1);
    CHECK(env.command == "hn-sym -m 2 -s 3 -t 1");
    CHECK(env.all_checks_pass());
    Json j = env.to_json();
    REQUIRE(j["result"]["polygon"]["pieces"].size() == 3);
    CHECK(j["result"]["polygon"]["pieces"][0]["degree"] == 6);
    CHECK(j["result"]["polygon"]["pieces"][2]["degree"] == 2);
}

TEST_CASE("ruled envelopes across the three shapes") {
    OutputEnvelope zero = ruled_envelope(ruled_unstable(1, 1, 0, 0));
    CHECK(zero.command == "ruled -n 1 -s 1 -t 0 -a 0");
    CHECK(zero.result["zero_sheaf"] == true);
    REQUIRE(zero.checks.size() == 1);
    CHECK(zero.checks[0].name == "zero-sheaf");
    CHECK(zero.all_checks_pass());

    OutputEnvelope unstable = ruled_envelope(ruled_unstable(4, 1, 0, 0));
    CHECK(unstable.command == "ruled -n 4 -s 1 -t 0 -a 0");
    CHECK(unstable.all_checks_pass());
    CHECK(unstable.result["zero_sheaf"] == false);
    REQUIRE(unstable.result["polygon"]["pieces"].size() == 3);
    CHECK(unstable.result["polygon"]["pieces"][0]["degree"] == -1);
    CHECK(unstable.result["polygon"]["pieces"][2]["degree"] == -3);

    OutputEnvelope semi = ruled_envelope(ruled_semistable(3, 0, 0));
    CHECK(semi.command == "ruled -n 3 --semistable -e 0 -a 0");
    CHECK(semi.all_checks_pass());
    REQUIRE(semi.result["polygon"]["pieces"].size() == 1);
    CHECK(semi.result["polygon"]["pieces"][0]["rank"] == 2);
    CHECK(semi.result["polygon"]["pieces"][0]["degree"] == 0);

    RuledSurfaceSpec positive = ruled_semistable(3, 0, 0);
    positive.characteristic = Characteristic::Positive;
    OutputEnvelope pos_env = ruled_envelope(positive);
    CHECK(pos_env.command == "ruled -n 3 --semistable -e 0 -a 0 --char positive");
    CHECK(pos_env.inputs["characteristic"] == "positive");
}

TEST_CASE("two-hypersurface envelope") {
    OutputEnvelope env = two_hyp_envelope(two_hyp(2, 3, 0, 0, 1));
    CHECK(env.command == "two-hyp --n1 2 --n2 3 --a1 0 --a2 0 -e 1");
    CHECK(env.all_checks_pass());
    Json j = env.to_json();
    CHECK(j["result"]["zero_sheaf"] == false);
    CHECK(j["result"]["presentation"]["kernel"]["rank"] == 5);
    CHECK(j["result"]["presentation"]["kernel"]["degree"] == -9);
    CHECK(j["result"]["presentation"]["targets"].size() == 2);

    OutputEnvelope zero = two_hyp_envelope(two_hyp(1, 1, 0, 0, 0));
    CHECK(zero.result["zero_sheaf"] == true);
    CHECK(zero.all_checks_pass());
}

TEST_CASE("acyclic envelope") {
    OutputEnvelope env = acyclic_envelope(acyclic(3, 2, 2, 2));
    CHECK(env.command == "acyclic -c 3 -r 2 --deg 2 -g 2");
    CHECK(env.all_checks_pass());
    Json j = env.to_json();
    CHECK(j["result"]["bundle"] == "O(−1)^6");
    CHECK(j["result"]["a"][0] == 0);
    CHECK(j["result"]["a"][1] == 6);
    REQUIRE(env.checks.size() == 3);
    CHECK(env.checks[0].name == "chi-zero");
    CHECK(env.checks[1].name == "single-block");
    CHECK(env.checks[2].name == "slope-minus-one");
}

TEST_CASE("JSON round-trips byte for byte") {
    check_roundtrip(splitting_envelope(ci(3, {2, 3})));
    check_roundtrip(splitting_envelope(ci(2, {4})));
    check_roundtrip(hn_sym_envelope(2, 3, 1));
    check_roundtrip(ruled_envelope(ruled_unstable(4, 1, 0, 0)));
    check_roundtrip(ruled_envelope(ruled_unstable(1, 1, 0, 0)));
    check_roundtrip(ruled_envelope(ruled_semistable(3, 0, 0)));
    check_roundtrip(two_hyp_envelope(two_hyp(2, 3, 0, 0, 1)));
    check_roundtrip(acyclic_envelope(acyclic(3, 2, 2, 2)));
}

TEST_CASE("serialization is deterministic across calls") {
    std::string first = splitting_envelope(ci(3, {2, 3})).to_json_line();
    std::string second = splitting_envelope(ci(3, {2, 3})).to_json_line();
    CHECK(first == second);
}

TEST_CASE("table rendering") {
    OutputEnvelope env = splitting_envelope(ci(3, {2, 3}));
    std::string table = env.to_table();
    CHECK(table.find("command: splitting -n 3 -d 2,3") != std::string::npos);
    CHECK(table.find("n = 3") != std::string::npos);
    CHECK(table.find("degrees = 2,3") != std::string::npos);
    CHECK(table.find("a = 1,2,2,1") != std::string::npos);
    CHECK(table.find("bundle = O ⊕ O(−1)^2 ⊕ O(−2)^2 ⊕ O(−3)") != std::string::npos);
    CHECK(table.find("polygon:") != std::string::npos);
    CHECK(table.find("three-route") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
    CHECK(env.to_table() == table);

    std::string pres = two_hyp_envelope(two_hyp(2, 3, 0, 0, 1)).to_table();
    CHECK(pres.find("presentation:") != std::string::npos);
    CHECK(pres.find("kernel") != std::string::npos);
}

TEST_CASE("ascii polygon rendering") {
    OutputEnvelope env = splitting_envelope(ci(3, {2, 3}));
    std::string ascii = env.to_ascii_polygon();
    CHECK(ascii.find("vertices: (0,0) (1,0) (3,-2) (5,-6) (6,-9)") != std::string::npos);
    CHECK(ascii.find("checks: 5/5 passed") != std::string::npos);
    CHECK(ascii.find('o') != std::string::npos);
    CHECK(env.to_ascii_polygon() == ascii);

    std::string zero = ruled_envelope(ruled_unstable(1, 1, 0, 0)).to_ascii_polygon();
    CHECK(zero.find("zero sheaf") != std::string::npos);

    std::string none = two_hyp_envelope(two_hyp(2, 3, 0, 0, 1)).to_ascii_polygon();
    CHECK(none.find("no polygon") != std::string::npos);
}

TEST_CASE("failed checks are surfaced") {
    OutputEnvelope env;
    env.command = "probe";
    env.inputs = Json::object();
    env.result = Json::object();
    env.checks = {Check{"good", true}, Check{"bad", false}};
    CHECK(!env.all_checks_pass());
    std::string ascii = env.to_ascii_polygon();
    CHECK(ascii.find("1/2 passed") != std::string::npos);
    CHECK(ascii.find("bad") != std::string::npos);
    std::string table = env.to_table();
    CHECK(table.find("FAIL") != std::string::npos);
}

TEST_CASE("sweep grid order and codimension-only property") {
    SweepConfig config;
    config.n_lo = 3;
    config.n_hi = 5;
    config.r = 1;
    config.d_lo = 1;
    config.d_hi = 4;
    SweepOutcome out = run_sweep(config);
    REQUIRE(out.envelopes.size() == 12);
    CHECK(out.pass_count == 12);
    CHECK(out.fail_count == 0);
    CHECK(out.envelopes[0].command == "splitting -n 3 -d 1");
    CHECK(out.envelopes[3].command == "splitting -n 3 -d 4");
    CHECK(out.envelopes[4].command == "splitting -n 4 -d 1");
    CHECK(out.envelopes[11].command == "splitting -n 5 -d 4");
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(out.envelopes[i].result["a"] == out.envelopes[i + 4].result["a"]);
        CHECK(out.envelopes[i].result["a"] == out.envelopes[i + 8].result["a"]);
    }
}

TEST_CASE("sweep envelopes are byte-identical to single runs") {
    SweepConfig config;
    config.n_lo = 3;
    config.n_hi = 3;
    config.r = 2;
    config.d_lo = 2;
    config.d_hi = 3;
    SweepOutcome out = run_sweep(config);
    REQUIRE(out.envelopes.size() == 4);
    CHECK(out.envelopes[0].command == "splitting -n 3 -d 2,2");
    CHECK(out.envelopes[1].command == "splitting -n 3 -d 2,3");
    CHECK(out.envelopes[2].command == "splitting -n 3 -d 3,2");
    CHECK(out.envelopes[3].command == "splitting -n 3 -d 3,3");
    OutputEnvelope single = splitting_envelope(ci(3, {2, 3}));
    CHECK(out.envelopes[1].to_json_line() == single.to_json_line());
}

TEST_CASE("sweeps at different n give pairwise-equal sequences") {
    SweepConfig low;
    low.n_lo = 3;
    low.n_hi = 3;
    low.r = 2;
    low.d_lo = 2;
    low.d_hi = 4;
    SweepConfig high = low;
    high.n_lo = 7;
    high.n_hi = 7;
    SweepOutcome at3 = run_sweep(low);
    SweepOutcome at7 = run_sweep(high);
    REQUIRE(at3.envelopes.size() == 9);
    REQUIRE(at7.envelopes.size() == 9);
    CHECK(at3.pass_count == 9);
    CHECK(at7.pass_count == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(at3.envelopes[i].result["a"] == at7.envelopes[i].result["a"]);
    }
}

TEST_CASE("sweep handles empty ranges and rejects bad grids") {
    SweepConfig empty;
    empty.n_lo = 5;
    empty.n_hi = 3;
    empty.r = 1;
    empty.d_lo = 1;
    empty.d_hi = 4;
    CHECK(run_sweep(empty).envelopes.empty());

    SweepConfig empty_d;
    empty_d.n_lo = 3;
    empty_d.n_hi = 5;
    empty_d.r = 1;
    empty_d.d_lo = 4;
    empty_d.d_hi = 1;
    CHECK(run_sweep(empty_d).envelopes.empty());

    SweepConfig zero_degree;
    zero_degree.n_lo = 3;
    zero_degree.n_hi = 3;
    zero_degree.r = 1;
    zero_degree.d_lo = 0;
    zero_degree.d_hi = 2;
    CHECK_THROWS_AS(run_sweep(zero_degree), DomainError);

    SweepConfig point_target;
    point_target.n_lo = 2;
    point_target.n_hi = 3;
    point_target.r = 2;
    point_target.d_lo = 1;
    point_target.d_hi = 2;
    CHECK_THROWS_AS(run_sweep(point_target), DomainError);

    SweepConfig no_degrees;
    no_degrees.r = 0;
    CHECK_THROWS_AS(run_sweep(no_degrees), DomainError);

    SweepConfig huge;
    huge.n_lo = 3;
    huge.n_hi = 250003;
    huge.r = 1;
    huge.d_lo = 1;
    huge.d_hi = 1;
    CHECK_THROWS_AS(run_sweep(huge), DomainError);
}

TEST_CASE("sweep output does not depend on thread count") {
    SweepConfig config;
    config.n_lo = 3;
    config.n_hi = 6;
    config.r = 2;
    config.d_lo = 1;
    config.d_hi = 3;
    config.threads = 4;
    SweepOutcome parallel = run_sweep(config);
    config.threads = 1;
    SweepOutcome serial = run_sweep(config);
    REQUIRE(parallel.envelopes.size() == 36);
    REQUIRE(serial.envelopes.size() == 36);
    CHECK(parallel.pass_count == 36);
    for (std::size_t i = 0; i < serial.envelopes.size(); ++i) {
        CHECK(parallel.envelopes[i].to_json_line() == serial.envelopes[i].to_json_line());
    }
}
