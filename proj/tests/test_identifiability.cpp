#include <doctest.h>

#include "fixtures.hpp"
#include "scgid/identifiability.hpp"

using namespace scgid;

namespace {

SIdReport check(const ParsedScg& s, const char* a, const char* b) {
    return s_identifiable(s.scg, *s.names.find(a), *s.names.find(b));
}

SeriesId id(const ParsedScg& s, const char* a) { return *s.names.find(a); }

}  // namespace

TEST_CASE("verdicts on the four-series example") {
    auto f6 = fixtures::scg("fig6.scg");
    auto ab = check(f6, "A", "B");
    CHECK(ab.verdict == Verdict::NotSId);
    CHECK(ab.reason == Reason::TheoremBlocked);
    auto cd = check(f6, "C", "D");
    CHECK(cd.verdict == Verdict::SId);
    CHECK(cd.reason == Reason::UnshieldedCollider);
    CHECK(check(f6, "B", "C").reason == Reason::DirectedEdge);
    CHECK(check(f6, "A", "D").reason == Reason::NoAdjacency);
}

TEST_CASE("verdicts on the fixture SCGs") {
    CHECK(check(fixtures::scg("fig2_scg1.scg"), "X", "Y").reason == Reason::NoDoubleSelfLoop);
    CHECK(check(fixtures::scg("fig2_scg2.scg"), "X", "Y").reason == Reason::NoDoubleSelfLoop);
    CHECK(check(fixtures::scg("fig3.scg", SeriesNames({"X", "Y", "Z"})), "X", "Y").reason == Reason::NoDoubleSelfLoop);
    for (auto f : {"fig4_g1.scg", "fig4_g2.scg", "fig4_g3.scg"}) {
        CAPTURE(f);
        auto r = check(fixtures::scg(f), "X", "Y");
        CHECK(r.verdict == Verdict::NotSId);
        CHECK(r.reason == Reason::TheoremBlocked);
    }
    CHECK(s_identifiable(Scg(2), SeriesId{0}, SeriesId{1}).reason == Reason::NoAdjacency);
    CHECK_THROWS_AS(s_identifiable(Scg(2), SeriesId{0}, SeriesId{0}), std::invalid_argument);
}

TEST_CASE("reason priority and verdict invariants") {
    for (std::uint64_t m = 0; m < 512; ++m) {
        auto s = Scg::from_mask(3, m);
        for (const auto& r : s_identifiable_all(s)) {
            REQUIRE((r.verdict == Verdict::NotSId) == (r.reason == Reason::TheoremBlocked));
            auto swapped = s_identifiable(s, r.pair.y, r.pair.x);
            REQUIRE(swapped.verdict == r.verdict);
            REQUIRE(swapped.reason == r.reason);
        }
    }
}

TEST_CASE("adding a lone parent of y rescues a blocked pair") {
    for (std::uint64_t m = 0; m < 512; ++m) {
        auto s = Scg::from_mask(3, m);
        for (const auto& r : s_identifiable_all(s)) {
            if (r.verdict != Verdict::NotSId) continue;
            Scg bigger(4);
            for (std::size_t u = 0; u < 3; ++u)
                for (std::size_t v = 0; v < 3; ++v) bigger.set_edge(u, v, s.edge(u, v));
            bigger.set_edge(SeriesId{3}, r.pair.y);
            auto after = s_identifiable(bigger, r.pair.x, r.pair.y);
            CHECK(after.verdict == Verdict::SId);
            CHECK(after.reason == Reason::UnshieldedCollider);
        }
    }
}

TEST_CASE("effect criteria") {
    auto f6 = fixtures::scg("fig6.scg");
    auto c = total_effect_identifiable(f6.scg, id(f6, "C"));
    CHECK(c.holds);
    CHECK(c.blocking.empty());
    auto a = total_effect_identifiable(f6.scg, id(f6, "A"));
    CHECK_FALSE(a.holds);
    REQUIRE(a.blocking.size() == 1);
    CHECK(a.blocking[0] == MacroPair{id(f6, "A"), id(f6, "B")});
    CHECK(cde_identifiable(f6.scg, id(f6, "D")).holds);

    auto g1 = fixtures::scg("fig4_g1.scg");
    auto y = cde_identifiable(g1.scg, id(g1, "Y"));
    CHECK_FALSE(y.holds);
    CHECK(y.blocking == std::vector<MacroPair>{MacroPair{id(g1, "X"), id(g1, "Y")}});

    Scg lonely(3);
    CHECK(total_effect_identifiable(lonely, SeriesId{1}).holds);
    CHECK(cde_identifiable(lonely, SeriesId{1}).holds);
    CHECK_THROWS_AS(cde_identifiable(lonely, SeriesId{3}), std::out_of_range);
}
