#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "dht/dendrogram.hpp"

using namespace dht;

namespace {

std::vector<EventPoint> points1d(std::initializer_list<double> xs) {
    std::vector<EventPoint> ev;
    std::uint32_t id = 0;
    for (double x : xs) ev.push_back({id++, {x}});
    return ev;
}

std::vector<std::string> code_strings(const Dendrogram& d) {
    std::vector<std::string> out;
    for (const auto& c : d.codes) out.push_back(c.to_string());
    return out;
}

std::vector<EventPoint> random_events(CounterRng& rng, int n, int dim) {
    std::vector<EventPoint> ev(n);
    for (int i = 0; i < n; ++i) {
        ev[i].id = static_cast<std::uint32_t>(i);
        for (int d = 0; d < dim; ++d) ev[i].coords.push_back(rng.next_unit());
    }
    return ev;
}

}  // namespace

TEST_CASE("pairwise_distances basics") {
    SUBCASE("coincident points have zero distance") {
        const auto dm = pairwise_distances({{0, {1.0, 2.0}}, {1, {1.0, 2.0}}},
                                           DistanceMetric::euclidean);
        CHECK(dm.at(0, 1) == 0.0);
    }
    SUBCASE("1-D absolute difference") {
        const auto dm = pairwise_distances(points1d({0.0, 3.0}), DistanceMetric::euclidean);
        CHECK(dm.at(0, 1) == doctest::Approx(3.0));
        CHECK(dm.at(1, 0) == doctest::Approx(3.0));
        CHECK(dm.at(0, 0) == 0.0);
    }
    SUBCASE("2-D pythagoras") {
        const auto dm = pairwise_distances({{0, {0.0, 0.0}}, {1, {3.0, 4.0}}},
                                           DistanceMetric::euclidean);
        CHECK(dm.at(0, 1) == doctest::Approx(5.0));
    }
    SUBCASE("manhattan") {
        const auto dm = pairwise_distances({{0, {0.0, 0.0}}, {1, {3.0, 4.0}}},
                                           DistanceMetric::manhattan);
        CHECK(dm.at(0, 1) == doctest::Approx(7.0));
    }
    SUBCASE("ingestion errors") {
        CHECK_THROWS_AS(pairwise_distances({{0, {1.0}}, {1, {1.0, 2.0}}},
                                           DistanceMetric::euclidean),
                        IngestionError);
        CHECK_THROWS_AS(pairwise_distances({{0, {1.0}}, {1, {std::nan("")}}},
                                           DistanceMetric::euclidean),
                        IngestionError);
        CHECK_THROWS_AS(pairwise_distances({{0, {1.0}}, {3, {2.0}}},
                                           DistanceMetric::euclidean),
                        IngestionError);
        CHECK_THROWS_AS(pairwise_distances({{0, {1.0}}}, DistanceMetric::euclidean),
                        IngestionError);
    }
}

TEST_CASE("two events merge at their distance") {
    const auto dm = pairwise_distances(points1d({0.0, 3.0}), DistanceMetric::euclidean);
    const auto d = agglomerate(dm, Linkage::single);
    REQUIRE(d.merges.size() == 1);
    CHECK(d.merges[0].height == doctest::Approx(3.0));
    const auto coded = assign_codes(d);
    CHECK(code_strings(coded) == std::vector<std::string>{"0", "1"});
}

TEST_CASE("single linkage on {0, 0.1, 1, 1.1}") {
    const auto dm = pairwise_distances(points1d({0.0, 0.1, 1.0, 1.1}), DistanceMetric::euclidean);
    const auto d = agglomerate(dm, Linkage::single);
    REQUIRE(d.merges.size() == 3);
    // pairs (0,1) and (2,3) first, then the two clusters at distance 0.9
    CHECK(d.merges[0].left == 0);
    CHECK(d.merges[0].right == 1);
    CHECK(d.merges[1].left == 2);
    CHECK(d.merges[1].right == 3);
    CHECK(d.merges[2].height == doctest::Approx(0.9));
    const auto coded = assign_codes(d);
    CHECK(code_strings(coded) == std::vector<std::string>{"00", "01", "10", "11"});
}

TEST_CASE("single linkage on {0, 1, 10} pads the shallow leaf") {
    const auto dm = pairwise_distances(points1d({0.0, 1.0, 10.0}), DistanceMetric::euclidean);
    const auto d = agglomerate(dm, Linkage::single);
    REQUIRE(d.merges.size() == 2);
    CHECK(d.merges[0].height == doctest::Approx(1.0));
    CHECK(d.merges[1].height == doctest::Approx(9.0));
    const auto coded = assign_codes(d);
    CHECK(code_strings(coded) == std::vector<std::string>{"00", "01", "10"});
}

TEST_CASE("equal-distance merges break ties toward smallest cluster ids") {
    // d(0,1) = d(2,3) = 1 exactly
    const auto dm = pairwise_distances(points1d({0.0, 1.0, 10.0, 11.0}),
                                       DistanceMetric::euclidean);
    const auto d = agglomerate(dm, Linkage::single);
    CHECK(d.merges[0].left == 0);
    CHECK(d.merges[0].right == 1);
    CHECK(d.merges[1].left == 2);
    CHECK(d.merges[1].right == 3);
}

TEST_CASE("builds are deterministic") {
    CounterRng rng(3);
    const auto ev = random_events(rng, 32, 3);
    const auto dm = pairwise_distances(ev, DistanceMetric::euclidean);
    for (auto linkage : {Linkage::single, Linkage::complete, Linkage::average, Linkage::ward}) {
        const auto a = assign_codes(agglomerate(dm, linkage));
        const auto b = assign_codes(agglomerate(dm, linkage));
        CHECK(code_strings(a) == code_strings(b));
        for (std::size_t k = 0; k < a.merges.size(); ++k) {
            CHECK(a.merges[k].height == b.merges[k].height);
            CHECK(a.merges[k].left == b.merges[k].left);
            CHECK(a.merges[k].right == b.merges[k].right);
        }
    }
}

TEST_CASE("merge heights are non-decreasing for single/complete/average") {
    CounterRng rng(5);
    const auto ev = random_events(rng, 24, 2);
    const auto dm = pairwise_distances(ev, DistanceMetric::euclidean);
    for (auto linkage : {Linkage::single, Linkage::complete, Linkage::average}) {
        const auto d = agglomerate(dm, linkage);
        for (std::size_t k = 1; k < d.merges.size(); ++k) {
            CHECK(d.merges[k].height >= d.merges[k - 1].height);
        }
    }
}

TEST_CASE("single-linkage height multiset is permutation invariant") {
    CounterRng rng(9);
    auto ev = random_events(rng, 16, 2);
    const auto heights_of = [](const std::vector<EventPoint>& events) {
        const auto d = agglomerate(pairwise_distances(events, DistanceMetric::euclidean),
                                   Linkage::single);
        std::vector<double> h;
        for (const auto& m : d.merges) h.push_back(m.height);
        std::sort(h.begin(), h.end());
        return h;
    };
    const auto base = heights_of(ev);

    // permute ids (coordinates travel with their new ids)
    std::vector<EventPoint> permuted(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
        permuted[i].id = static_cast<std::uint32_t>(i);
        permuted[i].coords = ev[(i + 7) % ev.size()].coords;
    }
    const auto perm = heights_of(permuted);
    REQUIRE(base.size() == perm.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i] == doctest::Approx(perm[i]).epsilon(1e-12));
    }
}

TEST_CASE("codes are distinct, uniform length, and LCA-consistent") {
    CounterRng rng(13);
    const auto ev = random_events(rng, 20, 2);
    const auto d = assign_codes(
        agglomerate(pairwise_distances(ev, DistanceMetric::euclidean), Linkage::average));

    auto strs = code_strings(d);
    for (const auto& s : strs) CHECK(s.size() == strs[0].size());
    std::sort(strs.begin(), strs.end());
    CHECK(std::adjacent_find(strs.begin(), strs.end()) == strs.end());

    // ultrametric distance is p^-depth(LCA): deeper ancestor, closer codes
    for (int a = 0; a < d.n; ++a) {
        for (int b = a + 1; b < d.n; ++b) {
            const int depth = lca_depth(d, a, b);
            Rational expect(1);
            for (int i = 0; i < depth; ++i) expect /= 2;
            CHECK(ultrametric_distance(d.codes[a], d.codes[b]) == expect);
        }
    }
}

TEST_CASE("ward linkage builds a valid tree") {
    CounterRng rng(17);
    const auto ev = random_events(rng, 12, 3);
    const auto d = assign_codes(
        agglomerate(pairwise_distances(ev, DistanceMetric::euclidean), Linkage::ward));
    CHECK(d.merges.size() == 11);
    for (const auto& m : d.merges) CHECK(m.height >= 0.0);
    CHECK(d.codes.size() == 12);
}
