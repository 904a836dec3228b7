#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tvg/classes.hpp"
#include "tvg/generators.hpp"
#include "tvg/reach.hpp"

using namespace tvg;

TEST_CASE("spec parsing round trips") {
    auto a = GeneratorSpec::parse("periodic-er:n=4,period=2,p=0.5");
    CHECK(a.model == GeneratorSpec::Model::PeriodicEr);
    CHECK(a.n == 4);
    CHECK(a.period == 2);
    CHECK(a.p == doctest::Approx(0.5));
    CHECK(GeneratorSpec::parse(a.to_string()).to_string() == a.to_string());

    auto b = GeneratorSpec::parse("harary-interval(n=6,k=3,T=5)");
    CHECK(b.model == GeneratorSpec::Model::HararyInterval);
    CHECK(b.snapshots == 5);

    auto c = GeneratorSpec::parse("recurrent-core:n=5,k=3,period=4,noise=2");
    CHECK(c.model == GeneratorSpec::Model::RecurrentCore);
    CHECK(c.noise == 2);

    CHECK_THROWS_AS(GeneratorSpec::parse("unknown-model:n=3"), InvalidSpec);
    CHECK_THROWS_AS(generate(GeneratorSpec::parse("harary-interval:n=4,k=4,T=2"), 0),
                    InvalidSpec);
}

TEST_CASE("generation is deterministic in (spec, seed)") {
    auto spec = GeneratorSpec::parse("periodic-er:n=6,period=3,p=0.4");
    CHECK(generate(spec, 17) == generate(spec, 17));
    CHECK(generate(spec, 17) != generate(spec, 18));
    CHECK(random_finite_graph(5, 4, 0.5, 9) == random_finite_graph(5, 4, 0.5, 9));
}

TEST_CASE("harary-interval snapshots are k-connected") {
    auto spec = GeneratorSpec::parse("harary-interval:n=6,k=3,T=5");
    for (uint64_t seed : {7ull, 8ull, 100ull}) {
        auto g = generate(spec, seed);
        REQUIRE(g.is_periodic());
        for (const auto& slot : g.cycle_slots()) CHECK(node_connectivity(6, slot) >= 3);

        ClassQuery q{ClassTag::CK_star_k, {}, {}, 3, {}, false, {}};
        CHECK(is_member(g, q).member);
    }
}

TEST_CASE("recurrent-core yields a k-connected recurrent edge set") {
    auto spec = GeneratorSpec::parse("recurrent-core:n=5,k=3,period=4,noise=0");
    for (uint64_t seed : {0ull, 3ull, 42ull}) {
        auto g = generate(spec, seed);
        CHECK(node_connectivity(5, recurrent_edge_set(g)) >= 3);
        ClassQuery q{ClassTag::E_R_k, {}, {}, 3, {}, false, {}};
        CHECK(is_member(g, q).member);
    }
}

TEST_CASE("recurrent-core noise edges are confined to the prefix") {
    auto spec = GeneratorSpec::parse("recurrent-core:n=5,k=3,period=4,noise=3");
    auto g = generate(spec, 5);
    CHECK(g.prefix_len() > 0);
    CHECK(node_connectivity(5, recurrent_edge_set(g)) >= 3);
}

TEST_CASE("dense periodic-er is complete and maximally connected") {
    auto g = generate(GeneratorSpec::parse("periodic-er:n=4,period=1,p=1.0"), 1);
    CHECK(g.cycle_slots()[0].size() == 6);
    ClassQuery q{ClassTag::CK_star_k, {}, {}, 3, {}, false, {}};
    CHECK(is_member(g, q).member);
}

TEST_CASE("generator class contracts hold over many seeds") {
    ClassQuery ck{ClassTag::CK_star_k, {}, {}, 2, {}, false, {}};
    ClassQuery er{ClassTag::E_R_k, {}, {}, 2, {}, false, {}};
    for (uint64_t seed = 0; seed < 100; ++seed) {
        CAPTURE(seed);
        auto h = generate(GeneratorSpec::parse("harary-interval:n=5,k=2,T=3"), seed);
        CHECK(is_member(h, ck).member);
        auto r = generate(GeneratorSpec::parse("recurrent-core:n=5,k=2,period=3,noise=1"), seed);
        // Noise edges live in the prefix, so only the suffix past the prefix
        // is guaranteed to be in the class.
        auto core = temporal_subgraph(r, TimeInterval::open_from(r.prefix_len()));
        CHECK(is_member(core, er).member);
    }
}
