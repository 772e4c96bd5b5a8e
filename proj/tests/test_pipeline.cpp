#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "robinson/gamma.hpp"
#include "robinson/matrix.hpp"
#include "robinson/pipeline.hpp"
#include "robinson/synth.hpp"
#include "test_support.hpp"

using namespace robinson;
using namespace test_support;

TEST_CASE("binary repair of the running example") {
    BinaryApproxResult out = approximate_binary(a3_mask());
    CHECK(out.matrix == mask_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(is_robinson(out.matrix));

    const ApproxReport& rep = out.report;
    CHECK(rep.n == 3);
    CHECK(rep.m_layers == 1);
    CHECK(rep.gamma1 == 2.0 / 27);
    CHECK(rep.l1_dist == doctest::Approx(2.0 / 9).epsilon(1e-15));
    CHECK(rep.upper_bound == doctest::Approx(10.919315765755567).epsilon(1e-13));
    CHECK(rep.lower_bound == doctest::Approx(1.0 / 54).epsilon(1e-15));
    CHECK(rep.upper_bound_holds);
    CHECK(rep.mode_bound_holds);
    CHECK(rep.preprocess_used);
    CHECK(rep.diagonal_restored);

    REQUIRE(rep.per_layer.size() == 1);
    const LayerReport& layer = rep.per_layer[0];
    CHECK(layer.level == 1.0);
    CHECK(layer.weight == 1.0);
    CHECK(layer.eps == 2.0 / 27);
    // threshold = 4^(-2/3) * (2/27)^(2/3) * 9 = 2^(-2/3)
    CHECK(layer.threshold == doctest::Approx(0.6299605249474366).epsilon(1e-14));
    CHECK(layer.toggles == 0);
}

TEST_CASE("binary repair without diagonal restoration is the raw rounding") {
    ApproxOptions opt;
    opt.restore_diagonal = false;
    BinaryApproxResult out = approximate_binary(a3_mask(), opt);
    CHECK(out.matrix == mask_of({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK(out.report.l1_dist == doctest::Approx(4.0 / 9).epsilon(1e-15));
    CHECK_FALSE(out.report.diagonal_restored);
    // The unrestored output keeps its first and last row and column blank.
    for (int k = 1; k <= 3; ++k) {
        CHECK_FALSE(out.matrix.at(1, k));
        CHECK_FALSE(out.matrix.at(k, 3));
    }
}

TEST_CASE("Robinson binary input returns unchanged") {
    BinaryMask eye = mask_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    BinaryApproxResult out = approximate_binary(eye);
    CHECK(out.matrix == eye);
    CHECK(out.report.l1_dist == 0.0);
    CHECK(out.report.gamma1 == 0.0);
    CHECK(out.report.m_layers == 0);

    BinaryMask ones = mask_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    CHECK(approximate_binary(ones).matrix == ones);
}

TEST_CASE("general repair of the mixed-level example") {
    SymmetricMatrix a = matrix_of({{1, 0, 0.5}, {0, 1, 0}, {0.5, 0, 1}});
    GeneralApproxResult out = approximate_general(a);
    CHECK(out.matrix == matrix_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(out.report.gamma1 == 1.0 / 27);
    CHECK(out.report.l1_dist == doctest::Approx(1.0 / 9).epsilon(1e-15));
    CHECK(out.report.m_layers == 2);
    REQUIRE(out.report.per_layer.size() == 2);
    CHECK(out.report.per_layer[0].level == 0.5);
    CHECK(out.report.per_layer[0].weight == 0.5);
    CHECK(out.report.per_layer[0].eps == 2.0 / 27);
    CHECK(out.report.per_layer[1].level == 1.0);
    CHECK(out.report.per_layer[1].bypassed);
    CHECK(out.report.upper_bound_holds);
}

TEST_CASE("general repair leaves gamma1-zero inputs alone") {
    SymmetricMatrix flat = matrix_of({{1, 0.5}, {0.5, 1}});
    CHECK(approximate_general(flat).matrix == flat);
    SymmetricMatrix r = random_robinson(12, 6, 77);
    CHECK(approximate_general(r).matrix == r);
}

TEST_CASE("general repair of a binary matrix matches the binary path") {
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + trial % 12;
        BinaryMask m = random_mask(n, 50000 + trial, 0.3 + 0.2 * (trial % 3));
        GeneralApproxResult g = approximate_general(matrix_from_mask(m));
        BinaryApproxResult b = approximate_binary(m);
        CHECK(g.matrix == matrix_from_mask(b.matrix));
        CHECK(g.report.l1_dist == b.report.l1_dist);
        CHECK(g.report.gamma1 == b.report.gamma1);
    }
}

TEST_CASE("repaired outputs are Robinson with the certified distance") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = 6 + trial % 20;
        SymmetricMatrix noisy = add_noise(random_robinson(n, 5, 51000 + trial), 0.2,
                                          52000 + trial, NoiseModel::uniform);
        GeneralApproxResult out = approximate_general(noisy);
        CHECK(is_robinson(out.matrix, 0.0));
        CHECK(out.report.l1_dist == l1_distance(noisy, out.matrix));
        CHECK(out.report.l1_dist <= out.report.upper_bound);
        CHECK(out.report.upper_bound ==
              doctest::Approx(26 * std::cbrt(out.report.gamma1)).epsilon(1e-13));
        CHECK(out.report.mode_bound_holds);
        CHECK(out.report.upper_bound_holds);
    }
}

TEST_CASE("skipping the inversion pass still certifies its weaker bound") {
    for (int trial = 0; trial < 25; ++trial) {
        int n = 8 + trial % 16;
        SymmetricMatrix noisy = add_noise(random_robinson(n, 4, 53000 + trial), 0.3,
                                          54000 + trial, NoiseModel::uniform);
        GeneralApproxResult out = approximate_no_preprocess(noisy);
        CHECK(is_robinson(out.matrix, 0.0));
        CHECK_FALSE(out.report.preprocess_used);
        CHECK(out.report.mode_bound ==
              doctest::Approx(std::pow(2.0, 4.5) * std::pow(out.report.gamma1, 0.25) + 5.0 / n)
                  .epsilon(1e-13));
        CHECK(out.report.l1_dist <= out.report.mode_bound);
        for (const LayerReport& lay : out.report.per_layer) CHECK(lay.toggles == 0);
    }

    // The running example, asserted as an inequality (vacuous at n = 3).
    GeneralApproxResult a3 = approximate_no_preprocess(a3_matrix());
    CHECK(a3.report.l1_dist <=
          std::pow(2.0, 4.5) * std::pow(2.0 / 27, 0.25) + 5.0 / 3);
}

TEST_CASE("diagonal restoration never hurts") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 10;
        BinaryMask m = random_mask(n, 55000 + trial, 0.4);
        ApproxOptions raw;
        raw.restore_diagonal = false;
        BinaryApproxResult kept = approximate_binary(m);
        BinaryApproxResult bare = approximate_binary(m, raw);
        CHECK(is_robinson(kept.matrix));
        CHECK(is_robinson(bare.matrix));
        CHECK(kept.report.l1_dist <= bare.report.l1_dist + 1e-15);
        // Both modes keep the 26-bound.
        CHECK(kept.report.upper_bound_holds);
        CHECK(bare.report.upper_bound_holds);
    }
}

TEST_CASE("the diagonal fix is optional for the binary bound") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 10;
        BinaryMask m = random_mask(n, 56000 + trial, 0.5);
        ApproxOptions opt;
        opt.force_unit_diagonal = false;
        BinaryApproxResult out = approximate_binary(m, opt);
        CHECK(is_robinson(out.matrix));
        CHECK(out.report.upper_bound_holds);
    }
}

TEST_CASE("option combinations that drop every guarantee are rejected") {
    ApproxOptions opt;
    opt.preprocess = false;
    opt.force_unit_diagonal = false;
    CHECK_THROWS_AS(approximate_binary(a3_mask(), opt), ValidationError);
    CHECK_THROWS_AS(approximate_general(a3_matrix(), opt), ValidationError);
}

TEST_CASE("certify worked example") {
    Certificate c = certify(a3_matrix(), matrix_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(c.gamma1 == 2.0 / 27);
    CHECK(c.l1_dist == doctest::Approx(2.0 / 9).epsilon(1e-15));
    CHECK(c.lower_bound == doctest::Approx(1.0 / 54).epsilon(1e-15));
    CHECK(c.upper_bound == doctest::Approx(10.919315765755567).epsilon(1e-13));
    CHECK(c.upper_bound_holds);
    CHECK(c.lower_bound_holds);

    Certificate self = certify(a3_matrix(), a3_matrix(), 1.0);
    CHECK(self.l1_dist == 0.0);

    Certificate ones = certify(a3_matrix(), matrix_of({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    CHECK(ones.l1_dist == doctest::Approx(4.0 / 9).epsilon(1e-15));
    CHECK(ones.l1_dist >= c.lower_bound);

    CHECK_THROWS_AS(certify(a3_matrix(), a3_matrix()), ValidationError);
}

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(make_graph(3, {{0, 2}}), ValidationError);
    CHECK_THROWS_AS(make_graph(3, {{2, 4}}), ValidationError);
    CHECK_THROWS_AS(make_graph(3, {{1, 2}, {2, 1}}), ValidationError);
    Graph g = make_graph(3, {{3, 1}, {1, 2}});
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0] == std::pair<int, int>{1, 2});
    CHECK(g.edges[1] == std::pair<int, int>{1, 3});
    BinaryMask b = augmented_adjacency(g);
    CHECK(b.at(1, 1));
    CHECK(b.at(1, 2));
    CHECK_FALSE(b.at(2, 3));
}

TEST_CASE("interval-graph fitting worked examples") {
    // A path is already a unit interval graph in its own order.
    GraphApproxResult path = unit_interval_approx(make_graph(3, {{1, 2}, {2, 3}}));
    CHECK(path.edit_distance == 0);
    CHECK(path.graph.edges == make_graph(3, {{1, 2}, {2, 3}}).edges);

    // A single long edge cannot survive: its augmented adjacency is the
    // running example, and the repair removes the edge.
    GraphApproxResult lone = unit_interval_approx(make_graph(3, {{1, 3}}));
    CHECK(lone.edit_distance == 1);
    CHECK(lone.graph.edges.empty());
    CHECK(lone.report.gamma1 == 2.0 / 27);

    // The claw is not a unit interval graph, so some edit is forced.
    GraphApproxResult claw = unit_interval_approx(make_graph(4, {{1, 2}, {2, 3}, {2, 4}}));
    CHECK(claw.edit_distance >= 1);
    CHECK(claw.report.gamma1 == 1.0 / 64);
    double n2 = 16.0;
    CHECK(static_cast<double>(claw.edit_distance) / n2 <=
          26 * std::cbrt(claw.report.gamma1));
}

TEST_CASE("interval-graph fitting keeps the scaled bound on random graphs") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + trial % 12;
        CounterRng rng(57000 + trial);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.next_double() < 0.3) edges.push_back({u, v});
        GraphApproxResult out = unit_interval_approx(make_graph(n, edges));
        BinaryMask fitted = augmented_adjacency(out.graph);
        CHECK(is_robinson(fitted));
        for (int i = 1; i <= n; ++i) CHECK(fitted.at(i, i));
        CHECK(static_cast<double>(out.edit_distance) / (static_cast<double>(n) * n) <=
              26 * std::cbrt(out.report.gamma1) + 1e-12);
    }
}
