#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mwscp/instances.hpp"
#include "mwscp/lp.hpp"
#include "mwscp/oracle.hpp"
#include "mwscp/rng.hpp"
#include "mwscp/simplex.hpp"
#include "test_support.hpp"

using namespace mwscp;
using test::make_instance;

namespace {

void check_feasible(const LpModel& model, const LpSolution& sol, double tol = 1e-9) {
    const int m = model.num_sensors;
    const int n = model.num_pois;
    for (int l = 0; l < n; ++l) {
        double covering = 0.0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (model.cover_set(i, j).contains(l)) covering += sol.x_at(i, j);
        REQUIRE(covering >= sol.z[l] - tol);
        REQUIRE(sol.z[l] >= -tol);
        REQUIRE(sol.z[l] <= 1.0 + tol);
    }
    for (int i = 0; i < m; ++i) {
        double mass = 0.0;
        for (int j = 0; j < n; ++j) {
            mass += sol.x_at(i, j);
            REQUIRE(sol.x_at(i, j) >= -tol);
            REQUIRE(sol.x_at(i, j) <= 1.0 + tol);
        }
        REQUIRE(mass <= 1.0 + tol);
    }
    double obj = 0.0;
    for (int l = 0; l < n; ++l) obj += model.weights[l] * sol.z[l];
    REQUIRE(std::fabs(obj - sol.objective) <= tol);
}

// Far-apart PoIs: each start covers exactly one of them.
ProblemInstance two_far_pois() {
    return make_instance({0, 100}, {1, 1}, {2}, 1.0);
}

}  // namespace

TEST_CASE("build_lp shapes and membership") {
    const auto mini = make_instance({0}, {7}, {1}, 1.0);
    const LpModel m1 = build_lp(mini);
    CHECK(m1.num_sensors == 1);
    CHECK(m1.num_pois == 1);
    CHECK(m1.cover_set(0, 0).contains(0));

    const LpModel m2 = build_lp(two_far_pois());
    CHECK(m2.cover_set(0, 0).lo == 0);
    CHECK(m2.cover_set(0, 0).hi == 0);
    CHECK(m2.cover_set(0, 1).lo == 1);
    CHECK(m2.cover_set(0, 1).hi == 1);

    ThreePartitionSpec spec;
    spec.m = 3;
    spec.bound = 7;
    spec.sizes = {2, 2, 3, 2, 2, 3, 2, 2, 3};
    const LpModel m3 = build_lp(gen_three_partition(spec, 1.0));
    CHECK(m3.num_pois == 48);    // one coverage row per PoI
    CHECK(m3.num_sensors == 9);  // one budget row per sensor

    // membership pairs really mean coverage
    const ProblemInstance rnd = gen_random(8, 3, 5);
    const LpModel mr = build_lp(rnd);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 8; ++j) {
            const IndexRange cov = coverage_set(rnd, i, j);
            REQUIRE(mr.cover_set(i, j).lo == cov.lo);
            REQUIRE(mr.cover_set(i, j).hi == cov.hi);
        }
}

TEST_CASE("solve_lp examples") {
    const LpModel far = build_lp(two_far_pois());
    const LpSolution s = solve_lp(far);
    CHECK(s.objective == doctest::Approx(1.0).epsilon(1e-9));
    check_feasible(far, s);

    const auto zero = make_instance({0, 1}, {0, 0}, {1}, 1.0);
    CHECK(solve_lp(build_lp(zero)).objective == doctest::Approx(0.0));

    const auto span = make_instance({0, 1}, {2, 3}, {2}, 2.0);
    const LpSolution full = solve_lp(build_lp(span));
    CHECK(full.objective == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(full.status == LpStatus::optimal);
}

TEST_CASE("simplex equals vertex enumeration on small models") {
    // hand-rolled little LPs
    {
        simplex::Problem p;
        p.num_vars = 2;
        p.objective = {3, 2};
        p.rows = {{1, 1}, {1, 0}, {0, 1}};
        p.rhs = {1.5, 1, 1};
        const auto r = simplex::maximize(p);
        REQUIRE(r.status == simplex::Status::optimal);
        CHECK(r.objective == doctest::Approx(test::vertex_enum_max(p)).epsilon(1e-6));
        CHECK(r.objective == doctest::Approx(4.0));  // x = 1, y = 0.5
    }
    // random dense LPs, bounded by unit box rows
    SplitMix64 rng(404);
    for (int round = 0; round < 25; ++round) {
        simplex::Problem p;
        p.num_vars = 2 + static_cast<int>(rng.next_below(5));  // up to 6
        const int extra = 1 + static_cast<int>(rng.next_below(4));
        for (int v = 0; v < p.num_vars; ++v) {
            std::vector<double> row(p.num_vars, 0.0);
            row[v] = 1.0;
            p.rows.push_back(row);
            p.rhs.push_back(1.0 + static_cast<double>(rng.next_below(3)));
        }
        for (int e = 0; e < extra; ++e) {
            std::vector<double> row(p.num_vars);
            for (double& c : row) c = static_cast<double>(rng.next_int(-2, 4));
            p.rows.push_back(row);
            p.rhs.push_back(static_cast<double>(rng.next_below(6)));
        }
        p.objective.resize(p.num_vars);
        for (double& c : p.objective) c = static_cast<double>(rng.next_int(-1, 5));
        const auto r = simplex::maximize(p);
        REQUIRE(r.status == simplex::Status::optimal);
        REQUIRE(r.objective ==
                doctest::Approx(test::vertex_enum_max(p)).epsilon(1e-6));
    }
    // an actual coverage relaxation with 4 variables (2 starts + 2 z)
    {
        const ProblemInstance inst = two_far_pois();
        const LpModel model = build_lp(inst);
        simplex::Problem p;
        p.num_vars = 4;
        p.objective = {0, 0, 1, 1};
        p.rows = {{-1, 0, 1, 0}, {0, -1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        p.rhs = {0, 0, 1, 1, 1};
        const auto r = simplex::maximize(p);
        CHECK(r.objective == doctest::Approx(test::vertex_enum_max(p)).epsilon(1e-6));
        CHECK(r.objective == doctest::Approx(solve_lp(model).objective).epsilon(1e-9));
    }
}

TEST_CASE("lp dominates the integral optimum") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        const int m = 1 + static_cast<int>(seed % 3);
        const ProblemInstance inst = gen_random(n, m, seed);
        const double lp = solve_lp(build_lp(inst)).objective;
        const double oracle = brute_force_separated(inst).weight;
        REQUIRE(lp >= oracle - 1e-6);
        check_feasible(build_lp(inst), solve_lp(build_lp(inst)));
    }
}

TEST_CASE("randomized_round") {
    const ProblemInstance inst = two_far_pois();
    LpSolution sol;
    sol.num_sensors = 1;
    sol.num_pois = 2;
    sol.x = {0.5, 0.5};
    sol.z = {0.5, 0.5};
    sol.objective = 1.0;

    // both outcomes have weight 1 and the idle mass is zero
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const RandomChoiceTrace t = randomized_round(inst, sol, seed);
        REQUIRE(t.weight == 1.0);
        REQUIRE(t.choice[0] != kIdle);
    }

    // replay determinism
    const RandomChoiceTrace a = randomized_round(inst, sol, 7);
    const RandomChoiceTrace b = randomized_round(inst, sol, 7);
    CHECK(a.choice == b.choice);
    CHECK(a.weight == b.weight);

    // integral solution: the support is chosen with probability one
    LpSolution integral = sol;
    integral.x = {1.0, 0.0};
    integral.z = {1.0, 0.0};
    for (std::uint64_t seed = 0; seed < 16; ++seed)
        REQUIRE(randomized_round(inst, integral, seed).choice ==
                std::vector<int>{0});

    // probability mass above one is rejected
    LpSolution bad = integral;
    bad.x = {0.9, 0.9};
    CHECK_THROWS_AS(randomized_round(inst, bad, 1), ValidationError);
}

TEST_CASE("conditional_expectation") {
    const ProblemInstance inst = two_far_pois();
    LpSolution sol;
    sol.num_sensors = 1;
    sol.num_pois = 2;
    sol.x = {0.5, 0.5};
    sol.z = {0.5, 0.5};
    sol.objective = 1.0;

    CHECK(conditional_expectation(inst, sol, {}) == doctest::Approx(1.0));
    CHECK(conditional_expectation(inst, sol, {0}) == 1.0);     // fixed to PoI 0
    CHECK(conditional_expectation(inst, sol, {kIdle}) == 0.0);

    // all sensors fixed: expectation equals the realized weight
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const ProblemInstance rnd = gen_random(6, 3, seed);
        const LpSolution lp = solve_lp(build_lp(rnd));
        const RandomChoiceTrace t = randomized_round(rnd, lp, seed);
        CHECK(conditional_expectation(rnd, lp, t.choice) ==
              doctest::Approx(t.weight).epsilon(1e-12));
    }
}

TEST_CASE("derandomize") {
    const ProblemInstance inst = two_far_pois();

    // integral optimum: follows the support
    {
        const LpSolution lp = solve_lp(build_lp(
            make_instance({0, 1}, {2, 3}, {2}, 2.0)));
        const auto span = make_instance({0, 1}, {2, 3}, {2}, 2.0);
        const DerandomizedSolution d = derandomize(span, lp);
        CHECK(d.weight == 5.0);
    }

    // tie between the two starts goes to the smaller index
    LpSolution sol;
    sol.num_sensors = 1;
    sol.num_pois = 2;
    sol.x = {0.5, 0.5};
    sol.z = {0.5, 0.5};
    sol.objective = 1.0;
    const DerandomizedSolution d = derandomize(inst, sol);
    CHECK(d.weight == 1.0);
    CHECK(d.deployment.start == std::vector<int>{0});

    // guarantee and prefix monotonicity on random instances
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 6);
        const int m = 1 + static_cast<int>(seed % 3);
        const ProblemInstance rnd = gen_random(n, m, seed);
        const LpSolution lp = solve_lp(build_lp(rnd));
        const DerandomizedSolution dr = derandomize(rnd, lp);
        REQUIRE(dr.weight >= (1.0 - 1.0 / std::exp(1.0)) * lp.objective - 1e-6);

        REQUIRE(dr.expectation_path.size() == static_cast<std::size_t>(m) + 1);
        std::vector<int> prefix;
        for (std::size_t step = 0; step < dr.expectation_path.size(); ++step) {
            // path values match the reference computation...
            REQUIRE(dr.expectation_path[step] ==
                    doctest::Approx(conditional_expectation(rnd, lp, prefix))
                        .epsilon(1e-9));
            // ...and never decrease
            if (step > 0)
                REQUIRE(dr.expectation_path[step] >=
                        dr.expectation_path[step - 1] - 1e-9);
            if (step < static_cast<std::size_t>(m))
                prefix.push_back(dr.deployment.start[step]);
        }
        REQUIRE(dr.expectation_path.back() ==
                doctest::Approx(dr.weight).epsilon(1e-9));
    }
}

TEST_CASE("sampled mean respects the guarantee") {
    const ProblemInstance inst = gen_random(6, 2, 31);
    const LpSolution lp = solve_lp(build_lp(inst));
    double sd = 0.0;
    const int trials = 400;
    const double mean = mean_randomized_weight(inst, lp, 1234, trials, &sd);
    const double guarantee = (1.0 - 1.0 / std::exp(1.0)) * lp.objective;
    CHECK(mean >= guarantee - 3.0 * sd / std::sqrt(static_cast<double>(trials)));

    // deterministic regardless of scheduling
    CHECK(mean == mean_randomized_weight(inst, lp, 1234, trials));
}
