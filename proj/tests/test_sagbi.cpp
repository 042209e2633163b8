#include "support.hpp"

#include "sgd/sagbi.hpp"
#include "sgd/toric.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace sgd;
using namespace sgd::test;

namespace {

OrderClass class_of(std::span<const Polynomial> F, const WeightVector& w) {
    return {leading_tuple(F, TermOrder(w)), w};
}

Polynomial product(std::span<const Polynomial> F, const std::vector<int>& v) {
    Polynomial p = Polynomial::constant(F.front().ring(), 1);
    for (std::size_t i = 0; i < F.size(); ++i) p = p * F[i].pow(v[i]);
    return p;
}

// Exponent vectors v with sum v_i deg_i = t.
std::vector<std::vector<int>> graded_vectors(const std::vector<long>& deg, long t) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(deg.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == deg.size()) {
            if (left == 0) out.push_back(v);
            return;
        }
        for (int k = 0; k * deg[i] <= left; ++k) {
            v[i] = k;
            rec(i + 1, left - k * deg[i]);
        }
        v[i] = 0;
    };
    rec(0, t);
    return out;
}

long graded_degree(const Polynomial& f, const std::vector<long>& grading) {
    const auto& e = f.terms().begin()->first;
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += grading[i] * e[i];
    return d;
}

// dim of span{prod f_i^{v_i} : deg = t}, by dense elimination.
long algebra_dim(std::span<const Polynomial> F, const std::vector<long>& grading, long t) {
    std::vector<long> deg;
    for (const auto& f : F) deg.push_back(graded_degree(f, grading));
    std::vector<Polynomial> prods;
    std::map<ExponentVector, std::size_t> index;
    for (const auto& v : graded_vectors(deg, t)) {
        prods.push_back(product(F, v));
        for (const auto& [e, c] : prods.back().terms()) index.emplace(e, index.size());
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : prods) {
        std::vector<Rational> row(index.size());
        for (const auto& [e, c] : p.terms()) row[index[e]] = c;
        rows.push_back(row);
    }
    return rational_rank(rows);
}

// Number of distinct monomials prod in_i^{v_i} of degree t.
long initial_dim(const std::vector<long>& deg, const LeadingTuple& t, long d) {
    std::set<ExponentVector> seen;
    for (const auto& v : graded_vectors(deg, d)) {
        ExponentVector e(t.front().size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (int k = 0; k < v[i]; ++k) e += t[i];
        }
        seen.insert(e);
    }
    return static_cast<long>(seen.size());
}

// Replays the steps: checks reconstruction and strict lead decrease.
void check_subduction(const Polynomial& f, std::span<const Polynomial> F, const TermOrder& ord) {
    auto res = subduction(f, F, ord);
    Polynomial cur = f;
    for (const auto& st : res.steps) {
        REQUIRE_FALSE(cur.is_zero());
        const auto before = initial_term(cur, ord).exponent;
        cur -= st.coefficient * product(F, st.exponents);
        if (!cur.is_zero()) CHECK(ord.greater(before, initial_term(cur, ord).exponent));
    }
    CHECK(cur == res.remainder);
    if (!res.remainder.is_zero()) {
        std::vector<ExponentVector> cols;
        for (const auto& g : F) cols.push_back(initial_term(g, ord).exponent);
        CHECK_FALSE(solve_monomial_membership(ExponentMatrix(cols), initial_term(res.remainder, ord).exponent));
    }
}

const std::vector<std::string> homogeneous_inputs{"quadric_curve", "elementary_symmetric", "plucker_gr24",
                                                  "sagbi_y_dominant", "no_finite_sagbi", "twisted_cubic"};

} // namespace

TEST_CASE("subduction") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    TermOrder green(WeightVector{2, 1});

    auto r = subduction(P(R, "x^3*y^3 + x*y^5"), F, green);
    CHECK(r.remainder.is_zero());
    REQUIRE(r.steps.size() == 1);
    CHECK(r.steps[0].exponents == std::vector<int>{1, 1, 1});
    CHECK(r.steps[0].coefficient == 1);

    r = subduction(F[0], F, green);
    CHECK(r.remainder.is_zero());
    CHECK(r.steps.size() == 1);

    auto X = make_ring({"x"});
    auto G = polys(X, {"x^2"});
    r = subduction(P(X, "x"), G, TermOrder(WeightVector{1}));
    CHECK(r.remainder == P(X, "x"));
    CHECK(r.steps.empty());

    CHECK(subduction(Polynomial(R), F, green).remainder.is_zero());
}

TEST_CASE("subduction step cap") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x + y", "x*y", "x*y^2"});
    TermOrder ord(WeightVector{1, 1});
    auto f = F[0].pow(3) + F[1] * F[0];
    CHECK_THROWS_AS(subduction(f, F, ord, 1), SubductionLimitExceeded);
    CHECK_NOTHROW(subduction(f, F, ord));
}

TEST_CASE("isSagbiSubduction: Example 3.3") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    CHECK(is_sagbi_subduction(F, class_of(F, WeightVector{2, 1})));
    CHECK_FALSE(is_sagbi_subduction(F, class_of(F, WeightVector{1, 2})));

    auto G = load_system("sagbi_y_dominant").polys;
    CHECK(is_sagbi_subduction(G, class_of(G, WeightVector{1, 2})));

    // a weight that does not select the tuple is rejected
    OrderClass wrong{{{2, 0}, {1, 1}, {0, 2}}, WeightVector{1, 2}};
    CHECK_THROWS_AS(is_sagbi_subduction(F, wrong), std::invalid_argument);
}

TEST_CASE("isSagbiHilbert: elementary symmetric polynomials") {
    auto F = load_system("elementary_symmetric").polys;
    auto classes = extract_weight_vectors(F);
    REQUIRE(classes.size() == 6);
    for (const auto& c : classes) {
        auto h = sagbi_hilbert_check(F, c);
        CHECK(h.agrees);
        CHECK(h.tested_up_to == default_hilbert_cap);
        CHECK(h.truncated);
    }
}

TEST_CASE("isSagbiHilbert: the red cone fails in degree 2") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    auto red = class_of(F, WeightVector{1, 2});
    auto h = sagbi_hilbert_check(F, red);
    CHECK_FALSE(h.agrees);
    REQUIRE(h.failure_degree);
    CHECK(*h.failure_degree == 2);
    CHECK_FALSE(is_sagbi_hilbert(F, red));

    // independent count: K[F]_2 = span of the three generators, in(F) = {y^2, xy}
    std::vector<long> tot{1, 1};
    CHECK(algebra_dim(F, tot, 2) == 3);
    CHECK(initial_dim({2, 2, 2}, red.tuple, 2) == 2);
    CHECK(h.algebra_values.at(1) == 3);
    CHECK(h.initial_values.at(1) == 2);
    // and it is not detected at 3: nothing lives in odd degree
    CHECK(algebra_dim(F, tot, 3) == 0);

    CHECK(is_sagbi_hilbert(F, class_of(F, WeightVector{2, 1})));
}

TEST_CASE("isSagbiHilbert: a single monomial") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x*y"});
    auto cls = extract_weight_vectors(F);
    REQUIRE(cls.size() == 1);
    auto h = sagbi_hilbert_check(F, cls[0]);
    CHECK(h.agrees);
    CHECK_FALSE(h.truncated); // bound 1 * 2^3 = 8 is below the cap
    CHECK(h.tested_up_to == 8);
}

TEST_CASE("Hilbert functions match a dense rank computation") {
    for (const auto& name : homogeneous_inputs) {
        CAPTURE(name);
        auto F = load_system(name).polys;
        auto grading = detect_grading(F);
        std::vector<long> deg;
        for (const auto& f : F) deg.push_back(graded_degree(f, grading));
        for (const auto& c : extract_weight_vectors(F)) {
            auto h = sagbi_hilbert_check(F, c, 5);
            for (long t = 1; t <= h.tested_up_to; ++t) {
                CHECK(h.initial_values[t - 1] == initial_dim(deg, c.tuple, t));
            }
            for (std::size_t t = 1; t <= h.algebra_values.size(); ++t) {
                CHECK(h.algebra_values[t - 1] == algebra_dim(F, grading, static_cast<long>(t)));
            }
            if (h.failure_degree) {
                const long t = *h.failure_degree;
                CHECK(initial_dim(deg, c.tuple, t) != algebra_dim(F, grading, t));
            }
        }
    }
}

TEST_CASE("gradings") {
    auto R = make_ring({"x", "y"});
    CHECK(detect_grading(polys(R, {"x^2 + y^2", "x*y"})) == std::vector<long>{1, 1});
    CHECK_THROWS_AS(detect_grading(polys(R, {"x + 1"})), NonHomogeneousInput);
    CHECK_THROWS_AS(detect_grading(polys(R, {"x", "1"})), NonHomogeneousInput);

    // every principal minor is homogeneous, so t * minor is too
    auto H = homogenize_with_t(load_system("principal_minors_sym3").polys);
    CHECK(detect_grading(H) == std::vector<long>(7, 1));

    // z10 + det(...) mixes degrees 1 and 3: only the t-degree grades t * Q
    auto TQ = homogenize_with_t(load_system("truncation_v13").polys);
    auto g = detect_grading(TQ);
    REQUIRE(g.size() == 11);
    CHECK(g[0] == 1);
    CHECK(std::all_of(g.begin() + 1, g.end(), [](long v) { return v == 0; }));

    auto X = make_ring({"x"});
    CHECK(detect_grading(homogenize_with_t(polys(X, {"1", "x^2 + x"}))) == std::vector<long>{1, 0});
}

TEST_CASE("Hilbert degree bound and warning") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    CHECK(hilbert_degree_bound(F) == 72); // 3^2 * 2^3
    auto warn = hilbert_bound_warning(F, 12);
    REQUIRE(warn);
    CHECK(warn->find("12") != std::string::npos);
    CHECK_FALSE(hilbert_bound_warning(F, 72));
    CHECK_FALSE(hilbert_bound_warning(polys(R, {"x*y"}), 12));
}

TEST_CASE("hilbertVector") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2", "y^2"});
    auto cls = extract_weight_vectors(F);
    REQUIRE(cls.size() == 1);
    auto hv = hilbert_vector(F, cls[0], 4);
    CHECK(hv.values == std::vector<long>{0, 2, 0, 3});

    // monomial input: independent of the class
    auto M = polys(R, {"x^2", "x*y", "y^3"});
    auto h1 = hilbert_vector(M, class_of(M, WeightVector{1, 0}), 6);
    auto h2 = hilbert_vector(M, class_of(M, WeightVector{0, 1}), 6);
    CHECK(h1 == h2);

    // Example 3.3: green and red first differ where the red class fails
    auto E = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    auto green = hilbert_vector(E, class_of(E, WeightVector{2, 1}), 6);
    auto red = hilbert_vector(E, class_of(E, WeightVector{1, 2}), 6);
    auto diff = std::mismatch(green.values.begin(), green.values.end(), red.values.begin());
    REQUIRE(diff.first != green.values.end());
    CHECK(diff.first - green.values.begin() + 1 == *sagbi_hilbert_check(E, class_of(E, WeightVector{1, 2})).failure_degree);
    CHECK(*diff.first > *diff.second);
}

TEST_CASE("weightVectorsRealizingSAGBI") {
    auto G = load_system("sagbi_y_dominant").polys;
    auto found = weight_vectors_realizing_sagbi(G);
    REQUIRE(found.size() == 1);
    CHECK(found[0].weight[1] > found[0].weight[0]);
    CHECK(found[0].tuple == leading_tuple(G, TermOrder(WeightVector{1, 2})));

    CHECK(weight_vectors_realizing_sagbi(load_system("no_finite_sagbi").polys).empty());

    auto Q = load_system("quadric_curve").polys;
    auto q = weight_vectors_realizing_sagbi(Q);
    REQUIRE(q.size() == 1);
    CHECK(q[0].weight[0] > q[0].weight[1]);

    SagbiOptions hilbert{SagbiMethod::hilbert};
    CHECK(weight_vectors_realizing_sagbi(G, hilbert) == found);
    CHECK(weight_vectors_realizing_sagbi(Q, hilbert) == q);
}

TEST_CASE("isUniversalSAGBI") {
    CHECK(is_universal_sagbi(load_system("elementary_symmetric").polys));
    CHECK(is_universal_sagbi(load_system("plucker_gr24").polys));
    auto bad = load_system("no_finite_sagbi").polys;
    CHECK_FALSE(is_universal_sagbi(bad));
    CHECK(universal_sagbi_counterexample(bad) == extract_weight_vectors(bad).front());
}

TEST_CASE("rankOrders: principal minors") {
    auto H = homogenize_with_t(load_system("principal_minors_sym3").polys);
    auto groups = rank_orders(H, RankCriterion::nicer);
    std::vector<std::pair<long, long>> sig;
    std::vector<std::size_t> sizes;
    for (const auto& g : groups) {
        sig.emplace_back(g.dimension, g.degree.get_si());
        sizes.push_back(g.classes.size());
    }
    CHECK(sig == std::vector<std::pair<long, long>>{{6, 3}, {6, 2}, {5, 3}, {4, 4}, {3, 6}});
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 3, 1});
}

TEST_CASE("rankOrders: a SAGBI class is preferable to every other") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x^2 + y^2", "x*y", "y^2"});
    auto groups = rank_orders(F, RankCriterion::preferable);
    REQUIRE(groups.size() == 2);
    REQUIRE(groups[0].classes.size() == 1);
    CHECK(is_sagbi_subduction(F, groups[0].classes[0]));
    CHECK(groups[0].hilbert > groups[1].hilbert);

    auto Q = load_system("sagbi_y_dominant").polys;
    auto sg = weight_vectors_realizing_sagbi(Q);
    auto qg = rank_orders(Q, RankCriterion::preferable);
    CHECK(std::find(qg[0].classes.begin(), qg[0].classes.end(), sg.front()) != qg[0].classes.end());

    auto single = polys(R, {"x*y"});
    auto sgroups = rank_orders(single, RankCriterion::nicer);
    REQUIRE(sgroups.size() == 1);
    CHECK(sgroups[0].classes.size() == 1);
    CHECK(rank_orders(single, RankCriterion::preferable).size() == 1);
}

TEST_CASE("rankings depend only on leading tuples") {
    Random rng(61);
    for (const char* name : {"principal_minors_sym3", "elementary_symmetric", "quadric_curve"}) {
        CAPTURE(name);
        auto sys = load_system(name);
        auto F = std::string(name) == "principal_minors_sym3" ? homogenize_with_t(sys.polys) : sys.polys;
        auto classes = extract_weight_vectors(F);
        auto recert = classes;
        for (auto& c : recert) {
            std::vector<long> obj(F.front().num_vars());
            for (auto& o : obj) o = rng.uniform_long(1, 7);
            c.weight = *cone_feasibility(F, c.tuple, obj);
        }
        for (auto crit : {RankCriterion::nicer, RankCriterion::preferable}) {
            auto a = rank_classes(F, classes, crit, 6);
            auto b = rank_classes(F, recert, crit, 6);
            REQUIRE(a.size() == b.size());
            for (std::size_t g = 0; g < a.size(); ++g) {
                REQUIRE(a[g].classes.size() == b[g].classes.size());
                for (std::size_t k = 0; k < a[g].classes.size(); ++k) {
                    CHECK(a[g].classes[k].tuple == b[g].classes[k].tuple);
                }
                CHECK(a[g].dimension == b[g].dimension);
                CHECK(a[g].degree == b[g].degree);
                CHECK(a[g].hilbert == b[g].hilbert);
            }
        }
    }
}

TEST_CASE("preferable ranking needs a grading") {
    auto R = make_ring({"x", "y"});
    auto F = polys(R, {"x + 1", "y"});
    CHECK_THROWS_AS(rank_orders(F, RankCriterion::preferable), NonHomogeneousInput);
    CHECK_NOTHROW(rank_orders(F, RankCriterion::nicer));
}

TEST_CASE("property: subduction reconstructs its input") {
    Random rng(62);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = rng.uniform(1, 3);
        auto R = ring_of(n);
        std::vector<long> w(n);
        for (auto& x : w) x = rng.uniform_long(1, 4);
        TermOrder ord{WeightVector(w)};
        auto F = rng.system(R, rng.uniform(1, 3), 3, 2);
        // half the inputs are built from F so that subduction has work to do
        Polynomial f = rng.polynomial(R, 3, 3);
        if (iter % 2 == 0) {
            std::vector<int> v(F.size());
            for (auto& x : v) x = rng.uniform(0, 2);
            f = product(F, v) + f;
        }
        check_subduction(f, F, ord);
    }
}

TEST_CASE("criteria agree on homogeneous inputs") {
    for (const auto& name : homogeneous_inputs) {
        CAPTURE(name);
        auto F = load_system(name).polys;
        for (const auto& c : extract_weight_vectors(F)) {
            CHECK(is_sagbi_subduction(F, c) == is_sagbi_hilbert(F, c));
        }
    }
}

TEST_CASE("SAGBI detection: subset of the classes, independent of jobs") {
    for (const char* name : {"elementary_symmetric", "plucker_gr24", "quadric_curve"}) {
        auto F = load_system(name).polys;
        auto all = extract_weight_vectors(F);
        SagbiOptions one, four;
        four.jobs = 4;
        auto a = weight_vectors_realizing_sagbi(F, one);
        CHECK(a == weight_vectors_realizing_sagbi(F, four));
        for (const auto& c : a) CHECK(std::find(all.begin(), all.end(), c) != all.end());
    }
}
