#include "corpus.hpp"
#include "oracles.hpp"

#include "incompat/dft.hpp"
#include "incompat/error.hpp"
#include "incompat/support.hpp"

#include <doctest.h>

#include <numbers>

using namespace incompat;

namespace {

constexpr double pi = std::numbers::pi;

ComplexVector basis(std::size_t d, std::size_t j) {
    ComplexVector v = ComplexVector::Zero(d);
    v(j) = 1.0;
    return v;
}

}  // namespace

TEST_CASE("support counts of basis states") {
    CHECK(support_counts(basis(6, 0), identity(6)) == SupportCounts{1, 1, 2});
    for (std::size_t d = 1; d <= 9; ++d)
        CHECK(support_counts(basis(d, 0), dft_matrix(d)) == SupportCounts{1, d, d + 1});
}

TEST_CASE("support counts of a comb") {
    ComplexVector comb = ComplexVector::Zero(6);
    comb(0) = 1.0;
    comb(3) = 1.0;
    // Oracle: plain DFT sum of the comb.
    CHECK(oracle::support_size(oracle::naive_dft(comb)) == 3);
    CHECK(support_counts(comb, dft_matrix(6)) == SupportCounts{2, 3, 5});
}

TEST_CASE("support counts errors") {
    try {
        support_counts(ComplexVector::Zero(3), identity(3));
        FAIL("expected invalid_state");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_state);
    }
    CHECK_THROWS_AS(support_counts(basis(2, 0), identity(3)), Error);
}

TEST_CASE("minimal support uncertainty examples") {
    const SupportWitness i6 = min_support_uncertainty(identity(6));
    CHECK(i6.n_ab == 2);
    CHECK(i6.subset_a == std::vector<std::size_t>{0});
    CHECK(i6.subset_b == std::vector<std::size_t>{0});
    CHECK(std::abs(i6.state_in_a(0)) == doctest::Approx(1.0));

    CHECK(min_support_uncertainty(dft_matrix(5)).n_ab == 6);
    CHECK(oracle::brute_min_support(dft_matrix(6).values()) == 5);
    CHECK(min_support_uncertainty(dft_matrix(6)).n_ab == 5);

    const SupportWitness one = min_support_uncertainty(identity(1));
    CHECK(one.n_ab == 2);
}

TEST_CASE("support minimum equals chi") {
    const Theorem2Check i6 = verify_theorem2(identity(6));
    CHECK(i6.chi == 2);
    CHECK(i6.n_min == 2);
    CHECK(i6.pass);

    const Theorem2Check b = verify_theorem2(bronzan_rotation(0.0, pi / 7));
    CHECK(b.chi == 2);
    CHECK(b.n_min == 2);
    CHECK(b.pass);

    for (const auto& e : corpus::random(4, 20, 77)) {
        INFO(e.name);
        CHECK(verify_theorem2(e.u).pass);
    }
}

TEST_CASE("support search agrees with the stacked-span oracle") {
    std::vector<corpus::Entry> entries = corpus::structured(5);
    for (std::size_t d = 2; d <= 4; ++d)
        for (auto& e : corpus::random(d, 5)) entries.push_back(std::move(e));
    for (const auto& e : entries) {
        INFO(e.name);
        const std::size_t d = e.u.dim();
        const SupportWitness w = min_support_uncertainty(e.u);
        const std::size_t s = w.subset_a.size() + w.subset_b.size();
        CHECK(w.consistent());
        CHECK(s >= 2);
        CHECK(s <= d + 1);
        CHECK(s == oracle::brute_min_support(e.u.values()));
        // The spans of the witness subsets really intersect.
        CHECK(oracle::spans_intersect(e.u.values(), w.subset_a, w.subset_b));
        CHECK(support_counts(w.state_in_a, e.u) == SupportCounts{w.n_a, w.n_b, w.n_ab});
        CHECK(verify_theorem2(e.u).pass);
    }
}

TEST_CASE("dft witnesses obey the product bound") {
    for (std::size_t d = 2; d <= 8; ++d) {
        const SupportWitness w = min_support_uncertainty(dft_matrix(d));
        INFO("d = ", d);
        CHECK(w.consistent());
        CHECK(w.n_a * w.n_b >= d);
        CHECK(int(w.n_ab) == dft_chi(d));
    }
}

TEST_CASE("cost guard") {
    try {
        min_support_uncertainty(identity(11));
        FAIL("expected too_large");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_large);
    }
    SupportOptions opts;
    opts.max_dim = 12;
    CHECK(min_support_uncertainty(identity(11), opts).n_ab == 2);
    opts.max_dim = 3;
    CHECK_THROWS_AS(min_support_uncertainty(identity(4), opts), Error);
}

TEST_CASE("support search is deterministic across thread counts") {
    SupportOptions par;
    par.threads = 4;
    for (const auto& e : corpus::structured(6)) {
        INFO(e.name);
        const SupportWitness a = min_support_uncertainty(e.u);
        const SupportWitness b = min_support_uncertainty(e.u, par);
        CHECK(a.subset_a == b.subset_a);
        CHECK(a.subset_b == b.subset_b);
        CHECK(a.stats.decisions == b.stats.decisions);
        CHECK((a.state_in_a - b.state_in_a).norm() == 0.0);
    }
}
