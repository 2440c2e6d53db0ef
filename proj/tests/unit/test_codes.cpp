#include <doctest.h>

#include <random>

#include "mrd/codes.hpp"
#include "mrd/geometry.hpp"
#include "oracles.hpp"

using namespace mrd;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// Histogram by root counting, independent of the library's rank.
std::map<int, std::uint64_t> naive_histogram(const RankCode& code) {
    std::map<int, std::uint64_t> h;
    const FieldCtx& F = code.field();
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            const Word d = sub(F, code[i], code[j]);
            ++h[oracle::rank_by_roots(F, d)];
        }
    return h;
}

RankCode code_of(FieldPtr F, int d, const std::vector<Word>& words) {
    return RankCode(F, d, {}, words, std::vector<ComponentTag>(words.size()));
}

}  // namespace

TEST_CASE("pi_a and J_b") {
    const auto F = make_field(3, 1, 3);
    const auto p1 = build_pi(*F, FieldCtx::one()), p2 = build_pi(*F, F->from_int(2));
    CHECK(p1.size() == 338);
    CHECK(p2.size() == 338);
    CHECK(intersection_size(p1, p2) == 0);
    for (std::size_t i = 0; i < p1.size(); ++i) REQUIRE(rank(*F, p1[i]) == 1);

    // independent of the chosen alpha
    for (Elt alpha : F->norm_fiber(F->from_int(2))) {
        REQUIRE(build_pi_alpha(*F, alpha) == p2);
        REQUIRE(build_J_alpha(*F, alpha) == build_J(*F, F->from_int(2)));
    }

    const auto J1 = build_J(*F, FieldCtx::one());
    CHECK(J1.size() == 338);
    for (std::size_t i = 0; i < J1.size(); ++i) {
        REQUIRE(J1[i][1].is_zero());
        const int r = rank(*F, J1[i]);
        REQUIRE((r == 2 || r == 3));
    }
    CHECK_THROWS_AS(build_pi(*F, FieldCtx::zero()), FieldError);
    CHECK_THROWS_AS(build_J(*F, FieldCtx::zero()), FieldError);
}

TEST_CASE("axes") {
    const auto F = make_field(3, 1, 3);
    const auto A1 = build_axis(*F, 1), A2 = build_axis(*F, 2);
    CHECK(A1.size() == 26);
    CHECK(A2.size() == 26);
    CHECK(intersection_size(A1, A2) == 0);
    for (std::size_t i = 0; i < A1.size(); ++i) {
        CHECK(rank(*F, A1[i]) == 3);
        CHECK(rank(*F, A2[i]) == 3);
    }
    CHECK_THROWS_AS(build_axis(*F, 3), FieldError);
}

TEST_CASE("family sizes and components") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    CHECK(code.size() == 729);
    CHECK(code.overlaps() == 0);
    CHECK(code.claimed_distance() == 2);
    const auto sizes = code.component_sizes();
    CHECK(sizes.at({Component::Pi, F->from_int(2)}) == 338);
    CHECK(sizes.at({Component::J, FieldCtx::one()}) == 338);
    CHECK(sizes.at({Component::A1, {}}) == 26);
    CHECK(sizes.at({Component::A2, {}}) == 26);
    CHECK(sizes.at({Component::Zero, {}}) == 1);
    CHECK(code.contains(Word::zero(3)));

    const auto F4 = make_field(2, 2, 3);
    const Elt w = F4->subfield_gen();
    const auto c4 = build_family(F4, {w, F4->mul(w, w)});
    CHECK(c4.size() == 4096);
    CHECK(c4.overlaps() == 0);
    const auto c4b = build_family(F4, {w});
    CHECK(c4b.size() == 4096);
}

TEST_CASE("family preconditions") {
    const auto F = make_field(3, 1, 3);
    CHECK_THROWS_AS(build_family(F, {FieldCtx::one()}), FieldError);
    CHECK_THROWS_AS(build_family(F, {FieldCtx::zero()}), FieldError);
    CHECK_THROWS_AS(build_family(F, {F->gen()}), FieldError);
    CHECK_THROWS_AS(build_family(make_field(2, 1, 3), {}), FieldError);
    CHECK_THROWS_AS(build_family(make_field(3, 1, 2), {}), FieldError);
    const auto empty = build_family(F, {});
    CHECK(empty.size() == 729);
    CHECK(empty.warnings().size() == 1);
}

TEST_CASE("minimum distance of the family at q=3, m=3") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    const auto brute = min_distance(code, DistanceMode::Bruteforce, 1);
    const auto orbit = min_distance(code, DistanceMode::Orbit, 1);
    CHECK(brute.distance == 2);
    CHECK(orbit.distance == 2);
    CHECK(rank_distance(*F, code[orbit.first], code[orbit.second]) == 2);
    CHECK(min_distance(code, DistanceMode::Bruteforce, 3).distance == 2);

    const auto rep = verify_mrd(code);
    CHECK(rep.mrd);
    CHECK(rep.size == 729);
    CHECK(rep.singleton_bound == 729);
    CHECK(rep.min_distance == 2);
}

TEST_CASE("orbit mode agrees with brute force at q=4, m=3") {
    const auto F = make_field(2, 2, 3);
    const auto code = build_family(F, {F->subfield_gen()});
    CHECK(min_distance(code, DistanceMode::Orbit, 1).distance ==
          min_distance(code, DistanceMode::Bruteforce, 0).distance);
    CHECK(singer_orbits(code).size() == F->q() + 2);
}

TEST_CASE("distance distribution of the family at q=3, m=3") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    const auto h = distance_distribution(code);
    CHECK(h == naive_histogram(code));
    CHECK(h == distance_distribution(code, DistanceMode::Orbit));
    CHECK(h.size() == 2);
    CHECK(h.at(2) + h.at(3) == 265356);
    CHECK(h.at(2) == 123201);
    CHECK(h.at(3) == 142155);
}

TEST_CASE("distance histogram is invariant under an automorphism") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    std::mt19937_64 rng(21);
    auto invertible = [&] {
        const auto sample = deterministic_sample(*F, 64, rng());
        for (const auto& w : sample)
            if (rank(*F, w) == 3) return dickson(*F, w);
        throw std::runtime_error("no invertible sample");
    };
    const AutElt g{invertible(), invertible(), true, 1};
    std::vector<Word> image;
    for (std::size_t i = 0; i < code.size(); ++i) image.push_back(apply_aut(*F, g, code[i]));
    const auto moved = code_of(F, 2, image);
    CHECK(moved.size() == code.size());
    CHECK(distance_distribution(moved) == distance_distribution(code));
}

TEST_CASE("small codes") {
    const auto F = make_field(3, 1, 3);
    Word w = Word::zero(3);
    w[2] = FieldCtx::one();
    const auto pair = code_of(F, 3, {Word::zero(3), w});
    CHECK(min_distance(pair, DistanceMode::Bruteforce).distance == 3);
    CHECK(distance_distribution(pair) == std::map<int, std::uint64_t>{{3, 1}});
    CHECK_THROWS_AS(min_distance(code_of(F, 3, {w}), DistanceMode::Bruteforce), FieldError);
}

TEST_CASE("orbit mode rejects codes that are not unions of orbits") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    const auto cut = code.without(5);
    CHECK_FALSE(is_singer_invariant(cut));
    CHECK_THROWS_AS(min_distance(cut, DistanceMode::Orbit), FieldError);
    const auto rep = verify_mrd(cut);
    CHECK_FALSE(rep.mrd);
    CHECK(rep.size == 728);
}

TEST_CASE("Gabidulin baseline") {
    const auto F = make_field(3, 1, 3);
    const auto g1 = build_gabidulin(F, 1);
    CHECK(g1.size() == 729);
    CHECK(min_distance(g1, DistanceMode::Bruteforce).distance == 2);
    CHECK(verify_mrd(g1).mrd);
    CHECK_FALSE(linearity_witness(g1).has_value());
    CHECK(span_dimension(g1) == 6);

    const auto g2 = build_gabidulin(F, 2);
    CHECK(g2.size() == 27);
    CHECK(min_distance(g2, DistanceMode::Bruteforce).distance == 3);
    CHECK(verify_mrd(g2).mrd);

    const auto g0 = build_gabidulin(F, 0);
    CHECK(g0.size() == ipow(3, 9));
    CHECK(min_distance(g0, DistanceMode::Bruteforce, 1).distance == 1);
    CHECK_THROWS_AS(build_gabidulin(F, 3), FieldError);
    CHECK_THROWS_AS(build_gabidulin(F, -1), FieldError);
}

TEST_CASE("linearity") {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    const auto wit = linearity_witness(code);
    REQUIRE(wit.has_value());
    CHECK(code.contains(wit->w1));
    CHECK(code.contains(wit->w2));
    CHECK(F->in_subfield(wit->c));
    CHECK_FALSE(code.contains(add(*F, wit->w1, scale(*F, wit->c, wit->w2))));
    // the proof's shape: an A_2 word against a pi word
    CHECK(code.tag(*code.words().find(wit->w1)).kind == Component::A2);
    CHECK(code.tag(*code.words().find(wit->w2)).kind == Component::Pi);

    const auto empty = build_family(F, {});
    CHECK_FALSE(linearity_witness(empty).has_value());
    CHECK(span_dimension(empty) == 6);
}

TEST_CASE("pairwise rank bounds between components, exhaustive at q=3, m=3") {
    const auto F = make_field(3, 1, 3);
    for (const auto& r : oracle::rank_bound_suite(*F, true)) {
        CAPTURE(r.name);
        CHECK(r.ok);
        CHECK(r.pairs > 0);
    }
}

TEST_CASE("component cardinalities") {
    for (auto [p, h, m] : {std::tuple{3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 3u}, {3u, 1u, 4u}}) {
        const auto F = make_field(p, h, m);
        const std::uint64_t Q = F->order(), q = F->q();
        for (Elt a : F->subfield_elements()) {
            if (a.is_zero()) continue;
            REQUIRE(build_pi(*F, a).size() == (Q - 1) * (Q - 1) / (q - 1));
            REQUIRE(build_J(*F, a).size() == (Q - 1) * (Q - 1) / (q - 1));
        }
        CHECK(build_axis(*F, 1).size() == Q - 1);
        CHECK((Q - 1) * (Q - 1) + 2 * (Q - 1) + 1 == ipow(q, 2 * m));
    }
}
