// One PASS/FAIL line per acceptance criterion, with wall-clock time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mrd/cmp.hpp"
#include "mrd/codes.hpp"
#include "mrd/geometry.hpp"
#include "mrd/linforms.hpp"
#include "oracles.hpp"

using namespace mrd;

namespace {

/// Collects failed sub-checks of one criterion.
struct Checks {
    std::vector<std::string> failed;
    std::ostringstream info;

    void expect(bool cond, const std::string& what) {
        if (!cond) failed.push_back(what);
    }
};

bool run(int id, const std::string& title, double limit_s, const std::function<void(Checks&)>& body) {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failed.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) c.failed.push_back("time limit " + std::to_string(limit_s) + " s exceeded");
    const bool ok = c.failed.empty();
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)", ok ? "PASS" : "FAIL", id, title.c_str(), secs, limit_s);
    if (!c.info.str().empty()) std::printf(" [%s]", c.info.str().c_str());
    std::printf("\n");
    for (const auto& f : c.failed) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
    return ok;
}

bool witness_valid(const RankCode& code, const std::optional<LinearityWitness>& w) {
    if (!w) return false;
    const FieldCtx& F = code.field();
    return F.in_subfield(w->c) && code.contains(w->w1) && code.contains(w->w2) &&
           !code.contains(add(F, w->w1, scale(F, w->c, w->w2)));
}

Word random_word(const FieldCtx& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
    std::vector<Elt> a(F.m());
    for (auto& x : a) x = Elt{pick(rng)};
    return Word(std::move(a));
}

DicksonMat random_invertible(const FieldCtx& F, std::mt19937_64& rng) {
    while (true) {
        const Word w = random_word(F, rng);
        if (rank(F, w) == static_cast<int>(F.m())) return dickson(F, w);
    }
}

RankCode image_code(const RankCode& code, const AutElt& g) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < code.size(); ++i) words.push_back(apply_aut(code.field(), g, code[i]));
    return RankCode(code.field_ptr(), code.claimed_distance(), code.index_set(), std::move(words), code.tags());
}

void criterion_small(Checks& c) {
    const auto F = make_field(3, 1, 3);
    const auto code = build_family(F, {F->from_int(2)});
    c.expect(code.size() == 729, "size 729");
    const auto md = min_distance(code, DistanceMode::Bruteforce);
    c.expect(md.distance == 2, "exhaustive minimum distance 2");
    c.expect(oracle::rank_by_roots(*F, sub(*F, code[md.first], code[md.second])) == 2, "closest pair has rank 2");
    c.expect(verify_mrd(code, DistanceMode::Bruteforce).mrd, "MRD");
    c.expect(witness_valid(code, linearity_witness(code)), "linearity witness");
    c.info << "size " << code.size() << ", d " << md.distance;
}

void criterion_q4(Checks& c) {
    const auto F = make_field(2, 2, 3);
    const Elt w = F->subfield_gen();
    for (const auto& I : {std::vector<Elt>{w}, std::vector<Elt>{w, F->mul(w, w)}}) {
        const auto code = build_family(F, I);
        const std::string tag = "|I|=" + std::to_string(I.size()) + ": ";
        c.expect(code.size() == 4096, tag + "size 4096");
        const auto md = min_distance(code, DistanceMode::Orbit);
        c.expect(md.distance == 2, tag + "orbit minimum distance 2");
        c.expect(rank_distance(*F, code[md.first], code[md.second]) == md.distance, tag + "closest pair");

        // brute force on a deterministic 500-word subsample, checked by root counting
        std::mt19937_64 rng(kSampleSeed);
        std::vector<std::size_t> idx(code.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(500);
        std::sort(idx.begin(), idx.end());
        const auto sub_md = min_distance_subset(code, idx);
        int naive = static_cast<int>(F->m()) + 1;
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                naive = std::min(naive, oracle::rank_by_roots(*F, sub(*F, code[idx[i]], code[idx[j]])));
        c.expect(sub_md.distance == naive, tag + "subsample brute force equals root-count oracle");
        c.expect(sub_md.distance >= md.distance, tag + "subsample minimum is at least the orbit minimum");
        c.expect(witness_valid(code, linearity_witness(code)), tag + "non-linear");
        c.info << tag << "d " << md.distance << ", subsample d " << sub_md.distance << "; ";
    }
}

void criterion_m4(Checks& c) {
    const auto F = make_field(3, 1, 4);
    const auto code = build_family(F, {F->from_int(2)});
    c.expect(code.size() == 6561, "size 6561");
    const auto md = min_distance(code, DistanceMode::Orbit);
    c.expect(md.distance == 3, "orbit minimum distance 3");
    c.expect(oracle::rank_by_roots(*F, sub(*F, code[md.first], code[md.second])) == 3, "closest pair has rank 3");
    c.expect(verify_mrd(code, DistanceMode::Orbit).mrd, "MRD");
    c.expect(witness_valid(code, linearity_witness(code)), "non-linear");
    c.info << "size " << code.size() << ", d " << md.distance;
}

void criterion_cardinalities(Checks& c) {
    for (auto [p, h, m] : {std::tuple{3u, 1u, 3u}, {2u, 2u, 3u}, {5u, 1u, 3u}, {3u, 1u, 4u}, {2u, 2u, 4u}, {5u, 1u, 4u}}) {
        const auto F = make_field(p, h, m);
        const std::uint64_t q = F->q(), Q = F->order();
        const std::string tag = "q=" + std::to_string(q) + ",m=" + std::to_string(m) + ": ";
        for (Elt a : F->subfield_elements()) {
            if (a.is_zero()) continue;
            c.expect(build_pi(*F, a).size() == (Q - 1) * (Q - 1) / (q - 1), tag + "|pi_a|");
            c.expect(build_J(*F, a).size() == (Q - 1) * (Q - 1) / (q - 1), tag + "|J_a|");
        }
        c.expect(build_axis(*F, 1).size() == Q - 1, tag + "|A_1|");
        c.expect(build_axis(*F, 2).size() == Q - 1, tag + "|A_2|");
        c.expect((Q - 1) * (Q - 1) + 2 * (Q - 1) + 1 == Q * Q, tag + "identity");
        // every I in F_q \ {0, 1} of size one gives a partition of the whole count
        const auto code = build_family(F, {F->subfield_elt(2)});
        c.expect(code.size() == Q * Q && code.overlaps() == 0, tag + "dedup count q^{2m}");
    }
}

void criterion_lemmas(Checks& c) {
    std::uint64_t pairs = 0;
    for (const auto& r : oracle::rank_bound_suite(*make_field(3, 1, 3), true)) {
        c.expect(r.ok, "q=3 exhaustive: " + r.name);
        pairs += r.pairs;
    }
    for (const auto& r : oracle::rank_bound_suite(*make_field(2, 2, 3), false)) {
        c.expect(r.ok, "q=4 orbit: " + r.name);
        pairs += r.pairs;
    }
    c.info << pairs << " pairs";
}

void criterion_gabidulin(Checks& c) {
    const auto F = make_field(3, 1, 3);
    const auto code = build_gabidulin(F, 1);
    c.expect(code.size() == 729, "size 729");
    const auto rep = verify_mrd(code, DistanceMode::Bruteforce);
    c.expect(rep.min_distance == 2, "minimum distance 2");
    c.expect(rep.mrd, "MRD");
    c.expect(!linearity_witness(code).has_value(), "linear");
    c.expect(span_dimension(code) == 6, "span dimension 6");
    c.info << "size " << code.size() << ", d " << rep.min_distance;
}

void criterion_geometry(Checks& c) {
    const auto F = make_field(3, 1, 3);
    const SingerBasis B(*F);
    const auto S = spread_partition(*F, B);
    bool sizes = S.elements.size() == 757;
    for (const auto& e : S.elements) sizes = sizes && e.points.size() == 13;
    c.expect(sizes && S.disjoint && S.covers, "spread of 757 elements of 13 points");
    c.expect(segre_points(*F).size() == 169, "169 Segre points");

    std::size_t agree = 0, nonzero = 0;
    const std::uint64_t total = std::uint64_t{F->order()} * F->order() * F->order();
    for (std::uint64_t t = 1; t < total; ++t) {
        std::vector<Elt> s{Elt{static_cast<std::uint32_t>(t % 27)}, Elt{static_cast<std::uint32_t>(t / 27 % 27)},
                           Elt{static_cast<std::uint32_t>(t / 729)}};
        ++nonzero;
        agree += matrix_rank(*F, cyclic_reduce(*F, s).matrix()) ==
                 matrix_rank(*F, field_reduce(*F, B.to_u(s)).entries);
    }
    c.expect(nonzero == 19682 && agree == nonzero, "ranks agree on all nonzero vectors");
    c.expect(verify_theorem_3_1(*F, {F->from_int(2)}).ok, "linear set components");
    c.expect(verify_theorem_3_5(*F, {F->from_int(2)}).ok, "spread structure");
    const auto p = verify_prop_3_3(*F, B, deterministic_sample(*F, 10000));
    c.expect(p.ok() && p.checked == 10000, "change of basis on 10^4 samples");
    c.info << agree << "/" << nonzero << " rank agreements";
}

void criterion_plane(Checks& c) {
    const auto F3 = make_field(3, 1, 3);
    const auto F4 = make_field(2, 2, 3);
    const auto F5 = make_field(5, 1, 3);
    const std::vector<std::pair<FieldPtr, std::vector<Elt>>> cases{
        {F3, {F3->from_int(2)}}, {F4, {F4->subfield_gen()}}, {F5, {F5->from_int(2), F5->from_int(3)}}};
    for (const auto& [F, I] : cases) {
        const auto rep = verify_corollary_4_2(F, I, DistanceMode::Bruteforce);
        const std::string tag = "q=" + std::to_string(F->q()) + ": ";
        c.expect(rep.ok, tag + "theta equivalence of the C_F^1 code");
        c.expect(rep.theta_images.ok, tag + "set equalities for all a");
        c.info << tag << "d " << rep.mrd.min_distance << "; ";
    }
    const auto splash = exterior_splash(*F3, proj_image(*F3, build_pi(*F3, F3->from_int(2))), axis_line(*F3));
    c.expect(splash == proj_image(*F3, build_J(*F3, FieldCtx::one())), "splash of [pi_2] on [W] is [J_1]");
    const auto r = verify_remark_4_4(*F3, F3->from_int(2));
    c.expect(r.equals_norm_set && r.target == F3->from_int(2), "splash of [gamma_2] is the N(x)=2 set");
    c.expect(!r.equals_z && r.ok, "splash of [gamma_2] differs from [Z_2]");
    bool z_norm = true;
    const auto Z = build_Z(*F3, F3->from_int(2));
    for (std::size_t i = 0; i < Z.size(); ++i) z_norm = z_norm && F3->norm(F3->div(Z[i][1], Z[i][0])) == FieldCtx::one();
    c.expect(z_norm, "[Z_2] is the N(y)=1 set");
}

void criterion_properties(Checks& c) {
    // trace and norm laws, exhaustive on F_27 and F_64
    for (auto [p, h] : {std::pair{3u, 1u}, {2u, 2u}}) {
        const auto F = make_field(p, h, 3);
        bool ok = true;
        for (Elt x : F->elements()) {
            ok = ok && F->in_subfield(F->trace(x)) && F->in_subfield(F->norm(x));
            ok = ok && F->trace(F->frobenius(x, 1)) == F->trace(x) && F->norm(F->frobenius(x, 1)) == F->norm(x);
            for (Elt y : F->elements()) {
                ok = ok && F->trace(F->add(x, y)) == F->add(F->trace(x), F->trace(y));
                ok = ok && F->norm(F->mul(x, y)) == F->mul(F->norm(x), F->norm(y));
            }
        }
        c.expect(ok, "trace/norm laws q=" + std::to_string(F->q()));
    }

    const auto F = make_field(3, 1, 3);
    std::mt19937_64 rng(kSampleSeed);
    bool transpose_ok = true, compose_ok = true, aut_ok = true;
    for (int t = 0; t < 500; ++t) {
        const Word u = random_word(*F, rng), v = random_word(*F, rng);
        transpose_ok = transpose_ok && dickson_transpose(*F, dickson_transpose(*F, u)) == u &&
                       dickson(*F, dickson_transpose(*F, u)).matrix() == transpose(dickson(*F, u).matrix());
        const Word uv = dickson_mul(*F, dickson(*F, u), dickson(*F, v)).word();
        for (Elt x : {F->gen(), F->gen_pow(9), FieldCtx::one()})
            compose_ok = compose_ok &&
                         oracle::eval_naive(*F, uv, x) == oracle::eval_naive(*F, u, oracle::eval_naive(*F, v, x));
        const AutElt g{random_invertible(*F, rng), random_invertible(*F, rng), (t % 2) == 1,
                       static_cast<unsigned>(t % 3)};
        aut_ok = aut_ok && rank(*F, apply_aut(*F, g, u)) == oracle::rank_by_roots(*F, u);
    }
    c.expect(transpose_ok, "Dickson transpose involution");
    c.expect(compose_ok, "composition oracle");
    c.expect(aut_ok, "automorphism rank invariance");

    const auto code = build_family(F, {F->from_int(2)});
    const auto hist = distance_distribution(code);
    const AutElt g{random_invertible(*F, rng), random_invertible(*F, rng), true, 1};
    c.expect(distance_distribution(image_code(code, g)) == hist, "distance histogram invariance");
    c.expect(hist == std::map<int, std::uint64_t>{{2, 123201}, {3, 142155}}, "histogram values");
}

}  // namespace

int main() {
    int failures = 0;
    failures += !run(1, "q=3 m=3 I={2}: 729 words, d=2, MRD, non-linear", 10, criterion_small);
    failures += !run(2, "q=4 m=3 |I| in {1,2}: 4096 words, d=2, subsample cross-check, non-linear", 120, criterion_q4);
    failures += !run(3, "q=3 m=4 I={2}: 6561 words, d=3, non-linear", 600, criterion_m4);
    failures += !run(4, "component cardinalities and dedup counts", 600, criterion_cardinalities);
    failures += !run(5, "pairwise rank bounds, exhaustive q=3 and orbit q=4", 600, criterion_lemmas);
    failures += !run(6, "Gabidulin s=1: linear MRD, 729 words, d=2", 600, criterion_gabidulin);
    failures += !run(7, "geometry suite at q=3 m=3", 300, criterion_geometry);
    failures += !run(8, "plane case: theta equivalence, set equalities, splashes", 600, criterion_plane);
    failures += !run(9, "property tests", 600, criterion_properties);
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
