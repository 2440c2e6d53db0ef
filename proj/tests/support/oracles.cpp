#include "oracles.hpp"

#include <algorithm>
#include <string>

namespace oracle {

using namespace mrd;

namespace {

void check_pairs(const FieldCtx& F, const WordSet& X, const WordSet& Y, bool exhaustive, int bound,
                 RankBoundResult& out) {
    const std::size_t left = exhaustive ? X.size() : 1;
    for (std::size_t i = 0; i < left; ++i)
        for (std::size_t j = 0; j < Y.size(); ++j) {
            if (std::equal(X[i].begin(), X[i].end(), Y[j].begin())) continue;
            ++out.pairs;
            if (rank_distance(F, X[i], Y[j]) < bound) out.ok = false;
        }
}

}  // namespace

std::vector<RankBoundResult> rank_bound_suite(const FieldCtx& F, bool exhaustive) {
    const int m = static_cast<int>(F.m());
    std::vector<RankBoundResult> out;
    std::vector<Elt> units, non_one;
    for (Elt a : F.subfield_elements()) {
        if (a.is_zero()) continue;
        units.push_back(a);
        if (a != FieldCtx::one()) non_one.push_back(a);
    }
    auto gen_pi = [&](Elt a) { return pi_generator(F, F.norm_fiber(a).front()); };
    auto gen_J = [&](Elt a) { return j_generator(F, F.norm_fiber(a).front()); };
    Word e1 = Word::zero(F.m());
    e1[0] = FieldCtx::one();
    const WordSet A[2] = {build_axis(F, 1), build_axis(F, 2)};

    // Without exhaustive, the generator stands for its whole orbit X.
    auto left_check = [&](const std::string& name, const Word& gen, const WordSet& X, const WordSet& Y, int bound) {
        RankBoundResult r{name};
        if (exhaustive) {
            check_pairs(F, X, Y, true, bound, r);
        } else {
            if (!X.contains(gen)) r.ok = false;
            const WordSet G = WordSet::from_words(F.m(), {gen});
            check_pairs(F, G, Y, false, bound, r);
        }
        out.push_back(std::move(r));
    };

    {
        RankBoundResult r{"pi_1 has rank 1"};
        const auto pi1 = build_pi(F, FieldCtx::one());
        for (std::size_t i = 0; i < pi1.size(); ++i) {
            ++r.pairs;
            if (rank(F, pi1[i]) != 1) r.ok = false;
        }
        out.push_back(std::move(r));
    }
    for (Elt a : non_one)
        for (Elt b : non_one) {
            if (b < a) continue;
            left_check("pi vs pi", gen_pi(a), build_pi(F, a), build_pi(F, b), m - 1);
        }
    {
        RankBoundResult r{"(x,0,...,0,y) has rank >= m-1"};
        const auto els = F.elements();
        for (Elt x : els)
            for (Elt y : els) {
                if (x.is_zero() && y.is_zero()) continue;
                Word w = Word::zero(F.m());
                w[0] = x;
                w[F.m() - 1] = y;
                ++r.pairs;
                if (rank(F, w) < m - 1) r.ok = false;
            }
        out.push_back(std::move(r));
    }
    for (Elt a : units)
        for (Elt b : units) {
            if (b < a) continue;
            left_check("J vs J", gen_J(a), build_J(F, a), build_J(F, b), m - 1);
        }
    for (Elt a : units)
        for (Elt b : units) {
            if (a == b) continue;
            left_check("pi vs J", gen_pi(a), build_pi(F, a), build_J(F, b), m - 1);
        }
    {
        RankBoundResult r{"A_i has rank m"};
        for (const auto& S : A)
            for (std::size_t i = 0; i < S.size(); ++i) {
                ++r.pairs;
                if (rank(F, S[i]) != m) r.ok = false;
            }
        out.push_back(std::move(r));
    }
    left_check("A1 vs A2", e1, A[0], A[1], m - 1);
    for (Elt a : non_one)
        for (int i = 0; i < 2; ++i) left_check("pi vs A", gen_pi(a), build_pi(F, a), A[i], m - 1);
    for (Elt a : units)
        for (int i = 0; i < 2; ++i) left_check("J vs A", gen_J(a), build_J(F, a), A[i], m - 1);
    return out;
}

}  // namespace oracle
