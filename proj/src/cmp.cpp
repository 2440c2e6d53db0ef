#include "mrd/cmp.hpp"

#include <algorithm>

namespace mrd {

namespace {

void require_plane(const FieldCtx& F) {
    if (F.m() != 3) throw FieldError("this construction needs m = 3");
}

void require_unit(const FieldCtx& F, Elt a) {
    if (a.is_zero() || !F.in_subfield(a)) throw FieldError("a must be a nonzero element of F_q");
}

std::vector<Elt> checked_index_set(const FieldCtx& F, const std::vector<Elt>& I) {
    require_plane(F);
    if (F.q() <= 2) throw FieldError("needs q > 2");
    if (I.empty()) throw FieldError("index set must be nonempty");
    std::vector<Elt> index = I;
    std::sort(index.begin(), index.end());
    if (std::adjacent_find(index.begin(), index.end()) != index.end())
        throw FieldError("index set has repeated elements");
    for (Elt a : index)
        if (!F.in_subfield(a) || a.is_zero() || a == FieldCtx::one())
            throw FieldError("index set must lie in F_q \\ {0, 1}");
    return index;
}

PointSet norm_line_points(const FieldCtx& F, Elt c) {
    PointSet out;
    for (Elt x : F.norm_fiber(c)) out.push_back(ProjPoint{{FieldCtx::one(), x, FieldCtx::zero()}});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WordSet build_gamma(const FieldCtx& F, Elt a) {
    require_plane(F);
    require_unit(F, a);
    const std::uint32_t q = F.q();
    std::vector<Elt> flat;
    for (Elt x : F.norm_fiber(a)) {
        const Elt x1 = F.pow(x, q + 1), xq = F.frobenius(x, 1);
        for (std::uint32_t l = 0; l < F.unit_order(); ++l) {
            const Elt lam = F.gen_pow(l);
            flat.insert(flat.end(), {lam, F.mul(lam, x1), F.mul(lam, xq)});
        }
    }
    return WordSet(3, std::move(flat));
}

WordSet build_Z(const FieldCtx& F, Elt a) {
    require_plane(F);
    require_unit(F, a);
    const Elt alpha = F.norm_fiber(a).front();
    std::vector<Elt> flat;
    for (std::uint32_t i = 0; i < F.unit_order(); ++i) {
        const Elt x = F.gen_pow(i);
        const Elt second = F.neg(F.mul(alpha, F.frobenius(x, 1)));
        for (std::uint32_t l = 0; l < F.unit_order(); ++l) {
            const Elt lam = F.gen_pow(l);
            flat.insert(flat.end(), {F.mul(lam, x), F.mul(lam, second), FieldCtx::zero()});
        }
    }
    return WordSet(3, std::move(flat));
}

WordSet build_axis_prime(const FieldCtx& F) {
    require_plane(F);
    std::vector<Elt> flat;
    for (std::uint32_t l = 0; l < F.unit_order(); ++l) flat.insert(flat.end(), {FieldCtx::zero(), F.gen_pow(l), FieldCtx::zero()});
    return WordSet(3, std::move(flat));
}

Word theta(const FieldCtx& F, WordView v) {
    require_plane(F);
    if (v.size() != 3) throw FieldError("theta acts on 3-tuples");
    return Word({F.frobenius(v[1], 2), F.frobenius(v[2], 2), F.frobenius(v[0], 2)});
}

WordSet theta(const FieldCtx& F, const WordSet& S) {
    std::vector<Elt> flat;
    flat.reserve(S.flat().size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        const Word w = theta(F, S[i]);
        flat.insert(flat.end(), w.a.begin(), w.a.end());
    }
    return WordSet(3, std::move(flat));
}

ProjPoint theta(const FieldCtx& F, const ProjPoint& P) { return normalize_point(F, theta(F, P.coords).a); }

RankCode build_cmp_family(FieldPtr Fp, const std::vector<Elt>& I) {
    const FieldCtx& F = *Fp;
    const auto index = checked_index_set(F, I);
    std::vector<RankCode::Part> parts;
    for (Elt a : index) parts.push_back({{Component::Pi, a}, build_gamma(F, a)});
    for (std::uint32_t k = 1; k < F.q(); ++k) {
        const Elt b = F.subfield_elt(k);
        if (std::binary_search(index.begin(), index.end(), b)) continue;
        parts.push_back({{Component::J, b}, build_Z(F, b)});
    }
    parts.push_back({{Component::A1, {}}, build_axis(F, 1)});
    parts.push_back({{Component::A2, {}}, build_axis_prime(F)});
    parts.push_back({{Component::Zero, {}}, WordSet::from_words(3, {Word::zero(3)})});
    return RankCode(Fp, 2, index, std::move(parts));
}

PointSet cf1_points(const FieldCtx& F) {
    require_plane(F);
    const std::uint32_t q = F.q();
    auto on_curve = [&](Elt x1, Elt x2, Elt x3) {
        return F.mul(x1, F.frobenius(x2, 1)) == F.pow(x3, q + 1);
    };
    const auto els = F.elements();
    PointSet out;
    for (Elt y : els)
        for (Elt z : els)
            if (on_curve(FieldCtx::one(), y, z)) out.push_back(ProjPoint{{FieldCtx::one(), y, z}});
    for (Elt z : els)
        if (on_curve(FieldCtx::zero(), FieldCtx::one(), z)) out.push_back(ProjPoint{{FieldCtx::zero(), FieldCtx::one(), z}});
    if (on_curve(FieldCtx::zero(), FieldCtx::zero(), FieldCtx::one()))
        out.push_back(ProjPoint{{FieldCtx::zero(), FieldCtx::zero(), FieldCtx::one()}});
    std::sort(out.begin(), out.end());
    return out;
}

ThetaImagesReport verify_theta_images(const FieldCtx& F) {
    require_plane(F);
    ThetaImagesReport rep;
    rep.ok = true;
    auto record = [&](std::string name, const WordSet& image, const WordSet& target) {
        SetCheck c{std::move(name), image.size(), image == target};
        rep.ok = rep.ok && c.equal;
        rep.checks.push_back(std::move(c));
    };
    for (std::uint32_t k = 1; k < F.q(); ++k) {
        const Elt a = F.subfield_elt(k);
        const Elt ainv = F.inv(a);
        const std::string label = std::to_string(k), inv_label = std::to_string(F.subfield_index_of(ainv));
        record("theta(gamma(" + label + ")) = pi(" + inv_label + ")", theta(F, build_gamma(F, a)), build_pi(F, ainv));
        record("theta(Z(" + label + ")) = J(" + inv_label + ")", theta(F, build_Z(F, a)), build_J(F, ainv));
    }
    record("theta(A1) = A2", theta(F, build_axis(F, 1)), build_axis(F, 2));
    record("theta(A2') = A1", theta(F, build_axis_prime(F)), build_axis(F, 1));
    return rep;
}

CmpReport verify_corollary_4_2(FieldPtr Fp, const std::vector<Elt>& I, DistanceMode mode,
                                       unsigned threads) {
    const FieldCtx& F = *Fp;
    CmpReport rep;
    rep.I = checked_index_set(F, I);
    for (Elt a : rep.I) rep.I_inverse.push_back(F.inv(a));
    std::sort(rep.I_inverse.begin(), rep.I_inverse.end());

    const RankCode cmp = build_cmp_family(Fp, rep.I);
    const RankCode family = build_family(Fp, rep.I_inverse);
    rep.cmp_size = cmp.size();
    rep.family_size = family.size();
    rep.theta_image_equals_family = theta(F, cmp.words()) == family.words();

    PointSet curve;
    for (std::uint32_t k = 1; k < F.q(); ++k) {
        const auto pts = proj_image(F, build_gamma(F, F.subfield_elt(k)));
        curve.insert(curve.end(), pts.begin(), pts.end());
    }
    for (const auto& P : proj_image(F, build_axis(F, 1))) curve.push_back(P);
    for (const auto& P : proj_image(F, build_axis_prime(F))) curve.push_back(P);
    std::sort(curve.begin(), curve.end());
    curve.erase(std::unique(curve.begin(), curve.end()), curve.end());
    rep.cf1_image = curve == cf1_points(F);

    rep.theta_images = verify_theta_images(F);
    rep.mrd = verify_mrd(cmp, mode, threads);
    rep.ok = rep.theta_image_equals_family && rep.cf1_image && rep.theta_images.ok && rep.mrd.mrd &&
             rep.cmp_size == rep.family_size && cmp.overlaps() == 0;
    return rep;
}

Line u_line(const FieldCtx& F) {
    require_plane(F);
    return {ProjPoint{{FieldCtx::one(), FieldCtx::zero(), FieldCtx::zero()}},
            ProjPoint{{FieldCtx::zero(), FieldCtx::one(), FieldCtx::zero()}}};
}

SplashReport verify_pi_splash(const FieldCtx& F, Elt a) {
    require_plane(F);
    require_unit(F, a);
    SplashReport rep;
    rep.a = a;
    rep.b = F.pow(a, F.m() - 1);
    const auto splash = exterior_splash(F, proj_image(F, build_pi(F, a)), axis_line(F));
    rep.splash_size = splash.size();
    rep.equals_expected = splash == proj_image(F, build_J(F, rep.b));
    rep.ok = rep.equals_expected;
    return rep;
}

GammaSplashReport verify_remark_4_4(const FieldCtx& F, Elt a) {
    require_plane(F);
    require_unit(F, a);
    GammaSplashReport rep;
    rep.a = a;
    rep.target = F.neg(F.mul(a, a));
    const auto splash = exterior_splash(F, proj_image(F, build_gamma(F, a)), u_line(F));
    const auto z = proj_image(F, build_Z(F, a));
    rep.splash_size = splash.size();
    rep.z_size = z.size();
    rep.equals_norm_set = splash == norm_line_points(F, rep.target);
    rep.equals_z = splash == z;
    rep.common_with_z = intersection_size(splash, z);

    PointSet mapped;
    for (const auto& P : splash) mapped.push_back(theta(F, P));
    std::sort(mapped.begin(), mapped.end());
    const auto pi_splash = exterior_splash(F, proj_image(F, build_pi(F, F.inv(a))), axis_line(F));
    rep.theta_maps_to_pi_splash = mapped == pi_splash;

    rep.ok = rep.equals_norm_set && rep.theta_maps_to_pi_splash && (a == FieldCtx::one() || !rep.equals_z);
    return rep;
}

}  // namespace mrd
