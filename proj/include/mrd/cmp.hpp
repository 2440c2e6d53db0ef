#pragma once

// The plane case m = 3: the sets gamma_a, Z_a, A'_2 whose union is the
// C_F^1-set X_1 X_2^q = X_3^{q+1}, the semilinear map theta relating them to
// pi_a, J_a, and exterior splashes on the lines [U] and [W].

#include <string>
#include <vector>

#include "mrd/codes.hpp"
#include "mrd/geometry.hpp"

namespace mrd {

/// {(lambda, lambda x^{q+1}, lambda x^q) : N(x) = a}.
WordSet build_gamma(const FieldCtx& F, Elt a);
/// {(lambda x, -lambda alpha x^q, 0)} with alpha the first element of norm a.
WordSet build_Z(const FieldCtx& F, Elt a);
/// {(0, x, 0)}.
WordSet build_axis_prime(const FieldCtx& F);

/// theta(a_1, a_2, a_3) = (a_2^{q^2}, a_3^{q^2}, a_1^{q^2}).
Word theta(const FieldCtx& F, WordView v);
WordSet theta(const FieldCtx& F, const WordSet& S);
ProjPoint theta(const FieldCtx& F, const ProjPoint& P);

/// gamma_a (a in I), Z_b (b outside I), A_1, A'_2 and zero. Tags reuse the
/// Pi/J/A1/A2 slots: gamma_a as Pi(a), Z_b as J(b), A'_2 as A2.
RankCode build_cmp_family(FieldPtr F, const std::vector<Elt>& I);

/// Points of PG(2, q^3) on X_1 X_2^q - X_3^{q+1} = 0.
PointSet cf1_points(const FieldCtx& F);

struct SetCheck {
    std::string name;
    std::size_t size = 0;
    bool equal = false;
};

struct ThetaImagesReport {
    std::vector<SetCheck> checks;  // per a: gamma_a -> pi_{1/a}, Z_a -> J_{1/a}; axes
    bool ok = false;
};

ThetaImagesReport verify_theta_images(const FieldCtx& F);

struct CmpReport {
    std::vector<Elt> I, I_inverse;
    std::size_t cmp_size = 0;
    std::size_t family_size = 0;
    bool theta_image_equals_family = false;
    bool cf1_image = false;  // [gamma_a], [A_1], [A'_2] cover exactly the C_F^1-set
    ThetaImagesReport theta_images;
    MrdReport mrd;
    bool ok = false;
};

/// mode selects how the minimum distance of the CMP code itself is found.
CmpReport verify_corollary_4_2(FieldPtr F, const std::vector<Elt>& I,
                                       DistanceMode mode = DistanceMode::Bruteforce, unsigned threads = 0);

/// The line [v_1, v_2].
Line u_line(const FieldCtx& F);

struct SplashReport {
    Elt a{}, b{};
    std::size_t splash_size = 0;
    bool equals_expected = false;
    bool ok = false;
};

/// Splash of [pi_a] on [W] against [J_b], b = a^{m-1}.
SplashReport verify_pi_splash(const FieldCtx& F, Elt a);

struct GammaSplashReport {
    Elt a{};
    Elt target{};  // -a^2
    std::size_t splash_size = 0;
    std::size_t z_size = 0;
    bool equals_norm_set = false;  // splash == {[(1, x, 0)] : N(x) = -a^2}
    bool equals_z = false;         // splash == [Z_a]
    std::size_t common_with_z = 0;
    bool theta_maps_to_pi_splash = false;
    /// Reported for a = 1 only, never asserted.
    bool ok = false;
};

GammaSplashReport verify_remark_4_4(const FieldCtx& F, Elt a);

}  // namespace mrd
