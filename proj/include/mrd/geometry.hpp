#pragma once

// Projective images in PG(m-1, q^m), F_q-linear sets, field reduction to
// PG(m^2-1, q) in both the polynomial basis and the Singer (cyclic) basis,
// the Desarguesian spread, Segre varieties and hyperreguli.
//
// Coordinate conventions
//   * Words are coordinates in the Singer basis v_1..v_m of V(m, q^m); the
//     cyclic model of V(m, q) is {(a, a^q, ..., a^{q^{m-1}})}.
//   * u-coordinates refer to the F_q-rational basis u_k = g^{k-1} of
//     F_{q^m} viewed as V(m, q).
//   * The Moore matrix Mo with Mo(i, k) = (g^k)^{q^i} sends u-coordinates
//     to Singer coordinates. For a vector with Singer coordinates s the
//     field-reduction matrices satisfy
//         dickson(s) = Mo * field_reduce(Mo^{-1} s) * Mo^T.

#include <cstdint>
#include <string>
#include <vector>

#include "mrd/codes.hpp"
#include "mrd/gfield.hpp"
#include "mrd/linforms.hpp"

namespace mrd {

/// Point of PG(m-1, q^m); the first nonzero coordinate is 1.
struct ProjPoint {
    std::vector<Elt> coords;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

using PointSet = std::vector<ProjPoint>;  // sorted, unique

ProjPoint normalize_point(const FieldCtx& F, std::span<const Elt> v);
PointSet proj_image(const FieldCtx& F, const WordSet& S);
PointSet proj_image(const FieldCtx& F, const std::vector<Word>& S);
std::size_t intersection_size(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);

/// Every F_q-combination of the basis. Throws if the basis is dependent.
std::vector<Word> fq_span(const FieldCtx& F, const std::vector<Word>& basis);
/// |[span]| == (q^r - 1)/(q - 1) for a basis of rank r.
bool is_scattered(const FieldCtx& F, const std::vector<Word>& basis);
/// F_q-basis of the cyclic model: (u, u^q, ..., u^{q^{m-1}}) for u = g^k.
std::vector<Word> cyclic_model_basis(const FieldCtx& F);
/// F_q-basis of {(u, 0, ..., 0, -alpha u^{q^{m-1}})}.
std::vector<Word> j_basis(const FieldCtx& F, Elt alpha);

/// (a_0, alpha a_1, alpha^{1+q} a_2, ...).
Word tau(const FieldCtx& F, Elt alpha, WordView v);

/// m x m matrix over F_q.
struct TensorMat {
    Mat entries;

    friend bool operator==(const TensorMat&, const TensorMat&) = default;
};

/// Column k holds the F_q-coordinates of the k-th u-coordinate of v.
TensorMat field_reduce(const FieldCtx& F, std::span<const Elt> u_coords);
/// Dickson matrix generated by the Singer coordinates.
DicksonMat cyclic_reduce(const FieldCtx& F, std::span<const Elt> singer_coords);

/// Change of basis between u-coordinates and Singer coordinates. Keeps a
/// reference to the field, which must outlive it.
class SingerBasis {
public:
    explicit SingerBasis(const FieldCtx& F);

    const Mat& moore() const { return moore_; }
    const Mat& moore_inverse() const { return moore_inv_; }
    std::vector<Elt> to_u(std::span<const Elt> singer) const;
    std::vector<Elt> to_singer(std::span<const Elt> u) const;
    /// Matrix of multiplication by g in the u-basis (a Singer cycle).
    const Mat& singer_cycle() const { return cycle_; }
    /// Column k of Mo^{-1} is an eigenvector of the Singer cycle with
    /// eigenvalue g^{q^k}.
    bool eigenvectors_ok(const FieldCtx& F) const;

private:
    const FieldCtx* F_;
    Mat moore_, moore_inv_, cycle_;
};

struct ChangeOfBasisReport {
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::size_t rank_mismatches = 0;
    std::vector<std::size_t> failures;  // sample indices
    bool eigenvectors_ok = false;
    bool ok() const { return eigenvectors_ok && passed == checked && rank_mismatches == 0; }
};

/// Fixed seed for every sampled check.
inline constexpr std::uint64_t kSampleSeed = 0x5EED2017ULL;
std::vector<Word> deterministic_sample(const FieldCtx& F, std::size_t count, std::uint64_t seed = kSampleSeed);

/// For every sample word s checks dickson(s) == Mo * field_reduce(Mo^{-1}s) * Mo^T
/// and equality of the two ranks.
ChangeOfBasisReport verify_prop_3_3(const FieldCtx& F, const SingerBasis& B, const std::vector<Word>& sample);

// ---- PG(m^2 - 1, q) --------------------------------------------------------

/// Largest q^{m^2} for which PG(m^2-1, q) is materialised.
inline constexpr std::uint64_t kMaxTensorSpace = std::uint64_t{1} << 22;

/// Key of a projective point of PG(m^2-1, q): base-q digits (F_q indices)
/// of the normalized matrix, row-major, least significant first.
using PgKey = std::uint64_t;

PgKey point_key(const FieldCtx& F, const TensorMat& X);
/// Key of the point defined by a word in Singer coordinates.
PgKey point_key(const FieldCtx& F, const SingerBasis& B, WordView singer);
std::vector<PgKey> all_pg_points(const FieldCtx& F);
std::uint64_t tensor_space_size(const FieldCtx& F);

struct SpreadElement {
    ProjPoint rep;                // point of PG(m-1, q^m)
    std::vector<PgKey> points;    // sorted
};

struct Spread {
    std::vector<SpreadElement> elements;
    std::vector<std::int32_t> element_of;  // indexed by PgKey, -1 if unassigned
    std::uint64_t total_points = 0;
    bool disjoint = false;
    bool covers = false;

    std::int32_t element_index(PgKey k) const { return element_of[k]; }
};

Spread spread_partition(const FieldCtx& F, const SingerBasis& B);
/// Rank-one F_q matrices up to scalars.
std::vector<PgKey> segre_points(const FieldCtx& F);

struct HyperregulusReport {
    std::vector<std::size_t> elements;  // spread element indices
    std::size_t image_points = 0;
    bool disjoint = false;
    bool members_in_spread = false;
    bool union_equals_image = false;
    bool ok(const FieldCtx& F) const;
};

HyperregulusReport hyperregulus_points(const FieldCtx& F, const SingerBasis& B, const Spread& S, Elt a);
/// {(x, 0, ..., 0, y) : x, y != 0, N(y/x) = c}.
WordSet norm_surface_words(const FieldCtx& F, Elt c);

// ---- component reports ------------------------------------------------------

struct PointComponent {
    std::string name;
    PointSet points;
    std::size_t expected_size = 0;
    bool on_line_required = false;
    int scattered = -1;  // -1 not checked, 0 false, 1 true
};

struct ComponentsReport {
    struct Row {
        std::string name;
        std::size_t size = 0, expected = 0;
        bool size_ok = false;
        bool on_line = true;
        int scattered = -1;
    };
    std::vector<Row> rows;
    std::vector<std::vector<std::size_t>> intersections;
    bool disjoint = false;
    bool ok = false;
};

/// Sizes, pairwise disjointness, and containment in the line through the
/// first and last basis points where required.
ComponentsReport check_point_components(const FieldCtx& F, const std::vector<PointComponent>& comps);
bool on_axis_line(const ProjPoint& P);

ComponentsReport verify_theorem_3_1(const FieldCtx& F, const std::vector<Elt>& I);

struct SpreadStructureReport {
    struct Part {
        std::string name;
        std::size_t elements = 0;
        std::size_t points = 0;
        std::size_t expected_elements = 0;
        bool union_of_elements = false;
        bool structure_ok = false;  // Segre copy / hyperregulus / single element
    };
    std::vector<Part> parts;
    std::size_t spread_elements = 0;
    bool spread_ok = false;
    bool segre_is_rank_one = false;
    bool elements_distinct = false;
    std::size_t subspace_dimension = 0;
    bool j_and_axes_in_subspace = false;
    bool ok = false;
};

SpreadStructureReport verify_theorem_3_5(const FieldCtx& F, const std::vector<Elt>& I);

/// F_q-dimensions of the images of Phi(1), ..., Phi(m) and of their sum.
struct CyclicDecomposition {
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    bool ok(const FieldCtx& F) const;
};
CyclicDecomposition verify_cyclic_decomposition(const FieldCtx& F, const SingerBasis& B);

// ---- exterior splash (m = 3) -------------------------------------------------

struct Line {
    ProjPoint a, b;
};

bool on_line(const FieldCtx& F, const Line& L, const ProjPoint& P);
PointSet line_points(const FieldCtx& F, const Line& L);
/// Points of L on a line joining two distinct points of sub.
PointSet exterior_splash(const FieldCtx& F, const PointSet& sub, const Line& L);

/// The line through the first and last Singer basis points, [v_1, v_m].
Line axis_line(const FieldCtx& F);

}  // namespace mrd
