#include "mrd/geometry.hpp"

#include <algorithm>
#include <random>
#include <iterator>

namespace mrd {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::size_t subgeometry_size(const FieldCtx& F) { return F.unit_order() / (F.q() - 1); }

void validate_index_set(const FieldCtx& F, const std::vector<Elt>& I) {
    if (F.q() <= 2) throw FieldError("needs q > 2");
    if (F.m() < 3) throw FieldError("needs m >= 3");
    if (I.empty()) throw FieldError("index set must be nonempty");
    for (Elt a : I)
        if (!F.in_subfield(a) || a.is_zero() || a == FieldCtx::one())
            throw FieldError("index set must lie in F_q \\ {0, 1}");
}

std::vector<Elt> flatten(const TensorMat& X) {
    return {X.entries.data().begin(), X.entries.data().end()};
}

std::vector<PgKey> keys_of(const FieldCtx& F, const SingerBasis& B, const WordSet& S) {
    std::vector<PgKey> out;
    out.reserve(S.size());
    for (std::size_t i = 0; i < S.size(); ++i) out.push_back(point_key(F, B, S[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Elt> cross(const FieldCtx& F, std::span<const Elt> a, std::span<const Elt> b) {
    return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])), F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

Elt dot(const FieldCtx& F, std::span<const Elt> a, std::span<const Elt> b) {
    Elt s = FieldCtx::zero();
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

bool all_zero(std::span<const Elt> v) {
    return std::all_of(v.begin(), v.end(), [](Elt e) { return e.is_zero(); });
}

}  // namespace

ProjPoint normalize_point(const FieldCtx& F, std::span<const Elt> v) {
    const auto lead = std::find_if(v.begin(), v.end(), [](Elt e) { return !e.is_zero(); });
    if (lead == v.end()) throw FieldError("the zero vector has no projective point");
    const Elt inv = F.inv(*lead);
    ProjPoint P;
    P.coords.reserve(v.size());
    for (Elt e : v) P.coords.push_back(F.mul(e, inv));
    return P;
}

PointSet proj_image(const FieldCtx& F, const WordSet& S) {
    PointSet out;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (!all_zero(S[i])) out.push_back(normalize_point(F, S[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointSet proj_image(const FieldCtx& F, const std::vector<Word>& S) {
    PointSet out;
    for (const auto& w : S)
        if (!w.is_zero()) out.push_back(normalize_point(F, w.a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t intersection_size(const PointSet& a, const PointSet& b) {
    std::size_t n = 0;
    for (const auto& p : a) n += std::binary_search(b.begin(), b.end(), p) ? 1 : 0;
    return n;
}

bool is_subset(const PointSet& a, const PointSet& b) { return intersection_size(a, b) == a.size(); }

std::vector<Word> fq_span(const FieldCtx& F, const std::vector<Word>& basis) {
    if (basis.empty()) return {};
    const std::size_t len = basis.front().size();
    const auto r = static_cast<unsigned>(basis.size());
    const std::uint64_t total = ipow(F.q(), r);
    std::vector<Word> out;
    out.reserve(total);
    std::vector<std::uint32_t> digit(r, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        Word w = Word::zero(static_cast<unsigned>(len));
        for (unsigned k = 0; k < r; ++k) {
            if (digit[k] == 0) continue;
            const Elt c = F.subfield_elt(digit[k]);
            for (std::size_t i = 0; i < len; ++i) w[i] = F.add(w[i], F.mul(c, basis[k][i]));
        }
        if (t != 0 && w.is_zero()) throw FieldError("basis is F_q-dependent");
        out.push_back(std::move(w));
        for (unsigned k = 0; k < r; ++k) {
            if (++digit[k] < F.q()) break;
            digit[k] = 0;
        }
    }
    return out;
}

bool is_scattered(const FieldCtx& F, const std::vector<Word>& basis) {
    const auto span = fq_span(F, basis);
    const std::uint64_t expected = (ipow(F.q(), static_cast<unsigned>(basis.size())) - 1) / (F.q() - 1);
    return proj_image(F, span).size() == expected;
}

std::vector<Word> cyclic_model_basis(const FieldCtx& F) {
    std::vector<Word> out;
    for (unsigned k = 0; k < F.m(); ++k) {
        const Elt u = F.gen_pow(k);
        Word w = Word::zero(F.m());
        for (unsigned i = 0; i < F.m(); ++i) w[i] = F.frobenius(u, i);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> j_basis(const FieldCtx& F, Elt alpha) {
    std::vector<Word> out;
    const unsigned m = F.m();
    for (unsigned k = 0; k < m; ++k) {
        const Elt u = F.gen_pow(k);
        Word w = Word::zero(m);
        w[0] = u;
        w[m - 1] = F.neg(F.mul(alpha, F.frobenius(u, m - 1)));
        out.push_back(std::move(w));
    }
    return out;
}

Word tau(const FieldCtx& F, Elt alpha, WordView v) {
    if (alpha.is_zero()) throw FieldError("tau needs a nonzero alpha");
    Word out(v);
    Elt factor = FieldCtx::one();
    for (unsigned i = 1; i < v.size(); ++i) {
        factor = F.mul(factor, F.frobenius(alpha, i - 1));
        out[i] = F.mul(factor, v[i]);
    }
    return out;
}

TensorMat field_reduce(const FieldCtx& F, std::span<const Elt> u_coords) {
    const unsigned m = F.m();
    if (u_coords.size() != m) throw FieldError("vector length must equal m");
    TensorMat X{Mat(m, m)};
    std::vector<Elt> col(m);
    for (unsigned k = 0; k < m; ++k) {
        F.coords(u_coords[k], col);
        for (unsigned r = 0; r < m; ++r) X.entries(r, k) = col[r];
    }
    return X;
}

DicksonMat cyclic_reduce(const FieldCtx& F, std::span<const Elt> singer_coords) {
    return dickson(F, singer_coords);
}

SingerBasis::SingerBasis(const FieldCtx& F) : F_(&F), moore_(F.m(), F.m()), cycle_(F.m(), F.m()) {
    const unsigned m = F.m();
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k < m; ++k) moore_(i, k) = F.frobenius(F.gen_pow(k), i);
    moore_inv_ = mat_inverse(F, moore_);
    for (unsigned k = 0; k < m; ++k) {
        const auto col = F.coords(F.mul(F.gen(), F.gen_pow(k)));
        for (unsigned r = 0; r < m; ++r) cycle_(r, k) = col[r];
    }
}

std::vector<Elt> SingerBasis::to_u(std::span<const Elt> singer) const {
    return mat_vec(*F_, moore_inv_, singer);
}

std::vector<Elt> SingerBasis::to_singer(std::span<const Elt> u) const { return mat_vec(*F_, moore_, u); }

bool SingerBasis::eigenvectors_ok(const FieldCtx& F) const {
    const unsigned m = F.m();
    std::vector<Elt> col(m);
    for (unsigned k = 0; k < m; ++k) {
        for (unsigned r = 0; r < m; ++r) col[r] = moore_inv_(r, k);
        if (all_zero(col)) return false;
        const Elt ev = F.frobenius(F.gen(), k);
        const auto image = mat_vec(F, cycle_, col);
        for (unsigned r = 0; r < m; ++r)
            if (image[r] != F.mul(ev, col[r])) return false;
    }
    return true;
}

std::vector<Word> deterministic_sample(const FieldCtx& F, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, F.order() - 1);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Word w = Word::zero(F.m());
        for (unsigned i = 0; i < F.m(); ++i) w[i] = Elt{pick(rng)};
        out.push_back(std::move(w));
    }
    return out;
}

ChangeOfBasisReport verify_prop_3_3(const FieldCtx& F, const SingerBasis& B, const std::vector<Word>& sample) {
    ChangeOfBasisReport rep;
    rep.eigenvectors_ok = B.eigenvectors_ok(F);
    const Mat moT = transpose(B.moore());
    for (std::size_t n = 0; n < sample.size(); ++n) {
        const Word& s = sample[n];
        ++rep.checked;
        const TensorMat X = field_reduce(F, B.to_u(s));
        const Mat congruent = mat_mul(F, mat_mul(F, B.moore(), X.entries), moT);
        if (congruent == dickson(F, s).matrix())
            ++rep.passed;
        else
            rep.failures.push_back(n);
        if (matrix_rank(F, X.entries) != rank(F, s)) ++rep.rank_mismatches;
    }
    return rep;
}

// ---- PG(m^2 - 1, q) --------------------------------------------------------

std::uint64_t tensor_space_size(const FieldCtx& F) { return ipow(F.q(), F.m() * F.m()); }

PgKey point_key(const FieldCtx& F, const TensorMat& X) {
    const auto e = X.entries.data();
    const auto lead = std::find_if(e.begin(), e.end(), [](Elt x) { return !x.is_zero(); });
    if (lead == e.end()) throw FieldError("the zero matrix has no projective point");
    const Elt inv = F.inv(*lead);
    PgKey key = 0, place = 1;
    for (Elt x : e) {
        key += place * F.subfield_index_of(F.mul(x, inv));
        place *= F.q();
    }
    return key;
}

PgKey point_key(const FieldCtx& F, const SingerBasis& B, WordView singer) {
    return point_key(F, field_reduce(F, B.to_u(singer)));
}

std::vector<PgKey> all_pg_points(const FieldCtx& F) {
    const std::uint64_t total = tensor_space_size(F);
    if (total > kMaxTensorSpace) throw FieldError("PG(m^2-1, q) is too large to materialise");
    const unsigned n = F.m() * F.m();
    std::vector<PgKey> out;
    out.reserve((total - 1) / (F.q() - 1));
    // Normalized: the lowest nonzero digit is 1 (index of 1 in F_q).
    std::uint64_t place = 1;
    for (unsigned pos = 0; pos < n; ++pos, place *= F.q()) {
        const std::uint64_t upper = total / (place * F.q());
        for (std::uint64_t hi = 0; hi < upper; ++hi) out.push_back(hi * place * F.q() + place);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Spread spread_partition(const FieldCtx& F, const SingerBasis& B) {
    const std::uint64_t total = tensor_space_size(F);
    if (total > kMaxTensorSpace) throw FieldError("PG(m^2-1, q) is too large to materialise");
    const unsigned m = F.m();
    Spread S;
    S.element_of.assign(total, -1);
    S.disjoint = true;
    const auto units = F.elements();
    // Normalized points of PG(m-1, q^m): leading 1 at position lead.
    std::vector<Elt> v(m);
    for (unsigned lead = 0; lead < m; ++lead) {
        const unsigned free = m - 1 - lead;
        const std::uint64_t count = ipow(F.order(), free);
        for (std::uint64_t t = 0; t < count; ++t) {
            std::fill(v.begin(), v.end(), FieldCtx::zero());
            v[lead] = FieldCtx::one();
            std::uint64_t r = t;
            for (unsigned i = lead + 1; i < m; ++i) {
                v[i] = Elt{static_cast<std::uint32_t>(r % F.order())};
                r /= F.order();
            }
            SpreadElement el;
            el.rep = ProjPoint{v};
            const auto idx = static_cast<std::int32_t>(S.elements.size());
            std::vector<Elt> w(m);
            for (std::size_t l = 1; l < units.size(); ++l) {
                for (unsigned i = 0; i < m; ++i) w[i] = F.mul(units[l], v[i]);
                el.points.push_back(point_key(F, B, w));
            }
            std::sort(el.points.begin(), el.points.end());
            el.points.erase(std::unique(el.points.begin(), el.points.end()), el.points.end());
            for (PgKey k : el.points) {
                if (S.element_of[k] >= 0) S.disjoint = false;
                S.element_of[k] = idx;
            }
            S.elements.push_back(std::move(el));
        }
    }
    const auto pts = all_pg_points(F);
    S.total_points = pts.size();
    S.covers = std::all_of(pts.begin(), pts.end(), [&](PgKey k) { return S.element_of[k] >= 0; });
    std::uint64_t assigned = 0;
    for (auto e : S.element_of) assigned += e >= 0 ? 1 : 0;
    if (assigned != pts.size()) S.covers = false;
    return S;
}

std::vector<PgKey> segre_points(const FieldCtx& F) {
    const unsigned m = F.m();
    // Normalized nonzero vectors of F_q^m.
    std::vector<std::vector<Elt>> vecs;
    const std::uint64_t total = ipow(F.q(), m);
    for (std::uint64_t t = 1; t < total; ++t) {
        std::vector<Elt> v(m);
        std::uint64_t r = t;
        for (unsigned i = 0; i < m; ++i) {
            v[i] = F.subfield_elt(static_cast<std::uint32_t>(r % F.q()));
            r /= F.q();
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](Elt e) { return !e.is_zero(); });
        if (*lead == FieldCtx::one()) vecs.push_back(std::move(v));
    }
    std::vector<PgKey> out;
    out.reserve(vecs.size() * vecs.size());
    TensorMat X{Mat(m, m)};
    for (const auto& l : vecs)
        for (const auto& c : vecs) {
            for (unsigned i = 0; i < m; ++i)
                for (unsigned j = 0; j < m; ++j) X.entries(i, j) = F.mul(l[i], c[j]);
            out.push_back(point_key(F, X));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool HyperregulusReport::ok(const FieldCtx& F) const {
    return elements.size() == subgeometry_size(F) && disjoint && members_in_spread && union_equals_image;
}

HyperregulusReport hyperregulus_points(const FieldCtx& F, const SingerBasis& B, const Spread& S, Elt a) {
    if (a.is_zero()) throw FieldError("hyperregulus needs a nonzero a");
    HyperregulusReport rep;
    const auto image = keys_of(F, B, build_J(F, a));
    rep.image_points = image.size();
    rep.members_in_spread = true;
    for (PgKey k : image) {
        const auto e = S.element_index(k);
        if (e < 0)
            rep.members_in_spread = false;
        else
            rep.elements.push_back(static_cast<std::size_t>(e));
    }
    std::sort(rep.elements.begin(), rep.elements.end());
    rep.elements.erase(std::unique(rep.elements.begin(), rep.elements.end()), rep.elements.end());
    std::vector<PgKey> joined;
    std::size_t sum = 0;
    for (auto e : rep.elements) {
        const auto& pts = S.elements[e].points;
        sum += pts.size();
        joined.insert(joined.end(), pts.begin(), pts.end());
    }
    std::sort(joined.begin(), joined.end());
    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
    rep.disjoint = joined.size() == sum;
    rep.union_equals_image = joined == image;
    return rep;
}

WordSet norm_surface_words(const FieldCtx& F, Elt c) {
    const unsigned m = F.m();
    std::vector<Elt> flat;
    const auto els = F.elements();
    for (std::size_t i = 1; i < els.size(); ++i)
        for (std::size_t j = 1; j < els.size(); ++j) {
            if (F.norm(F.div(els[j], els[i])) != c) continue;
            for (unsigned k = 0; k < m; ++k) flat.push_back(FieldCtx::zero());
            flat[flat.size() - m] = els[i];
            flat.back() = els[j];
        }
    return WordSet(m, std::move(flat));
}

// ---- component reports ------------------------------------------------------

bool on_axis_line(const ProjPoint& P) {
    const auto& c = P.coords;
    return c.size() < 3 || std::all_of(c.begin() + 1, c.end() - 1, [](Elt e) { return e.is_zero(); });
}

ComponentsReport check_point_components(const FieldCtx& F, const std::vector<PointComponent>& comps) {
    (void)F;
    ComponentsReport rep;
    bool all_ok = true;
    for (const auto& c : comps) {
        ComponentsReport::Row row;
        row.name = c.name;
        row.size = c.points.size();
        row.expected = c.expected_size;
        row.size_ok = row.size == row.expected;
        if (c.on_line_required)
            row.on_line = std::all_of(c.points.begin(), c.points.end(), on_axis_line);
        row.scattered = c.scattered;
        all_ok = all_ok && row.size_ok && row.on_line && row.scattered != 0;
        rep.rows.push_back(std::move(row));
    }
    rep.disjoint = true;
    rep.intersections.assign(comps.size(), std::vector<std::size_t>(comps.size(), 0));
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j) {
            rep.intersections[i][j] = intersection_size(comps[i].points, comps[j].points);
            if (i != j && rep.intersections[i][j] != 0) rep.disjoint = false;
        }
    rep.ok = all_ok && rep.disjoint;
    return rep;
}

ComponentsReport verify_theorem_3_1(const FieldCtx& F, const std::vector<Elt>& I) {
    validate_index_set(F, I);
    const std::size_t sub = subgeometry_size(F);
    std::vector<PointComponent> comps;
    comps.push_back({"A1", proj_image(F, build_axis(F, 1)), 1, true, -1});
    comps.push_back({"A2", proj_image(F, build_axis(F, 2)), 1, true, -1});
    const auto model = cyclic_model_basis(F);
    for (Elt a : F.subfield_elements()) {
        if (a.is_zero()) continue;
        const Elt alpha = F.norm_fiber(a).front();
        const std::string label = std::to_string(F.subfield_index_of(a));
        if (std::find(I.begin(), I.end(), a) != I.end()) {
            std::vector<Word> basis;
            for (const auto& b : model) basis.push_back(tau(F, alpha, b));
            comps.push_back({"pi(" + label + ")", proj_image(F, build_pi(F, a)), sub, false,
                             is_scattered(F, basis) ? 1 : 0});
        } else {
            comps.push_back({"J(" + label + ")", proj_image(F, build_J(F, a)), sub, true,
                             is_scattered(F, j_basis(F, alpha)) ? 1 : 0});
        }
    }
    return check_point_components(F, comps);
}

SpreadStructureReport verify_theorem_3_5(const FieldCtx& F, const std::vector<Elt>& I) {
    validate_index_set(F, I);
    const SingerBasis B(F);
    const Spread S = spread_partition(F, B);
    const std::size_t sub = subgeometry_size(F);
    SpreadStructureReport rep;
    rep.spread_elements = S.elements.size();
    rep.spread_ok = S.disjoint && S.covers && std::all_of(S.elements.begin(), S.elements.end(), [&](const auto& e) {
                        return e.points.size() == sub;
                    });

    const auto segre = segre_points(F);
    const auto pi1 = build_pi(F, FieldCtx::one());
    const auto pi1_keys = keys_of(F, B, pi1);
    rep.segre_is_rank_one = pi1_keys == segre && segre.size() == sub * sub;

    std::vector<std::vector<std::size_t>> used;
    auto add_part = [&](const std::string& name, const WordSet& words, std::size_t expected, bool structure) {
        SpreadStructureReport::Part part;
        part.name = name;
        const auto keys = keys_of(F, B, words);
        part.points = keys.size();
        part.expected_elements = expected;
        std::vector<std::size_t> els;
        bool covered = true;
        for (PgKey k : keys) {
            const auto e = S.element_index(k);
            if (e < 0)
                covered = false;
            else
                els.push_back(static_cast<std::size_t>(e));
        }
        std::sort(els.begin(), els.end());
        els.erase(std::unique(els.begin(), els.end()), els.end());
        std::size_t members = 0;
        for (auto e : els) members += S.elements[e].points.size();
        part.elements = els.size();
        part.union_of_elements = covered && members == keys.size();
        part.structure_ok = structure && part.union_of_elements && part.elements == expected;
        used.push_back(std::move(els));
        rep.parts.push_back(std::move(part));
    };

    add_part("A1", build_axis(F, 1), 1, true);
    add_part("A2", build_axis(F, 2), 1, true);
    for (Elt a : F.subfield_elements()) {
        if (a.is_zero()) continue;
        const std::string label = std::to_string(F.subfield_index_of(a));
        if (std::find(I.begin(), I.end(), a) != I.end()) {
            const Elt alpha = F.norm_fiber(a).front();
            std::vector<Elt> flat;
            for (std::size_t i = 0; i < pi1.size(); ++i) {
                const Word w = tau(F, alpha, pi1[i]);
                flat.insert(flat.end(), w.a.begin(), w.a.end());
            }
            const auto image = keys_of(F, B, WordSet(F.m(), std::move(flat)));
            const auto pia = build_pi(F, a);
            const auto keys = keys_of(F, B, pia);
            // A Segre copy: the tau-image of the Segre variety, of rank > 1 off a = 1.
            std::vector<PgKey> common;
            std::set_intersection(keys.begin(), keys.end(), segre.begin(), segre.end(), std::back_inserter(common));
            const bool segre_copy = image == keys && rep.segre_is_rank_one && common.empty();
            add_part("pi(" + label + ")", pia, sub, segre_copy);
        } else {
            const auto hr = hyperregulus_points(F, B, S, a);
            add_part("J(" + label + ")", build_J(F, a), sub, hr.ok(F));
        }
    }

    std::vector<std::size_t> all;
    std::size_t sum = 0;
    for (const auto& u : used) {
        sum += u.size();
        all.insert(all.end(), u.begin(), u.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    rep.elements_distinct = all.size() == sum;

    // Subspace spanned by the two axis elements.
    const unsigned n = F.m() * F.m();
    auto key_vector = [&](PgKey k) {
        std::vector<Elt> v(n);
        for (unsigned i = 0; i < n; ++i) {
            v[i] = F.subfield_elt(static_cast<std::uint32_t>(k % F.q()));
            k /= F.q();
        }
        return v;
    };
    EchelonBasis span(F, n);
    for (std::size_t part = 0; part < 2; ++part)
        for (auto e : used[part])
            for (PgKey k : S.elements[e].points) span.insert(key_vector(k));
    rep.subspace_dimension = span.dimension();
    rep.j_and_axes_in_subspace = true;
    for (std::size_t part = 0; part < rep.parts.size(); ++part) {
        const bool is_pi = rep.parts[part].name.rfind("pi", 0) == 0;
        if (is_pi) continue;
        for (auto e : used[part])
            for (PgKey k : S.elements[e].points)
                if (!span.contains(key_vector(k))) rep.j_and_axes_in_subspace = false;
    }

    rep.ok = rep.spread_ok && rep.segre_is_rank_one && rep.elements_distinct &&
             rep.subspace_dimension == 2 * F.m() && rep.j_and_axes_in_subspace &&
             std::all_of(rep.parts.begin(), rep.parts.end(), [](const auto& p) { return p.structure_ok; });
    return rep;
}

bool CyclicDecomposition::ok(const FieldCtx& F) const {
    return dims.size() == F.m() &&
           std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == F.m(); }) &&
           total == F.m() * F.m();
}

CyclicDecomposition verify_cyclic_decomposition(const FieldCtx& F, const SingerBasis& B) {
    const unsigned m = F.m();
    CyclicDecomposition out;
    EchelonBasis whole(F, m * m);
    for (unsigned j = 0; j < m; ++j) {
        EchelonBasis part(F, m * m);
        for (unsigned k = 0; k < m; ++k) {
            Word w = Word::zero(m);
            w[j] = F.gen_pow(k);
            const auto v = flatten(field_reduce(F, B.to_u(w)));
            part.insert(v);
            whole.insert(v);
        }
        out.dims.push_back(part.dimension());
    }
    out.total = whole.dimension();
    return out;
}

// ---- exterior splash ----------------------------------------------------------

bool on_line(const FieldCtx& F, const Line& L, const ProjPoint& P) {
    if (F.m() != 3) throw FieldError("lines are implemented in the plane only (m = 3)");
    return dot(F, cross(F, L.a.coords, L.b.coords), P.coords).is_zero();
}

PointSet line_points(const FieldCtx& F, const Line& L) {
    if (F.m() != 3) throw FieldError("lines are implemented in the plane only (m = 3)");
    if (all_zero(cross(F, L.a.coords, L.b.coords))) throw FieldError("line needs two distinct points");
    PointSet out{normalize_point(F, L.a.coords)};
    std::vector<Elt> v(3);
    for (Elt t : F.elements()) {
        for (unsigned i = 0; i < 3; ++i) v[i] = F.add(L.b.coords[i], F.mul(t, L.a.coords[i]));
        out.push_back(normalize_point(F, v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointSet exterior_splash(const FieldCtx& F, const PointSet& sub, const Line& L) {
    if (F.m() != 3) throw FieldError("exterior splash is defined for m = 3 only");
    const auto ell = cross(F, L.a.coords, L.b.coords);
    if (all_zero(ell)) throw FieldError("line needs two distinct points");
    for (const auto& P : sub)
        if (dot(F, ell, P.coords).is_zero()) throw FieldError("the line meets the subgeometry");
    PointSet out;
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = i + 1; j < sub.size(); ++j) {
            const auto join = cross(F, sub[i].coords, sub[j].coords);
            out.push_back(normalize_point(F, cross(F, join, ell)));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Line axis_line(const FieldCtx& F) {
    const unsigned m = F.m();
    ProjPoint a{std::vector<Elt>(m)}, b{std::vector<Elt>(m)};
    a.coords.front() = FieldCtx::one();
    b.coords.back() = FieldCtx::one();
    return {a, b};
}

}  // namespace mrd
