#include "mrd/linforms.hpp"

#include <algorithm>
#include <array>

namespace mrd {

namespace {

// p^{hm} <= 2^24 with m >= 2 keeps m <= 24.
constexpr std::size_t kMaxM = 24;

void check_len(const FieldCtx& F, WordView w) {
    if (w.size() != F.m()) throw FieldError("word length must equal m");
}

int rank_impl(const FieldCtx& F, const Elt* w) {
    const unsigned m = F.m();
    std::array<Elt, kMaxM * kMaxM> mat;
    std::array<Elt, kMaxM> col;
    for (unsigned c = 0; c < m; ++c) {
        Elt y = FieldCtx::zero();
        for (unsigned i = 0; i < m; ++i)
            if (!w[i].is_zero()) y = F.add(y, F.mul(w[i], F.basis_conjugate(c, i)));
        F.coords(y, std::span<Elt>(col.data(), m));
        for (unsigned r = 0; r < m; ++r) mat[r * m + c] = col[r];
    }
    // Row reduction over F_q; only the count of pivots is needed.
    int rk = 0;
    for (unsigned c = 0; c < m && rk < static_cast<int>(m); ++c) {
        unsigned piv = m;
        for (unsigned r = rk; r < m; ++r)
            if (!mat[r * m + c].is_zero()) { piv = r; break; }
        if (piv == m) continue;
        if (piv != static_cast<unsigned>(rk))
            for (unsigned j = c; j < m; ++j) std::swap(mat[piv * m + j], mat[rk * m + j]);
        const Elt inv = F.inv(mat[rk * m + c]);
        for (unsigned r = rk + 1; r < m; ++r) {
            const Elt lead = mat[r * m + c];
            if (lead.is_zero()) continue;
            const Elt f = F.neg(F.mul(lead, inv));
            for (unsigned j = c; j < m; ++j)
                mat[r * m + j] = F.add(mat[r * m + j], F.mul(f, mat[rk * m + j]));
        }
        ++rk;
    }
    return rk;
}

}  // namespace

bool Word::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](Elt e) { return e.is_zero(); });
}

Word add(const FieldCtx& F, WordView u, WordView v) {
    Word out(u);
    for (std::size_t i = 0; i < u.size(); ++i) out.a[i] = F.add(u[i], v[i]);
    return out;
}

Word sub(const FieldCtx& F, WordView u, WordView v) {
    Word out(u);
    for (std::size_t i = 0; i < u.size(); ++i) out.a[i] = F.sub(u[i], v[i]);
    return out;
}

Word scale(const FieldCtx& F, Elt c, WordView v) {
    Word out(v);
    for (auto& e : out.a) e = F.mul(c, e);
    return out;
}

Mat Mat::identity(std::size_t n) {
    Mat I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = FieldCtx::one();
    return I;
}

Mat mat_mul(const FieldCtx& F, const Mat& A, const Mat& B) {
    if (A.cols() != B.rows()) throw FieldError("matrix shape mismatch");
    Mat C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Elt a = A(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
        }
    return C;
}

Mat transpose(const Mat& A) {
    Mat T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
    return T;
}

std::vector<Elt> mat_vec(const FieldCtx& F, const Mat& A, std::span<const Elt> v) {
    if (A.cols() != v.size()) throw FieldError("matrix/vector shape mismatch");
    std::vector<Elt> out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out[i] = F.add(out[i], F.mul(A(i, j), v[j]));
    return out;
}

std::vector<std::size_t> rref(const FieldCtx& F, std::span<Elt> a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i * cols + c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        const Elt inv = F.inv(a[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elt lead = a[i * cols + c];
            if (lead.is_zero()) continue;
            const Elt f = F.neg(lead);
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = F.add(a[i * cols + j], F.mul(f, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool EchelonBasis::reduce(std::vector<Elt>& v) const {
    if (v.size() != n_) throw FieldError("vector length does not match the ambient space");
    bool zero = true;
    for (std::size_t c = 0; c < n_; ++c) {
        if (v[c].is_zero()) continue;
        if (pivot_row_[c] < 0) {
            zero = false;
            continue;
        }
        const auto& row = rows_[pivot_row_[c]];
        const Elt f = F_->neg(v[c]);
        for (std::size_t j = c; j < n_; ++j) v[j] = F_->add(v[j], F_->mul(f, row[j]));
    }
    return zero;
}

bool EchelonBasis::insert(std::vector<Elt> v) {
    if (reduce(v)) return false;
    const auto lead = std::find_if(v.begin(), v.end(), [](Elt e) { return !e.is_zero(); });
    const std::size_t pc = static_cast<std::size_t>(lead - v.begin());
    const Elt inv = F_->inv(*lead);
    for (auto& e : v) e = F_->mul(e, inv);
    for (auto& row : rows_) {
        if (row[pc].is_zero()) continue;
        const Elt f = F_->neg(row[pc]);
        for (std::size_t j = 0; j < n_; ++j) row[j] = F_->add(row[j], F_->mul(f, v[j]));
    }
    pivot_row_[pc] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

int matrix_rank(const FieldCtx& F, Mat A) {
    return static_cast<int>(rref(F, A.data(), A.rows(), A.cols()).size());
}

Mat mat_inverse(const FieldCtx& F, const Mat& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw FieldError("inverse of a non-square matrix");
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = FieldCtx::one();
    }
    const auto piv = rref(F, aug.data(), n, 2 * n);
    if (piv.size() < n || piv[n - 1] != n - 1) throw FieldError("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

DicksonMat::DicksonMat(const FieldCtx& F, WordView w) : mat_(w.size(), w.size()) {
    check_len(F, w);
    const std::size_t m = w.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mat_(i, j) = F.frobenius(w[(j + m - i) % m], static_cast<unsigned>(i));
}

bool is_dickson(const FieldCtx& F, const Mat& M) {
    if (M.rows() != F.m() || M.cols() != F.m()) return false;
    return DicksonMat(F, M.row(0)).matrix() == M;
}

DicksonMat DicksonMat::from_matrix(const FieldCtx& F, const Mat& M) {
    if (!is_dickson(F, M)) throw FieldError("matrix is not a Dickson matrix");
    return DicksonMat(M);
}

Elt eval_linpoly(const FieldCtx& F, WordView w, Elt x) {
    Elt s = FieldCtx::zero();
    for (std::size_t i = 0; i < w.size(); ++i)
        s = F.add(s, F.mul(w[i], F.frobenius(x, static_cast<unsigned>(i))));
    return s;
}

std::vector<Elt> kernel(const FieldCtx& F, WordView w) {
    check_len(F, w);
    const unsigned m = F.m();
    Mat M(m, m);
    for (unsigned c = 0; c < m; ++c) {
        const auto col = F.coords(eval_linpoly(F, w, F.gen_pow(c)));
        for (unsigned r = 0; r < m; ++r) M(r, c) = col[r];
    }
    const auto piv = rref(F, M.data(), m, m);
    std::vector<bool> is_piv(m, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<Elt> basis;
    for (unsigned f = 0; f < m; ++f) {
        if (is_piv[f]) continue;
        std::vector<Elt> x(m);
        x[f] = FieldCtx::one();
        for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = F.neg(M(r, f));
        basis.push_back(F.from_coords(x));
    }
    return basis;
}

int rank(const FieldCtx& F, WordView w) {
    check_len(F, w);
    return rank_impl(F, w.data());
}

int rank_distance(const FieldCtx& F, WordView w1, WordView w2) {
    check_len(F, w1);
    check_len(F, w2);
    std::array<Elt, kMaxM> d;
    for (std::size_t i = 0; i < w1.size(); ++i) d[i] = F.sub(w1[i], w2[i]);
    return rank_impl(F, d.data());
}

DicksonMat dickson(const FieldCtx& F, WordView w) { return DicksonMat(F, w); }

Elt form_eval(const FieldCtx& F, WordView w, Elt x, Elt xprime) {
    return F.trace(F.mul(eval_linpoly(F, w, xprime), x));
}

DicksonMat dickson_mul(const FieldCtx& F, const DicksonMat& A, const DicksonMat& B) {
    return DicksonMat::from_matrix(F, mat_mul(F, A.matrix(), B.matrix()));
}

Word dickson_transpose(const FieldCtx& F, WordView w) {
    check_len(F, w);
    const std::size_t m = w.size();
    Word out = Word::zero(static_cast<unsigned>(m));
    out[0] = w[0];
    for (std::size_t i = 1; i < m; ++i) out[i] = F.frobenius(w[m - i], static_cast<unsigned>(i));
    return out;
}

AutElt AutElt::identity(const FieldCtx& F) {
    Word id = Word::zero(F.m());
    id[0] = FieldCtx::one();
    return AutElt{DicksonMat(F, id), DicksonMat(F, id), false, 0};
}

Word apply_aut(const FieldCtx& F, const AutElt& e, WordView w) {
    const auto m = static_cast<int>(F.m());
    if (matrix_rank(F, e.left.matrix()) != m || matrix_rank(F, e.right.matrix()) != m)
        throw FieldError("automorphism uses a singular Dickson matrix");
    Mat X = dickson(F, w).matrix();
    if (e.frob_power % F.degree() != 0)
        for (auto& x : X.data()) x = F.frobenius_p(x, e.frob_power);
    if (e.transpose) X = transpose(X);
    const Mat R = mat_mul(F, mat_mul(F, transpose(e.left.matrix()), X), e.right.matrix());
    return DicksonMat::from_matrix(F, R).word();
}

std::vector<Word> singer_orbit(const FieldCtx& F, WordView w) {
    check_len(F, w);
    const unsigned m = F.m();
    std::vector<Word> out;
    out.reserve(std::size_t{F.unit_order()} * F.unit_order());
    for (std::uint32_t xl = 0; xl < F.unit_order(); ++xl) {
        const Elt x = F.gen_pow(xl);
        Word base = Word::zero(m);
        for (unsigned i = 0; i < m; ++i) base[i] = F.mul(w[i], F.frobenius(x, i));
        for (std::uint32_t ll = 0; ll < F.unit_order(); ++ll) out.push_back(scale(F, F.gen_pow(ll), base));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mrd
