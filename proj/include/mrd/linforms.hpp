#pragma once

// Words (a_0, ..., a_{m-1}) over F_{q^m}. One word is at the same time the
// linearized polynomial sum a_i x^{q^i}, the first row of a Dickson matrix
// and a codeword.

#include <compare>
#include <span>
#include <vector>

#include "mrd/gfield.hpp"

namespace mrd {

using WordView = std::span<const Elt>;

struct Word {
    std::vector<Elt> a;

    Word() = default;
    explicit Word(std::vector<Elt> coeffs) : a(std::move(coeffs)) {}
    explicit Word(WordView v) : a(v.begin(), v.end()) {}
    static Word zero(unsigned m) { return Word(std::vector<Elt>(m)); }

    std::size_t size() const { return a.size(); }
    Elt operator[](std::size_t i) const { return a[i]; }
    Elt& operator[](std::size_t i) { return a[i]; }
    operator WordView() const { return a; }
    bool is_zero() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

Word add(const FieldCtx& F, WordView u, WordView v);
Word sub(const FieldCtx& F, WordView u, WordView v);
Word scale(const FieldCtx& F, Elt c, WordView v);

/// Dense matrix over F_{q^m}, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elt operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Elt& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::span<const Elt> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }
    std::span<Elt> data() { return e_; }
    std::span<const Elt> data() const { return e_; }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elt> e_;
};

Mat mat_mul(const FieldCtx& F, const Mat& A, const Mat& B);
Mat transpose(const Mat& A);
/// Rank over F_{q^m} (or over F_q when all entries lie in F_q).
int matrix_rank(const FieldCtx& F, Mat A);
/// Inverse over F_{q^m}; throws FieldError when singular.
Mat mat_inverse(const FieldCtx& F, const Mat& A);
std::vector<Elt> mat_vec(const FieldCtx& F, const Mat& A, std::span<const Elt> v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(const FieldCtx& F, std::span<Elt> a, std::size_t rows, std::size_t cols);

/// Reduced echelon basis of a subspace of K^n, grown one vector at a time.
class EchelonBasis {
public:
    EchelonBasis(const FieldCtx& F, std::size_t n) : F_(&F), n_(n), pivot_row_(n, -1) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }
    /// Reduces v against the basis; true when v lies in the span.
    bool reduce(std::vector<Elt>& v) const;
    bool contains(std::vector<Elt> v) const { return reduce(v); }
    /// Returns true when the dimension grew.
    bool insert(std::vector<Elt> v);

private:
    const FieldCtx* F_;
    std::size_t n_;
    std::vector<std::vector<Elt>> rows_;
    std::vector<int> pivot_row_;
};

/// m x m Dickson matrix: entry (i, j) is a_{j-i mod m}^{q^i} (0-based).
class DicksonMat {
public:
    DicksonMat(const FieldCtx& F, WordView w);
    /// Accepts a general matrix only if it has the Dickson pattern.
    static DicksonMat from_matrix(const FieldCtx& F, const Mat& M);

    const Mat& matrix() const { return mat_; }
    Word word() const { return Word(mat_.row(0)); }
    std::size_t size() const { return mat_.rows(); }

    friend bool operator==(const DicksonMat&, const DicksonMat&) = default;

private:
    explicit DicksonMat(Mat M) : mat_(std::move(M)) {}
    Mat mat_;
};

bool is_dickson(const FieldCtx& F, const Mat& M);

Elt eval_linpoly(const FieldCtx& F, WordView w, Elt x);
/// F_q-basis of {x : L_w(x) = 0}, from the reduced echelon form of the
/// matrix of L_w in the basis 1, g, ..., g^{m-1}.
std::vector<Elt> kernel(const FieldCtx& F, WordView w);
/// m - dim ker L_w.
int rank(const FieldCtx& F, WordView w);
/// Rank of w1 - w2 without materialising the difference.
int rank_distance(const FieldCtx& F, WordView w1, WordView w2);
DicksonMat dickson(const FieldCtx& F, WordView w);
/// Tr(L_w(x') x).
Elt form_eval(const FieldCtx& F, WordView w, Elt x, Elt xprime);
/// Product A*B; as words this is composition L_A o L_B.
DicksonMat dickson_mul(const FieldCtx& F, const DicksonMat& A, const DicksonMat& B);
/// The word whose Dickson matrix is the transpose of dickson(w).
Word dickson_transpose(const FieldCtx& F, WordView w);

/// Element of (B x B) x| <t> x| Aut acting on Dickson matrices as
///   M -> left^T * t(M^{frob}) * right
/// where M^{frob} raises every entry to p^frob_power and t is transposition
/// when the flag is set.
struct AutElt {
    DicksonMat left;
    DicksonMat right;
    bool transpose = false;
    unsigned frob_power = 0;

    static AutElt identity(const FieldCtx& F);
};

Word apply_aut(const FieldCtx& F, const AutElt& e, WordView w);

/// Image of w under (lambda, x) -> (lambda x^{q^i} a_i)_i for all nonzero
/// lambda, x: the orbit under the product of two Singer groups. Sorted.
std::vector<Word> singer_orbit(const FieldCtx& F, WordView w);

}  // namespace mrd
