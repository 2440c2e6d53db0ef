#pragma once

// Finite-field tower F_p <= F_q <= F_{q^m}, q = p^h, backed by discrete-log
// and Zech-logarithm tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrd {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element of F_{q^m}. Code 0 is zero, code k+1 is g^k for the fixed
/// primitive element g, so comparing codes gives the canonical order
/// 0, g^0, g^1, ...
struct Elt {
    std::uint32_t code = 0;

    constexpr bool is_zero() const { return code == 0; }
    friend constexpr auto operator<=>(Elt, Elt) = default;
};

/// Largest supported field order p^{hm}.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

class FieldCtx {
public:
    /// Builds F_{p^{hm}}. Without a modulus the built-in default is used.
    /// Coefficients are little-endian over F_p and include the leading 1.
    FieldCtx(unsigned p, unsigned h, unsigned m,
             std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned p() const { return p_; }
    unsigned h() const { return h_; }
    unsigned m() const { return m_; }
    unsigned degree() const { return n_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t unit_order() const { return units_; }
    /// (q^m - 1)/(q - 1); F_q* is the subgroup of exponents divisible by it.
    std::uint32_t subfield_index() const { return sub_index_; }
    const std::vector<unsigned>& modulus() const { return modulus_; }

    static constexpr Elt zero() { return Elt{0}; }
    static constexpr Elt one() { return Elt{1}; }
    Elt gen() const { return units_ == 1 ? one() : Elt{2}; }
    Elt gen_pow(std::int64_t k) const {
        std::int64_t r = k % static_cast<std::int64_t>(units_);
        if (r < 0) r += units_;
        return Elt{static_cast<std::uint32_t>(r) + 1};
    }
    /// Discrete log base g; x must be nonzero.
    std::uint32_t log(Elt x) const {
        if (x.is_zero()) throw FieldError("log of zero");
        return x.code - 1;
    }
    /// The residue r mod p, as an element of the prime field.
    Elt from_int(std::int64_t r) const;

    Elt add(Elt a, Elt b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::uint32_t la = a.code - 1, lb = b.code - 1;
        if (la > lb) std::swap(la, lb);
        const std::uint32_t z = zech_[lb - la];
        if (z == 0) return zero();
        std::uint32_t r = la + (z - 1);
        if (r >= units_) r -= units_;
        return Elt{r + 1};
    }
    Elt neg(Elt a) const {
        if (a.is_zero()) return a;
        std::uint32_t r = (a.code - 1) + neg_one_log_;
        if (r >= units_) r -= units_;
        return Elt{r + 1};
    }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a.is_zero() || b.is_zero()) return zero();
        std::uint32_t r = (a.code - 1) + (b.code - 1);
        if (r >= units_) r -= units_;
        return Elt{r + 1};
    }
    Elt inv(Elt a) const {
        if (a.is_zero()) throw FieldError("inverse of zero");
        const std::uint32_t l = a.code - 1;
        return Elt{(l == 0 ? 0 : units_ - l) + 1};
    }
    Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
    Elt pow(Elt a, std::uint64_t e) const;

    /// x^{q^i}; i is reduced mod m.
    Elt frobenius(Elt x, unsigned i) const {
        if (x.is_zero()) return x;
        const std::uint64_t l = (std::uint64_t{x.code - 1} * qpow_[i % m_]) % units_;
        return Elt{static_cast<std::uint32_t>(l) + 1};
    }
    /// (g^c)^{q^i} for 0 <= i, c < m.
    Elt basis_conjugate(unsigned c, unsigned i) const { return conj_[i * m_ + c]; }
    /// x^{p^k}; k is reduced mod hm.
    Elt frobenius_p(Elt x, unsigned k) const;
    Elt trace(Elt x) const;
    Elt norm(Elt x) const;
    bool in_subfield(Elt x) const { return x.is_zero() || (x.code - 1) % sub_index_ == 0; }
    /// All x with N(x) = a, ascending by discrete log.
    std::vector<Elt> norm_fiber(Elt a) const;

    /// Generator of F_q*, namely g^{(q^m-1)/(q-1)}.
    Elt subfield_gen() const { return gen_pow(sub_index_); }
    /// F_q elements indexed 0 -> 0, k+1 -> subfield_gen()^k.
    Elt subfield_elt(std::uint32_t idx) const {
        return idx == 0 ? zero() : Elt{(idx - 1) * sub_index_ + 1};
    }
    std::uint32_t subfield_index_of(Elt x) const {
        if (!in_subfield(x)) throw FieldError("element not in F_q");
        return x.is_zero() ? 0 : (x.code - 1) / sub_index_ + 1;
    }
    std::vector<Elt> subfield_elements() const;

    std::vector<unsigned> to_coeffs(Elt x) const;
    Elt from_coeffs(std::span<const unsigned> coeffs) const;

    /// Coordinates over F_q in the basis 1, g, ..., g^{m-1}.
    void coords(Elt x, std::span<Elt> out) const {
        std::uint32_t packed = coords_[x.code];
        for (unsigned k = 0; k < m_; ++k) {
            out[k] = subfield_elt(packed % q_);
            packed /= q_;
        }
    }
    std::vector<Elt> coords(Elt x) const {
        std::vector<Elt> out(m_);
        coords(x, out);
        return out;
    }
    Elt from_coords(std::span<const Elt> c) const;

    /// Every element in canonical order.
    std::vector<Elt> elements() const;

private:
    void build_tables();
    void build_coords();

    unsigned p_, h_, m_, n_;
    std::uint32_t q_, order_, units_, sub_index_;
    std::uint32_t neg_one_log_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint32_t> exp_;     // log -> packed base-p coefficients
    std::vector<std::uint32_t> log_;     // packed -> code
    std::vector<std::uint32_t> zech_;    // k -> code of 1 + g^k
    std::vector<std::uint32_t> coords_;  // code -> packed base-q F_q indices
    std::vector<std::uint64_t> qpow_;    // q^i mod (q^m - 1)
    std::vector<Elt> conj_;              // (g^c)^{q^i}, row i
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

FieldPtr make_field(unsigned p, unsigned h, unsigned m,
                    std::optional<std::vector<unsigned>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

/// Deterministic default modulus of degree n over F_p: the table entry when
/// one exists, else the first primitive monic polynomial whose low
/// coefficients (c_0, ..., c_{n-1}) read as a little-endian base-p integer
/// are smallest.
std::vector<unsigned> default_modulus(unsigned p, unsigned n);

/// Same search without the table, exposed for testing the table.
std::vector<unsigned> search_primitive_modulus(unsigned p, unsigned n);

/// Returns true iff the monic polynomial is primitive over F_p.
bool is_primitive(unsigned p, std::span<const unsigned> modulus);

}  // namespace mrd
