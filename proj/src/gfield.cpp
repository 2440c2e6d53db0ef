#include "mrd/gfield.hpp"

#include <algorithm>
#include <array>

namespace mrd {

namespace {

// Polynomials over F_p as little-endian coefficient vectors; reduction is
// modulo a monic modulus of degree n.
using Poly = std::vector<unsigned>;

Poly mulmod(const Poly& a, const Poly& b, std::span<const unsigned> f, unsigned p) {
    const std::size_t n = f.size() - 1;
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
    for (std::size_t k = 2 * n - 1; k >= n; --k) {
        const std::uint64_t c = prod[k] % p;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= n; ++i)
            prod[k - n + i] = (prod[k - n + i] + (p - c) * f[i]) % p;
    }
    Poly out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<unsigned>(prod[i] % p);
    return out;
}

Poly powmod_x(std::uint64_t e, std::span<const unsigned> f, unsigned p) {
    const std::size_t n = f.size() - 1;
    Poly result(n, 0), base(n, 0);
    result[0] = 1;
    if (n == 1) {
        base[0] = (p - f[0] % p) % p;  // x = -c_0
    } else {
        base[1] = 1;
    }
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](unsigned c) { return c == 0; });
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct TableEntry {
    unsigned p, n;
    std::array<unsigned, 8> low;  // c_0 .. c_{n-1}
};

// Output of search_primitive_modulus for the common desk-scale fields,
// frozen so that a change to the search cannot silently change a field.
constexpr TableEntry kModulusTable[] = {
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 6, {1, 1, 0, 0, 0, 0}},
    {3, 2, {2, 1}},
    {3, 3, {1, 2, 0}},
    {3, 4, {2, 1, 0, 0}},
    {3, 6, {2, 1, 0, 0, 0, 0}},
    {5, 2, {2, 1}},
    {5, 3, {2, 3, 0}},
    {5, 4, {2, 2, 1, 0}},
    {7, 2, {3, 1}},
    {7, 3, {2, 3, 0}},
};

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_primitive(unsigned p, std::span<const unsigned> f) {
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    if (f[0] % p == 0) return false;
    const std::uint64_t units = ipow(p, n) - 1;
    if (!is_one(powmod_x(units, f, p))) return false;
    for (std::uint64_t r : prime_factors(units))
        if (is_one(powmod_x(units / r, f, p))) return false;
    return true;
}

std::vector<unsigned> search_primitive_modulus(unsigned p, unsigned n) {
    const std::uint64_t limit = ipow(p, n);
    for (std::uint64_t k = 1; k < limit; ++k) {
        std::vector<unsigned> f(n + 1);
        std::uint64_t t = k;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        f[n] = 1;
        if (is_primitive(p, f)) return f;
    }
    throw FieldError("no primitive polynomial found");
}

std::vector<unsigned> default_modulus(unsigned p, unsigned n) {
    for (const auto& e : kModulusTable) {
        if (e.p == p && e.n == n) {
            std::vector<unsigned> f(e.low.begin(), e.low.begin() + n);
            f.push_back(1);
            return f;
        }
    }
    return search_primitive_modulus(p, n);
}

FieldCtx::FieldCtx(unsigned p, unsigned h, unsigned m, std::optional<std::vector<unsigned>> modulus)
    : p_(p), h_(h), m_(m), n_(h * m) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (h < 1) throw FieldError("h must be >= 1");
    if (m < 2) throw FieldError("m must be >= 2");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n_; ++i) {
        order *= p;
        if (order > kMaxFieldOrder) throw FieldError("field order exceeds the desk-scale bound 2^24");
    }
    order_ = static_cast<std::uint32_t>(order);
    units_ = order_ - 1;
    q_ = static_cast<std::uint32_t>(ipow(p, h));
    sub_index_ = units_ / (q_ - 1);

    if (modulus) {
        if (modulus->size() != n_ + 1)
            throw FieldError("modulus must have degree h*m = " + std::to_string(n_));
        for (unsigned c : *modulus)
            if (c >= p) throw FieldError("modulus coefficient out of range");
        if (modulus->back() != 1) throw FieldError("modulus must be monic");
        if (!is_primitive(p, *modulus)) throw FieldError("modulus is not a primitive polynomial");
        modulus_ = *modulus;
    } else {
        modulus_ = default_modulus(p, n_);
    }

    qpow_.resize(m_);
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < m_; ++i) {
        qpow_[i] = acc % units_;
        acc = (acc * q_) % units_;
    }
    build_tables();
    build_coords();
    conj_.resize(std::size_t{m_} * m_);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned c = 0; c < m_; ++c) conj_[i * m_ + c] = frobenius(gen_pow(c), i);
}

void FieldCtx::build_tables() {
    exp_.assign(units_, 0);
    log_.assign(order_, 0);
    std::vector<unsigned> cur(n_, 0);
    cur[0] = 1;
    std::vector<std::uint32_t> place(n_);
    place[0] = 1;
    for (unsigned i = 1; i < n_; ++i) place[i] = place[i - 1] * p_;
    auto pack = [&](const std::vector<unsigned>& v) {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) r += v[i] * place[i];
        return r;
    };
    for (std::uint32_t k = 0; k < units_; ++k) {
        const std::uint32_t packed = pack(cur);
        if (packed == 0 || (k > 0 && log_[packed] != 0) || (k > 0 && packed == 1))
            throw FieldError("modulus does not generate the full multiplicative group");
        exp_[k] = packed;
        log_[packed] = k + 1;
        // multiply by t
        const unsigned top = cur[n_ - 1];
        for (unsigned i = n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < n_; ++i) cur[i] = (cur[i] + (p_ - top) * modulus_[i]) % p_;
    }
    zech_.assign(units_, 0);
    for (std::uint32_t k = 0; k < units_; ++k) {
        std::uint32_t packed = exp_[k];
        const unsigned c0 = packed % p_;
        packed = packed - c0 + (c0 + 1) % p_;
        zech_[k] = log_[packed];
    }
    neg_one_log_ = (p_ == 2) ? 0 : units_ / 2;
}

void FieldCtx::build_coords() {
    // Enumerate every F_q-combination of 1, g, ..., g^{m-1}; each element
    // must be hit exactly once for this to be a basis.
    std::vector<Elt> by_tuple(order_);
    coords_.assign(order_, 0);
    std::vector<std::uint8_t> seen(order_, 0);
    seen[0] = 1;
    std::uint32_t place = 1;
    unsigned top = 0;
    for (std::uint32_t t = 1; t < order_; ++t) {
        if (t == place * q_) {
            place *= q_;
            ++top;
        }
        const std::uint32_t d = t / place;
        const std::uint32_t rest = t - d * place;
        const Elt e = add(by_tuple[rest], mul(subfield_elt(d), gen_pow(top)));
        by_tuple[t] = e;
        if (seen[e.code]) throw FieldError("powers of g do not form an F_q-basis");
        seen[e.code] = 1;
        coords_[e.code] = t;
    }
}

Elt FieldCtx::from_int(std::int64_t r) const {
    std::int64_t v = r % static_cast<std::int64_t>(p_);
    if (v < 0) v += p_;
    if (v == 0) return zero();
    return Elt{log_[static_cast<std::uint32_t>(v)]};
}

Elt FieldCtx::pow(Elt a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    const std::uint64_t l = (std::uint64_t{a.code - 1} * (e % units_)) % units_;
    return Elt{static_cast<std::uint32_t>(l) + 1};
}

Elt FieldCtx::frobenius_p(Elt x, unsigned k) const {
    k %= n_;
    std::uint64_t e = 1;
    for (unsigned i = 0; i < k; ++i) e = (e * p_) % units_;
    return pow(x, e);
}

Elt FieldCtx::trace(Elt x) const {
    Elt s = zero();
    for (unsigned i = 0; i < m_; ++i) s = add(s, frobenius(x, i));
    return s;
}

Elt FieldCtx::norm(Elt x) const {
    if (x.is_zero()) return x;
    const std::uint64_t l = (std::uint64_t{x.code - 1} * sub_index_) % units_;
    return Elt{static_cast<std::uint32_t>(l) + 1};
}

std::vector<Elt> FieldCtx::norm_fiber(Elt a) const {
    if (a.is_zero()) throw FieldError("norm fiber of zero requested");
    if (!in_subfield(a)) throw FieldError("norm fiber target is not in F_q");
    // N(g^k) = g^{k*S} with S = (q^m-1)/(q-1); solve k*S = log(a) mod q^m-1.
    const std::uint32_t target = (a.code - 1) / sub_index_;
    std::vector<Elt> out;
    out.reserve(sub_index_);
    for (std::uint32_t k = 0; k < units_; ++k)
        if (k % (q_ - 1) == target) out.push_back(Elt{k + 1});
    return out;
}

std::vector<Elt> FieldCtx::subfield_elements() const {
    std::vector<Elt> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = subfield_elt(i);
    return out;
}

std::vector<unsigned> FieldCtx::to_coeffs(Elt x) const {
    std::vector<unsigned> out(n_, 0);
    if (x.is_zero()) return out;
    std::uint32_t packed = exp_[x.code - 1];
    for (unsigned i = 0; i < n_; ++i) {
        out[i] = packed % p_;
        packed /= p_;
    }
    return out;
}

Elt FieldCtx::from_coeffs(std::span<const unsigned> coeffs) const {
    if (coeffs.size() != n_) throw FieldError("element must have h*m coefficients");
    std::uint32_t packed = 0, place = 1;
    for (unsigned i = 0; i < n_; ++i) {
        if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
        packed += coeffs[i] * place;
        place *= p_;
    }
    return packed == 0 ? zero() : Elt{log_[packed]};
}

Elt FieldCtx::from_coords(std::span<const Elt> c) const {
    if (c.size() != m_) throw FieldError("coordinate vector must have length m");
    Elt s = zero();
    for (unsigned k = 0; k < m_; ++k) {
        if (!in_subfield(c[k])) throw FieldError("coordinate not in F_q");
        s = add(s, mul(c[k], gen_pow(k)));
    }
    return s;
}

std::vector<Elt> FieldCtx::elements() const {
    std::vector<Elt> out(order_);
    for (std::uint32_t c = 0; c < order_; ++c) out[c] = Elt{c};
    return out;
}

FieldPtr make_field(unsigned p, unsigned h, unsigned m, std::optional<std::vector<unsigned>> modulus) {
    return std::make_shared<const FieldCtx>(p, h, m, std::move(modulus));
}

}  // namespace mrd
