#include "mrd/codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>

#include "mrd/parallel.hpp"

namespace mrd {

namespace {

bool less_words(const Elt* a, const Elt* b, unsigned m) {
    return std::lexicographical_compare(a, a + m, b, b + m);
}

bool equal_words(const Elt* a, const Elt* b, unsigned m) { return std::equal(a, a + m, b); }

std::vector<std::size_t> sorted_order(const std::vector<Elt>& flat, unsigned m) {
    std::vector<std::size_t> idx(flat.size() / m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return less_words(flat.data() + x * m, flat.data() + y * m, m);
    });
    return idx;
}

std::uint64_t sat_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
            return std::numeric_limits<std::uint64_t>::max();
        r *= b;
    }
    return r;
}

void require_nonzero_subfield(const FieldCtx& F, Elt a, const char* what) {
    if (a.is_zero()) throw FieldError(std::string(what) + ": label must be nonzero");
    if (!F.in_subfield(a)) throw FieldError(std::string(what) + ": label must lie in F_q");
}

// Exponent 1 + q + ... + q^{k-1} of alpha in the k-th coordinate of pi_alpha.
Elt alpha_power(const FieldCtx& F, Elt alpha, unsigned k) {
    Elt r = FieldCtx::one();
    for (unsigned i = 0; i < k; ++i) r = F.mul(r, F.frobenius(alpha, i));
    return r;
}

// All (lambda, x) images of one generator, deduplicated.
WordSet orbit_set(const FieldCtx& F, WordView gen) {
    const unsigned m = F.m();
    std::vector<Elt> flat;
    flat.reserve(std::size_t{F.unit_order()} * F.unit_order() * m);
    for (std::uint32_t ll = 0; ll < F.unit_order(); ++ll) {
        const Elt lambda = F.gen_pow(ll);
        for (std::uint32_t xl = 0; xl < F.unit_order(); ++xl) {
            const Elt x = F.gen_pow(xl);
            for (unsigned i = 0; i < m; ++i) flat.push_back(F.mul(lambda, F.mul(gen[i], F.frobenius(x, i))));
        }
    }
    return WordSet(m, std::move(flat));
}

}  // namespace

WordSet::WordSet(unsigned m, std::vector<Elt> flat) : m_(m) {
    if (m == 0 || flat.size() % m != 0) throw FieldError("flat word buffer has the wrong length");
    const auto idx = sorted_order(flat, m);
    flat_.reserve(flat.size());
    const Elt* prev = nullptr;
    for (std::size_t i : idx) {
        const Elt* w = flat.data() + i * m;
        if (prev && equal_words(prev, w, m)) continue;
        flat_.insert(flat_.end(), w, w + m);
        prev = w;
    }
}

WordSet WordSet::from_words(unsigned m, const std::vector<Word>& words) {
    std::vector<Elt> flat;
    flat.reserve(words.size() * m);
    for (const auto& w : words) {
        if (w.size() != m) throw FieldError("word length must equal m");
        flat.insert(flat.end(), w.a.begin(), w.a.end());
    }
    return WordSet(m, std::move(flat));
}

std::optional<std::size_t> WordSet::find(WordView w) const {
    if (w.size() != m_) return std::nullopt;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (less_words(flat_.data() + mid * m_, w.data(), m_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size() && equal_words(flat_.data() + lo * m_, w.data(), m_)) return lo;
    return std::nullopt;
}

std::vector<Word> WordSet::to_words() const {
    std::vector<Word> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i]);
    return out;
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    std::vector<Elt> flat = a.flat();
    flat.insert(flat.end(), b.flat().begin(), b.flat().end());
    return WordSet(a.word_length(), std::move(flat));
}

std::size_t intersection_size(const WordSet& a, const WordSet& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += b.contains(a[i]) ? 1 : 0;
    return n;
}

std::string component_name(Component c) {
    switch (c) {
        case Component::Zero: return "ZERO";
        case Component::Pi: return "PI";
        case Component::J: return "J";
        case Component::A1: return "A1";
        case Component::A2: return "A2";
        case Component::Other: return "OTHER";
    }
    return "OTHER";
}

RankCode::RankCode(FieldPtr field, int claimed_d, std::vector<Elt> index_set, std::vector<Part> parts)
    : field_(std::move(field)), claimed_d_(claimed_d), index_set_(std::move(index_set)) {
    const unsigned m = field_->m();
    std::vector<Elt> flat;
    std::vector<ComponentTag> tags;
    for (const auto& part : parts) {
        if (part.words.word_length() != m && !part.words.empty())
            throw FieldError("component word length must equal m");
        flat.insert(flat.end(), part.words.flat().begin(), part.words.flat().end());
        tags.insert(tags.end(), part.words.size(), part.tag);
    }
    const auto idx = sorted_order(flat, m);
    std::vector<Elt> out;
    out.reserve(flat.size());
    const Elt* prev = nullptr;
    for (std::size_t i : idx) {
        const Elt* w = flat.data() + i * m;
        if (prev && equal_words(prev, w, m)) {
            ++overlaps_;
            continue;
        }
        out.insert(out.end(), w, w + m);
        tags_.push_back(tags[i]);
        prev = w;
    }
    words_ = WordSet(m);
    if (!out.empty()) words_ = WordSet(m, std::move(out));
}

RankCode::RankCode(FieldPtr field, int claimed_d, std::vector<Elt> index_set, std::vector<Word> words,
                   std::vector<ComponentTag> tags)
    : field_(std::move(field)), claimed_d_(claimed_d), index_set_(std::move(index_set)) {
    if (words.size() != tags.size()) throw FieldError("one tag per word is required");
    const unsigned m = field_->m();
    std::vector<Elt> flat;
    flat.reserve(words.size() * m);
    for (const auto& w : words) {
        if (w.size() != m) throw FieldError("word length must equal m");
        flat.insert(flat.end(), w.a.begin(), w.a.end());
    }
    const auto idx = sorted_order(flat, m);
    std::vector<Elt> out;
    const Elt* prev = nullptr;
    for (std::size_t i : idx) {
        const Elt* w = flat.data() + i * m;
        if (prev && equal_words(prev, w, m)) {
            ++overlaps_;
            continue;
        }
        out.insert(out.end(), w, w + m);
        tags_.push_back(tags[i]);
        prev = w;
    }
    words_ = WordSet(m);
    if (!out.empty()) words_ = WordSet(m, std::move(out));
}

std::map<ComponentTag, std::size_t> RankCode::component_sizes() const {
    std::map<ComponentTag, std::size_t> out;
    for (const auto& t : tags_) ++out[t];
    return out;
}

RankCode RankCode::without(std::size_t i) const {
    std::vector<Word> words;
    std::vector<ComponentTag> tags;
    for (std::size_t k = 0; k < size(); ++k) {
        if (k == i) continue;
        words.emplace_back(words_[k]);
        tags.push_back(tags_[k]);
    }
    RankCode out(field_, claimed_d_, index_set_, std::move(words), std::move(tags));
    out.warnings_ = warnings_;
    return out;
}

Word pi_generator(const FieldCtx& F, Elt alpha) {
    if (alpha.is_zero()) throw FieldError("pi generator needs a nonzero alpha");
    Word w = Word::zero(F.m());
    for (unsigned k = 0; k < F.m(); ++k) w[k] = alpha_power(F, alpha, k);
    return w;
}

Word j_generator(const FieldCtx& F, Elt alpha) {
    if (alpha.is_zero()) throw FieldError("J generator needs a nonzero alpha");
    Word w = Word::zero(F.m());
    w[0] = FieldCtx::one();
    w[F.m() - 1] = F.neg(alpha);
    return w;
}

WordSet build_pi_alpha(const FieldCtx& F, Elt alpha) { return orbit_set(F, pi_generator(F, alpha)); }

WordSet build_pi(const FieldCtx& F, Elt a) {
    require_nonzero_subfield(F, a, "pi_a");
    return build_pi_alpha(F, F.norm_fiber(a).front());
}

WordSet build_J_alpha(const FieldCtx& F, Elt alpha) { return orbit_set(F, j_generator(F, alpha)); }

WordSet build_J(const FieldCtx& F, Elt b) {
    require_nonzero_subfield(F, b, "J_b");
    return build_J_alpha(F, F.norm_fiber(b).front());
}

WordSet build_axis(const FieldCtx& F, int i) {
    if (i != 1 && i != 2) throw FieldError("axis index must be 1 or 2");
    const unsigned m = F.m();
    const unsigned pos = i == 1 ? 0 : m - 1;
    std::vector<Elt> flat;
    flat.reserve(std::size_t{F.unit_order()} * m);
    for (std::uint32_t l = 0; l < F.unit_order(); ++l) {
        for (unsigned k = 0; k < m; ++k) flat.push_back(k == pos ? F.gen_pow(l) : FieldCtx::zero());
    }
    return WordSet(m, std::move(flat));
}

RankCode build_family(FieldPtr Fp, const std::vector<Elt>& I) {
    const FieldCtx& F = *Fp;
    if (F.q() <= 2) throw FieldError("the family needs q > 2");
    if (F.m() < 3) throw FieldError("the family needs m >= 3");
    std::vector<Elt> index = I;
    std::sort(index.begin(), index.end());
    if (std::adjacent_find(index.begin(), index.end()) != index.end())
        throw FieldError("index set has repeated elements");
    for (Elt a : index) {
        if (!F.in_subfield(a)) throw FieldError("index set element is not in F_q");
        if (a.is_zero() || a == FieldCtx::one()) throw FieldError("index set must avoid 0 and 1");
    }
    std::vector<RankCode::Part> parts;
    for (Elt a : index) parts.push_back({{Component::Pi, a}, build_pi(F, a)});
    for (std::uint32_t k = 1; k < F.q(); ++k) {
        const Elt b = F.subfield_elt(k);
        if (std::binary_search(index.begin(), index.end(), b)) continue;
        parts.push_back({{Component::J, b}, build_J(F, b)});
    }
    parts.push_back({{Component::A1, {}}, build_axis(F, 1)});
    parts.push_back({{Component::A2, {}}, build_axis(F, 2)});
    parts.push_back({{Component::Zero, {}}, WordSet::from_words(F.m(), {Word::zero(F.m())})});
    RankCode code(Fp, static_cast<int>(F.m()) - 1, index, std::move(parts));
    if (index.empty())
        code.add_warning("empty index set: the family degenerates to the linear code {(x,0,...,0,y)}");
    return code;
}

RankCode build_gabidulin(FieldPtr Fp, int s) {
    const FieldCtx& F = *Fp;
    const int m = static_cast<int>(F.m());
    if (s < 0 || s > m - 1) throw FieldError("s must satisfy 0 <= s <= m-1");
    const int k = m - s;
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= F.order();
        if (total > (std::uint64_t{1} << 26)) throw FieldError("baseline code exceeds the enumeration bound");
    }
    std::vector<Elt> flat;
    flat.reserve((total - 1) * m);
    std::vector<std::uint32_t> digit(k, 0);
    for (std::uint64_t t = 1; t < total; ++t) {
        for (int i = 0; i < k; ++i) {
            if (++digit[i] < F.order()) break;
            digit[i] = 0;
        }
        for (int i = 0; i < m; ++i) flat.push_back(i < k ? Elt{digit[i]} : FieldCtx::zero());
    }
    std::vector<RankCode::Part> parts;
    parts.push_back({{Component::Zero, {}}, WordSet::from_words(F.m(), {Word::zero(F.m())})});
    if (!flat.empty()) parts.push_back({{Component::Other, {}}, WordSet(F.m(), std::move(flat))});
    return RankCode(Fp, s + 1, {}, std::move(parts));
}

std::vector<Orbit> singer_orbits(const RankCode& code) {
    const FieldCtx& F = code.field();
    const unsigned m = F.m();
    std::vector<std::uint8_t> seen(code.size(), 0);
    std::vector<Orbit> orbits;
    std::vector<Elt> base(m), img(m);
    for (std::size_t r = 0; r < code.size(); ++r) {
        if (seen[r]) continue;
        const WordView w = code[r];
        std::size_t count = 0;
        for (std::uint32_t xl = 0; xl < F.unit_order(); ++xl) {
            const Elt x = F.gen_pow(xl);
            for (unsigned i = 0; i < m; ++i) base[i] = F.mul(w[i], F.frobenius(x, i));
            for (std::uint32_t ll = 0; ll < F.unit_order(); ++ll) {
                const Elt lambda = F.gen_pow(ll);
                for (unsigned i = 0; i < m; ++i) img[i] = F.mul(lambda, base[i]);
                const auto pos = code.words().find(img);
                if (!pos) throw FieldError("code is not invariant under the Singer action");
                if (!seen[*pos]) {
                    seen[*pos] = 1;
                    ++count;
                }
            }
        }
        orbits.push_back({r, count});
    }
    return orbits;
}

bool is_singer_invariant(const RankCode& code) {
    try {
        singer_orbits(code);
        return true;
    } catch (const FieldError&) {
        return false;
    }
}

namespace {

struct Best {
    int d = std::numeric_limits<int>::max();
    std::size_t i = 0, j = 0;
    void offer(int dd, std::size_t a, std::size_t b) {
        if (dd < d || (dd == d && std::pair(a, b) < std::pair(i, j))) {
            d = dd;
            i = a;
            j = b;
        }
    }
};

}  // namespace

MinDistance min_distance(const RankCode& code, DistanceMode mode, unsigned threads) {
    const FieldCtx& F = code.field();
    const std::size_t n = code.size();
    if (n < 2) throw FieldError("minimum distance needs at least two codewords");
    std::mutex mu;
    Best best;
    std::atomic<bool> floor_hit{false};  // distance 1 cannot be beaten

    if (mode == DistanceMode::Bruteforce) {
        parallel_chunks(n, threads, 16, [&](std::size_t b, std::size_t e, unsigned) {
            Best local;
            for (std::size_t i = b; i < e && !floor_hit.load(std::memory_order_relaxed); ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const int d = rank_distance(F, code[i], code[j]);
                    if (d < local.d) {
                        local.offer(d, i, j);
                        if (d <= 1) {
                            floor_hit = true;
                            break;
                        }
                    }
                }
            std::lock_guard lock(mu);
            if (local.d != std::numeric_limits<int>::max()) best.offer(local.d, local.i, local.j);
        });
    } else {
        for (const auto& orb : singer_orbits(code)) {
            const std::size_t r = orb.representative;
            parallel_chunks(n, threads, 256, [&](std::size_t b, std::size_t e, unsigned) {
                Best local;
                for (std::size_t j = b; j < e; ++j) {
                    if (j == r) continue;
                    local.offer(rank_distance(F, code[r], code[j]), std::min(r, j), std::max(r, j));
                }
                std::lock_guard lock(mu);
                if (local.d != std::numeric_limits<int>::max()) best.offer(local.d, local.i, local.j);
            });
            if (best.d <= 1) break;
        }
    }
    return {best.d, best.i, best.j};
}

MinDistance min_distance_subset(const RankCode& code, const std::vector<std::size_t>& subset, unsigned threads) {
    const FieldCtx& F = code.field();
    const std::size_t n = subset.size();
    if (n < 2) throw FieldError("minimum distance needs at least two codewords");
    std::mutex mu;
    Best best;
    parallel_chunks(n, threads, 8, [&](std::size_t b, std::size_t e, unsigned) {
        Best local;
        for (std::size_t a = b; a < e; ++a)
            for (std::size_t c = a + 1; c < n; ++c) {
                const std::size_t i = subset[a], j = subset[c];
                local.offer(rank_distance(F, code[i], code[j]), std::min(i, j), std::max(i, j));
            }
        std::lock_guard lock(mu);
        if (local.d != std::numeric_limits<int>::max()) best.offer(local.d, local.i, local.j);
    });
    return {best.d, best.i, best.j};
}

std::map<int, std::uint64_t> distance_distribution(const RankCode& code, DistanceMode mode, unsigned threads) {
    const FieldCtx& F = code.field();
    const std::size_t n = code.size();
    const unsigned m = F.m();
    std::vector<std::uint64_t> total(m + 1, 0);
    std::mutex mu;
    if (mode == DistanceMode::Bruteforce) {
        parallel_chunks(n, threads, 16, [&](std::size_t b, std::size_t e, unsigned) {
            std::vector<std::uint64_t> local(m + 1, 0);
            for (std::size_t i = b; i < e; ++i)
                for (std::size_t j = i + 1; j < n; ++j) ++local[rank_distance(F, code[i], code[j])];
            std::lock_guard lock(mu);
            for (unsigned d = 0; d <= m; ++d) total[d] += local[d];
        });
    } else {
        for (const auto& orb : singer_orbits(code)) {
            const std::size_t r = orb.representative;
            std::vector<std::uint64_t> hist(m + 1, 0);
            parallel_chunks(n, threads, 256, [&](std::size_t b, std::size_t e, unsigned) {
                std::vector<std::uint64_t> local(m + 1, 0);
                for (std::size_t j = b; j < e; ++j)
                    if (j != r) ++local[rank_distance(F, code[r], code[j])];
                std::lock_guard lock(mu);
                for (unsigned d = 0; d <= m; ++d) hist[d] += local[d];
            });
            for (unsigned d = 0; d <= m; ++d) total[d] += hist[d] * orb.size;
        }
        for (auto& t : total) t /= 2;  // each unordered pair was seen from both ends
    }
    std::map<int, std::uint64_t> out;
    for (unsigned d = 0; d <= m; ++d)
        if (total[d] != 0) out[static_cast<int>(d)] = total[d];
    return out;
}

std::uint64_t singleton_bound(std::uint32_t q, unsigned m, int d) {
    if (d < 1 || d > static_cast<int>(m)) throw FieldError("claimed distance must lie in [1, m]");
    const std::uint64_t s = static_cast<std::uint64_t>(d - 1);
    return sat_pow(q, std::uint64_t{m} * (m - s));
}

MrdReport verify_mrd(const RankCode& code, DistanceMode mode, unsigned threads) {
    MrdReport r;
    r.size = code.size();
    r.claimed_distance = code.claimed_distance();
    r.singleton_bound = singleton_bound(code.q(), code.m(), code.claimed_distance());
    r.min_distance = code.size() >= 2 ? min_distance(code, mode, threads).distance : 0;
    r.mrd = r.size == r.singleton_bound && r.min_distance == r.claimed_distance;
    return r;
}

std::size_t span_dimension(const RankCode& code) {
    const FieldCtx& F = code.field();
    const unsigned m = F.m();
    const std::size_t dim = std::size_t{m} * m;
    EchelonBasis basis(F, dim);
    std::vector<Elt> v(dim), tmp(m);
    for (std::size_t i = 0; i < code.size() && basis.dimension() < dim; ++i) {
        const WordView w = code[i];
        for (unsigned k = 0; k < m; ++k) {
            F.coords(w[k], tmp);
            std::copy(tmp.begin(), tmp.end(), v.begin() + k * m);
        }
        basis.insert(v);
    }
    return basis.dimension();
}

std::optional<LinearityWitness> linearity_witness(const RankCode& code) {
    const FieldCtx& F = code.field();
    const std::size_t k = span_dimension(code);
    if (code.size() == sat_pow(F.q(), k)) return std::nullopt;

    const auto scalars = F.subfield_elements();
    auto check = [&](std::size_t i, std::size_t j) -> std::optional<LinearityWitness> {
        for (Elt c : scalars) {
            const Word s = add(F, code[i], scale(F, c, code[j]));
            if (!code.contains(s)) return LinearityWitness{Word(code[i]), Word(code[j]), c};
        }
        return std::nullopt;
    };
    // A word of A_2 against a word of some pi_a comes first.
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code.tag(i).kind != Component::A2) continue;
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (code.tag(j).kind != Component::Pi) continue;
            if (auto w = check(i, j)) return w;
        }
    }
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = 0; j < code.size(); ++j)
            if (auto w = check(i, j)) return w;
    return std::nullopt;  // unreachable: the size test already showed non-closure
}

}  // namespace mrd
