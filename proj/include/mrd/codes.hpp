#pragma once

// Rank-distance codes as sets of words, the non-linear family built from
// pi_a, J_b, A_1, A_2 and the zero word, and a Delsarte-Gabidulin baseline.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mrd/gfield.hpp"
#include "mrd/linforms.hpp"

namespace mrd {

/// Sorted, duplicate-free set of words of a fixed length, stored flat.
class WordSet {
public:
    WordSet() = default;
    explicit WordSet(unsigned m) : m_(m) {}
    /// Sorts and deduplicates.
    WordSet(unsigned m, std::vector<Elt> flat);
    static WordSet from_words(unsigned m, const std::vector<Word>& words);

    unsigned word_length() const { return m_; }
    std::size_t size() const { return m_ == 0 ? 0 : flat_.size() / m_; }
    bool empty() const { return flat_.empty(); }
    WordView operator[](std::size_t i) const { return {flat_.data() + i * m_, m_}; }
    bool contains(WordView w) const { return find(w).has_value(); }
    std::optional<std::size_t> find(WordView w) const;
    std::vector<Word> to_words() const;
    const std::vector<Elt>& flat() const { return flat_; }

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    unsigned m_ = 0;
    std::vector<Elt> flat_;
};

WordSet set_union(const WordSet& a, const WordSet& b);
std::size_t intersection_size(const WordSet& a, const WordSet& b);

enum class Component : std::uint8_t { Zero, Pi, J, A1, A2, Other };

/// Provenance of a codeword. `value` is the F_q label of Pi/J components.
struct ComponentTag {
    Component kind = Component::Other;
    Elt value{};

    friend bool operator==(const ComponentTag&, const ComponentTag&) = default;
    friend auto operator<=>(const ComponentTag&, const ComponentTag&) = default;
};

std::string component_name(Component c);

class RankCode {
public:
    struct Part {
        ComponentTag tag;
        WordSet words;
    };

    /// Unites the parts. Words claimed by more than one part keep the first
    /// tag and are counted in overlaps().
    RankCode(FieldPtr field, int claimed_d, std::vector<Elt> index_set, std::vector<Part> parts);
    /// Builds directly from words and parallel tags, e.g. after reading a file.
    RankCode(FieldPtr field, int claimed_d, std::vector<Elt> index_set, std::vector<Word> words,
             std::vector<ComponentTag> tags);

    const FieldCtx& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    unsigned m() const { return field_->m(); }
    std::uint32_t q() const { return field_->q(); }
    int claimed_distance() const { return claimed_d_; }
    const std::vector<Elt>& index_set() const { return index_set_; }
    const WordSet& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    WordView operator[](std::size_t i) const { return words_[i]; }
    const ComponentTag& tag(std::size_t i) const { return tags_[i]; }
    const std::vector<ComponentTag>& tags() const { return tags_; }
    bool contains(WordView w) const { return words_.contains(w); }
    std::size_t overlaps() const { return overlaps_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }
    /// Number of words carrying each tag.
    std::map<ComponentTag, std::size_t> component_sizes() const;

    /// Copy without the word at position i.
    RankCode without(std::size_t i) const;

private:
    FieldPtr field_;
    int claimed_d_;
    std::vector<Elt> index_set_;
    WordSet words_;
    std::vector<ComponentTag> tags_;
    std::size_t overlaps_ = 0;
    std::vector<std::string> warnings_;
};

/// Word set {(lambda x, lambda alpha x^q, ..., lambda alpha^{1+...+q^{m-2}} x^{q^{m-1}})}
/// for the generator alpha of the given norm class.
Word pi_generator(const FieldCtx& F, Elt alpha);
/// (1, 0, ..., 0, -alpha).
Word j_generator(const FieldCtx& F, Elt alpha);

/// pi_a, using the first alpha with N(alpha) = a.
WordSet build_pi(const FieldCtx& F, Elt a);
/// pi_alpha for an explicit alpha.
WordSet build_pi_alpha(const FieldCtx& F, Elt alpha);
WordSet build_J(const FieldCtx& F, Elt b);
WordSet build_J_alpha(const FieldCtx& F, Elt alpha);
/// A_1 (i = 1) or A_2 (i = 2).
WordSet build_axis(const FieldCtx& F, int i);

/// Pi_I u Gamma_I u A_1 u A_2 u {0} with claimed minimum distance m - 1.
RankCode build_family(FieldPtr F, const std::vector<Elt>& I);
/// Words supported on positions 0 .. m-s-1: linear, minimum distance s + 1.
RankCode build_gabidulin(FieldPtr F, int s);

enum class DistanceMode { Bruteforce, Orbit };

struct MinDistance {
    int distance = 0;
    std::size_t first = 0, second = 0;  // a closest pair, as code indices
};

/// Orbits of the code under the Singer action (lambda, x). Throws if the
/// code is not a union of orbits.
struct Orbit {
    std::size_t representative;
    std::size_t size;
};
std::vector<Orbit> singer_orbits(const RankCode& code);
bool is_singer_invariant(const RankCode& code);

/// threads == 0 picks the hardware concurrency.
MinDistance min_distance(const RankCode& code, DistanceMode mode, unsigned threads = 0);
std::map<int, std::uint64_t> distance_distribution(const RankCode& code,
                                                   DistanceMode mode = DistanceMode::Bruteforce,
                                                   unsigned threads = 0);

/// Minimum distance over a subset of code indices, exhaustively.
MinDistance min_distance_subset(const RankCode& code, const std::vector<std::size_t>& subset,
                                unsigned threads = 0);

struct MrdReport {
    std::size_t size = 0;
    std::uint64_t singleton_bound = 0;
    int claimed_distance = 0;
    int min_distance = 0;
    bool mrd = false;
};

std::uint64_t singleton_bound(std::uint32_t q, unsigned m, int d);
MrdReport verify_mrd(const RankCode& code, DistanceMode mode = DistanceMode::Bruteforce,
                     unsigned threads = 0);

struct LinearityWitness {
    Word w1, w2;
    Elt c;
};

/// F_q-dimension of the span of the code words.
std::size_t span_dimension(const RankCode& code);
/// A pair and scalar with w1 + c*w2 outside the code, or nothing when the
/// code is an F_q-subspace.
std::optional<LinearityWitness> linearity_witness(const RankCode& code);

}  // namespace mrd
