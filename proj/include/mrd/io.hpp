#pragma once

// Text forms: field descriptions, elements as little-endian F_p coefficient
// vectors, code files (JSON) and distance histograms (CSV).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mrd/codes.hpp"
#include "mrd/geometry.hpp"

namespace mrd {

using nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json field_to_json(const FieldCtx& F);
FieldPtr field_from_json(const json& j);

json elt_to_json(const FieldCtx& F, Elt x);
Elt elt_from_json(const FieldCtx& F, const json& j);
json word_to_json(const FieldCtx& F, WordView w);
Word word_from_json(const FieldCtx& F, const json& j);
json point_to_json(const FieldCtx& F, const ProjPoint& P);

/// F_q element grammar: a plain integer is a residue mod p; "w^k" or "w<k>"
/// is the k-th power of the generator of F_q*.
Elt parse_fq_element(const FieldCtx& F, const std::string& text);
/// Comma separated list in the same grammar; empty text gives an empty list.
std::vector<Elt> parse_fq_list(const FieldCtx& F, const std::string& text);
/// Inverse of parse_fq_element: residues for prime q, "w^k" otherwise.
std::string fq_label(const FieldCtx& F, Elt x);

json code_to_json(const RankCode& code);
RankCode code_from_json(const json& j);
void write_code(std::ostream& out, const RankCode& code);
RankCode read_code(std::istream& in);

void write_histogram_csv(std::ostream& out, const std::map<int, std::uint64_t>& hist);

}  // namespace mrd
