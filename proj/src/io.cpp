#include "mrd/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

namespace mrd {

namespace {

std::string kind_key(Component c) {
    switch (c) {
        case Component::Zero: return "zero";
        case Component::Pi: return "pi";
        case Component::J: return "J";
        case Component::A1: return "A1";
        case Component::A2: return "A2";
        case Component::Other: return "other";
    }
    return "other";
}

Component kind_from_key(const std::string& s) {
    for (Component c : {Component::Zero, Component::Pi, Component::J, Component::A1, Component::A2, Component::Other})
        if (kind_key(c) == s) return c;
    throw FormatError("unknown component kind '" + s + "'");
}

bool parse_int(std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

json field_to_json(const FieldCtx& F) {
    return {{"p", F.p()}, {"h", F.h()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    try {
        return make_field(j.at("p").get<unsigned>(), j.at("h").get<unsigned>(), j.at("m").get<unsigned>(),
                          j.at("modulus").get<std::vector<unsigned>>());
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad field description: ") + e.what());
    }
}

json elt_to_json(const FieldCtx& F, Elt x) { return F.to_coeffs(x); }

Elt elt_from_json(const FieldCtx& F, const json& j) {
    if (!j.is_array() || j.size() != F.degree()) throw FormatError("element must have h*m coefficients");
    std::vector<unsigned> c;
    c.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_unsigned() || v.get<unsigned>() >= F.p()) throw FormatError("coefficient out of range");
        c.push_back(v.get<unsigned>());
    }
    return F.from_coeffs(c);
}

json word_to_json(const FieldCtx& F, WordView w) {
    json out = json::array();
    for (Elt x : w) out.push_back(elt_to_json(F, x));
    return out;
}

Word word_from_json(const FieldCtx& F, const json& j) {
    if (!j.is_array() || j.size() != F.m()) throw FormatError("word must have m entries");
    Word w = Word::zero(F.m());
    for (unsigned i = 0; i < F.m(); ++i) w[i] = elt_from_json(F, j[i]);
    return w;
}

json point_to_json(const FieldCtx& F, const ProjPoint& P) { return word_to_json(F, P.coords); }

Elt parse_fq_element(const FieldCtx& F, const std::string& raw) {
    const std::string text = trim(raw);
    std::int64_t v = 0;
    if (parse_int(text, v)) return F.from_int(v);
    std::string_view rest;
    if (text.rfind("w^", 0) == 0)
        rest = std::string_view(text).substr(2);
    else if (text.size() > 3 && text.rfind("w<", 0) == 0 && text.back() == '>')
        rest = std::string_view(text).substr(2, text.size() - 3);
    else
        throw FieldError("cannot parse F_q element '" + text + "'");
    if (!parse_int(rest, v) || v < 0) throw FieldError("bad exponent in '" + text + "'");
    return F.pow(F.subfield_gen(), static_cast<std::uint64_t>(v));
}

std::vector<Elt> parse_fq_list(const FieldCtx& F, const std::string& text) {
    std::vector<Elt> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_fq_element(F, text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string fq_label(const FieldCtx& F, Elt x) {
    if (x.is_zero()) return "0";
    if (F.h() == 1) return std::to_string(F.to_coeffs(x).front());
    return "w^" + std::to_string(F.subfield_index_of(x) - 1);
}

json code_to_json(const RankCode& code) {
    const FieldCtx& F = code.field();
    json I = json::array();
    for (Elt a : code.index_set()) I.push_back(elt_to_json(F, a));

    std::vector<ComponentTag> kinds;
    json tags = json::array();
    for (std::size_t i = 0; i < code.size(); ++i) {
        const auto& t = code.tag(i);
        auto it = std::find(kinds.begin(), kinds.end(), t);
        if (it == kinds.end()) {
            kinds.push_back(t);
            it = kinds.end() - 1;
        }
        tags.push_back(it - kinds.begin());
    }
    json comps = json::array();
    for (const auto& t : kinds) {
        json c{{"kind", kind_key(t.kind)}};
        if (t.kind == Component::Pi || t.kind == Component::J) c["value"] = elt_to_json(F, t.value);
        comps.push_back(std::move(c));
    }
    json words = json::array();
    for (std::size_t i = 0; i < code.size(); ++i) words.push_back(word_to_json(F, code[i]));

    return {{"format", "mrd-code"},
            {"version", 1},
            {"field", field_to_json(F)},
            {"params", {{"m", F.m()}, {"q", F.q()}, {"d", code.claimed_distance()}, {"I", I}}},
            {"size", code.size()},
            {"components", comps},
            {"tags", tags},
            {"words", words}};
}

RankCode code_from_json(const json& j) {
    try {
        if (j.value("format", "") != "mrd-code") throw FormatError("not a code file");
        FieldPtr F = field_from_json(j.at("field"));
        const auto& params = j.at("params");
        if (params.at("m").get<unsigned>() != F->m() || params.at("q").get<std::uint32_t>() != F->q())
            throw FormatError("params disagree with the field description");
        std::vector<Elt> I;
        for (const auto& a : params.at("I")) I.push_back(elt_from_json(*F, a));

        std::vector<ComponentTag> kinds;
        for (const auto& c : j.at("components")) {
            ComponentTag t{kind_from_key(c.at("kind").get<std::string>()), {}};
            if (c.contains("value")) t.value = elt_from_json(*F, c.at("value"));
            kinds.push_back(t);
        }
        const auto& words_j = j.at("words");
        const auto& tags_j = j.at("tags");
        if (tags_j.size() != words_j.size()) throw FormatError("tags and words differ in length");
        std::vector<Word> words;
        std::vector<ComponentTag> tags;
        words.reserve(words_j.size());
        tags.reserve(words_j.size());
        for (std::size_t i = 0; i < words_j.size(); ++i) {
            words.push_back(word_from_json(*F, words_j[i]));
            const auto k = tags_j[i].get<std::size_t>();
            if (k >= kinds.size()) throw FormatError("tag index out of range");
            tags.push_back(kinds[k]);
        }
        return RankCode(F, params.at("d").get<int>(), std::move(I), std::move(words), std::move(tags));
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed code file: ") + e.what());
    } catch (const FieldError& e) {
        throw FormatError(std::string("invalid field data: ") + e.what());
    }
}

void write_code(std::ostream& out, const RankCode& code) { out << code_to_json(code).dump() << '\n'; }

RankCode read_code(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("cannot parse code file: ") + e.what());
    }
    return code_from_json(j);
}

void write_histogram_csv(std::ostream& out, const std::map<int, std::uint64_t>& hist) {
    out << "rank,count\n";
    for (const auto& [r, n] : hist) out << r << ',' << n << '\n';
}

}  // namespace mrd
