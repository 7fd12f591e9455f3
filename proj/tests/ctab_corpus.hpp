#pragma once

// Generated tables and structured mutations shared by the ctab tests and the
// acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "spinfeit/ctab.hpp"
#include "spinfeit/ordchar.hpp"
#include "spinfeit/smallgroups.hpp"
#include "spinfeit/spinchar.hpp"

namespace spinfeit::corpus {

inline std::vector<CharacterTable> tables() {
    std::vector<CharacterTable> out;
    for (int n = 1; n <= 6; ++n) out.push_back(sn_table(n));
    for (int n = 3; n <= 6; ++n) out.push_back(an_table(n));
    for (int n = 2; n <= 6; ++n) out.push_back(full_table(SpinKind::CoverS, n));
    for (int n = 4; n <= 6; ++n) out.push_back(full_table(SpinKind::CoverA, n));
    for (std::int64_t n : {1, 4, 7}) out.push_back(cyclic_table(n));
    for (std::int64_t n : {5, 9}) out.push_back(dihedral_table(n));
    for (std::int64_t q : {4, 8}) out.push_back(sl2_even_table(q));
    out.push_back(frobenius_half(7).table);
    out.push_back(metacyclic_table(Metacyclic{7, 3, 2, 2, 1}).table);
    return out;
}

struct Mutation {
    std::string what;
    std::string text;
};

inline std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::size_t b = 0;
    while (b < s.size()) {
        std::size_t e = s.find('\n', b);
        if (e == std::string::npos) e = s.size();
        out.push_back(s.substr(b, e - b));
        b = e + 1;
    }
    return out;
}

inline std::string join_lines(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& l : v) s += l + "\n";
    return s;
}

// Mutations that each break a table invariant (sizes, orthogonality, power
// maps, shape) or the syntax. Every one must be rejected.
inline std::vector<Mutation> breaking_mutations(const CharacterTable& t) {
    std::vector<Mutation> out;
    const std::string base = write_ctab(t);
    const auto lines = split_lines(base);
    const std::size_t first_class = 4, first_char = 4 + static_cast<std::size_t>(t.num_classes());
    auto with_line = [&](std::size_t i, std::string l) {
        auto v = lines;
        v[i] = std::move(l);
        return join_lines(v);
    };
    auto edit_class = [&](int c, auto&& f) {
        ClassInfo ci = t.classes[static_cast<std::size_t>(c)];
        f(ci);
        std::string l = "class " + std::to_string(c) + " size=" + std::to_string(ci.size) + " order=" + std::to_string(ci.order);
        for (const auto& [p, d] : ci.power) l += " pow" + std::to_string(p) + "=" + std::to_string(d);
        return with_line(first_class + static_cast<std::size_t>(c), l);
    };
    auto edit_value = [&](int chi, int cls, const CycloNumber& v) {
        std::string l = "char " + std::to_string(chi);
        for (int c = 0; c < t.num_classes(); ++c) l += " " + (c == cls ? v : t.value(chi, c)).to_string();
        return with_line(first_char + static_cast<std::size_t>(chi), l);
    };
    const int last = t.num_classes() - 1;

    out.push_back({"size +1", edit_class(last, [](ClassInfo& ci) { ci.size += 1; })});
    out.push_back({"group order +1", with_line(2, "order " + std::to_string(t.group_order + 1))});
    out.push_back({"exponent *2", with_line(3, "exponent " + std::to_string(t.exponent * 2))});
    if (t.num_classes() > 1) {
        out.push_back({"identity size", edit_class(0, [](ClassInfo& ci) { ci.size = 2; })});
        out.push_back({"value +1 off the identity", edit_value(t.num_chars() - 1, last, t.value(t.num_chars() - 1, last) + 1)});
        out.push_back({"degree +1", edit_value(t.num_chars() - 1, 0, t.value(t.num_chars() - 1, 0) + 1)});
        // A pow map onto a class of the wrong order, or out of range when every class has the same order.
        for (int c = 1; c < t.num_classes(); ++c) {
            const auto& ci = t.classes[static_cast<std::size_t>(c)];
            if (ci.power.empty()) continue;
            const auto p = ci.power.begin()->first;
            const std::int64_t want = ci.order / std::gcd(ci.order, p);
            int bad = t.num_classes();
            for (int d = 0; d < t.num_classes(); ++d)
                if (t.classes[static_cast<std::size_t>(d)].order != want) {
                    bad = d;
                    break;
                }
            out.push_back({"pow target", edit_class(c, [&](ClassInfo& x) { x.power[p] = bad; })});
            out.push_back({"pow missing", edit_class(c, [&](ClassInfo& x) { x.power.erase(p); })});
            break;
        }
        out.push_back({"pow for a foreign prime", edit_class(last, [](ClassInfo& ci) { ci.power[9973] = 0; })});
        auto no_char = lines;
        no_char.pop_back();
        out.push_back({"missing char", join_lines(no_char)});
        auto dup_row = lines;
        dup_row.back() = "char " + std::to_string(t.num_chars() - 1) + lines[first_char].substr(lines[first_char].find(' ', 5));
        out.push_back({"repeated row", join_lines(dup_row)});
    }
    out.push_back({"missing value", with_line(first_char, lines[first_char].substr(0, lines[first_char].rfind(' ')))});
    out.push_back({"extra value", with_line(first_char, lines[first_char] + " 1")});
    out.push_back({"bad literal", with_line(first_char, lines[first_char] + "x")});
    out.push_back({"bad version", with_line(0, "ctab 2")});
    out.push_back({"no header", join_lines(std::vector<std::string>(lines.begin() + 1, lines.end()))});
    out.push_back({"class index skip", with_line(first_class, "class 5" + lines[first_class].substr(7))});
    out.push_back({"unknown key", with_line(first_class, lines[first_class] + " colour=red")});
    out.push_back({"order not a number", with_line(2, "order 12a")});
    out.push_back({"truncated", base.substr(0, base.size() / 2)});
    out.push_back({"empty", ""});
    return out;
}

// Random byte-level edits; these may or may not break an invariant, but the
// parser must answer with a table or a CtabError, never anything else.
inline std::vector<std::string> random_mutations(const std::string& base, unsigned seed, int count) {
    std::mt19937 rng(seed);
    const std::string alphabet = "0123456789 -+/*^E()=\"#\nclassizeorderpowchar\x01";
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        std::string s = base;
        const int edits = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < edits && !s.empty(); ++e) {
            const std::size_t pos = rng() % s.size();
            switch (rng() % 3) {
                case 0: s[pos] = alphabet[rng() % alphabet.size()]; break;
                case 1: s.erase(pos, 1 + rng() % 4); break;
                default: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace spinfeit::corpus
