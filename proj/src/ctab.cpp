#include "spinfeit/ctab.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace spinfeit {

CtabError::CtabError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column), msg_(msg) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class Cursor {
  public:
    Cursor(const std::string& s, std::size_t line) : s_(s), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    std::size_t column() const { return pos_ + 1; }
    [[noreturn]] void fail(const std::string& msg, std::size_t col = 0) const {
        throw CtabError(line_, col ? col : column(), msg);
    }

    std::string word() {
        skip_ws();
        const std::size_t b = pos_;
        while (pos_ < s_.size() && !is_space(s_[pos_])) ++pos_;
        return s_.substr(b, pos_ - b);
    }
    bool peek_prefix(const std::string& p) {
        skip_ws();
        return s_.compare(pos_, p.size(), p) == 0;
    }
    void expect_word(const std::string& w) {
        const std::size_t col = (skip_ws(), column());
        if (word() != w) fail("expected '" + w + "'", col);
    }

    std::int64_t integer(const std::string& what) {
        skip_ws();
        const std::size_t col = column();
        const std::string w = word();
        return to_integer(w, what, col);
    }
    std::int64_t to_integer(const std::string& w, const std::string& what, std::size_t col) const {
        if (w.empty()) fail("expected " + what, col);
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec == std::errc::result_out_of_range) fail(what + " '" + w + "' is out of range", col);
        if (ec != std::errc() || p != w.data() + w.size()) fail("expected " + what + ", got '" + w + "'", col);
        return v;
    }

    // key=value, value either a bare word or a double-quoted string with \" and \\ escapes.
    std::pair<std::string, std::string> key_value(std::size_t& value_col) {
        skip_ws();
        const std::size_t b = pos_;
        while (pos_ < s_.size() && s_[pos_] != '=' && !is_space(s_[pos_])) ++pos_;
        if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected key=value", b + 1);
        std::string key = s_.substr(b, pos_ - b);
        if (key.empty()) fail("empty key", b + 1);
        ++pos_;
        value_col = column();
        std::string val;
        if (pos_ < s_.size() && s_[pos_] == '"') {
            ++pos_;
            bool closed = false;
            while (pos_ < s_.size()) {
                const char c = s_[pos_++];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\') {
                    if (pos_ >= s_.size()) break;
                    const char e = s_[pos_++];
                    if (e != '"' && e != '\\') fail(std::string("unknown escape \\") + e, column() - 2);
                    val += e;
                } else {
                    val += c;
                }
            }
            if (!closed) fail("unterminated string", value_col);
            if (pos_ < s_.size() && !is_space(s_[pos_])) fail("junk after closing quote");
        } else {
            const std::size_t vb = pos_;
            while (pos_ < s_.size() && !is_space(s_[pos_])) ++pos_;
            val = s_.substr(vb, pos_ - vb);
        }
        return {key, val};
    }

  private:
    const std::string& s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

struct Line {
    std::size_t number;
    std::string text;
};

std::size_t parse_index(const std::string& s, std::size_t& i) {
    std::size_t v = 0;
    const std::size_t b = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + static_cast<std::size_t>(s[i++] - '0');
    return i == b ? std::string::npos : v;
}

}  // namespace

CharacterTable parse_ctab(const std::string& text, bool validate_table) {
    std::vector<Line> lines;
    {
        std::size_t n = 0, b = 0;
        while (b <= text.size()) {
            std::size_t e = text.find('\n', b);
            if (e == std::string::npos) e = text.size();
            ++n;
            std::string l = text.substr(b, e - b);
            std::size_t f = 0;
            while (f < l.size() && is_space(l[f])) ++f;
            if (f < l.size() && l[f] != '#') lines.push_back({n, std::move(l)});
            b = e + 1;
        }
        if (lines.empty()) throw CtabError(n, 1, "empty document");
    }
    for (const auto& l : lines)
        for (std::size_t i = 0; i < l.text.size(); ++i) {
            const auto c = static_cast<unsigned char>(l.text[i]);
            if (c < 0x20 && c != '\t' && c != '\r') throw CtabError(l.number, i + 1, "control character in input");
        }

    CharacterTable t;
    std::size_t li = 0;
    auto header = [&](const std::string& key) -> Cursor {
        if (li >= lines.size()) throw CtabError(lines.back().number + 1, 1, "missing '" + key + "' line");
        Cursor c(lines[li].text, lines[li].number);
        c.expect_word(key);
        return c;
    };
    std::size_t order_line = 0;
    {
        Cursor c = header("ctab");
        const std::size_t col = (c.skip_ws(), c.column());
        const auto v = c.integer("format version");
        if (v != 1) c.fail("unsupported format version " + std::to_string(v), col);
        if (!c.at_end()) c.fail("junk after version");
        ++li;
    }
    {
        Cursor c = header("group");
        c.skip_ws();
        const std::string& s = lines[li].text;
        std::size_t b = c.column() - 1, e = s.size();
        while (e > b && is_space(s[e - 1])) --e;
        t.name = s.substr(b, e - b);
        if (t.name.empty()) c.fail("empty group name");
        ++li;
    }
    {
        Cursor c = header("order");
        order_line = lines[li].number;
        t.group_order = c.integer("group order");
        if (!c.at_end()) c.fail("junk after group order");
        ++li;
    }
    {
        Cursor c = header("exponent");
        t.exponent = c.integer("exponent");
        if (!c.at_end()) c.fail("junk after exponent");
        ++li;
    }

    std::vector<std::size_t> class_lines, char_lines;
    for (; li < lines.size(); ++li) {
        Cursor c(lines[li].text, lines[li].number);
        const std::size_t kcol = (c.skip_ws(), c.column());
        const std::string kind = c.word();
        if (kind != "class" && kind != "char") c.fail("expected 'class' or 'char', got '" + kind + "'", kcol);
        const bool is_class = kind == "class";
        if (is_class && !char_lines.empty()) c.fail("class line after char lines", kcol);
        const std::size_t icol = (c.skip_ws(), c.column());
        const std::int64_t idx = c.integer(kind + " index");
        const std::size_t expected = is_class ? class_lines.size() : char_lines.size();
        if (idx < 0 || static_cast<std::size_t>(idx) != expected)
            c.fail(kind + " index " + std::to_string(idx) + ", expected " + std::to_string(expected), icol);
        if (is_class) {
            ClassInfo ci;
            bool have_size = false, have_order = false, have_label = false;
            while (!c.at_end()) {
                const std::size_t col = c.column();
                std::size_t vcol = 0;
                const auto [k, v] = c.key_value(vcol);
                if (k == "size") {
                    if (have_size) c.fail("duplicate size", col);
                    ci.size = c.to_integer(v, "class size", vcol);
                    have_size = true;
                } else if (k == "order") {
                    if (have_order) c.fail("duplicate order", col);
                    ci.order = c.to_integer(v, "element order", vcol);
                    have_order = true;
                } else if (k == "label") {
                    if (have_label) c.fail("duplicate label", col);
                    ci.label = v;
                    have_label = true;
                } else if (k.rfind("pow", 0) == 0) {
                    const std::int64_t p = c.to_integer(k.substr(3), "prime in power map key", col + 3);
                    if (p < 2) c.fail("power map prime must be at least 2", col);
                    if (ci.power.count(p)) c.fail("duplicate " + k, col);
                    const std::int64_t target = c.to_integer(v, "class index", vcol);
                    if (target < 0 || target > std::numeric_limits<int>::max())
                        c.fail("class index out of range", vcol);
                    ci.power[p] = static_cast<int>(target);
                } else {
                    c.fail("unknown key '" + k + "'", col);
                }
            }
            if (!have_size) c.fail("class line without size=");
            if (!have_order) c.fail("class line without order=");
            t.classes.push_back(std::move(ci));
            class_lines.push_back(lines[li].number);
        } else {
            std::string label;
            if (c.peek_prefix("label=")) {
                std::size_t vcol = 0;
                label = c.key_value(vcol).second;
            }
            std::vector<CycloNumber> row;
            while (!c.at_end()) {
                const std::size_t col = c.column();
                const std::string w = c.word();
                try {
                    row.push_back(CycloNumber::parse(w));
                } catch (const LiteralError& e) {
                    c.fail(std::string("bad value: ") + e.what(), col + e.offset());
                }
            }
            if (row.size() != t.classes.size())
                c.fail("char " + std::to_string(idx) + " has " + std::to_string(row.size()) + " values, expected " +
                       std::to_string(t.classes.size()));
            t.char_labels.push_back(std::move(label));
            t.values.push_back(std::move(row));
            char_lines.push_back(lines[li].number);
        }
    }
    if (class_lines.empty()) throw CtabError(lines.back().number + 1, 1, "document has no classes");

    if (validate_table) {
        try {
            validate(t);
        } catch (const ValidationError& e) {
            // Point at the class or char line the message is about.
            const std::string m = e.what();
            std::size_t line = order_line;
            auto point = [&](const std::vector<std::size_t>& v, std::size_t k) {
                if (k < v.size()) line = v[k];
            };
            std::size_t i = 0;
            if (m.rfind("char ", 0) == 0) {
                i = 5;
                point(char_lines, parse_index(m, i));
            } else if (m.rfind("class ", 0) == 0) {
                i = 6;
                point(class_lines, parse_index(m, i));
            } else if ((i = m.find("fails for chars ")) != std::string::npos) {
                i += 16;
                point(char_lines, parse_index(m, i));
            } else if ((i = m.find("fails for classes ")) != std::string::npos) {
                i += 18;
                point(class_lines, parse_index(m, i));
            } else if (e.where() >= 0) {
                point(class_lines, static_cast<std::size_t>(e.where()));
            }
            throw CtabError(line, 1, "validation: " + m);
        } catch (const Error& e) {
            throw CtabError(order_line, 1, std::string("validation: ") + e.what());
        }
    }
    return t;
}

std::string write_ctab(const CharacterTable& t) {
    std::ostringstream os;
    os << "ctab 1\n";
    os << "group " << t.name << "\n";
    os << "order " << t.group_order << "\n";
    os << "exponent " << t.exponent << "\n";
    for (int c = 0; c < t.num_classes(); ++c) {
        const auto& ci = t.classes[static_cast<std::size_t>(c)];
        os << "class " << c << " size=" << ci.size << " order=" << ci.order;
        for (const auto& [p, target] : ci.power) os << " pow" << p << "=" << target;
        if (!ci.label.empty()) os << " label=" << quote(ci.label);
        os << "\n";
    }
    for (int i = 0; i < t.num_chars(); ++i) {
        os << "char " << i;
        const std::string& l = static_cast<std::size_t>(i) < t.char_labels.size() ? t.char_labels[static_cast<std::size_t>(i)] : "";
        if (!l.empty()) os << " label=" << quote(l);
        for (const auto& v : t.row(i)) os << " " << v.to_string();
        os << "\n";
    }
    return os.str();
}

CharacterTable read_ctab_file(const std::string& path, bool validate_table) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ctab(ss.str(), validate_table);
}

void write_ctab_file(const std::string& path, const CharacterTable& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << write_ctab(t);
    if (!out) throw Error("write failed for " + path);
}

}  // namespace spinfeit
