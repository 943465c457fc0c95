#include "vbs/io.hpp"

#include "vbs/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace vbs {

namespace {

struct Tokens {
    std::vector<std::string> words;
    std::size_t at = 0;

    explicit Tokens(std::string_view text) {
        std::string word;
        bool comment = false;
        for (char c : text) {
            if (c == '#') comment = true;
            if (c == '\n') comment = false;
            if (comment || std::isspace(static_cast<unsigned char>(c))) {
                if (!word.empty()) words.push_back(std::move(word));
                word.clear();
                continue;
            }
            word.push_back(c);
        }
        if (!word.empty()) words.push_back(std::move(word));
    }

    bool done() const { return at >= words.size(); }
    const std::string& peek() const { return words[at]; }
    std::string next(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what);
        return words[at++];
    }
    int integer(const char* what) {
        const std::string w = next(what);
        return to_int(w, what);
    }
    static int to_int(const std::string& w, const char* what) {
        int v = 0;
        const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
        if (ec != std::errc() || p != w.data() + w.size() || w.empty())
            throw ParseError(std::string("expected ") + what + ", got '" + w + "'");
        return v;
    }
};

/// Reads `key=value` header fields and bare flags up to the first block label.
struct Header {
    std::map<std::string, int> fields;
    std::vector<std::string> flags;

    Header(Tokens& tok, const char* keyword) {
        if (tok.done() || tok.peek() != keyword) throw ParseError(std::string("missing '") + keyword + "' header");
        tok.next(keyword);
        while (!tok.done() && tok.peek().back() != ':' && !std::isdigit(static_cast<unsigned char>(tok.peek()[0])) &&
               tok.peek()[0] != '-') {
            const std::string w = tok.next("header field");
            const auto eq = w.find('=');
            if (eq == std::string::npos)
                flags.push_back(w);
            else
                fields[w.substr(0, eq)] = Tokens::to_int(w.substr(eq + 1), "header value");
        }
    }

    int get(const std::string& key) const {
        const auto it = fields.find(key);
        if (it == fields.end()) throw ParseError("header lacks '" + key + "='");
        return it->second;
    }
    bool has(const std::string& flag) const { return std::find(flags.begin(), flags.end(), flag) != flags.end(); }
};

Table read_table(Tokens& tok, int rows, int cols, int one_based_limit, const char* what) {
    Table t(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int v = tok.integer(what);
            if (one_based_limit > 0 && (v < 1 || v > one_based_limit))
                throw ParseError(std::string(what) + " entry " + std::to_string(v) + " outside 1.." +
                                 std::to_string(one_based_limit));
            t(i, j) = one_based_limit > 0 ? v - 1 : v;
        }
    return t;
}

void write_table(std::ostringstream& out, const Table& t, int offset) {
    for (int i = 0; i < t.rows(); ++i) {
        for (int j = 0; j < t.cols(); ++j) out << (j ? " " : "") << t(i, j) + offset;
        out << '\n';
    }
}

}  // namespace

BirackFile parse_birack(std::string_view text) {
    Tokens tok(text);
    const Header h(tok, "birack");
    BirackFile f;
    f.n = h.get("n");
    if (f.n < 1) throw ParseError("birack size must be positive");
    std::map<std::string, Table> blocks;
    while (!tok.done()) {
        const std::string label = tok.next("block label");
        if (label == "T:") {
            if (!h.has("twisted")) throw ParseError("T: block in an untwisted birack file");
            const Table t = read_table(tok, 1, f.n, f.n, "twist");
            f.twist = Permutation(t.data(), t.data() + f.n);
        } else if (label == "B1:" || label == "B2:" || label == "V1:" || label == "V2:") {
            if (blocks.count(label)) throw ParseError("duplicate block " + label);
            blocks[label] = read_table(tok, f.n, f.n, f.n, label.c_str());
        } else {
            throw ParseError("unknown block label '" + label + "'");
        }
    }
    for (const char* label : {"B1:", "B2:", "V1:", "V2:"})
        if (!blocks.count(label)) throw ParseError(std::string("missing block ") + label);
    if (h.has("twisted") && !f.twist) throw ParseError("twisted birack file lacks a T: block");
    f.tables = {blocks["B1:"], blocks["B2:"], blocks["V1:"], blocks["V2:"]};
    return f;
}

std::string format_birack(const FiniteBirack& b, const Permutation* twist) {
    std::ostringstream out;
    out << "birack n=" << b.size() << (twist ? " twisted" : "") << '\n';
    const BirackTables t = b.tables();
    const std::pair<const char*, const Table*> blocks[] = {{"B1:", &t.b1}, {"B2:", &t.b2}, {"V1:", &t.v1}, {"V2:", &t.v2}};
    for (const auto& [label, table] : blocks) {
        out << label << '\n';
        write_table(out, *table, 1);
    }
    if (twist) {
        out << "T:\n";
        for (std::size_t i = 0; i < twist->size(); ++i) out << (i ? " " : "") << (*twist)[i] + 1;
        out << '\n';
    }
    return out.str();
}

Table parse_shadow(std::string_view text) {
    Tokens tok(text);
    const Header h(tok, "shadow");
    const int m = h.get("m"), n = h.get("n");
    if (m < 1 || n < 1) throw ParseError("shadow sizes must be positive");
    Table t = read_table(tok, m, n, m, "shadow");
    if (!tok.done()) throw ParseError("trailing tokens after shadow table");
    return t;
}

std::string format_shadow(const ShadowAction& s) {
    std::ostringstream out;
    out << "shadow m=" << s.size() << " n=" << s.birack_size() << '\n';
    write_table(out, s.table(), 1);
    return out.str();
}

ModuleBlocks parse_module(std::string_view text) {
    Tokens tok(text);
    const Header h(tok, "module");
    ModuleBlocks b;
    b.q = h.get("q");
    const int m = h.get("m"), n = h.get("n");
    b.twisted = h.has("twisted");
    if (b.q < 2 || m < 1 || n < 1) throw ParseError("module needs q >= 2 and positive sizes");
    const std::vector<std::string> labels =
        b.twisted ? std::vector<std::string>{"V:", "T:", "Q:", "R:"} : std::vector<std::string>{"V:", "T:", "S:", "R:"};

    std::vector<std::map<std::string, Table>> elements(1);
    while (!tok.done()) {
        const std::string label = tok.next("block label");
        if (std::find(labels.begin(), labels.end(), label) == labels.end())
            throw ParseError("unexpected block label '" + label + "'");
        if (elements.back().count(label)) elements.emplace_back();
        if (static_cast<int>(elements.size()) > m) throw ParseError("more blocks than shadow elements");
        const int rows = label == "Q:" ? 1 : n;
        elements.back()[label] = read_table(tok, rows, n, 0, label.c_str());
    }
    if (static_cast<int>(elements.size()) != m) throw ParseError("expected blocks for " + std::to_string(m) + " shadow elements");
    for (auto& e : elements) {
        for (const auto& l : labels)
            if (!e.count(l)) throw ParseError("shadow element lacks block " + l);
        b.v.push_back(e["V:"]);
        b.t.push_back(e["T:"]);
        b.r.push_back(e["R:"]);
        if (b.twisted)
            b.qcoef.push_back(e["Q:"].row(0).transpose());
        else
            b.s.push_back(e["S:"]);
    }
    return b;
}

std::string format_module(const ModuleBlocks& m) {
    std::ostringstream out;
    const int n = m.v.empty() ? 0 : static_cast<int>(m.v.front().rows());
    out << "module q=" << m.q << " m=" << m.shadow_size() << " n=" << n << (m.twisted ? " twisted" : "") << '\n';
    for (std::size_t A = 0; A < m.v.size(); ++A) {
        out << "# element " << A + 1 << '\n';
        out << "V:\n";
        write_table(out, m.v[A], 0);
        out << "T:\n";
        write_table(out, m.t[A], 0);
        if (m.twisted) {
            out << "Q:\n";
            write_table(out, m.qcoef[A].transpose(), 0);
        } else {
            out << "S:\n";
            write_table(out, m.s[A], 0);
        }
        out << "R:\n";
        write_table(out, m.r[A], 0);
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace vbs
