#include "polytile/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace polytile {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Int parse_int(const std::string& tok) {
    std::string t = strip(tok);
    if (t.empty()) throw std::invalid_argument("expected an integer, got empty text");
    std::size_t pos = 0;
    Int v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + t + "'");
    }
    if (pos != t.size()) throw std::invalid_argument("trailing characters in integer: '" + t + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

IntegerSet parse_set(const std::string& text) {
    std::vector<Int> xs;
    for (const std::string& tok : split(text, ',')) xs.push_back(parse_int(tok));
    return IntegerSet(std::move(xs));
}

std::string format_set(const IntegerSet& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i) out << ',';
        out << s.elements[i];
    }
    return out.str();
}

std::string format_coloring(const PeriodicColoring& c) {
    std::ostringstream out;
    out << "k=" << c.num_colors << " m=" << c.period() << "\n";
    if (c.num_colors > 10) {
        for (std::size_t i = 0; i < c.word.size(); ++i) {
            if (i) out << ',';
            out << c.word[i];
        }
    } else {
        for (int v : c.word) out << v;
    }
    out << "\n";
    return out.str();
}

namespace {

std::vector<int> parse_word(const std::string& text, int k) {
    std::string t = strip(text);
    std::vector<int> word;
    if (t.find(',') != std::string::npos) {
        for (const std::string& tok : split(t, ',')) {
            Int v = parse_int(tok);
            word.push_back(static_cast<int>(v));
        }
    } else {
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("coloring word: expected digits");
            word.push_back(ch - '0');
        }
    }
    (void)k;
    return word;
}

}  // namespace

PeriodicColoring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line1, line2;
    if (!std::getline(in, line1) || !std::getline(in, line2))
        throw std::invalid_argument("coloring text: expected two lines");
    int k = 0;
    long long m = 0;
    std::istringstream hdr(line1);
    std::string tok;
    while (hdr >> tok) {
        if (tok.rfind("k=", 0) == 0) k = static_cast<int>(parse_int(tok.substr(2)));
        else if (tok.rfind("m=", 0) == 0) m = parse_int(tok.substr(2));
        else throw std::invalid_argument("coloring header: unexpected token '" + tok + "'");
    }
    if (k < 1 || m < 1) throw std::invalid_argument("coloring header: need k=<colors> m=<period>");
    std::vector<int> word = parse_word(line2, k);
    if (static_cast<long long>(word.size()) != m)
        throw std::invalid_argument("coloring word length differs from m");
    return PeriodicColoring(std::move(word), k);
}

PeriodicColoring parse_coloring_inline(const std::string& text) {
    int k = 0;
    long long m = 0;
    std::string word_text;
    for (const std::string& part : split(text, ',')) {
        std::string p = strip(part);
        if (p.rfind("k=", 0) == 0) k = static_cast<int>(parse_int(p.substr(2)));
        else if (p.rfind("m=", 0) == 0) m = parse_int(p.substr(2));
        else if (p.rfind("word=", 0) == 0) word_text = p.substr(5);
        else if (!word_text.empty()) word_text += "," + p;  // comma-separated word tail
        else throw std::invalid_argument("coloring: unexpected field '" + p + "'");
    }
    if (k < 1 || m < 1 || word_text.empty())
        throw std::invalid_argument("coloring: need k=..,m=..,word=..");
    std::vector<int> word = parse_word(word_text, k);
    if (static_cast<long long>(word.size()) != m)
        throw std::invalid_argument("coloring word length differs from m");
    return PeriodicColoring(std::move(word), k);
}

std::vector<std::vector<Int>> parse_points(const std::string& text) {
    std::vector<std::vector<Int>> pts;
    for (std::string part : split(text, ';')) {
        part = strip(part);
        if (part.empty()) continue;
        if (part.front() != '(' || part.back() != ')')
            throw std::invalid_argument("point: expected '(..,..)', got '" + part + "'");
        std::vector<Int> coords;
        for (const std::string& tok : split(part.substr(1, part.size() - 2), ','))
            coords.push_back(parse_int(tok));
        pts.push_back(std::move(coords));
    }
    if (pts.empty()) throw std::invalid_argument("point set: empty");
    for (const auto& p : pts)
        if (p.size() != pts.front().size())
            throw std::invalid_argument("point set: mixed dimensions");
    return pts;
}

std::string format_points(const std::vector<std::vector<Int>>& pts) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out << ';';
        out << '(';
        for (std::size_t j = 0; j < pts[i].size(); ++j) {
            if (j) out << ',';
            out << pts[i][j];
        }
        out << ')';
    }
    return out.str();
}

std::vector<Int> parse_int_vector(const std::string& text) {
    std::vector<Int> xs;
    for (const std::string& tok : split(text, ',')) xs.push_back(parse_int(tok));
    return xs;
}

}  // namespace polytile
