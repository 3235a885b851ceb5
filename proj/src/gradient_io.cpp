#include "morsekit/gradient_io.hpp"

#include <charconv>

#include "morsekit/errors.hpp"

namespace morsekit {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

SimplexId parse_simplex(const SimplicialComplex& K, std::string_view tok, std::size_t lineno) {
    std::vector<Vertex> vs;
    std::size_t i = 0;
    while (i <= tok.size()) {
        std::size_t j = tok.find(',', i);
        if (j == std::string_view::npos) j = tok.size();
        Vertex v = 0;
        auto [p, ec] = std::from_chars(tok.data() + i, tok.data() + j, v);
        if (j == i || ec != std::errc() || p != tok.data() + j)
            throw ParseError("bad vertex list '" + std::string(tok) + "'", lineno);
        if (!vs.empty() && vs.back() >= v) throw ParseError("vertex list not ascending '" + std::string(tok) + "'", lineno);
        vs.push_back(v);
        i = j + 1;
    }
    auto id = K.find(vs);
    if (!id) throw ParseError("simplex {" + std::string(tok) + "} is not in the complex", lineno);
    return *id;
}

}  // namespace

Matching parse_gradient(const SimplicialComplex& K, std::string_view text) {
    Matching M;
    std::size_t lineno = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "PAIR") {
            if (tok.size() != 3) throw ParseError("PAIR takes two simplices", lineno);
            M.pairs.emplace_back(parse_simplex(K, tok[1], lineno), parse_simplex(K, tok[2], lineno));
        } else if (tok[0] == "CRIT") {
            if (tok.size() != 2) throw ParseError("CRIT takes one simplex", lineno);
            M.critical.push_back(parse_simplex(K, tok[1], lineno));
        } else {
            throw ParseError("unknown record '" + std::string(tok[0]) + "'", lineno);
        }
    }
    return M;
}

std::string format_gradient(const SimplicialComplex& K, const DiscreteGradient& V) {
    std::string out;
    for (auto [lo, hi] : V.pairs(K))
        out += "PAIR " + K.simplex(lo).to_string() + " " + K.simplex(hi).to_string() + "\n";
    for (SimplexId c : V.critical()) out += "CRIT " + K.simplex(c).to_string() + "\n";
    return out;
}

}  // namespace morsekit
