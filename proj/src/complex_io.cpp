#include "morsekit/complex_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "morsekit/errors.hpp"

namespace morsekit {

SimplicialComplex parse_cplx(std::string_view text) {
    std::vector<Simplex> gens;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Vertex> vs;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            Vertex v = 0;
            auto [p, ec] = std::from_chars(line.data() + i, line.data() + j, v);
            if (ec != std::errc() || p != line.data() + j)
                throw ParseError("bad vertex label '" + std::string(line.substr(i, j - i)) + "'", lineno);
            vs.push_back(v);
            i = j;
        }
        if (vs.empty()) continue;
        try {
            gens.emplace_back(std::move(vs));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), lineno);
        }
        if (eol == text.size()) break;
    }
    return SimplicialComplex::from_simplices(gens);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

SimplicialComplex read_cplx_file(const std::string& path) { return parse_cplx(read_text_file(path)); }

std::string format_cplx(const SimplicialComplex& K) {
    std::string out;
    for (const auto& s : K.maximal_simplices()) {
        out += s.to_string(' ');
        out += '\n';
    }
    return out;
}

void write_cplx_file(const std::string& path, const SimplicialComplex& K) { write_text_file(path, format_cplx(K)); }

}  // namespace morsekit
