#include "morsekit/circuit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "morsekit/errors.hpp"

namespace morsekit {

MonotoneCircuit::MonotoneCircuit(std::vector<Gate> gates, std::size_t output)
    : gates_(std::move(gates)), output_(output) {
    const std::size_t n = gates_.size();
    if (output_ >= n) throw std::invalid_argument("output gate id out of range");
    succ_.assign(n, {});
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t g = 0; g < n; ++g) {
        const Gate& G = gates_[g];
        if (G.kind == GateKind::Input) {
            if (!G.inputs.empty()) throw std::invalid_argument("input gate '" + G.name + "' has predecessors");
            inputs_.push_back(g);
        } else if (G.inputs.size() < 2) {
            throw std::invalid_argument("gate '" + G.name + "' has in-degree " + std::to_string(G.inputs.size()) +
                                        ", and/or gates need at least 2");
        }
        for (std::size_t p : G.inputs) {
            if (p >= n) throw std::invalid_argument("gate '" + G.name + "' has an unknown predecessor");
            succ_[p].push_back(g);
        }
        indeg[g] = G.inputs.size();
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t g = 0; g < n; ++g)
        if (indeg[g] == 0) ready.push(g);
    while (!ready.empty()) {
        std::size_t g = ready.top();
        ready.pop();
        topo_.push_back(g);
        for (std::size_t s : succ_[g])
            if (--indeg[s] == 0) ready.push(s);
    }
    if (topo_.size() != n) throw std::invalid_argument("circuit has a directed cycle");
}

std::optional<std::size_t> MonotoneCircuit::find(std::string_view name) const {
    for (std::size_t g = 0; g < gates_.size(); ++g)
        if (gates_[g].name == name) return g;
    return std::nullopt;
}

bool MonotoneCircuit::is_fanin2() const {
    return std::all_of(gates_.begin(), gates_.end(),
                       [](const Gate& g) { return g.kind == GateKind::Input || g.inputs.size() == 2; });
}

bool MonotoneCircuit::all_gates_reach_output() const {
    std::vector<char> reach(gates_.size(), 0);
    reach[output_] = 1;
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it)
        if (reach[*it])
            for (std::size_t p : gates_[*it].inputs) reach[p] = 1;
    return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

std::vector<bool> MonotoneCircuit::evaluate_all(const Assignment& a) const {
    if (a.size() != inputs_.size()) throw std::invalid_argument("assignment size does not match input count");
    std::vector<bool> val(gates_.size(), false);
    for (std::size_t i = 0; i < inputs_.size(); ++i) val[inputs_[i]] = a[i];
    for (std::size_t g : topo_) {
        const Gate& G = gates_[g];
        if (G.kind == GateKind::And)
            val[g] = std::all_of(G.inputs.begin(), G.inputs.end(), [&](std::size_t p) { return val[p]; });
        else if (G.kind == GateKind::Or)
            val[g] = std::any_of(G.inputs.begin(), G.inputs.end(), [&](std::size_t p) { return val[p]; });
    }
    return val;
}

namespace {

std::vector<std::string> words(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

MonotoneCircuit parse_circuit(std::string_view text) {
    struct Decl {
        GateKind kind;
        std::vector<std::string> args;
        std::size_t line;
    };
    std::vector<std::pair<std::string, Decl>> decls;
    std::map<std::string, std::size_t> id;
    std::optional<std::pair<std::string, std::size_t>> output;
    std::size_t lineno = 0, pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        auto w = words(line);
        if (w.empty()) continue;
        const std::string& kw = w[0];
        if (kw == "output") {
            if (w.size() != 2) throw ParseError("output takes one gate name", lineno);
            if (output) throw ParseError("more than one output declaration", lineno);
            output = {w[1], lineno};
            continue;
        }
        GateKind kind;
        if (kw == "input") kind = GateKind::Input;
        else if (kw == "and") kind = GateKind::And;
        else if (kw == "or") kind = GateKind::Or;
        else if (kw == "not") throw ParseError("negation is not allowed in a monotone circuit", lineno);
        else throw ParseError("unknown gate kind '" + kw + "'", lineno);
        if (w.size() < 2) throw ParseError("missing gate name", lineno);
        if (kind == GateKind::Input && w.size() != 2) throw ParseError("input gate takes no arguments", lineno);
        if (kind != GateKind::Input && w.size() < 4)
            throw ParseError("gate '" + w[1] + "' has in-degree " + std::to_string(w.size() - 2) +
                                 ", and/or gates need at least 2",
                             lineno);
        if (id.count(w[1])) throw ParseError("gate '" + w[1] + "' declared twice", lineno);
        id[w[1]] = decls.size();
        decls.push_back({w[1], Decl{kind, std::vector<std::string>(w.begin() + 2, w.end()), lineno}});
    }
    if (!output) throw ParseError("no output declaration");
    std::vector<Gate> gates;
    for (auto& [name, d] : decls) {
        Gate g{name, d.kind, {}};
        for (const auto& a : d.args) {
            auto it = id.find(a);
            if (it == id.end()) throw ParseError("unknown gate '" + a + "'", d.line);
            g.inputs.push_back(it->second);
        }
        gates.push_back(std::move(g));
    }
    auto out = id.find(output->first);
    if (out == id.end()) throw ParseError("output names unknown gate '" + output->first + "'", output->second);
    try {
        return MonotoneCircuit(std::move(gates), out->second);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string format_circuit(const MonotoneCircuit& C) {
    std::string out;
    for (const Gate& g : C.gates()) {
        out += g.kind == GateKind::Input ? "input" : (g.kind == GateKind::And ? "and" : "or");
        out += " " + g.name;
        for (std::size_t p : g.inputs) out += " " + C.gate(p).name;
        out += "\n";
    }
    out += "output " + C.gate(C.output()).name + "\n";
    return out;
}

MonotoneCircuit normalize_fanin2(const MonotoneCircuit& C) {
    // Old gates keep their relative order; helper gates are inserted just
    // before the gate they replace.
    std::vector<Gate> gates;
    std::vector<std::size_t> new_id(C.size());
    std::vector<std::size_t> order = C.topological_order();
    for (std::size_t g : order) {
        const Gate& G = C.gate(g);
        std::vector<std::size_t> ins;
        for (std::size_t p : G.inputs) ins.push_back(new_id[p]);
        std::size_t helper = 0;
        while (ins.size() > 2) {
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i + 1 < ins.size(); i += 2) {
                gates.push_back({G.name + "#" + std::to_string(++helper), G.kind, {ins[i], ins[i + 1]}});
                next.push_back(gates.size() - 1);
            }
            if (ins.size() % 2) next.push_back(ins.back());
            ins.swap(next);
        }
        gates.push_back({G.name, G.kind, ins});
        new_id[g] = gates.size() - 1;
    }
    return MonotoneCircuit(std::move(gates), new_id[C.output()]);
}

std::size_t weight(const Assignment& a) { return static_cast<std::size_t>(std::count(a.begin(), a.end(), true)); }

std::optional<Assignment> min_weight_satisfying(const MonotoneCircuit& C) {
    const std::size_t k = C.input_gates().size();
    if (k > 24) throw std::invalid_argument("too many inputs for a truth table");
    std::optional<Assignment> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Assignment a(k);
        for (std::size_t i = 0; i < k; ++i) a[i] = (mask >> i) & 1U;
        if (best && weight(a) >= weight(*best)) continue;
        if (C.evaluate(a)) best = a;
    }
    return best;
}

Assignment parse_assignment(const MonotoneCircuit& C, std::string_view text) {
    Assignment a(C.input_gates().size(), false);
    if (text.empty() || text == "-") return a;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view name = text.substr(i, j - i);
        auto g = C.find(name);
        if (!g || C.gate(*g).kind != GateKind::Input) throw ParseError("'" + std::string(name) + "' is not an input gate");
        auto pos = std::find(C.input_gates().begin(), C.input_gates().end(), *g) - C.input_gates().begin();
        a[static_cast<std::size_t>(pos)] = true;
        i = j + 1;
    }
    return a;
}

std::string format_assignment(const MonotoneCircuit& C, const Assignment& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) {
            if (!out.empty()) out += ',';
            out += C.gate(C.input_gates()[i]).name;
        }
    return out.empty() ? "-" : out;
}

}  // namespace morsekit
