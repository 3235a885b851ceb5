#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morsekit {

enum class GateKind { Input, And, Or };

struct Gate {
    std::string name;
    GateKind kind = GateKind::Input;
    std::vector<std::size_t> inputs;  ///< predecessor gate ids; repeats allowed
};

/// Values of the input gates, indexed like MonotoneCircuit::input_gates().
using Assignment = std::vector<bool>;

/// Acyclic circuit of and/or gates with a distinguished output gate.
class MonotoneCircuit {
public:
    MonotoneCircuit() = default;
    /// Throws std::invalid_argument on cycles, bad ids, input gates with
    /// predecessors or and/or gates with fewer than two inputs.
    MonotoneCircuit(std::vector<Gate> gates, std::size_t output);

    std::size_t size() const { return gates_.size(); }
    const Gate& gate(std::size_t i) const { return gates_[i]; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t output() const { return output_; }
    const std::vector<std::size_t>& input_gates() const { return inputs_; }
    /// Topological order, ties broken by gate id.
    const std::vector<std::size_t>& topological_order() const { return topo_; }
    /// Successor gate ids with multiplicity (one entry per input slot).
    const std::vector<std::size_t>& successors(std::size_t g) const { return succ_[g]; }
    std::optional<std::size_t> find(std::string_view name) const;

    bool is_fanin2() const;
    /// Every gate lies on a path to the output.
    bool all_gates_reach_output() const;

    std::vector<bool> evaluate_all(const Assignment& a) const;
    bool evaluate(const Assignment& a) const { return evaluate_all(a)[output_]; }

private:
    std::vector<Gate> gates_;
    std::size_t output_ = 0;
    std::vector<std::size_t> inputs_, topo_;
    std::vector<std::vector<std::size_t>> succ_;
};

/// Text format, one declaration per line, order free, '#' comments:
///   input x
///   and g a b [c ...]
///   or  h g x
///   output h
MonotoneCircuit parse_circuit(std::string_view text);
std::string format_circuit(const MonotoneCircuit& C);

/// Replaces gates with k > 2 inputs by balanced trees of binary gates of the
/// same kind. New gates are named "<name>#<i>"; the root keeps the name.
MonotoneCircuit normalize_fanin2(const MonotoneCircuit& C);

std::size_t weight(const Assignment& a);

/// Minimum-weight satisfying assignment by truth table, ties broken by the
/// smallest input bit mask. Empty when nothing satisfies. Up to 24 inputs.
std::optional<Assignment> min_weight_satisfying(const MonotoneCircuit& C);

/// "x,y" lists the inputs set to 1; "" or "-" sets none.
Assignment parse_assignment(const MonotoneCircuit& C, std::string_view text);
std::string format_assignment(const MonotoneCircuit& C, const Assignment& a);

}  // namespace morsekit
