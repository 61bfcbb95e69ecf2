#ifndef BCPLUS_TRANSITION_HPP
#define BCPLUS_TRANSITION_HPP

#include <iosfwd>
#include <vector>

#include "bcplus/action.hpp"
#include "bcplus/stable.hpp"
#include "bcplus/translate.hpp"

namespace bcplus {

/// A state is a fluent valuation: an interpretation s of the fluent atoms
/// such that 0:s is a stable model of the horizon-0 translation.
using State = Interpretation;

/// A transition <from, event, to>: 0:from ∪ 0:event ∪ 1:to is a stable model
/// of the horizon-1 translation. All three parts are over the base signature.
struct Transition {
    Interpretation from;
    Interpretation event;
    Interpretation to;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.from == b.from && a.event == b.event && a.to == b.to;
    }
    friend bool operator<(const Transition& a, const Transition& b) {
        if (a.from < b.from || b.from < a.from) return a.from < b.from;
        if (a.event < b.event || b.event < a.event) return a.event < b.event;
        return a.to < b.to;
    }
};

struct TransitionGraph {
    std::vector<State> states;
    std::vector<Transition> transitions;
};

std::vector<State> states(const ActionDescription& d, const EngineOptions& opts = {});
std::vector<Transition> transitions(const ActionDescription& d, const EngineOptions& opts = {});

/// Stable models of the horizon-m translation; each is a length-m path.
/// Requires m >= 1.
std::vector<Interpretation> paths(const ActionDescription& d, int m,
                                  const EngineOptions& opts = {});

/// The triple decomposition X^0..X^{m-1} of a timed interpretation.
std::vector<Transition> splitPath(const ActionDescription& d, const Interpretation& timedModel,
                                  int m);

TransitionGraph transitionGraph(const ActionDescription& d, const EngineOptions& opts = {});

/// Compact one-atom rendering used by the graph dumps: Boolean constants
/// print bare or ~-prefixed, everything else as name=value.
std::string atomLabel(const Atom& a, const Signature& base);
std::string interpretationLabel(const Interpretation& i, const Signature& base);

/// One comment line per state, then one `state --[event]--> state` line per
/// transition.
void writeEdgeList(const TransitionGraph& g, const Signature& base, std::ostream& os);
/// Graphviz dot: one vertex line per state, one edge line per transition.
void writeDot(const TransitionGraph& g, const Signature& base, std::ostream& os);

}  // namespace bcplus

#endif
