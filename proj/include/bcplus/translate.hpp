#ifndef BCPLUS_TRANSLATE_HPP
#define BCPLUS_TRANSLATE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bcplus/action.hpp"
#include "bcplus/formula.hpp"

namespace bcplus {

// Timed constants are named "<step>:<base>"; the timed signature of horizon
// m carries fluent constants at steps 0..m and action constants at 0..m-1.

std::string timedConstantName(int step, const std::string& base);
/// Splits "<step>:<base>"; returns {-1, name} when the name is not timed.
std::pair<int, std::string> splitTimedConstant(const std::string& name);
Atom timedAtom(int step, const Atom& a);
SignaturePtr timedSignature(const Signature& base, int m);

/// Inserts the step in front of every constant occurrence; structure
/// preserving, atoms of aggregate metadata are relabeled along.
Formula timestamp(const Formula& f, int step);

enum class ConjunctKind {
    StaticLaw,
    ActionDynamicLaw,
    FluentDynamicLaw,
    InitialChoice,
    UecFluent,
    UecAction,
};

struct TimedConjunct {
    Formula formula;
    std::string provenance;
    ConjunctKind kind = ConjunctKind::StaticLaw;
    int lawIndex = -1;  // index into the source description; -1 for boilerplate
    int step = 0;       // the i the conjunct was generated for
};

class TimedTheory {
public:
    TimedTheory(int m, SignaturePtr sig, std::vector<TimedConjunct> conjuncts)
        : m_(m), sig_(std::move(sig)), conjuncts_(std::move(conjuncts)) {}

    int horizon() const { return m_; }
    const SignaturePtr& signature() const { return sig_; }
    const std::vector<TimedConjunct>& conjuncts() const { return conjuncts_; }
    Formula formula() const;

private:
    int m_;
    SignaturePtr sig_;
    std::vector<TimedConjunct> conjuncts_;
};

/// The timed translation of an action description: per-step law conjuncts in
/// declaration order, then the step-0 value choices for regular fluents,
/// then the per-step exactly-one value constraints.
TimedTheory translate(const ActionDescription& d, int m);

/// The exactly-one value constraint over the timed signature, one doubly
/// negated count-aggregate line per constant and step.
Formula uecTimed(const Signature& base, int m);

/// One conjunct per line with provenance comments.
void dumpTheory(const TimedTheory& t, std::ostream& os);

}  // namespace bcplus

#endif
