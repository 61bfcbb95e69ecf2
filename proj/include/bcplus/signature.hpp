#ifndef BCPLUS_SIGNATURE_HPP
#define BCPLUS_SIGNATURE_HPP

#include <compare>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcplus {

/// Raised when a signature or constant declaration is ill-formed.
class DeclarationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ConstantKind {
    Action,
    RegularFluent,
    StaticallyDeterminedFluent,
};

inline bool isFluentKind(ConstantKind k) {
    return k == ConstantKind::RegularFluent || k == ConstantKind::StaticallyDeterminedFluent;
}

/// A propositional atom `constant=value`. The `=` is part of the atom name,
/// not equality: the signature assigns each constant a finite domain and the
/// atom asserts that the constant takes that value.
struct Atom {
    std::string constant;
    std::string value;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom& a, const Atom& b) {
        if (auto c = a.constant <=> b.constant; c != 0) return c;
        return a.value <=> b.value;
    }
};

std::string toText(const Atom& a);

/// Domain used for Boolean constants: exactly {t, f}.
const std::vector<std::string>& booleanDomain();

struct ConstantDecl {
    std::string name;
    ConstantKind kind = ConstantKind::RegularFluent;
    std::vector<std::string> domain;  // finite, |domain| >= 2, no duplicates

    bool isBoolean() const;
};

/// An immutable set of constant declarations. Constants keep declaration
/// order; atoms are the pairs constant=value over the declared domains.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<ConstantDecl> constants);

    const std::vector<ConstantDecl>& constants() const { return constants_; }
    const ConstantDecl* find(const std::string& name) const;
    bool hasConstant(const std::string& name) const { return find(name) != nullptr; }
    bool hasAtom(const Atom& a) const;

    /// All atoms, constants in declaration order, values in domain order.
    std::vector<Atom> atoms() const;
    std::vector<Atom> atomsOfKind(ConstantKind k) const;
    std::vector<Atom> fluentAtoms() const;
    std::vector<Atom> actionAtoms() const;

    std::size_t size() const { return constants_.size(); }

private:
    std::vector<ConstantDecl> constants_;
    std::map<std::string, std::size_t> index_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr makeSignature(std::vector<ConstantDecl> constants);

}  // namespace bcplus

#endif
