#include "bcplus/signature.hpp"

#include <algorithm>
#include <set>

namespace bcplus {

std::string toText(const Atom& a) {
    return a.constant + "=" + a.value;
}

const std::vector<std::string>& booleanDomain() {
    static const std::vector<std::string> dom = {"t", "f"};
    return dom;
}

bool ConstantDecl::isBoolean() const {
    return domain == booleanDomain();
}

Signature::Signature(std::vector<ConstantDecl> constants) : constants_(std::move(constants)) {
    for (std::size_t i = 0; i < constants_.size(); ++i) {
        const ConstantDecl& c = constants_[i];
        if (c.name.empty()) throw DeclarationError("constant with empty name");
        if (c.domain.size() < 2)
            throw DeclarationError("domain of constant '" + c.name + "' has fewer than 2 values");
        std::set<std::string> seen(c.domain.begin(), c.domain.end());
        if (seen.size() != c.domain.size())
            throw DeclarationError("domain of constant '" + c.name + "' has duplicate values");
        if (!index_.emplace(c.name, i).second)
            throw DeclarationError("constant '" + c.name + "' declared twice");
    }
}

const ConstantDecl* Signature::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &constants_[it->second];
}

bool Signature::hasAtom(const Atom& a) const {
    const ConstantDecl* c = find(a.constant);
    if (!c) return false;
    return std::find(c->domain.begin(), c->domain.end(), a.value) != c->domain.end();
}

std::vector<Atom> Signature::atoms() const {
    std::vector<Atom> out;
    for (const ConstantDecl& c : constants_)
        for (const std::string& v : c.domain) out.push_back({c.name, v});
    return out;
}

std::vector<Atom> Signature::atomsOfKind(ConstantKind k) const {
    std::vector<Atom> out;
    for (const ConstantDecl& c : constants_) {
        if (c.kind != k) continue;
        for (const std::string& v : c.domain) out.push_back({c.name, v});
    }
    return out;
}

std::vector<Atom> Signature::fluentAtoms() const {
    std::vector<Atom> out;
    for (const ConstantDecl& c : constants_) {
        if (!isFluentKind(c.kind)) continue;
        for (const std::string& v : c.domain) out.push_back({c.name, v});
    }
    return out;
}

std::vector<Atom> Signature::actionAtoms() const {
    return atomsOfKind(ConstantKind::Action);
}

SignaturePtr makeSignature(std::vector<ConstantDecl> constants) {
    return std::make_shared<Signature>(std::move(constants));
}

}  // namespace bcplus
