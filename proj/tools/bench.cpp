// Compares the production stable-model scan against the serial reference
// engine on a toggle-switch instance whose size fits both.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bcplus/action.hpp"
#include "bcplus/stable.hpp"
#include "bcplus/translate.hpp"

using namespace bcplus;

namespace {

ActionDescription toggleSwitches(int n) {
    std::vector<ConstantDecl> decls;
    for (int i = 1; i <= n; ++i)
        decls.push_back({"on" + std::to_string(i), ConstantKind::RegularFluent, booleanDomain()});
    for (int i = 1; i <= n; ++i)
        decls.push_back({"toggle" + std::to_string(i), ConstantKind::Action, booleanDomain()});
    SignaturePtr sig = makeSignature(decls);

    std::vector<CausalLaw> laws;
    for (int i = 1; i <= n; ++i) {
        std::string sw = "on" + std::to_string(i), act = "toggle" + std::to_string(i);
        Formula actOn = Formula::atom({act, "t"});
        laws.push_back(fluentDynamicLaw(Formula::atom({sw, "t"}), truth(),
                                        Formula::conj(actOn, Formula::atom({sw, "f"}))));
        laws.push_back(fluentDynamicLaw(Formula::atom({sw, "f"}), truth(),
                                        Formula::conj(actOn, Formula::atom({sw, "t"}))));
        auto inertial = expandAbbreviation(InertialLaw{sw}, *sig);
        laws.insert(laws.end(), inertial.begin(), inertial.end());
        auto exo = expandAbbreviation(ExogenousLaw{act}, *sig);
        laws.insert(laws.end(), exo.begin(), exo.end());
    }
    return ActionDescription(sig, std::move(laws));
}

template <class Fn>
double timeMs(Fn fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int switches = argc > 1 ? std::stoi(argv[1]) : 2;
    int horizon = argc > 2 ? std::stoi(argv[2]) : 2;

    ActionDescription d = toggleSwitches(switches);
    TimedTheory t = translate(d, horizon);
    StableQuery q{t.formula(), t.signature(), std::nullopt, {}};
    q.options.budget = std::uint64_t(1) << 34;

    std::size_t atoms = atomsOf(q.formula).size();
    std::cout << "instance: " << switches << " switches, horizon " << horizon << ", " << atoms
              << " atoms\n";

    std::vector<Interpretation> refModels, prodSerial, prodParallel;

    if (atoms <= 24) {
        double ms = timeMs([&] { refModels = ref::stableModels(q); });
        std::cout << "serial reference:        " << ms << " ms, " << refModels.size()
                  << " models\n";
    } else {
        std::cout << "serial reference:        skipped (too many atoms)\n";
    }

    StableQuery serialQ = q;
    serialQ.options.parallel = false;
    double msSerial = timeMs([&] { prodSerial = stableModels(serialQ); });
    std::cout << "production, one thread:  " << msSerial << " ms, " << prodSerial.size()
              << " models\n";

#ifdef _OPENMP
    double msParallel = timeMs([&] { prodParallel = stableModels(q); });
    std::cout << "production, " << omp_get_max_threads()
              << " threads:   " << msParallel << " ms, " << prodParallel.size() << " models\n";
#else
    prodParallel = prodSerial;
    std::cout << "production, parallel:    built without OpenMP\n";
#endif

    bool agree = prodSerial == prodParallel && (refModels.empty() || refModels == prodSerial);
    std::cout << "results identical: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
}
