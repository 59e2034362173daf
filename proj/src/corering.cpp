#include "g1chow/corering.hpp"

namespace g1chow {

GradedPresentation min_presentation(int m, bool stratum_symbols) {
    if (m < 1 || m > 6) throw AlgebraError("min_presentation: m must lie in 1..6");
    Symbol l = stratum_symbols ? Symbol::lambda_s() : Symbol::lambda();
    if (m <= 5) return GradedPresentation({l}, {});
    Symbol v = stratum_symbols ? Symbol::nu_s() : Symbol::nu();
    IntPolynomial L(l), V(v);
    return GradedPresentation({l, v}, {L.pow(4) - L.pow(2) * V - V.pow(2), L.pow(5) - 3 * L.pow(3) * V + 2 * L * V.pow(2)});
}

namespace {

IntPolynomial special(int a) {
    IntPolynomial l(Symbol::lambda()), v(Symbol::nu());
    switch (a) {
        case 0: return IntPolynomial(1L);
        case 1: return l;
        case 2: return v;
        case 3: return 2 * l * v - l.pow(3);
        default: return {};
    }
}

}  // namespace

IntPolynomial schubert_to_ln(int a1, int a2) {
    if (!(3 >= a1 && a1 >= a2 && a2 >= 0)) throw AlgebraError("schubert_to_ln: need 3 >= a1 >= a2 >= 0");
    if (a2 == 0) return special(a1);
    return special(a1) * special(a2) - special(a1 + 1) * special(a2 - 1);
}

IntPolynomial expand_schubert(const IntPolynomial& f) {
    return f.substitute([](const Symbol& s) {
        if (s.kind != SymbolKind::schubert) return IntPolynomial(s);
        return schubert_to_ln(static_cast<int>(s.data / 16), static_cast<int>(s.data % 16));
    });
}

IntPolynomial min_class(MinKind kind, int m, const SetPartition& s, const ClassTable& table) {
    if (s.n() != m) throw AlgebraError("min_class: partition is not a partition of {1.." + std::to_string(m) + "}");
    const ClassTableEntry* e = table.find(kind, m, s.shape());
    if (!e) throw AlgebraError(std::string("min_class: no ") + to_string(kind) + " class for " + s.to_string());
    return e->value;
}

bool has_min_class(MinKind kind, int m, const SetPartition& s, const ClassTable& table) {
    return s.n() == m && table.find(kind, m, s.shape()) != nullptr;
}

IntPolynomial to_stratum_symbols(const IntPolynomial& f) {
    return f.substitute([](const Symbol& s) {
        if (s.kind == SymbolKind::hodge) return IntPolynomial(Symbol::lambda_s());
        if (s.kind == SymbolKind::banana) return IntPolynomial(Symbol::nu_s());
        return IntPolynomial(s);
    });
}

}  // namespace g1chow
