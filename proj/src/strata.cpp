#include "g1chow/strata.hpp"

#include "g1chow/corering.hpp"

namespace g1chow {

SetPartition banana_partition() { return SetPartition(6, {subset_from({1, 2, 3, 4}), subset_from({5, 6})}); }

IntPolynomial tau_of(const SetPartition& s) {
    IntPolynomial out(1L);
    for (Subset p : s.non_singleton_parts()) out = out * IntPolynomial(Symbol::tau(p));
    return out;
}

namespace {

void check_ambient(int n, const SetPartition& s) {
    if (n < 1 || n > 6) throw AlgebraError("stratum models need 1 <= n <= 6");
    if (s.n() != n) throw AlgebraError("partition " + s.to_string() + " is not a partition of {1.." + std::to_string(n) + "}");
}

std::pair<int, int> canonical_pair(Subset part) {
    auto el = subset_elements(part);
    return {el[0], el[1]};
}

}  // namespace

TailModel::TailModel(int n, SetPartition s) : n_(n), s_(std::move(s)) {
    check_ambient(n_, s_);
    GradedPresentation core = min_presentation(static_cast<int>(s_.length()), true);
    std::vector<Symbol> symbols = core.symbols();
    std::vector<IntPolynomial> relations = core.relations();
    std::vector<DegreeCap> caps;
    for (Subset p : s_.non_singleton_parts()) {
        factors_.emplace_back(p);
        const KeelRing& k = factors_.back();
        for (const auto& sym : k.symbols()) symbols.push_back(sym);
        for (const auto& r : k.relations()) relations.push_back(r);
        for (const auto& c : k.caps()) caps.push_back(c);
    }
    ring_ = GradedPresentation(std::move(symbols), std::move(relations), std::move(caps));
}

const KeelRing* TailModel::factor_for(Subset part) const {
    for (const auto& k : factors_)
        if (k.markings() == part) return &k;
    return nullptr;
}

IntPolynomial TailModel::psi_star(Subset part, int i, int j) const {
    const KeelRing* k = factor_for(part);
    if (!k) throw AlgebraError("no genus-zero factor for " + subset_to_braced(part));
    return k->psi_star(i, j);
}

IntPolynomial TailModel::embed_core(const IntPolynomial& f) const { return to_stratum_symbols(f); }

IntPolynomial TailModel::restrict_tau(Subset b) const {
    for (Subset p : s_.parts()) {
        if ((b & p) != b) continue;
        if (b == p) {
            auto [i, j] = canonical_pair(p);
            return -IntPolynomial(Symbol::lambda_s()) - psi_star(p, i, j);
        }
        return IntPolynomial(Symbol::divisor(b));
    }
    return {};
}

IntPolynomial TailModel::restrict_nu() const {
    if (n_ != 6) throw AlgebraError("ν only exists for six markings");
    SetPartition p = banana_partition();
    if (!refines(p, s_)) return {};
    return embed_core(min_class(MinKind::nod, static_cast<int>(s_.length()), compose(p, s_)));
}

IntPolynomial TailModel::restrict(const IntPolynomial& f) const {
    return f.substitute([&](const Symbol& sym) -> IntPolynomial {
        switch (sym.kind) {
            case SymbolKind::hodge: return IntPolynomial(Symbol::lambda_s());
            case SymbolKind::banana: return restrict_nu();
            case SymbolKind::tail:
                if (sym.data & ~full_subset(n_)) throw AlgebraError("symbol " + sym.name() + " outside the ground set");
                return restrict_tau(sym.data);
            default: throw AlgebraError("restrict: " + sym.name() + " is not an ambient symbol");
        }
    });
}

IntPolynomial TailModel::lift(const IntPolynomial& g) const {
    return g.substitute([&](const Symbol& sym) -> IntPolynomial {
        switch (sym.kind) {
            case SymbolKind::stratum_hodge: return IntPolynomial(Symbol::lambda());
            case SymbolKind::stratum_banana: return IntPolynomial(Symbol::nu());
            case SymbolKind::divisor: return IntPolynomial(Symbol::tau(sym.data));
            default: throw AlgebraError("lift: " + sym.name() + " is not a stratum symbol");
        }
    });
}

IntPolynomial TailModel::ctop() const {
    if (s_.is_discrete()) throw AlgebraError("ctop: the discrete partition has no normal bundle");
    IntPolynomial out(1L);
    for (const auto& k : factors_) {
        auto [i, j] = canonical_pair(k.markings());
        out = out * (-IntPolynomial(Symbol::lambda_s()) - k.psi_star(i, j));
    }
    return out;
}

EllModel::EllModel(int n, SetPartition s) : n_(n), s_(std::move(s)) {
    check_ambient(n_, s_);
    if (s_.is_discrete()) throw AlgebraError("Ell strata need a non-discrete partition");
    std::vector<Symbol> symbols{Symbol::xi()};
    std::vector<IntPolynomial> relations;
    std::vector<DegreeCap> caps;
    for (Subset p : s_.non_singleton_parts()) {
        factors_.emplace_back(p);
        const KeelRing& k = factors_.back();
        for (const auto& sym : k.symbols()) symbols.push_back(sym);
        for (const auto& r : k.relations()) relations.push_back(r);
        for (const auto& c : k.caps()) caps.push_back(c);
    }
    ring_ = GradedPresentation(std::move(symbols), std::move(relations), std::move(caps));
}

IntPolynomial EllModel::restrict(const IntPolynomial& f) const {
    return f.substitute([&](const Symbol& sym) -> IntPolynomial {
        switch (sym.kind) {
            case SymbolKind::hodge: return -IntPolynomial(Symbol::xi());
            case SymbolKind::banana: throw UnsupportedError("the restriction of ν to Ell strata is not available");
            case SymbolKind::tail:
                for (Subset p : s_.parts())
                    if ((sym.data & p) == sym.data && sym.data != p) return IntPolynomial(Symbol::divisor(sym.data));
                return {};
            default: throw AlgebraError("restrict: " + sym.name() + " is not an ambient symbol");
        }
    });
}

IntPolynomial restrict_to_tail(int n, const SetPartition& s, const IntPolynomial& f) { return TailModel(n, s).restrict(f); }
IntPolynomial lift_from_tail(int n, const SetPartition& s, const IntPolynomial& g) { return TailModel(n, s).lift(g); }
IntPolynomial ctop_tail(int n, const SetPartition& s) { return TailModel(n, s).ctop(); }
IntPolynomial restrict_to_ell(int n, const SetPartition& s, const IntPolynomial& f) { return EllModel(n, s).restrict(f); }

}  // namespace g1chow
