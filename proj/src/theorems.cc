#include "idealtop/theorems.hh"

#include <chrono>

namespace idealtop {

namespace {

using C = SetClass;
using K = TheoremSpec::Kind;
using P = SpaceProperty;

TheoremSpec implication(std::string id, std::string statement, std::vector<P> props, Conjunction from,
                        Conjunction to)
{
    TheoremSpec s;
    s.id = std::move(id);
    s.statement = std::move(statement);
    s.requires_properties = normalize_properties(std::move(props));
    s.kind = K::kImplication;
    s.chain = {std::move(from), std::move(to)};
    return s;
}

TheoremSpec equivalence(std::string id, std::string statement, std::vector<P> props, std::vector<Conjunction> chain,
                        K kind = K::kEquivalence)
{
    TheoremSpec s;
    s.id = std::move(id);
    s.statement = std::move(statement);
    s.requires_properties = normalize_properties(std::move(props));
    s.kind = kind;
    s.chain = std::move(chain);
    return s;
}

TheoremSpec law(std::string id, std::string statement, std::vector<P> props, K kind, LawCheck check)
{
    TheoremSpec s;
    s.id = std::move(id);
    s.statement = std::move(statement);
    s.requires_properties = normalize_properties(std::move(props));
    s.kind = kind;
    s.law = std::move(check);
    return s;
}

std::vector<SubsetMask> star_table(const SpaceContext& ctx)
{
    std::vector<SubsetMask> out;
    out.reserve(subset_count(ctx.size()));
    for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b)
        out.push_back(local_function(ctx.topology(), ctx.ideal(), SubsetMask(b)));
    return out;
}

std::string idx(const SpaceContext& ctx, SubsetMask a)
{
    return to_letter_string(a, ctx.size());
}

/// For all members A, B of `cls` (A <= B by mask), `combine(A, B)` is in `cls`.
LawCheck pairwise_closure(SetClass cls, SetClass target, bool use_union, std::string what)
{
    return [=](const ContextFacts& f) -> std::optional<Violation> {
        const int n = f.context().size();
        for (std::uint32_t a = 0; a < subset_count(n); ++a) {
            if (!f.classes(SubsetMask(a)).has(cls))
                continue;
            for (std::uint32_t b = a; b < subset_count(n); ++b) {
                if (!f.classes(SubsetMask(b)).has(cls))
                    continue;
                SubsetMask combined = use_union ? SubsetMask(a | b) : SubsetMask(a & b);
                if (!f.classes(combined).has(target))
                    return Violation{SubsetMask(a), SubsetMask(b), -1,
                                     what + " gives " + idx(f.context(), combined) + " outside " +
                                         std::string(class_name(target))};
            }
        }
        return std::nullopt;
    };
}

std::vector<TheoremSpec> make_roster()
{
    std::vector<TheoremSpec> r;
    const C pgio = C::kPreGammaIOpen;

    // Preliminaries.
    r.push_back(law("Lemma 2.3", "A is weakly I-local closed iff A = K n Cl*(A) for some open K", {},
                    K::kEquivalence, [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b) {
                            SubsetMask a(b);
                            bool by_pairs = f.classes(a).has(C::kWeaklyILocalClosed);
                            bool by_form = is_weakly_I_local_closed(ctx.topology(), ctx.ideal(), a);
                            if (by_pairs != by_form)
                                return Violation{a, std::nullopt, -1,
                                                 "pair scan says " + std::string(by_pairs ? "yes" : "no") +
                                                     ", open-with-Cl* form says " + (by_form ? "yes" : "no")};
                        }
                        return std::nullopt;
                    }));
    r.push_back(law("Thm 2.5", "*-extremally disconnected iff Cl*(Int(V)) <= Int(Cl*(V)) for every V", {},
                    K::kStructural, [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        bool def = is_star_extremally_disconnected_by_definition(ctx.topology(), ctx.ideal());
                        bool alt =
                            star_closure_of_interior_inside_interior_of_star_closure(ctx.topology(), ctx.ideal());
                        if (def != alt)
                            return Violation{SubsetMask(), std::nullopt, -1,
                                             std::string("definition says ") + (def ? "yes" : "no") +
                                                 ", inclusion form says " + (alt ? "yes" : "no")};
                        return std::nullopt;
                    }));
    r.push_back(law("Lemma 2.6(1)", "A <= B implies A* <= B*", {}, K::kStructural,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        auto star = star_table(ctx);
                        for (std::uint32_t a = 0; a < star.size(); ++a)
                            for (std::uint32_t b = 0; b < star.size(); ++b)
                                if ((a & ~b) == 0 && !star[a].subset_of(star[b]))
                                    return Violation{SubsetMask(a), SubsetMask(b), -1, "A* not inside B*"};
                        return std::nullopt;
                    }));
    r.push_back(law("Lemma 2.6(2)", "U open implies U n A* <= (U n A)*", {}, K::kStructural,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        auto star = star_table(ctx);
                        for (auto u : ctx.topology().opens())
                            for (std::uint32_t a = 0; a < star.size(); ++a)
                                if (!(u & star[a]).subset_of(star[(u & SubsetMask(a)).bits()]))
                                    return Violation{SubsetMask(a), u, -1, "U n A* not inside (U n A)*"};
                        return std::nullopt;
                    }));
    r.push_back(law("Lemma 2.6(3)", "A* is closed", {}, K::kStructural,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        auto star = star_table(ctx);
                        for (std::uint32_t a = 0; a < star.size(); ++a)
                            if (!ctx.topology().is_closed(star[a]))
                                return Violation{SubsetMask(a), std::nullopt, -1,
                                                 "A* = " + idx(ctx, star[a]) + " is not closed"};
                        return std::nullopt;
                    }));
    r.push_back(equivalence("Lemma 2.7", "submaximal implies PO(X) = tau", {P::kSubmaximal},
                            {{C::kPreopen}, {C::kOpen}}, K::kFamilyIdentity));
    r.push_back(equivalence("Cor 2.8", "submaximal implies PIO(X) = tau for any ideal", {P::kSubmaximal},
                            {{C::kPreIOpen}, {C::kOpen}}, K::kFamilyIdentity));
    r.push_back(law("Prop 2.9", "regular operation: A, B gamma-open implies A n B gamma-open",
                    {P::kRegularOperation}, K::kClosureLaw,
                    pairwise_closure(C::kGammaOpen, C::kGammaOpen, false, "intersection")));
    r.push_back(law("Sec 2 tau=tau_gamma", "tau = tau_gamma iff the space is gamma-regular", {}, K::kStructural,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        bool regular = is_gamma_regular_space(f.context());
                        bool equal = tau_equals_tau_gamma(f.context());
                        if (regular != equal)
                            return Violation{SubsetMask(), std::nullopt, -1,
                                             std::string("gamma-regular ") + (regular ? "yes" : "no") +
                                                 ", tau = tau_gamma " + (equal ? "yes" : "no")};
                        return std::nullopt;
                    }));
    r.push_back(implication("Sec 2 tau_gamma<=tau", "every gamma-open set is open", {}, {C::kGammaOpen},
                            {C::kOpen}));

    // Basic inclusions.
    r.push_back(implication("Thm 3.2", "every gamma-open set is pre-gamma-I-open", {}, {C::kGammaOpen}, {pgio}));
    r.push_back(implication("Thm 3.4", "every pre-gamma-I-open set is pre-gamma-open", {}, {pgio},
                            {C::kPreGammaOpen}));
    r.push_back(implication("Thm 3.6", "every pre-gamma-I-open set is pre-I-open", {}, {pgio}, {C::kPreIOpen}));
    r.push_back(implication("Thm 3.8", "every pre-gamma-I-open set is gamma-preopen", {}, {pgio},
                            {C::kGammaPreopen}));
    r.push_back(implication("Thm 3.10", "every pre-gamma-I-open set is gamma-p-open", {}, {pgio},
                            {C::kGammaPOpen}));

    // Closure laws and ideal extremes.
    r.push_back(law("Thm 3.14(1)", "PgIO(X) is closed under arbitrary unions", {}, K::kClosureLaw,
                    [pgio](const ContextFacts& f) -> std::optional<Violation> {
                        if (!f.classes(SubsetMask()).has(pgio))
                            return Violation{SubsetMask(), std::nullopt, -1, "empty union is not pre-gamma-I-open"};
                        return pairwise_closure(pgio, pgio, true, "union")(f);
                    }));
    r.push_back(law("Thm 3.14(2)", "regular operation: A in PgIO(X), U gamma-open implies A n U in PgIO(X)",
                    {P::kRegularOperation}, K::kClosureLaw,
                    [pgio](const ContextFacts& f) -> std::optional<Violation> {
                        const int n = f.context().size();
                        for (std::uint32_t a = 0; a < subset_count(n); ++a) {
                            if (!f.classes(SubsetMask(a)).has(pgio))
                                continue;
                            for (std::uint32_t u = 0; u < subset_count(n); ++u) {
                                if (!f.classes(SubsetMask(u)).has(C::kGammaOpen))
                                    continue;
                                if (!f.classes(SubsetMask(a & u)).has(pgio))
                                    return Violation{SubsetMask(a), SubsetMask(u), -1,
                                                     "A n U is not pre-gamma-I-open"};
                            }
                        }
                        return std::nullopt;
                    }));
    r.push_back(equivalence("Prop 3.15(1)", "I = {0}: pre-gamma-I-open iff pre-gamma-open", {P::kTrivialIdeal},
                            {{pgio}, {C::kPreGammaOpen}}));
    r.push_back(equivalence("Prop 3.15(2)", "I = P(X): PgIO(X) = tau_gamma", {P::kFullIdeal},
                            {{pgio}, {C::kGammaOpen}}, K::kFamilyIdentity));

    // Hypothesis-dependent remarks and propositions.
    r.push_back(implication("Remark 3.16(1)", "gamma-regular: open implies pre-gamma-I-open", {P::kGammaRegular},
                            {C::kOpen}, {pgio}));
    r.push_back(implication("Remark 3.16(2)", "submaximal: pre-gamma-I-open implies open", {P::kSubmaximal}, {pgio},
                            {C::kOpen}));
    r.push_back(equivalence("Remark 3.16(3)", "gamma-regular, I = P(X): pre-gamma-I-open iff open",
                            {P::kGammaRegular, P::kFullIdeal}, {{pgio}, {C::kOpen}}));
    r.push_back(implication("Remark 3.17(1)", "gamma-regular, I = P(X): R-I-open implies pre-gamma-I-open",
                            {P::kGammaRegular, P::kFullIdeal}, {C::kRIOpen}, {pgio}));
    r.push_back(implication("Remark 3.17(2)", "gamma-regular, I = P(X): delta_I-open implies pre-gamma-I-open",
                            {P::kGammaRegular, P::kFullIdeal}, {C::kDeltaIOpen}, {pgio}));
    r.push_back(implication("Remark 3.17(3)", "gamma-regular, I = P(X): regular open implies pre-gamma-I-open",
                            {P::kGammaRegular, P::kFullIdeal}, {C::kRegularOpen}, {pgio}));
    r.push_back(implication("Remark 3.17(4)", "gamma-regular, I = P(X): delta-open implies pre-gamma-I-open",
                            {P::kGammaRegular, P::kFullIdeal}, {C::kDeltaOpen}, {pgio}));
    r.push_back(implication("Remark 3.18(1)", "I = P(X): pre-gamma-I-open implies open", {P::kFullIdeal}, {pgio},
                            {C::kOpen}));
    r.push_back(implication("Remark 3.18(2)", "I = P(X): pre-gamma-I-open implies alpha-I-open", {P::kFullIdeal},
                            {pgio}, {C::kAlphaIOpen}));
    r.push_back(implication("Remark 3.18(3)", "I = P(X): pre-gamma-I-open implies semi-I-open", {P::kFullIdeal},
                            {pgio}, {C::kSemiIOpen}));
    r.push_back(implication("Prop 3.19", "closed and pre-gamma-I-open implies R-I-open", {}, {C::kClosed, pgio},
                            {C::kRIOpen}));
    r.push_back(implication("Remark 3.20", "gamma-regular: R-I-open implies pre-gamma-I-open", {P::kGammaRegular},
                            {C::kRIOpen}, {pgio}));
    r.push_back(equivalence("Remark 3.21(1)", "gamma-regular, I = {0}: pre-gamma-I-open iff preopen",
                            {P::kGammaRegular, P::kTrivialIdeal}, {{pgio}, {C::kPreopen}}));
    r.push_back(equivalence("Remark 3.21(2)", "gamma-regular, I = {0}: pre-gamma-I-open iff gamma-preopen",
                            {P::kGammaRegular, P::kTrivialIdeal}, {{pgio}, {C::kGammaPreopen}}));
    r.push_back(equivalence("Remark 3.21(3)", "gamma-regular, I = {0}: pre-gamma-I-open iff gamma-p-open",
                            {P::kGammaRegular, P::kTrivialIdeal}, {{pgio}, {C::kGammaPOpen}}));
    r.push_back(implication("Prop 3.22", "I = {0}: pre-gamma-I-open implies I-open", {P::kTrivialIdeal}, {pgio},
                            {C::kIOpen}));
    r.push_back(implication("Remark 3.23", "gamma-regular: delta_I-open implies pre-gamma-I-open",
                            {P::kGammaRegular}, {C::kDeltaIOpen}, {pgio}));
    r.push_back(equivalence("Remark 3.24", "gamma-regular: pre-gamma-I-open iff pre-I-open", {P::kGammaRegular},
                            {{pgio}, {C::kPreIOpen}}));
    r.push_back(implication("Prop 3.25", "*-perfect and pre-gamma-I-open implies gamma-open", {},
                            {StarFlag::kPerfect, pgio}, {C::kGammaOpen}));
    r.push_back(implication("Remark 3.26", "*-perfect and pre-gamma-I-open implies open", {},
                            {StarFlag::kPerfect, pgio}, {C::kOpen}));
    r.push_back(implication("Prop 3.27", "tau*-closed and pre-gamma-I-open implies gamma-open", {},
                            {StarFlag::kTauStarClosed, pgio}, {C::kGammaOpen}));
    r.push_back(implication("Remark 3.28", "tau*-closed and pre-gamma-I-open implies open", {},
                            {StarFlag::kTauStarClosed, pgio}, {C::kOpen}));
    r.push_back(implication("Prop 3.29", "*-perfect and pre-gamma-I-open implies I-open", {},
                            {StarFlag::kPerfect, pgio}, {C::kIOpen}));
    r.push_back(implication("Prop 3.30", "*-dense-in-itself and pre-gamma-I-open implies I-open", {},
                            {StarFlag::kDenseInItself, pgio}, {C::kIOpen}));

    const std::vector<P> ed_regular = {P::kStarExtremallyDisconnected, P::kGammaRegular};
    r.push_back(implication("Prop 3.31", "*-e.d. gamma-regular: alpha-I-open implies pre-gamma-I-open", ed_regular,
                            {C::kAlphaIOpen}, {pgio}));
    r.push_back(implication("Prop 3.32", "*-e.d. gamma-regular: semi-I-open implies pre-gamma-I-open", ed_regular,
                            {C::kSemiIOpen}, {pgio}));
    r.push_back(implication("Prop 3.33", "*-e.d. gamma-regular, I = P(X): b-I-open implies pre-gamma-I-open",
                            {P::kStarExtremallyDisconnected, P::kGammaRegular, P::kFullIdeal}, {C::kBIOpen},
                            {pgio}));
    r.push_back(equivalence("Thm 3.34",
                            "*-e.d. gamma-regular: gamma-open iff (alpha-I | pre-gamma-I | pre-I | semi-I | b-I)-open "
                            "and weakly I-local closed",
                            ed_regular,
                            {{C::kGammaOpen},
                             {C::kAlphaIOpen, C::kWeaklyILocalClosed},
                             {pgio, C::kWeaklyILocalClosed},
                             {C::kPreIOpen, C::kWeaklyILocalClosed},
                             {C::kSemiIOpen, C::kWeaklyILocalClosed},
                             {C::kBIOpen, C::kWeaklyILocalClosed}}));
    r.push_back(equivalence("Thm 3.35",
                            "*-e.d. gamma-regular: gamma-open iff (alpha-I | pre-gamma-I | pre-I | semi-I | b-I)-open "
                            "and locally closed",
                            ed_regular,
                            {{C::kGammaOpen},
                             {C::kAlphaIOpen, C::kLocallyClosed},
                             {pgio, C::kLocallyClosed},
                             {C::kPreIOpen, C::kLocallyClosed},
                             {C::kSemiIOpen, C::kLocallyClosed},
                             {C::kBIOpen, C::kLocallyClosed}}));

    // Closed-set characterizations.
    r.push_back(law("Thm 3.37", "A pre-gamma-I-closed iff tau_gamma-Cl(Int*(A)) <= A", {}, K::kEquivalence,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b) {
                            SubsetMask a(b);
                            bool closed = f.classes(a).has(C::kPreGammaIClosed);
                            auto lhs = tau_gamma_cl(ctx, star_interior(ctx.topology(), ctx.ideal(), a));
                            if (closed != lhs.subset_of(a))
                                return Violation{a, std::nullopt, -1,
                                                 "tau_gamma-Cl(Int*(A)) = " + idx(ctx, lhs) + ", class says " +
                                                     (closed ? "closed" : "not closed")};
                        }
                        return std::nullopt;
                    }));
    r.push_back(law("Thm 3.38", "A pre-gamma-I-closed implies Cl(tau_gamma-Int(A)) <= A", {}, K::kImplication,
                    [](const ContextFacts& f) -> std::optional<Violation> {
                        const auto& ctx = f.context();
                        for (std::uint32_t b = 0; b < subset_count(ctx.size()); ++b) {
                            SubsetMask a(b);
                            if (!f.classes(a).has(C::kPreGammaIClosed))
                                continue;
                            auto lhs = closure(ctx.topology(), tau_gamma_int(ctx, a));
                            if (!lhs.subset_of(a))
                                return Violation{a, std::nullopt, -1, "Cl(tau_gamma-Int(A)) = " + idx(ctx, lhs)};
                        }
                        return std::nullopt;
                    }));
    return r;
}

std::vector<TheoremSpec> make_converses()
{
    std::vector<TheoremSpec> r;
    const C pgio = C::kPreGammaIOpen;
    r.push_back(implication("Thm 3.2 converse", "every pre-gamma-I-open set is gamma-open", {}, {pgio},
                            {C::kGammaOpen}));
    r.push_back(implication("Thm 3.4 converse", "every pre-gamma-open set is pre-gamma-I-open", {},
                            {C::kPreGammaOpen}, {pgio}));
    r.push_back(implication("Thm 3.6 converse", "every pre-I-open set is pre-gamma-I-open", {}, {C::kPreIOpen},
                            {pgio}));
    r.push_back(implication("Thm 3.8 converse", "every gamma-preopen set is pre-gamma-I-open", {},
                            {C::kGammaPreopen}, {pgio}));
    r.push_back(implication("Thm 3.10 converse", "every gamma-p-open set is pre-gamma-I-open", {},
                            {C::kGammaPOpen}, {pgio}));
    r.push_back(law("PgIO intersection", "PgIO(X) is closed under finite intersections", {}, K::kClosureLaw,
                    pairwise_closure(pgio, pgio, false, "intersection")));
    return r;
}

bool link_holds(const Conjunction& from, const Conjunction& to, const std::function<bool(const Atom&)>& value)
{
    for (const auto& a : from)
        if (!value(a))
            return true;
    for (const auto& a : to)
        if (!value(a))
            return false;
    return true;
}

} // namespace

std::string_view kind_name(TheoremSpec::Kind k)
{
    switch (k) {
    case K::kImplication: return "implication";
    case K::kEquivalence: return "equivalence";
    case K::kFamilyIdentity: return "family_identity";
    case K::kClosureLaw: return "closure_law";
    case K::kStructural: return "structural";
    }
    return "?";
}

bool TheoremSpec::accepts(const ContextFacts& facts) const
{
    for (auto p : requires_properties)
        if (!facts.property(p))
            return false;
    return true;
}

std::optional<Violation> TheoremSpec::check(const ContextFacts& facts) const
{
    if (law)
        return law(facts);
    const int n = facts.context().size();
    const std::size_t links = cyclic() ? chain.size() : chain.size() - 1;
    for (std::uint32_t b = 0; b < subset_count(n); ++b) {
        SubsetMask a(b);
        auto value = [&](const Atom& atom) { return facts.atom(atom, a); };
        for (std::size_t i = 0; i < links; ++i) {
            const auto& from = chain[i];
            const auto& to = chain[(i + 1) % chain.size()];
            if (!link_holds(from, to, value))
                return Violation{a, std::nullopt, static_cast<int>(i),
                                 conjunction_name(from) + " holds but " + conjunction_name(to) + " fails"};
        }
    }
    return std::nullopt;
}

const std::vector<TheoremSpec>& builtin_theorems()
{
    static const std::vector<TheoremSpec> roster = make_roster();
    return roster;
}

const std::vector<TheoremSpec>& converse_theorems()
{
    static const std::vector<TheoremSpec> converses = make_converses();
    return converses;
}

const TheoremSpec* find_theorem(std::string_view id)
{
    for (const auto* list : {&builtin_theorems(), &converse_theorems()})
        for (const auto& s : *list)
            if (s.id == id)
                return &s;
    return nullptr;
}

std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::kClean: return "no_counterexample";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kBudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

bool recheck_violation(const TheoremSpec& spec, const SpaceContext& ctx, const Violation& v)
{
    for (auto p : spec.requires_properties)
        if (!has_property(ctx, p))
            return false;
    if (spec.law) {
        ContextFacts fresh(ctx);
        auto again = spec.law(fresh);
        return again && again->subset == v.subset && again->partner == v.partner;
    }
    if (v.link < 0 || static_cast<std::size_t>(v.link) >= spec.chain.size())
        return false;
    const auto& from = spec.chain[v.link];
    const auto& to = spec.chain[(v.link + 1) % spec.chain.size()];
    auto value = [&](const Atom& atom) { return evaluate_atom(ctx, atom, v.subset); };
    return !link_holds(from, to, value);
}

VerificationReport verify(const TheoremSpec& spec, const Bounds& bounds)
{
    return verify_all({spec}, bounds).front();
}

std::vector<VerificationReport> verify_all(const std::vector<TheoremSpec>& specs, const Bounds& bounds)
{
    using clock = std::chrono::steady_clock;
    std::vector<VerificationReport> reports(specs.size());
    std::vector<double> elapsed(specs.size(), 0.0);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        reports[i].id = specs[i].id;
        reports[i].statement = specs[i].statement;
    }
    std::size_t open_specs = specs.size();

    auto outcome = scan_universe(bounds, [&](const ContextCoordinates& at, const SpaceContext& ctx) {
        ContextFacts facts(ctx);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            auto& rep = reports[i];
            if (rep.verdict != Verdict::kClean)
                continue;
            auto start = clock::now();
            if (specs[i].accepts(facts)) {
                ++rep.contexts_scanned;
                if (auto v = specs[i].check(facts)) {
                    if (!recheck_violation(specs[i], ctx, *v))
                        throw Error(ErrorCode::kEngineDefect,
                                    "violation of " + specs[i].id + " did not survive an independent recheck");
                    std::vector<std::pair<std::string, bool>> evaluated;
                    if (!specs[i].law) {
                        for (const auto& conj : specs[i].chain)
                            for (const auto& atom : conj)
                                evaluated.emplace_back(atom_name(atom), evaluate_atom(ctx, atom, v->subset));
                    }
                    rep.verdict = Verdict::kCounterexample;
                    rep.witness = Witness{at, ctx, v->subset, v->partner, v->detail, std::move(evaluated)};
                    --open_specs;
                }
            }
            elapsed[i] += std::chrono::duration<double, std::milli>(clock::now() - start).count();
        }
        return open_specs > 0;
    });

    for (std::size_t i = 0; i < specs.size(); ++i) {
        reports[i].runtime_ms = elapsed[i];
        if (outcome.budget_exceeded && reports[i].verdict == Verdict::kClean) {
            reports[i].verdict = Verdict::kBudgetExceeded;
            reports[i].budget_message = outcome.budget_message;
        }
    }
    return reports;
}

namespace {

SubsetMask named(const std::vector<std::string>& points, std::initializer_list<const char*> names)
{
    SubsetMask out;
    for (const char* name : names)
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == name)
                out |= SubsetMask::point(static_cast<int>(i));
    return out;
}

Fixture constant_x_fixture(std::string name, std::vector<std::string> points,
                           std::vector<std::initializer_list<const char*>> opens,
                           std::initializer_list<const char*> ideal_max)
{
    int n = static_cast<int>(points.size());
    std::vector<SubsetMask> masks = {SubsetMask::empty_set(), SubsetMask::full(n)};
    for (auto o : opens)
        masks.push_back(named(points, o));
    Topology t(n, std::move(masks));
    Ideal ideal(n, named(points, ideal_max));
    auto gamma = make_preset(t, GammaPreset::kConstantX);
    return Fixture{std::move(name), std::move(points), SpaceContext(std::move(t), ideal, std::move(gamma))};
}

std::vector<Fixture> make_fixtures()
{
    std::vector<std::string> abc = {"a", "b", "c"};
    std::vector<Fixture> f;
    f.push_back(constant_x_fixture("E3.3", abc, {{"a", "c"}}, {"b"}));
    f.push_back(constant_x_fixture("E3.5", abc, {{"b", "c"}}, {"c"}));
    f.push_back(constant_x_fixture("E3.7", abc, {{"c"}}, {"c"}));
    f.push_back(constant_x_fixture("E3.9", abc, {{"b"}, {"a", "b"}}, {"b"}));
    {
        std::vector<std::string> abcd = {"a", "b", "c", "d"};
        Topology t = Topology::discrete(4);
        auto gamma = make_preset(t, GammaPreset::kConstantX);
        f.push_back(Fixture{"E3.11", abcd, SpaceContext(std::move(t), Ideal::trivial(4), std::move(gamma))});
    }
    f.push_back(constant_x_fixture("E3.13", abc, {{"a", "c"}}, {"b"}));
    return f;
}

} // namespace

const std::vector<Fixture>& paper_fixtures()
{
    static const std::vector<Fixture> fixtures = make_fixtures();
    return fixtures;
}

std::vector<FixtureCheck> check_fixtures()
{
    std::vector<FixtureCheck> out;
    const auto& fx = paper_fixtures();
    auto fixture = [&](std::string_view name) -> const Fixture& {
        for (const auto& f : fx)
            if (f.name == name)
                return f;
        throw Error(ErrorCode::kEngineDefect, "missing fixture " + std::string(name));
    };
    auto member = [&](std::string_view name, std::initializer_list<const char*> subset, SetClass c, bool expected) {
        const auto& f = fixture(name);
        auto a = named(f.points, subset);
        std::string label = "{";
        for (const char* p : subset)
            label += (label.size() > 1 ? "," : "") + std::string(p);
        label += "}";
        out.push_back(FixtureCheck{f.name, label + (expected ? " in " : " not in ") + std::string(class_name(c)),
                                   expected, is_member(f.context, c, a)});
    };
    auto equals = [&](std::string_view name, std::string claim, SubsetMask actual, SubsetMask expected) {
        out.push_back(FixtureCheck{std::string(name), std::move(claim), true, actual == expected});
    };

    member("E3.3", {"a", "b"}, C::kPreGammaIOpen, true);
    member("E3.3", {"a", "b"}, C::kGammaOpen, false);

    {
        const auto& f = fixture("E3.5");
        const auto& ctx = f.context;
        auto a = named(f.points, {"c"});
        member("E3.5", {"c"}, C::kPreGammaOpen, true);
        member("E3.5", {"c"}, C::kPreGammaIOpen, false);
        equals("E3.5", "{c}* = {}", local_function(ctx.topology(), ctx.ideal(), a), SubsetMask());
        equals("E3.5", "Cl*({c}) = {c}", star_closure(ctx.topology(), ctx.ideal(), a), a);
    }

    member("E3.7", {"c"}, C::kPreIOpen, true);
    member("E3.7", {"c"}, C::kPreGammaIOpen, false);

    member("E3.9", {"b", "c"}, C::kGammaPreopen, true);
    member("E3.9", {"b", "c"}, C::kPreGammaIOpen, false);

    member("E3.11", {"c", "d"}, C::kGammaPOpen, true);
    member("E3.11", {"c", "d"}, C::kPreGammaIOpen, false);

    {
        const auto& f = fixture("E3.13");
        const auto& ctx = f.context;
        member("E3.13", {"a", "b"}, C::kPreGammaIOpen, true);
        member("E3.13", {"b", "c"}, C::kPreGammaIOpen, true);
        equals("E3.13", "{a,b}* = X", local_function(ctx.topology(), ctx.ideal(), named(f.points, {"a", "b"})),
               ctx.universe());
        equals("E3.13", "{b,c}* = X", local_function(ctx.topology(), ctx.ideal(), named(f.points, {"b", "c"})),
               ctx.universe());
        member("E3.13", {"b"}, C::kPreGammaIOpen, false);
    }
    return out;
}

} // namespace idealtop
