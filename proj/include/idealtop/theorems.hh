#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idealtop/scan.hh"

namespace idealtop {

/// A failed check inside one context.
struct Violation {
    SubsetMask subset;
    std::optional<SubsetMask> partner;
    /// For chain specs: the failing link i (chain[i] => chain[i+1]), else -1.
    int link = -1;
    std::string detail;
};

using LawCheck = std::function<std::optional<Violation>(const ContextFacts&)>;

/// A machine-checkable claim. Per-set claims are a chain of conjunctions:
/// an implication checks each chain[i] => chain[i+1]; an equivalence or a
/// family identity also closes the cycle back to chain[0]. Claims that
/// quantify over pairs of sets or over the whole space carry a `law` instead.
struct TheoremSpec {
    enum class Kind { kImplication, kEquivalence, kFamilyIdentity, kClosureLaw, kStructural };

    std::string id;
    std::string statement;
    std::vector<SpaceProperty> requires_properties;
    Kind kind = Kind::kImplication;
    std::vector<Conjunction> chain;
    LawCheck law;

    bool cyclic() const { return kind == Kind::kEquivalence || kind == Kind::kFamilyIdentity; }
    bool accepts(const ContextFacts& facts) const;
    std::optional<Violation> check(const ContextFacts& facts) const;
};

std::string_view kind_name(TheoremSpec::Kind k);

/// The full roster of claims expected to hold on every finite space.
const std::vector<TheoremSpec>& builtin_theorems();

/// Converses of the basic inclusions and the intersection-closure claim; each
/// is expected to be refuted.
const std::vector<TheoremSpec>& converse_theorems();

/// Looks up an id in the roster, then among the converses.
const TheoremSpec* find_theorem(std::string_view id);

enum class Verdict { kClean, kCounterexample, kBudgetExceeded };
std::string_view verdict_name(Verdict v);

struct VerificationReport {
    std::string id;
    std::string statement;
    /// Contexts that passed the spec's filter and were examined.
    std::uint64_t contexts_scanned = 0;
    Verdict verdict = Verdict::kClean;
    std::optional<Witness> witness;
    std::string budget_message;
    double runtime_ms = 0.0;
};

/// Re-evaluates a reported violation from scratch, bypassing ContextFacts.
bool recheck_violation(const TheoremSpec& spec, const SpaceContext& ctx, const Violation& v);

VerificationReport verify(const TheoremSpec& spec, const Bounds& bounds);

/// Verifies every spec in one pass over the universe. Each report carries the
/// first counterexample in canonical order, exactly as verify() would.
std::vector<VerificationReport> verify_all(const std::vector<TheoremSpec>& specs, const Bounds& bounds);

inline std::vector<VerificationReport> run_all(const Bounds& bounds)
{
    return verify_all(builtin_theorems(), bounds);
}

/// A named space taken verbatim from a worked example.
struct Fixture {
    std::string name;
    std::vector<std::string> points;
    SpaceContext context;
};

const std::vector<Fixture>& paper_fixtures();

struct FixtureCheck {
    std::string fixture;
    std::string claim;
    bool expected = false;
    bool actual = false;
    bool passed() const { return expected == actual; }
};

/// Every membership and operator claim the worked examples make.
std::vector<FixtureCheck> check_fixtures();

} // namespace idealtop
