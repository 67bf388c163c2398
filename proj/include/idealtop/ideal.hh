#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idealtop/subset.hh"
#include "idealtop/topology.hh"

namespace idealtop {

std::optional<FamilyDefect> ideal_defect(int n, std::span<const SubsetMask> family);
bool is_ideal(int n, std::span<const SubsetMask> family);
inline bool is_ideal(const SetFamily& f) { return is_ideal(f.n, f.members); }

/// An ideal on a finite set. Finite ideals are principal, so the ideal is
/// stored as its largest member M and is exactly the powerset of M.
class Ideal {
public:
    Ideal(int n, SubsetMask max_member);
    /// Validates the family; throws Error(kNotIdeal).
    static Ideal from_members(int n, std::span<const SubsetMask> members);

    static Ideal trivial(int n) { return Ideal(n, SubsetMask::empty_set()); }
    static Ideal full(int n) { return Ideal(n, SubsetMask::full(n)); }

    int size() const { return n_; }
    SubsetMask max_member() const { return max_; }
    bool contains(SubsetMask a) const { return a.subset_of(max_); }
    bool is_trivial() const { return max_.empty(); }
    bool is_full() const { return max_ == SubsetMask::full(n_); }

    /// Materialized members in increasing mask order.
    std::vector<SubsetMask> members() const;

    bool operator==(const Ideal&) const = default;

private:
    int n_;
    SubsetMask max_;
};

/// The 2^n ideals P(M), ordered by M.
std::vector<Ideal> enumerate_ideals(int n);

/// The local function A* with respect to (t, ideal): points whose every open
/// neighbourhood U has U ∩ A outside the ideal.
SubsetMask local_function(const Topology& t, const Ideal& ideal, SubsetMask a);

/// Cl*(A) = A ∪ A*.
SubsetMask star_closure(const Topology& t, const Ideal& ideal, SubsetMask a);
/// Int*(A) = X − Cl*(X − A).
SubsetMask star_interior(const Topology& t, const Ideal& ideal, SubsetMask a);

struct StarStatus {
    bool dense_in_itself = false; // A ⊆ A*
    bool tau_star_closed = false; // A* ⊆ A
    bool perfect = false;         // A = A*
    bool operator==(const StarStatus&) const = default;
};

StarStatus star_status(const Topology& t, const Ideal& ideal, SubsetMask a);

/// Points x such that Int(Cl*(U)) meets A for every open U containing x.
SubsetMask delta_I_closure(const Topology& t, const Ideal& ideal, SubsetMask a);
bool is_delta_I_closed(const Topology& t, const Ideal& ideal, SubsetMask a);
bool is_delta_I_open(const Topology& t, const Ideal& ideal, SubsetMask a);

/// A = U ∩ Cl*(A) for some open U.
bool is_weakly_I_local_closed(const Topology& t, const Ideal& ideal, SubsetMask a);
/// A = U ∩ K for some open U and some K with K* ⊆ K.
bool is_weakly_I_local_closed_by_pairs(const Topology& t, const Ideal& ideal, SubsetMask a);

/// Cl*(V) is open for every open V.
bool is_star_extremally_disconnected_by_definition(const Topology& t, const Ideal& ideal);
/// The definitional test, cross-checked against the subset-wide inclusion
/// form below; a disagreement throws Error(kEngineDefect).
bool is_star_extremally_disconnected(const Topology& t, const Ideal& ideal);
/// Cl*(Int(V)) ⊆ Int(Cl*(V)) for every subset V.
bool star_closure_of_interior_inside_interior_of_star_closure(const Topology& t, const Ideal& ideal);

} // namespace idealtop
