#pragma once

// Brute-force reference model. Everything here is written straight from the
// definitions over plain bit patterns and member lists, and shares no code
// with the library beyond the types used to hand values across.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Bits = std::uint32_t;

inline Bits full(int n) { return (1u << n) - 1u; }
inline bool sub(Bits a, Bits b) { return (a & ~b) == 0; }

struct Space {
    int n = 0;
    std::vector<Bits> opens;
    std::vector<Bits> ideal;             // member list
    std::vector<std::pair<Bits, Bits>> gamma; // (open, image)
};

inline bool is_open(const Space& s, Bits a) { return std::find(s.opens.begin(), s.opens.end(), a) != s.opens.end(); }
inline bool in_ideal(const Space& s, Bits a) { return std::find(s.ideal.begin(), s.ideal.end(), a) != s.ideal.end(); }

inline Bits gamma_of(const Space& s, Bits v)
{
    for (auto [o, img] : s.gamma)
        if (o == v)
            return img;
    return v;
}

inline Bits interior(const Space& s, Bits a)
{
    Bits out = 0;
    for (Bits u : s.opens)
        if (sub(u, a))
            out |= u;
    return out;
}

/// Intersection of the closed supersets.
inline Bits closure(const Space& s, Bits a)
{
    Bits out = full(s.n);
    for (Bits u : s.opens) {
        Bits k = full(s.n) & ~u;
        if (sub(a, k))
            out &= k;
    }
    return out;
}

inline Bits local_function(const Space& s, Bits a)
{
    Bits out = 0;
    for (int x = 0; x < s.n; ++x) {
        bool every = true;
        for (Bits u : s.opens)
            if ((u >> x & 1u) && in_ideal(s, u & a))
                every = false;
        if (every)
            out |= 1u << x;
    }
    return out;
}

inline Bits star_closure(const Space& s, Bits a) { return a | local_function(s, a); }

inline bool gamma_open(const Space& s, Bits a)
{
    for (int x = 0; x < s.n; ++x) {
        if (!(a >> x & 1u))
            continue;
        bool found = false;
        for (Bits u : s.opens)
            if ((u >> x & 1u) && sub(gamma_of(s, u), a))
                found = true;
        if (!found)
            return false;
    }
    return true;
}

inline Bits gamma_interior(const Space& s, Bits a)
{
    Bits out = 0;
    for (Bits b = 0; b <= full(s.n); ++b)
        if (sub(b, a) && gamma_open(s, b))
            out |= b;
    return out;
}

inline Bits gamma_closure(const Space& s, Bits a) { return full(s.n) & ~gamma_interior(s, full(s.n) & ~a); }

inline Bits delta_I_closure(const Space& s, Bits a)
{
    Bits out = 0;
    for (int x = 0; x < s.n; ++x) {
        bool every = true;
        for (Bits u : s.opens)
            if ((u >> x & 1u) && !(interior(s, star_closure(s, u)) & a))
                every = false;
        if (every)
            out |= 1u << x;
    }
    return out;
}

inline bool regular_open(const Space& s, Bits a) { return a == interior(s, closure(s, a)); }

/// Membership by class catalogue position (same order as SetClass).
inline bool member(const Space& s, int cls, Bits a)
{
    const Bits X = full(s.n);
    switch (cls) {
    case 0: return is_open(s, a);
    case 1: return is_open(s, X & ~a);
    case 2: return regular_open(s, a);
    case 3: {
        for (int x = 0; x < s.n; ++x) {
            if (!(a >> x & 1u))
                continue;
            bool found = false;
            for (Bits u : s.opens)
                if ((u >> x & 1u) && sub(u, a) && regular_open(s, u))
                    found = true;
            if (!found)
                return false;
        }
        return true;
    }
    case 4: return gamma_open(s, a);
    case 5: return sub(a, interior(s, closure(s, a)));
    case 6: return sub(a, gamma_interior(s, closure(s, a)));
    case 7: return sub(a, gamma_interior(s, gamma_closure(s, a)));
    case 8: return sub(a, interior(s, gamma_closure(s, a)));
    case 9: return sub(a, interior(s, local_function(s, a)));
    case 10: return a == interior(s, star_closure(s, a));
    case 11: return sub(a, interior(s, star_closure(s, a)));
    case 12: return sub(a, star_closure(s, interior(s, a)));
    case 13: return sub(a, interior(s, star_closure(s, interior(s, a))));
    case 14: return sub(a, interior(s, star_closure(s, a)) | star_closure(s, interior(s, a)));
    case 15: {
        Bits k = star_closure(s, a);
        for (Bits u : s.opens)
            if ((u & k) == a)
                return true;
        return false;
    }
    case 16: {
        Bits k = closure(s, a);
        for (Bits u : s.opens)
            if ((u & k) == a)
                return true;
        return false;
    }
    case 17: {
        Bits b = X & ~a;
        return delta_I_closure(s, b) == b;
    }
    case 18: return sub(a, gamma_interior(s, star_closure(s, a)));
    case 19: {
        Bits b = X & ~a;
        return sub(b, gamma_interior(s, star_closure(s, b)));
    }
    }
    return false;
}

inline bool is_topology(int n, const std::vector<Bits>& fam)
{
    auto has = [&](Bits b) { return std::find(fam.begin(), fam.end(), b) != fam.end(); };
    if (!has(0) || !has(full(n)))
        return false;
    for (Bits a : fam)
        for (Bits b : fam)
            if (!has(a | b) || !has(a & b))
                return false;
    return true;
}

inline bool is_ideal(int n, const std::vector<Bits>& fam)
{
    auto has = [&](Bits b) { return std::find(fam.begin(), fam.end(), b) != fam.end(); };
    if (fam.empty())
        return false;
    for (Bits a : fam) {
        if (!sub(a, full(n)))
            return false;
        for (Bits b : fam)
            if (!has(a | b))
                return false;
        for (Bits c = 0; c <= full(n); ++c)
            if (sub(c, a) && !has(c))
                return false;
    }
    return true;
}

/// Counts topologies on n points by filtering every family of proper
/// nonempty subsets, with families represented as 64-bit membership words.
inline std::uint64_t count_topologies(int n)
{
    const Bits X = full(n);
    const int slots = static_cast<int>(X) - 1; // proper nonempty subsets 1..X-1
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
        std::vector<Bits> fam{0, X};
        for (int i = 0; i < slots; ++i)
            if (code >> i & 1u)
                fam.push_back(static_cast<Bits>(i + 1));
        count += is_topology(n, fam);
    }
    return count;
}

/// Counts ideals on n points by filtering every family of subsets.
inline std::uint64_t count_ideals(int n)
{
    const int slots = 1 << n;
    std::uint64_t count = 0;
    for (std::uint64_t code = 1; code < (std::uint64_t{1} << slots); ++code) {
        std::vector<Bits> fam;
        for (int i = 0; i < slots; ++i)
            if (code >> i & 1u)
                fam.push_back(static_cast<Bits>(i));
        count += is_ideal(n, fam);
    }
    return count;
}

} // namespace oracle
