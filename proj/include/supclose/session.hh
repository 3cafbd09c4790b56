#ifndef SUPCLOSE_SESSION_HH
#define SUPCLOSE_SESSION_HH

#include "supclose/groebner.hh"
#include "supclose/module_theory.hh"
#include "supclose/semigroup.hh"
#include "supclose/zspec.hh"

#include <map>
#include <optional>
#include <string>

// Named-object store parsed from a session file.  A session declares at
// most one polynomial ring (rational or prime-field coefficients) and
// any number of named ideals, cyclic-sum modules, numerical semigroups,
// semigroup extensions, integer localizations and ℤ-modules.
//
// Session files are JSON:
//   {"ring":     {"coeff": "Q" | {"Fp": p}, "vars": ["x", ...]},
//    "ideals":   {name: ["x^2", ...], ...},
//    "modules":  {name: {"cyclic": [idealName, ...]}, ...},
//    "semigroups": {name: [2, 3], ...},
//    "sg_extensions": {name: {"small": sgName, "large": sgName | "N"}, ...},
//    "zloc":     {name: n, ...},
//    "zmodules": {name: {"torsion": [n, ...], "free": r,
//                        "cofinite_exclude": [p, ...]?}, ...}}
// All keys are optional; "ring" is required once "ideals" or "modules"
// appear.  A "cofinite_exclude" key (even empty) attaches the infinite
// family ⊕ ℤ/p over the primes p not listed.

namespace supclose {

template <typename K>
struct TypedSession {
    RingPtr<K> ring;
    std::map<std::string, Ideal<K>> ideals;
    std::map<std::string, CyclicSumModule<K>> modules;

    const Ideal<K>& ideal(const std::string& name) const
    {
        const auto it = ideals.find(name);
        if (it == ideals.end())
            throw lookup_error("unknown ideal '" + name + "'");
        return it->second;
    }

    const CyclicSumModule<K>& module(const std::string& name) const
    {
        const auto it = modules.find(name);
        if (it == modules.end())
            throw lookup_error("unknown module '" + name + "'");
        return it->second;
    }
};

struct Session {
    // Exactly one of these is engaged when a ring is declared.
    std::optional<TypedSession<Rat>> rat;
    std::optional<TypedSession<Fp>> fp;

    std::map<std::string, NumericalSemigroup> semigroups;
    std::map<std::string, SemigroupExtension> sg_extensions;
    std::map<std::string, uint64_t> zlocs;
    std::map<std::string, ZModule> zmodules;

    const NumericalSemigroup& semigroup(const std::string& name) const;
    const SemigroupExtension& sg_extension(const std::string& name) const;
    const ZModule& zmodule(const std::string& name) const;
};

Session parse_session_text(const std::string& text);
Session parse_session(const std::string& path);

// Canonical JSON serialization (sorted keys, canonical polynomial text).
// parse_session_text(print_session(s)) reconstructs an equivalent session.
// Module components are printed by ideal name, so every component must
// equal one of the session's named ideals — true of any parsed session.
std::string print_session(const Session& session);

} // namespace supclose

#endif
