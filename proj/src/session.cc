#include "supclose/session.hh"
#include "supclose/errors.hh"
#include "supclose/parse.hh"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace supclose {

using nlohmann::json;

const NumericalSemigroup& Session::semigroup(const std::string& name) const
{
    const auto it = semigroups.find(name);
    if (it == semigroups.end())
        throw lookup_error("unknown semigroup '" + name + "'");
    return it->second;
}

const SemigroupExtension& Session::sg_extension(const std::string& name) const
{
    const auto it = sg_extensions.find(name);
    if (it == sg_extensions.end())
        throw lookup_error("unknown semigroup extension '" + name + "'");
    return it->second;
}

const ZModule& Session::zmodule(const std::string& name) const
{
    const auto it = zmodules.find(name);
    if (it == zmodules.end())
        throw lookup_error("unknown z-module '" + name + "'");
    return it->second;
}

namespace {

[[noreturn]] void bad(const std::string& msg)
{
    throw parse_error("session: " + msg, 0);
}

const json& field(const json& obj, const char* key)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        bad(std::string("missing key '") + key + "'");
    return *it;
}

uint64_t as_count(const json& v, const std::string& what)
{
    if (!v.is_number_unsigned())
        bad(what + " must be a non-negative integer");
    return v.get<uint64_t>();
}

std::vector<uint64_t> as_count_list(const json& v, const std::string& what)
{
    if (!v.is_array())
        bad(what + " must be an array of integers");
    std::vector<uint64_t> out;
    for (const auto& e : v)
        out.push_back(as_count(e, what + " entry"));
    return out;
}

template <typename K>
void parse_ring_world(const json& doc, TypedSession<K>& world, RingPtr<K> ring)
{
    world.ring = std::move(ring);

    if (doc.contains("ideals")) {
        const json& ideals = doc["ideals"];
        if (!ideals.is_object())
            bad("'ideals' must map names to generator lists");
        for (const auto& [name, gens] : ideals.items()) {
            if (!gens.is_array())
                bad("ideal '" + name + "' must be a list of polynomial strings");
            std::vector<Polynomial<K>> polys;
            for (const auto& g : gens) {
                if (!g.is_string())
                    bad("ideal '" + name + "' has a non-string generator");
                try {
                    polys.push_back(parse_polynomial<K>(world.ring, g.template get<std::string>()));
                } catch (const parse_error& e) {
                    throw parse_error("ideal '" + name + "', generator \"" +
                                          g.template get<std::string>() + "\": " + e.what(),
                                      e.position());
                }
            }
            world.ideals.emplace(name, Ideal<K>(world.ring, std::move(polys)));
        }
    }

    if (doc.contains("modules")) {
        const json& modules = doc["modules"];
        if (!modules.is_object())
            bad("'modules' must map names to {\"cyclic\": [...]} records");
        for (const auto& [name, rec] : modules.items()) {
            if (!rec.is_object() || !rec.contains("cyclic") || !rec["cyclic"].is_array())
                bad("module '" + name + "' must be {\"cyclic\": [ideal names]}");
            std::vector<Ideal<K>> comps;
            for (const auto& ref : rec["cyclic"]) {
                if (!ref.is_string())
                    bad("module '" + name + "' has a non-string component reference");
                comps.push_back(world.ideal(ref.template get<std::string>()));
            }
            world.modules.emplace(name,
                                  CyclicSumModule<K>(world.ring, std::move(comps)));
        }
    }
}

} // namespace

Session parse_session_text(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("session is not valid JSON: ") + e.what(),
                          e.byte);
    }
    if (!doc.is_object())
        bad("top level must be an object");

    Session session;

    if (doc.contains("ring")) {
        const json& ring = doc["ring"];
        if (!ring.is_object())
            bad("'ring' must be an object");
        const json& coeff = field(ring, "coeff");
        const json& vars_json = field(ring, "vars");
        if (!vars_json.is_array() || vars_json.empty())
            bad("'vars' must be a nonempty array of variable names");
        std::vector<std::string> vars;
        for (const auto& v : vars_json) {
            if (!v.is_string())
                bad("'vars' entries must be strings");
            vars.push_back(v.get<std::string>());
        }
        if (coeff.is_string() && coeff.get<std::string>() == "Q") {
            TypedSession<Rat> world;
            parse_ring_world(doc, world, make_ring<Rat>(vars));
            session.rat = std::move(world);
        } else if (coeff.is_object() && coeff.contains("Fp")) {
            const uint64_t p = as_count(coeff["Fp"], "'Fp' modulus");
            TypedSession<Fp> world;
            parse_ring_world(doc, world, make_ring<Fp>(vars, MonomialOrder{}, p));
            session.fp = std::move(world);
        } else {
            bad("'coeff' must be \"Q\" or {\"Fp\": p}");
        }
    } else if (doc.contains("ideals") || doc.contains("modules")) {
        bad("'ideals'/'modules' need a 'ring' declaration");
    }

    if (doc.contains("semigroups")) {
        if (!doc["semigroups"].is_object())
            bad("'semigroups' must map names to generator lists");
        for (const auto& [name, gens] : doc["semigroups"].items()) {
            std::vector<long> g;
            for (uint64_t v : as_count_list(gens, "semigroup '" + name + "'"))
                g.push_back(static_cast<long>(v));
            session.semigroups.emplace(name, NumericalSemigroup::make(std::move(g)));
        }
    }

    if (doc.contains("sg_extensions")) {
        if (!doc["sg_extensions"].is_object())
            bad("'sg_extensions' must map names to {small, large} records");
        for (const auto& [name, rec] : doc["sg_extensions"].items()) {
            if (!rec.is_object())
                bad("extension '" + name + "' must be an object");
            const json& small = field(rec, "small");
            const json& large = field(rec, "large");
            if (!small.is_string() || !large.is_string())
                bad("extension '" + name + "' references must be semigroup names");
            const NumericalSemigroup& s = session.semigroup(small.get<std::string>());
            const NumericalSemigroup l =
                large.get<std::string>() == "N"
                    ? NumericalSemigroup::naturals()
                    : session.semigroup(large.get<std::string>());
            session.sg_extensions.emplace(name, SemigroupExtension::make(s, l));
        }
    }

    if (doc.contains("zloc")) {
        if (!doc["zloc"].is_object())
            bad("'zloc' must map names to positive integers");
        for (const auto& [name, n] : doc["zloc"].items()) {
            const uint64_t v = as_count(n, "zloc '" + name + "'");
            if (v == 0)
                throw unsupported_domain("zloc '" + name + "': cannot invert zero");
            session.zlocs.emplace(name, v);
        }
    }

    if (doc.contains("zmodules")) {
        if (!doc["zmodules"].is_object())
            bad("'zmodules' must map names to descriptor records");
        for (const auto& [name, rec] : doc["zmodules"].items()) {
            if (!rec.is_object())
                bad("zmodule '" + name + "' must be an object");
            std::vector<uint64_t> torsion;
            if (rec.contains("torsion"))
                for (uint64_t n :
                     as_count_list(rec["torsion"], "zmodule '" + name + "' torsion")) {
                    if (n == 0)
                        throw unsupported_domain("zmodule '" + name +
                                                 "': torsion order 0 is not cyclic");
                    if (n > 1)   // ℤ/1 = 0 contributes nothing
                        torsion.push_back(n);
                }
            uint64_t free_rank = 0;
            if (rec.contains("free"))
                free_rank = as_count(rec["free"], "zmodule '" + name + "' free rank");
            const bool cofinite = rec.contains("cofinite_exclude");
            std::vector<uint64_t> excluded;
            if (cofinite)
                excluded = as_count_list(rec["cofinite_exclude"],
                                         "zmodule '" + name + "' excluded primes");
            session.zmodules.emplace(
                name, ZModule::make(std::move(torsion), free_rank, cofinite,
                                    std::move(excluded)));
        }
    }

    return session;
}

Session parse_session(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open session file '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_session_text(buffer.str());
}

namespace {

template <typename K>
json print_ideal(const Ideal<K>& ideal)
{
    json out = json::array();
    for (const auto& g : ideal.gens())
        out.push_back(to_string(g));
    return out;
}

template <typename K>
void print_ring_world(const TypedSession<K>& world, json& doc)
{
    json& ring = doc["ring"];
    if constexpr (std::is_same_v<K, Rat>)
        ring["coeff"] = "Q";
    else
        ring["coeff"] = json{{"Fp", world.ring->modulus}};
    ring["vars"] = world.ring->vars;

    if (!world.ideals.empty()) {
        json& ideals = doc["ideals"];
        for (const auto& [name, ideal] : world.ideals)
            ideals[name] = print_ideal(ideal);
    }
    if (!world.modules.empty()) {
        json& modules = doc["modules"];
        for (const auto& [name, module] : world.modules) {
            json names = json::array();
            for (const auto& component : module.components) {
                const json printed = print_ideal(component);
                bool found = false;
                for (const auto& [iname, ideal] : world.ideals)
                    if (print_ideal(ideal) == printed) {
                        names.push_back(iname);
                        found = true;
                        break;
                    }
                if (!found)
                    throw internal_error("module '" + name +
                                         "' has a component with no ideal name");
            }
            modules[name] = json{{"cyclic", std::move(names)}};
        }
    }
}

} // namespace

std::string print_session(const Session& session)
{
    json doc = json::object();
    if (session.rat)
        print_ring_world(*session.rat, doc);
    else if (session.fp)
        print_ring_world(*session.fp, doc);

    if (!session.semigroups.empty()) {
        json& sgs = doc["semigroups"];
        for (const auto& [name, g] : session.semigroups)
            sgs[name] = g.minimal_generators();
    }
    if (!session.sg_extensions.empty()) {
        json& exts = doc["sg_extensions"];
        for (const auto& [name, ext] : session.sg_extensions) {
            const auto name_of = [&](const NumericalSemigroup& g,
                                     bool allow_naturals) -> json {
                for (const auto& [sname, sg] : session.semigroups)
                    if (sg == g)
                        return sname;
                if (allow_naturals && g == NumericalSemigroup::naturals())
                    return "N";
                throw internal_error("extension '" + name +
                                     "' references an unnamed semigroup");
            };
            exts[name] = json{{"small", name_of(ext.small(), false)},
                              {"large", name_of(ext.large(), true)}};
        }
    }
    if (!session.zlocs.empty()) {
        json& zloc = doc["zloc"];
        for (const auto& [name, n] : session.zlocs)
            zloc[name] = n;
    }
    if (!session.zmodules.empty()) {
        json& zmods = doc["zmodules"];
        for (const auto& [name, m] : session.zmodules) {
            json rec = json::object();
            rec["torsion"] = m.torsion();
            rec["free"] = m.free_rank();
            if (m.has_cofinite_family())
                rec["cofinite_exclude"] = m.cofinite_excluded();
            zmods[name] = std::move(rec);
        }
    }
    return doc.dump(2);
}

} // namespace supclose
