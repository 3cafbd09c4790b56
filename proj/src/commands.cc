#include "supclose/commands.hh"
#include "supclose/errors.hh"
#include "supclose/ideal_ops.hh"
#include "supclose/module_theory.hh"
#include "supclose/nagata.hh"
#include "supclose/parse.hh"
#include "supclose/version.hh"
#include "supclose/zloc.hh"

#include <algorithm>
#include <cctype>

namespace supclose {

using nlohmann::json;

namespace {

void require_args(const std::vector<std::string>& args, size_t min, size_t max,
                  const std::string& command, const char* usage)
{
    if (args.size() < min || args.size() > max)
        throw lookup_error("'" + command + "' expects " + usage);
}

template <typename K>
json poly_list(const Ideal<K>& ideal)
{
    json out = json::array();
    for (const auto& g : ideal.gens())
        out.push_back(to_string(g));
    return out;
}

template <typename K>
json prime_json(const RingPtr<K>& ring, const MonomialPrime& p)
{
    json out = json::array();
    for (uint32_t v : p.vars)
        out.push_back(ring->vars[v]);
    return out;
}

template <typename K>
json prime_list(const RingPtr<K>& ring, const std::vector<MonomialPrime>& primes)
{
    json out = json::array();
    for (const auto& p : primes)
        out.push_back(prime_json(ring, p));
    return out;
}

json exponent_list(const ExponentIdeal& ideal)
{
    json out = json::array();
    for (long e : ideal.generators())
        out.push_back(e);
    return out;
}

json zset_json(const ZPrimeSet& s)
{
    json out;
    out["kind"] = s.kind == ZPrimeSet::Kind::finite ? "finite" : "cofinite";
    out[s.kind == ZPrimeSet::Kind::finite ? "members" : "excluded"] = s.primes;
    out["include_zero"] = s.include_zero;
    out["display"] = s.to_string();
    return out;
}

json zideal_json(const ZIdeal& ideal)
{
    return std::to_string(ideal.n);
}

json crucial_json(const ZCrucialCritical& c)
{
    json out;
    out["exists"] = c.exists;
    if (c.exists)
        out["prime"] = c.prime;
    return out;
}

// Parses a polynomial in the auxiliary variable T with coefficients in
// ℚ[x] into an AuxPoly over ℚ[x], e.g. "x^2*T + x^3".
AuxPoly<Rat> parse_aux_poly(const std::string& text)
{
    static const RingPtr<Rat> xt_ring = make_ring<Rat>({"x", "T"});
    static const RingPtr<Rat> x_ring = make_ring<Rat>({"x"});
    const Polynomial<Rat> p = parse_polynomial<Rat>(xt_ring, text);
    std::vector<std::vector<Term<Rat>>> buckets;
    for (const auto& t : p.terms()) {
        const size_t d = t.mono[1];
        if (buckets.size() <= d)
            buckets.resize(d + 1);
        buckets[d].push_back(Term<Rat>{Exps{t.mono[0]}, t.coeff});
    }
    std::vector<Polynomial<Rat>> coeffs;
    for (auto& b : buckets) {
        std::sort(b.begin(), b.end(), [&](const Term<Rat>& a, const Term<Rat>& c) {
            return exps_less(c.mono, a.mono, x_ring->order);
        });
        coeffs.push_back(Polynomial<Rat>::from_sorted(x_ring, std::move(b)));
    }
    return AuxPoly<Rat>::make(x_ring, std::move(coeffs));
}

const SemigroupExtension& resolve_extension(const Session& session,
                                            const std::string& name)
{
    return session.sg_extension(name);
}

uint64_t resolve_zloc(const Session& session, const std::string& arg)
{
    const auto it = session.zlocs.find(arg);
    if (it != session.zlocs.end())
        return it->second;
    if (!arg.empty() &&
        std::all_of(arg.begin(), arg.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        uint64_t n = 0;
        for (char c : arg) {
            if (n > (uint64_t{1} << 58))
                throw unsupported_domain("localization index too large");
            n = n * 10 + static_cast<uint64_t>(c - '0');
        }
        if (n == 0)
            throw unsupported_domain("cannot localize the integers at zero");
        return n;
    }
    throw lookup_error("unknown z-localization '" + arg + "'");
}

long parse_long_arg(const std::string& arg, const char* what)
{
    try {
        size_t used = 0;
        const long v = std::stol(arg, &used);
        if (used != arg.size())
            throw std::invalid_argument(arg);
        return v;
    } catch (const std::exception&) {
        throw lookup_error(std::string(what) + " '" + arg + "' is not an integer");
    }
}

template <typename K>
json run_poly_command(const TypedSession<K>& world, const std::string& command,
                      const std::vector<std::string>& args)
{
    json result;
    if (command == "oda") {
        require_args(args, 1, 1, command, "a module name");
        result["generators"] = poly_list(oda_generators(world.module(args[0])));
    } else if (command == "oda-member") {
        require_args(args, 2, 2, command, "a module name and a polynomial");
        const auto& e = world.module(args[0]);
        result["member"] = oda_member(e, parse_polynomial<K>(world.ring, args[1]));
    } else if (command == "support-closure") {
        require_args(args, 1, 1, command, "a module name");
        const SupportClosure<K> sc = support_closure(world.module(args[0]));
        result["closed"] = true;   // V(O(E)) is Zariski closed by construction
        result["ideal"] = poly_list(sc.vanishing);
        result["min_primes"] = prime_list(world.ring, sc.min_primes);
    } else if (command == "ann") {
        require_args(args, 1, 64, command, "a module name, optionally one "
                                           "representative per component");
        const auto& e = world.module(args[0]);
        if (args.size() == 1) {
            result["generators"] = poly_list(ann_module(e));
        } else {
            if (args.size() - 1 != e.size())
                throw lookup_error("'ann' element needs exactly one representative "
                                   "per module component");
            ModuleElement<K> x;
            for (size_t i = 1; i < args.size(); ++i)
                x.reps.push_back(parse_polynomial<K>(world.ring, args[i]));
            result["generators"] = poly_list(ann_element(e, x));
        }
    } else if (command == "ass") {
        require_args(args, 1, 1, command, "a module name");
        result["primes"] = prime_list(world.ring, ass_module(world.module(args[0])));
    } else if (command == "crucial") {
        require_args(args, 1, 1, command, "a module name");
        const CrucialResult r = crucial_ideal(world.module(args[0]));
        result["exists"] = r.exists;
        if (r.exists)
            result["prime"] = prime_json(world.ring, *r.prime);
    } else if (command == "critical") {
        require_args(args, 1, 1, command, "a module name");
        const CriticalResult r = critical_ideal(world.module(args[0]));
        result["exists"] = r.exists;
        if (r.exists)
            result["prime"] = prime_json(world.ring, *r.prime);
    } else if (command == "radical-member") {
        require_args(args, 2, 2, command, "an ideal name and a polynomial");
        result["member"] = radical_member(parse_polynomial<K>(world.ring, args[1]),
                                          world.ideal(args[0]));
    } else if (command == "intersect") {
        require_args(args, 2, 2, command, "two ideal names");
        result["generators"] =
            poly_list(ideal_intersect(world.ideal(args[0]), world.ideal(args[1])));
    } else if (command == "quotient") {
        require_args(args, 2, 2, command, "an ideal name and an ideal name or "
                                          "polynomial");
        const Ideal<K>& base = world.ideal(args[0]);
        if (world.ideals.count(args[1]))
            result["generators"] =
                poly_list(ideal_quotient(base, world.ideal(args[1])));
        else
            result["generators"] = poly_list(ideal_quotient_single(
                base, parse_polynomial<K>(world.ring, args[1])));
    } else if (command == "saturate") {
        require_args(args, 2, 2, command, "an ideal name and a polynomial");
        result["generators"] = poly_list(
            saturate(world.ideal(args[0]), parse_polynomial<K>(world.ring, args[1])));
    } else {
        throw internal_error("poly command routing");
    }
    return result;
}

json sg_analysis_json(const SgAnalysis& a)
{
    json result;
    result["maximal_ideal"] = exponent_list(a.maximal_ideal);
    result["conductor"] = exponent_list(a.conductor);
    result["oda"] = exponent_list(a.oda);
    result["oda_is_maximal"] = a.oda_is_maximal;
    result["conductor_radical_is_maximal"] = a.conductor_radical_is_maximal;
    json crucial;
    crucial["exists"] = a.crucial_exists;
    if (a.crucial_exists)
        crucial["exponents"] = exponent_list(a.crucial);
    result["crucial"] = crucial;
    json critical;
    critical["exists"] = a.critical_exists;
    if (a.critical_exists)
        critical["exponents"] = exponent_list(a.critical);
    result["critical"] = critical;
    result["certified"] = a.certified;
    result["certificates_complete"] = a.certificates_complete;
    if (a.conductor_radical_is_maximal)
        result["supp"] = json::array({exponent_list(a.maximal_ideal)});
    return result;
}

} // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {
        "ann",          "ass",
        "conductor",    "critical",
        "crucial",      "denominator",
        "intersect",    "nagata-conductor-member",
        "nagata-oda-member", "oda",
        "oda-member",   "quotient",
        "radical-member", "saturate",
        "sg-analyze",   "support-closure",
        "z-oda",        "z-supp",
        "zloc-analyze",
    };
    return names;
}

json run_command(const Session& session, const std::string& command,
                 const std::vector<std::string>& args)
{
    static const std::vector<std::string> poly_commands = {
        "oda", "oda-member", "support-closure", "ann", "ass", "crucial",
        "critical", "radical-member", "intersect", "quotient", "saturate"};

    if (std::find(poly_commands.begin(), poly_commands.end(), command) !=
        poly_commands.end()) {
        if (session.rat)
            return run_poly_command(*session.rat, command, args);
        if (session.fp)
            return run_poly_command(*session.fp, command, args);
        throw lookup_error("'" + command + "' needs a session with a ring "
                           "declaration");
    }

    json result;
    if (command == "conductor") {
        require_args(args, 1, 1, command, "an extension name");
        result["exponents"] = exponent_list(sg_conductor(resolve_extension(session, args[0])));
    } else if (command == "denominator") {
        require_args(args, 2, 2, command, "an extension name and an exponent");
        const SemigroupExtension& ext = resolve_extension(session, args[0]);
        result["exponents"] = exponent_list(
            sg_denominator_ideal(ext, parse_long_arg(args[1], "exponent")));
    } else if (command == "sg-analyze") {
        require_args(args, 1, 1, command, "an extension name");
        result = sg_analysis_json(sg_analyze(resolve_extension(session, args[0])));
    } else if (command == "zloc-analyze") {
        require_args(args, 1, 1, command, "a z-localization name or index");
        const ZLocAnalysis a = zloc_analyze(resolve_zloc(session, args[0]));
        result["n"] = a.n;
        result["trivial"] = a.trivial;
        result["oda"] = zideal_json(a.oda);
        result["supp"] = zset_json(a.supp);
        result["conductor"] = zideal_json(a.conductor);
        result["crucial"] = crucial_json(a.crucial);
        result["critical"] = crucial_json(a.critical);
        result["ass_chain"] = a.ass_chain;
    } else if (command == "z-supp") {
        require_args(args, 1, 1, command, "a z-module name");
        const ZPrimeSet supp = z_supp(session.zmodule(args[0]));
        const ZPrimeSet closure = zset_closure(supp);
        result["set"] = zset_json(supp);
        result["closed"] = supp == closure;
        result["closure"] = zset_json(closure);
    } else if (command == "z-oda") {
        require_args(args, 1, 1, command, "a z-module name");
        result["ideal"] = zideal_json(z_oda(session.zmodule(args[0])));
    } else if (command == "nagata-conductor-member" ||
               command == "nagata-oda-member") {
        require_args(args, 2, 3, command,
                     "an extension name, a numerator and optionally a denominator");
        const SemigroupExtension& ext = resolve_extension(session, args[0]);
        const NagataElement elem =
            nagata_element(ext, parse_aux_poly(args[1]),
                           parse_aux_poly(args.size() > 2 ? args[2] : "1"));
        result["member"] = command == "nagata-conductor-member"
                               ? nagata_conductor_member(ext, elem)
                               : nagata_oda_member(ext, elem);
    } else {
        throw lookup_error("unknown command '" + command + "'");
    }
    return result;
}

json make_report(const std::string& command, const std::vector<std::string>& args,
                 json result, double timing_ms)
{
    json report;
    report["command"] = command;
    report["args"] = args;
    report["result"] = std::move(result);
    report["timing_ms"] = timing_ms;
    report["engine"] = kEngine;
    return report;
}

} // namespace supclose
