#include "supclose/polyext.hh"
#include "supclose/errors.hh"
#include "supclose/intutil.hh"
#include "supclose/ring.hh"

#include <cctype>

namespace supclose {

namespace {

// Splits "Q[x,y]" into base symbol "Q" and a validated variable list;
// returns whether any variables are present.
bool split_marker(const std::string& marker, std::string& head, size_t& nvars)
{
    const size_t open = marker.find('[');
    head = marker.substr(0, open);
    nvars = 0;
    if (open == std::string::npos)
        return false;
    if (marker.back() != ']')
        throw parse_error("domain marker missing closing bracket", marker.size());
    const std::string inner = marker.substr(open + 1, marker.size() - open - 2);
    size_t start = 0;
    while (start <= inner.size()) {
        size_t comma = inner.find(',', start);
        if (comma == std::string::npos)
            comma = inner.size();
        const std::string var = inner.substr(start, comma - start);
        if (!valid_identifier(var))
            throw parse_error("invalid variable name '" + var + "' in domain marker",
                              open + 1 + start);
        ++nvars;
        start = comma + 1;
        if (start == inner.size() + 1)
            break;
    }
    if (nvars == 0)
        throw parse_error("empty variable list in domain marker", open);
    return true;
}

bool base_symbol_is_field(const std::string& head, const std::string& marker)
{
    if (head == "Z")
        return false;
    if (head == "Q")
        return true;
    if (head.size() >= 2 && head[0] == 'F') {
        uint64_t p = 0;
        for (size_t i = 1; i < head.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(head[i])))
                throw parse_error("unrecognized domain marker '" + marker + "'", 0);
            p = p * 10 + static_cast<uint64_t>(head[i] - '0');
            if (p > (uint64_t{1} << 62))
                throw parse_error("modulus too large in domain marker", 1);
        }
        if (!is_prime_u64(p))
            throw unsupported_domain("modulus " + std::to_string(p) +
                                     " in domain marker is not prime");
        return true;
    }
    throw parse_error("unrecognized domain marker '" + marker + "'", 0);
}

} // namespace

PolyExtensionInfo polyext_info(const std::string& domain_marker)
{
    std::string head;
    size_t nvars = 0;
    const bool has_vars = split_marker(domain_marker, head, nvars);
    const bool head_field = base_symbol_is_field(head, domain_marker);

    PolyExtensionInfo info;
    info.base = domain_marker;
    // A polynomial ring over any of these bases is a domain but never a
    // field; only a bare field symbol is a field.
    info.base_is_field = head_field && !has_vars;
    info.crucial_exists = false;
    info.crucial_reason =
        info.base_is_field ? "base_is_field" : "support_not_singleton";
    return info;
}

} // namespace supclose
