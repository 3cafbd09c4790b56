#ifndef SUPCLOSE_POLYEXT_HH
#define SUPCLOSE_POLYEXT_HH

#include <string>

// Symbolic report on the extension R ⊆ R[X] for an integral domain R.
// No finite computation represents R[X]/R (it has infinite rank), so
// the answers are recorded symbolically: the Oda and critical ideals
// are zero and the support is all of Spec(R).

namespace supclose {

struct PolyExtensionInfo {
    std::string base;            // the marker, echoed
    bool base_is_field = false;
    std::string oda = "0";
    std::string critical = "0";
    bool crucial_exists = false;
    // "support_not_singleton" for a non-field domain (Supp = Spec(R) has
    // more than one point); "base_is_field" for the degenerate case,
    // reported distinctly.
    std::string crucial_reason;
    std::string support = "Spec(R)";
};

// Accepted markers: "Z", "Q", "F<p>" (p prime), optionally followed by
// a bracketed variable list such as "Q[x]" or "Z[x,y]"; each names an
// integral domain.  Malformed markers raise parse_error; a non-prime
// modulus raises unsupported_domain.
PolyExtensionInfo polyext_info(const std::string& domain_marker);

} // namespace supclose

#endif
