/**
 * @file ring.hh
 * @brief Polynomial ring descriptors k[x1..xn], shared immutably by all values built over them.
 */
#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "supclose/coeff.hh"
#include "supclose/errors.hh"
#include "supclose/monomial.hh"

namespace supclose {

template <class K>
struct PolyRingData {
  std::vector<std::string> vars;
  MonomialOrder order;
  std::uint64_t modulus = 0;  // prime p when K = Fp, 0 when K = Rat

  std::size_t nvars() const { return vars.size(); }

  int var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRingData<K>>;

inline bool valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

template <class K>
RingPtr<K> make_ring(std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder{},
                     std::uint64_t modulus = 0) {
  if constexpr (std::is_same_v<K, Fp>) {
    if (!is_prime_u64(modulus)) throw unsupported_domain("coefficient modulus must be prime");
  } else {
    static_assert(std::is_same_v<K, Rat>);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!valid_identifier(vars[i])) throw parse_error("invalid variable name '" + vars[i] + "'", 0);
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw parse_error("duplicate variable name '" + vars[i] + "'", 0);
  }
  auto d = std::make_shared<PolyRingData<K>>();
  d->vars = std::move(vars);
  d->order = order;
  d->modulus = modulus;
  return d;
}

template <class K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (a.get() == b.get()) return true;
  return a->vars == b->vars && a->order == b->order && a->modulus == b->modulus;
}

template <class K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (!same_ring(a, b)) throw ring_mismatch("operands belong to different rings");
}

template <class K>
K coeff_one(const PolyRingData<K>& R) {
  if constexpr (std::is_same_v<K, Rat>) {
    (void)R;
    return Rat(1);
  } else {
    return Fp(1, R.modulus);
  }
}

// Coefficient from an exact integer fraction; den must be nonzero.
template <class K>
K coeff_make(const PolyRingData<K>& R, const Int& num, const Int& den) {
  if (den == 0) throw internal_error("zero denominator in coefficient");
  if constexpr (std::is_same_v<K, Rat>) {
    (void)R;
    Rat q(num, den);
    q.canonicalize();
    return q;
  } else {
    Fp n = Fp::from_int(num, R.modulus);
    Fp d = Fp::from_int(den, R.modulus);
    if (is_zero(d)) throw parse_error("coefficient denominator vanishes modulo " + std::to_string(R.modulus), 0);
    return n / d;
  }
}

// Ring with fresh variables prepended (an elimination block in front of the old variables).
template <class K>
RingPtr<K> ring_with_prefix_vars(const RingPtr<K>& R, const std::vector<std::string>& fresh) {
  std::vector<std::string> vars = fresh;
  vars.insert(vars.end(), R->vars.begin(), R->vars.end());
  return make_ring<K>(std::move(vars),
                      MonomialOrder{OrderKind::elim, static_cast<std::uint32_t>(fresh.size())},
                      R->modulus);
}

// A variable name not used by R.
template <class K>
std::string fresh_var_name(const RingPtr<K>& R, const std::string& stem = "_t") {
  std::string name = stem;
  while (R->var_index(name) >= 0) name += "_";
  return name;
}

}  // namespace supclose
