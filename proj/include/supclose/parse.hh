/**
 * @file parse.hh
 * @brief Polynomial text format: parser and canonical printer.
 *
 * Grammar (whitespace allowed between tokens):
 *   poly    := [sign] term { sign term }
 *   term    := coeff ["*" factors] | factors
 *   factors := var ["^" nat] {"*" var ["^" nat]}
 *   coeff   := nat ["/" nat]
 * Signs carry into the terms; coefficients themselves are nonnegative literals.
 * The printer emits terms in decreasing monomial order in a form the parser
 * accepts, so printing and reparsing is the identity.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supclose/polynomial.hh"

namespace supclose {

namespace detail {

struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw parse_error(std::string("expected ") + what, pos);
  }
  Int nat() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error("expected a number", pos);
    return Int(std::string(text.substr(start, pos - start)), 10);
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    }
    if (pos == start) throw parse_error("expected a variable name", pos);
    return std::string(text.substr(start, pos - start));
  }
};

template <class K>
void parse_factors(PolyLexer& lx, const RingPtr<K>& R, Exps& mono) {
  for (;;) {
    std::size_t at = lx.pos;
    lx.skip_ws();
    at = lx.pos;
    std::string name = lx.identifier();
    int idx = R->var_index(name);
    if (idx < 0) throw parse_error("unknown variable '" + name + "'", at);
    std::uint64_t e = 1;
    if (lx.accept('^')) {
      Int n = lx.nat();
      if (!n.fits_uint_p() || n.get_ui() > 0xffffffffu) throw parse_error("exponent too large", lx.pos);
      e = n.get_ui();
    }
    std::uint64_t total = mono[static_cast<std::size_t>(idx)] + e;
    if (total > 0xffffffffu) throw parse_error("exponent too large", lx.pos);
    mono[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(total);
    // A '*' continues the factor list or introduces nothing else; the grammar
    // has no other use for it inside a term.
    if (!lx.accept('*')) return;
  }
}

}  // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const RingPtr<K>& R, std::string_view text) {
  detail::PolyLexer lx{text};
  if (lx.at_end()) throw parse_error("empty polynomial", 0);
  std::vector<Term<K>> terms;
  bool first = true;
  while (!lx.at_end()) {
    bool negative = false;
    if (lx.accept('-')) {
      negative = true;
    } else if (lx.accept('+')) {
      // explicit plus
    } else if (!first) {
      throw parse_error("expected '+' or '-' between terms", lx.pos);
    }
    first = false;
    lx.skip_ws();
    if (lx.pos >= lx.text.size()) throw parse_error("missing term after sign", lx.pos);

    Int num = 1, den = 1;
    bool saw_coeff = false;
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      saw_coeff = true;
      num = lx.nat();
      if (lx.accept('/')) {
        std::size_t at = lx.pos;
        den = lx.nat();
        if (den == 0) throw parse_error("zero denominator", at);
      }
    }
    Exps mono(R->nvars(), 0);
    if (saw_coeff) {
      if (lx.accept('*')) detail::parse_factors(lx, R, mono);
    } else {
      detail::parse_factors(lx, R, mono);
    }
    K coeff = coeff_make(*R, negative ? Int(-num) : num, den);
    terms.push_back({std::move(mono), std::move(coeff)});
  }
  return Polynomial<K>(R, std::move(terms));
}

// ===== canonical printing =====

template <class K>
std::string monomial_str(const PolyRingData<K>& R, const Exps& mono) {
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (mono[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += R.vars[i];
    if (mono[i] > 1) s += "^" + std::to_string(mono[i]);
  }
  return s;
}

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  const auto& R = *f.ring();
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = is_negative(t.coeff);
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    K mag = coeff_abs(t.coeff);
    std::string m = monomial_str(R, t.mono);
    if (m.empty()) {
      s += coeff_str(mag);
    } else if (is_one(mag)) {
      s += m;
    } else {
      s += coeff_str(mag) + "*" + m;
    }
  }
  return s;
}

}  // namespace supclose
