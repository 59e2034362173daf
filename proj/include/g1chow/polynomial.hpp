#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "g1chow/partitions.hpp"

namespace g1chow {

using Integer = mpz_class;

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generator families. The enumerator order is the symbol order used by the
/// monomial order: λ < ν < τ_B < stratum symbols.
enum class SymbolKind : std::uint8_t {
    hodge,           ///< λ, text "l"
    banana,          ///< ν, text "v"
    tail,            ///< τ_B, text "t{1,2}"
    stratum_hodge,   ///< λ_S on a tail stratum, text "ls"
    stratum_banana,  ///< ν on the minimal stratum of six markings, text "vs"
    gerbe,           ///< ξ_S, text "xi"
    divisor,         ///< D_T in a genus-zero factor, text "d{1,2}"
    schubert,        ///< σ_{a,b}, text "s{a,b}"
};

struct Symbol {
    SymbolKind kind = SymbolKind::hodge;
    /// The subset B or T for tail and divisor symbols; a*16+b for σ_{a,b}.
    Subset data = 0;

    static Symbol lambda() { return {SymbolKind::hodge, 0}; }
    static Symbol nu() { return {SymbolKind::banana, 0}; }
    static Symbol tau(Subset b) { return {SymbolKind::tail, b}; }
    static Symbol lambda_s() { return {SymbolKind::stratum_hodge, 0}; }
    static Symbol nu_s() { return {SymbolKind::stratum_banana, 0}; }
    static Symbol xi() { return {SymbolKind::gerbe, 0}; }
    static Symbol divisor(Subset t) { return {SymbolKind::divisor, t}; }
    static Symbol sigma(int a, int b);

    int degree() const;
    std::string name() const;
    static Symbol parse(std::string_view text);

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
};

/// Sorted (symbol, exponent) pairs, exponents positive.
class Monomial {
public:
    using Factor = std::pair<Symbol, std::uint32_t>;
    using Storage = boost::container::small_vector<Factor, 4>;

    Monomial() = default;
    explicit Monomial(Symbol s, std::uint32_t e = 1);

    const Storage& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    int degree() const;
    std::uint32_t exponent(const Symbol& s) const;

    Monomial operator*(const Monomial& o) const;
    /// True iff this monomial divides `o`.
    bool divides(const Monomial& o) const;
    /// Requires divides(o).
    Monomial quotient_of(const Monomial& o) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    friend class IntPolynomial;
    Storage f_;
};

/// Printing order: higher degree first; within a degree, compare exponents
/// symbol by symbol from the smallest symbol, larger exponent first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

/// A sparse polynomial with arbitrary-precision integer coefficients.
class IntPolynomial {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    IntPolynomial() = default;
    IntPolynomial(long c);  // NOLINT: constants convert implicitly
    IntPolynomial(const Integer& c);
    explicit IntPolynomial(const Symbol& s);
    IntPolynomial(const Monomial& m, const Integer& c);

    static IntPolynomial parse(std::string_view text);
    static IntPolynomial from_json(const std::string& json_text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Integer& c);

    /// Largest total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    IntPolynomial homogeneous_part(int d) const;
    std::vector<Symbol> symbols() const;
    Integer coefficient(const Monomial& m) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial operator-() const;
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    IntPolynomial pow(unsigned e) const;

    /// Ring homomorphism determined by the images of the symbols.
    IntPolynomial substitute(const std::function<IntPolynomial(const Symbol&)>& image) const;
    /// Drops every term whose monomial satisfies the predicate.
    IntPolynomial filter_out(const std::function<bool(const Monomial&)>& drop) const;

    std::string to_string() const;
    std::string to_json() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace g1chow
