#ifndef QBETA_POLY_HPP
#define QBETA_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbeta/coeff.hpp"

namespace qbeta {

/// The closed indeterminate universe: q (base), L (log marker), X (q^x), Y (q^y).
enum class Var : std::uint8_t { q = 0, L = 1, X = 2, Y = 3 };
inline constexpr std::array<Var, 4> kAllVars{Var::q, Var::L, Var::X, Var::Y};
const char* var_name(Var v);

/// Dense exponent tuple over {q, L, X, Y}, ordered graded-lexicographically
/// with Y strongest, then X, L, q.
struct Monomial {
    std::array<std::uint32_t, 4> e{0, 0, 0, 0};

    std::uint32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
    std::uint32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }
    std::uint64_t total_degree() const {
        return std::uint64_t(e[0]) + e[1] + e[2] + e[3];
    }
    bool is_constant() const { return total_degree() == 0; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] + b.e[i];
        return m;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (std::size_t i = 4; i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
    std::string str() const;
};

/// Sparse polynomial in q, L, X, Y over Coeff. No zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(Coeff c);
    static Poly constant(Coeff c) { return Poly(std::move(c)); }
    static Poly variable(Var v, std::uint32_t power = 1);
    static Poly term(Coeff c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }

    /// Leading term under the monomial order.
    std::pair<Monomial, Coeff> leading() const;

    std::uint32_t degree(Var v) const;
    /// Bitmask of variables occurring with positive exponent (bit i = Var i).
    unsigned vars_used() const;
    bool uses_only(Var v) const { return (vars_used() & ~(1u << static_cast<unsigned>(v))) == 0; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Coeff& c) const;
    Poly shifted(const Monomial& m) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    void add_term(const Monomial& m, const Coeff& c);

    /// Componentwise minimum of all exponent tuples (the monomial content).
    Monomial exponent_content() const;
    /// Divides every term by m; every exponent must be >= m's.
    Poly shifted_down(const Monomial& m) const;

    /// View as univariate in `v` (other variables must not occur): ascending coefficients.
    std::vector<Coeff> univariate_in(Var v) const;
    static Poly from_univariate(Var v, const std::vector<Coeff>& coeffs);

    /// Collects coefficients of powers of `v`: slot k holds the Poly multiplying v^k.
    std::vector<Poly> collect(Var v) const;

    std::string str() const;

private:
    std::map<Monomial, Coeff> terms_;
};

} // namespace qbeta

#endif
