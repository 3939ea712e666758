#pragma once

#include <map>
#include <sstream>
#include <string>

#include "spinrock/partition.hpp"

/* Exact univariate polynomials over the integers, used for Kostka-Foulkes
 * polynomials K_{sigma lambda}(t), inverse Kostka polynomials and
 * q-decomposition polynomials.  Coefficients are finitely supported; zero
 * coefficients are never stored.
 */

namespace spinrock {

struct IntPolynomial {
    std::map<int, ll> coeffs;  // exponent -> nonzero coefficient

    IntPolynomial() = default;

    static IntPolynomial constant(ll c) { return monomial(c, 0); }

    static IntPolynomial monomial(ll c, int e)
    {
        IntPolynomial p;
        if (c != 0)
            p.coeffs[e] = c;
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }

    void add_term(int e, ll c)
    {
        if (c == 0)
            return;
        ll& slot = coeffs[e];
        slot = checked_add(slot, c);
        if (slot == 0)
            coeffs.erase(e);
    }

    IntPolynomial& operator+=(const IntPolynomial& o)
    {
        for (auto [e, c] : o.coeffs)
            add_term(e, c);
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o)
    {
        for (auto [e, c] : o.coeffs)
            add_term(e, -c);
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b)
    {
        a += b;
        return a;
    }

    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b)
    {
        a -= b;
        return a;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        IntPolynomial r;
        for (auto [ea, ca] : a.coeffs)
            for (auto [eb, cb] : b.coeffs)
                r.add_term(ea + eb, checked_mul(ca, cb));
        return r;
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    IntPolynomial scaled(ll c) const
    {
        IntPolynomial r;
        for (auto [e, v] : coeffs)
            r.add_term(e, checked_mul(v, c));
        return r;
    }

    /* Exact evaluation at an integer point. */
    ll at(ll x) const
    {
        ll total = 0;
        for (auto [e, c] : coeffs) {
            ll pw = 1;
            for (int i = 0; i < e; ++i)
                pw = checked_mul(pw, x);
            total = checked_add(total, checked_mul(c, pw));
        }
        return total;
    }

    /* The substitution t -> -q^2 used by the q-decomposition formulas:
     * exponent e maps to coefficient*(-1)^e at exponent 2e. */
    IntPolynomial substitute_minus_q_squared() const
    {
        IntPolynomial r;
        for (auto [e, c] : coeffs)
            r.add_term(2 * e, (e % 2 == 0) ? c : -c);
        return r;
    }

    bool operator==(const IntPolynomial&) const = default;

    /* Deterministic textual form, ascending exponents: "1+2q^2-q^4". */
    std::string to_string(char var = 'q') const
    {
        if (coeffs.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto [e, c] : coeffs) {
            if (!first)
                os << (c < 0 ? "-" : "+");
            else if (c < 0)
                os << '-';
            first = false;
            ll mag = c < 0 ? -c : c;
            if (mag != 1 || e == 0)
                os << mag;
            if (e > 0) {
                os << var;
                if (e > 1)
                    os << '^' << e;
            }
        }
        return os.str();
    }
};

}  // namespace spinrock
