/**
 * Multivariate polynomials with Rational coefficients, used for the weight
 * density prod_alpha <alpha, y>^2 and its moment integrands.
 */
#ifndef KESTAB_WEIGHT_POLYNOMIAL_HPP
#define KESTAB_WEIGHT_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "kestab/linalg.hpp"

namespace kestab {

class WeightPolynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit WeightPolynomial(std::size_t dim) : dim_(dim) {}

    static WeightPolynomial constant(std::size_t dim, const Rational& c) {
        WeightPolynomial p(dim);
        p.add_term(Exponents(dim, 0), c);
        return p;
    }

    static WeightPolynomial linear_form(const RatVector& coeffs) {
        WeightPolynomial p(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponents e(coeffs.size(), 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    std::size_t dim() const { return dim_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned t = 0;
            for (unsigned x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    /// Zero coefficients are never stored.
    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
        WeightPolynomial r(a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.dim_);
                for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend WeightPolynomial operator*(const Rational& s, const WeightPolynomial& a) {
        WeightPolynomial r(a.dim_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }

    friend WeightPolynomial operator+(const WeightPolynomial& a, const WeightPolynomial& b) {
        WeightPolynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    /// The polynomial times the coordinate monomial y_k.
    WeightPolynomial times_coordinate(std::size_t k) const {
        WeightPolynomial r(dim_);
        for (const auto& [e, c] : terms_) {
            Exponents e2 = e;
            ++e2[k];
            r.add_term(e2, c);
        }
        return r;
    }

    Rational evaluate(const RatVector& y) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < dim_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= y[i];
            total += t;
        }
        return total;
    }

    double evaluate(const std::vector<double>& y) const {
        double total = 0;
        for (const auto& [e, c] : terms_) {
            double t = to_double(c);
            for (std::size_t i = 0; i < dim_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= y[i];
            total += t;
        }
        return total;
    }

private:
    std::size_t dim_;
    std::map<Exponents, Rational> terms_;
};

} // namespace kestab

#endif // KESTAB_WEIGHT_POLYNOMIAL_HPP
