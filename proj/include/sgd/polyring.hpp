#pragma once

// Exact multivariate polynomials over the rationals, weight vectors and
// weight-plus-lex term orders.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgd {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector of a monomial. Also used for lattice points.
/// Compares lexicographically, first coordinate most significant.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<int> entries);
    explicit ExponentVector(std::vector<int> entries);

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    std::span<const int> entries() const { return e_; }
    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    long degree() const;
    bool is_zero() const;
    /// True iff this divides `other` componentwise.
    bool divides(const ExponentVector& other) const;

    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; throws if a coordinate would go negative.
    ExponentVector operator-(const ExponentVector& other) const;
    ExponentVector& operator+=(const ExponentVector& other);

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
        return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                                      b.e_.end());
    }

private:
    std::vector<int> e_;
};

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
bool coprime(const ExponentVector& a, const ExponentVector& b);

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& e) const noexcept;
};

/// Ordered list of variable names of a polynomial ring.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    /// Index of `name`, or -1.
    long index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
};

using Ring = std::shared_ptr<const VariableContext>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);
bool is_identifier(const std::string& s);

class RingMismatch : public std::invalid_argument {
public:
    RingMismatch() : std::invalid_argument("polynomials live in different rings") {}
};

struct Term {
    ExponentVector exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: exponent -> nonzero rational coefficient.
/// Terms iterate in decreasing lex order.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, std::greater<>>;

    explicit Polynomial(Ring ring);
    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial monomial(Ring ring, ExponentVector e, const Rational& c = 1);
    static Polynomial variable(Ring ring, std::size_t i);
    static Polynomial from_terms(Ring ring, std::span<const Term> terms);

    const Ring& ring() const { return ring_; }
    std::size_t num_vars() const { return ring_->size(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    Rational coefficient(const ExponentVector& e) const;
    long total_degree() const;
    /// Homogeneous with respect to the grading given by per-variable weights.
    bool is_homogeneous(std::span<const long> grading) const;
    bool is_homogeneous() const;

    /// Adds c*x^e in place.
    void add_term(const ExponentVector& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Rational& c);
    Polynomial pow(unsigned k) const;

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }
    friend bool operator==(const Polynomial& f, const Polynomial& g);

    std::string to_string() const;

private:
    void check_ring(const Polynomial& g) const;

    Ring ring_;
    TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);

std::string monomial_to_string(const ExponentVector& e, const VariableContext& vars);
std::string rational_to_string(const Rational& q);

/// Nonnegative integer weight vector, stored primitive (gcd 1).
class WeightVector {
public:
    WeightVector() = default;
    /// Throws std::invalid_argument on negative or all-zero input.
    explicit WeightVector(std::vector<long> entries);
    WeightVector(std::initializer_list<long> entries);

    std::size_t size() const { return w_.size(); }
    long operator[](std::size_t i) const { return w_[i]; }
    std::span<const long> entries() const { return w_; }
    long dot(const ExponentVector& e) const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<long> w_;
};

/// Total monomial order: compare by a sequence of integer weight rows, then
/// lexicographically (x_1 > x_2 > ... > x_n). The usual case is a single
/// nonnegative weight row.
class TermOrder {
public:
    explicit TermOrder(const WeightVector& w);
    /// Matrix order. Rows must be nonnegative; lex completes the order.
    static TermOrder from_rows(std::vector<std::vector<long>> rows);

    std::size_t num_vars() const { return rows_.front().size(); }
    const std::vector<long>& weight_row() const { return rows_.front(); }
    const std::vector<std::vector<long>>& rows() const { return rows_; }

    std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
    bool greater(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

private:
    TermOrder() = default;
    std::vector<std::vector<long>> rows_;
};

/// The order-maximal term of f. Throws std::invalid_argument for f = 0.
Term initial_term(const Polynomial& f, const TermOrder& ord);
/// Sum of the terms of f with maximal weight. Throws for f = 0.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);
std::set<ExponentVector> support(const Polynomial& f);

/// Adjoins a new first variable "t" and returns t*f for every f.
/// All inputs must share one ring; throws if it already has a variable "t".
std::vector<Polynomial> homogenize_with_t(std::span<const Polynomial> polys);

} // namespace sgd
