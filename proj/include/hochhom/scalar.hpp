#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "hochhom/errors.hpp"

namespace hochhom {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** Coefficients of the m-th cyclotomic polynomial, constant term first. */
std::vector<Integer> cyclotomic_polynomial(int m);

int euler_phi(int m);

/**
 * The field Q(zeta_m), represented as Q[x] / Phi_m(x).
 *
 * Instances are shared and immutable; obtain them through get().
 */
class CyclotomicField
{
  public:
    static std::shared_ptr<const CyclotomicField> get(int m);

    int order() const { return m_; }
    int degree() const { return phi_; }

    /** Reduce a polynomial of any degree modulo Phi_m; result has length degree(). */
    std::vector<Rational> reduce(std::vector<Rational> poly) const;
    std::vector<Rational> multiply(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;
    std::vector<Rational> inverse(const std::vector<Rational>& a) const;

    /** zeta^s, reduced, for any integer s. */
    const std::vector<Rational>& zeta_power(long s) const;

    explicit CyclotomicField(int m);

  private:
    int m_;
    int phi_;
    std::vector<Rational> modulus_;
    std::vector<std::vector<Rational>> zeta_pows_;
};

/**
 * Exact field element: either a rational number or an element of Q(zeta_m).
 *
 * Arithmetic between elements of different models raises ModelMismatch.
 * A default-constructed Scalar is the rational zero.
 */
class Scalar
{
  public:
    Scalar();
    explicit Scalar(Rational value);
    Scalar(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

    static Scalar zeta(std::shared_ptr<const CyclotomicField> field, long power);

    bool is_cyclotomic() const { return field_ != nullptr; }
    /** 0 for the rational model, m for Q(zeta_m). */
    int model_order() const { return field_ ? field_->order() : 0; }
    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /** True for a rational-valued element (constant polynomial in the cyclotomic model). */
    bool is_rational_value() const;
    Rational rational_value() const;

    Scalar zero_like() const;
    Scalar one_like() const;
    Scalar from_int_like(long v) const;
    Scalar from_rational_like(const Rational& v) const;

    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    Scalar& operator/=(const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /** "p/q" for rationals, "(c0 + c1*z + ...)" for cyclotomic values. */
    std::string to_string() const;

  private:
    void check_model(const Scalar& b) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/** lambda_{i,j} = zeta_m^{E_ij}. */
struct CyclotomicModel
{
    int order = 1;
    std::vector<std::vector<long>> exponents;

    bool operator==(const CyclotomicModel&) const = default;
};

/** lambda_{i,j} = V_ij. */
struct RationalModel
{
    std::vector<std::vector<Rational>> values;

    bool operator==(const RationalModel&) const = default;
};

using ScalarModel = std::variant<CyclotomicModel, RationalModel>;

/** One factor lambda~_{row,col}^exponent of a parameter monomial (0-based indices). */
struct LambdaFactor
{
    int row;
    int col;
    long exponent;
};

/**
 * A monomial in the parameters, stored as an exponent vector over the
 * parameter group (zeta for the cyclotomic model; -1 and a coprime base of
 * the numerators/denominators for the rational model).
 */
struct ParamMonomial
{
    std::vector<long> e;

    bool operator==(const ParamMonomial&) const = default;
};

/**
 * The algebra A_{n,r}^Lambda: generators x_1..x_r, y_1..y_n.
 *
 * Variables are indexed 0..n+r-1 with v_i = x_{i+1} for i < r and
 * v_i = y_{i-r+1} otherwise. Construction validates multiplicative
 * antisymmetry and precomputes the extended matrix Q(Lambda).
 */
class AlgebraSpec
{
  public:
    AlgebraSpec(int n, int r, ScalarModel model);

    int n() const { return n_; }
    int r() const { return r_; }
    int dim() const { return n_ + r_; }
    const ScalarModel& model() const { return model_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const Rational& v) const;

    /** lambda_{i,j}, 0-based indices into the n x n matrix. */
    Scalar lambda(int i, int j) const;
    /** lambda~_{k,i}: entry of Q(Lambda), 0-based indices in [0, n+r). */
    Scalar lambda_tilde(int k, int i) const;

    ParamMonomial unit_monomial() const;
    void multiply_tilde(ParamMonomial& m, int k, int i, long e) const;
    void multiply_lambda(ParamMonomial& m, int i, int j, long e) const;
    bool is_one(const ParamMonomial& m) const;
    Scalar value(const ParamMonomial& m) const;

    /** Multiplicative order of lambda_{i,j}; 0 when infinite. */
    long lambda_order(int i, int j) const;
    bool all_parameters_trivial() const;
    /** Rational model whose lambda_{i<j} generate a free abelian group of rank n(n-1)/2. */
    bool is_free_maximal_rank() const;

    std::string variable_name(int v) const;
    std::string describe() const;

  private:
    void build_group();
    ParamMonomial tilde_exponents(int k, int i) const;

    int n_;
    int r_;
    ScalarModel model_;
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<long> group_orders_;
    std::vector<Integer> base_;
    std::vector<std::vector<ParamMonomial>> lambda_exp_;
    std::vector<std::vector<ParamMonomial>> tilde_exp_;
    std::vector<std::vector<Scalar>> tilde_val_;
};

bool monomial_is_one(const AlgebraSpec& spec, const std::vector<LambdaFactor>& factors);

}   // namespace hochhom
