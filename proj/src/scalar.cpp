#include "hochhom/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hochhom {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, Poly b)
{
    trim(a);
    trim(b);
    if (a.size() < b.size())
        return {Poly{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();)
    {
        Rational c = a[k] / lead;
        q[k - (b.size() - 1)] = c;
        if (c != 0)
        {
            for (std::size_t j = 0; j < b.size(); ++j)
                a[k - (b.size() - 1) + j] -= c * b[j];
        }
        if (k == b.size() - 1)
            break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Poly poly_sub(Poly a, const Poly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

long mod_floor(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Exponent vector of |v| over a pairwise coprime base; v must factor completely.
std::vector<long> factor_over(Integer v, const std::vector<Integer>& base)
{
    std::vector<long> e(base.size(), 0);
    for (std::size_t i = 0; i < base.size() && v > 1; ++i)
    {
        while (v % base[i] == 0)
        {
            v /= base[i];
            ++e[i];
        }
    }
    if (v != 1)
        throw InvalidSpec("internal: value does not factor over the coprime base");
    return e;
}

std::vector<Integer> coprime_base(std::vector<Integer> xs)
{
    std::vector<Integer> base;
    for (auto& x : xs)
        if (x > 1)
            base.push_back(x);
    bool changed = true;
    while (changed)
    {
        changed = false;
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());
        for (std::size_t i = 0; i < base.size() && !changed; ++i)
        {
            for (std::size_t j = i + 1; j < base.size() && !changed; ++j)
            {
                Integer g = boost::multiprecision::gcd(base[i], base[j]);
                if (g > 1)
                {
                    Integer a = base[i] / g, b = base[j] / g;
                    base.erase(base.begin() + j);
                    base.erase(base.begin() + i);
                    for (const Integer& t : {g, a, b})
                        if (t > 1)
                            base.push_back(t);
                    changed = true;
                }
            }
        }
    }
    return base;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c)
    {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i)
        {
            if (rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}   // namespace

int euler_phi(int m)
{
    int result = m;
    int x = m;
    for (int p = 2; p * p <= x; ++p)
    {
        if (x % p == 0)
        {
            while (x % p == 0)
                x /= p;
            result -= result / p;
        }
    }
    if (x > 1)
        result -= result / x;
    return result;
}

std::vector<Integer> cyclotomic_polynomial(int m)
{
    if (m < 1)
        throw InvalidSpec("cyclotomic order must be positive");
    Poly p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d)
    {
        if (m % d != 0)
            continue;
        std::vector<Integer> phid = cyclotomic_polynomial(d);
        Poly divisor(phid.begin(), phid.end());
        p = divmod(p, divisor).first;
    }
    std::vector<Integer> out;
    for (const auto& c : p)
        out.push_back(numerator(c));
    return out;
}

CyclotomicField::CyclotomicField(int m) : m_(m), phi_(euler_phi(m))
{
    for (const auto& c : cyclotomic_polynomial(m))
        modulus_.push_back(Rational(c));
    Poly cur(phi_);
    cur[0] = 1;
    zeta_pows_.push_back(cur);
    for (int s = 1; s < m_; ++s)
    {
        Poly next(phi_ + 1);
        for (int i = 0; i < phi_; ++i)
            next[i + 1] = cur[i];
        cur = reduce(next);
        zeta_pows_.push_back(cur);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int m)
{
    if (m < 1)
        throw InvalidSpec("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(m);
    if (it != registry.end())
        return it->second;
    auto field = std::make_shared<const CyclotomicField>(m);
    registry.emplace(m, field);
    return field;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const
{
    for (std::size_t k = poly.size(); k-- > static_cast<std::size_t>(phi_);)
    {
        Rational c = poly[k];
        if (c == 0)
            continue;
        for (int j = 0; j < phi_; ++j)
            poly[k - phi_ + j] -= c * modulus_[j];
        poly[k] = 0;
    }
    poly.resize(phi_);
    return poly;
}

std::vector<Rational> CyclotomicField::multiply(const std::vector<Rational>& a,
                                                const std::vector<Rational>& b) const
{
    Poly c(2 * phi_);
    for (int i = 0; i < phi_; ++i)
    {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < phi_; ++j)
            if (b[j] != 0)
                c[i + j] += a[i] * b[j];
    }
    return reduce(std::move(c));
}

std::vector<Rational> CyclotomicField::inverse(const std::vector<Rational>& a) const
{
    Poly r0 = modulus_, r1 = a;
    trim(r1);
    if (r1.empty())
        throw DivisionByZero();
    Poly s0, s1{Rational(1)};
    while (!r1.empty())
    {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_m is irreducible
    Rational c = r0[0];
    for (auto& x : s0)
        x /= c;
    return reduce(std::move(s0));
}

const std::vector<Rational>& CyclotomicField::zeta_power(long s) const
{
    return zeta_pows_[mod_floor(s, m_)];
}

Scalar::Scalar() : c_{Rational(0)} {}

Scalar::Scalar(Rational value) : c_{std::move(value)} {}

Scalar::Scalar(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field))
{
    if (!field_)
        throw ModelMismatch("cyclotomic scalar without a field");
    c_ = field_->reduce(std::move(coeffs));
}

Scalar Scalar::zeta(std::shared_ptr<const CyclotomicField> field, long power)
{
    Scalar s;
    s.field_ = std::move(field);
    s.c_ = s.field_->zeta_power(power);
    return s;
}

void Scalar::check_model(const Scalar& b) const
{
    if (model_order() != b.model_order())
        throw ModelMismatch("scalar models differ: order " + std::to_string(model_order()) +
                            " vs " + std::to_string(b.model_order()));
}

bool Scalar::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

bool Scalar::is_one() const
{
    if (c_[0] != 1)
        return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

bool Scalar::is_rational_value() const
{
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return x == 0; });
}

Rational Scalar::rational_value() const
{
    if (!is_rational_value())
        throw ModelMismatch("scalar is not rational-valued");
    return c_[0];
}

Scalar Scalar::zero_like() const
{
    return from_rational_like(Rational(0));
}

Scalar Scalar::one_like() const
{
    return from_rational_like(Rational(1));
}

Scalar Scalar::from_int_like(long v) const
{
    return from_rational_like(Rational(v));
}

Scalar Scalar::from_rational_like(const Rational& v) const
{
    Scalar s;
    s.field_ = field_;
    s.c_.assign(c_.size(), Rational(0));
    s.c_[0] = v;
    return s;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Scalar s = *this;
    if (field_)
        s.c_ = field_->inverse(c_);
    else
        s.c_[0] = 1 / c_[0];
    return s;
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result = one_like();
    Scalar base = *this;
    while (e > 0)
    {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    for (auto& x : s.c_)
        x = -x;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& b)
{
    check_model(b);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += b.c_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b)
{
    check_model(b);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= b.c_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& b)
{
    check_model(b);
    if (field_)
    {
        if (b.is_rational_value())
        {
            for (auto& x : c_)
                x *= b.c_[0];
        }
        else if (is_rational_value())
        {
            Rational k = c_[0];
            c_ = b.c_;
            for (auto& x : c_)
                x *= k;
        }
        else
            c_ = field_->multiply(c_, b.c_);
    }
    else
        c_[0] *= b.c_[0];
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b)
{
    check_model(b);
    return *this *= b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.check_model(b);
    return a.c_ == b.c_;
}

std::string rational_to_string(const Rational& q)
{
    return q.str();
}

Rational parse_rational(const std::string& text)
{
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        return std::all_of(s.begin() + i, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw InvalidSpec("not a rational number: '" + text + "'");
    if (num[0] == '+')
        num = num.substr(1);
    if (den[0] == '+')
        den = den.substr(1);
    Integer d(den);
    if (d == 0)
        throw InvalidSpec("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string Scalar::to_string() const
{
    if (!field_)
        return rational_to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i)
    {
        if (c_[i] == 0)
            continue;
        os << (first ? "(" : " + ") << rational_to_string(c_[i]);
        if (i == 1)
            os << "*z";
        else if (i > 1)
            os << "*z^" << i;
        first = false;
    }
    if (first)
        return "0";
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

AlgebraSpec::AlgebraSpec(int n, int r, ScalarModel model)
    : n_(n), r_(r), model_(std::move(model))
{
    if (n < 1)
        throw InvalidSpec("n must be at least 1");
    if (r < 0 || r > n)
        throw InvalidSpec("r must satisfy 0 <= r <= n");
    build_group();
    int d = dim();
    tilde_exp_.assign(d, std::vector<ParamMonomial>(d));
    tilde_val_.assign(d, std::vector<Scalar>(d));
    for (int k = 0; k < d; ++k)
    {
        for (int i = 0; i < d; ++i)
        {
            tilde_exp_[k][i] = tilde_exponents(k, i);
            tilde_val_[k][i] = value(tilde_exp_[k][i]);
        }
    }
}

void AlgebraSpec::build_group()
{
    lambda_exp_.assign(n_, std::vector<ParamMonomial>(n_));
    if (const auto* cm = std::get_if<CyclotomicModel>(&model_))
    {
        if (cm->order < 1)
            throw InvalidSpec("cyclotomic order must be positive");
        if (cm->exponents.size() != static_cast<std::size_t>(n_))
            throw InvalidSpec("exponent matrix must be n x n");
        for (const auto& row : cm->exponents)
            if (row.size() != static_cast<std::size_t>(n_))
                throw InvalidSpec("exponent matrix must be n x n");
        long m = cm->order;
        for (int i = 0; i < n_; ++i)
        {
            if (mod_floor(cm->exponents[i][i], m) != 0)
                throw InvalidSpec("diagonal parameters must equal 1");
            for (int j = 0; j < n_; ++j)
            {
                if (mod_floor(cm->exponents[i][j] + cm->exponents[j][i], m) != 0)
                    throw InvalidSpec("parameter matrix is not multiplicatively antisymmetric");
                lambda_exp_[i][j].e = {mod_floor(cm->exponents[i][j], m)};
            }
        }
        field_ = CyclotomicField::get(cm->order);
        group_orders_ = {m};
        return;
    }
    const auto& rm = std::get<RationalModel>(model_);
    if (rm.values.size() != static_cast<std::size_t>(n_))
        throw InvalidSpec("value matrix must be n x n");
    for (const auto& row : rm.values)
        if (row.size() != static_cast<std::size_t>(n_))
            throw InvalidSpec("value matrix must be n x n");
    std::vector<Integer> parts;
    for (int i = 0; i < n_; ++i)
    {
        if (rm.values[i][i] != 1)
            throw InvalidSpec("diagonal parameters must equal 1");
        for (int j = 0; j < n_; ++j)
        {
            const Rational& v = rm.values[i][j];
            if (v == 0)
                throw InvalidSpec("parameters must be nonzero");
            if (v * rm.values[j][i] != 1)
                throw InvalidSpec("parameter matrix is not multiplicatively antisymmetric");
            parts.push_back(abs(numerator(v)));
            parts.push_back(denominator(v));
        }
    }
    base_ = coprime_base(parts);
    group_orders_.assign(1 + base_.size(), 0);
    group_orders_[0] = 2;
    for (int i = 0; i < n_; ++i)
    {
        for (int j = 0; j < n_; ++j)
        {
            const Rational& v = rm.values[i][j];
            auto num = factor_over(abs(numerator(v)), base_);
            auto den = factor_over(denominator(v), base_);
            ParamMonomial pm;
            pm.e.push_back(v < 0 ? 1 : 0);
            for (std::size_t b = 0; b < base_.size(); ++b)
                pm.e.push_back(num[b] - den[b]);
            lambda_exp_[i][j] = pm;
        }
    }
}

ParamMonomial AlgebraSpec::tilde_exponents(int k, int i) const
{
    auto inverted = [](ParamMonomial m) {
        for (auto& x : m.e)
            x = -x;
        return m;
    };
    ParamMonomial m;
    if (k < r_ && i < r_)
        m = lambda_exp_[k][i];
    else if (k < r_)
        m = inverted(lambda_exp_[k][i - r_]);
    else if (i < r_)
        m = inverted(lambda_exp_[k - r_][i]);
    else
        m = lambda_exp_[k - r_][i - r_];
    for (std::size_t g = 0; g < m.e.size(); ++g)
        if (group_orders_[g] > 0)
            m.e[g] = mod_floor(m.e[g], group_orders_[g]);
    return m;
}

Scalar AlgebraSpec::zero() const
{
    return from_int(0);
}

Scalar AlgebraSpec::one() const
{
    return from_int(1);
}

Scalar AlgebraSpec::from_int(long v) const
{
    return from_rational(Rational(v));
}

Scalar AlgebraSpec::from_rational(const Rational& v) const
{
    if (field_)
    {
        std::vector<Rational> c(field_->degree());
        c[0] = v;
        return Scalar(field_, std::move(c));
    }
    return Scalar(v);
}

Scalar AlgebraSpec::lambda(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw IndexOutOfRange("lambda index out of range");
    return value(lambda_exp_[i][j]);
}

Scalar AlgebraSpec::lambda_tilde(int k, int i) const
{
    if (k < 0 || i < 0 || k >= dim() || i >= dim())
        throw IndexOutOfRange("lambda~ index out of range");
    return tilde_val_[k][i];
}

ParamMonomial AlgebraSpec::unit_monomial() const
{
    return ParamMonomial{std::vector<long>(group_orders_.size(), 0)};
}

void AlgebraSpec::multiply_tilde(ParamMonomial& m, int k, int i, long e) const
{
    if (k < 0 || i < 0 || k >= dim() || i >= dim())
        throw IndexOutOfRange("lambda~ index out of range");
    if (e == 0)
        return;
    const auto& t = tilde_exp_[k][i].e;
    for (std::size_t g = 0; g < t.size(); ++g)
    {
        m.e[g] += e * t[g];
        if (group_orders_[g] > 0)
            m.e[g] = mod_floor(m.e[g], group_orders_[g]);
    }
}

void AlgebraSpec::multiply_lambda(ParamMonomial& m, int i, int j, long e) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw IndexOutOfRange("lambda index out of range");
    const auto& t = lambda_exp_[i][j].e;
    for (std::size_t g = 0; g < t.size(); ++g)
    {
        m.e[g] += e * t[g];
        if (group_orders_[g] > 0)
            m.e[g] = mod_floor(m.e[g], group_orders_[g]);
    }
}

bool AlgebraSpec::is_one(const ParamMonomial& m) const
{
    for (std::size_t g = 0; g < m.e.size(); ++g)
    {
        long x = group_orders_[g] > 0 ? mod_floor(m.e[g], group_orders_[g]) : m.e[g];
        if (x != 0)
            return false;
    }
    return true;
}

Scalar AlgebraSpec::value(const ParamMonomial& m) const
{
    if (field_)
        return Scalar::zeta(field_, m.e[0]);
    Integer num = 1, den = 1;
    for (std::size_t b = 0; b < base_.size(); ++b)
    {
        long e = m.e[b + 1];
        if (e > 0)
            num *= boost::multiprecision::pow(base_[b], static_cast<unsigned>(e));
        else if (e < 0)
            den *= boost::multiprecision::pow(base_[b], static_cast<unsigned>(-e));
    }
    if (mod_floor(m.e[0], 2) == 1)
        num = -num;
    return Scalar(Rational(num, den));
}

long AlgebraSpec::lambda_order(int i, int j) const
{
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw IndexOutOfRange("lambda index out of range");
    const auto& e = lambda_exp_[i][j].e;
    if (field_)
    {
        long m = group_orders_[0];
        return m / std::gcd(m, mod_floor(e[0], m));
    }
    for (std::size_t g = 1; g < e.size(); ++g)
        if (e[g] != 0)
            return 0;
    return mod_floor(e[0], 2) == 0 ? 1 : 2;
}

bool AlgebraSpec::all_parameters_trivial() const
{
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (!is_one(lambda_exp_[i][j]))
                return false;
    return true;
}

bool AlgebraSpec::is_free_maximal_rank() const
{
    std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    if (pairs == 0)
        return true;
    if (field_)
        return false;
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < n_; ++i)
    {
        for (int j = i + 1; j < n_; ++j)
        {
            std::vector<Rational> row;
            for (std::size_t g = 1; g < lambda_exp_[i][j].e.size(); ++g)
                row.push_back(Rational(lambda_exp_[i][j].e[g]));
            rows.push_back(row);
        }
    }
    if (rows[0].empty())
        return false;
    return dense_rank(rows) == pairs;
}

std::string AlgebraSpec::variable_name(int v) const
{
    if (v < 0 || v >= dim())
        throw IndexOutOfRange("variable index out of range");
    return v < r_ ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - r_ + 1);
}

std::string AlgebraSpec::describe() const
{
    std::ostringstream os;
    os << "A(n=" << n_ << ",r=" << r_ << ")";
    if (const auto* cm = std::get_if<CyclotomicModel>(&model_))
    {
        os << " cyclotomic(" << cm->order << ") E=[";
        for (int i = 0; i < n_; ++i)
        {
            os << (i ? "," : "") << "[";
            for (int j = 0; j < n_; ++j)
                os << (j ? "," : "") << cm->exponents[i][j];
            os << "]";
        }
        os << "]";
    }
    else
    {
        const auto& rm = std::get<RationalModel>(model_);
        os << " rational V=[";
        for (int i = 0; i < n_; ++i)
        {
            os << (i ? "," : "") << "[";
            for (int j = 0; j < n_; ++j)
                os << (j ? "," : "") << rational_to_string(rm.values[i][j]);
            os << "]";
        }
        os << "]";
    }
    return os.str();
}

bool monomial_is_one(const AlgebraSpec& spec, const std::vector<LambdaFactor>& factors)
{
    ParamMonomial m = spec.unit_monomial();
    for (const auto& f : factors)
        spec.multiply_tilde(m, f.row, f.col, f.exponent);
    return spec.is_one(m);
}

}   // namespace hochhom
