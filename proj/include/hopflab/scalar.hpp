#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace hopflab {

/// Base field descriptor: the rationals, a cyclotomic field Q(zeta_N), or a prime field F_p.
/// Scalars of distinct fields never mix; arithmetic across tags throws FieldMismatch.
enum class field_kind { rational, cyclotomic, prime };

struct FieldSpec {
    field_kind kind = field_kind::rational;
    long param = 0; // N for cyclotomic, p for prime, unused for rationals

    static FieldSpec Q() { return {field_kind::rational, 0}; }
    static FieldSpec cyclotomic(long N) {
        require(N >= 1, errc::invalid_datum, "cyclotomic order must be >= 1");
        return {field_kind::cyclotomic, N};
    }
    static FieldSpec Fp(long p) {
        require(p >= 2, errc::invalid_datum, "prime modulus must be >= 2");
        for (long d = 2; d * d <= p; ++d)
            require(p % d != 0, errc::invalid_datum, "modulus is not prime");
        return {field_kind::prime, p};
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && param == o.param; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case field_kind::rational: return "Q";
            case field_kind::cyclotomic: return "Q(z_" + std::to_string(param) + ")";
            case field_kind::prime: return "F" + std::to_string(param);
        }
        return "?";
    }
};

namespace detail {

using QPoly = std::vector<mpq_class>; // coefficient vector, index = power

inline void poly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of exact polynomial division (remainder must come out zero where used).
inline QPoly poly_divexact(QPoly num, const QPoly& den) {
    QPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpq_class(0));
    while (num.size() >= den.size() && !num.empty()) {
        mpq_class c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    return q;
}

/// Data of the cyclotomic field Q(zeta_N): the minimal polynomial Phi_N and its degree.
struct CycloField {
    long N;
    QPoly phi; // monic, degree = euler_phi(N)
    size_t deg;
};

inline QPoly cyclotomic_poly(long N, std::map<long, QPoly>& cache) {
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    // x^N - 1 divided by the product of Phi_d over proper divisors d of N
    QPoly num(N + 1, mpq_class(0));
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        num = poly_divexact(num, cyclotomic_poly(d, cache));
    }
    cache[N] = num;
    return num;
}

inline const CycloField& cyclo_field(long N) {
    static std::mutex mu;
    static std::map<long, QPoly> poly_cache;
    static std::map<long, std::unique_ptr<CycloField>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto it = fields.find(N);
    if (it == fields.end()) {
        auto f = std::make_unique<CycloField>();
        f->N = N;
        f->phi = cyclotomic_poly(N, poly_cache);
        f->deg = f->phi.size() - 1;
        it = fields.emplace(N, std::move(f)).first;
    }
    return *it->second;
}

inline long mod_pos(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

inline long fp_inverse(long v, long p) {
    long t = 0, newt = 1, r = p, newr = mod_pos(v, p);
    require(newr != 0, errc::not_invertible, "division by zero in F_p");
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    require(r == 1, errc::not_invertible, "non-unit in F_p");
    return mod_pos(t, p);
}

} // namespace detail

/// Exact field element.  Tagged by its field; all arithmetic is exact, equality decidable.
/// Cyclotomic values are kept fully reduced mod Phi_N, rationals in lowest terms.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::Q()), rat_(0) {}

    static Scalar zero(const FieldSpec& f) { return of_long(f, 0); }
    static Scalar one(const FieldSpec& f) { return of_long(f, 1); }

    static Scalar of_long(const FieldSpec& f, long v) {
        Scalar s;
        s.field_ = f;
        switch (f.kind) {
            case field_kind::rational: s.rat_ = v; break;
            case field_kind::cyclotomic: {
                s.cyc_.assign(detail::cyclo_field(f.param).deg, mpq_class(0));
                if (!s.cyc_.empty())
                    s.cyc_[0] = v;
                else
                    require(v == 0 || f.param == 1, errc::internal, "degenerate cyclotomic field");
                break;
            }
            case field_kind::prime: s.fp_ = detail::mod_pos(v, f.param); break;
        }
        return s;
    }

    static Scalar of_rational(const FieldSpec& f, const mpq_class& q) {
        Scalar s;
        s.field_ = f;
        switch (f.kind) {
            case field_kind::rational: s.rat_ = q; s.rat_.canonicalize(); break;
            case field_kind::cyclotomic:
                s.cyc_.assign(detail::cyclo_field(f.param).deg, mpq_class(0));
                require(!s.cyc_.empty(), errc::internal, "degenerate cyclotomic field");
                s.cyc_[0] = q;
                s.cyc_[0].canonicalize();
                break;
            case field_kind::prime: {
                mpq_class c = q;
                c.canonicalize();
                mpz_class num = c.get_num(), den = c.get_den();
                long p = f.param;
                long n = detail::mod_pos(mpz_class(num % p).get_si(), p);
                long d = detail::mod_pos(mpz_class(den % p).get_si(), p);
                s.fp_ = detail::mod_pos(n * detail::fp_inverse(d, p), p);
                break;
            }
        }
        return s;
    }

    static Scalar rational(long num, long den) {
        require(den != 0, errc::invalid_datum, "zero denominator");
        Scalar s;
        s.field_ = FieldSpec::Q();
        s.rat_ = mpq_class(num, den);
        s.rat_.canonicalize();
        return s;
    }

    static Scalar integer(long v) { return rational(v, 1); }

    /// The primitive N-th root of unity zeta_N of Q(zeta_N).
    static Scalar zeta(long N) {
        FieldSpec f = FieldSpec::cyclotomic(N);
        const auto& cf = detail::cyclo_field(N);
        Scalar s;
        s.field_ = f;
        s.cyc_.assign(cf.deg, mpq_class(0));
        if (cf.deg == 1) {
            // N = 1 or 2: zeta is rational (1 resp. -1), phi reads off the value
            s.cyc_[0] = (N == 1) ? 1 : -1;
        } else {
            s.cyc_[1] = 1;
        }
        return s;
    }

    static Scalar fp(long p, long v) {
        Scalar s;
        s.field_ = FieldSpec::Fp(p);
        s.fp_ = detail::mod_pos(v, p);
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        switch (field_.kind) {
            case field_kind::rational: return rat_ == 0;
            case field_kind::cyclotomic:
                for (const auto& c : cyc_)
                    if (c != 0) return false;
                return true;
            case field_kind::prime: return fp_ == 0;
        }
        return false;
    }

    bool is_one() const { return *this == one(field_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.field_ != b.field_) return false;
        switch (a.field_.kind) {
            case field_kind::rational: return a.rat_ == b.rat_;
            case field_kind::cyclotomic: return a.cyc_ == b.cyc_;
            case field_kind::prime: return a.fp_ == b.fp_;
        }
        return false;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        Scalar r = a;
        switch (a.field_.kind) {
            case field_kind::rational: r.rat_ += b.rat_; break;
            case field_kind::cyclotomic:
                for (size_t i = 0; i < r.cyc_.size(); ++i) r.cyc_[i] += b.cyc_[i];
                break;
            case field_kind::prime: r.fp_ = detail::mod_pos(r.fp_ + b.fp_, a.field_.param); break;
        }
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    Scalar operator-() const {
        Scalar r = *this;
        switch (field_.kind) {
            case field_kind::rational: r.rat_ = -r.rat_; break;
            case field_kind::cyclotomic:
                for (auto& c : r.cyc_) c = -c;
                break;
            case field_kind::prime: r.fp_ = detail::mod_pos(-r.fp_, field_.param); break;
        }
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        Scalar r;
        r.field_ = a.field_;
        switch (a.field_.kind) {
            case field_kind::rational: r.rat_ = a.rat_ * b.rat_; break;
            case field_kind::cyclotomic: {
                const auto& cf = detail::cyclo_field(a.field_.param);
                detail::QPoly prod(2 * cf.deg, mpq_class(0));
                for (size_t i = 0; i < cf.deg; ++i) {
                    if (a.cyc_[i] == 0) continue;
                    for (size_t j = 0; j < cf.deg; ++j) {
                        if (b.cyc_[j] == 0) continue;
                        prod[i + j] += a.cyc_[i] * b.cyc_[j];
                    }
                }
                reduce_mod_phi(prod, cf);
                r.cyc_.assign(prod.begin(), prod.begin() + cf.deg);
                break;
            }
            case field_kind::prime:
                r.fp_ = detail::mod_pos(a.fp_ * b.fp_, a.field_.param);
                break;
        }
        return r;
    }

    Scalar inverse() const {
        switch (field_.kind) {
            case field_kind::rational: {
                require(rat_ != 0, errc::not_invertible, "division by zero");
                Scalar r;
                r.field_ = field_;
                r.rat_ = 1 / rat_;
                return r;
            }
            case field_kind::cyclotomic: return cyclo_inverse();
            case field_kind::prime: {
                Scalar r;
                r.field_ = field_;
                r.fp_ = detail::fp_inverse(fp_, field_.param);
                return r;
            }
        }
        raise(errc::internal, "bad field kind");
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar acc = one(field_), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Multiplicative order, or nullopt if not a root of unity within the search bound.
    std::optional<long> multiplicative_order(long bound = 512) const {
        if (is_zero()) return std::nullopt;
        Scalar acc = *this;
        for (long m = 1; m <= bound; ++m) {
            if (acc.is_one()) return m;
            acc = acc * *this;
        }
        return std::nullopt;
    }

    /// Canonical string form: "3/2", "-1", "z^2", "1/2-z+3*z^2", "4 mod 5".
    std::string str() const {
        switch (field_.kind) {
            case field_kind::rational: return rat_.get_str();
            case field_kind::prime: return std::to_string(fp_) + " mod " + std::to_string(field_.param);
            case field_kind::cyclotomic: {
                std::string out;
                bool first = true;
                for (size_t k = 0; k < cyc_.size(); ++k) {
                    const mpq_class& c = cyc_[k];
                    if (c == 0) continue;
                    mpq_class abs = c < 0 ? mpq_class(-c) : c;
                    std::string sign = (c < 0) ? "-" : (first ? "" : "+");
                    std::string term;
                    if (k == 0) {
                        term = abs.get_str();
                    } else {
                        std::string z = (k == 1) ? "z" : "z^" + std::to_string(k);
                        term = (abs == 1) ? z : abs.get_str() + "*" + z;
                    }
                    out += sign + term;
                    first = false;
                }
                return first ? "0" : out;
            }
        }
        return "?";
    }

    /// Parses the canonical string form for the given field. Throws ParseError.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    /// Access to the rational value (rational field only).
    const mpq_class& rat() const {
        require(field_.kind == field_kind::rational, errc::field_mismatch, "not a rational scalar");
        return rat_;
    }
    long fp_value() const {
        require(field_.kind == field_kind::prime, errc::field_mismatch, "not a prime-field scalar");
        return fp_;
    }
    const std::vector<mpq_class>& cyclo_coeffs() const {
        require(field_.kind == field_kind::cyclotomic, errc::field_mismatch, "not a cyclotomic scalar");
        return cyc_;
    }

  private:
    void check_same(const Scalar& o) const {
        require(field_ == o.field_, errc::field_mismatch,
                "cannot combine " + field_.str() + " with " + o.field_.str());
    }

    static void reduce_mod_phi(detail::QPoly& p, const detail::CycloField& cf) {
        for (size_t k = p.size(); k-- > cf.deg;) {
            if (p[k] == 0) continue;
            mpq_class c = p[k];
            // x^k = x^(k-deg) * (x^deg - phi) since phi is monic
            for (size_t i = 0; i < cf.deg; ++i) p[k - cf.deg + i] -= c * cf.phi[i];
            p[k] = 0;
        }
    }

    Scalar cyclo_inverse() const {
        require(!is_zero(), errc::not_invertible, "division by zero");
        const auto& cf = detail::cyclo_field(field_.param);
        // extended Euclid in Q[x]: u*this + v*phi = gcd = const
        detail::QPoly r0 = cf.phi, r1(cyc_.begin(), cyc_.end());
        detail::poly_trim(r1);
        detail::QPoly s0 = {mpq_class(0)}, s1 = {mpq_class(1)}; // coefficients of `this`
        while (true) {
            detail::poly_trim(r1);
            require(!r1.empty(), errc::not_invertible, "zero divisor in cyclotomic field");
            if (r1.size() == 1) break;
            // r0 = q*r1 + r2
            detail::QPoly q(r0.size() - r1.size() + 1, mpq_class(0));
            detail::QPoly r2 = r0;
            while (r2.size() >= r1.size()) {
                mpq_class c = r2.back() / r1.back();
                size_t shift = r2.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
                detail::poly_trim(r2);
                if (r2.empty()) break;
            }
            // s2 = s0 - q*s1
            detail::QPoly s2 = s0;
            s2.resize(std::max(s2.size(), q.size() + s1.size()), mpq_class(0));
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            detail::poly_trim(s2);
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        mpq_class lead = r1[0];
        detail::QPoly inv = s1;
        for (auto& c : inv) c /= lead;
        inv.resize(cf.deg, mpq_class(0));
        Scalar r;
        r.field_ = field_;
        r.cyc_.assign(inv.begin(), inv.begin() + cf.deg);
        return r;
    }

    FieldSpec field_;
    mpq_class rat_;
    std::vector<mpq_class> cyc_;
    long fp_ = 0;
};

namespace detail {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarLexer(const std::string& str) : s(str) {}
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    char get() { return pos < s.size() ? s[pos++] : '\0'; }
    bool eof() const { return pos >= s.size(); }
};

inline mpq_class parse_rational_token(ScalarLexer& lx) {
    std::string num;
    if (lx.peek() == '-' || lx.peek() == '+') num += lx.get();
    require(isdigit(lx.peek()), errc::parse_error, "expected digit in scalar '" + lx.s + "'");
    while (isdigit(lx.peek())) num += lx.get();
    std::string den;
    if (lx.peek() == '/') {
        lx.get();
        require(isdigit(lx.peek()), errc::parse_error, "expected denominator in scalar '" + lx.s + "'");
        while (isdigit(lx.peek())) den += lx.get();
    }
    mpq_class q(num + (den.empty() ? "" : "/" + den));
    q.canonicalize();
    return q;
}

} // namespace detail

inline Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    detail::ScalarLexer lx(text);
    try {
        switch (f.kind) {
            case field_kind::rational: {
                mpq_class q = detail::parse_rational_token(lx);
                require(lx.eof(), errc::parse_error, "trailing characters in scalar '" + text + "'");
                return Scalar::of_rational(f, q);
            }
            case field_kind::prime: {
                mpq_class q = detail::parse_rational_token(lx);
                while (lx.peek() == ' ') lx.get();
                if (!lx.eof()) {
                    for (char c : {'m', 'o', 'd'})
                        require(lx.get() == c, errc::parse_error, "bad F_p scalar '" + text + "'");
                    while (lx.peek() == ' ') lx.get();
                    mpq_class p = detail::parse_rational_token(lx);
                    require(lx.eof(), errc::parse_error, "trailing characters in scalar '" + text + "'");
                    require(p == f.param, errc::field_mismatch,
                            "modulus mismatch in scalar '" + text + "'");
                }
                return Scalar::of_rational(f, q);
            }
            case field_kind::cyclotomic: {
                Scalar acc = Scalar::zero(f);
                bool first = true;
                while (!lx.eof()) {
                    int sign = 1;
                    if (lx.peek() == '+' || lx.peek() == '-') {
                        sign = lx.get() == '-' ? -1 : 1;
                    } else {
                        require(first, errc::parse_error, "expected sign in scalar '" + text + "'");
                    }
                    first = false;
                    mpq_class coeff = 1;
                    bool have_coeff = false;
                    if (isdigit(lx.peek())) {
                        coeff = detail::parse_rational_token(lx);
                        have_coeff = true;
                        if (lx.peek() == '*') lx.get();
                    }
                    long power = 0;
                    if (lx.peek() == 'z') {
                        lx.get();
                        power = 1;
                        if (lx.peek() == '^') {
                            lx.get();
                            std::string e;
                            while (isdigit(lx.peek())) e += lx.get();
                            require(!e.empty(), errc::parse_error, "bad exponent in scalar '" + text + "'");
                            power = std::stol(e);
                        }
                    } else {
                        require(have_coeff, errc::parse_error, "bad term in scalar '" + text + "'");
                    }
                    Scalar term = Scalar::of_rational(f, sign < 0 ? mpq_class(-coeff) : coeff);
                    acc = acc + term * Scalar::zeta(f.param).pow(power);
                }
                require(!first, errc::parse_error, "empty scalar");
                return acc;
            }
        }
    } catch (const std::invalid_argument&) {
        raise(errc::parse_error, "malformed scalar '" + text + "'");
    }
    raise(errc::internal, "bad field kind");
}

} // namespace hopflab
