#include "qlift/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qlift {

long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return a | b;
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(a).get_mpz_t(), (unsigned long)b);
    return (a / g.get_si()) * b;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

using Poly = std::vector<Rational>;  // dense, coeffs[i] = coefficient of x^i

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division q = a / b, requires the remainder to vanish.
Poly poly_div_exact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw MathError("cyclotomic polynomial division left a remainder");
    return q;
}

Poly cyclotomic_poly(long n, std::map<long, Poly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0) num = poly_div_exact(num, cyclotomic_poly(d, cache));
    }
    cache[n] = num;
    return num;
}

}  // namespace

CycloField::CycloField(long E) : E_(E) {
    if (E < 1) throw InputError("cyclotomic order must be positive");
    static std::map<long, Poly> cache;
    static std::mutex cache_mutex;
    Poly phi;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        phi = cyclotomic_poly(E, cache);
    }
    phi_ = (long)phi.size() - 1;
    phi_poly_ = phi;
    // Residues of x^k for k up to max(2*phi-2, E-1): enough to fold products
    // of reduced residues and to place any root of unity zeta_E^k.
    long top = phi_ > 0 ? 2 * phi_ - 1 : 1;
    if (top < E) top = E;
    powers_.resize(top);
    for (long k = 0; k < top; ++k) {
        std::vector<Rational> r(phi_, Rational(0));
        if (k < phi_) {
            r[k] = 1;
        } else {
            // x^k = x * x^(k-1), then reduce the top coefficient via Phi_E
            const auto& prev = powers_[k - 1];
            Rational carry = prev[phi_ - 1];
            for (long i = phi_ - 1; i >= 1; --i) r[i] = prev[i - 1];
            r[0] = 0;
            if (carry != 0) {
                // x^phi = -(Phi_E - x^phi), i.e. subtract carry * lower part of Phi_E
                for (long i = 0; i < phi_; ++i) r[i] -= carry * phi_poly_[i];
            }
        }
        powers_[k] = std::move(r);
    }
}

const CycloField* CycloField::get(long E) {
    static std::map<long, std::unique_ptr<CycloField>> fields;
    static std::mutex fields_mutex;
    std::lock_guard<std::mutex> lock(fields_mutex);
    auto it = fields.find(E);
    if (it == fields.end()) {
        it = fields.emplace(E, std::unique_ptr<CycloField>(new CycloField(E))).first;
    }
    return it->second.get();
}

Scalar Scalar::root_of_unity(const CycloField* f, long k) {
    long E = f->order();
    k %= E;
    if (k < 0) k += E;
    Scalar s(f);
    const auto& res = f->power_residue(k);
    s.c_ = res;
    return s;
}

bool Scalar::is_zero() const {
    if (!field_) return true;
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (!field_) return false;
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    if (!field_) return true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Scalar::rational_part() const {
    if (!is_rational()) throw MathError("scalar is not rational");
    if (!field_ || c_.empty()) return Rational(0);
    return c_[0];
}

static void check_same_field(const CycloField* a, const CycloField* b) {
    if (a != b) throw InputError("scalars from different cyclotomic fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!field_) return o;
    if (!o.field_) return *this;
    check_same_field(field_, o.field_);
    Scalar r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (!field_ || !o.field_) return Scalar();  // zero
    check_same_field(field_, o.field_);
    long n = field_->degree();
    // schoolbook product then fold powers >= n via the precomputed residues
    std::vector<Rational> raw(2 * n - 1, Rational(0));
    for (long i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            raw[i + j] += c_[i] * o.c_[j];
        }
    }
    Scalar r(field_);
    for (long k = 0; k < (long)raw.size(); ++k) {
        if (raw[k] == 0) continue;
        const auto& res = field_->power_residue(k);
        for (long i = 0; i < n; ++i) r.c_[i] += raw[k] * res[i];
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator==(const Scalar& o) const {
    if (!field_ || !o.field_) return is_zero() && o.is_zero();
    check_same_field(field_, o.field_);
    return c_ == o.c_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero in Q(zeta_E)");
    // extended Euclid in Q[x] against Phi_E (irreducible, so gcd = 1)
    using Poly = std::vector<Rational>;
    Poly r0 = field_->minimal_polynomial();
    Poly r1(c_.begin(), c_.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    Poly s0{}, s1{Rational(1)};  // coefficients of the input in the Bezout identity
    while (true) {
        // r1 is nonzero here (gcd of an irreducible and a nonzero residue is a unit)
        if (r1.size() == 1) break;
        // divide r0 by r1
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        Poly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational lead = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += lead;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        // s_next = s0 - q * s1
        Poly s_next = s0;
        if (s_next.size() < q.size() + s1.size()) s_next.resize(q.size() + s1.size() ? q.size() + s1.size() - 1 : 0, Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s_next[i + j] -= q[i] * s1[j];
        }
        while (!s_next.empty() && s_next.back() == 0) s_next.pop_back();
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
        if (r1.empty()) throw MathError("unexpected zero remainder inverting a cyclotomic scalar");
    }
    // deg(s1) < deg(Phi_E), so the Bezout coefficient is already reduced
    Rational unit = r1[0];
    if (s1.size() > (size_t)field_->degree())
        throw MathError("Bezout coefficient degree bound violated");
    Scalar inv(field_);
    for (size_t i = 0; i < s1.size(); ++i) inv.c_[i] = s1[i] / unit;
    return inv;
}

Scalar Scalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar base = *this;
    Scalar acc = Scalar::one(field_ ? field_ : CycloField::get(1));
    while (n) {
        if (n & 1) acc *= base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

long Scalar::mult_order() const {
    if (is_zero()) return 0;
    Scalar acc = *this;
    long cap = 4 * field_->order() + 4;
    for (long k = 1; k <= cap; ++k) {
        if (acc.is_one()) return k;
        acc *= *this;
    }
    return 0;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[0].get_str();
        } else if (c_[i] == 1) {
            os << "z^" << i;
        } else {
            os << c_[i].get_str() << "*z^" << i;
        }
    }
    return os.str();
}

Scalar Scalar::from_coeffs(const CycloField* f, std::vector<Rational> coeffs) {
    if ((long)coeffs.size() != f->degree()) throw InputError("coefficient vector length mismatch");
    Scalar s(f);
    s.c_ = std::move(coeffs);
    return s;
}

Scalar operator*(const Rational& r, const Scalar& s) {
    if (!s.field()) return s;
    std::vector<Rational> c = s.coeffs();
    for (auto& x : c) x *= r;
    return Scalar::from_coeffs(s.field(), std::move(c));
}

}  // namespace qlift
