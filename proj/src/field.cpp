#include "gdd/field.hpp"

#include <algorithm>
#include <sstream>

namespace gdd {

namespace {

int64_t mod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

// Dense univariate arithmetic mod p, used only for modulus bookkeeping.
using Upoly = std::vector<int64_t>; // low degree first, no trailing zeros

void trim(Upoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Upoly umul(const Upoly& a, const Upoly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Upoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

Upoly umod(Upoly a, const Upoly& m, int64_t p) {
    trim(a);
    int64_t lead_inv = 1;
    { // modulus is monic in our uses, but stay general
        int64_t lead = m.back();
        for (int64_t x = 1; x < p; ++x)
            if (mod(lead * x, p) == 1) { lead_inv = x; break; }
    }
    while (a.size() >= m.size()) {
        int64_t c = mod(a.back() * lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) a[i + shift] = mod(a[i + shift] - c * m[i], p);
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Upoly upow_mod(Upoly base, int64_t e, const Upoly& m, int64_t p) {
    Upoly r{1};
    base = umod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) r = umod(umul(r, base, p), m, p);
        base = umod(umul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Upoly ugcd(Upoly a, Upoly b, int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Upoly r = umod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<int64_t>& poly, int64_t p) {
    Upoly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    int k = static_cast<int>(f.size()) - 1;
    if (k == 1) return true;
    // f irreducible of degree k  <=>  t^(p^k) = t mod f, and for every prime
    // divisor d of k, gcd(t^(p^(k/d)) - t, f) = 1.
    Upoly t{0, 1};
    auto pow_p_times = [&](Upoly x, int times) {
        for (int i = 0; i < times; ++i) x = upow_mod(std::move(x), p, f, p);
        return x;
    };
    Upoly tk = pow_p_times(t, k);
    Upoly diff = tk;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (!diff.empty()) return false;
    for (int d = 2; d <= k; ++d) {
        if (k % d != 0 || !is_prime(d)) continue;
        Upoly td = pow_p_times(t, k / d);
        Upoly g = td;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = mod(g[1] - 1, p);
        trim(g);
        Upoly gc = ugcd(f, g, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

FieldSpec::FieldSpec(int64_t p, int k, std::vector<int64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int i = 0; i < k_; ++i) order_ *= p_;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(int64_t p, int k) {
    if (!is_prime(p)) fail(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
    if (k < 1) fail(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    if (k > kMaxDegree)
        fail(ErrorCode::ResourceLimit,
             "extension degree " + std::to_string(k) + " exceeds bound " + std::to_string(kMaxDegree));
    if (k == 1) return std::shared_ptr<const FieldSpec>(new FieldSpec(p, 1, {0, 1}));
    // Smallest monic irreducible in lexicographic order of (c_0, ..., c_{k-1}).
    std::vector<int64_t> c(k, 0);
    for (;;) {
        std::vector<int64_t> cand = c;
        cand.push_back(1);
        if (is_irreducible_mod_p(cand, p))
            return std::shared_ptr<const FieldSpec>(new FieldSpec(p, k, std::move(cand)));
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) fail(ErrorCode::InvalidArgument, "no irreducible found (impossible)");
        ++c[i];
    }
}

std::shared_ptr<const FieldSpec> FieldSpec::with_modulus(int64_t p, std::vector<int64_t> modulus) {
    if (!is_prime(p)) fail(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    int k = static_cast<int>(modulus.size()) - 1;
    if (k > kMaxDegree) fail(ErrorCode::ResourceLimit, "modulus degree exceeds bound");
    for (int64_t c : modulus)
        if (c < 0 || c >= p) fail(ErrorCode::InvalidArgument, "modulus coefficient not reduced mod p");
    if (modulus.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
    if (k > 1 && !is_irreducible_mod_p(modulus, p))
        fail(ErrorCode::InvalidArgument, "modulus is reducible over F_p");
    return std::shared_ptr<const FieldSpec>(new FieldSpec(p, k, std::move(modulus)));
}

std::string FieldSpec::to_string() const {
    std::ostringstream os;
    os << "F_" << p_;
    if (k_ > 1) {
        os << "^" << k_ << " mod (";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ", ";
            os << modulus_[i];
        }
        os << ")";
    }
    return os.str();
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<int64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(spec_->k(), 0);
    for (auto& c : coeffs_) c = mod(c, spec_->p());
}

FieldElement FieldElement::zero(const FieldSpecPtr& spec) {
    return FieldElement(spec, std::vector<int64_t>(spec->k(), 0));
}

FieldElement FieldElement::one(const FieldSpecPtr& spec) { return from_int(spec, 1); }

FieldElement FieldElement::from_int(const FieldSpecPtr& spec, int64_t value) {
    std::vector<int64_t> c(spec->k(), 0);
    c[0] = mod(value, spec->p());
    return FieldElement(spec, std::move(c));
}

FieldElement FieldElement::from_index(const FieldSpecPtr& spec, int64_t index) {
    if (index < 0 || index >= spec->order()) fail(ErrorCode::InvalidArgument, "field index out of range");
    std::vector<int64_t> c(spec->k(), 0);
    for (int i = 0; i < spec->k(); ++i) {
        c[i] = index % spec->p();
        index /= spec->p();
    }
    return FieldElement(spec, std::move(c));
}

bool FieldElement::is_zero() const {
    for (int64_t c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool FieldElement::in_prime_field() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

int64_t FieldElement::index() const {
    int64_t idx = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) idx = idx * spec_->p() + coeffs_[i];
    return idx;
}

int64_t FieldElement::as_int() const {
    if (!in_prime_field()) fail(ErrorCode::InvalidArgument, "element is not in the prime subfield");
    return coeffs_[0];
}

void FieldElement::check_same_spec(const FieldElement& o) const {
    if (spec_.get() == o.spec_.get()) return;
    if (!spec_ || !o.spec_ || !spec_->same(*o.spec_))
        fail(ErrorCode::SpecMismatch, "operands belong to different field specs");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_spec(o);
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(coeffs_[i] + o.coeffs_[i], spec_->p());
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_spec(o);
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(coeffs_[i] - o.coeffs_[i], spec_->p());
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    std::vector<int64_t> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod(-coeffs_[i], spec_->p());
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_spec(o);
    const int64_t p = spec_->p();
    std::vector<int64_t> prod(2 * coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] = mod(prod[i + j] + coeffs_[i] * o.coeffs_[j], p);
    }
    // reduce by the monic modulus: t^k = -(m_0 + ... + m_{k-1} t^{k-1})
    const auto& m = spec_->modulus();
    const size_t k = static_cast<size_t>(spec_->k());
    for (size_t d = prod.size(); d-- > k;) {
        int64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        size_t shift = d - k;
        for (size_t i = 0; i < k; ++i) prod[i + shift] = mod(prod[i + shift] - c * m[i], p);
    }
    prod.resize(k);
    return FieldElement(spec_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    // Extended Euclid in F_p[t] against the modulus.
    const int64_t p = spec_->p();
    Upoly r0 = spec_->modulus();
    Upoly r1 = coeffs_;
    trim(r1);
    Upoly s0{}, s1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Upoly q;
        Upoly rem = r0;
        trim(rem);
        int64_t lead = r1.back();
        int64_t lead_inv = 1;
        for (int64_t x = 1; x < p; ++x)
            if (mod(lead * x, p) == 1) { lead_inv = x; break; }
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            int64_t c = mod(rem.back() * lead_inv, p);
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i) rem[i + shift] = mod(rem[i + shift] - c * r1[i], p);
            trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Upoly qs = umul(q, s1, p);
        Upoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod(s2[i] - qs[i], p);
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd: a nonzero constant (modulus irreducible, element nonzero)
    int64_t g = r0.empty() ? 0 : r0[0];
    int64_t g_inv = 1;
    for (int64_t x = 1; x < p; ++x)
        if (mod(g * x, p) == 1) { g_inv = x; break; }
    for (auto& c : s0) c = mod(c * g_inv, p);
    s0.resize(spec_->k(), 0);
    return FieldElement(spec_, std::move(s0));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_spec(o);
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
    return *this * o.inverse();
}

FieldElement FieldElement::pow(int64_t e) const {
    if (e < 0) fail(ErrorCode::InvalidArgument, "negative exponent");
    FieldElement r = one(spec_); // 0^0 = 1 by convention (empty product)
    FieldElement b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius() const { return pow(spec_->p()); }

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_spec(o);
    return coeffs_ == o.coeffs_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    check_same_spec(o);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    if (spec_->k() == 1) {
        os << coeffs_[0];
    } else {
        os << "(";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ", ";
            os << coeffs_[i];
        }
        os << ")";
    }
    return os.str();
}

std::vector<FieldElement> enumerate_field(const FieldSpecPtr& spec) {
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(spec->order()));
    for (int64_t i = 0; i < spec->order(); ++i) out.push_back(FieldElement::from_index(spec, i));
    return out;
}

} // namespace gdd
