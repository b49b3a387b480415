#include "bsymbol/field.hpp"

#include <numeric>
#include <string>

#include "bsymbol/numeric.hpp"

namespace bsymbol {

namespace {

constexpr long long kMaxFieldSize = 1LL << 24;  // desk scale

long long digit_add(long long a, long long b, long long p) {
    long long out = 0, mul = 1;
    while (a > 0 || b > 0) {
        out += ((a % p) + (b % p)) % p * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return out;
}

long long digit_neg(long long a, long long p) {
    long long out = 0, mul = 1;
    while (a > 0) {
        out += (p - (a % p)) % p * mul;
        a /= p;
        mul *= p;
    }
    return out;
}

struct FqLayer {
    long long p = 0;
    int t = 0;
    long long q = 0;
    std::vector<std::uint32_t> exp;  // size q-1
    std::vector<std::int32_t> log;   // size q, -1 for zero

    long long mul(long long a, long long b) const {
        if (a == 0 || b == 0) return 0;
        return exp[(log[a] + log[b]) % (q - 1)];
    }
    long long add(long long a, long long b) const { return digit_add(a, b, p); }
    long long neg(long long a) const { return digit_neg(a, p); }
};

// multiply an F_q code by the root z of poly_q; red[i] = -poly_q[i] mod p
long long fq_mul_z(long long code, long long p, int t, long long q,
                   const std::vector<long long>& red) {
    long long shifted = code * p;
    long long top = shifted / q;
    long long rem = shifted % q;
    if (top == 0) return rem;
    long long out = 0, mul = 1;
    for (int i = 0; i < t; ++i) {
        out += ((rem % p) + top * red[i]) % p * mul;
        rem /= p;
        mul *= p;
    }
    return out;
}

void check_poly_shape(const std::vector<long long>& poly, int degree, long long coeff_bound,
                      const char* what) {
    if (static_cast<int>(poly.size()) != degree + 1)
        throw DegreeMismatchError(std::string(what) + ": expected degree " +
                                  std::to_string(degree) + ", got " +
                                  std::to_string(static_cast<long long>(poly.size()) - 1));
    if (poly.back() != 1)
        throw DegreeMismatchError(std::string(what) + ": polynomial must be monic");
    for (long long c : poly)
        if (c < 0 || c >= coeff_bound)
            throw DegreeMismatchError(std::string(what) + ": coefficient out of range");
}

FqLayer build_fq(long long p, int t, const std::vector<long long>& poly) {
    if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (t < 1) throw DegreeMismatchError("t must be >= 1");
    check_poly_shape(poly, t, p, "poly_q");

    FqLayer fq;
    fq.p = p;
    fq.t = t;
    fq.q = ipow(p, t);
    if (fq.q > kMaxFieldSize) throw Error("F_q larger than supported desk scale (2^24)");

    std::vector<long long> red(t);
    for (int i = 0; i < t; ++i) red[i] = (p - poly[i]) % p;

    fq.exp.resize(fq.q - 1);
    fq.log.assign(fq.q, -1);
    long long cur = 1;
    for (long long k = 0; k < fq.q - 1; ++k) {
        if (cur == 0 || fq.log[cur] != -1)
            throw NonPrimitivePolynomialError("poly_q is not primitive over F_p");
        fq.exp[k] = static_cast<std::uint32_t>(cur);
        fq.log[cur] = static_cast<std::int32_t>(k);
        cur = fq_mul_z(cur, p, t, fq.q, red);
    }
    if (cur != 1) throw NonPrimitivePolynomialError("poly_q is not primitive over F_p");
    return fq;
}

struct FqrLayer {
    long long size = 0, order = 0;
    std::vector<std::uint32_t> antilog;
    std::vector<std::int32_t> log;
};

FqrLayer build_fqr(const FqLayer& fq, int r, const std::vector<long long>& poly) {
    if (r < 1) throw DegreeMismatchError("r must be >= 1");
    check_poly_shape(poly, r, fq.q, "poly_qr");

    FqrLayer out;
    out.size = 1;
    for (int i = 0; i < r; ++i) {
        out.size *= fq.q;
        if (out.size > kMaxFieldSize)
            throw Error("q^r larger than supported desk scale (2^24)");
    }
    out.order = out.size - 1;

    std::vector<long long> red(r);
    for (int j = 0; j < r; ++j) red[j] = fq.neg(poly[j]);

    out.antilog.resize(out.order);
    out.log.assign(out.size, -1);

    std::vector<long long> c(r, 0);
    c[0] = 1;
    for (long long k = 0; k < out.order; ++k) {
        long long code = 0;
        for (int j = r - 1; j >= 0; --j) code = code * fq.q + c[j];
        if (code == 0 || out.log[code] != -1)
            throw NonPrimitivePolynomialError("poly_qr is not primitive over F_q");
        out.antilog[k] = static_cast<std::uint32_t>(code);
        out.log[code] = static_cast<std::int32_t>(k);
        // multiply by the root y of poly_qr
        long long top = c[r - 1];
        for (int j = r - 1; j >= 1; --j) c[j] = fq.add(c[j - 1], fq.mul(top, red[j]));
        c[0] = fq.mul(top, red[0]);
    }
    long long final_code = 0;
    for (int j = r - 1; j >= 0; --j) final_code = final_code * fq.q + c[j];
    if (final_code != 1)
        throw NonPrimitivePolynomialError("poly_qr is not primitive over F_q");
    return out;
}

long long encode_base(const std::vector<long long>& digits, long long base) {
    long long code = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) code = code * base + *it;
    return code;
}

}  // namespace

std::vector<std::uint32_t> fq_exp_table(long long p, int t,
                                        const std::vector<long long>& poly_q) {
    return build_fq(p, t, poly_q).exp;
}

std::vector<long long> default_poly_q(long long p, int t) {
    if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (t < 1) throw DegreeMismatchError("t must be >= 1");
    const long long q = ipow(p, t);
    if (q > kMaxFieldSize) throw Error("F_q larger than supported desk scale (2^24)");
    std::vector<long long> poly(t + 1);
    poly[t] = 1;
    // lex order: constant term is the most significant comparison key
    for (long long m = 0; m < q; ++m) {
        long long v = m;
        for (int i = t - 1; i >= 0; --i) {
            poly[i] = v % p;
            v /= p;
        }
        if (poly[0] == 0) continue;  // x would divide the polynomial
        try {
            build_fq(p, t, poly);
            return poly;
        } catch (const NonPrimitivePolynomialError&) {
        }
    }
    throw Error("no primitive polynomial found");  // unreachable for valid p, t
}

std::vector<long long> default_poly_qr(long long p, int t,
                                       const std::vector<long long>& poly_q, int r) {
    const FqLayer fq = build_fq(p, t, poly_q);
    if (r < 1) throw DegreeMismatchError("r must be >= 1");
    long long size = 1;
    for (int i = 0; i < r; ++i) {
        size *= fq.q;
        if (size > kMaxFieldSize)
            throw Error("q^r larger than supported desk scale (2^24)");
    }
    std::vector<long long> poly(r + 1);
    poly[r] = 1;
    for (long long m = 0; m < size; ++m) {
        long long v = m;
        for (int i = r - 1; i >= 0; --i) {
            poly[i] = v % fq.q;
            v /= fq.q;
        }
        if (poly[0] == 0) continue;
        // the norm (-1)^r * c_0 of a root must generate F_q^*
        long long norm = (r % 2 == 1) ? fq.neg(poly[0]) : poly[0];
        if (std::gcd(static_cast<long long>(fq.log[norm]), fq.q - 1) != 1) continue;
        try {
            build_fqr(fq, r, poly);
            return poly;
        } catch (const NonPrimitivePolynomialError&) {
        }
    }
    throw Error("no primitive polynomial found over F_q");  // unreachable
}

FieldSpec make_spec(long long p, int t, int r,
                    std::optional<std::vector<long long>> poly_q,
                    std::optional<std::vector<long long>> poly_qr) {
    FieldSpec spec;
    spec.p = p;
    spec.t = t;
    spec.r = r;
    spec.poly_q = poly_q ? std::move(*poly_q) : default_poly_q(p, t);
    spec.poly_qr = poly_qr ? std::move(*poly_qr) : default_poly_qr(p, t, spec.poly_q, r);
    return spec;
}

FieldTables build_field(FieldSpec spec) {
    FieldTables F;
    FqLayer fq = build_fq(spec.p, spec.t, spec.poly_q);
    FqrLayer fqr = build_fqr(fq, spec.r, spec.poly_qr);

    F.spec_ = std::move(spec);
    F.q_ = fq.q;
    F.size_ = fqr.size;
    F.order_ = fqr.order;
    F.delta_ = F.order_ / (F.q_ - 1);
    F.fq_exp_ = std::move(fq.exp);
    F.fq_log_ = std::move(fq.log);
    F.antilog_ = std::move(fqr.antilog);
    F.log_ = std::move(fqr.log);

    const long long p = F.p(), q = F.q_;
    const int t = F.t(), r = F.r();

    // Tr_{F_q/F_p} per F_q code, via the Frobenius orbit of the generator power
    F.fq_trace_p_.assign(q, 0);
    for (long long code = 1; code < q; ++code) {
        long long m = F.fq_log_[code];
        long long acc = 0;
        long long pk = 1;
        for (int i = 0; i < t; ++i) {
            acc = digit_add(acc, F.fq_exp_[(m * pk) % (q - 1)], p);
            pk = (pk * p) % (q - 1 > 0 ? q - 1 : 1);
        }
        if (acc >= p) throw Error("internal: trace to F_p not in prime field");
        F.fq_trace_p_[code] = static_cast<std::uint32_t>(acc);
    }

    // Tr_{F_{q^r}/F_q} of the basis powers y^j, then of every gamma^k
    std::vector<long long> basis_trace(r);
    for (int j = 0; j < r; ++j) {
        long long acc_code = 0;  // full q^r code, summed coordinate-wise
        long long qm = 1;
        for (int m = 0; m < r; ++m) {
            long long e = (static_cast<long long>(j) * qm) % F.order_;
            long long cd = F.antilog_[e];
            // coordinate-wise sum over F_q
            long long out = 0, mul = 1, a = acc_code, b = cd;
            for (int jj = 0; jj < r; ++jj) {
                out += digit_add(a % q, b % q, p) * mul;
                a /= q;
                b /= q;
                mul *= q;
            }
            acc_code = out;
            qm = (qm * q) % F.order_;
        }
        if (acc_code >= q) throw Error("internal: basis trace not in F_q");
        basis_trace[j] = acc_code;
    }
    F.trace_q_.assign(F.order_, 0);
    for (long long k = 0; k < F.order_; ++k) {
        long long cd = F.antilog_[k];
        long long acc = 0;
        for (int j = 0; j < r; ++j) {
            acc = digit_add(acc, F.fq_mul(cd % q, basis_trace[j]), p);
            cd /= q;
        }
        F.trace_q_[k] = static_cast<std::uint32_t>(acc);
    }

    // embedding F_q^* = <gamma^Delta>; verifies the sub-field consistency invariant
    F.embed_log_.assign(q, 0);
    std::vector<bool> seen(q, false);
    for (long long k = 0; k < q - 1; ++k) {
        long long e = (F.delta_ * k) % F.order_;
        long long code = F.antilog_[e];
        if (code >= q || seen[code])
            throw Error("internal: gamma^Delta does not generate F_q^*");
        seen[code] = true;
        F.embed_log_[code] = static_cast<std::uint32_t>(e);
    }
    return F;
}

FieldPtr build_field_shared(FieldSpec spec) {
    return std::make_shared<const FieldTables>(build_field(std::move(spec)));
}

Element FieldTables::add(Element a, Element b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long ca = antilog_[a.log()], cb = antilog_[b.log()];
    long long out = 0, mul = 1;
    for (int j = 0; j < r(); ++j) {
        out += digit_add(ca % q_, cb % q_, p()) * mul;
        ca /= q_;
        cb /= q_;
        mul *= q_;
    }
    return from_code(static_cast<std::uint32_t>(out));
}

Element FieldTables::neg(Element a) const {
    if (a.is_zero() || p() == 2) return a;
    return Element::from_log((a.log() + order_ / 2) % order_);
}

Element FieldTables::mul(Element a, Element b) const {
    if (a.is_zero() || b.is_zero()) return Element::zero();
    return Element::from_log((a.log() + b.log()) % order_);
}

Element FieldTables::inv(Element a) const {
    if (a.is_zero()) throw ZeroElementError("inverse of zero");
    return Element::from_log((order_ - a.log()) % order_);
}

Element FieldTables::pow(Element a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    if (a.is_zero()) return e == 0 ? one() : Element::zero();
    return Element::from_log(static_cast<long long>(
        (static_cast<unsigned __int128>(a.log()) * e) % order_));
}

Element FieldTables::from_code(std::uint32_t code) const {
    if (code == 0) return Element::zero();
    if (code >= size_ || log_[code] < 0)
        throw Error("invalid element code " + std::to_string(code));
    return Element::from_log(log_[code]);
}

std::vector<long long> FieldTables::coords(Element a) const {
    std::vector<long long> out(r(), 0);
    long long cd = code_of(a);
    for (int j = 0; j < r(); ++j) {
        out[j] = cd % q_;
        cd /= q_;
    }
    return out;
}

Element FieldTables::embed_fq(long long fq_code) const {
    if (fq_code == 0) return Element::zero();
    if (fq_code < 0 || fq_code >= q_)
        throw Error("invalid F_q code " + std::to_string(fq_code));
    return Element::from_log(embed_log_[fq_code]);
}

long long FieldTables::trace_to_q(Element a) const {
    return a.is_zero() ? 0 : trace_q_[a.log()];
}

long long FieldTables::trace_to_p(Element a) const {
    return a.is_zero() ? 0 : fq_trace_p_[trace_q_[a.log()]];
}

long long FieldTables::class_index(Element a, long long u) const {
    if (a.is_zero()) throw ZeroElementError("class_index of zero");
    if (u < 1 || order_ % u != 0)
        throw NonDivisorError("u = " + std::to_string(u) + " does not divide q^r - 1");
    return a.log() % u;
}

long long FieldTables::fq_log(long long code) const {
    if (code <= 0 || code >= q_) throw ZeroElementError("fq_log of zero or invalid code");
    return fq_log_[code];
}

long long FieldTables::fq_add(long long a, long long b) const {
    return digit_add(a, b, p());
}

long long FieldTables::fq_neg(long long a) const { return digit_neg(a, p()); }

long long FieldTables::fq_mul(long long a, long long b) const {
    if (a == 0 || b == 0) return 0;
    return fq_exp_[(fq_log_[a] + fq_log_[b]) % (q_ - 1)];
}

}  // namespace bsymbol
