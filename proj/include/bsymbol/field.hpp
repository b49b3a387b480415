#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bsymbol/errors.hpp"

namespace bsymbol {

/// Defining data for the tower F_p <= F_q <= F_{q^r}, q = p^t.
///
/// Polynomials are monic, given as ascending coefficient sequences including
/// the leading 1. poly_q has coefficients in [0, p); poly_qr has coefficients
/// that are F_q codes (an F_q element with base-p digits c_0..c_{t-1} is
/// encoded as the integer sum c_i * p^i).
struct FieldSpec {
    long long p = 2;
    int t = 1;
    int r = 1;
    std::vector<long long> poly_q;   // length t + 1
    std::vector<long long> poly_qr;  // length r + 1
};

/// A member of F_{q^r}: either zero or gamma^k with k reduced mod q^r - 1.
class Element {
public:
    Element() = default;
    static Element zero() { return {}; }
    static Element from_log(std::int64_t k) {
        Element e;
        e.log_ = k;
        return e;
    }
    bool is_zero() const { return log_ < 0; }
    std::int64_t log() const {
        if (log_ < 0) throw ZeroElementError("log of zero element");
        return log_;
    }
    friend bool operator==(const Element&, const Element&) = default;

private:
    std::int64_t log_ = -1;
};

/// Lexicographically smallest primitive polynomial of degree t over F_p
/// (coefficients compared ascending from the constant term).
std::vector<long long> default_poly_q(long long p, int t);

/// Lexicographically smallest primitive polynomial of degree r over F_q,
/// coefficients (F_q codes) compared by code value ascending from the
/// constant term. poly_q fixes the F_q arithmetic the codes refer to.
std::vector<long long> default_poly_qr(long long p, int t,
                                       const std::vector<long long>& poly_q, int r);

/// Exp table of F_q = F_p[x]/(poly_q): index k -> code of z^k where z is the
/// root of poly_q. Size q - 1. Validates primitivity of poly_q.
std::vector<std::uint32_t> fq_exp_table(long long p, int t,
                                        const std::vector<long long>& poly_q);

/// Fills in any omitted polynomial with the deterministic default.
FieldSpec make_spec(long long p, int t, int r,
                    std::optional<std::vector<long long>> poly_q = std::nullopt,
                    std::optional<std::vector<long long>> poly_qr = std::nullopt);

/// Exact arithmetic context for the tower, log/antilog based.
/// Immutable after construction; all member functions are pure reads.
class FieldTables {
public:
    long long p() const { return spec_.p; }
    int t() const { return spec_.t; }
    int r() const { return spec_.r; }
    long long q() const { return q_; }
    long long field_size() const { return size_; }       // q^r
    long long group_order() const { return order_; }     // q^r - 1
    long long delta() const { return delta_; }           // (q^r - 1)/(q - 1)
    const FieldSpec& spec() const { return spec_; }

    Element one() const { return Element::from_log(0); }
    Element gamma() const { return Element::from_log(order_ > 1 ? 1 : 0); }
    Element from_exponent(std::int64_t k) const {
        return Element::from_log(((k % order_) + order_) % order_);
    }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;
    Element pow(Element a, long long e) const;

    /// Coordinate code of an element: sum coords[j] * q^j, coords in F_q codes.
    std::uint32_t code_of(Element a) const {
        return a.is_zero() ? 0u : antilog_[a.log()];
    }
    Element from_code(std::uint32_t code) const;
    std::vector<long long> coords(Element a) const;

    /// Embedding F_q^* = <gamma^Delta>: F_q code -> element of F_{q^r}.
    Element embed_fq(long long fq_code) const;

    long long trace_to_q(Element a) const;       // F_q code
    long long trace_to_p(Element a) const;       // value in [0, p)
    long long trace_q_by_exp(std::int64_t k) const { return trace_q_[k]; }
    long long trace_p_by_exp(std::int64_t k) const { return fq_trace_p_[trace_q_[k]]; }

    /// Index i of the cyclotomic class C_i of order u containing a (log mod u).
    long long class_index(Element a, long long u) const;

    // F_q scalar layer
    long long fq_gen() const { return q_ > 1 ? fq_exp_[q_ > 2 ? 1 : 0] : 0; }
    long long fq_exp(long long k) const { return fq_exp_[((k % (q_ - 1)) + (q_ - 1)) % (q_ - 1)]; }
    long long fq_log(long long code) const;
    long long fq_add(long long a, long long b) const;
    long long fq_neg(long long a) const;
    long long fq_mul(long long a, long long b) const;
    long long fq_trace_p(long long code) const { return fq_trace_p_[code]; }

    friend FieldTables build_field(FieldSpec spec);

private:
    FieldTables() = default;

    FieldSpec spec_;
    long long q_ = 0, size_ = 0, order_ = 0, delta_ = 0;

    std::vector<std::uint32_t> fq_exp_;      // size q-1: k -> F_q code of z^k
    std::vector<std::int32_t> fq_log_;       // size q: code -> exponent, -1 for 0
    std::vector<std::uint32_t> fq_trace_p_;  // size q: code -> Tr_{F_q/F_p}

    std::vector<std::uint32_t> antilog_;     // size order: k -> code of gamma^k
    std::vector<std::int32_t> log_;          // size q^r: code -> exponent, -1 for 0
    std::vector<std::uint32_t> trace_q_;     // size order: k -> Tr_{F_{q^r}/F_q}(gamma^k)
    std::vector<std::uint32_t> embed_log_;   // size q: F_q code -> exponent of its image
};

/// Builds all tables, verifying every FieldSpec invariant (primality of p,
/// primitivity of both polynomials, sub-field embedding consistency).
FieldTables build_field(FieldSpec spec);

using FieldPtr = std::shared_ptr<const FieldTables>;

FieldPtr build_field_shared(FieldSpec spec);

}  // namespace bsymbol
