#ifndef CHEREDNIK_SCALAR_HPP
#define CHEREDNIK_SCALAR_HPP

#include "cherednik/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace cherednik {

/// Monomial exponent vector over the indeterminates (hbar, k, h_0..h_{l-1});
/// slot 0 is hbar, slot 1 is k, slot 2+r is h_r.
using ExpVec = std::vector<unsigned>;

inline ExpVec exp_zero(unsigned ell) { return ExpVec(2 + ell, 0); }

/// Sparse polynomial in hbar, k, h_0..h_{l-1} with coefficients in Q(zeta_l).
/// Zero coefficients are never stored, so equality is map equality.
class CycScalar {
public:
    CycScalar() : ell_(1) {}
    explicit CycScalar(unsigned ell) : ell_(ell) {
        if (ell == 0) throw std::invalid_argument("ell must be >= 1");
    }

    static CycScalar from_elem(unsigned ell, CycElem c) {
        CycScalar s(ell);
        s.add_term(exp_zero(ell), std::move(c));
        return s;
    }
    static CycScalar from_rat(unsigned ell, Rat c) {
        return from_elem(ell, CycElem(ell, std::move(c)));
    }
    static CycScalar one(unsigned ell) { return from_rat(ell, 1); }
    static CycScalar zeta_pow(unsigned ell, long long m) {
        return from_elem(ell, CycElem::zeta_pow(ell, m));
    }
    static CycScalar indet(unsigned ell, unsigned slot) {
        CycScalar s(ell);
        ExpVec e = exp_zero(ell);
        if (slot >= e.size()) throw std::invalid_argument("indeterminate slot out of range");
        e[slot] = 1;
        s.add_term(std::move(e), CycElem(ell, 1));
        return s;
    }
    static CycScalar hbar(unsigned ell) { return indet(ell, 0); }
    static CycScalar kparam(unsigned ell) { return indet(ell, 1); }
    static CycScalar hparam(unsigned ell, unsigned r) {
        if (r >= ell) throw std::invalid_argument("h index out of range");
        return indet(ell, 2 + r);
    }

    unsigned ell() const { return ell_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, CycElem>& terms() const { return terms_; }

    /// True when the scalar is a single constant term (no indeterminates).
    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == exp_zero(ell_);
    }
    CycElem constant_value() const {
        if (terms_.empty()) return CycElem(ell_, 0);
        if (!is_constant()) throw std::domain_error("scalar is not constant");
        return terms_.begin()->second;
    }

    void add_term(ExpVec e, CycElem c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend bool operator==(const CycScalar& a, const CycScalar& b) {
        return a.ell_ == b.ell_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b) {
        a.match(b);
        CycScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b) {
        a.match(b);
        CycScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend CycScalar operator-(const CycScalar& a) {
        CycScalar r(a.ell_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b) {
        a.match(b);
        CycScalar r(a.ell_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                ExpVec e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }
    friend CycScalar operator*(const CycElem& c, const CycScalar& a) {
        CycScalar r(a.ell_);
        for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
        return r;
    }
    friend CycScalar operator*(const Rat& c, const CycScalar& a) {
        return CycElem(a.ell_, c) * a;
    }

    CycScalar pow(unsigned n) const {
        CycScalar r = one(ell_);
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// Canonical text form: terms sorted with the leading exponent vector
    /// first; cyclotomic coefficients parenthesised unless they are a single
    /// rational.
    std::string to_string() const;

private:
    void match(const CycScalar& b) const {
        if (ell_ != b.ell_) throw std::invalid_argument("mixed ell in scalar arithmetic");
    }

    unsigned ell_;
    std::map<ExpVec, CycElem> terms_;
};

inline const char* indet_name_prefix(unsigned slot) {
    return slot == 0 ? "hbar" : slot == 1 ? "k" : "h";
}

inline std::string indet_name(unsigned slot) {
    if (slot <= 1) return indet_name_prefix(slot);
    std::ostringstream os;
    os << "h" << (slot - 2);
    return os.str();
}

inline std::string CycScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading monomial first: iterate the map in reverse (descending lex)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExpVec& e = it->first;
        CycElem c = it->second;
        bool negate = false;
        if (c.is_rational() && c.rational_part() < 0) {
            negate = true;
            c = -c;
        }
        if (first) {
            if (negate) os << "-";
            first = false;
        } else {
            os << (negate ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += indet_name(static_cast<unsigned>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool unit_coeff = c.is_rational() && c.rational_part() == 1;
        std::string cs = c.is_rational() ? rat_to_string(c.rational_part())
                                         : "(" + c.to_string() + ")";
        if (mono.empty()) {
            os << cs;
        } else if (unit_coeff) {
            os << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

/// Partial map from indeterminate slots to constant values; assigned values
/// contain no indeterminates.
class ParamAssignment {
public:
    ParamAssignment() = default;

    void set(unsigned slot, CycElem value) { map_[slot] = std::move(value); }
    void set_rat(unsigned ell, unsigned slot, Rat value) {
        map_[slot] = CycElem(ell, std::move(value));
    }
    bool has(unsigned slot) const { return map_.count(slot) > 0; }
    const std::map<unsigned, CycElem>& entries() const { return map_; }

private:
    std::map<unsigned, CycElem> map_;
};

/// Substitutes the assigned indeterminates; a ring homomorphism.
inline CycScalar specialize(const CycScalar& x, const ParamAssignment& a) {
    CycScalar out(x.ell());
    for (const auto& [e, c] : x.terms()) {
        CycElem coeff = c;
        ExpVec rest = e;
        for (const auto& [slot, value] : a.entries()) {
            if (slot >= e.size()) continue;
            for (unsigned i = 0; i < e[slot]; ++i) coeff = coeff * value;
            rest[slot] = 0;
        }
        out.add_term(std::move(rest), std::move(coeff));
    }
    return out;
}

/// Coefficients (c_1, .., c_{l-1}) of the parameter polynomial
/// p(u) = sum_{s=1}^{l-1} c_s u^s with c_s = sum_{r=0}^{l-1} zeta^{-rs} h_r.
inline std::vector<CycScalar> p_coeffs(unsigned ell) {
    std::vector<CycScalar> c;
    for (unsigned s = 1; s < ell; ++s) {
        CycScalar cs(ell);
        for (unsigned r = 0; r < ell; ++r) {
            long long e = -static_cast<long long>(r) * static_cast<long long>(s);
            cs = cs + CycScalar::zeta_pow(ell, e) * CycScalar::hparam(ell, r);
        }
        c.push_back(cs);
    }
    return c;
}

/// p evaluated at the scalar zeta^m (any integer m): sum_s c_s zeta^{m s}.
inline CycScalar p_at_zeta_pow(unsigned ell, long long m) {
    auto c = p_coeffs(ell);
    CycScalar out(ell);
    for (unsigned s = 1; s < ell; ++s)
        out = out + CycScalar::zeta_pow(ell, m * s) * c[s - 1];
    return out;
}

/// p(zeta^m) for 0 <= m < l.
inline CycScalar p_at_scalar(unsigned ell, unsigned m) {
    if (m >= ell) throw std::invalid_argument("m out of range");
    return p_at_zeta_pow(ell, m);
}

/// s_m = p(zeta^m) - m hbar.
inline CycScalar s_value(unsigned ell, unsigned m) {
    if (m >= ell) throw std::invalid_argument("m out of range");
    CycScalar mh = Rat(m) * CycScalar::hbar(ell);
    return p_at_scalar(ell, m) - mh;
}

} // namespace cherednik

#endif
