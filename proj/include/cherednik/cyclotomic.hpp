#ifndef CHEREDNIK_CYCLOTOMIC_HPP
#define CHEREDNIK_CYCLOTOMIC_HPP

#include "cherednik/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace cherednik {

namespace detail {

/// Dense univariate polynomial over Rat, coefficients by ascending degree,
/// no trailing zeros.
using RPoly = std::vector<Rat>;

inline void rpoly_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    rpoly_trim(c);
    return c;
}

inline RPoly rpoly_sub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rpoly_trim(a);
    return a;
}

/// Division with remainder; divisor must be nonzero.
inline std::pair<RPoly, RPoly> rpoly_divmod(RPoly a, const RPoly& b) {
    RPoly q;
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        rpoly_trim(a);
    }
    rpoly_trim(q);
    return {q, a};
}

/// The l-th cyclotomic polynomial: (z^l - 1) / prod_{d | l, d < l} Phi_d.
inline RPoly cyclotomic_poly_compute(unsigned l) {
    if (l == 1) return RPoly{Rat(-1), Rat(1)};
    RPoly num(l + 1, Rat(0));
    num[0] = -1;
    num[l] = 1;
    for (unsigned d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        auto [q, r] = rpoly_divmod(num, cyclotomic_poly_compute(d));
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = q;
    }
    return num;
}

inline const RPoly& cyclotomic_poly(unsigned l) {
    static std::map<unsigned, RPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, cyclotomic_poly_compute(l)).first;
    return it->second;
}

inline unsigned euler_phi(unsigned l) {
    return static_cast<unsigned>(cyclotomic_poly(l).size() - 1);
}

} // namespace detail

/// Element of Q(zeta_l) = Q[z]/(Phi_l(z)), stored as a dense coefficient
/// vector of length phi(l) in the power basis of zeta. For l = 1 this is
/// just Q.
class CycElem {
public:
    CycElem() : ell_(1), coeff_(1, Rat(0)) {}

    explicit CycElem(unsigned ell, Rat value = Rat(0))
        : ell_(check_ell(ell)), coeff_(detail::euler_phi(ell), Rat(0)) {
        coeff_[0] = std::move(value);
    }

    /// zeta_l^m for any integer m.
    static CycElem zeta_pow(unsigned ell, long long m) {
        CycElem z(ell);
        long long l = static_cast<long long>(ell);
        long long e = ((m % l) + l) % l;
        std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
        raw.back() = 1;
        z.coeff_ = reduce(ell, raw);
        return z;
    }

    static CycElem zeta(unsigned ell) { return zeta_pow(ell, 1); }

    unsigned ell() const { return ell_; }
    const std::vector<Rat>& coeffs() const { return coeff_; }

    bool is_zero() const {
        return std::all_of(coeff_.begin(), coeff_.end(), [](const Rat& c) { return c == 0; });
    }
    bool is_rational() const {
        for (size_t i = 1; i < coeff_.size(); ++i)
            if (coeff_[i] != 0) return false;
        return true;
    }
    const Rat& rational_part() const { return coeff_[0]; }

    friend bool operator==(const CycElem& a, const CycElem& b) {
        return a.ell_ == b.ell_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }
    friend bool operator<(const CycElem& a, const CycElem& b) {
        if (a.ell_ != b.ell_) return a.ell_ < b.ell_;
        return a.coeff_ < b.coeff_;
    }

    friend CycElem operator+(const CycElem& a, const CycElem& b) {
        CycElem r = a.matched(b);
        for (size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
        return r;
    }
    friend CycElem operator-(const CycElem& a, const CycElem& b) {
        CycElem r = a.matched(b);
        for (size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] -= b.coeff_[i];
        return r;
    }
    friend CycElem operator-(const CycElem& a) {
        CycElem r = a;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    friend CycElem operator*(const CycElem& a, const CycElem& b) {
        a.matched(b);
        detail::RPoly pa(a.coeff_.begin(), a.coeff_.end());
        detail::RPoly pb(b.coeff_.begin(), b.coeff_.end());
        CycElem r(a.ell_);
        r.coeff_ = reduce(a.ell_, detail::rpoly_mul(pa, pb));
        return r;
    }
    friend CycElem operator*(const Rat& c, const CycElem& a) {
        CycElem r = a;
        for (auto& x : r.coeff_) x *= c;
        return r;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_l; inverting zero is an error.
    CycElem inv() const {
        if (is_zero()) throw std::domain_error("inversion of zero in Q(zeta)");
        detail::RPoly a(coeff_.begin(), coeff_.end());
        detail::rpoly_trim(a);
        detail::RPoly b = detail::cyclotomic_poly(ell_);
        // extended gcd: s*a + t*b = g
        detail::RPoly r0 = a, r1 = b;
        detail::RPoly s0{Rat(1)}, s1{};
        while (!r1.empty()) {
            auto [q, r2] = detail::rpoly_divmod(r0, r1);
            detail::RPoly s2 = detail::rpoly_sub(s0, detail::rpoly_mul(q, s1));
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (r0.size() != 1) throw std::logic_error("Phi_l not coprime to unit candidate");
        Rat g = r0[0];
        CycElem out(ell_);
        detail::RPoly s = s0;
        for (auto& c : s) c /= g;
        out.coeff_ = reduce(ell_, s);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < coeff_.size(); ++i) {
            const Rat& c = coeff_[i];
            if (c == 0) continue;
            Rat ac = rat_abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit = (ac == 1);
            if (i == 0) {
                os << rat_to_string(ac);
            } else {
                if (!unit) os << rat_to_string(ac) << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static unsigned check_ell(unsigned ell) {
        if (ell == 0) throw std::invalid_argument("ell must be >= 1");
        return ell;
    }

    CycElem matched(const CycElem& b) const {
        if (ell_ != b.ell_) throw std::invalid_argument("mixed cyclotomic orders");
        return *this;
    }

    static std::vector<Rat> reduce(unsigned ell, detail::RPoly p) {
        const auto& phi = detail::cyclotomic_poly(ell);
        auto [q, r] = detail::rpoly_divmod(std::move(p), phi);
        (void)q;
        std::vector<Rat> out(phi.size() - 1, Rat(0));
        for (size_t i = 0; i < r.size(); ++i) out[i] = r[i];
        return out;
    }

    unsigned ell_;
    std::vector<Rat> coeff_;
};

} // namespace cherednik

#endif
