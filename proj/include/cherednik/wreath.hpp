#ifndef CHEREDNIK_WREATH_HPP
#define CHEREDNIK_WREATH_HPP

#include "cherednik/scalar.hpp"

#include <numeric>

namespace cherednik {

/// Element of G(l,1,n) as the monomial matrix diag(zeta^tors) * P(perm),
/// where P(w) e_j = e_{w(j)}. Products compose matrices, so
/// perm_{ab}(j) = perm_a(perm_b(j)) and tors_{ab,i} = tors_a,i + tors_b,a^{-1}(i).
class GroupElem {
public:
    GroupElem() : ell_(1) {}
    GroupElem(unsigned ell, unsigned n)
        : ell_(ell), perm_(n), tors_(n, 0) {
        if (ell == 0 || n == 0) throw std::invalid_argument("need ell,n >= 1");
        std::iota(perm_.begin(), perm_.end(), 1u);
    }

    static GroupElem identity(unsigned ell, unsigned n) { return GroupElem(ell, n); }

    /// Adjacent transposition (j, j+1), 1 <= j <= n-1.
    static GroupElem transposition(unsigned ell, unsigned n, unsigned j) {
        if (j < 1 || j >= n) throw std::invalid_argument("transposition index out of range");
        GroupElem g(ell, n);
        std::swap(g.perm_[j - 1], g.perm_[j]);
        return g;
    }

    /// General transposition (i, j).
    static GroupElem swap_of(unsigned ell, unsigned n, unsigned i, unsigned j) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw std::invalid_argument("bad transposition");
        GroupElem g(ell, n);
        std::swap(g.perm_[i - 1], g.perm_[j - 1]);
        return g;
    }

    /// t_i = diag(1,..,zeta,..,1) with zeta in slot i.
    static GroupElem torsion(unsigned ell, unsigned n, unsigned i, long long power = 1) {
        if (i < 1 || i > n) throw std::invalid_argument("torsion index out of range");
        GroupElem g(ell, n);
        g.tors_[i - 1] = mod_ell(ell, power);
        return g;
    }

    /// chi_i = (i, i-1, .., 1): maps i -> i-1 -> .. -> 1 -> i, fixes > i.
    static GroupElem chi(unsigned ell, unsigned n, unsigned i) {
        if (i < 1 || i > n) throw std::invalid_argument("chi index out of range");
        GroupElem g(ell, n);
        for (unsigned j = 2; j <= i; ++j) g.perm_[j - 1] = j - 1;
        g.perm_[0] = i;
        return g;
    }

    /// upsilon_i = (i, i+1, .., n): maps i -> i+1 -> .. -> n -> i, fixes < i.
    static GroupElem upsilon(unsigned ell, unsigned n, unsigned i) {
        if (i < 1 || i > n) throw std::invalid_argument("upsilon index out of range");
        GroupElem g(ell, n);
        for (unsigned j = i; j < n; ++j) g.perm_[j - 1] = j + 1;
        g.perm_[n - 1] = i;
        return g;
    }

    unsigned ell() const { return ell_; }
    unsigned n() const { return static_cast<unsigned>(perm_.size()); }
    const std::vector<unsigned>& perm() const { return perm_; }
    const std::vector<unsigned>& tors() const { return tors_; }

    unsigned apply(unsigned i) const { return perm_.at(i - 1); }
    unsigned apply_inv(unsigned i) const {
        for (unsigned j = 1; j <= n(); ++j)
            if (perm_[j - 1] == i) return j;
        throw std::logic_error("not a bijection");
    }
    unsigned tors_at(unsigned i) const { return tors_.at(i - 1); }

    bool is_identity() const {
        for (unsigned j = 1; j <= n(); ++j)
            if (perm_[j - 1] != j || tors_[j - 1] != 0) return false;
        return true;
    }
    bool is_pure_torsion() const {
        for (unsigned j = 1; j <= n(); ++j)
            if (perm_[j - 1] != j) return false;
        return true;
    }

    friend GroupElem operator*(const GroupElem& a, const GroupElem& b) {
        a.match(b);
        GroupElem r(a.ell_, a.n());
        for (unsigned j = 1; j <= a.n(); ++j)
            r.perm_[j - 1] = a.apply(b.apply(j));
        for (unsigned i = 1; i <= a.n(); ++i)
            r.tors_[i - 1] = (a.tors_[i - 1] + b.tors_[a.apply_inv(i) - 1]) % a.ell_;
        return r;
    }

    GroupElem inverse() const {
        GroupElem r(ell_, n());
        for (unsigned j = 1; j <= n(); ++j) r.perm_[apply(j) - 1] = j;
        for (unsigned i = 1; i <= n(); ++i)
            r.tors_[i - 1] = (ell_ - tors_[apply(i) - 1]) % ell_;
        return r;
    }

    GroupElem pow(long long e) const {
        GroupElem base = e >= 0 ? *this : inverse();
        unsigned long long m = static_cast<unsigned long long>(e >= 0 ? e : -e);
        GroupElem r = identity(ell_, n());
        for (unsigned long long i = 0; i < m; ++i) r = r * base;
        return r;
    }

    friend bool operator==(const GroupElem& a, const GroupElem& b) {
        return a.ell_ == b.ell_ && a.perm_ == b.perm_ && a.tors_ == b.tors_;
    }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
    friend bool operator<(const GroupElem& a, const GroupElem& b) {
        if (a.perm_ != b.perm_) return a.perm_ < b.perm_;
        return a.tors_ < b.tors_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "perm=[";
        for (unsigned j = 0; j < perm_.size(); ++j)
            os << (j ? "," : "") << perm_[j];
        os << "]t=[";
        for (unsigned j = 0; j < tors_.size(); ++j)
            os << (j ? "," : "") << tors_[j];
        os << "]";
        return os.str();
    }

    static unsigned mod_ell(unsigned ell, long long p) {
        long long l = static_cast<long long>(ell);
        return static_cast<unsigned>(((p % l) + l) % l);
    }

private:
    void match(const GroupElem& b) const {
        if (ell_ != b.ell_ || perm_.size() != b.perm_.size())
            throw std::invalid_argument("mixed (ell,n) in group arithmetic");
    }

    unsigned ell_;
    std::vector<unsigned> perm_;
    std::vector<unsigned> tors_;
};

/// Finitely supported CycScalar-combination of group elements.
class GroupAlgElem {
public:
    GroupAlgElem() : ell_(1), n_(1) {}
    GroupAlgElem(unsigned ell, unsigned n) : ell_(ell), n_(n) {}

    static GroupAlgElem of(const GroupElem& g) {
        GroupAlgElem r(g.ell(), g.n());
        r.add(g, CycScalar::one(g.ell()));
        return r;
    }
    static GroupAlgElem unit(unsigned ell, unsigned n) {
        return of(GroupElem::identity(ell, n));
    }

    unsigned ell() const { return ell_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<GroupElem, CycScalar>& terms() const { return terms_; }

    void add(const GroupElem& g, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend GroupAlgElem operator+(const GroupAlgElem& a, const GroupAlgElem& b) {
        GroupAlgElem r = a;
        for (const auto& [g, c] : b.terms_) r.add(g, c);
        return r;
    }
    friend GroupAlgElem operator-(const GroupAlgElem& a, const GroupAlgElem& b) {
        GroupAlgElem r = a;
        for (const auto& [g, c] : b.terms_) r.add(g, -c);
        return r;
    }
    friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
        GroupAlgElem r(a.ell_, a.n_);
        for (const auto& [g, c] : a.terms_)
            for (const auto& [h, d] : b.terms_)
                r.add(g * h, c * d);
        return r;
    }
    friend GroupAlgElem operator*(const CycScalar& c, const GroupAlgElem& a) {
        GroupAlgElem r(a.ell_, a.n_);
        for (const auto& [g, x] : a.terms_) r.add(g, c * x);
        return r;
    }
    friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
        return a.ell_ == b.ell_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    unsigned ell_;
    unsigned n_;
    std::map<GroupElem, CycScalar> terms_;
};

/// sum_{p=0}^{l-1} t_i^p t_j^{-p} (ij), weighted by zeta^p when asked.
inline GroupAlgElem refl_sum(unsigned ell, unsigned n, unsigned i, unsigned j, bool weighted) {
    if (i == j) throw std::invalid_argument("refl_sum needs i != j");
    GroupAlgElem out(ell, n);
    GroupElem sw = GroupElem::swap_of(ell, n, i, j);
    for (unsigned p = 0; p < ell; ++p) {
        GroupElem g = GroupElem::torsion(ell, n, i, p) *
                      GroupElem::torsion(ell, n, j, -static_cast<long long>(p)) * sw;
        CycScalar c = weighted ? CycScalar::zeta_pow(ell, p) : CycScalar::one(ell);
        out.add(g, c);
    }
    return out;
}

/// p evaluated at zeta^twist t_i: sum_s c_s zeta^{twist*s} t_i^s.
inline GroupAlgElem p_of_t(unsigned ell, unsigned n, unsigned i, long long twist) {
    GroupAlgElem out(ell, n);
    auto c = p_coeffs(ell);
    for (unsigned s = 1; s < ell; ++s) {
        CycScalar coeff = CycScalar::zeta_pow(ell, twist * s) * c[s - 1];
        out.add(GroupElem::torsion(ell, n, i, s), coeff);
    }
    return out;
}

} // namespace cherednik

#endif
