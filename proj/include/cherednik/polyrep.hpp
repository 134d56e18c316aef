#ifndef CHEREDNIK_POLYREP_HPP
#define CHEREDNIK_POLYREP_HPP

#include "cherednik/presentation.hpp"

namespace cherednik {

/// Key of a monomial U^uexp * T^texp; texp entries live in Z/l.
struct UTKey {
    std::vector<unsigned> uexp;
    std::vector<unsigned> texp;

    friend bool operator<(const UTKey& a, const UTKey& b) {
        if (a.uexp != b.uexp) return a.uexp < b.uexp;
        return a.texp < b.texp;
    }
    friend bool operator==(const UTKey& a, const UTKey& b) {
        return a.uexp == b.uexp && a.texp == b.texp;
    }
};

/// Element of the representation space: polynomial in U_1..U_n tensor the
/// group algebra of (Z/l)^n in T_1..T_n (T_i^l = 1), with CycScalar
/// coefficients.
class PolyUT {
public:
    PolyUT() : ell_(1), n_(1) {}
    PolyUT(unsigned ell, unsigned n) : ell_(ell), n_(n) {
        if (ell == 0 || n == 0) throw std::invalid_argument("need ell,n >= 1");
    }

    static PolyUT one(unsigned ell, unsigned n) {
        PolyUT f(ell, n);
        f.add(UTKey{std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0)},
              CycScalar::one(ell));
        return f;
    }
    static PolyUT monomial(unsigned ell, unsigned n, std::vector<unsigned> uexp,
                           std::vector<unsigned> texp, CycScalar c) {
        PolyUT f(ell, n);
        for (auto& t : texp) t %= ell;
        f.add(UTKey{std::move(uexp), std::move(texp)}, std::move(c));
        return f;
    }
    static PolyUT u_var(unsigned ell, unsigned n, unsigned i) {
        std::vector<unsigned> ue(n, 0), te(n, 0);
        ue.at(i - 1) = 1;
        return monomial(ell, n, ue, te, CycScalar::one(ell));
    }
    static PolyUT t_var(unsigned ell, unsigned n, unsigned i) {
        std::vector<unsigned> ue(n, 0), te(n, 0);
        te.at(i - 1) = 1;
        return monomial(ell, n, ue, te, CycScalar::one(ell));
    }
    /// sum_z T_1^z .. the torsion-invariant vector in the first slot.
    static PolyUT t_invariant(unsigned ell, unsigned n) {
        PolyUT f(ell, n);
        for (unsigned z = 0; z < ell; ++z) {
            std::vector<unsigned> te(n, 0);
            te[0] = z;
            f.add(UTKey{std::vector<unsigned>(n, 0), te}, CycScalar::one(ell));
        }
        return f;
    }

    unsigned ell() const { return ell_; }
    unsigned n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<UTKey, CycScalar>& terms() const { return terms_; }

    void add(const UTKey& key, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend PolyUT operator+(const PolyUT& a, const PolyUT& b) {
        a.match(b);
        PolyUT r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, c);
        return r;
    }
    friend PolyUT operator-(const PolyUT& a, const PolyUT& b) {
        a.match(b);
        PolyUT r = a;
        for (const auto& [k, c] : b.terms_) r.add(k, -c);
        return r;
    }
    friend PolyUT operator*(const CycScalar& c, const PolyUT& a) {
        PolyUT r(a.ell_, a.n_);
        for (const auto& [k, x] : a.terms_) r.add(k, c * x);
        return r;
    }
    friend PolyUT operator*(const PolyUT& a, const PolyUT& b) {
        a.match(b);
        PolyUT r(a.ell_, a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                UTKey k = ka;
                for (unsigned i = 0; i < a.n_; ++i) {
                    k.uexp[i] += kb.uexp[i];
                    k.texp[i] = (k.texp[i] + kb.texp[i]) % a.ell_;
                }
                r.add(k, ca * cb);
            }
        return r;
    }
    friend bool operator==(const PolyUT& a, const PolyUT& b) {
        return a.ell_ == b.ell_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyUT& a, const PolyUT& b) { return !(a == b); }

    unsigned u_degree() const {
        unsigned d = 0;
        for (const auto& [k, c] : terms_) {
            unsigned t = 0;
            for (auto e : k.uexp) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    std::string to_string() const;

private:
    void match(const PolyUT& b) const {
        if (ell_ != b.ell_ || n_ != b.n_)
            throw std::invalid_argument("mixed (ell,n) in polynomial arithmetic");
    }

    unsigned ell_;
    unsigned n_;
    std::map<UTKey, CycScalar> terms_;
};

/// The exact divided difference in the U-variables only:
/// (f with U_j, U_{j+1} swapped in the U-part) - f, divided by U_{j+1} - U_j.
/// Division is exact monomial-by-monomial; a closed form is used, and a
/// cross-check reconstruction guards against drift.
inline PolyUT divided_difference_u(const PolyUT& f, unsigned j) {
    unsigned n = f.n(), ell = f.ell();
    if (j < 1 || j >= n) throw std::invalid_argument("divided difference index out of range");
    PolyUT out(ell, n);
    for (const auto& [k, c] : f.terms()) {
        unsigned a = k.uexp[j - 1], b = k.uexp[j];
        if (a == b) continue;
        unsigned lo = std::min(a, b), d = (a > b) ? a - b : b - a;
        // (U_{j+1}^d - U_j^d)/(U_{j+1} - U_j) = sum_{r=0}^{d-1} U_j^r U_{j+1}^{d-1-r},
        // with overall sign -1 when a < b
        CycScalar coeff = (a > b) ? c : -c;
        for (unsigned r = 0; r < d; ++r) {
            UTKey nk = k;
            nk.uexp[j - 1] = lo + r;
            nk.uexp[j] = lo + (d - 1 - r);
            out.add(nk, coeff);
        }
    }
    // exactness guard: out * (U_{j+1} - U_j) must reproduce swap(f) - f
    PolyUT swapped(ell, n);
    for (const auto& [k, c] : f.terms()) {
        UTKey nk = k;
        std::swap(nk.uexp[j - 1], nk.uexp[j]);
        swapped.add(nk, c);
    }
    PolyUT diff = swapped - f;
    PolyUT recon = (PolyUT::u_var(ell, n, j + 1) - PolyUT::u_var(ell, n, j)) * out;
    if (!(recon == diff))
        throw std::logic_error("divided difference not exact");
    return out;
}

/// Left action of the generators on the polynomial representation:
///   u_i . f = U_i f,  t_i . f = T_i f,
///   (j,j+1) . f = f^{(j,j+1)} - k sum_{p=0}^{l-1} T_j^p T_{j+1}^{-p} dd_j(f),
///   sigma . f = (U_1 + q(T_1)) f(U_2..U_{n+1}; T_2..T_{n+1}),
///   tau . f   = f(U_0..U_{n-1}; T_0..T_{n-1}),
/// with U and T extended through the shift rules of the convention.
class PolyRep {
public:
    PolyRep(unsigned ell, unsigned n, Convention conv = Convention::selected())
        : ell_(ell), n_(n), conv_(conv) {}

    unsigned ell() const { return ell_; }
    unsigned n() const { return n_; }

    PolyUT act(const AGen& g, const PolyUT& f) const {
        switch (g.kind) {
            case AGen::Kind::Scalar: return g.value * f;
            case AGen::Kind::U: {
                auto [i0, q] = normalize(g.index);
                PolyUT u = PolyUT::u_var(ell_, n_, i0);
                CycScalar shift = Rat(q * conv_.u_shift) * CycScalar::hbar(ell_);
                return u * f + shift * f;
            }
            case AGen::Kind::T: {
                auto [i0, q] = normalize(g.index);
                CycScalar tw = CycScalar::zeta_pow(ell_, -q * conv_.u_shift);
                return tw * (PolyUT::t_var(ell_, n_, i0) * f);
            }
            case AGen::Kind::Transp: {
                unsigned j = static_cast<unsigned>(g.index);
                if (g.index < 1 || j >= n_)
                    throw std::invalid_argument("transposition index out of range");
                PolyUT swapped(ell_, n_);
                for (const auto& [k, c] : f.terms()) {
                    UTKey nk = k;
                    std::swap(nk.uexp[j - 1], nk.uexp[j]);
                    std::swap(nk.texp[j - 1], nk.texp[j]);
                    swapped.add(nk, c);
                }
                PolyUT dd = divided_difference_u(f, j);
                PolyUT corr(ell_, n_);
                for (unsigned p = 0; p < ell_; ++p) {
                    for (const auto& [k, c] : dd.terms()) {
                        UTKey nk = k;
                        nk.texp[j - 1] = (nk.texp[j - 1] + p) % ell_;
                        nk.texp[j] = (nk.texp[j] + ell_ - p) % ell_;
                        corr.add(nk, c);
                    }
                }
                return swapped - CycScalar::kparam(ell_) * corr;
            }
            case AGen::Kind::Sigma: {
                PolyUT shifted = substitute_up(f);
                PolyUT factor = PolyUT::u_var(ell_, n_, 1) + q_poly();
                return factor * shifted;
            }
            case AGen::Kind::Tau: return substitute_down(f);
        }
        throw std::logic_error("unreachable");
    }

    PolyUT act_word(const AWord& w, const PolyUT& f) const {
        PolyUT out(ell_, n_);
        for (const auto& [c, gens] : w.terms()) {
            PolyUT cur = f;
            for (auto it = gens.rbegin(); it != gens.rend(); ++it) cur = act(*it, cur);
            out = out + c * cur;
        }
        return out;
    }

    /// The image x_i = chi_i sigma upsilon_i^{-1} as a generator word.
    AWord x_word(unsigned i) const {
        AWord::Word w;
        for (unsigned j = i; j >= 2; --j) w.push_back(AGen::transp(j - 1));
        w.push_back(AGen::sigma());
        for (unsigned j = n_; j > i; --j) w.push_back(AGen::transp(j - 1));
        return AWord::word(ell_, std::move(w));
    }

    /// The image y_i = upsilon_i tau chi_i^{-1} as a generator word.
    AWord y_word(unsigned i) const {
        AWord::Word w;
        for (unsigned j = i; j < n_; ++j) w.push_back(AGen::transp(j));
        w.push_back(AGen::tau());
        for (unsigned j = 1; j < i; ++j) w.push_back(AGen::transp(j));
        return AWord::word(ell_, std::move(w));
    }

    /// Word for a group element: torsion part then a reduced transposition word.
    AWord group_word(const GroupElem& g) const {
        AWord::Word w;
        for (unsigned i = 1; i <= n_; ++i)
            for (unsigned r = 0; r < g.tors_at(i); ++r) w.push_back(AGen::t(i));
        std::vector<unsigned> line = g.perm();
        std::vector<long long> rights;
        bool done = false;
        while (!done) {
            done = true;
            for (unsigned x = 0; x + 1 < line.size(); ++x) {
                if (line[x] > line[x + 1]) {
                    std::swap(line[x], line[x + 1]);
                    rights.push_back(x + 1);
                    done = false;
                    break;
                }
            }
        }
        for (auto it = rights.rbegin(); it != rights.rend(); ++it)
            w.push_back(AGen::transp(*it));
        return AWord::word(ell_, std::move(w));
    }

    /// Action of a PBW element through the generator words (the second
    /// evaluation route of the cross-oracle).
    PolyUT act_h(const HElem& h, const PolyUT& f) const {
        PolyUT out(ell_, n_);
        for (const auto& [k, c] : h.terms()) {
            AWord w = AWord::scalar(ell_, c);
            for (unsigned i = 1; i <= n_; ++i)
                for (unsigned r = 0; r < k.xexp[i - 1]; ++r) w = w * x_word(i);
            w = w * group_word(k.g);
            for (unsigned i = 1; i <= n_; ++i)
                for (unsigned r = 0; r < k.yexp[i - 1]; ++r) w = w * y_word(i);
            out = out + act_word(w, f);
        }
        return out;
    }

private:
    std::pair<unsigned, long long> normalize(long long i) const {
        long long nn = static_cast<long long>(n_);
        long long q = 0;
        while (i < 1) { i += nn; --q; }
        while (i > nn) { i -= nn; ++q; }
        return {static_cast<unsigned>(i), q};
    }

    /// q(T_1) of the convention: p(zeta^{-1} T_1) or -p(T_1).
    PolyUT q_poly() const {
        PolyUT out(ell_, n_);
        auto c = p_coeffs(ell_);
        for (unsigned s = 1; s < ell_; ++s) {
            std::vector<unsigned> te(n_, 0);
            te[0] = s;
            CycScalar coeff = conv_.p_twisted
                                  ? CycScalar::zeta_pow(ell_, -static_cast<long long>(s)) * c[s - 1]
                                  : -c[s - 1];
            out.add(UTKey{std::vector<unsigned>(n_, 0), te}, coeff);
        }
        return out;
    }

    // U_i -> U_{i+1}, T_i -> T_{i+1}; U_{n+1} = U_1 + u_shift*hbar,
    // T_{n+1} = zeta^{-u_shift} T_1.
    PolyUT substitute_up(const PolyUT& f) const {
        PolyUT out(ell_, n_);
        CycScalar hb = Rat(conv_.u_shift) * CycScalar::hbar(ell_);
        for (const auto& [k, c] : f.terms()) {
            PolyUT term(ell_, n_);
            std::vector<unsigned> ue(n_, 0), te(n_, 0);
            for (unsigned i = 1; i < n_; ++i) {
                ue[i] = k.uexp[i - 1];
                te[i] = k.texp[i - 1];
            }
            te[0] = k.texp[n_ - 1];
            CycScalar coeff =
                c * CycScalar::zeta_pow(ell_, -static_cast<long long>(conv_.u_shift) *
                                                  static_cast<long long>(k.texp[n_ - 1]));
            term.add(UTKey{ue, te}, coeff);
            // multiply by (U_1 + u_shift*hbar)^{uexp_n}
            PolyUT shifted_u = PolyUT::u_var(ell_, n_, 1) + hb * PolyUT::one(ell_, n_);
            for (unsigned r = 0; r < k.uexp[n_ - 1]; ++r) term = shifted_u * term;
            out = out + term;
        }
        return out;
    }

    // U_i -> U_{i-1}, T_i -> T_{i-1}; U_0 = U_n - u_shift*hbar,
    // T_0 = zeta^{u_shift} T_n.
    PolyUT substitute_down(const PolyUT& f) const {
        PolyUT out(ell_, n_);
        CycScalar hb = Rat(conv_.u_shift) * CycScalar::hbar(ell_);
        for (const auto& [k, c] : f.terms()) {
            PolyUT term(ell_, n_);
            std::vector<unsigned> ue(n_, 0), te(n_, 0);
            for (unsigned i = 1; i < n_; ++i) {
                ue[i - 1] = k.uexp[i];
                te[i - 1] = k.texp[i];
            }
            te[n_ - 1] = k.texp[0];
            CycScalar coeff =
                c * CycScalar::zeta_pow(ell_, static_cast<long long>(conv_.u_shift) *
                                                  static_cast<long long>(k.texp[0]));
            term.add(UTKey{ue, te}, coeff);
            PolyUT shifted_u = PolyUT::u_var(ell_, n_, n_) - hb * PolyUT::one(ell_, n_);
            for (unsigned r = 0; r < k.uexp[0]; ++r) term = shifted_u * term;
            out = out + term;
        }
        return out;
    }

    unsigned ell_;
    unsigned n_;
    Convention conv_;
};

/// Projection onto the texp == 0 component.
inline PolyUT symmetrize_t(const PolyUT& f) {
    PolyUT out(f.ell(), f.n());
    std::vector<unsigned> zero(f.n(), 0);
    for (const auto& [k, c] : f.terms())
        if (k.texp == zero) out.add(k, c);
    return out;
}

inline std::string PolyUT::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const UTKey, CycScalar>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->first.uexp != b->first.uexp) return a->first.uexp > b->first.uexp;
        return a->first.texp < b->first.texp;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        CycScalar c = t->second;
        bool multi = c.terms().size() > 1;
        bool negate = false;
        if (!multi && !c.terms().empty()) {
            const CycElem& lead = c.terms().begin()->second;
            if (lead.is_rational() && lead.rational_part() < 0) {
                negate = true;
                c = -c;
            }
        }
        std::string cs = c.to_string();
        if (first) {
            if (negate) os << "-";
            first = false;
        } else {
            os << (negate ? " - " : " + ");
        }
        std::string mono;
        auto put = [&mono](const std::string& s) {
            if (!mono.empty()) mono += "*";
            mono += s;
        };
        for (unsigned i = 0; i < t->first.uexp.size(); ++i) {
            if (t->first.uexp[i] == 0) continue;
            std::string s = "U" + std::to_string(i + 1);
            if (t->first.uexp[i] > 1) s += "^" + std::to_string(t->first.uexp[i]);
            put(s);
        }
        for (unsigned i = 0; i < t->first.texp.size(); ++i) {
            if (t->first.texp[i] == 0) continue;
            std::string s = "T" + std::to_string(i + 1);
            if (t->first.texp[i] > 1) s += "^" + std::to_string(t->first.texp[i]);
            put(s);
        }
        if (mono.empty()) {
            os << (multi ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << mono;
        } else {
            os << (multi ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return os.str();
}

/// Applies hbar -> (-1)^{negate} hbar and the cyclic h-relabeling
/// h_r -> h_{r+shift} to every term.
inline CycScalar map_params(const CycScalar& x, bool negate_hbar, long long h_shift) {
    unsigned ell = x.ell();
    CycScalar out(ell);
    for (const auto& [e, c] : x.terms()) {
        ExpVec ne = exp_zero(ell);
        ne[0] = e[0];
        ne[1] = e[1];
        for (unsigned r = 0; r < ell; ++r) {
            long long dst = ((static_cast<long long>(r) + h_shift) % ell + ell) % ell;
            ne[2 + static_cast<unsigned>(dst)] += e[2 + r];
        }
        CycElem coeff = c;
        if (negate_hbar && (e[0] % 2 == 1)) coeff = -coeff;
        out.add_term(std::move(ne), std::move(coeff));
    }
    return out;
}

struct Push1Report {
    bool vieta_ok = false;      // product of the stated linear factors matches
                                // the elementary-symmetric expansion
    bool operator_ok = false;   // sigma^l on the torsion-invariant vector
    bool bridge_ok = false;     // parameter substitution links both products
    bool ok() const { return vieta_ok && operator_ok && bridge_ok; }
};

/// Checks the degree-l identity satisfied by the shift element at n = 1.
/// Route 1 is the scalar identity
///   prod_m (X - m hbar + p(zeta^{-m})) = X^l + sum_i e_i(s~) X^{l-i}
/// with s~_m = p(zeta^{-m}) - m hbar and e_i computed by subset sums.
/// Route 2 applies sigma^l to the torsion-invariant vector and extracts the
/// T^0 component, giving prod_m (U_1 + m hbar + p(zeta^{-m-1})) in this
/// library's conventions. Route 3 checks that the two products agree under
/// hbar -> -hbar together with the relabeling h_r -> h_{r-1}.
inline Push1Report push1_check(unsigned ell, Convention conv = Convention::selected()) {
    Push1Report rep;
    const unsigned n = 1;

    // univariate polynomials over CycScalar, ascending in X
    using XPoly = std::vector<CycScalar>;
    auto mul_linear = [&](XPoly& poly, const CycScalar& c0) {
        // poly *= (X + c0)
        XPoly next(poly.size() + 1, CycScalar(ell));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] + c0 * poly[i];
        }
        poly = std::move(next);
    };

    // route 1: Vieta
    std::vector<CycScalar> stilde;
    for (unsigned m = 0; m < ell; ++m) {
        CycScalar v = p_at_zeta_pow(ell, -static_cast<long long>(m)) -
                      Rat(m) * CycScalar::hbar(ell);
        stilde.push_back(v);
    }
    XPoly lhs1{CycScalar::one(ell)};
    for (unsigned m = 0; m < ell; ++m) mul_linear(lhs1, stilde[m]);
    XPoly rhs1(ell + 1, CycScalar(ell));
    rhs1[ell] = CycScalar::one(ell);
    for (unsigned i = 1; i <= ell; ++i) {
        // e_i by explicit subset sums
        CycScalar ei(ell);
        std::vector<unsigned> idx(i);
        std::function<void(unsigned, unsigned, CycScalar)> rec =
            [&](unsigned pos, unsigned start, CycScalar acc) {
                if (pos == i) {
                    ei = ei + acc;
                    return;
                }
                for (unsigned m = start; m < ell; ++m)
                    rec(pos + 1, m + 1, acc * stilde[m]);
            };
        rec(0, 0, CycScalar::one(ell));
        rhs1[ell - i] = ei;
    }
    rep.vieta_ok = (lhs1 == rhs1);

    // route 2: operator computation
    PolyRep R(ell, n, conv);
    PolyUT v = PolyUT::t_invariant(ell, n);
    PolyUT image = v;
    for (unsigned i = 0; i < ell; ++i) image = R.act(AGen::sigma(), image);
    PolyUT got = symmetrize_t(image);
    XPoly prod2{CycScalar::one(ell)};
    for (unsigned m = 0; m < ell; ++m) {
        CycScalar c0 = Rat(m) * CycScalar::hbar(ell) +
                       p_at_zeta_pow(ell, -static_cast<long long>(m) - 1);
        mul_linear(prod2, c0);
    }
    PolyUT expect(ell, n);
    for (size_t d = 0; d < prod2.size(); ++d) {
        if (prod2[d].is_zero()) continue;
        expect.add(UTKey{std::vector<unsigned>(1, static_cast<unsigned>(d)),
                         std::vector<unsigned>(1, 0)},
                   prod2[d]);
    }
    rep.operator_ok = (got == expect);

    // route 3: bridge between the two products
    bool bridge = lhs1.size() == prod2.size();
    if (bridge) {
        for (size_t d = 0; d < lhs1.size(); ++d)
            if (!(map_params(lhs1[d], true, -1) == prod2[d])) bridge = false;
    }
    rep.bridge_ok = bridge;
    return rep;
}

} // namespace cherednik

#endif
