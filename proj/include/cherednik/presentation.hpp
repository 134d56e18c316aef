#ifndef CHEREDNIK_PRESENTATION_HPP
#define CHEREDNIK_PRESENTATION_HPP

#include "cherednik/pbw.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace cherednik {

/// Generator of the shifted presentation. U/T indices may be any integer;
/// evaluation normalizes them through the shift rules.
struct AGen {
    enum class Kind { Sigma, Tau, U, T, Transp, Scalar };
    Kind kind;
    long long index = 0;       // for U, T (any integer); Transp (1..n-1)
    CycScalar value;           // for Scalar

    static AGen sigma() { return {Kind::Sigma, 0, {}}; }
    static AGen tau() { return {Kind::Tau, 0, {}}; }
    static AGen u(long long i) { return {Kind::U, i, {}}; }
    static AGen t(long long i) { return {Kind::T, i, {}}; }
    static AGen transp(long long j) { return {Kind::Transp, j, {}}; }
    static AGen scalar(CycScalar c) { return {Kind::Scalar, 0, std::move(c)}; }
};

/// Formal CycScalar-linear combination of words in the generators.
class AWord {
public:
    using Word = std::vector<AGen>;

    AWord() = default;
    explicit AWord(unsigned ell) : ell_(ell) {}

    static AWord empty_word(unsigned ell) {
        AWord w(ell);
        w.terms_.push_back({CycScalar::one(ell), {}});
        return w;
    }
    static AWord gen(unsigned ell, AGen g) {
        AWord w(ell);
        w.terms_.push_back({CycScalar::one(ell), {std::move(g)}});
        return w;
    }
    static AWord word(unsigned ell, Word gens) {
        AWord w(ell);
        w.terms_.push_back({CycScalar::one(ell), std::move(gens)});
        return w;
    }
    static AWord scalar(unsigned ell, CycScalar c) {
        AWord w(ell);
        w.terms_.push_back({std::move(c), {}});
        return w;
    }

    unsigned ell() const { return ell_; }
    const std::vector<std::pair<CycScalar, Word>>& terms() const { return terms_; }

    friend AWord operator+(const AWord& a, const AWord& b) {
        AWord r = a;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        return r;
    }
    friend AWord operator-(const AWord& a, const AWord& b) {
        AWord r = a;
        for (const auto& [c, w] : b.terms_) r.terms_.push_back({-c, w});
        return r;
    }
    friend AWord operator*(const AWord& a, const AWord& b) {
        AWord r(a.ell_);
        for (const auto& [ca, wa] : a.terms_) {
            for (const auto& [cb, wb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.terms_.push_back({ca * cb, std::move(w)});
            }
        }
        return r;
    }
    friend AWord operator*(const CycScalar& c, const AWord& a) {
        AWord r(a.ell_);
        for (const auto& [ca, wa] : a.terms_) r.terms_.push_back({c * ca, wa});
        return r;
    }
    AWord pow(unsigned e) const {
        AWord r = empty_word(ell_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    unsigned ell_ = 1;
    std::vector<std::pair<CycScalar, Word>> terms_;
};

/// The sign/orientation switches left open by the inconsistently printed
/// constants of the presentation. Writing q for the p-term paired with u_1
/// in the sigma-tau relation, the coherent readings are
///   q(t) = p(zeta^{-1} t)   (p_twisted = true), partner qq(t) = p(t), or
///   q(t) = -p(t)            (p_twisted = false), partner qq(t) = -p(zeta^{-1} t),
/// and then
///   u_i        = x_i y_i - q(t_i) + k sum_{j<i} ..
///   sigma tau  = u_1 + q(t_1)
///   tau sigma  = u_n + tau_hbar*hbar + qq(t_n).
/// Exactly one assignment makes every relation close up in H; the selection
/// is exercised by the test suite.
struct Convention {
    int tau_hbar = -1;     // constant in the tau-sigma relation
    int u_shift = +1;      // u_{i+n} = u_i + u_shift*hbar ; t_{i+n} = zeta^{-u_shift} t_i
    bool p_twisted = true; // which coherent q-variant (see above)

    static Convention selected() { return Convention{}; }

    friend bool operator==(const Convention& a, const Convention& b) {
        return a.tau_hbar == b.tau_hbar && a.u_shift == b.u_shift && a.p_twisted == b.p_twisted;
    }
    std::string to_string() const {
        std::ostringstream os;
        os << "tau_hbar=" << (tau_hbar > 0 ? "+1" : "-1")
           << " u_shift=" << (u_shift > 0 ? "+1" : "-1")
           << " q=" << (p_twisted ? "p(zeta^-1 t)" : "-p(t)");
        return os.str();
    }
};

/// Evaluation of the shifted presentation inside H via the isomorphism:
/// sigma -> x_1 (1..n), tau -> (n..1) y_1,
/// u_i -> x_i y_i + p(t_i) + k sum_{j<i} sum_p t_j^p t_i^{-p} (ij).
class APresentation {
public:
    APresentation(unsigned ell, unsigned n, Convention conv = Convention::selected())
        : alg_(&HAlgebra::get(ell, n)), conv_(conv) {}

    unsigned ell() const { return alg_->ell(); }
    unsigned n() const { return alg_->n(); }
    const HAlgebra& algebra() const { return *alg_; }
    const Convention& convention() const { return conv_; }

    /// sigma = chi_i^{-1} x_i upsilon_i ; all i give the same element.
    HElem sigma_h(unsigned i = 1) const {
        auto chi = GroupElem::chi(ell(), n(), i);
        auto ups = GroupElem::upsilon(ell(), n(), i);
        return alg_->mul(alg_->mul(alg_->group(chi.inverse()), alg_->x_gen(i)),
                         alg_->group(ups));
    }

    /// tau = upsilon_i^{-1} y_i chi_i.
    HElem tau_h(unsigned i = 1) const {
        auto chi = GroupElem::chi(ell(), n(), i);
        auto ups = GroupElem::upsilon(ell(), n(), i);
        return alg_->mul(alg_->mul(alg_->group(ups.inverse()), alg_->y_gen(i)),
                         alg_->group(chi));
    }

    /// The p-term paired with u_i (see Convention): q(t_i) as a group-algebra
    /// element, and its tau-side partner qq(t_i).
    GroupAlgElem q_of_t(unsigned i) const {
        GroupAlgElem p0 = p_of_t(ell(), n(), i, conv_.p_twisted ? -1 : 0);
        if (!conv_.p_twisted) {
            GroupAlgElem zero(ell(), n());
            return zero - p0;
        }
        return p0;
    }
    GroupAlgElem qq_of_t(unsigned i) const {
        GroupAlgElem p0 = p_of_t(ell(), n(), i, conv_.p_twisted ? 0 : -1);
        if (!conv_.p_twisted) {
            GroupAlgElem zero(ell(), n());
            return zero - p0;
        }
        return p0;
    }

    /// u_i in the x_i y_i form: x_i y_i - q(t_i) + k sum_{j<i} sum_p t_j^p t_i^{-p} (ij).
    HElem u_h(unsigned i) const {
        if (i < 1 || i > n()) throw std::invalid_argument("u index out of range");
        HElem r = alg_->mul(alg_->x_gen(i), alg_->y_gen(i));
        r = r - alg_->group_alg(q_of_t(i));
        CycScalar k = CycScalar::kparam(ell());
        for (unsigned j = 1; j < i; ++j)
            r = r + alg_->group_alg(k * refl_sum(ell(), n(), j, i, false));
        return r;
    }

    /// The companion y_i x_i form: y_i x_i - qq(t_i) - k sum_{j>i} .. + hbar.
    /// Equal to u_h(i) whenever the commutator table is the intended one.
    HElem u_h_alt(unsigned i) const {
        if (i < 1 || i > n()) throw std::invalid_argument("u index out of range");
        HElem r = alg_->mul(alg_->y_gen(i), alg_->x_gen(i));
        r = r - alg_->group_alg(qq_of_t(i));
        CycScalar k = CycScalar::kparam(ell());
        for (unsigned j = i + 1; j <= n(); ++j)
            r = r - alg_->group_alg(k * refl_sum(ell(), n(), j, i, false));
        r = r + alg_->scalar(CycScalar::hbar(ell()));
        return r;
    }

    /// x_i = chi_i sigma upsilon_i^{-1}, evaluated through to_h.
    HElem x_image(unsigned i) const {
        auto chi = GroupElem::chi(ell(), n(), i);
        auto ups = GroupElem::upsilon(ell(), n(), i);
        return alg_->mul(alg_->mul(alg_->group(chi), sigma_h()), alg_->group(ups.inverse()));
    }

    /// y_i = upsilon_i tau chi_i^{-1}.
    HElem y_image(unsigned i) const {
        auto chi = GroupElem::chi(ell(), n(), i);
        auto ups = GroupElem::upsilon(ell(), n(), i);
        return alg_->mul(alg_->mul(alg_->group(ups), tau_h()), alg_->group(chi.inverse()));
    }

    /// Normalizes an out-of-range index through u_{i+n} = u_i + s*hbar,
    /// returning (index in [1,n], shift multiple q with u_i = u_{i0} + q*s*hbar).
    std::pair<unsigned, long long> normalize_index(long long i) const {
        long long nn = static_cast<long long>(n());
        long long q = 0;
        while (i < 1) { i += nn; --q; }
        while (i > nn) { i -= nn; ++q; }
        return {static_cast<unsigned>(i), q};
    }

    HElem to_h(const AGen& g) const {
        switch (g.kind) {
            case AGen::Kind::Sigma: return sigma_h();
            case AGen::Kind::Tau: return tau_h();
            case AGen::Kind::U: {
                auto [i0, q] = normalize_index(g.index);
                CycScalar shift = Rat(q * conv_.u_shift) * CycScalar::hbar(ell());
                return u_h(i0) + alg_->scalar(shift);
            }
            case AGen::Kind::T: {
                auto [i0, q] = normalize_index(g.index);
                // t_{i+n} = zeta^{-u_shift} t_i
                long long tw = -q * conv_.u_shift;
                return CycScalar::zeta_pow(ell(), tw) *
                       alg_->group(GroupElem::torsion(ell(), n(), i0));
            }
            case AGen::Kind::Transp: {
                if (g.index < 1 || g.index >= static_cast<long long>(n()))
                    throw std::invalid_argument("transposition index out of range");
                return alg_->group(GroupElem::transposition(ell(), n(),
                                                            static_cast<unsigned>(g.index)));
            }
            case AGen::Kind::Scalar: return alg_->scalar(g.value);
        }
        throw std::logic_error("unreachable");
    }

    HElem to_h(const AWord& w) const {
        HElem r = alg_->zero();
        for (const auto& [c, gens] : w.terms()) {
            HElem t = alg_->scalar(c);
            for (const auto& g : gens) t = alg_->mul(t, to_h(g));
            r = r + t;
        }
        return r;
    }

    /// eu = u_1 + .. + u_n + n/2.
    HElem euler() const {
        HElem r = alg_->scalar(CycScalar::from_rat(ell(), Rat(n(), 2)));
        for (unsigned i = 1; i <= n(); ++i) r = r + u_h(i);
        return r;
    }

private:
    const HAlgebra* alg_;
    Convention conv_;
};

/// One relation instance: a named pair of words whose images must agree.
struct RelationInstance {
    std::string family;
    std::string instance;
    AWord lhs;
    AWord rhs;
};

/// Identifiers for the relation families of the presentation.
enum class RelationId {
    DunklOpdamHecke,  // u_i (j,j+1) = (j,j+1) u_{s_j(i)} - k a_j(e_i) sum_p t_j^p t_{j+1}^{-p}
    SigmaIsotopy,     // sigma (j,j-1) = (j+1,j) sigma
    TauIsotopy,       // tau (j,j+1) = (j-1,j) tau
    SigmaTau,         // sigma tau = u_1 + rel_p * p(t_1)
    TauSigma,         // tau sigma = u_n + tau_hbar*hbar + rel_p * p(zeta^{-1} t_n)
    UCommute,         // u_i u_j = u_j u_i
    USigma,           // u_i sigma = sigma u_{i-1}
    UTau,             // u_i tau = tau u_{i+1}
    TSigma,           // t_i sigma = sigma t_{i-1}
    TTau,             // t_i tau = tau t_{i+1}
    Seam,             // tau (1,2) sigma = sigma (n-1,n) tau - k sum_p zeta^p t_n^p t_1^{-p}
    UTorsion,         // u_i t_j = t_j u_i
    GammaRelations    // defining relations of G(l,1,n)
};

inline const std::vector<RelationId>& all_relation_ids() {
    static const std::vector<RelationId> ids = {
        RelationId::DunklOpdamHecke, RelationId::SigmaIsotopy, RelationId::TauIsotopy,
        RelationId::SigmaTau,        RelationId::TauSigma,     RelationId::UCommute,
        RelationId::USigma,          RelationId::UTau,         RelationId::TSigma,
        RelationId::TTau,            RelationId::Seam,         RelationId::UTorsion,
        RelationId::GammaRelations};
    return ids;
}

inline std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::DunklOpdamHecke: return "u-transposition";
        case RelationId::SigmaIsotopy: return "sigma-isotopy";
        case RelationId::TauIsotopy: return "tau-isotopy";
        case RelationId::SigmaTau: return "sigma-tau";
        case RelationId::TauSigma: return "tau-sigma";
        case RelationId::UCommute: return "u-commute";
        case RelationId::USigma: return "u-sigma";
        case RelationId::UTau: return "u-tau";
        case RelationId::TSigma: return "t-sigma";
        case RelationId::TTau: return "t-tau";
        case RelationId::Seam: return "seam";
        case RelationId::UTorsion: return "u-torsion";
        case RelationId::GammaRelations: return "gamma";
    }
    return "?";
}

namespace detail {

inline AWord theta_word(unsigned ell, long long i, long long j, bool weighted) {
    // sum_p [zeta^p] t_i^p t_j^{-p}
    AWord out(ell);
    AWord zero = AWord::scalar(ell, CycScalar(ell));
    out = zero;
    for (unsigned p = 0; p < ell; ++p) {
        AWord::Word w;
        for (unsigned q = 0; q < p; ++q) w.push_back(AGen::t(i));
        for (unsigned q = 0; q < (ell - p) % ell; ++q) w.push_back(AGen::t(j));
        AWord term = AWord::word(ell, std::move(w));
        if (weighted) term = CycScalar::zeta_pow(ell, p) * term;
        out = out + term;
    }
    return out;
}

inline AWord p_word(unsigned ell, long long i, long long twist, int sign) {
    // sign * p(zeta^twist t_i) = sign * sum_s c_s zeta^{twist s} t_i^s
    AWord out = AWord::scalar(ell, CycScalar(ell));
    auto c = p_coeffs(ell);
    for (unsigned s = 1; s < ell; ++s) {
        AWord::Word w(s, AGen::t(i));
        CycScalar coeff = CycScalar::zeta_pow(ell, twist * s) * c[s - 1];
        if (sign < 0) coeff = -coeff;
        out = out + coeff * AWord::word(ell, std::move(w));
    }
    return out;
}

} // namespace detail

/// Enumerates every instance of the given relation family at (l, n), under
/// the convention switches. Out-of-range U/T indices in a window around
/// [1, n] exercise the shift normalization.
inline std::vector<RelationInstance> relation_instances(unsigned ell, unsigned n,
                                                        RelationId id,
                                                        const Convention& conv) {
    std::vector<RelationInstance> out;
    auto G = [&](AGen g) { return AWord::gen(ell, std::move(g)); };
    auto name = relation_name(id);
    auto inst = [&](std::string d, AWord l, AWord r) {
        out.push_back({name, std::move(d), std::move(l), std::move(r)});
    };
    long long nn = n;
    const long long lo = 0, hi = nn + 1;  // index window for i in Z

    switch (id) {
        case RelationId::DunklOpdamHecke: {
            for (long long j = 1; j + 1 <= nn; ++j) {
                for (long long i = 1; i <= nn; ++i) {
                    long long si = i == j ? j + 1 : i == j + 1 ? j : i;
                    int av = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
                    AWord lhs = G(AGen::u(i)) * G(AGen::transp(j));
                    AWord rhs = G(AGen::transp(j)) * G(AGen::u(si));
                    if (av != 0) {
                        AWord corr = CycScalar::kparam(ell) *
                                     detail::theta_word(ell, j, j + 1, false);
                        if (av > 0) rhs = rhs - corr;
                        else rhs = rhs + corr;
                    }
                    inst("i=" + std::to_string(i) + ",j=" + std::to_string(j), lhs, rhs);
                }
            }
            break;
        }
        case RelationId::SigmaIsotopy: {
            for (long long j = 2; j <= nn - 1; ++j) {
                AWord lhs = G(AGen::sigma()) * G(AGen::transp(j - 1));
                AWord rhs = G(AGen::transp(j)) * G(AGen::sigma());
                inst("j=" + std::to_string(j), lhs, rhs);
            }
            break;
        }
        case RelationId::TauIsotopy: {
            for (long long j = 2; j <= nn - 1; ++j) {
                AWord lhs = G(AGen::tau()) * G(AGen::transp(j));
                AWord rhs = G(AGen::transp(j - 1)) * G(AGen::tau());
                inst("j=" + std::to_string(j), lhs, rhs);
            }
            break;
        }
        case RelationId::SigmaTau: {
            AWord lhs = G(AGen::sigma()) * G(AGen::tau());
            AWord rhs = G(AGen::u(1)) + (conv.p_twisted ? detail::p_word(ell, 1, -1, +1)
                                                        : detail::p_word(ell, 1, 0, -1));
            inst("", lhs, rhs);
            break;
        }
        case RelationId::TauSigma: {
            AWord lhs = G(AGen::tau()) * G(AGen::sigma());
            AWord rhs = G(AGen::u(nn)) +
                        AWord::scalar(ell, Rat(conv.tau_hbar) * CycScalar::hbar(ell)) +
                        (conv.p_twisted ? detail::p_word(ell, nn, 0, +1)
                                        : detail::p_word(ell, nn, -1, -1));
            inst("", lhs, rhs);
            break;
        }
        case RelationId::UCommute: {
            for (long long i = lo; i <= hi; ++i)
                for (long long j = i + 1; j <= hi; ++j)
                    inst("i=" + std::to_string(i) + ",j=" + std::to_string(j),
                         G(AGen::u(i)) * G(AGen::u(j)), G(AGen::u(j)) * G(AGen::u(i)));
            break;
        }
        case RelationId::USigma: {
            for (long long i = lo; i <= hi; ++i)
                inst("i=" + std::to_string(i),
                     G(AGen::u(i)) * G(AGen::sigma()), G(AGen::sigma()) * G(AGen::u(i - 1)));
            break;
        }
        case RelationId::UTau: {
            for (long long i = lo; i <= hi; ++i)
                inst("i=" + std::to_string(i),
                     G(AGen::u(i)) * G(AGen::tau()), G(AGen::tau()) * G(AGen::u(i + 1)));
            break;
        }
        case RelationId::TSigma: {
            for (long long i = lo; i <= hi; ++i)
                inst("i=" + std::to_string(i),
                     G(AGen::t(i)) * G(AGen::sigma()), G(AGen::sigma()) * G(AGen::t(i - 1)));
            break;
        }
        case RelationId::TTau: {
            for (long long i = lo; i <= hi; ++i)
                inst("i=" + std::to_string(i),
                     G(AGen::t(i)) * G(AGen::tau()), G(AGen::tau()) * G(AGen::t(i + 1)));
            break;
        }
        case RelationId::Seam: {
            if (n >= 2) {
                AWord lhs = G(AGen::tau()) * G(AGen::transp(1)) * G(AGen::sigma());
                AWord rhs = G(AGen::sigma()) * G(AGen::transp(nn - 1)) * G(AGen::tau()) -
                            CycScalar::kparam(ell) * detail::theta_word(ell, nn, 1, true);
                inst("", lhs, rhs);
            }
            break;
        }
        case RelationId::UTorsion: {
            for (long long i = 1; i <= nn; ++i)
                for (long long j = 1; j <= nn; ++j)
                    inst("i=" + std::to_string(i) + ",j=" + std::to_string(j),
                         G(AGen::u(i)) * G(AGen::t(j)), G(AGen::t(j)) * G(AGen::u(i)));
            break;
        }
        case RelationId::GammaRelations: {
            for (long long j = 1; j + 1 <= nn; ++j)
                inst("s" + std::to_string(j) + "^2",
                     G(AGen::transp(j)) * G(AGen::transp(j)), AWord::empty_word(ell));
            for (long long j = 1; j + 2 <= nn; ++j)
                inst("braid j=" + std::to_string(j),
                     G(AGen::transp(j)) * G(AGen::transp(j + 1)) * G(AGen::transp(j)),
                     G(AGen::transp(j + 1)) * G(AGen::transp(j)) * G(AGen::transp(j + 1)));
            for (long long j = 1; j + 1 <= nn; ++j)
                for (long long m = j + 2; m + 1 <= nn; ++m)
                    inst("commute s" + std::to_string(j) + ",s" + std::to_string(m),
                         G(AGen::transp(j)) * G(AGen::transp(m)),
                         G(AGen::transp(m)) * G(AGen::transp(j)));
            for (long long i = 1; i <= nn; ++i) {
                AWord::Word w(ell, AGen::t(i));
                inst("t" + std::to_string(i) + "^l", AWord::word(ell, std::move(w)),
                     AWord::empty_word(ell));
            }
            for (long long i = 1; i <= nn; ++i)
                for (long long j = i + 1; j <= nn; ++j)
                    inst("t-commute " + std::to_string(i) + "," + std::to_string(j),
                         G(AGen::t(i)) * G(AGen::t(j)), G(AGen::t(j)) * G(AGen::t(i)));
            for (long long j = 1; j + 1 <= nn; ++j)
                for (long long i = 1; i <= nn; ++i) {
                    long long si = i == j ? j + 1 : i == j + 1 ? j : i;
                    inst("s" + std::to_string(j) + " t" + std::to_string(i),
                         G(AGen::transp(j)) * G(AGen::t(i)),
                         G(AGen::t(si)) * G(AGen::transp(j)));
                }
            break;
        }
    }
    return out;
}

struct RelationResult {
    std::string family;
    std::string instance;
    bool ok;
};

struct CheckReport {
    std::vector<RelationResult> results;
    unsigned checked = 0;
    unsigned failed = 0;
    bool ok() const { return failed == 0; }
};

/// Residual to_h(lhs) - to_h(rhs) of one relation instance.
inline HElem relation_residual(const APresentation& ap, const RelationInstance& r) {
    return ap.to_h(r.lhs) - ap.to_h(r.rhs);
}

/// Runs every instance of every relation family; optionally specializes the
/// residuals before the zero test.
inline CheckReport check_all(unsigned ell, unsigned n,
                             Convention conv = Convention::selected(),
                             const ParamAssignment* asg = nullptr) {
    APresentation ap(ell, n, conv);
    CheckReport rep;
    for (RelationId id : all_relation_ids()) {
        for (const auto& ri : relation_instances(ell, n, id, conv)) {
            HElem res = relation_residual(ap, ri);
            if (asg) res = specialize_h(res, *asg);
            bool ok = res.is_zero();
            rep.results.push_back({ri.family, ri.instance, ok});
            ++rep.checked;
            if (!ok) ++rep.failed;
        }
    }
    return rep;
}

} // namespace cherednik

#endif
