#ifndef CHEREDNIK_CHECKS_HPP
#define CHEREDNIK_CHECKS_HPP

#include "cherednik/parse.hpp"

#include <random>

namespace cherednik {

struct SuiteResult {
    std::string name;
    bool ok = true;
    unsigned checked = 0;
    unsigned failed = 0;
    std::vector<std::string> failures;

    void record(const std::string& what, bool pass) {
        ++checked;
        if (!pass) {
            ++failed;
            ok = false;
            if (failures.size() < 24) failures.push_back(what);
        }
    }
};

/// All monomials U^a T^b with |a| <= maxdeg and arbitrary torsion pattern.
inline std::vector<PolyUT> ut_basis(unsigned ell, unsigned n, unsigned maxdeg) {
    std::vector<PolyUT> out;
    std::vector<unsigned> ue(n, 0), te(n, 0);
    std::function<void(unsigned, unsigned)> rec_u = [&](unsigned i, unsigned left) {
        if (i == n) {
            std::function<void(unsigned)> rec_t = [&](unsigned j) {
                if (j == n) {
                    out.push_back(PolyUT::monomial(ell, n, ue, te, CycScalar::one(ell)));
                    return;
                }
                for (unsigned z = 0; z < ell; ++z) {
                    te[j] = z;
                    rec_t(j + 1);
                }
                te[j] = 0;
            };
            rec_t(0);
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            ue[i] = d;
            rec_u(i + 1, left - d);
        }
        ue[i] = 0;
    };
    rec_u(0, maxdeg);
    return out;
}

/// Relation residuals in H for one (l, n).
inline SuiteResult suite_relations(unsigned ell, unsigned n,
                                   Convention conv = Convention::selected(),
                                   const ParamAssignment* asg = nullptr) {
    SuiteResult s;
    s.name = "relations(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    auto rep = check_all(ell, n, conv, asg);
    for (const auto& r : rep.results)
        s.record(r.family + " " + r.instance, r.ok);
    return s;
}

/// Both sides of every relation act identically on all monomials of
/// U-degree <= maxdeg.
inline SuiteResult suite_operators(unsigned ell, unsigned n, unsigned maxdeg = 3,
                                   Convention conv = Convention::selected()) {
    SuiteResult s;
    s.name = "operators(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    PolyRep R(ell, n, conv);
    auto mons = ut_basis(ell, n, maxdeg);
    for (RelationId id : all_relation_ids()) {
        for (const auto& ri : relation_instances(ell, n, id, conv)) {
            bool ok = true;
            for (const auto& f : mons)
                if (!(R.act_word(ri.lhs, f) == R.act_word(ri.rhs, f))) {
                    ok = false;
                    break;
                }
            s.record(ri.family + " " + ri.instance, ok);
        }
    }
    return s;
}

/// x_image/y_image return the PBW generators; both u_i forms agree; the
/// sigma/tau images do not depend on the strand index used to write them.
inline SuiteResult suite_roundtrip(unsigned ell, unsigned n,
                                   Convention conv = Convention::selected()) {
    SuiteResult s;
    s.name = "roundtrip(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    APresentation ap(ell, n, conv);
    const auto& A = HAlgebra::get(ell, n);
    for (unsigned i = 1; i <= n; ++i) {
        s.record("x_image " + std::to_string(i), ap.x_image(i) == A.x_gen(i));
        s.record("y_image " + std::to_string(i), ap.y_image(i) == A.y_gen(i));
        s.record("u forms " + std::to_string(i), ap.u_h(i) == ap.u_h_alt(i));
        s.record("sigma form " + std::to_string(i), ap.sigma_h(i) == ap.sigma_h(1));
        s.record("tau form " + std::to_string(i), ap.tau_h(i) == ap.tau_h(1));
    }
    return s;
}

/// The commutators of the images reproduce the displayed group-algebra
/// formulas, with the diagonal h-part recomputed through the parameter
/// polynomial as an independent route.
inline SuiteResult suite_proof_formulas(unsigned ell, unsigned n,
                                        Convention conv = Convention::selected()) {
    SuiteResult s;
    s.name = "proof-formulas(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    APresentation ap(ell, n, conv);
    const auto& A = HAlgebra::get(ell, n);
    CycScalar k = CycScalar::kparam(ell);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = 1; j <= n; ++j) {
            HElem got = A.commutator(ap.x_image(i), ap.y_image(j));
            HElem want(ell, n);
            if (i == j) {
                // hbar - k sum_{j'!=i} sum_p t_i^p t_j'^{-p}(i j')
                //      - [p(t_i) - p(zeta^{-1} t_i)]
                want = A.scalar(CycScalar::hbar(ell));
                for (unsigned jj = 1; jj <= n; ++jj)
                    if (jj != i)
                        want = want - A.group_alg(k * refl_sum(ell, n, i, jj, false));
                GroupAlgElem hpart = p_of_t(ell, n, i, 0) - p_of_t(ell, n, i, -1);
                want = want - A.group_alg(hpart);
            } else {
                want = A.group_alg(k * refl_sum(ell, n, j, i, true));
            }
            s.record("[x" + std::to_string(i) + ",y" + std::to_string(j) + "]", got == want);
        }
    }
    return s;
}

/// eu = u_1 + .. + u_n + n/2 grades the two alphabets by opposite signs of
/// hbar and commutes with the group. The orientation is selected by the
/// engine; with this library's conventions it is [eu, x_i] = -hbar x_i.
struct EulerReport {
    SuiteResult suite;
    int x_sign = 0;  // [eu, x_i] = x_sign * hbar * x_i
};

inline EulerReport suite_euler(unsigned ell, unsigned n,
                               Convention conv = Convention::selected()) {
    EulerReport rep;
    rep.suite.name = "euler(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    APresentation ap(ell, n, conv);
    const auto& A = HAlgebra::get(ell, n);
    HElem eu = ap.euler();
    CycScalar hb = CycScalar::hbar(ell);
    // select the unique orientation on x_1
    HElem c1 = A.commutator(eu, A.x_gen(1));
    if ((c1 - hb * A.x_gen(1)).is_zero()) rep.x_sign = +1;
    else if ((c1 + hb * A.x_gen(1)).is_zero()) rep.x_sign = -1;
    rep.suite.record("orientation determined", rep.x_sign != 0);
    if (rep.x_sign == 0) return rep;
    CycScalar sx = Rat(rep.x_sign) * hb;
    for (unsigned i = 1; i <= n; ++i) {
        rep.suite.record("[eu,x" + std::to_string(i) + "]",
                         (A.commutator(eu, A.x_gen(i)) - sx * A.x_gen(i)).is_zero());
        rep.suite.record("[eu,y" + std::to_string(i) + "]",
                         (A.commutator(eu, A.y_gen(i)) + sx * A.y_gen(i)).is_zero());
    }
    for (unsigned j = 1; j + 1 <= n; ++j)
        rep.suite.record("[eu,s" + std::to_string(j) + "]",
                         A.commutator(eu, A.group(GroupElem::transposition(ell, n, j)))
                             .is_zero());
    for (unsigned i = 1; i <= n; ++i)
        rep.suite.record("[eu,t" + std::to_string(i) + "]",
                         A.commutator(eu, A.group(GroupElem::torsion(ell, n, i))).is_zero());
    return rep;
}

/// Random words evaluated along both routes: directly on the polynomial
/// representation, and through the PBW image re-expressed in generator
/// words.
inline SuiteResult suite_cross_oracle(unsigned ell, unsigned n, unsigned trials,
                                      unsigned max_len, std::uint32_t seed,
                                      Convention conv = Convention::selected()) {
    SuiteResult s;
    s.name = "cross-oracle(" + std::to_string(ell) + "," + std::to_string(n) + ")";
    PolyRep R(ell, n, conv);
    APresentation ap(ell, n, conv);
    std::mt19937 rng(seed);
    auto rand_gen = [&]() -> AGen {
        unsigned c = rng() % (n >= 2 ? 5u : 4u);
        switch (c) {
            case 0: return AGen::sigma();
            case 1: return AGen::tau();
            case 2: return AGen::u(1 + static_cast<long long>(rng() % n));
            case 3: return AGen::t(1 + static_cast<long long>(rng() % n));
            default: return AGen::transp(1 + static_cast<long long>(rng() % (n - 1)));
        }
    };
    for (unsigned trial = 0; trial < trials; ++trial) {
        AWord::Word gens;
        unsigned len = 1 + rng() % max_len;
        for (unsigned i = 0; i < len; ++i) gens.push_back(rand_gen());
        AWord w = AWord::word(ell, gens);
        std::vector<unsigned> ue(n, 0), te(n, 0);
        for (unsigned i = 0; i < n; ++i) {
            ue[i] = rng() % 3;
            te[i] = rng() % ell;
        }
        PolyUT f = PolyUT::monomial(ell, n, ue, te, CycScalar::one(ell));
        bool ok = R.act_word(w, f) == R.act_h(ap.to_h(w), f);
        s.record("trial " + std::to_string(trial), ok);
    }
    return s;
}

/// Scans all convention switches; exactly one should pass the full relation
/// suite once l >= 3 separates the two q-variants (they coincide for l <= 2).
struct ConventionScan {
    std::vector<Convention> winners;
    bool unique() const { return winners.size() == 1; }
};

inline ConventionScan scan_conventions(unsigned ell, unsigned n) {
    ConventionScan out;
    for (int th : {+1, -1})
        for (int us : {+1, -1})
            for (int tw : {1, 0}) {
                Convention c{th, us, tw == 1};
                if (check_all(ell, n, c).ok()) out.winners.push_back(c);
            }
    return out;
}

} // namespace cherednik

#endif
