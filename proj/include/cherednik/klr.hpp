#ifndef CHEREDNIK_KLR_HPP
#define CHEREDNIK_KLR_HPP

#include "cherednik/rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace cherednik {

/// Ambient choice of the parameter k for the weight combinatorics: either a
/// rational a/e (then Upsilon(k) = k is forced) or transcendental (then
/// Upsilon(k) is a free choice, 0 by default).
struct KMode {
    bool rational = true;
    Rat value = Rat(1, 2);   // a/e in lowest terms, rational mode only
    Rat upsilon_k = Rat(0);  // used in transcendental mode

    static KMode make_rational(const Rat& v) { return KMode{true, v, v}; }
    static KMode make_transcendental(const Rat& up = Rat(0)) {
        return KMode{false, Rat(0), up};
    }

    /// Denominator e of k = a/e in lowest terms.
    BigInt e_of() const {
        if (!rational) throw std::domain_error("e is defined only for rational k");
        return rat_den(value);
    }
    Rat upsilon() const { return rational ? value : upsilon_k; }
};

/// Element of the desk-scale field Q + Q k, stored as q0 + q1*k.
struct ParamNumber {
    Rat q0 = Rat(0);
    Rat q1 = Rat(0);

    static ParamNumber of(Rat r) { return {std::move(r), Rat(0)}; }
    static ParamNumber k_times(Rat c) { return {Rat(0), std::move(c)}; }

    friend ParamNumber operator+(const ParamNumber& a, const ParamNumber& b) {
        return {a.q0 + b.q0, a.q1 + b.q1};
    }
    friend ParamNumber operator-(const ParamNumber& a, const ParamNumber& b) {
        return {a.q0 - b.q0, a.q1 - b.q1};
    }
    friend ParamNumber operator-(const ParamNumber& a) { return {-a.q0, -a.q1}; }
    friend ParamNumber operator*(const Rat& c, const ParamNumber& a) {
        return {c * a.q0, c * a.q1};
    }

    std::string to_string() const {
        std::ostringstream os;
        if (q1 == 0) {
            os << rat_to_string(q0);
        } else {
            if (q0 != 0) os << rat_to_string(q0) << (q1 > 0 ? "+" : "");
            os << rat_to_string(q1) << "k";
        }
        return os.str();
    }
};

/// Context for the weight combinatorics: l, the k-mode and the numerical
/// parameters s_0..s_{l-1} (hbar = 1 here).
struct KlrContext {
    unsigned ell = 1;
    KMode k;
    std::vector<Rat> s;  // size l

    void validate() const {
        if (ell == 0) throw std::invalid_argument("ell must be >= 1");
        if (s.size() != ell) throw std::invalid_argument("need exactly l values s_0..s_{l-1}");
        if (k.rational && k.upsilon() != k.value)
            throw std::invalid_argument("Upsilon(k) = k is forced for rational k");
    }

    bool equal(const ParamNumber& a, const ParamNumber& b) const {
        if (k.rational) return a.q0 + a.q1 * k.value == b.q0 + b.q1 * k.value;
        return a.q0 == b.q0 && a.q1 == b.q1;
    }
    Rat upsilon(const ParamNumber& a) const { return a.q0 + a.q1 * k.upsilon(); }

    ParamNumber k_ell() const { return ParamNumber::k_times(Rat(ell)); }

    /// p(zeta^i) as a number: s_i + i (indices mod l, hbar = 1).
    Rat p_at(unsigned i) const { return s[i % ell] + Rat(i % ell); }
};

/// Class of a ParamNumber in K/lZ: the rational part reduced into [0,l);
/// in rational k-mode the value collapses to a single rational first.
struct Residue {
    Rat r0;
    Rat r1;

    static Residue of(const KlrContext& ctx, const ParamNumber& a) {
        Rat l(ctx.ell);
        if (ctx.k.rational) {
            Rat v = a.q0 + a.q1 * ctx.k.value;
            return {rat_mod(v, l), Rat(0)};
        }
        return {rat_mod(a.q0, l), a.q1};
    }

    ParamNumber lift() const { return {r0, r1}; }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.r0 == b.r0 && a.r1 == b.r1;
    }
    friend bool operator<(const Residue& a, const Residue& b) {
        if (a.r0 != b.r0) return a.r0 < b.r0;
        return a.r1 < b.r1;
    }
    std::string to_string() const {
        std::ostringstream os;
        if (r1 == 0) {
            os << rat_to_string(r0);
        } else {
            os << rat_to_string(r0) << (r1 > 0 ? "+" : "") << rat_to_string(r1) << "k";
        }
        return os.str();
    }
};

/// Sigma(a, zeta^m) = class of a + m in K/lZ.
inline Residue sigma_residue(const KlrContext& ctx, const ParamNumber& a, long long m) {
    long long l = ctx.ell;
    long long mm = ((m % l) + l) % l;
    return Residue::of(ctx, a + ParamNumber::of(Rat(mm)));
}

/// The quiver on a finite residue set with arrows v -> v - k*l whenever both
/// endpoints lie in the set.
struct QuiverD {
    std::vector<Residue> vertices;                      // sorted, unique
    std::vector<std::pair<size_t, size_t>> arrows;      // (from, to) indices
};

inline QuiverD build_quiver(const KlrContext& ctx, std::vector<Residue> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    QuiverD q;
    q.vertices = std::move(verts);
    ParamNumber kl = ctx.k_ell();
    for (size_t i = 0; i < q.vertices.size(); ++i) {
        Residue target = Residue::of(ctx, q.vertices[i].lift() - kl);
        auto it = std::lower_bound(q.vertices.begin(), q.vertices.end(), target);
        if (it != q.vertices.end() && *it == target)
            q.arrows.push_back({i, static_cast<size_t>(it - q.vertices.begin())});
    }
    return q;
}

/// Structural shape of the quiver: with k = a/e every connected component is
/// a subgraph of an e-cycle; with transcendental k the quiver is acyclic.
struct QuiverStructure {
    bool rational = false;
    BigInt cycle_length = 0;     // e when rational
    bool degrees_ok = false;     // in/out degree <= 1
    bool cycles_ok = false;      // every directed cycle has length exactly e
    bool acyclic = false;        // no directed cycle at all
};

inline QuiverStructure classify_quiver(const KlrContext& ctx, const QuiverD& q) {
    QuiverStructure st;
    st.rational = ctx.k.rational;
    if (st.rational) st.cycle_length = ctx.k.e_of();
    std::vector<int> outd(q.vertices.size(), 0), ind(q.vertices.size(), 0);
    std::vector<long long> next(q.vertices.size(), -1);
    for (auto [a, b] : q.arrows) {
        ++outd[a];
        ++ind[b];
        next[a] = static_cast<long long>(b);
    }
    st.degrees_ok = true;
    for (size_t i = 0; i < q.vertices.size(); ++i)
        if (outd[i] > 1 || ind[i] > 1) st.degrees_ok = false;
    st.cycles_ok = true;
    st.acyclic = true;
    for (size_t start = 0; start < q.vertices.size(); ++start) {
        long long cur = static_cast<long long>(start);
        BigInt steps = 0;
        while (next[cur] >= 0) {
            cur = next[cur];
            ++steps;
            if (cur == static_cast<long long>(start)) {
                st.acyclic = false;
                if (!st.rational || steps != st.cycle_length) st.cycles_ok = false;
                break;
            }
            if (steps > BigInt(q.vertices.size())) break;
        }
    }
    return st;
}

/// D = { s_i + m k | m in [-n, n] } as residues.
inline std::vector<Residue> category_O_residues(const KlrContext& ctx, unsigned n) {
    std::set<Residue> out;
    for (unsigned i = 0; i < ctx.ell; ++i)
        for (long long m = -static_cast<long long>(n); m <= static_cast<long long>(n); ++m)
            out.insert(Residue::of(ctx, ParamNumber{ctx.s[i], Rat(m)}));
    return {out.begin(), out.end()};
}

/// A loading: labelled points on the real line with exact rational
/// positions, black points from an eigenvalue pair (a, z) and red points
/// from the parameters.
struct Loading {
    struct Point {
        Rat pos;        // tie-broken position Upsilon(a_i) + i*eps
        Rat base;       // Upsilon(a_i)
        Residue label;  // Sigma(a_i, z_i)
        unsigned index; // 1-based i
    };
    struct RedPoint {
        Rat pos;        // Upsilon(-p(zeta^i))
        Residue label;  // class of -s_i
        unsigned i;     // 0-based parameter index
    };
    std::vector<Point> points;
    std::vector<RedPoint> red;
    Rat eps;
};

/// Builds the loading of an eigenvalue pair: positions Upsilon(a_i) + i*eps
/// with eps = (min nonzero gap)/(2n) (or 1/(2n) when all gaps vanish),
/// labels Sigma(a_i, z_i), and one red point per parameter s_i.
inline Loading loading_from_pair(const KlrContext& ctx, const std::vector<ParamNumber>& a,
                                 const std::vector<unsigned>& z) {
    if (a.size() != z.size()) throw std::invalid_argument("a and z must have equal length");
    const size_t n = a.size();
    Loading L;
    std::optional<Rat> min_gap;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Rat gap = rat_abs(ctx.upsilon(a[i]) - ctx.upsilon(a[j]));
            if (gap != 0 && (!min_gap || gap < *min_gap)) min_gap = gap;
        }
    L.eps = n == 0 ? Rat(0)
                   : (min_gap ? *min_gap / Rat(2 * n) : Rat(1, static_cast<long long>(2 * n)));
    for (size_t i = 0; i < n; ++i) {
        Rat base = ctx.upsilon(a[i]);
        L.points.push_back({base + Rat(static_cast<long long>(i + 1)) * L.eps, base,
                            sigma_residue(ctx, a[i], z[i]), static_cast<unsigned>(i + 1)});
    }
    for (unsigned i = 0; i < ctx.ell; ++i) {
        Rat pos = -(ctx.p_at(i));  // Upsilon(-p(zeta^i)) = -(s_i + i)
        Residue lab = Residue::of(ctx, ParamNumber::of(-ctx.s[i]));
        L.red.push_back({pos, lab, i});
    }
    return L;
}

/// An l-multipartition with boxes addressed (row u, column v, component w),
/// all 1-based.
struct Multipartition {
    std::vector<std::vector<unsigned>> parts;  // parts[w-1] = rows of component w

    void validate(unsigned ell) const {
        if (parts.size() != ell) throw std::invalid_argument("need exactly l components");
        for (const auto& comp : parts)
            for (size_t r = 0; r + 1 < comp.size(); ++r)
                if (comp[r] < comp[r + 1])
                    throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    unsigned size() const {
        unsigned s = 0;
        for (const auto& comp : parts)
            for (auto r : comp) s += r;
        return s;
    }
};

struct Box {
    unsigned u, v, w;  // row, column, component (1-based)
};

/// Boxes in canonical (row-reading, component by component) order.
inline std::vector<Box> canonical_boxes(const Multipartition& xi) {
    std::vector<Box> out;
    for (unsigned w = 1; w <= xi.parts.size(); ++w)
        for (unsigned u = 1; u <= xi.parts[w - 1].size(); ++u)
            for (unsigned v = 1; v <= xi.parts[w - 1][u - 1]; ++v)
                out.push_back({u, v, w});
    return out;
}

/// All standard tableaux: fillings 1..n whose entries increase along rows
/// and columns of each component. Returned as box sequences (entry m is at
/// position m-1).
inline std::vector<std::vector<Box>> standard_tableaux(const Multipartition& xi) {
    std::vector<Box> boxes = canonical_boxes(xi);
    size_t n = boxes.size();
    std::vector<std::vector<Box>> out;
    std::vector<bool> used(n, false);
    std::vector<Box> cur;
    auto filled = [&](unsigned u, unsigned v, unsigned w) {
        for (size_t i = 0; i < n; ++i)
            if (used[i] && boxes[i].u == u && boxes[i].v == v && boxes[i].w == w) return true;
        return false;
    };
    std::function<void()> rec = [&]() {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            const Box& b = boxes[i];
            if (b.u > 1 && !filled(b.u - 1, b.v, b.w)) continue;
            if (b.v > 1 && !filled(b.u, b.v - 1, b.w)) continue;
            used[i] = true;
            cur.push_back(b);
            rec();
            cur.pop_back();
            used[i] = false;
        }
    };
    rec();
    return out;
}

inline unsigned mod_exp(unsigned ell, long long e) {
    long long l = ell;
    return static_cast<unsigned>(((e % l) + l) % l);
}

/// The eigenvalue pair of a multipartition filling: a_m = w + (l/e)(v - u),
/// z_m = zeta^{-w}. Requires rational k = 1/e.
inline std::pair<std::vector<ParamNumber>, std::vector<unsigned>>
multipartition_pair(const KlrContext& ctx, const std::vector<Box>& tableau) {
    if (!ctx.k.rational || rat_num(ctx.k.value) != 1)
        throw std::invalid_argument("multipartition loadings need k = 1/e");
    Rat le = Rat(ctx.ell) * ctx.k.value;  // l/e
    std::vector<ParamNumber> a;
    std::vector<unsigned> z;
    for (const Box& b : tableau) {
        Rat val = Rat(b.w) + le * (Rat(b.v) - Rat(b.u));
        a.push_back(ParamNumber::of(val));
        z.push_back(mod_exp(ctx.ell, -static_cast<long long>(b.w)));
    }
    return {a, z};
}

/// Loading of a multipartition through its canonical tableau.
inline Loading multipartition_loading(const KlrContext& ctx, const Multipartition& xi) {
    xi.validate(ctx.ell);
    auto [a, z] = multipartition_pair(ctx, canonical_boxes(xi));
    return loading_from_pair(ctx, a, z);
}

struct SteadyVerdict {
    bool unsteady = false;
    std::optional<Rat> witness;  // a delta exhibiting unsteadiness
};

/// Decides unsteadiness. Positive sign: exists delta >= (red positions,
/// all of them under quantifier_all, else at least one) such that a
/// non-empty set of points has x > delta + |Upsilon(k)| and all others have
/// x <= delta. Negative sign mirrors every inequality.
inline SteadyVerdict is_unsteady(const KlrContext& ctx, const Loading& L, int sign,
                                 bool quantifier_all = true) {
    SteadyVerdict v;
    if (L.points.empty()) return v;
    Rat uk = rat_abs(ctx.k.upsilon());
    std::optional<Rat> red_bound;
    for (const auto& r : L.red) {
        if (!red_bound) {
            red_bound = r.pos;
        } else if (quantifier_all ? (sign > 0 ? r.pos > *red_bound : r.pos < *red_bound)
                                  : (sign > 0 ? r.pos < *red_bound : r.pos > *red_bound)) {
            red_bound = r.pos;
        }
    }
    std::vector<Rat> candidates;
    if (red_bound) candidates.push_back(*red_bound);
    for (const auto& p : L.points) {
        if (sign > 0) {
            if (!red_bound || p.pos >= *red_bound) candidates.push_back(p.pos);
        } else {
            if (!red_bound || p.pos <= *red_bound) candidates.push_back(p.pos);
        }
    }
    for (const Rat& delta : candidates) {
        bool nonempty = false, covered = true;
        for (const auto& p : L.points) {
            if (sign > 0) {
                if (p.pos > delta + uk) nonempty = true;
                else if (p.pos <= delta) continue;
                else covered = false;
            } else {
                if (p.pos < delta - uk) nonempty = true;
                else if (p.pos >= delta) continue;
                else covered = false;
            }
            if (!covered) break;
        }
        if (nonempty && covered) {
            v.unsteady = true;
            v.witness = delta;
            return v;
        }
    }
    return v;
}

struct KzWeights {
    std::vector<ParamNumber> a;
    std::vector<unsigned> z;  // all zero (z_i = 1)
    BigInt N;
};

/// The widely spaced weight tuple representing the KZ weight functors:
/// a_j = phi(d_j) -/+ j*N with N past every listed quantity.
inline KzWeights kz_weight_tuples(const KlrContext& ctx, const std::vector<Residue>& d,
                                  int sign) {
    unsigned n = static_cast<unsigned>(d.size());
    Rat mx(0);
    for (unsigned m = 0; m < ctx.ell; ++m)
        mx = std::max(mx, rat_abs(ctx.p_at(m)));
    mx = std::max(mx, rat_abs(ctx.k.upsilon()));
    std::set<Residue> ambient(d.begin(), d.end());
    for (const auto& r : category_O_residues(ctx, std::max(n, 1u))) ambient.insert(r);
    for (const auto& r : ambient)
        mx = std::max(mx, rat_abs(ctx.upsilon(r.lift())));
    KzWeights out;
    out.N = rat_ceil(mx) + 1;
    for (unsigned j = 1; j <= n; ++j) {
        ParamNumber lifted = d[j - 1].lift();
        Rat shift = Rat(out.N) * Rat(j);
        out.a.push_back(lifted + ParamNumber::of(sign > 0 ? -shift : shift));
        out.z.push_back(0);
    }
    return out;
}

enum class XiCase { PlainSwap, Plain, Ghost, SameLabel, Loop };

inline std::string xi_case_name(XiCase c) {
    switch (c) {
        case XiCase::PlainSwap: return "plain-swap";
        case XiCase::Plain: return "plain";
        case XiCase::Ghost: return "ghost";
        case XiCase::SameLabel: return "same-label";
        case XiCase::Loop: return "loop";
    }
    return "?";
}

struct XiClassification {
    XiCase c;
    std::string formula;  // which displayed expression applies
};

/// Classifies the straight-line crossing diagram at slot m (1 <= m < n).
inline XiClassification xi_case(const KlrContext& ctx, const std::vector<ParamNumber>& a,
                                const std::vector<unsigned>& z, unsigned m) {
    if (m < 1 || m >= a.size()) throw std::invalid_argument("m out of range");
    if (z[m - 1] % ctx.ell != z[m] % ctx.ell)
        return {XiCase::PlainSwap, "e(a,z) r_m"};
    ParamNumber kl = ctx.k_ell();
    bool ghost = ctx.equal(a[m], a[m - 1] + kl);
    bool same = ctx.equal(a[m], a[m - 1]);
    if (ghost && same) return {XiCase::Loop, "e(a,z) (1 - r_m)"};
    if (ghost) return {XiCase::Ghost, "e(a,z) theta_m"};
    if (same) return {XiCase::SameLabel, "e(a,z) 1/(u_{m+1} - u_m - k*l) (r_m - 1)"};
    return {XiCase::Plain, "e(a,z) 1/(u_m - u_{m+1} + k*l) theta_m"};
}

enum class NuCase { RedActive, RedInactive };

/// Classifies the length-zero rotation: its image is sigma itself exactly
/// when a_1 = -p(z_1).
inline NuCase nu_case(const KlrContext& ctx, const std::vector<ParamNumber>& a,
                      const std::vector<unsigned>& z) {
    if (a.empty()) throw std::invalid_argument("empty tuple");
    unsigned w = z[0] % ctx.ell;
    ParamNumber target = ParamNumber::of(-ctx.p_at(w));
    return ctx.equal(a[0], target) ? NuCase::RedActive : NuCase::RedInactive;
}

inline std::string nu_case_name(NuCase c) {
    return c == NuCase::RedActive ? "red-active" : "red-inactive";
}

} // namespace cherednik

#endif
