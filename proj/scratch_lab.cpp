// scratch convention lab - not part of the build
#include "cherednik/presentation.hpp"
#include <iostream>

using namespace cherednik;

int main() {
    // group sanity
    {
        unsigned ell = 2, n = 2;
        auto s = GroupElem::transposition(ell, n, 1);
        auto t1 = GroupElem::torsion(ell, n, 1);
        auto t2 = GroupElem::torsion(ell, n, 2);
        std::cout << "s*t1*s = " << (s * t1 * s).to_string()
                  << "  (want t2 = " << t2.to_string() << ")\n";
    }
    // table golden l=2 n=1: [x1,y1] = hbar - 2(h0-h1) t1
    {
        const auto& A = HAlgebra::get(2, 1);
        auto c = A.commutator(A.x_gen(1), A.y_gen(1));
        std::cout << "[x1,y1] (l=2,n=1) = " << c.to_string() << "\n";
    }
    // y1*x1 for l=1,n=2
    {
        const auto& A = HAlgebra::get(1, 2);
        auto yx = A.mul(A.y_gen(1), A.x_gen(1));
        std::cout << "y1 x1 (l=1,n=2) = " << yx.to_string() << "\n";
    }
    // sigma tau = x1 y1
    for (unsigned n : {1u, 2u, 3u}) {
        APresentation ap(2, n);
        auto st = h_mul(ap.sigma_h(), ap.tau_h());
        auto xy = h_mul(HAlgebra::get(2, n).x_gen(1), HAlgebra::get(2, n).y_gen(1));
        std::cout << "n=" << n << " sigma*tau == x1y1: " << (st == xy) << "\n";
    }
    // roundtrip + full relation check over conventions
    for (auto [l, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        APresentation ap(l, n);
        bool rt = true;
        for (unsigned i = 1; i <= n; ++i) {
            rt = rt && (ap.x_image(i) == HAlgebra::get(l, n).x_gen(i));
            rt = rt && (ap.y_image(i) == HAlgebra::get(l, n).y_gen(i));
        }
        std::cout << "(" << l << "," << n << ") roundtrip: " << rt;
        for (unsigned i = 1; i <= n; ++i)
            if (!(ap.u_h(i) == ap.u_h_alt(i))) std::cout << " [u_h forms differ at i=" << i << "]";
        auto rep = check_all(l, n);
        std::cout << "  relations: " << (rep.checked - rep.failed) << "/" << rep.checked << "\n";
        if (!rep.ok()) {
            for (const auto& r : rep.results)
                if (!r.ok) std::cout << "   FAIL " << r.family << " " << r.instance << "\n";
        }
    }
    // convention uniqueness at (2,2)
    {
        int winners = 0;
        for (int th : {+1, -1})
            for (int us : {+1, -1})
                for (int rp : {+1, -1}) {
                    Convention c{th, us, rp > 0};
                    auto rep = check_all(2, 2, c);
                    if (rep.ok()) {
                        ++winners;
                        std::cout << "convention passes: " << c.to_string() << "\n";
                    }
                }
        std::cout << "winners at (2,2): " << winners << "\n";
    }
    // euler grading orientation
    {
        unsigned l = 2, n = 2;
        APresentation ap(l, n);
        const auto& A = HAlgebra::get(l, n);
        auto eu = ap.euler();
        auto hb = CycScalar::hbar(l);
        for (unsigned i = 1; i <= n; ++i) {
            auto cx = A.commutator(eu, A.x_gen(i));
            std::cout << "[eu,x" << i << "] + hbar x" << i << " == 0: "
                      << ((cx + hb * A.x_gen(i)).is_zero())
                      << " ; [eu,x]-hbar x == 0: " << ((cx - hb * A.x_gen(i)).is_zero()) << "\n";
        }
    }
    return 0;
}
