#ifndef CHEREDNIK_DIAGRAM_HPP
#define CHEREDNIK_DIAGRAM_HPP

#include "cherednik/presentation.hpp"

namespace cherednik {

/// Debug-only ASCII rendering of a generator word as strands on the
/// cut-open cylinder: the dashed columns are the seam, 'o' is a u-dot,
/// '*' a torsion star, X an adjacent crossing; sigma and tau shift every
/// strand one slot across the seam.
inline std::string render_word(const AWord::Word& gens, unsigned n) {
    std::ostringstream os;
    auto strand_col = [&](unsigned i) { return 3 + 4 * (i - 1); };
    unsigned width = 3 + 4 * n;
    auto blank = [&]() {
        std::string row(width + 1, ' ');
        row[0] = ':';
        row[width] = ':';
        for (unsigned i = 1; i <= n; ++i) row[strand_col(i)] = '|';
        return row;
    };
    if (gens.empty()) {
        os << blank() << "  (empty word)\n";
        return os.str();
    }
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        const AGen& g = *it;
        std::string top = blank(), mid = blank(), bot = blank();
        std::string label;
        switch (g.kind) {
            case AGen::Kind::U:
                label = "u(" + std::to_string(g.index) + ")";
                if (g.index >= 1 && g.index <= static_cast<long long>(n))
                    mid[strand_col(static_cast<unsigned>(g.index))] = 'o';
                break;
            case AGen::Kind::T:
                label = "t(" + std::to_string(g.index) + ")";
                if (g.index >= 1 && g.index <= static_cast<long long>(n))
                    mid[strand_col(static_cast<unsigned>(g.index))] = '*';
                break;
            case AGen::Kind::Transp: {
                label = "s" + std::to_string(g.index);
                unsigned j = static_cast<unsigned>(g.index);
                unsigned c1 = strand_col(j), c2 = strand_col(j + 1);
                top[c1] = '\\';
                top[c2] = '/';
                mid[c1] = ' ';
                mid[c2] = ' ';
                mid[(c1 + c2) / 2] = 'X';
                bot[c1] = '/';
                bot[c2] = '\\';
                break;
            }
            case AGen::Kind::Sigma: {
                label = "sigma";
                for (unsigned i = 1; i <= n; ++i) mid[strand_col(i)] = '\\';
                mid[1] = '<';
                mid[width - 1] = '>';
                break;
            }
            case AGen::Kind::Tau: {
                label = "tau";
                for (unsigned i = 1; i <= n; ++i) mid[strand_col(i)] = '/';
                mid[1] = '>';
                mid[width - 1] = '<';
                break;
            }
            case AGen::Kind::Scalar:
                label = "scalar " + g.value.to_string();
                break;
        }
        os << top << "\n" << mid << "   " << label << "\n" << bot << "\n";
    }
    return os.str();
}

/// Renders every term of a combination, with its coefficient.
inline std::string render_diagram(const AWord& w, unsigned n) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, gens] : w.terms()) {
        if (!first) os << "+\n";
        first = false;
        os << "coefficient: " << c.to_string() << "\n";
        os << render_word(gens, n);
    }
    return os.str();
}

} // namespace cherednik

#endif
