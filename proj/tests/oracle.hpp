#pragma once
// Independent reference: the sequence rebuilt from chord words alone
// (rotate, twist, reduce) and measured by the bigon-free chord count.

#include <endlam/seqgen.hpp>

namespace oracle {

using namespace endlam;

inline std::vector<ChordCurve> chord_sequence(int p, const TwistSchedule& sch, int depth) {
    const int m = (p - 1) / 2;
    std::vector<ChordCurve> g;
    for (int k = 0; k <= depth; ++k) {
        ChordCurve c = side_chord_curve(p, 0);
        for (int j = k; j >= 1; --j) {
            c = rotate_chord(c, 2);
            c = twist_chord(c, p - 1, static_cast<long>(sch[j + m - 1]));
        }
        g.push_back(c);
    }
    return g;
}

inline BigInt inter(const ChordCurve& a, const ChordCurve& b) { return oracle_intersection(a, b, 200000); }

}  // namespace oracle
