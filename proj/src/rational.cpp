#include "symskew/rational.hpp"

namespace symskew {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw Error("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational literal: " + s);
    if (r.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

std::string to_string(const RationalInterval& iv) {
    return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")";
}

} // namespace symskew
