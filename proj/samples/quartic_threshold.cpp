// (x-1)(x-2)(x-3)(x-4): the largest root is 4, yet no shift below 10 gives a
// quotient with nonnegative coefficients.
#include <iostream>

#include "polycert/polycert.hpp"

int main() {
    using namespace polycert;

    Poly f = parse("(x-1)(x-2)(x-3)(x-4)").poly;
    std::cout << "f = " << format(f) << "\n";

    for (long b = 5; b <= 10; ++b) {
        Certificate c = certify_at(f, Rat(b));
        std::cout << "b = " << b << ": " << render_identity(c) << "  [" << describe(c.verdict, c) << "]\n";
    }

    ThresholdBracket t = optimal_threshold(f);
    std::cout << "optimal shift: " << (t.exact ? to_string(*t.exact) : "in (" + to_string(t.lo) + ", " + to_string(t.hi) + "]")
              << ", binding constraint f_" << t.witness_index_p << "\n";

    // A polynomial whose threshold is irrational: only a bracket is possible.
    Poly g = parse("x^2 - 2").poly;
    ThresholdBracket tg = optimal_threshold(g, inverse_power_of_two(30));
    std::cout << "x^2 - 2: b* in (" << to_string(tg.lo) << ", " << to_string(tg.hi) << "]\n";
    return 0;
}
