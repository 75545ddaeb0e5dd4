// Certifies that 2842 n^5 - 7821 n^4 - 16884 n^3 + 10428 n^2 + 5082 n - 2607
// is positive for every integer n >= 4.
#include <iostream>

#include "polycert/polycert.hpp"

int main() {
    using namespace polycert;

    Poly f = parse("2842*n^5 - 7821*n^4 - 16884*n^3 + 10428*n^2 + 5082*n - 2607").poly;

    Certificate cert = certify_minimal(f);
    std::cout << render_latex(cert) << "\n";
    std::cout << "verify: " << to_string(verify(cert)) << "\n";

    // The certificate covers n >= 5; n = 4 is checked directly.
    std::cout << "f(4) = " << to_string(f(Rat(4))) << "\n";
    return verify(cert) == VerifyResult::Valid ? 0 : 1;
}
