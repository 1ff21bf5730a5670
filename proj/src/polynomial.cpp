#include "zigzag/polynomial.hpp"

namespace zigzag {

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPolynomial::at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs) sum += c;
    return sum;
}

std::string IntPolynomial::pretty(char var) const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool need_coeff = (mag != 1) || (k == 0);
        if (need_coeff) out += mag.get_str();
        if (k >= 1) {
            out += var;
            if (k >= 2) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace zigzag
