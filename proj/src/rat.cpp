#include "polymom/rat.hpp"

namespace polymom {

std::string rat_decimal(const Rat& q, int digits) {
    if (digits < 1) digits = 1;
    if (q == 0) return "0";
    bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    // find exponent e with 10^e <= a < 10^(e+1)
    int e = 0;
    Rat ten(10), one(1);
    Rat t = a;
    while (t >= ten) { t /= ten; ++e; }
    while (t < one) { t *= ten; --e; }
    // round a / 10^(e - digits + 1) to nearest integer
    int shift = digits - 1 - e;
    Rat scaled = a;
    for (int i = 0; i < shift; ++i) scaled *= ten;
    for (int i = 0; i < -shift; ++i) scaled /= ten;
    Int num = scaled.get_num(), den = scaled.get_den();
    Int twice = 2 * num + den;  // floor((num + den/2) / den) == floor(twice / (2 den))
    Int rounded;
    mpz_fdiv_q(rounded.get_mpz_t(), twice.get_mpz_t(), Int(2 * den).get_mpz_t());
    std::string mant = rounded.get_str();
    if (static_cast<int>(mant.size()) > digits) {  // rounding overflowed, e.g. 9.99 -> 10.0
        ++e;
        mant.pop_back();
    }
    // place the decimal point after the first digit, exponent-style for big |e|
    std::string out;
    if (e >= -4 && e < digits + 3) {
        if (e >= 0) {
            int ip = e + 1;
            while (static_cast<int>(mant.size()) < ip) mant += '0';
            out = mant.substr(0, ip);
            std::string frac = mant.substr(ip);
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        } else {
            out = "0.";
            for (int i = 0; i < -e - 1; ++i) out += '0';
            std::string frac = mant;
            while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
            out += frac;
        }
    } else {
        out = mant.substr(0, 1);
        std::string frac = mant.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return neg ? "-" + out : out;
}

} // namespace polymom
