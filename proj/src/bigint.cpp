#include "subshift/bigint.hpp"

namespace subshift {

BigInt pow_big(long long base, int exp) {
    if (exp < 0) {
        throw DomainError("pow_big requires a nonnegative exponent");
    }
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return BigRational(BigInt(std::string(text)));
        }
        BigInt num{std::string(text.substr(0, slash))};
        BigInt den{std::string(text.substr(slash + 1))};
        if (den == 0) {
            throw DomainError("rational with zero denominator: \"" +
                              std::string(text) + "\"");
        }
        return BigRational(num, den);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("cannot parse rational \"" + std::string(text) + "\"");
    }
}

std::string rational_to_string(const BigRational& r) {
    std::string s = big_numerator(r).str();
    if (big_denominator(r) != 1) {
        s += '/';
        s += big_denominator(r).str();
    }
    return s;
}

}  // namespace subshift
