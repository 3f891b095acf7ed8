#include "intervalia/rational.hpp"

#include "intervalia/error.hpp"

#include <cctype>

namespace intervalia {

Rat parse_rat(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("NotARational", "empty rational literal");
    auto check_int = [&](const std::string& part) {
        if (part.empty()) return false;
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!check_int(s)) fail("NotARational", "bad rational literal '" + text + "'");
        Rat q(s);
        q.canonicalize();
        return q;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        fail("NotARational", "bad rational literal '" + text + "'");
    Rat q(num + "/" + den);
    if (q.get_den() == 0) fail("NotARational", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int lcm_denominators(const std::vector<Rat>& values) {
    Int l = 1;
    for (const auto& v : values) {
        Int den = v.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / g * den;
    }
    return l;
}

} // namespace intervalia
