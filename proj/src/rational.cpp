#include "tilescale/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace tilescale {

void Rat::normalize() {
    if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rat::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rat: empty string");
    auto parse_int = [](const std::string& t) -> Int {
        if (t.empty()) throw std::invalid_argument("Rat: empty integer part");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("Rat: sign without digits");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("Rat: invalid character in '" + t + "'");
        return Int(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    return Rat(n, d);
}

double Rat::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

Int round_nearest(const Rat& x) {
    return (x + Rat(1, 2)).floor();
}

Rat nearest_int_distance(const Rat& x) {
    Rat f = x.frac();
    Rat up = Rat(1) - f;
    return f < up ? f : up;
}

Rat rational_group_generator(std::span<const Rat> values) {
    if (values.empty())
        throw std::invalid_argument("rational_group_generator: empty input");
    Int l = 1, g = 0;
    for (const Rat& v : values) {
        if (!v.is_positive())
            throw std::invalid_argument(
                "rational_group_generator: non-positive value " + v.str());
        l = boost::multiprecision::lcm(l, v.den());
        g = boost::multiprecision::gcd(g, v.num());
    }
    return Rat(l, g);
}

Int ipow(const Int& base, unsigned long exp) {
    return boost::multiprecision::pow(base, exp);
}

} // namespace tilescale
