/* rational.cpp */
#include "gqp/rational.hpp"

#include <stdexcept>

namespace gqp {

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8
        if (i + 2 < text.size() && (unsigned char)text[i] == 0xE2 && (unsigned char)text[i + 1] == 0x88 &&
            (unsigned char)text[i + 2] == 0x92) {
            s.push_back('-');
            i += 2;
        }
        else if (text[i] != ' ')
            s.push_back(text[i]);
    }
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    if (s.empty())
        throw std::invalid_argument("empty rational");
    size_t slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        size_t k = 0;
        if (allow_sign && !t.empty() && t[0] == '-')
            k = 1;
        if (k == t.size())
            return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos ? !digits_ok(s, true)
                                   : !digits_ok(s.substr(0, slash), true) || !digits_ok(s.substr(slash + 1), false))
        throw std::invalid_argument("bad rational: " + text);
    Rational q;
    if (slash == std::string::npos)
        q = Rational(mpz_class(s));
    else {
        mpz_class den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator: " + text);
        q = Rational(mpz_class(s.substr(0, slash)), den);
        q.canonicalize();
    }
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

}  // namespace gqp
