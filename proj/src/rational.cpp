#include "gec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gec {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw std::invalid_argument("bad rational literal: " + text);
        Rat v{mpz_class(num), mpz_class(den)};
        if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        v.canonicalize();
        return v;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot);
        std::string tail = s.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty()) head = "0";
        if (!is_integer_token(head) || (!tail.empty() && !is_integer_token(tail)))
            throw std::invalid_argument("bad decimal literal: " + text);
        mpz_class scale = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
        mpz_class num = mpz_class(head) * scale + (tail.empty() ? mpz_class(0) : mpz_class(tail));
        if (neg) num = -num;
        Rat v(num, scale);
        v.canonicalize();
        return v;
    }

    if (!is_integer_token(s)) throw std::invalid_argument("bad rational literal: " + text);
    return Rat(mpz_class(s));
}

std::string rat_to_string(const Rat& value) {
    Rat v = value;
    v.canonicalize();
    return v.get_str();
}

double rat_to_double(const Rat& value) { return value.get_d(); }

Rat rat_factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

Rat rat_pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
}

}  // namespace gec
