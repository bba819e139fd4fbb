#include "penrose/golden.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace penrose {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

std::string ratStr(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return numerator(r).str() + "/" + denominator(r).str();
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (!done() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

Rational parseUnsignedRational(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) throw std::invalid_argument("Golden::parse: expected digits");
    boost::multiprecision::cpp_int num(std::string(c.s.substr(start, c.pos - start)));
    if (c.eat('/')) {
        std::size_t dstart = c.pos;
        while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
        if (c.pos == dstart) throw std::invalid_argument("Golden::parse: expected denominator");
        boost::multiprecision::cpp_int den(std::string(c.s.substr(dstart, c.pos - dstart)));
        if (den.is_zero()) throw std::invalid_argument("Golden::parse: zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

}  // namespace

double Golden::toDouble() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * kPhi;
}

std::string Golden::str() const {
    std::string out = ratStr(a_);
    if (b_.sign() < 0) {
        out += "-";
        out += ratStr(-b_);
    } else {
        out += "+";
        out += ratStr(b_);
    }
    out += "t";
    return out;
}

Golden Golden::parse(std::string_view text) {
    Cursor c{text};
    Rational a(0), b(0);
    bool any = false;
    while (true) {
        while (!c.done() && c.peek() == ' ') ++c.pos;
        if (c.done()) break;
        int sign = 1;
        if (c.eat('-'))
            sign = -1;
        else
            c.eat('+');
        while (!c.done() && c.peek() == ' ') ++c.pos;
        Rational mag;
        bool isTau;
        if (c.eat('t')) {
            mag = 1;
            isTau = true;
        } else {
            mag = parseUnsignedRational(c);
            isTau = c.eat('t');
        }
        if (isTau)
            b += sign * mag;
        else
            a += sign * mag;
        any = true;
    }
    if (!any) throw std::invalid_argument("Golden::parse: empty input");
    return Golden(std::move(a), std::move(b));
}

}  // namespace penrose
