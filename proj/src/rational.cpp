#include "ivs/rational.hpp"

#include "ivs/errors.hpp"

#include <cctype>
#include <ostream>

namespace ivs {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw validation_error("rational denominator is zero");
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.sign() == 0) throw validation_error("division of rational by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }

    const auto fail = [&text]() -> Rational {
        throw parse_error("not a rational literal: \"" + std::string(text) +
                          "\" (expected \"p/q\", an integer, or a finite decimal)");
    };

    mpq_class value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class n(std::string(num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw parse_error("zero denominator in rational \"" + std::string(text) + "\"");
        value = mpq_class(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if (!all_digits(ip) || !all_digits(fp)) return fail();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class num = mpz_class(std::string(ip), 10) * scale + mpz_class(std::string(fp), 10);
        value = mpq_class(num, scale);
    } else {
        if (!all_digits(body)) return fail();
        value = mpq_class(mpz_class(std::string(body), 10));
    }

    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ivs
