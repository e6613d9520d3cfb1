#include "hcert/exact/poly_text.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace hcert::exact {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c)
    {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool at_end()
    {
        skip_ws();
        return pos_ == s_.size();
    }

    mpz_class integer()
    {
        skip_ws();
        bool quoted = pos_ < s_.size() && s_[pos_] == '"';
        if (quoted) ++pos_;
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        std::string tok(s_.substr(start, pos_ - start));
        if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
        if (quoted) expect('"');
        return mpz_class(tok, 10);
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial text: " + what + " at offset " + std::to_string(pos_));
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parse_int_poly(std::string_view text)
{
    Scanner sc(text);
    sc.expect('[');
    std::vector<mpz_class> coeffs;
    if (!sc.peek(']')) {
        coeffs.push_back(sc.integer());
        while (sc.peek(',')) {
            sc.expect(',');
            coeffs.push_back(sc.integer());
        }
    }
    sc.expect(']');
    if (!sc.at_end()) sc.fail("trailing characters");
    return IntPolynomial(std::move(coeffs));
}

BiPolynomial parse_bi_poly(std::string_view text)
{
    Scanner sc(text);
    sc.expect('[');
    BiPolynomial out;
    bool first = true;
    while (!sc.peek(']')) {
        if (!first) sc.expect(',');
        first = false;
        sc.expect('[');
        mpz_class i = sc.integer();
        sc.expect(',');
        mpz_class j = sc.integer();
        sc.expect(',');
        mpz_class c = sc.integer();
        sc.expect(']');
        if (i < 0 || j < 0 || !i.fits_uint_p() || !j.fits_uint_p()) sc.fail("bad exponent");
        out += BiPolynomial::monomial(c, static_cast<unsigned>(i.get_ui()), static_cast<unsigned>(j.get_ui()));
    }
    sc.expect(']');
    if (!sc.at_end()) sc.fail("trailing characters");
    return out;
}

std::string format_int_poly(const IntPolynomial& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += "\"" + p.coeff(i).get_str() + "\"";
    }
    return out + "]";
}

std::string format_bi_poly(const BiPolynomial& p)
{
    std::string out = "[";
    bool first = true;
    for (const auto& [k, c] : p.terms()) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(k.first) + "," + std::to_string(k.second) + ",\"" + c.get_str() + "\"]";
    }
    return out + "]";
}

}  // namespace hcert::exact
