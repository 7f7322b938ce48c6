#include "etaq/quotient_grammar.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "etaq/errors.hpp"

namespace etaq {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        std::vector<ExprPtr> factors;
        EtaQuotient merged_eta;

        long sign = 1; // exponent sign applied by '*' and '/'
        while (true) {
            skip_ws();
            if (at_end()) throw ParseError("expected a factor", pos_);
            parse_factor(sign, merged_eta, factors);
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op == '*') sign = 1;
            else if (op == '/') sign = -1;
            else throw ParseError(std::string("expected '*' or '/', got '") + op + "'", pos_);
            ++pos_;
        }

        if (!merged_eta.empty() || factors.empty())
            factors.insert(factors.begin(), eta_expr(std::move(merged_eta)));
        if (factors.size() == 1) return factors.front();
        return product_expr(std::move(factors));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    long parse_integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = pos_;
        bool negative = false;
        if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer", start);
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            if (value > 100000000L) throw ParseError("integer out of range", start);
            value = value * 10 + (peek() - '0');
            ++pos_;
        }
        return negative ? -value : value;
    }

    void parse_factor(long sign, EtaQuotient& merged_eta, std::vector<ExprPtr>& factors) {
        skip_ws();
        const std::size_t start = pos_;

        if (consume_word("phineg") || consume_word("phi")) {
            const bool neg = text_.substr(start, pos_ - start) == "phineg";
            const long e = sign * parse_optional_exponent();
            if (e != 0) factors.push_back(power_of(phi_expr(neg ? -1 : 1), e));
            return;
        }
        if (!at_end() && peek() == 'f') {
            ++pos_;
            const long k = parse_integer(false);
            if (k < 1) throw ParseError("eta subscript must be >= 1", start);
            merged_eta.multiply_by(k, sign * parse_optional_exponent());
            return;
        }
        throw ParseError("expected 'fK', 'phi' or 'phineg'", start);
    }

    long parse_optional_exponent() {
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            return parse_integer(true);
        }
        return 1;
    }

    bool consume_word(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    static ExprPtr power_of(ExprPtr base, long e) {
        return e == 1 ? base : power_expr(std::move(base), e);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_quotient_expr(std::string_view text) { return Parser(text).parse(); }

} // namespace etaq
