#include "qck/expression.hpp"
#include "qck/error.hpp"

#include <cctype>

namespace qck {

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : t_(t) {}

    Expression parse()
    {
        Expression e;
        skip();
        e.factors.push_back(factor());
        skip();
        while (pos_ < t_.size() && t_[pos_] == '*') {
            ++pos_;
            skip();
            e.factors.push_back(factor());
            skip();
        }
        if (pos_ != t_.size())
            throw ParseError(std::string("unexpected '") + t_[pos_] + "'", pos_);
        return e;
    }

private:
    std::string_view t_;
    std::size_t pos_ = 0;

    void skip()
    {
        while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_])))
            ++pos_;
    }

    bool digit() const { return pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_])); }

    void expect(char c)
    {
        if (pos_ >= t_.size() || t_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    IntVec digits()
    {
        IntVec v;
        if (!digit())
            throw ParseError("expected digits", pos_);
        while (digit())
            v.push_back(t_[pos_++] - '0');
        return v;
    }

    ExprAtom factor()
    {
        ExprAtom a = atom();
        skip();
        if (pos_ < t_.size() && t_[pos_] == '^') {
            ++pos_;
            skip();
            int sign = 1;
            if (pos_ < t_.size() && t_[pos_] == '-') {
                sign = -1;
                ++pos_;
            }
            if (!digit())
                throw ParseError("expected an exponent", pos_);
            int v = 0;
            while (digit()) {
                v = v * 10 + (t_[pos_++] - '0');
                if (v > 1000)
                    throw ParseError("exponent too large", pos_);
            }
            a.exponent = sign * v;
        }
        return a;
    }

    ExprAtom atom()
    {
        if (t_.substr(pos_, 6) == "minor(") {
            pos_ += 6;
            skip();
            ExprAtom a;
            a.rows = digits();
            skip();
            expect('|');
            skip();
            a.cols = digits();
            skip();
            expect(')');
            return a;
        }
        if (pos_ < t_.size() && t_[pos_] == 'x') {
            ++pos_;
            ExprAtom a;
            for (IntVec* v : {&a.rows, &a.cols}) {
                if (!digit())
                    throw ParseError("expected a digit after 'x'", pos_);
                v->push_back(t_[pos_++] - '0');
            }
            return a;
        }
        throw ParseError("expected 'x' or 'minor('", pos_);
    }
};

} // namespace

std::string Expression::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (i)
            s += "*";
        if (f.rows.size() == 1)
            s += "x" + std::to_string(f.rows[0]) + std::to_string(f.cols[0]);
        else {
            s += "minor(";
            for (int r : f.rows)
                s += std::to_string(r);
            s += "|";
            for (int c : f.cols)
                s += std::to_string(c);
            s += ")";
        }
        if (f.exponent != 1)
            s += "^" + std::to_string(f.exponent);
    }
    return s;
}

Expression parse_expression(std::string_view text)
{
    return Parser(text).parse();
}

QTorusElement evaluate(QuantumMatrixImage& img, const Expression& e)
{
    QTorusElement r = QTorusElement::one(img.diagram().D());
    for (const auto& f : e.factors)
        r = r * img.minor(f.rows, f.cols).pow(f.exponent);
    return r;
}

QTorusElement expression_image(const RootDatum& rd, const SignedWord& word, std::string_view text)
{
    QuantumMatrixImage img(rd, word);
    return evaluate(img, parse_expression(text));
}

} // namespace qck
