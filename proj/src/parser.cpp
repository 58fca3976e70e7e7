#include <fmtlab/formula.hpp>
#include <fmtlab/error.hpp>

#include <cctype>
#include <charconv>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace fmtlab
{
    namespace
    {
        struct Token
        {
            enum { open, close, word, end } type;
            string_view text;
            size_t position;
        };

        class Parser
        {
            public:
                explicit Parser(string_view text) :
                    _text(text)
                {
                    advance();
                }

                auto parse_all() -> Formula
                {
                    auto f = formula();
                    if (_token.type != Token::end)
                        throw ParseError("unexpected trailing input", _token.position);
                    return f;
                }

            private:
                string_view _text;
                size_t _offset = 0;
                Token _token{};

                auto advance() -> void
                {
                    while (_offset < _text.size() && std::isspace(static_cast<unsigned char>(_text[_offset])))
                        ++_offset;
                    if (_offset == _text.size()) {
                        _token = Token{ Token::end, {}, _offset };
                        return;
                    }
                    char c = _text[_offset];
                    if (c == '(' || c == ')') {
                        _token = Token{ c == '(' ? Token::open : Token::close, _text.substr(_offset, 1), _offset };
                        ++_offset;
                        return;
                    }
                    size_t start = _offset;
                    while (_offset < _text.size() && ! std::isspace(static_cast<unsigned char>(_text[_offset]))
                            && _text[_offset] != '(' && _text[_offset] != ')')
                        ++_offset;
                    _token = Token{ Token::word, _text.substr(start, _offset - start), start };
                }

                auto describe() const -> string
                {
                    switch (_token.type) {
                        case Token::open: return "'('";
                        case Token::close: return "')'";
                        case Token::end: return "end of input";
                        case Token::word: return "'" + string(_token.text) + "'";
                    }
                    return {};
                }

                auto expect_close() -> void
                {
                    if (_token.type != Token::close)
                        throw ParseError("expected ')' but found " + describe(), _token.position);
                    advance();
                }

                static auto is_identifier(string_view w) -> bool
                {
                    if (w.empty() || ! (std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_'))
                        return false;
                    for (char c : w)
                        if (! (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''))
                            return false;
                    return true;
                }

                auto identifier(const char * what) -> string
                {
                    if (_token.type != Token::word || ! is_identifier(_token.text))
                        throw ParseError(string("expected ") + what + " but found " + describe(), _token.position);
                    string result(_token.text);
                    advance();
                    return result;
                }

                auto integer() -> int
                {
                    int value = -1;
                    if (_token.type == Token::word) {
                        auto [end, ec] = std::from_chars(_token.text.data(), _token.text.data() + _token.text.size(), value);
                        if (ec != std::errc{} || end != _token.text.data() + _token.text.size())
                            value = -1;
                    }
                    if (value < 0)
                        throw ParseError("expected a non-negative integer but found " + describe(), _token.position);
                    advance();
                    return value;
                }

                auto formula() -> Formula
                {
                    if (_token.type == Token::word) {
                        if (_token.text == "true") {
                            advance();
                            return fo::truth();
                        }
                        if (_token.text == "false") {
                            advance();
                            return fo::falsity();
                        }
                        throw ParseError("expected a formula but found " + describe(), _token.position);
                    }
                    if (_token.type != Token::open)
                        throw ParseError("expected a formula but found " + describe(), _token.position);
                    advance();

                    if (_token.type != Token::word)
                        throw ParseError("expected an operator but found " + describe(), _token.position);
                    auto op = _token.text;
                    auto op_position = _token.position;
                    advance();

                    if (op == "exists" || op == "forall") {
                        auto v = identifier("a variable");
                        auto body = formula();
                        expect_close();
                        return make_formula(op == "exists" ? FormulaKind::exists : FormulaKind::forall, v, {}, 0, { body });
                    }
                    if (op == "and" || op == "or") {
                        vector<Formula> parts;
                        while (_token.type != Token::close) {
                            if (_token.type == Token::end)
                                throw ParseError("expected ')' but found end of input", _token.position);
                            parts.push_back(formula());
                        }
                        if (parts.empty())
                            throw ParseError(string("'") + string(op) + "' needs at least one operand", op_position);
                        expect_close();
                        return make_formula(op == "and" ? FormulaKind::conjunction : FormulaKind::disjunction, {}, {}, 0, std::move(parts));
                    }
                    if (op == "not") {
                        auto body = formula();
                        expect_close();
                        return make_formula(FormulaKind::negation, {}, {}, 0, { body });
                    }
                    if (op == "rel") {
                        auto name = identifier("a relation name");
                        vector<string> args;
                        while (_token.type != Token::close)
                            args.push_back(identifier("a variable"));
                        if (args.empty())
                            throw ParseError("relation atom without arguments", _token.position);
                        expect_close();
                        return make_formula(FormulaKind::atom, name, std::move(args), 0, {});
                    }
                    if (op == "=") {
                        auto x = identifier("a variable");
                        auto y = identifier("a variable");
                        expect_close();
                        return make_formula(FormulaKind::equal, {}, { x, y }, 0, {});
                    }
                    if (op == "dist<=") {
                        int r = integer();
                        auto x = identifier("a variable");
                        auto y = identifier("a variable");
                        expect_close();
                        return make_formula(FormulaKind::dist_le, {}, { x, y }, r, {});
                    }
                    throw ParseError("unknown operator '" + string(op) + "'", op_position);
                }
        };
    }

    auto parse_formula(string_view text) -> Formula
    {
        return Parser{ text }.parse_all();
    }

    auto parse_formula(string_view text, const Vocabulary & vocabulary) -> Formula
    {
        auto f = parse_formula(text);
        check_vocabulary(f, vocabulary);
        return f;
    }
}
