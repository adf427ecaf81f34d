#include <cctype>
#include <set>
#include <utility>

#include "rdn/turtle.hpp"

namespace rdn {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
        case ParseErrorKind::UnknownPrefix: return "UnknownPrefix";
        case ParseErrorKind::UnterminatedString: return "UnterminatedString";
        case ParseErrorKind::MalformedIri: return "MalformedIri";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class TokenType {
    IriRef,      // <...>, content without brackets
    PName,       // prefix:local, possibly empty prefix or local
    BlankLabel,  // _:label
    StringLit,   // "...", unescaped content
    HatHat,      // ^^
    Dot,
    Semicolon,
    Comma,
    PrefixDirective,  // @prefix
    KeywordA,
    EndOfFile,
};

struct Token {
    TokenType type;
    std::string text;    // IRI content, string content, blank label
    std::string prefix;  // PName only
    std::string local;   // PName only
    int line = 1;
    int column = 1;
};

bool is_pname_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (at_end()) {
            tok.type = TokenType::EndOfFile;
            return tok;
        }
        char c = peek();
        switch (c) {
            case '.': advance(); tok.type = TokenType::Dot; return tok;
            case ';': advance(); tok.type = TokenType::Semicolon; return tok;
            case ',': advance(); tok.type = TokenType::Comma; return tok;
            case '<': return lex_iriref(tok);
            case '"': return lex_string(tok);
            case '^':
                advance();
                if (at_end() || peek() != '^') {
                    fail(ParseErrorKind::UnexpectedToken, line_, column_, "expected '^^'");
                }
                advance();
                tok.type = TokenType::HatHat;
                return tok;
            case '@': return lex_directive(tok);
            case '_': return lex_blank(tok);
            default: break;
        }
        if (is_pname_char(c)) return lex_word(tok);
        fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
             std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] static void fail(ParseErrorKind kind, int line, int column, const std::string& msg) {
        throw ParseError(kind, line, column, msg);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_trivia() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    Token lex_iriref(Token tok) {
        advance();  // '<'
        std::string content;
        while (true) {
            if (at_end()) {
                fail(ParseErrorKind::MalformedIri, line_, column_, "unterminated IRI reference");
            }
            int l = line_, col = column_;
            char c = advance();
            if (c == '>') break;
            if (c == '\n' || c == '\r') {
                fail(ParseErrorKind::MalformedIri, l, col, "line break inside IRI reference");
            }
            content += c;
        }
        tok.type = TokenType::IriRef;
        tok.text = std::move(content);
        return tok;
    }

    Token lex_string(Token tok) {
        advance();  // opening quote
        std::string content;
        while (true) {
            if (at_end()) {
                fail(ParseErrorKind::UnterminatedString, line_, column_, "unterminated string literal");
            }
            int l = line_, col = column_;
            char c = advance();
            if (c == '"') break;
            if (c == '\n' || c == '\r') {
                fail(ParseErrorKind::UnterminatedString, l, col, "line break inside string literal");
            }
            if (c == '\\') {
                if (at_end()) {
                    fail(ParseErrorKind::UnterminatedString, line_, column_, "unterminated string literal");
                }
                int el = line_, ecol = column_;
                char e = advance();
                switch (e) {
                    case '"': content += '"'; break;
                    case '\\': content += '\\'; break;
                    case 'n': content += '\n'; break;
                    case 't': content += '\t'; break;
                    default:
                        fail(ParseErrorKind::UnexpectedToken, el, ecol,
                             std::string("unsupported string escape '\\") + e + "'");
                }
            } else {
                content += c;
            }
        }
        tok.type = TokenType::StringLit;
        tok.text = std::move(content);
        return tok;
    }

    Token lex_directive(Token tok) {
        advance();  // '@'
        std::string word;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word += advance();
        if (word != "prefix") {
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                 "unsupported directive '@" + word + "'");
        }
        tok.type = TokenType::PrefixDirective;
        return tok;
    }

    Token lex_blank(Token tok) {
        // '_' begins a blank node label only as "_:"; a bare '_' word is not
        // in the subset.
        advance();
        if (at_end() || peek() != ':') {
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column, "expected '_:' blank node label");
        }
        advance();
        std::string label;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            label += advance();
        }
        if (label.empty()) {
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column, "empty blank node label");
        }
        tok.type = TokenType::BlankLabel;
        tok.text = std::move(label);
        return tok;
    }

    Token lex_word(Token tok) {
        std::string word;
        while (!at_end() && is_pname_char(peek())) word += advance();
        auto colon = word.find(':');
        if (colon == std::string::npos) {
            if (word == "a") {
                tok.type = TokenType::KeywordA;
                return tok;
            }
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                 "unexpected token '" + word + "'");
        }
        std::string prefix = word.substr(0, colon);
        std::string local = word.substr(colon + 1);
        if (!prefix.empty() && !std::isalpha(static_cast<unsigned char>(prefix[0]))) {
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                 "malformed prefixed name '" + word + "'");
        }
        if (local.find(':') != std::string::npos) {
            fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                 "malformed prefixed name '" + word + "'");
        }
        tok.type = TokenType::PName;
        tok.prefix = std::move(prefix);
        tok.local = std::move(local);
        return tok;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options)
        : lexer_(text), options_(options) {
        graph_.prefixes().bind("", options.base);
        graph_.prefixes().bind("rdf", std::string(kRdfNs));
        graph_.prefixes().bind("rdfs", std::string(kRdfsNs));
        graph_.prefixes().bind("xsd", std::string(kXsdNs));
        graph_.prefixes().bind("owl", std::string(kOwlNs));
        next_ = lexer_.next();
    }

    Graph run() {
        while (next_.type != TokenType::EndOfFile) {
            if (next_.type == TokenType::PrefixDirective) {
                parse_prefix_directive();
            } else {
                parse_statement();
            }
        }
        return std::move(graph_);
    }

private:
    Token take() {
        Token tok = std::move(next_);
        next_ = lexer_.next();
        return tok;
    }

    void expect(TokenType type, const char* what) {
        if (next_.type != type) {
            Lexer::fail(ParseErrorKind::UnexpectedToken, next_.line, next_.column,
                        std::string("expected ") + what);
        }
    }

    void parse_prefix_directive() {
        take();  // @prefix
        expect(TokenType::PName, "prefix declaration");
        Token name = take();
        if (!name.local.empty()) {
            Lexer::fail(ParseErrorKind::UnexpectedToken, name.line, name.column,
                        "expected prefix declaration to end with ':'");
        }
        expect(TokenType::IriRef, "namespace IRI");
        Token ns = take();
        expect(TokenType::Dot, "'.' after @prefix directive");
        take();
        if (declared_.count(name.prefix) && options_.warnings) {
            options_.warnings->push_back("line " + std::to_string(name.line) + ": prefix '" +
                                         name.prefix + ":' redeclared, last declaration wins");
        }
        declared_.insert(name.prefix);
        graph_.prefixes().bind(name.prefix, ns.text);
    }

    void parse_statement() {
        Term subject = parse_term_token(Position::Subject);
        while (true) {
            Term predicate = parse_term_token(Position::Predicate);
            while (true) {
                Term object = parse_term_token(Position::Object);
                graph_.insert(Triple(subject, predicate, object));
                if (next_.type == TokenType::Comma) {
                    take();
                    continue;
                }
                break;
            }
            if (next_.type == TokenType::Semicolon) {
                take();
                continue;
            }
            break;
        }
        expect(TokenType::Dot, "'.' at end of statement");
        take();
    }

    Term make_iri(const std::string& value, const Token& at) {
        try {
            return Term::iri(value);
        } catch (const std::invalid_argument& e) {
            Lexer::fail(ParseErrorKind::MalformedIri, at.line, at.column, e.what());
        }
    }

    Term expand_pname(const Token& tok) {
        const std::string* ns = graph_.prefixes().find(tok.prefix);
        if (!ns) {
            Lexer::fail(ParseErrorKind::UnknownPrefix, tok.line, tok.column,
                        "unknown prefix: '" + tok.prefix + "'");
        }
        if (tok.local.empty()) {
            Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                        "expected local name after '" + tok.prefix + ":'");
        }
        return make_iri(*ns + tok.local, tok);
    }

    // One term in subject/predicate/object position; handles ^^ datatypes.
    Term parse_term_token(bool as_predicate, const char* position) {
        Token tok = next_;
        switch (tok.type) {
            case TokenType::KeywordA:
                take();
                if (!as_predicate) {
                    Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                                "'a' is only valid in the predicate position");
                }
                return rdf_type();
            case TokenType::IriRef:
                take();
                return make_iri(tok.text, tok);
            case TokenType::PName:
                take();
                return expand_pname(tok);
            case TokenType::BlankLabel:
                take();
                if (as_predicate) {
                    Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                                "blank node is not allowed as predicate");
                }
                return Term::blank(tok.text);
            case TokenType::StringLit: {
                take();
                if (as_predicate) {
                    Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                                "literal is not allowed as predicate");
                }
                Term datatype = xsd_string();
                if (next_.type == TokenType::HatHat) {
                    take();
                    Token dt = next_;
                    if (dt.type == TokenType::IriRef) {
                        take();
                        datatype = make_iri(dt.text, dt);
                    } else if (dt.type == TokenType::PName) {
                        take();
                        datatype = expand_pname(dt);
                    } else {
                        Lexer::fail(ParseErrorKind::UnexpectedToken, dt.line, dt.column,
                                    "expected datatype IRI after '^^'");
                    }
                }
                return Term::literal(tok.text, datatype.value());
            }
            default:
                Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                            std::string("expected ") + position);
        }
    }

    Lexer lexer_;
    ParseOptions options_;
    Graph graph_;
    Token next_;
    std::set<std::string> declared_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).run();
}

Term parse_term(std::string_view text, const PrefixMap& prefixes) {
    Lexer lexer(text);
    Token tok = lexer.next();
    Term term = [&]() -> Term {
        switch (tok.type) {
            case TokenType::KeywordA:
                return rdf_type();
            case TokenType::IriRef:
                try {
                    return Term::iri(tok.text);
                } catch (const std::invalid_argument& e) {
                    Lexer::fail(ParseErrorKind::MalformedIri, tok.line, tok.column, e.what());
                }
            case TokenType::PName: {
                const std::string* ns = prefixes.find(tok.prefix);
                if (!ns) {
                    Lexer::fail(ParseErrorKind::UnknownPrefix, tok.line, tok.column,
                                "unknown prefix: '" + tok.prefix + "'");
                }
                if (tok.local.empty()) {
                    Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column,
                                "expected local name after '" + tok.prefix + ":'");
                }
                try {
                    return Term::iri(*ns + tok.local);
                } catch (const std::invalid_argument& e) {
                    Lexer::fail(ParseErrorKind::MalformedIri, tok.line, tok.column, e.what());
                }
            }
            case TokenType::BlankLabel:
                return Term::blank(tok.text);
            case TokenType::StringLit: {
                Token after = lexer.next();
                if (after.type == TokenType::HatHat) {
                    Token dt = lexer.next();
                    if (dt.type == TokenType::IriRef) {
                        return Term::literal(tok.text, dt.text);
                    }
                    if (dt.type == TokenType::PName) {
                        const std::string* ns = prefixes.find(dt.prefix);
                        if (!ns) {
                            Lexer::fail(ParseErrorKind::UnknownPrefix, dt.line, dt.column,
                                        "unknown prefix: '" + dt.prefix + "'");
                        }
                        return Term::literal(tok.text, *ns + dt.local);
                    }
                    Lexer::fail(ParseErrorKind::UnexpectedToken, dt.line, dt.column,
                                "expected datatype IRI after '^^'");
                }
                if (after.type != TokenType::EndOfFile) {
                    Lexer::fail(ParseErrorKind::UnexpectedToken, after.line, after.column,
                                "trailing input after term");
                }
                return Term::literal(tok.text, std::string(xsd_string().value()));
            }
            default:
                Lexer::fail(ParseErrorKind::UnexpectedToken, tok.line, tok.column, "expected a term");
        }
    }();
    Token end = lexer.next();
    if (end.type != TokenType::EndOfFile) {
        Lexer::fail(ParseErrorKind::UnexpectedToken, end.line, end.column,
                    "trailing input after term");
    }
    return term;
}

}  // namespace rdn
