#include "tcx/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "tcx/error.hpp"

namespace tcx {

  namespace {

    enum class Tok {
      ident,
      integer,
      lparen,
      rparen,
      lbracket,
      rbracket,
      caret,
      semicolon,
      equals,
      comma,
      minus,
      end
    };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1;
      std::size_t        i = 0;
      auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
          if (text[i] == '\n') {
            ++line;
            col = 1;
          } else {
            ++col;
          }
          ++i;
        }
      };
      while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            advance(1);
          }
          continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          advance(1);
          continue;
        }
        std::size_t l = line, cl = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[j]))
                     || text[j] == '_')) {
            ++j;
          }
          out.push_back({Tok::ident, std::string(text.substr(i, j - i)), l, cl});
          advance(j - i);
          continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
          }
          out.push_back({Tok::integer, std::string(text.substr(i, j - i)), l, cl});
          advance(j - i);
          continue;
        }
        Tok kind;
        switch (c) {
          case '(': kind = Tok::lparen; break;
          case ')': kind = Tok::rparen; break;
          case '[': kind = Tok::lbracket; break;
          case ']': kind = Tok::rbracket; break;
          case '^': kind = Tok::caret; break;
          case ';': kind = Tok::semicolon; break;
          case '=': kind = Tok::equals; break;
          case ',': kind = Tok::comma; break;
          case '-': kind = Tok::minus; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
        }
        out.push_back({kind, std::string(1, c), l, cl});
        advance(1);
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _tokens(tokenize(text)) {}

      Presentation run() {
        while (peek().kind != Tok::end) {
          statement();
        }
        return std::move(_pres);
      }

     private:
      Token const& peek() const {
        return _tokens[_pos];
      }

      Token const& take() {
        return _tokens[_pos++];
      }

      [[noreturn]] void fail(std::string const& msg, Token const& at) const {
        throw ParseError(msg, at.line, at.column);
      }

      Token const& expect(Tok kind, char const* what) {
        if (peek().kind != kind) {
          fail(std::string("expected ") + what
                   + (peek().kind == Tok::end ? " before end of input"
                                              : ", found '" + peek().text + "'"),
               peek());
        }
        return take();
      }

      std::size_t integer(Token const& tok) {
        try {
          return std::stoul(tok.text);
        } catch (std::exception const&) {
          fail("integer out of range", tok);
        }
      }

      void statement() {
        Token const& kw = expect(Tok::ident, "a statement keyword");
        if (kw.text == "gens") {
          gens_statement();
        } else if (kw.text == "let") {
          let_statement();
        } else if (kw.text == "rel") {
          _pres.add_relator(word());
        } else if (kw.text == "sub") {
          sub_statement();
        } else if (kw.text == "coxeter") {
          coxeter_statement(kw);
        } else {
          fail("unknown statement '" + kw.text + "'", kw);
        }
        expect(Tok::semicolon, "';'");
      }

      void check_fresh(Token const& name) {
        if (_pres.find_generator(name.text) || _lets.count(name.text) != 0) {
          fail("name '" + name.text + "' is already defined", name);
        }
      }

      void gens_statement() {
        if (peek().kind != Tok::ident) {
          fail("expected at least one generator name", peek());
        }
        while (peek().kind == Tok::ident) {
          Token const& name = take();
          check_fresh(name);
          _pres.add_generator(name.text, true);
        }
      }

      void let_statement() {
        Token const& name = expect(Tok::ident, "a name");
        check_fresh(name);
        expect(Tok::equals, "'='");
        _lets[name.text] = _pres.reduce(word());
      }

      void sub_statement() {
        Token const& name = expect(Tok::ident, "a subgroup name");
        expect(Tok::equals, "'='");
        std::vector<Word> gens;
        while (peek().kind != Tok::semicolon && peek().kind != Tok::end) {
          gens.push_back(factor());
        }
        _pres.add_subgroup(name.text, std::move(gens));
      }

      void coxeter_statement(Token const& kw) {
        expect(Tok::lbracket, "'['");
        std::vector<unsigned> labels;
        while (true) {
          Token const& tok = expect(Tok::integer, "an edge label");
          auto k = integer(tok);
          if (k < 2) {
            fail("Coxeter label must be at least 2", tok);
          }
          labels.push_back(static_cast<unsigned>(k));
          if (peek().kind == Tok::comma) {
            take();
            continue;
          }
          break;
        }
        expect(Tok::rbracket, "']'");
        if (labels.size() + 1 != _pres.ngens()) {
          fail("coxeter symbol of rank " + std::to_string(labels.size() + 1)
                   + " needs exactly that many generators, "
                   + std::to_string(_pres.ngens()) + " declared",
               kw);
        }
        for (gen_index i = 0; i < _pres.ngens(); ++i) {
          for (gen_index j = i + 1; j < _pres.ngens(); ++j) {
            unsigned k = (j == i + 1) ? labels[i] : 2;
            _pres.add_relator(Word::of({i, j}).pow(k));
          }
        }
      }

      bool starts_factor() const {
        auto k = peek().kind;
        return k == Tok::ident || k == Tok::lparen || k == Tok::integer;
      }

      Word word() {
        Word w;
        while (starts_factor()) {
          w *= factor();
        }
        return w;
      }

      Word primary() {
        Token const& tok = peek();
        if (tok.kind == Tok::lparen) {
          take();
          Word w = word();
          expect(Tok::rparen, "')'");
          return w;
        }
        if (tok.kind == Tok::integer) {
          take();
          if (tok.text != "1") {
            fail("only 1 may stand for a word", tok);
          }
          return Word();
        }
        take();
        if (auto g = _pres.find_generator(tok.text)) {
          return Word::generator(*g);
        }
        auto it = _lets.find(tok.text);
        if (it == _lets.end()) {
          fail("undefined name '" + tok.text + "'", tok);
        }
        return it->second;
      }

      Word factor() {
        Word w = primary();
        while (peek().kind == Tok::caret) {
          take();
          Token const& tok = peek();
          if (tok.kind == Tok::minus) {
            fail("power must be at least 1", tok);
          }
          if (tok.kind == Tok::integer) {
            take();
            auto k = integer(tok);
            if (k < 1) {
              fail("power must be at least 1", tok);
            }
            w = w.pow(k);
          } else if (tok.kind == Tok::lparen || tok.kind == Tok::ident) {
            Word y = primary();
            w = y.inverse() * w * y;
          } else {
            fail("expected an exponent after '^'", tok);
          }
        }
        return w;
      }

      std::vector<Token>          _tokens;
      std::size_t                 _pos = 0;
      Presentation                _pres;
      std::map<std::string, Word> _lets;
    };

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    return Parser(text).run();
  }

  Presentation load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open presentation file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  std::string to_dsl(Presentation const& p) {
    std::ostringstream out;
    auto const&        names = p.gen_names();
    out << "gens";
    for (gen_index g = 0; g < p.ngens(); ++g) {
      if (!p.is_involutive(g)) {
        throw Error("to_dsl: generator '" + names[g] + "' is not involutive");
      }
      out << ' ' << names[g];
    }
    out << ";\n";
    for (auto const& r : p.extra_relators()) {
      out << "rel " << to_string(r, names) << ";\n";
    }
    for (auto const& [name, gens] : p.subgroups()) {
      out << "sub " << name << " =";
      for (auto const& w : gens) {
        out << (w.size() == 1 ? " " : " (") << to_string(w, names)
            << (w.size() == 1 ? "" : ")");
      }
      out << ";\n";
    }
    return out.str();
  }

}  // namespace tcx
