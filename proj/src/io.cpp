#include "sgt/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sgt {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    std::vector<Line> significant_lines(std::istream& in) {
      std::vector<Line> out;
      std::string       text;
      std::size_t       number = 0;
      while (std::getline(in, text)) {
        ++number;
        std::istringstream       words(text);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
          tokens.push_back(w);
        }
        if (tokens.empty() || tokens.front().front() == '#') {
          continue;
        }
        out.push_back({number, std::move(tokens)});
      }
      return out;
    }

    std::size_t to_number(Line const& line, std::string const& token) {
      std::size_t value = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line.number, "expected a non-negative integer, got '"
                                          + token + "'");
      }
      return value;
    }

    class Reader {
     public:
      explicit Reader(std::vector<Line> lines) : _lines(std::move(lines)) {}

      Line const& next(std::string const& what) {
        if (_pos == _lines.size()) {
          throw ParseError(_lines.empty() ? 1 : _lines.back().number + 1,
                           "unexpected end of input, expected " + what);
        }
        return _lines[_pos++];
      }

      std::vector<std::size_t> row(std::size_t width, std::string const& what) {
        Line const& line = next(what);
        if (line.tokens.size() != width) {
          throw ParseError(line.number,
                           what + " must have " + std::to_string(width)
                               + " entries, found "
                               + std::to_string(line.tokens.size()));
        }
        std::vector<std::size_t> out;
        for (auto const& t : line.tokens) {
          out.push_back(to_number(line, t));
        }
        return out;
      }

      void finish() const {
        if (_pos != _lines.size()) {
          throw ParseError(_lines[_pos].number, "unexpected trailing data");
        }
      }

     private:
      std::vector<Line> _lines;
      std::size_t       _pos = 0;
    };

    std::vector<std::vector<Elem>> read_table(Reader& reader, std::size_t n) {
      std::vector<std::vector<Elem>> rows;
      for (std::size_t i = 0; i < n; ++i) {
        auto const values = reader.row(n, "table row " + std::to_string(i));
        rows.emplace_back(values.begin(), values.end());
      }
      return rows;
    }

  }  // namespace

  InputFormat parse_format(std::string_view name) {
    if (name == "auto") {
      return InputFormat::automatic;
    } else if (name == "cayley") {
      return InputFormat::cayley;
    } else if (name == "transformation") {
      return InputFormat::transformation;
    } else if (name == "rees") {
      return InputFormat::rees;
    }
    throw ParseError(0, "unknown format '" + std::string(name) + "'");
  }

  ParsedInput parse_input(std::istream& in, InputFormat format) {
    auto lines = significant_lines(in);
    if (lines.empty()) {
      throw ParseError(1, "empty input");
    }
    Line header = lines.front();
    lines.erase(lines.begin());

    auto const keyword = header.tokens.front();
    bool const named   = keyword == "cayley" || keyword == "transformation"
                       || keyword == "rees";
    if (named) {
      auto const declared = parse_format(keyword);
      if (format != InputFormat::automatic && format != declared) {
        throw ParseError(header.number, "input declares format '" + keyword
                                            + "' but another was requested");
      }
      format = declared;
      header.tokens.erase(header.tokens.begin());
    } else if (format == InputFormat::automatic) {
      throw ParseError(header.number, "unknown format '" + keyword + "'");
    }

    Reader      reader(std::move(lines));
    ParsedInput out;
    switch (format) {
      case InputFormat::cayley: {
        if (header.tokens.size() != 1) {
          throw ParseError(header.number, "expected 'cayley n'");
        }
        std::size_t const n = to_number(header, header.tokens[0]);
        if (n == 0) {
          throw ParseError(header.number, "a semigroup needs at least one element");
        }
        out.semigroup = FiniteSemigroup::from_cayley(n, read_table(reader, n));
        break;
      }
      case InputFormat::transformation: {
        if (header.tokens.size() != 2) {
          throw ParseError(header.number, "expected 'transformation m k'");
        }
        std::size_t const m = to_number(header, header.tokens[0]);
        std::size_t const k = to_number(header, header.tokens[1]);
        if (m == 0 || k == 0) {
          throw ParseError(header.number, "degree and generator count must be positive");
        }
        std::vector<Transformation> gens;
        for (std::size_t g = 0; g < k; ++g) {
          Line const& line   = reader.next("generator " + std::to_string(g));
          if (line.tokens.size() != m) {
            throw ParseError(line.number, "generator must have "
                                              + std::to_string(m) + " images");
          }
          Transformation t;
          for (auto const& token : line.tokens) {
            std::size_t x = to_number(line, token);
            if (x >= m) {
              throw ParseError(line.number, "image " + token + " out of range");
            }
            t.images.push_back(Elem(x));
          }
          gens.push_back(std::move(t));
        }
        out.semigroup  = from_transformations(m, gens);
        out.generators = std::move(gens);
        break;
      }
      case InputFormat::rees: {
        if (header.tokens.size() != 3 && header.tokens.size() != 4) {
          throw ParseError(header.number, "expected 'rees g i j [0|1]'");
        }
        std::string const flag = header.tokens.size() == 4 ? header.tokens[3] : "0";
        if (flag != "0" && flag != "1" && flag != "zero") {
          throw ParseError(header.number, "expected 0, 1 or 'zero', got '"
                                              + flag + "'");
        }
        bool const with_zero = flag != "0";
        std::size_t const g = to_number(header, header.tokens[0]);
        std::size_t const i = to_number(header, header.tokens[1]);
        std::size_t const j = to_number(header, header.tokens[2]);
        if (g == 0 || i == 0 || j == 0) {
          throw ParseError(header.number, "sizes must be positive");
        }
        ReesStructure r;
        r.group     = FiniteSemigroup::from_cayley(g, read_table(reader, g));
        r.i_size    = i;
        r.j_size    = j;
        r.with_zero = with_zero;
        for (std::size_t row = 0; row < j; ++row) {
          Line const& line = reader.next("row " + std::to_string(row) + " of P");
          if (line.tokens.size() != i) {
            throw ParseError(line.number, "row of P must have "
                                              + std::to_string(i) + " entries");
          }
          for (auto const& token : line.tokens) {
            if (token == "-") {
              r.p_matrix.emplace_back(std::nullopt);
            } else {
              r.p_matrix.emplace_back(Elem(to_number(line, token)));
            }
          }
        }
        out.semigroup = rees_construct(r).semigroup;
        out.rees      = std::move(r);
        break;
      }
      case InputFormat::automatic:
        break;
    }
    reader.finish();
    return out;
  }

  ParsedInput parse_file(std::string const& path, InputFormat format) {
    if (path == "-") {
      return parse_input(std::cin, format);
    }
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, "cannot open '" + path + "'");
    }
    return parse_input(in, format);
  }

  void write_cayley(std::ostream& out, FiniteSemigroup const& s) {
    out << "cayley " << s.size() << '\n';
    for (Elem a = 0; a < s.size(); ++a) {
      for (Elem b = 0; b < s.size(); ++b) {
        out << (b == 0 ? "" : " ") << s.mul(a, b);
      }
      out << '\n';
    }
  }

  void write_rees(std::ostream& out, ReesStructure const& r) {
    out << "rees " << r.group.size() << ' ' << r.i_size << ' ' << r.j_size
        << (r.with_zero ? " 1" : " 0") << '\n';
    for (Elem a = 0; a < r.group.size(); ++a) {
      for (Elem b = 0; b < r.group.size(); ++b) {
        out << (b == 0 ? "" : " ") << r.group.mul(a, b);
      }
      out << '\n';
    }
    for (std::size_t j = 0; j < r.j_size; ++j) {
      for (std::size_t i = 0; i < r.i_size; ++i) {
        auto const entry = r.p(j, i);
        out << (i == 0 ? "" : " ");
        if (entry) {
          out << *entry;
        } else {
          out << '-';
        }
      }
      out << '\n';
    }
  }

}  // namespace sgt
