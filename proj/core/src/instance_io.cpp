// SPDX-License-Identifier: Apache-2.0
#include "latwidth/instance_io.hpp"

#include <cctype>
#include <sstream>

namespace latwidth {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + what),
      line_(line),
      column_(column) {}

const char* kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kHForm: return "H";
    case InstanceKind::kVForm: return "V";
    case InstanceKind::kCone: return "CONE";
    case InstanceKind::kConeIp: return "CONEIP";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

bool is_integer_text(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(const Line& line, const Token& tok) {
  if (!is_integer_text(tok.text))
    throw ParseError(line.number, tok.column, "expected an integer, got '" + tok.text + "'");
  std::string digits = tok.text[0] == '+' ? tok.text.substr(1) : tok.text;
  return Integer(digits, 10);
}

Rational parse_rational(const Line& line, const Token& tok) {
  auto slash = tok.text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(line, tok));
  Token num{tok.text.substr(0, slash), tok.column};
  Token den{tok.text.substr(slash + 1), tok.column + slash + 1};
  Integer n = parse_integer(line, num);
  Integer d = parse_integer(line, den);
  if (d == 0) throw ParseError(line.number, den.column, "zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::size_t parse_dim(const Line& line, const Token& tok) {
  Integer n = parse_integer(line, tok);
  if (n < 1 || n > 64) throw ParseError(line.number, tok.column, "dimension must be in 1..64");
  return n.get_ui();
}

void expect_count(const Line& line, std::size_t first, std::size_t count) {
  const std::size_t got = line.tokens.size() - first;
  if (got != count) {
    std::size_t col = got > count ? line.tokens[first + count].column
                                  : line.tokens.back().column + line.tokens.back().text.size();
    throw ParseError(line.number, col,
                     "expected " + std::to_string(count) + " numbers, got " + std::to_string(got));
  }
}

IntVector int_row(const Line& line, std::size_t first, std::size_t count) {
  expect_count(line, first, count);
  IntVector r;
  for (std::size_t i = first; i < line.tokens.size(); ++i)
    r.push_back(parse_integer(line, line.tokens[i]));
  return r;
}

template <typename Build>
auto located(std::size_t line, Build&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(line, 1, e.what());
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty instance");
  const Line& head = lines.front();
  if (head.tokens.size() != 2)
    throw ParseError(head.number, head.tokens.front().column, "header must be 'KIND n'");
  const std::string& kind = head.tokens[0].text;
  const std::size_t n = parse_dim(head, head.tokens[1]);

  std::optional<IntVector> objective;
  std::vector<const Line*> body;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0].text == "OBJ") {
      if (objective) throw ParseError(l.number, 1, "duplicate OBJ row");
      objective = int_row(l, 1, n);
    } else {
      body.push_back(&l);
    }
  }
  const std::size_t last_line = lines.back().number;

  auto need_rows = [&](std::size_t count) {
    if (body.size() != count) {
      std::size_t at = body.size() > count ? body[count]->number : last_line + 1;
      throw ParseError(at, 1,
                       "expected " + std::to_string(count) + " rows after the header, got " +
                           std::to_string(body.size()));
    }
  };

  if (kind == "H") {
    need_rows(n + 1);
    IntMatrix a(n + 1, n);
    IntVector b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      IntVector r = int_row(*body[i], 0, n + 1);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = r[j];
      b[i] = r[n];
    }
    return located(head.number, [&] { return InstanceFile{HSimplex(a, b), objective}; });
  }
  if (kind == "V") {
    need_rows(n + 1);
    IntMatrix v(n, n + 1);
    for (std::size_t j = 0; j <= n; ++j) v.set_column(j, int_row(*body[j], 0, n));
    return located(head.number, [&] { return InstanceFile{VSimplex(v), objective}; });
  }
  if (kind == "CONE") {
    need_rows(n);
    IntMatrix g(n, n);
    for (std::size_t j = 0; j < n; ++j) g.set_column(j, int_row(*body[j], 0, n));
    return located(head.number, [&] { return InstanceFile{Cone(g), objective}; });
  }
  if (kind == "CONEIP") {
    std::optional<RatVector> apex;
    std::vector<IntVector> gens;
    std::vector<IntVector> rows;
    for (const Line* l : body) {
      const std::string& tag = l->tokens[0].text;
      if (tag == "APEX") {
        if (apex) throw ParseError(l->number, 1, "duplicate APEX row");
        expect_count(*l, 1, n);
        RatVector p;
        for (std::size_t i = 1; i < l->tokens.size(); ++i)
          p.push_back(parse_rational(*l, l->tokens[i]));
        apex = std::move(p);
      } else if (tag == "GEN") {
        gens.push_back(int_row(*l, 1, n));
      } else if (tag == "ROW") {
        rows.push_back(int_row(*l, 1, n + 1));
      } else {
        throw ParseError(l->number, l->tokens[0].column,
                         "expected APEX, GEN, ROW or OBJ, got '" + tag + "'");
      }
    }
    if (!apex) throw ParseError(last_line + 1, 1, "missing APEX row");
    if (gens.size() != n)
      throw ParseError(last_line + 1, 1,
                       "expected " + std::to_string(n) + " GEN rows, got " + std::to_string(gens.size()));
    if (rows.empty()) throw ParseError(last_line + 1, 1, "missing ROW constraints");
    IntMatrix a(rows.size(), n);
    IntVector b;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
      b.push_back(rows[i][n]);
    }
    return located(head.number, [&] {
      ConeIpInstance inst{a, b, ShiftedCone(*apex, Cone(IntMatrix::from_columns(gens))), objective};
      return InstanceFile{std::move(inst), objective};
    });
  }
  throw ParseError(head.number, head.tokens[0].column,
                   "unknown instance kind '" + kind + "' (expected H, V, CONE or CONEIP)");
}

std::string format_instance(const InstanceFile& inst) {
  std::ostringstream os;
  auto row = [&os](const auto& values) {
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i].get_str();
    os << '\n';
  };
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, HSimplex>) {
          os << "H " << body.dim() << '\n';
          for (std::size_t i = 0; i < body.a().rows(); ++i) {
            IntVector r = body.a().row_vector(i);
            r.push_back(body.b()[i]);
            row(r);
          }
        } else if constexpr (std::is_same_v<T, VSimplex>) {
          os << "V " << body.dim() << '\n';
          for (std::size_t j = 0; j < body.verts().cols(); ++j) row(body.vertex(j));
        } else if constexpr (std::is_same_v<T, Cone>) {
          os << "CONE " << body.dim() << '\n';
          for (std::size_t j = 0; j < body.dim(); ++j) row(body.generators().column(j));
        } else {
          const std::size_t n = body.shifted.cone.dim();
          os << "CONEIP " << n << '\n' << "APEX ";
          row(body.shifted.apex);
          for (std::size_t j = 0; j < n; ++j) {
            os << "GEN ";
            row(body.shifted.cone.generators().column(j));
          }
          for (std::size_t i = 0; i < body.a.rows(); ++i) {
            IntVector r = body.a.row_vector(i);
            r.push_back(body.b[i]);
            os << "ROW ";
            row(r);
          }
        }
      },
      inst.body);
  if (inst.objective) {
    os << "OBJ ";
    row(*inst.objective);
  }
  return os.str();
}

}  // namespace latwidth
