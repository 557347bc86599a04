#include "egrp/spec_lang.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "egrp/automorphism.hpp"
#include "egrp/errors.hpp"
#include "egrp/homomorphism.hpp"

namespace egrp
{

namespace
{

std::string describe_expected(std::vector<std::string> const &expected)
{
  std::string result;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0)
      result += i + 1 == expected.size() ? " or " : ", ";
    result += expected[i];
  }
  return result;
}

} // anonymous namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         std::string const &found)
: GroupError("syntax error at offset " + std::to_string(offset) +
             ": expected " + describe_expected(expected) + ", found " + found),
  _offset(offset),
  _expected(std::move(expected))
{}

namespace
{

constexpr unsigned max_literal = 1000000;

GroupSpecPtr share(GroupSpec s)
{ return std::make_shared<GroupSpec const>(std::move(s)); }

class Parser
{
public:
  explicit Parser(std::string_view text) : _text(text) {}

  GroupSpec parse()
  {
    auto result = parse_product();
    skip_ws();
    if (_pos != _text.size())
      fail({"'x'", "end of input"});
    return result;
  }

private:
  GroupSpec parse_product()
  {
    auto left = parse_atom();
    for (;;) {
      skip_ws();
      if (!accept("x"))
        return left;
      auto right = parse_atom();
      left = GroupSpec{spec::Product{share(std::move(left)),
                                     share(std::move(right))}};
    }
  }

  GroupSpec parse_atom()
  {
    skip_ws();
    std::size_t const start = _pos;

    if (accept("Hol")) {
      expect("(");
      auto inner = parse_product();
      expect(")");
      return GroupSpec{spec::Hol{share(std::move(inner))}};
    }

    if (accept("Aut")) {
      expect("(");
      auto inner = parse_product();
      expect(")");
      return GroupSpec{spec::Aut{share(std::move(inner))}};
    }

    if (accept("sdp")) {
      expect("(");
      spec::Semidirect sd;
      sd.n = parse_int();
      expect(",");
      sd.m = parse_int();
      expect(",");
      sd.e = parse_int();
      expect(")");
      check_semidirect(sd, start);
      return GroupSpec{sd};
    }

    if (accept("perm"))
      return GroupSpec{parse_perm_literal(start)};

    if (accept("(")) {
      auto inner = parse_product();
      expect(")");
      return inner;
    }

    if (accept("Q8"))
      return GroupSpec{spec::Named{{NamedKind::quaternion8, 8, 1}}};

    if (accept("E")) {
      NamedGroup g{NamedKind::elementary_abelian, parse_int(), 1};
      expect("^");
      g.k = parse_int();
      return named(g, start);
    }

    static constexpr std::pair<char, NamedKind> letters[] = {
      {'C', NamedKind::cyclic},
      {'D', NamedKind::dihedral},
      {'S', NamedKind::symmetric},
      {'A', NamedKind::alternating},
    };
    for (auto const &[letter, kind] : letters) {
      if (accept(std::string_view(&letter, 1)))
        return named({kind, parse_int(), 1}, start);
    }

    fail({"'C'", "'D'", "'S'", "'A'", "'Q8'", "'E'", "'Hol('", "'Aut('",
          "'sdp('", "'perm['", "'('"});
  }

  GroupSpec named(NamedGroup g, std::size_t start)
  {
    try {
      validate(g);
    } catch (InvalidParameter const &e) {
      throw SemanticError(start, e.what());
    }
    return GroupSpec{spec::Named{g}};
  }

  spec::PermLiteral parse_perm_literal(std::size_t start)
  {
    spec::PermLiteral lit;
    expect("[");
    lit.degree = parse_int();
    if (lit.degree == 0)
      throw SemanticError(start, "permutation degree must be positive");
    expect("]");
    expect("{");

    do {
      skip_ws();
      std::size_t const gen_start = _pos;
      std::vector<std::vector<Point>> cycles;
      do {
        cycles.push_back(parse_cycle());
        skip_ws();
      } while (peek("("));

      try {
        Perm::from_cycles(lit.degree, cycles);
      } catch (InvalidParameter const &e) {
        throw SemanticError(gen_start, e.what());
      }
      lit.generators.push_back(std::move(cycles));
    } while (accept(","));

    expect("}");
    return lit;
  }

  // Points inside a cycle are separated by spaces.
  std::vector<Point> parse_cycle()
  {
    expect("(");
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (accept(")"))
        return cycle;
      if (!cycle.empty() && _pos > 0 &&
          !std::isspace(static_cast<unsigned char>(_text[_pos - 1])))
        fail({"' '", "')'"});
      cycle.push_back(parse_int());
    }
  }

  void check_semidirect(spec::Semidirect const &sd, std::size_t start)
  {
    if (sd.n == 0 || sd.m == 0)
      throw SemanticError(start, "sdp orders must be positive");
    if (sd.n == 1)
      return;
    if (std::gcd(sd.e, sd.n) != 1)
      throw SemanticError(start, "sdp exponent must be coprime to n");

    unsigned long long power = 1;
    for (unsigned i = 0; i < sd.m; ++i)
      power = power * sd.e % sd.n;
    if (power != 1)
      throw SemanticError(start, "sdp exponent e must satisfy e^m = 1 mod n");
  }

  unsigned parse_int()
  {
    skip_ws();
    std::size_t const start = _pos;
    unsigned long long value = 0;
    while (_pos < _text.size() &&
           std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      value = value * 10 + static_cast<unsigned>(_text[_pos] - '0');
      if (value > max_literal)
        throw SemanticError(start, "integer literal too large");
      ++_pos;
    }
    if (_pos == start)
      fail({"integer"});
    return static_cast<unsigned>(value);
  }

  void skip_ws()
  {
    while (_pos < _text.size() &&
           std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool peek(std::string_view token) const
  { return _text.substr(_pos, token.size()) == token; }

  bool accept(std::string_view token)
  {
    if (!peek(token))
      return false;
    _pos += token.size();
    return true;
  }

  void expect(std::string_view token)
  {
    skip_ws();
    if (!accept(token))
      fail({"'" + std::string(token) + "'"});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const
  {
    std::string found = _pos < _text.size()
                          ? "'" + std::string(1, _text[_pos]) + "'"
                          : "end of input";
    throw SyntaxError(_pos, std::move(expected), found);
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

void render_to(std::ostream &os, GroupSpec const &s);

struct Renderer
{
  std::ostream &os;

  void operator()(spec::Named const &n) const { os << to_string(n.group); }

  void operator()(spec::Product const &p) const
  {
    render_to(os, *p.left);
    os << " x ";
    bool const nested = std::holds_alternative<spec::Product>(p.right->node);
    if (nested)
      os << '(';
    render_to(os, *p.right);
    if (nested)
      os << ')';
  }

  void operator()(spec::Semidirect const &sd) const
  { os << "sdp(" << sd.n << ',' << sd.m << ',' << sd.e << ')'; }

  void operator()(spec::Hol const &h) const
  {
    os << "Hol(";
    render_to(os, *h.inner);
    os << ')';
  }

  void operator()(spec::Aut const &a) const
  {
    os << "Aut(";
    render_to(os, *a.inner);
    os << ')';
  }

  void operator()(spec::PermLiteral const &lit) const
  {
    os << "perm[" << lit.degree << "]{";
    for (std::size_t g = 0; g < lit.generators.size(); ++g) {
      if (g > 0)
        os << ',';
      for (auto const &cycle : lit.generators[g]) {
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i)
          os << (i ? " " : "") << cycle[i];
        os << ')';
      }
    }
    os << '}';
  }
};

void render_to(std::ostream &os, GroupSpec const &s)
{ std::visit(Renderer{os}, s.node); }

struct Evaluator
{
  Limits const &limits;

  FiniteGroup operator()(spec::Named const &n) const
  { return make_named(n.group, limits); }

  FiniteGroup operator()(spec::Product const &p) const
  {
    return direct_product(evaluate(*p.left, limits),
                          evaluate(*p.right, limits), limits).group;
  }

  FiniteGroup operator()(spec::Semidirect const &sd) const
  {
    auto N = make_named({NamedKind::cyclic, sd.n, 1}, limits);
    auto H = make_named({NamedKind::cyclic, sd.m, 1}, limits);
    std::vector<Perm> actions(H.generators().size(), power_map(N, sd.e));
    return semidirect(N, H, actions, limits).group;
  }

  FiniteGroup operator()(spec::Hol const &h) const
  { return holomorph(evaluate(*h.inner, limits), limits).group; }

  FiniteGroup operator()(spec::Aut const &a) const
  { return automorphism_group(evaluate(*a.inner, limits), limits).as_perm_group; }

  FiniteGroup operator()(spec::PermLiteral const &lit) const
  {
    std::vector<Perm> gens;
    for (auto const &cycles : lit.generators)
      gens.push_back(Perm::from_cycles(lit.degree, cycles));
    return FiniteGroup::close(lit.degree, std::move(gens), limits);
  }
};

} // anonymous namespace

bool operator==(GroupSpec const &a, GroupSpec const &b)
{
  if (a.node.index() != b.node.index())
    return false;

  return std::visit(
    [&](auto const &lhs) -> bool {
      using T = std::decay_t<decltype(lhs)>;
      auto const &rhs = std::get<T>(b.node);
      if constexpr (std::is_same_v<T, spec::Named>) {
        return lhs.group == rhs.group;
      } else if constexpr (std::is_same_v<T, spec::Product>) {
        return *lhs.left == *rhs.left && *lhs.right == *rhs.right;
      } else if constexpr (std::is_same_v<T, spec::Semidirect>) {
        return lhs.n == rhs.n && lhs.m == rhs.m && lhs.e == rhs.e;
      } else if constexpr (std::is_same_v<T, spec::PermLiteral>) {
        return lhs.degree == rhs.degree && lhs.generators == rhs.generators;
      } else {
        return *lhs.inner == *rhs.inner;
      }
    },
    a.node);
}

GroupSpec parse_spec(std::string_view text)
{ return Parser(text).parse(); }

std::string render(GroupSpec const &s)
{
  std::ostringstream ss;
  render_to(ss, s);
  return ss.str();
}

FiniteGroup evaluate(GroupSpec const &s, Limits const &limits)
{ return std::visit(Evaluator{limits}, s.node); }

FiniteGroup evaluate(std::string_view text, Limits const &limits)
{ return evaluate(parse_spec(text), limits); }

} // namespace egrp
