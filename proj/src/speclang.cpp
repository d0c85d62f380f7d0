#include "gconn/speclang.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace gconn {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, static_cast<int>(pos) + 1);
  }
};

Rational parse_rational_at(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) ||
                                c.s[c.pos] == '/'))
    ++c.pos;
  auto q = parse_rational(c.s.substr(start, c.pos - start));
  if (!q) {
    c.pos = start;
    c.fail("expected a rational literal");
  }
  return *q;
}

long parse_unsigned_at(Cursor& c, const std::string& what) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) c.fail("expected " + what);
  return std::stol(c.s.substr(start, c.pos - start));
}

// term := rational | [rational '*'] 'z' int ['^' int]
Cyclotomic parse_term(Cursor& c) {
  Rational q(1);
  bool have_q = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    q = parse_rational_at(c);
    have_q = true;
    if (c.peek() == '*') {
      ++c.pos;
      if (c.peek() != 'z') c.fail("expected a root-of-unity term after '*'");
    } else if (c.peek() != 'z') {
      return Cyclotomic(q);
    }
  }
  if (c.peek() != 'z') {
    if (have_q) return Cyclotomic(q);
    c.fail("expected a rational or a root-of-unity term");
  }
  ++c.pos; // 'z'
  long m = parse_unsigned_at(c, "a root-of-unity order after 'z'");
  if (m <= 0) c.fail("root-of-unity order must be positive");
  long k = 1;
  if (c.peek() == '^') {
    ++c.pos;
    k = parse_unsigned_at(c, "an exponent after '^'");
  }
  return Cyclotomic(q) * Cyclotomic::root_of_unity(static_cast<unsigned>(m), k);
}

Cyclotomic parse_cyclotomic_at(Cursor& c) {
  Cyclotomic total;
  bool first = true;
  while (true) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = p == '-' ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      break;
    }
    Cyclotomic t = parse_term(c);
    total = sign > 0 ? total + t : total - t;
    first = false;
    p = c.peek();
    if (p != '+' && p != '-') break;
  }
  return total;
}

CycVector parse_cyc_list(const std::string& text, int line) {
  CycVector out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    Cursor c{item};
    c.line = line;
    if (c.done()) c.fail("empty list entry");
    out.push_back(parse_cyclotomic_at(c));
    if (!c.done()) c.fail("trailing characters in list entry");
  }
  if (out.empty()) throw ParseError("empty coordinate list", line, 1);
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

} // namespace

Cyclotomic parse_cyclotomic(const std::string& text) {
  Cursor c{text};
  if (c.done()) c.fail("empty cyclotomic literal");
  Cyclotomic v = parse_cyclotomic_at(c);
  if (!c.done()) c.fail("trailing characters in cyclotomic literal");
  return v;
}

SpecDocument parse_spec_document(const std::string& text) {
  SpecDocument doc;
  std::map<std::string, std::pair<std::string, int>> connection, options;
  std::string section;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    std::string l = trimmed(raw.substr(0, raw.find('#')));
    if (l.empty()) continue;
    if (l.front() == '[') {
      if (l.back() != ']') throw ParseError("unterminated section header", line, 1);
      section = l.substr(1, l.size() - 2);
      if (section != "connection" && section != "options")
        throw ParseError("unknown section '" + section + "'", line, 1);
      continue;
    }
    size_t eq = l.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line, 1);
    std::string key = trimmed(l.substr(0, eq));
    std::string value = trimmed(l.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError("empty key or value", line, 1);
    if (section == "options")
      options[key] = {value, line};
    else if (section == "connection")
      connection[key] = {value, line};
    else
      throw ParseError("key outside of a section", line, 1);
  }

  auto take = [&](std::map<std::string, std::pair<std::string, int>>& m, const std::string& k)
      -> std::optional<std::pair<std::string, int>> {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    auto v = it->second;
    m.erase(it);
    return v;
  };

  auto group = take(connection, "group");
  if (!group) throw ParseError("missing required key 'group'", line, 1);
  auto st = parse_simple_type(group->first);
  if (!st)
    throw ParseError("'" + group->first + "' is not a supported simple type", group->second, 1);
  doc.spec.base = build_root_system(*st);
  const int rank = doc.spec.base->rank;

  doc.spec.kind = ConnectionKind::GeneralizedFG;
  if (auto kind = take(connection, "kind")) {
    if (kind->first == "fg") doc.spec.kind = ConnectionKind::GeneralizedFG;
    else if (kind->first == "airy") doc.spec.kind = ConnectionKind::Airy;
    else if (kind->first == "coxeter") doc.spec.kind = ConnectionKind::CoxeterFormal;
    else throw ParseError("kind must be fg, airy, or coxeter", kind->second, 1);
  }
  if (auto a = take(connection, "a")) {
    Cursor c{a->first};
    c.line = a->second;
    doc.spec.a = parse_cyclotomic_at(c);
    if (!c.done()) c.fail("trailing characters after 'a'");
    if (doc.spec.a.is_zero()) throw ParseError("'a' must be nonzero", a->second, 1);
  }
  doc.spec.x = CycVector(rank, Cyclotomic(0));
  if (auto x = take(connection, "x")) {
    doc.spec.x = parse_cyc_list(x->first, x->second);
    if (static_cast<int>(doc.spec.x.size()) != rank)
      throw ParseError("'x' needs " + std::to_string(rank) + " coordinates", x->second, 1);
  }
  if (auto z = take(connection, "z")) {
    if (doc.spec.kind != ConnectionKind::Airy)
      throw ParseError("'z' is only valid for airy connections", z->second, 1);
    doc.spec.z = parse_cyc_list(z->first, z->second);
    if (static_cast<int>(doc.spec.z->size()) != rank)
      throw ParseError("'z' needs " + std::to_string(rank) + " coordinates", z->second, 1);
  }
  if (auto r = take(connection, "r")) {
    Cursor c{r->first};
    c.line = r->second;
    doc.spec.r = static_cast<int>(parse_unsigned_at(c, "a positive integer for 'r'"));
    if (!c.done()) c.fail("trailing characters after 'r'");
  }

  // coeff_<i> keys define the formal type
  std::map<int, CycVector> coords;
  for (auto it = connection.begin(); it != connection.end();) {
    if (it->first.rfind("coeff_", 0) == 0) {
      int i;
      try {
        i = std::stoi(it->first.substr(6));
      } catch (...) {
        throw ParseError("bad coefficient key '" + it->first + "'", it->second.second, 1);
      }
      coords.emplace(i, parse_cyc_list(it->second.first, it->second.second));
      it = connection.erase(it);
    } else {
      ++it;
    }
  }
  if (!coords.empty()) {
    if (doc.spec.kind != ConnectionKind::CoxeterFormal)
      throw ParseError("coefficient lists require kind = coxeter", line, 1);
    try {
      doc.spec.formal_type = make_formal_type(doc.spec.base, doc.spec.r, coords);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line, 1);
    }
  } else if (doc.spec.kind == ConnectionKind::CoxeterFormal) {
    throw ParseError("kind = coxeter requires coeff_<i> lists", line, 1);
  }

  if (!connection.empty())
    throw ParseError("unknown key '" + connection.begin()->first + "'",
                     connection.begin()->second.second, 1);

  if (auto f = take(options, "format")) {
    if (f->first != "human" && f->first != "machine")
      throw ParseError("format must be human or machine", f->second, 1);
    doc.format = f->first;
  }
  if (auto ob = take(options, "orbit_bound")) {
    Cursor c{ob->first};
    c.line = ob->second;
    doc.options.orbit_bound = static_cast<size_t>(parse_unsigned_at(c, "an orbit bound"));
    if (!c.done()) c.fail("trailing characters after 'orbit_bound'");
  }
  if (auto bm = take(options, "b3_mode")) {
    if (bm->first == "d4") doc.options.b3_via_d4 = true;
    else if (bm->first == "b3") doc.options.b3_via_d4 = false;
    else throw ParseError("b3_mode must be d4 or b3", bm->second, 1);
  }
  if (!options.empty())
    throw ParseError("unknown option '" + options.begin()->first + "'",
                     options.begin()->second.second, 1);
  return doc;
}

} // namespace gconn
