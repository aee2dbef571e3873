#include "qhh/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qhh {

RatRelation canonicalize_relation(const Quiver& q, std::vector<RatTerm> terms, int bound,
                                  int line) {
  if (terms.empty()) throw ParseError("empty relation", line);
  std::stable_sort(terms.begin(), terms.end(), [&](const RatTerm& a, const RatTerm& b) {
    return path_less(q, a.path, b.path);
  });
  std::vector<RatTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().path == t.path)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const RatTerm& t) { return sgn(t.coeff) == 0; }),
               merged.end());
  if (merged.empty()) throw ParseError("relation is zero after merging terms", line);
  int src = merged[0].path.src;
  int tgt = path_target(q, merged[0].path);
  for (const auto& t : merged) {
    if (t.path.src != src || path_target(q, t.path) != tgt)
      throw ParseError("terms not parallel", line);
    if (t.path.length() < 2 || t.path.length() > bound - 1)
      throw ParseError("term length " + std::to_string(t.path.length()) +
                           " outside [2, " + std::to_string(bound - 1) + "]",
                       line);
  }
  return RatRelation{std::move(merged), src, tgt};
}

namespace {

bool name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '.' && c != '/' && c != '+' &&
         c != '-' && c != '#';
}

// <term> := [sign][<int>[/<uint>]]<arrow>(.<arrow>)*
RatTerm parse_term(const Quiver& q, const std::string& tok, bool negate, int line) {
  std::size_t i = 0;
  mpq_class coeff = 1;
  bool neg = negate;
  if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
    if (tok[i] == '-') neg = !neg;
    ++i;
  }
  std::size_t num_start = i;
  while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
  if (i > num_start) {
    std::string num = tok.substr(num_start, i - num_start);
    std::string den = "1";
    if (i < tok.size() && tok[i] == '/') {
      ++i;
      std::size_t den_start = i;
      while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
      if (i == den_start) throw ParseError("malformed coefficient in term: " + tok, line);
      den = tok.substr(den_start, i - den_start);
    }
    coeff = mpq_class(num + "/" + den);
    coeff.canonicalize();
    if (sgn(coeff) == 0) throw ParseError("zero coefficient in term: " + tok, line);
  }
  if (neg) coeff = -coeff;
  if (i >= tok.size()) throw ParseError("term has no path: " + tok, line);

  std::vector<int> arrows;
  std::size_t start = i;
  while (start < tok.size()) {
    std::size_t dot = tok.find('.', start);
    std::string name = dot == std::string::npos ? tok.substr(start) : tok.substr(start, dot - start);
    if (name.empty()) throw ParseError("empty arrow name in term: " + tok, line);
    auto a = q.find_arrow(name);
    if (!a) throw ParseError("unknown arrow: " + name, line);
    arrows.push_back(*a);
    if (dot == std::string::npos) break;
    start = dot + 1;
    if (start >= tok.size()) throw ParseError("trailing '.' in term: " + tok, line);
  }
  Path p{q.arrow(arrows[0]).src, arrows};
  if (!path_valid(q, p)) throw ParseError("arrows do not compose in term: " + tok, line);
  return RatTerm{coeff, p};
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Presentation parse_bqp(std::istream& in) {
  Presentation p;
  bool have_bound = false;
  struct PendingRel {
    std::vector<std::string> toks;
    int line;
  };
  std::vector<PendingRel> pending;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "vertex") {
      if (toks.size() != 2) throw ParseError("expected: vertex <name>", lineno);
      for (char c : toks[1])
        if (!name_char(c)) throw ParseError("invalid character in name: " + toks[1], lineno);
      p.quiver.add_vertex(toks[1]);
    } else if (kw == "arrow") {
      if (toks.size() != 4) throw ParseError("expected: arrow <name> <src> <tgt>", lineno);
      for (char c : toks[1])
        if (!name_char(c)) throw ParseError("invalid character in name: " + toks[1], lineno);
      if (std::isdigit(static_cast<unsigned char>(toks[1][0])))
        throw ParseError("arrow name may not start with a digit: " + toks[1], lineno);
      p.quiver.add_arrow(toks[1], toks[2], toks[3]);
    } else if (kw == "bound") {
      if (toks.size() != 2) throw ParseError("expected: bound <m>", lineno);
      try {
        p.bound = std::stoi(toks[1]);
      } catch (...) {
        throw ParseError("bad bound: " + toks[1], lineno);
      }
      if (p.bound < 2) throw ParseError("bound must be >= 2", lineno);
      have_bound = true;
    } else if (kw == "rel") {
      if (toks.size() < 2) throw ParseError("expected: rel <term> ((+|-) <term>)*", lineno);
      pending.push_back({std::vector<std::string>(toks.begin() + 1, toks.end()), lineno});
    } else {
      throw ParseError("unknown directive: " + kw, lineno);
    }
  }
  if (p.quiver.vertex_count() == 0) throw ParseError("no vertices declared");
  if (!have_bound) throw ParseError("missing 'bound <m>' line");

  for (const auto& rel : pending) {
    std::vector<RatTerm> terms;
    bool expect_term = true;
    bool negate = false;
    for (const auto& tok : rel.toks) {
      if (!expect_term && (tok == "+" || tok == "-")) {
        negate = tok == "-";
        expect_term = true;
        continue;
      }
      if (!expect_term) throw ParseError("expected '+' or '-' between terms", rel.line);
      terms.push_back(parse_term(p.quiver, tok, negate, rel.line));
      expect_term = false;
      negate = false;
    }
    if (expect_term) throw ParseError("dangling sign in relation", rel.line);
    p.relations.push_back(canonicalize_relation(p.quiver, std::move(terms), p.bound, rel.line));
  }
  return p;
}

Presentation parse_bqp_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open file: " + filename);
  return parse_bqp(in);
}

namespace {

std::string coeff_str(const mpq_class& c) {
  mpq_class a = abs(c);
  return a == 1 ? std::string() : a.get_str();
}

}  // namespace

std::string relation_str(const Quiver& q, const RatRelation& r) {
  std::string s;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const auto& t = r.terms[i];
    bool neg = sgn(t.coeff) < 0;
    if (i == 0) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    s += coeff_str(t.coeff) + path_str(q, t.path);
  }
  return s;
}

std::string serialize_bqp(const Presentation& p) {
  std::string out;
  for (int v = 0; v < p.quiver.vertex_count(); ++v)
    out += "vertex " + p.quiver.vertex_name(v) + "\n";
  for (int a = 0; a < p.quiver.arrow_count(); ++a) {
    const Arrow& ar = p.quiver.arrow(a);
    out += "arrow " + ar.name + " " + p.quiver.vertex_name(ar.src) + " " +
           p.quiver.vertex_name(ar.tgt) + "\n";
  }
  out += "bound " + std::to_string(p.bound) + "\n";
  for (const auto& r : p.relations) out += "rel " + relation_str(p.quiver, r) + "\n";
  return out;
}

}  // namespace qhh
