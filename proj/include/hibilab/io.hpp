#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "hibilab/errors.hpp"
#include "hibilab/lattice.hpp"
#include "hibilab/monomial.hpp"
#include "hibilab/poset.hpp"
#include "hibilab/simplicial.hpp"

namespace hibilab {

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

/// Non-empty lines with '#' comments removed, split on whitespace.
inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string t; ss >> t;) line.tokens.push_back(t);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(line, tok, "expected an integer");
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(line, tok, "expected an integer");
  }
}

inline std::size_t header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ParseError(0, "", "empty input, expected '" + keyword + "'");
  const Line& h = lines.front();
  if (h.tokens[0] != keyword) throw ParseError(h.number, h.tokens[0], "expected '" + keyword + "'");
  if (h.tokens.size() != 2) throw ParseError(h.number, h.tokens.back(), "expected '" + keyword + " <count>'");
  const int n = parse_int(h.tokens[1], h.number);
  if (n < 0) throw ParseError(h.number, h.tokens[1], "count must be nonnegative");
  return static_cast<std::size_t>(n);
}

/// Optional "names ..." line right after the header.
inline std::vector<std::string> names_line(const std::vector<Line>& lines, std::size_t& pos, std::size_t n) {
  if (pos < lines.size() && lines[pos].tokens[0] == "names") {
    const Line& l = lines[pos++];
    if (l.tokens.size() != n + 1) throw ParseError(l.number, l.tokens[0], "expected " + std::to_string(n) + " names");
    return {l.tokens.begin() + 1, l.tokens.end()};
  }
  return {};
}

inline int element_ref(const std::string& tok, const std::vector<std::string>& names, int n, int line) {
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[i] == tok) return i;
  const int v = parse_int(tok, line);
  if (v < 0 || v >= n) throw ParseError(line, tok, "element out of range");
  return v;
}

/// "a < b" lines into relation pairs.
inline std::vector<std::pair<int, int>> cover_lines(const std::vector<Line>& lines, std::size_t pos, int n,
                                                    const std::vector<std::string>& names) {
  std::vector<std::pair<int, int>> out;
  for (; pos < lines.size(); ++pos) {
    const Line& l = lines[pos];
    if (l.tokens.size() != 3 || l.tokens[1] != "<")
      throw ParseError(l.number, l.tokens[0], "expected a relation of the form 'a < b'");
    out.emplace_back(element_ref(l.tokens[0], names, n, l.number), element_ref(l.tokens[2], names, n, l.number));
  }
  return out;
}

inline Poset poset_from_lines(const std::vector<Line>& lines, const std::string& keyword, std::vector<std::string>* warnings) {
  const std::size_t n = header(lines, keyword);
  if (n > 64) throw ParseError(lines.front().number, lines.front().tokens[1], "at most 64 elements supported");
  std::size_t pos = 1;
  auto names = names_line(lines, pos, n);
  auto rel = cover_lines(lines, pos, static_cast<int>(n), names);
  std::vector<std::pair<int, int>> shortcuts;
  Poset p = Poset::from_relations(static_cast<int>(n), rel, names, &shortcuts);
  if (warnings)
    for (auto [a, b] : shortcuts)
      warnings->push_back("ignored non-cover relation " + p.name(a) + " < " + p.name(b) + " (implied by other relations)");
  return p;
}

}  // namespace detail

/// Poset text: `poset n`, optional `names ...`, then one `a < b` per line.
/// Relations implied by others are dropped and reported in `warnings`.
inline Poset parse_poset(std::istream& in, std::vector<std::string>* warnings = nullptr) {
  return detail::poset_from_lines(detail::tokenize(in), "poset", warnings);
}

inline Poset parse_poset(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return parse_poset(in, warnings);
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path.string(), "cannot open file");
  return in;
}

inline Poset read_poset(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
  auto in = open_input(path);
  return parse_poset(in, warnings);
}

/// Lattice text: `lattice-from-poset <file>` (J of that poset; relative paths
/// resolve against `base`), or `lattice n`, optional `names ...`, then covers.
inline Lattice parse_lattice(std::istream& in, const std::filesystem::path& base = ".",
                             std::vector<std::string>* warnings = nullptr) {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "", "empty lattice input");
  const auto& h = lines.front();
  if (h.tokens[0] == "lattice-from-poset") {
    if (h.tokens.size() != 2) throw ParseError(h.number, h.tokens[0], "expected 'lattice-from-poset <file>'");
    std::filesystem::path p = h.tokens[1];
    if (p.is_relative()) p = base / p;
    return lattice_of_ideals(read_poset(p, warnings));
  }
  return build_lattice(detail::poset_from_lines(lines, "lattice", warnings));
}

inline Lattice parse_lattice(const std::string& text, const std::filesystem::path& base = ".") {
  std::istringstream in(text);
  return parse_lattice(in, base);
}

inline Lattice read_lattice(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
  auto in = open_input(path);
  return parse_lattice(in, path.parent_path().empty() ? "." : path.parent_path(), warnings);
}

/// One lattice element from a token: `{}` / `{a,c}` label sets, element
/// names, or integer indices (in the numbering of an explicit lattice file,
/// else the lattice's own numbering).
inline int parse_element(const std::string& tok, const Lattice& L, int line = 0) {
  if (!tok.empty() && tok.front() == '{') {
    if (tok.back() != '}') throw ParseError(line, tok, "unterminated label set");
    const std::string inner = tok.substr(1, tok.size() - 2);
    Mask label = 0;
    std::stringstream ss(inner);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty()) continue;
      int found = -1;
      for (int p = 0; p < L.irreducibles().size(); ++p)
        if (L.irreducibles().name(p) == item) found = p;
      if (found < 0) throw ParseError(line, item, "unknown join-irreducible");
      label |= bit(found);
    }
    const int e = L.element_with_label(label);
    if (e < 0) throw ParseError(line, tok, "label set is not an element of the lattice");
    return e;
  }
  for (int e = 0; e < L.size(); ++e)
    if (L.name(e) == tok) return e;
  const int v = detail::parse_int(tok, line);
  if (v < 0 || v >= L.size()) throw ParseError(line, tok, "element out of range");
  return L.from_source_index(v);
}

/// Segment text: `segment all`, or `segment` followed by element tokens
/// (on the same or following lines).
inline Subset parse_segment(std::istream& in, const Lattice& L) {
  const auto lines = detail::tokenize(in);
  if (lines.empty() || lines.front().tokens[0] != "segment")
    throw ParseError(lines.empty() ? 0 : lines.front().number, lines.empty() ? "" : lines.front().tokens[0], "expected 'segment'");
  Subset s = L.empty_subset();
  bool first = true;
  for (const auto& l : lines) {
    for (std::size_t i = first ? 1 : 0; i < l.tokens.size(); ++i) {
      if (l.tokens[i] == "all") {
        s = L.full_subset();
        continue;
      }
      s.set(parse_element(l.tokens[i], L, l.number));
    }
    first = false;
  }
  return s;
}

inline Subset parse_segment(const std::string& text, const Lattice& L) {
  std::istringstream in(text);
  return parse_segment(in, L);
}

/// Element list on one line without the keyword ("all" allowed).
inline Subset parse_element_list(const std::string& text, const Lattice& L) {
  return parse_segment("segment " + text, L);
}

/// Complex text: `complex n`, optional `names ...`, then one facet per line
/// as vertex names or indices; `{}` is the empty facet.
inline SimplicialComplex parse_complex(std::istream& in) {
  const auto lines = detail::tokenize(in);
  const std::size_t n = detail::header(lines, "complex");
  if (n > 64) throw ParseError(lines.front().number, lines.front().tokens[1], "at most 64 vertices supported");
  std::size_t pos = 1;
  auto names = detail::names_line(lines, pos, n);
  std::vector<Mask> facets;
  for (; pos < lines.size(); ++pos) {
    Mask f = 0;
    for (const auto& t : lines[pos].tokens) {
      if (t == "{}") continue;
      f |= bit(detail::element_ref(t, names, static_cast<int>(n), lines[pos].number));
    }
    facets.push_back(f);
  }
  return SimplicialComplex(VarSpace::plain(static_cast<int>(n), names), std::move(facets));
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

inline SimplicialComplex read_complex(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_complex(in);
}

/// Monomial text: `1`, `a*b*c`, or compact `abc` when all names are single characters.
inline SquarefreeMonomial parse_monomial(const std::string& tok, const VarSpace& vars, int line = 0) {
  if (tok == "1") return SquarefreeMonomial::one();
  Mask m = 0;
  auto add = [&](const std::string& name) {
    const int v = vars.find(name);
    if (v < 0) throw ParseError(line, name, "unknown variable");
    if (m & bit(v)) throw NotSquarefree("monomial '" + tok + "' repeats variable " + name);
    m |= bit(v);
  };
  if (tok.find('*') != std::string::npos || !vars.single_char_names()) {
    std::stringstream ss(tok);
    for (std::string part; std::getline(ss, part, '*');) {
      if (part.empty()) throw ParseError(line, tok, "empty factor");
      add(part);
    }
  } else {
    for (char c : tok) add(std::string(1, c));
  }
  return SquarefreeMonomial{m};
}

/// Ideal text: `ideal`, then `vars ...`, then one generator per line.
inline MonomialIdeal parse_ideal(std::istream& in) {
  const auto lines = detail::tokenize(in);
  if (lines.empty() || lines[0].tokens[0] != "ideal") throw ParseError(lines.empty() ? 0 : lines[0].number, lines.empty() ? "" : lines[0].tokens[0], "expected 'ideal'");
  if (lines.size() < 2 || lines[1].tokens[0] != "vars")
    throw ParseError(lines.size() < 2 ? 0 : lines[1].number, lines.size() < 2 ? "" : lines[1].tokens[0], "expected 'vars ...'");
  const std::vector<std::string> names(lines[1].tokens.begin() + 1, lines[1].tokens.end());
  if (names.size() > 64) throw ParseError(lines[1].number, "vars", "at most 64 variables supported");
  const VarSpace vars = VarSpace::plain(static_cast<int>(names.size()), names);
  std::vector<SquarefreeMonomial> gens;
  for (std::size_t i = 2; i < lines.size(); ++i)
    for (const auto& t : lines[i].tokens) gens.push_back(parse_monomial(t, vars, lines[i].number));
  return MonomialIdeal(vars, std::move(gens));
}

inline MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

inline std::string format_ideal(const MonomialIdeal& I) {
  std::ostringstream out;
  out << "ideal\nvars";
  for (const auto& n : I.vars().names()) out << ' ' << n;
  out << "\n";
  for (const auto& g : I.gens()) out << to_string(g, I.vars()) << "\n";
  return out.str();
}

inline std::string format_complex(const SimplicialComplex& d) {
  std::ostringstream out;
  out << "complex " << d.num_vertices() << "\nnames";
  for (const auto& n : d.vars().names()) out << ' ' << n;
  out << "\n";
  for (Mask f : d.facets()) {
    if (f == 0) {
      out << "{}\n";
      continue;
    }
    bool first = true;
    for_each_bit(f, [&](int v) {
      out << (first ? "" : " ") << d.vars().name(v);
      first = false;
    });
    out << "\n";
  }
  return out.str();
}

inline std::string format_poset(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << "\n";
  if (p.has_names()) {
    out << "names";
    for (const auto& n : p.names()) out << ' ' << n;
    out << "\n";
  }
  auto cov = p.covers();
  std::sort(cov.begin(), cov.end());
  for (auto [a, b] : cov) out << p.name(a) << " < " << p.name(b) << "\n";
  return out.str();
}

inline std::string format_segment(const Subset& s, const Lattice& L) {
  std::ostringstream out;
  out << "segment";
  for (int e : members_of(s)) out << ' ' << L.name(e);
  out << "\n";
  return out.str();
}

}  // namespace hibilab
