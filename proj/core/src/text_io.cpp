#include "fragmerge/text_io.hpp"

#include <fstream>
#include <sstream>

#include "fragmerge/error.hpp"

namespace fragmerge {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int atom_index(std::string_view name, const AtomUniverse& universe, int line) {
  auto idx = universe.index_of(name);
  if (!idx)
    fail(Errc::UnknownAtom,
         "line " + std::to_string(line) + ": unknown atom '" + std::string(name) + "'");
  return *idx;
}

} // namespace

AtomUniverse parse_universe(std::string_view csv) {
  std::vector<std::string> names;
  for (std::string_view part : split(csv, ',')) {
    part = trim(part);
    if (part.empty()) fail(Errc::BadUniverse, "empty atom name in universe list");
    if (AtomUniverse::is_reserved_name(part))
      fail(Errc::BadUniverse, "atom name '" + std::string(part) + "' uses the reserved '_' prefix");
    names.emplace_back(part);
  }
  return AtomUniverse(std::move(names));
}

KnowledgeBase parse_kb(std::string_view text, const AtomUniverse& universe) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (lines.empty() || trim(lines[0]).empty())
    fail(Errc::Syntax, "line 1: expected a fragment tag (full|horn|krom|1cnf)");
  Fragment fragment = fragment_from_string(trim(lines[0]));

  std::vector<Clause> clauses;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    Clause c;
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      bool negated = tok.front() == '-';
      std::string_view name = negated ? std::string_view(tok).substr(1) : std::string_view(tok);
      if (name.empty())
        fail(Errc::Syntax, "line " + std::to_string(line_no) + ": bare '-' literal");
      std::uint32_t bit = 1u << atom_index(name, universe, line_no);
      if (((negated ? c.positives : c.negatives) & bit) != 0)
        fail(Errc::Syntax, "line " + std::to_string(line_no) + ": atom '" + std::string(name) +
                               "' appears with both polarities");
      (negated ? c.negatives : c.positives) |= bit;
    }
    if (c.width() == 0)
      fail(Errc::Syntax, "line " + std::to_string(line_no) + ": empty clause");
    if (!clause_fits(fragment, c))
      fail(Errc::FragmentViolation,
           "line " + std::to_string(line_no) + ": clause '" + std::string(line) +
               "' does not fit the " + std::string(to_string(fragment)) + " fragment");
    clauses.push_back(c);
  }
  return KnowledgeBase(universe, fragment, std::move(clauses));
}

std::string format_kb(const KnowledgeBase& kb) {
  std::string out{to_string(kb.fragment())};
  out += '\n';
  for (const Clause& c : kb.clauses()) {
    bool first = true;
    for (int i = 0; i < kb.universe().size(); ++i) {
      std::uint32_t bit = 1u << i;
      if (((c.positives | c.negatives) & bit) == 0) continue;
      if (!first) out += ' ';
      if (c.negatives & bit) out += '-';
      out += kb.universe().name(i);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Interpretation parse_interpretation(std::string_view text, const AtomUniverse& universe) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    fail(Errc::Syntax, "interpretation must look like {a,b} or {}");
  s = s.substr(1, s.size() - 2);
  Interpretation w;
  if (trim(s).empty()) return w;
  for (std::string_view part : split(s, ',')) {
    part = trim(part);
    auto idx = universe.index_of(part);
    if (!idx) fail(Errc::UnknownAtom, "unknown atom '" + std::string(part) + "'");
    w.bits |= 1u << *idx;
  }
  return w;
}

ModelSet parse_model_set(std::string_view text, const AtomUniverse& universe) {
  std::vector<Interpretation> members;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    members.push_back(parse_interpretation(line, universe));
  }
  return ModelSet(universe, std::move(members));
}

std::string format_interpretation(Interpretation w, const AtomUniverse& universe) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < universe.size(); ++i) {
    if ((w.bits >> i) & 1u) {
      if (!first) out += ',';
      out += universe.name(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string format_model_set(const ModelSet& ms) {
  std::string out;
  for (Interpretation w : ms.members()) {
    out += format_interpretation(w, ms.universe());
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::Io, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(Errc::Io, "write failed for '" + path + "'");
}

} // namespace fragmerge
