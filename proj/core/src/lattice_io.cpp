#include "kappalat/lattice_io.hpp"

#include <algorithm>
#include <sstream>

namespace kappalat {

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Line with '#' comment removed, whitespace-trimmed.
std::string payload(const std::string& line) {
  auto hash = line.find('#');
  return strip(hash == std::string::npos ? line : line.substr(0, hash));
}

bool parse_int(const std::string& tok, int& out) {
  if (tok.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoi(tok, &used);
  } catch (...) {
    return false;
  }
  return used == tok.size();
}

}  // namespace

FiniteLattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  int n = -1;
  bool header_seen = false;
  std::vector<CoverPair> covers;
  std::vector<std::string> names;
  bool any_name = false;

  while (std::getline(in, line)) {
    ++lineno;
    std::string body = payload(line);
    if (body.empty()) continue;

    if (!header_seen) {
      if (body != "lattice-v1")
        throw ParseError(lineno, "expected lattice-v1 header");
      header_seen = true;
      continue;
    }
    if (n < 0) {
      if (body.rfind("n=", 0) != 0 || !parse_int(body.substr(2), n) || n <= 0)
        throw ParseError(lineno, "expected n=<positive count>");
      names.assign(n, "");
      continue;
    }

    std::istringstream toks(body);
    std::string kw;
    toks >> kw;
    if (kw == "cover") {
      int a, b;
      std::string sa, sb, extra;
      toks >> sa >> sb;
      if (toks >> extra) throw ParseError(lineno, "trailing tokens after cover");
      if (!parse_int(sa, a) || !parse_int(sb, b))
        throw ParseError(lineno, "cover expects two integers");
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw ParseError(lineno, "cover index out of range for n=" +
                                     std::to_string(n));
      covers.emplace_back(a, b);
    } else if (kw == "name") {
      std::string si;
      int i;
      toks >> si;
      if (!parse_int(si, i) || i < 0 || i >= n)
        throw ParseError(lineno, "name index out of range");
      std::string rest;
      std::getline(toks, rest);
      rest = strip(rest);
      if (rest.empty()) throw ParseError(lineno, "empty name");
      names[i] = rest;
      any_name = true;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }
  if (!header_seen) throw ParseError(lineno, "missing lattice-v1 header");
  if (n < 0) throw ParseError(lineno, "missing n=<count> line");
  if (!any_name) names.clear();
  return build_lattice(n, std::move(covers), std::move(names));
}

std::string serialize_lattice(const FiniteLattice& L) {
  std::ostringstream out;
  out << "lattice-v1\n";
  out << "n=" << L.size() << "\n";
  if (!L.names().empty())
    for (Elem x = 0; x < L.size(); ++x)
      if (!L.names()[x].empty()) out << "name " << x << " " << L.names()[x] << "\n";
  for (auto [a, b] : L.covers()) out << "cover " << a << " " << b << "\n";
  return out.str();
}

namespace {

std::string interval_list(const std::vector<ModInterval>& iv) {
  if (iv.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(iv[i].a) + ".." + std::to_string(iv[i].b);
  }
  return s;
}

}  // namespace

std::string serialize_tors_lattice(const TorsLattice& t) {
  std::ostringstream out;
  out << serialize_lattice(t.lattice);
  out << "# meta algebra n=" << t.algebra.n_vertices
      << " forbid=" << interval_list(t.algebra.forbidden_min) << "\n";
  for (Elem x = 0; x < t.lattice.size(); ++x) {
    out << "# meta brick " << x << " ";
    const Bits& bs = t.element_bricks[x];
    if (bs.none()) {
      out << "-";
    } else {
      bool first = true;
      for (auto i = bs.find_first(); i != Bits::npos; i = bs.find_next(i)) {
        if (!first) out << ",";
        out << t.algebra.module_name(static_cast<int>(i));
        first = false;
      }
    }
    out << "\n";
  }
  return out.str();
}

TorsFileMeta parse_tors_meta(const std::string& text) {
  TorsFileMeta meta;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.rfind("# meta ", 0) != 0) continue;
    std::istringstream toks(s.substr(7));
    std::string kind;
    toks >> kind;
    if (kind == "algebra") {
      std::string field;
      while (toks >> field) {
        if (field.rfind("n=", 0) == 0) {
          if (!parse_int(field.substr(2), meta.n))
            throw ParseError(lineno, "bad meta algebra n=");
        } else if (field.rfind("forbid=", 0) == 0) {
          std::string list = field.substr(7);
          if (list != "none") {
            std::istringstream items(list);
            std::string item;
            while (std::getline(items, item, ',')) {
              auto dots = item.find("..");
              int a, b;
              if (dots == std::string::npos ||
                  !parse_int(item.substr(0, dots), a) ||
                  !parse_int(item.substr(dots + 2), b))
                throw ParseError(lineno, "bad forbid interval '" + item + "'");
              meta.forbidden.push_back({a, b});
            }
          }
        } else {
          throw ParseError(lineno, "unknown meta algebra field");
        }
      }
      meta.present = true;
    } else if (kind == "brick") {
      std::string si, list;
      int i;
      toks >> si >> list;
      if (!parse_int(si, i) || i < 0)
        throw ParseError(lineno, "bad meta brick index");
      if (static_cast<int>(meta.element_bricks.size()) <= i)
        meta.element_bricks.resize(i + 1);
      if (list != "-" && !list.empty()) {
        std::istringstream items(list);
        std::string item;
        while (std::getline(items, item, ','))
          meta.element_bricks[i].push_back(item);
      }
      meta.present = true;
    }
  }
  return meta;
}

}  // namespace kappalat
