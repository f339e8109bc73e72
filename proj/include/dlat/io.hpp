#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlat/errors.hpp"
#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"

namespace dlat {

enum class DocKind { lattice, poset };

/** A parsed input file. Line grammar, UTF-8:
      # comment to end of line
      type lattice|poset        (first significant line)
      element NAME              (needed only for isolated elements)
      cover UPPER LOWER         (UPPER covers LOWER; names declared implicitly)
    Canonical re-rendering is a fixed point of parse-then-render. */
struct InputDocument {
  DocKind kind = DocKind::lattice;
  std::vector<std::string> names;  // first-mention order
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::string> element_lines;  // explicitly declared names
};

inline InputDocument parse_input(std::string_view text) {
  InputDocument doc;
  bool have_type = false;
  std::set<std::string, std::less<>> known;
  auto mention = [&](const std::string& name) {
    if (known.insert(name).second) doc.names.push_back(name);
  };

  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_type) {
      if (tok[0] != "type" || tok.size() != 2 ||
          (tok[1] != "lattice" && tok[1] != "poset"))
        throw ParseError(line_no, "expected `type lattice` or `type poset`");
      doc.kind = tok[1] == "lattice" ? DocKind::lattice : DocKind::poset;
      have_type = true;
      continue;
    }
    if (tok[0] == "type") {
      throw ParseError(line_no, "duplicate type line");
    } else if (tok[0] == "element") {
      if (tok.size() != 2) throw ParseError(line_no, "element takes one name");
      doc.element_lines.push_back(tok[1]);
      mention(tok[1]);
    } else if (tok[0] == "cover") {
      if (tok.size() != 3)
        throw ParseError(line_no, "cover takes two names: UPPER LOWER");
      if (tok[1] == tok[2])
        throw ParseError(line_no, "self-cover: " + tok[1]);
      mention(tok[1]);
      mention(tok[2]);
      doc.covers.emplace_back(tok[1], tok[2]);
    } else {
      throw UnknownDirective(line_no, tok[0]);
    }
  }
  if (!have_type) throw ParseError(line_no, "missing type line");
  return doc;
}

/// Canonical bytes: type line, isolated elements sorted by name, then cover
/// lines sorted and deduplicated.
inline std::string render_document(const InputDocument& doc) {
  std::string out = doc.kind == DocKind::lattice ? "type lattice\n" : "type poset\n";
  std::set<std::string> covered;
  for (const auto& [u, l] : doc.covers) {
    covered.insert(u);
    covered.insert(l);
  }
  std::vector<std::string> isolated;
  for (const auto& n : doc.names)
    if (!covered.contains(n)) isolated.push_back(n);
  std::sort(isolated.begin(), isolated.end());
  for (const auto& n : isolated) out += "element " + n + "\n";

  std::vector<std::pair<std::string, std::string>> covers = doc.covers;
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (const auto& [u, l] : covers) out += "cover " + u + " " + l + "\n";
  return out;
}

struct BuiltPoset {
  Poset poset;
  // declared cover pairs that were transitively implied and got reduced away
  std::vector<std::pair<std::string, std::string>> redundant_covers;
};

inline BuiltPoset build_from_document(const InputDocument& doc) {
  std::set<std::string> declared;
  for (const auto& n : doc.element_lines)
    if (!declared.insert(n).second) throw DuplicateName(n);
  BuiltPoset b;
  // doc.names is in first-mention order and duplicate-free, so element
  // indices follow the file
  b.poset = build_partial_order(doc.names, doc.covers, &b.redundant_covers);
  return b;
}

inline InputDocument document_from_poset(const Poset& p, DocKind kind) {
  InputDocument doc;
  doc.kind = kind;
  doc.names = p.names();
  std::set<int> covered;
  for (const auto& cp : p.covers()) {
    doc.covers.emplace_back(p.name(cp.upper), p.name(cp.lower));
    covered.insert(cp.upper);
    covered.insert(cp.lower);
  }
  for (int v = 0; v < p.size(); ++v)
    if (!covered.contains(v)) doc.element_lines.push_back(p.name(v));
  return doc;
}

inline InputDocument document_from_lattice(const DistLattice& L) {
  return document_from_poset(L.order(), DocKind::lattice);
}

}  // namespace dlat
