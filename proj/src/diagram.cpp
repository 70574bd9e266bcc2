#include "khova/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace khova {

std::array<PositionPair, 2> Crossing::smoothing(int which) const {
  const bool oriented = which == 0;
  // With pd[1] incoming, the oriented smoothing pairs each incoming end with
  // the outgoing end of the other strand: a-d and b-c.
  if (oriented == second_strand_enters_at_1) return {PositionPair{0, 3}, PositionPair{1, 2}};
  return {PositionPair{0, 1}, PositionPair{2, 3}};
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

namespace {

struct Occurrence {
  std::size_t crossing;
  int position;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

// Direction of every pd slot along the strand traversal: true = incoming.
// Requires every crossing edge to occur exactly twice.
struct Orientation {
  std::vector<std::array<bool, 4>> incoming;
  std::size_t components = 0;
};

template <class Label>
Orientation orient(const std::vector<std::array<Label, 4>>& pds) {
  std::map<Label, std::vector<Occurrence>> where;
  for (std::size_t k = 0; k < pds.size(); ++k)
    for (int p = 0; p < 4; ++p) where[pds[k][p]].push_back({k, p});

  Orientation out;
  out.incoming.assign(pds.size(), {false, false, false, false});
  std::vector<std::array<bool, 4>> seen(pds.size(), {false, false, false, false});

  auto walk = [&](Occurrence start) {
    Occurrence in = start;
    while (!seen[in.crossing][in.position]) {
      const int exit_pos = (in.position + 2) % 4;
      seen[in.crossing][in.position] = true;
      seen[in.crossing][exit_pos] = true;
      out.incoming[in.crossing][in.position] = true;
      const auto& occ = where.at(pds[in.crossing][exit_pos]);
      const Occurrence here{in.crossing, exit_pos};
      in = occ[0] == here ? occ[1] : occ[0];
    }
    ++out.components;
  };

  for (std::size_t k = 0; k < pds.size(); ++k)
    if (!seen[k][0]) walk({k, 0});
  for (std::size_t k = 0; k < pds.size(); ++k)
    for (int p = 0; p < 4; ++p)
      if (!seen[k][p]) walk({k, p});
  return out;
}

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Distinct labels in id order.
std::vector<std::string> ordered_labels(const DiagramDraft& draft) {
  std::set<std::string> unique;
  for (const auto& c : draft.crossings) unique.insert(c.pd.begin(), c.pd.end());
  unique.insert(draft.loops.begin(), draft.loops.end());
  std::vector<std::string> labels(unique.begin(), unique.end());
  const bool numeric = std::all_of(labels.begin(), labels.end(),
                                   [](const std::string& s) { return as_integer(s).has_value(); });
  if (numeric) {
    std::stable_sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return *as_integer(a) < *as_integer(b);
    });
  }
  return labels;
}

std::string sign_char(CrossingSign s) { return s == CrossingSign::Positive ? "+" : "-"; }

std::string record_text(const CrossingRecord& r) {
  return "X(" + r.pd[0] + "," + r.pd[1] + "," + r.pd[2] + "," + r.pd[3] + ")" + sign_char(r.sign);
}

}  // namespace

ValidationReport validate(const DiagramDraft& draft) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::string subject, std::string message) {
    report.violations.push_back({kind, std::move(subject), std::move(message)});
  };

  if (draft.crossings.empty() && draft.loops.empty()) {
    add(Violation::Kind::EmptyDiagram, "", "diagram has no crossings and no loops");
    return report;
  }

  std::map<std::string, int> count;
  for (const auto& c : draft.crossings)
    for (const auto& e : c.pd) ++count[e];
  std::map<std::string, int> loop_count;
  for (const auto& e : draft.loops) ++loop_count[e];

  bool incidence_ok = true;
  for (const auto& [edge, n] : count) {
    if (n != 2) {
      incidence_ok = false;
      add(Violation::Kind::EdgeIncidence, edge,
          "edge " + edge + " appears " + std::to_string(n) + " times (expected 2)");
    }
  }
  for (const auto& [edge, n] : loop_count) {
    if (n != 1 || count.count(edge) != 0) {
      add(Violation::Kind::EdgeIncidence, edge, "loop edge " + edge + " is not a separate component");
    }
  }

  std::set<std::array<std::string, 4>> records;
  for (const auto& c : draft.crossings) {
    if (!records.insert(c.pd).second)
      add(Violation::Kind::DuplicateCrossing, record_text(c), "duplicate crossing record " + record_text(c));
  }

  if (draft.marked_edge && count.count(*draft.marked_edge) == 0 && loop_count.count(*draft.marked_edge) == 0)
    add(Violation::Kind::MarkedEdgeUnknown, *draft.marked_edge, "marked edge unknown: " + *draft.marked_edge);

  if (incidence_ok && !draft.crossings.empty()) {
    std::vector<std::array<std::string, 4>> pds;
    for (const auto& c : draft.crossings) pds.push_back(c.pd);
    const Orientation o = orient(pds);
    for (std::size_t k = 0; k < pds.size(); ++k) {
      if (!o.incoming[k][0] || o.incoming[k][2])
        add(Violation::Kind::Orientation, record_text(draft.crossings[k]),
            "crossing " + record_text(draft.crossings[k]) +
                " is inconsistent with the strand orientation (first entry must be incoming)");
    }
  }
  return report;
}

KnotDiagram KnotDiagram::from_draft(const DiagramDraft& draft) {
  const ValidationReport report = validate(draft);
  if (!report.ok()) throw ValidationError("invalid diagram: " + report.summary());

  KnotDiagram d;
  d.names_ = ordered_labels(draft);
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < d.names_.size(); ++i) id[d.names_[i]] = static_cast<int>(i);
  d.loop_.assign(d.names_.size(), false);
  for (const auto& e : draft.loops) d.loop_[static_cast<std::size_t>(id.at(e))] = true;

  std::vector<std::array<int, 4>> pds;
  for (const auto& rec : draft.crossings) {
    Crossing c;
    for (int p = 0; p < 4; ++p) c.pd[p] = EdgeLabel{id.at(rec.pd[p])};
    c.sign = rec.sign;
    (c.is_black() ? d.n_black_ : d.n_white_)++;
    d.crossings_.push_back(c);
    pds.push_back({c.pd[0].id, c.pd[1].id, c.pd[2].id, c.pd[3].id});
  }
  const Orientation o = orient(pds);
  for (std::size_t k = 0; k < d.crossings_.size(); ++k) d.crossings_[k].second_strand_enters_at_1 = o.incoming[k][1];
  d.components_ = o.components + draft.loops.size();
  if (draft.marked_edge) d.marked_ = EdgeLabel{id.at(*draft.marked_edge)};
  return d;
}

std::optional<EdgeLabel> KnotDiagram::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return EdgeLabel{static_cast<int>(i)};
  return std::nullopt;
}

KnotDiagram KnotDiagram::with_marked_edge(std::string_view name) const {
  const auto e = find_edge(name);
  if (!e) throw ValidationError("invalid diagram: marked edge unknown: " + std::string(name));
  KnotDiagram out = *this;
  out.marked_ = e;
  return out;
}

DiagramDraft KnotDiagram::to_draft() const {
  DiagramDraft draft;
  for (const auto& c : crossings_) {
    CrossingRecord rec;
    for (int p = 0; p < 4; ++p) rec.pd[p] = edge_name(c.pd[p]);
    rec.sign = c.sign;
    draft.crossings.push_back(std::move(rec));
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (loop_[i]) draft.loops.push_back(names_[i]);
  if (marked_) draft.marked_edge = edge_name(*marked_);
  return draft;
}

KnotDiagram parse_braid_word(std::string_view text, int strands) {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  std::vector<int> word;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("bad braid letter '" + token + "'");
    if (v == 0 || v >= strands || -v >= strands)
      throw ParseError("braid letter " + token + " out of range for " + std::to_string(strands) + " strands");
    word.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      if (token.size() > 16) throw ParseError("bad braid letter '" + token + "...'");
      token.push_back(ch);
    }
  }
  flush();

  const std::size_t n = word.size();
  const auto ns = static_cast<std::size_t>(strands);
  // touches[p] = crossings meeting position p, bottom to top.
  std::vector<std::vector<std::size_t>> touches(ns);
  std::vector<std::array<std::size_t, 2>> slot(n);  // index of crossing within touches[l], touches[r]
  for (std::size_t k = 0; k < n; ++k) {
    const auto l = static_cast<std::size_t>(std::abs(word[k]) - 1);
    slot[k] = {touches[l].size(), touches[l + 1].size()};
    touches[l].push_back(k);
    touches[l + 1].push_back(k);
  }
  // Segment (p, j) ends at the bottom of touches[p][j]; offsets[p] is its first id.
  std::vector<std::size_t> offsets(ns + 1, 0);
  for (std::size_t p = 0; p < ns; ++p) offsets[p + 1] = offsets[p] + std::max<std::size_t>(touches[p].size(), 1);
  auto seg = [&](std::size_t p, std::size_t j) { return offsets[p] + j % touches[p].size(); };

  // Number segments in traversal order.
  std::vector<int> label(offsets[ns], 0);
  int next = 1;
  for (std::size_t p = 0; p < ns; ++p) {
    if (touches[p].empty()) {
      label[offsets[p]] = next++;
      continue;
    }
    for (std::size_t j = 0; j < touches[p].size(); ++j) {
      std::size_t cp = p, cj = j;
      while (label[seg(cp, cj)] == 0) {
        label[seg(cp, cj)] = next++;
        const std::size_t k = touches[cp][cj % touches[cp].size()];
        const auto l = static_cast<std::size_t>(std::abs(word[k]) - 1);
        // Strands cross: entering at l leaves at r and vice versa.
        if (cp == l) {
          cp = l + 1;
          cj = slot[k][1] + 1;
        } else {
          cp = l;
          cj = slot[k][0] + 1;
        }
      }
    }
  }

  DiagramDraft draft;
  for (std::size_t k = 0; k < n; ++k) {
    const auto l = static_cast<std::size_t>(std::abs(word[k]) - 1);
    const std::string bl = std::to_string(label[seg(l, slot[k][0])]);
    const std::string tl = std::to_string(label[seg(l, slot[k][0] + 1)]);
    const std::string br = std::to_string(label[seg(l + 1, slot[k][1])]);
    const std::string tr = std::to_string(label[seg(l + 1, slot[k][1] + 1)]);
    CrossingRecord rec;
    if (word[k] > 0) {
      rec.pd = {br, tr, tl, bl};
      rec.sign = CrossingSign::Positive;
    } else {
      rec.pd = {bl, br, tr, tl};
      rec.sign = CrossingSign::Negative;
    }
    draft.crossings.push_back(std::move(rec));
  }
  for (std::size_t p = 0; p < ns; ++p)
    if (touches[p].empty()) draft.loops.push_back(std::to_string(label[offsets[p]]));
  return KnotDiagram::from_draft(draft);
}

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : s_(text) {}

  DiagramDraft parse() {
    DiagramDraft draft;
    skip();
    while (pos_ < s_.size()) {
      const char kind = get();
      if (kind == 'X') {
        expect('(');
        CrossingRecord rec;
        for (int p = 0; p < 4; ++p) {
          if (p > 0) expect(',');
          rec.pd[p] = label();
        }
        expect(')');
        space();
        if (peek() == '+') {
          rec.sign = CrossingSign::Positive;
        } else if (peek() == '-') {
          rec.sign = CrossingSign::Negative;
        } else {
          fail("expected crossing sign '+' or '-'");
        }
        ++pos_;
        draft.crossings.push_back(std::move(rec));
      } else if (kind == 'O') {
        expect('(');
        draft.loops.push_back(label());
        expect(')');
      } else {
        --pos_;
        fail("expected a record 'X(...)' or 'O(...)'");
      }
      skip();
    }
    if (draft.crossings.empty() && draft.loops.empty()) throw ParseError("empty PD code");
    return draft;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(pos_), '\n'));
    throw ParseError("PD code line " + std::to_string(line) + ": " + what);
  }

  void space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  // Separators between records: whitespace, commas and comments.
  void skip() {
    while (pos_ < s_.size()) {
      const char ch = s_[pos_];
      if (ch == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    space();
    if (get() != ch) {
      --pos_;
      fail(std::string("expected '") + ch + "'");
    }
  }

  std::string label() {
    space();
    std::string out;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      out.push_back(s_[pos_++]);
    if (out.empty()) fail("expected an edge label");
    space();
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

DiagramDraft parse_pd_draft(std::string_view text) { return PdParser(text).parse(); }

KnotDiagram parse_pd_code(std::string_view text) { return KnotDiagram::from_draft(parse_pd_draft(text)); }

std::string to_pd_text(const KnotDiagram& diagram) {
  const DiagramDraft draft = diagram.to_draft();
  std::ostringstream out;
  bool first = true;
  for (const auto& rec : draft.crossings) {
    out << (first ? "" : ", ") << record_text(rec);
    first = false;
  }
  for (const auto& e : draft.loops) {
    out << (first ? "" : ", ") << "O(" << e << ")";
    first = false;
  }
  return out.str();
}

}  // namespace khova
