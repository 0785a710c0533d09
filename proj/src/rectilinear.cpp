#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "difr/reductions.hpp"

namespace difr {

RectilinearFormula parse_formula(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false, have_vars = false;
  RectilinearFormula formula;
  std::map<std::string, int> index;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::InvalidInput, "formula line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> words;
    for (std::string w; fields >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (!header) {
      if (words.size() != 2 || words[0] != "rsat" || words[1] != "1") bad("expected 'rsat 1'");
      header = true;
    } else if (words[0] == "vars") {
      if (have_vars) bad("duplicate vars line");
      have_vars = true;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!index.emplace(words[i], static_cast<int>(formula.names.size())).second)
          bad("duplicate variable " + words[i]);
        formula.names.push_back(words[i]);
      }
    } else if (words[0] == "+" || words[0] == "-") {
      if (!have_vars) bad("clause before vars line");
      if (words.size() != 4) bad("a clause has exactly three literals");
      RectilinearClause clause;
      clause.positive = words[0] == "+";
      for (int i = 0; i < 3; ++i) {
        const auto it = index.find(words[i + 1]);
        if (it == index.end()) bad("unknown variable " + words[i + 1]);
        clause.vars[i] = it->second;
      }
      std::sort(clause.vars.begin(), clause.vars.end());
      if (clause.vars[0] == clause.vars[1] || clause.vars[1] == clause.vars[2])
        bad("clause repeats a variable");
      formula.clauses.push_back(clause);
    } else {
      bad("unrecognized line");
    }
  }
  if (!header) fail(ErrorCode::InvalidInput, "formula: missing 'rsat 1' header");
  validate_formula(formula);
  return formula;
}

std::string emit_formula(const RectilinearFormula& formula) {
  std::ostringstream out;
  out << "rsat 1\nvars";
  for (const auto& name : formula.names) out << ' ' << name;
  out << '\n';
  for (const auto& c : formula.clauses) {
    out << (c.positive ? '+' : '-');
    for (int v : c.vars) out << ' ' << formula.names[v];
    out << '\n';
  }
  return out.str();
}

namespace {

bool nested_in(const RectilinearClause& inner, const RectilinearClause& outer) {
  const auto& i = inner.vars;
  const auto& o = outer.vars;
  return (o[0] <= i[0] && i[2] <= o[1]) || (o[1] <= i[0] && i[2] <= o[2]);
}

}  // namespace

void validate_formula(const RectilinearFormula& formula) {
  const int n = static_cast<int>(formula.names.size());
  const auto& cs = formula.clauses;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const auto& v = cs[i].vars;
    if (v[0] < 0 || v[2] >= n || !(v[0] < v[1] && v[1] < v[2]))
      fail(ErrorCode::InvalidInput, "clause " + std::to_string(i + 1) + " needs three distinct variables");
  }
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (cs[i].positive != cs[j].positive) continue;
      const auto& a = cs[i].vars;
      const auto& b = cs[j].vars;
      if (a[2] <= b[0] || b[2] <= a[0]) continue;
      if (nested_in(cs[i], cs[j]) || nested_in(cs[j], cs[i])) continue;
      fail(ErrorCode::InvalidInput,
           "clauses " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " cross");
    }
}

bool satisfies(const RectilinearFormula& formula, const std::vector<bool>& assignment) {
  if (assignment.size() != formula.names.size())
    fail(ErrorCode::InvalidInput, "assignment size does not match variable count");
  for (const auto& c : formula.clauses) {
    bool ok = false;
    for (int v : c.vars) ok = ok || assignment[v] == c.positive;
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<bool>> brute_force_sat(const RectilinearFormula& formula) {
  const int n = static_cast<int>(formula.names.size());
  if (n > 24) fail(ErrorCode::PreconditionViolated, "brute-force SAT limited to 24 variables");
  std::vector<bool> assignment(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1u;
    if (satisfies(formula, assignment)) return assignment;
  }
  return std::nullopt;
}

namespace {

using Cell = std::pair<int, int>;  // row, col

enum class Role { GoingLeft, Middle, GoingRight };

struct Leg {
  int clause = 0;
  Role role = Role::Middle;
  int col = 0;
};

// Rows are drawn for positive clauses (negative rows) and mirrored for
// negative ones.
int mirror(int row, bool positive) { return positive ? row : -row; }
int clause_row(int height) { return -4 - 6 * height; }

struct Adjust {
  int extend_left = 0, extend_right = 0;
  std::set<int> notch_top, notch_bottom;  // slot gap indices
};

struct Attachment {
  Cell cell;
  bool positive;
};

class Router {
 public:
  explicit Router(const RectilinearFormula& f) : f_(f) {
    const int n = static_cast<int>(f.names.size());
    const int m = static_cast<int>(f.clauses.size());
    height_.assign(m, 0);
    // Inner clauses first so heights are final when their hosts are read.
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const auto& x = f.clauses[a].vars;
      const auto& y = f.clauses[b].vars;
      return x[2] - x[0] < y[2] - y[0];
    });
    for (int c : order)
      for (int d : order)
        if (d != c && f.clauses[d].positive == f.clauses[c].positive &&
            nested_in(f.clauses[d], f.clauses[c]))
          height_[c] = std::max(height_[c], height_[d] + 1);

    legs_.assign(n, {});
    for (int c = 0; c < m; ++c) {
      const auto& clause = f.clauses[c];
      const int side = clause.positive ? 0 : 1;
      legs_[clause.vars[0]][side].push_back({c, Role::GoingRight, 0});
      legs_[clause.vars[1]][side].push_back({c, Role::Middle, 0});
      legs_[clause.vars[2]][side].push_back({c, Role::GoingLeft, 0});
    }
    base_.assign(n, 0);
    slots_.assign(n, 1);
    clause_col_.assign(m, 0);
    int base = 6;
    for (int x = 0; x < n; ++x) {
      base_[x] = base;
      for (auto& side_legs : legs_[x]) {
        std::sort(side_legs.begin(), side_legs.end(), [&](const Leg& a, const Leg& b) {
          if (a.role != b.role) return a.role < b.role;
          return a.role == Role::GoingLeft ? height_[a.clause] < height_[b.clause]
                                           : height_[a.clause] > height_[b.clause];
        });
        for (std::size_t i = 0; i < side_legs.size(); ++i) {
          side_legs[i].col = base + 6 * static_cast<int>(i);
          if (side_legs[i].role == Role::Middle) clause_col_[side_legs[i].clause] = side_legs[i].col;
        }
        slots_[x] = std::max(slots_[x], static_cast<int>(side_legs.size()));
      }
      base += 6 * (slots_[x] - 1) + 14;
    }
  }

  int height(int clause) const { return height_[clause]; }
  int clause_col(int clause) const { return clause_col_[clause]; }
  int slots(int x) const { return slots_[x]; }

  std::set<Cell> region(int x, const Adjust& adjust) const {
    std::set<Cell> cells;
    auto rect = [&](int r0, int r1, int c0, int c1, bool positive) {
      for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c) cells.insert({mirror(r, positive), c});
    };
    rect(-2, 2, bar_left(x, adjust), bar_right(x, adjust), true);
    for (int i : adjust.notch_top) cells.erase({-2, base_[x] + 6 * i + 3});
    for (int i : adjust.notch_bottom) cells.erase({2, base_[x] + 6 * i + 3});
    for (int side = 0; side < 2; ++side)
      for (const auto& leg : legs_[x][side]) {
        const bool positive = side == 0;
        const int row = clause_row(height_[leg.clause]);
        const int cc = clause_col_[leg.clause];
        if (leg.role == Role::Middle) {
          rect(row + 1, -3, leg.col - 1, leg.col + 1, positive);
        } else {
          rect(row - 2, -3, leg.col - 1, leg.col + 1, positive);
          if (leg.role == Role::GoingRight)
            rect(row - 2, row, leg.col - 1, cc - 1, positive);
          else
            rect(row - 2, row, cc + 1, leg.col + 1, positive);
        }
      }
    return cells;
  }

  std::vector<Attachment> attachments(int x) const {
    std::vector<Attachment> result;
    for (int side = 0; side < 2; ++side)
      for (const auto& leg : legs_[x][side])
        result.push_back({attachment_cell(leg), side == 0});
    return result;
  }

  Cell attachment_cell(const Leg& leg) const {
    const bool positive = f_.clauses[leg.clause].positive;
    const int row = clause_row(height_[leg.clause]);
    const int cc = clause_col_[leg.clause];
    switch (leg.role) {
      case Role::Middle:
        return {mirror(row + 1, positive), cc};
      case Role::GoingRight:
        return {mirror(row, positive), cc - 1};
      case Role::GoingLeft:
        break;
    }
    return {mirror(row, positive), cc + 1};
  }

  // Base-cycle cells whose arc an adjuster lengthens by two.
  std::vector<std::pair<Cell, int>> witnesses(int x, const Adjust& adjust) const {
    std::vector<std::pair<Cell, int>> result;
    for (int i = 0; i + 1 < slots_[x]; ++i) {
      result.push_back({{-2, base_[x] + 6 * i + 3}, i});
      result.push_back({{2, base_[x] + 6 * i + 3}, 1000 + i});
    }
    result.push_back({{0, bar_right(x, adjust)}, -1});
    result.push_back({{0, bar_left(x, adjust)}, -2});
    return result;
  }

  int bar_left(int x, const Adjust& a) const { return base_[x] - 4 - a.extend_left; }
  int bar_right(int x, const Adjust& a) const {
    return base_[x] + 6 * (slots_[x] - 1) + 4 + a.extend_right;
  }

 private:
  const RectilinearFormula& f_;
  std::vector<int> height_;
  std::vector<std::array<std::vector<Leg>, 2>> legs_;
  std::vector<int> base_, slots_, clause_col_;
};

// Outline of a region, clockwise from its top-left cell.
std::vector<Cell> trace_outline(const std::set<Cell>& region, const std::string& name) {
  auto inside = [&](int r, int c) { return region.count({r, c}) > 0; };
  std::set<Cell> outline;
  for (const auto& [r, c] : region) {
    bool edge = false;
    for (int dr = -1; dr <= 1; ++dr)
      for (int dc = -1; dc <= 1; ++dc) edge = edge || !inside(r + dr, c + dc);
    if (edge) outline.insert({r, c});
  }
  const int dr[4] = {0, 1, 0, -1}, dc[4] = {1, 0, -1, 0};
  for (const auto& [r, c] : outline) {
    int degree = 0;
    for (int k = 0; k < 4; ++k) degree += outline.count({r + dr[k], c + dc[k]}) > 0;
    if (degree != 2)
      fail(ErrorCode::StructureMismatch, "routing failure: outline of variable " + name +
                                             " branches at cell (" + std::to_string(r) + "," +
                                             std::to_string(c) + ")");
  }
  std::vector<Cell> cycle{*outline.begin()};
  Cell prev = cycle[0];
  Cell cur{cycle[0].first, cycle[0].second + 1};
  if (!outline.count(cur)) fail(ErrorCode::StructureMismatch, "routing failure: variable " + name);
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    Cell next = prev;
    for (int k = 0; k < 4; ++k) {
      const Cell cand{cur.first + dr[k], cur.second + dc[k]};
      if (cand != prev && outline.count(cand)) next = cand;
    }
    prev = cur;
    cur = next;
    if (cycle.size() > outline.size()) break;
  }
  if (cycle.size() != outline.size())
    fail(ErrorCode::StructureMismatch, "routing failure: outline of variable " + name + " is not one cycle");
  return cycle;
}

bool odd(const Cell& c) { return ((c.first + c.second) % 2 + 2) % 2 == 1; }

struct Gadget {
  std::set<Cell> region;
  std::vector<Cell> cycle;
  int anchor = 0;  // cycle index of a positive red
};

int mod(int a, int m) { return ((a % m) + m) % m; }

// Finds cycle arcs whose attachment spacing is off by two (mod 4). Returns
// false and fills `bad` with (from, to) cycle indices when any is wrong.
bool arcs_ok(const std::vector<Cell>& cycle, const std::vector<Attachment>& atts, int& anchor,
             std::vector<std::pair<int, int>>& bad) {
  std::map<Cell, int> pos;
  for (int i = 0; i < static_cast<int>(cycle.size()); ++i) pos[cycle[i]] = i;
  const int L = static_cast<int>(cycle.size());
  bad.clear();
  if (atts.empty()) {
    anchor = odd(cycle[0]) ? 0 : 1;
    if (L % 4 != 0) bad.push_back({anchor, anchor});
    return bad.empty();
  }
  std::vector<std::pair<int, bool>> seq;
  for (const auto& a : atts) seq.push_back({pos.at(a.cell), a.positive});
  std::sort(seq.begin(), seq.end());
  anchor = -1;
  for (const auto& [p, positive] : seq)
    if (positive && anchor < 0) anchor = p;
  if (anchor < 0) anchor = mod(seq[0].first - 2, L);
  const int k = static_cast<int>(seq.size());
  for (int i = 0; i < k; ++i) {
    const auto& [from, from_pos] = seq[i];
    const auto& [to, to_pos] = seq[(i + 1) % k];
    const int want = mod((to_pos ? 0 : 2) - (from_pos ? 0 : 2), 4);
    const int have = mod(to - from, L);
    const int arc = (k == 1) ? L : have;
    if (mod(arc - want, 4) != 0) bad.push_back({from, to});
  }
  return bad.empty();
}

}  // namespace

GridReduction reduce_rectilinear_3sat(const RectilinearFormula& formula) {
  validate_formula(formula);
  const int n = static_cast<int>(formula.names.size());
  const int m = static_cast<int>(formula.clauses.size());
  GridReduction result;
  if (n == 0) {
    InstanceExtras extras;
    extras.coords = std::vector<Coord>{{0, 0}};
    extras.kind = KindTag::Grid;
    result.instance = Instance(1, {}, {Color::Blue}, kHalf, extras);
    return result;
  }

  const Router router(formula);
  std::vector<Gadget> gadgets(n);
  for (int x = 0; x < n; ++x) {
    const auto& name = formula.names[x];
    const auto atts = router.attachments(x);
    Adjust adjust;
    auto& g = gadgets[x];
    g.region = router.region(x, adjust);
    g.cycle = trace_outline(g.region, name);
    std::vector<std::pair<int, int>> bad;
    if (!arcs_ok(g.cycle, atts, g.anchor, bad)) {
      std::map<Cell, int> pos;
      for (int i = 0; i < static_cast<int>(g.cycle.size()); ++i) pos[g.cycle[i]] = i;
      const int L = static_cast<int>(g.cycle.size());
      for (const auto& [from, to] : bad) {
        const int span = (from == to) ? L : mod(to - from, L);
        bool fixed = false;
        for (const auto& [cell, id] : router.witnesses(x, adjust)) {
          const auto it = pos.find(cell);
          if (it == pos.end()) continue;
          const int offset = mod(it->second - from, L);
          if (offset == 0 || offset >= span) continue;
          if (id >= 1000)
            adjust.notch_bottom.insert(id - 1000);
          else if (id >= 0)
            adjust.notch_top.insert(id);
          else if (id == -1)
            adjust.extend_right = 1;
          else
            adjust.extend_left = 1;
          fixed = true;
          break;
        }
        if (!fixed)
          fail(ErrorCode::StructureMismatch, "routing failure: cannot balance gadget of variable " + name);
      }
      g.region = router.region(x, adjust);
      g.cycle = trace_outline(g.region, name);
      if (!arcs_ok(g.cycle, atts, g.anchor, bad))
        fail(ErrorCode::StructureMismatch, "routing failure: gadget of variable " + name +
                                               " still unbalanced after adjustment");
    }
  }

  // Cell roles.
  enum class Kind { Dummy, Red, Controller, Clause, Pendant };
  struct Info {
    Kind kind = Kind::Dummy;
    int owner = -1;         // variable for cycle cells, clause for P and pendant
    bool positive = false;  // for reds
  };
  std::map<Cell, Info> cells;
  std::map<Cell, int> region_owner;
  for (int x = 0; x < n; ++x) {
    for (const auto& c : gadgets[x].region) {
      const auto [it, fresh] = region_owner.emplace(c, x);
      if (!fresh)
        fail(ErrorCode::StructureMismatch, "routing failure: variables " + formula.names[it->second] +
                                               " and " + formula.names[x] + " overlap");
    }
    const auto& cycle = gadgets[x].cycle;
    const int L = static_cast<int>(cycle.size());
    for (int i = 0; i < L; ++i) {
      Info info;
      info.owner = x;
      if (odd(cycle[i])) {
        info.kind = Kind::Red;
        info.positive = mod(i - gadgets[x].anchor, 4) == 0;
      } else {
        info.kind = Kind::Controller;
      }
      cells[cycle[i]] = info;
    }
    result.ell.push_back(L / 4);
    result.budget += L / 4;
  }
  for (int c = 0; c < m; ++c) {
    const bool positive = formula.clauses[c].positive;
    const int row = clause_row(router.height(c));
    const int col = router.clause_col(c);
    const Cell p{mirror(row, positive), col}, pendant{mirror(row - 1, positive), col};
    for (const Cell& cell : {p, pendant})
      if (region_owner.count(cell) || cells.count(cell))
        fail(ErrorCode::StructureMismatch, "routing failure at clause " + std::to_string(c + 1));
    cells[p] = Info{Kind::Clause, c, false};
    cells[pendant] = Info{Kind::Pendant, c, false};
  }

  int r0 = 0, r1 = 0, c0 = 0, c1 = 0;
  bool first = true;
  for (const auto& [cell, info] : cells) {
    if (first) {
      r0 = r1 = cell.first;
      c0 = c1 = cell.second;
      first = false;
    }
    r0 = std::min(r0, cell.first);
    r1 = std::max(r1, cell.first);
    c0 = std::min(c0, cell.second);
    c1 = std::max(c1, cell.second);
  }
  --r0, ++r1, --c0, ++c1;  // dummy frame
  const int rows = r1 - r0 + 1, cols = c1 - c0 + 1;
  const int total = rows * cols;
  auto id_of = [&](int r, int c) { return (r - r0) * cols + (c - c0); };
  auto info_of = [&](int r, int c) {
    const auto it = cells.find({r, c});
    return it == cells.end() ? Info{} : it->second;
  };

  std::vector<Color> colors(total, Color::Blue);
  std::vector<Coord> coords(total);
  result.positive_reds.assign(n, {});
  result.negative_reds.assign(n, {});
  result.controllers.assign(n, {});
  result.clause_vertices.assign(m, -1);
  result.pendants.assign(m, -1);
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) {
      const int v = id_of(r, c);
      coords[v] = {r - r0, c - c0};
      const Info info = info_of(r, c);
      switch (info.kind) {
        case Kind::Red:
          colors[v] = Color::Red;
          (info.positive ? result.positive_reds : result.negative_reds)[info.owner].push_back(v);
          break;
        case Kind::Controller:
          result.controllers[info.owner].push_back(v);
          break;
        case Kind::Clause:
          result.clause_vertices[info.owner] = v;
          break;
        case Kind::Pendant:
          result.pendants[info.owner] = v;
          break;
        case Kind::Dummy:
          break;
      }
    }

  // Attachments per clause, for the designed clause -> red edges.
  std::set<std::pair<Cell, Cell>> designed;
  for (int c = 0; c < m; ++c) {
    const bool positive = formula.clauses[c].positive;
    const int row = clause_row(router.height(c));
    const int col = router.clause_col(c);
    const Cell p{mirror(row, positive), col};
    designed.insert({p, {mirror(row - 1, positive), col}});
    designed.insert({p, {mirror(row + 1, positive), col}});
    designed.insert({p, {mirror(row, positive), col - 1}});
    designed.insert({p, {mirror(row, positive), col + 1}});
  }

  std::vector<Edge> edges;
  auto orient = [&](const Cell& a, const Cell& b) {
    const Info ia = info_of(a.first, a.second), ib = info_of(b.first, b.second);
    const int va = id_of(a.first, a.second), vb = id_of(b.first, b.second);
    if (designed.count({a, b})) return Edge{va, vb};
    if (designed.count({b, a})) return Edge{vb, va};
    if (ia.kind == Kind::Clause || ib.kind == Kind::Clause)
      fail(ErrorCode::StructureMismatch, "routing failure: clause vertex has an undesigned neighbor");
    const bool same_cycle = ia.owner == ib.owner &&
                            (ia.kind == Kind::Red || ia.kind == Kind::Controller) &&
                            (ib.kind == Kind::Red || ib.kind == Kind::Controller);
    if (ia.kind == Kind::Red && ib.kind == Kind::Red)
      fail(ErrorCode::StructureMismatch, "routing failure: adjacent red vertices");
    if (same_cycle && ia.kind == Kind::Controller && ib.kind == Kind::Red) return Edge{va, vb};
    if (same_cycle && ib.kind == Kind::Controller && ia.kind == Kind::Red) return Edge{vb, va};
    if (ia.kind == Kind::Red) return Edge{va, vb};
    if (ib.kind == Kind::Red) return Edge{vb, va};
    if (ia.kind == Kind::Controller && ib.kind == Kind::Controller)
      fail(ErrorCode::StructureMismatch, "routing failure: adjacent controllers");
    if (ia.kind == Kind::Controller) return Edge{vb, va};
    if (ib.kind == Kind::Controller) return Edge{va, vb};
    return va < vb ? Edge{va, vb} : Edge{vb, va};
  };
  for (int r = r0; r <= r1; ++r)
    for (int c = c0; c <= c1; ++c) {
      if (c < c1) edges.push_back(orient({r, c}, {r, c + 1}));
      if (r < r1) edges.push_back(orient({r, c}, {r + 1, c}));
    }

  InstanceExtras extras;
  extras.coords = std::move(coords);
  extras.kind = KindTag::Grid;
  result.instance = Instance(total, std::move(edges), std::move(colors), kHalf, std::move(extras));

  // Self-check: only clause vertices and controllers start under illusion,
  // each short by exactly one blue out-neighbor.
  std::vector<bool> may(total, false);
  for (const auto& list : result.controllers)
    for (Vertex v : list) may[v] = true;
  for (Vertex v : result.clause_vertices) may[v] = true;
  for (Vertex v = 0; v < total; ++v) {
    const int def = p_deficiency(result.instance, v);
    result.max_deficiency = std::max(result.max_deficiency, def);
    if (def > 0 && !may[v])
      fail(ErrorCode::StructureMismatch, "self-check: unexpected illusion at vertex " + std::to_string(v));
    if (may[v] && def != 1)
      fail(ErrorCode::StructureMismatch, "self-check: gadget vertex " + std::to_string(v) +
                                             " has deficiency " + std::to_string(def));
  }
  for (int x = 0; x < n; ++x)
    if (static_cast<int>(result.positive_reds[x].size()) != result.ell[x] ||
        static_cast<int>(result.negative_reds[x].size()) != result.ell[x])
      fail(ErrorCode::StructureMismatch, "self-check: gadget of " + formula.names[x] + " unbalanced");
  return result;
}

Recoloring assignment_to_flips(const GridReduction& r, const std::vector<bool>& assignment) {
  if (assignment.size() != r.positive_reds.size())
    fail(ErrorCode::InvalidInput, "assignment size does not match variable count");
  std::vector<Vertex> flips;
  for (std::size_t x = 0; x < assignment.size(); ++x) {
    const auto& reds = assignment[x] ? r.positive_reds[x] : r.negative_reds[x];
    flips.insert(flips.end(), reds.begin(), reds.end());
  }
  return Recoloring(std::move(flips));
}

std::vector<bool> flips_to_assignment(const GridReduction& r, const Recoloring& flips) {
  std::vector<bool> assignment(r.positive_reds.size());
  for (std::size_t x = 0; x < assignment.size(); ++x) {
    auto all = [&](const std::vector<Vertex>& vs) {
      return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return flips.contains(v); });
    };
    auto none = [&](const std::vector<Vertex>& vs) {
      return std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return flips.contains(v); });
    };
    if (all(r.positive_reds[x]) && none(r.negative_reds[x]))
      assignment[x] = true;
    else if (all(r.negative_reds[x]) && none(r.positive_reds[x]))
      assignment[x] = false;
    else
      fail(ErrorCode::Infeasible, "gadget " + std::to_string(x + 1) + " is not flipped uniformly");
  }
  return assignment;
}

}  // namespace difr
