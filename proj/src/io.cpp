#include "difr/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace difr {

namespace {

struct Token {
  std::string_view text;
  int col = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      const std::size_t j = raw.find_first_of(" \t", i);
      const std::size_t stop = j == std::string_view::npos ? raw.size() : j;
      line.tokens.push_back({raw.substr(i, stop - i), static_cast<int>(i) + 1});
      i = stop;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void parse_error(int line, int col, const std::string& what) {
  fail(ErrorCode::InvalidInput, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

long to_long(const Line& line, const Token& t) {
  long value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    parse_error(line.number, t.col, "expected an integer, got '" + std::string(t.text) + "'");
  return value;
}

int to_count(const Line& line, const Token& t, long limit) {
  const long v = to_long(line, t);
  if (v < 0 || v > limit) parse_error(line.number, t.col, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    const auto& last = line.tokens.back();
    parse_error(line.number, last.col, "expected " + std::to_string(count) + " fields, found " +
                                           std::to_string(line.tokens.size()));
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t at = 0;
  auto next = [&](const char* what) -> const Line& {
    if (at >= lines.size())
      parse_error(lines.empty() ? 1 : lines.back().number + 1, 1, std::string("unexpected end of file, expected ") + what);
    return lines[at++];
  };

  const Line& header = next("header");
  if (header.tokens.size() != 2 || header.tokens[0].text != "difr" || header.tokens[1].text != "1")
    parse_error(header.number, 1, "expected header 'difr 1'");

  constexpr long kMaxN = 50'000'000;
  const Line& nline = next("'n'");
  if (nline.tokens[0].text != "n") parse_error(nline.number, 1, "expected 'n <count>'");
  expect_arity(nline, 2);
  const int n = to_count(nline, nline.tokens[1], kMaxN);

  const Line& pline = next("'p'");
  if (pline.tokens[0].text != "p") parse_error(pline.number, 1, "expected 'p <num>/<den>'");
  expect_arity(pline, 2);
  Ratio p;
  try {
    p = Ratio::parse(pline.tokens[1].text);
  } catch (const Error& e) {
    parse_error(pline.number, pline.tokens[1].col, e.what());
  }

  const Line& cline = next("'colors'");
  if (cline.tokens[0].text != "colors") parse_error(cline.number, 1, "expected 'colors'");
  std::vector<Color> colors;
  colors.reserve(n);
  for (std::size_t i = 1; i < cline.tokens.size(); ++i)
    for (std::size_t k = 0; k < cline.tokens[i].text.size(); ++k) {
      const char ch = cline.tokens[i].text[k];
      if (ch != 'B' && ch != 'R')
        parse_error(cline.number, cline.tokens[i].col + static_cast<int>(k),
                    std::string("bad color character '") + ch + "'");
      colors.push_back(ch == 'R' ? Color::Red : Color::Blue);
    }
  if (static_cast<int>(colors.size()) != n)
    parse_error(cline.number, 1, "expected " + std::to_string(n) + " colors, found " + std::to_string(colors.size()));

  InstanceExtras extras;
  const Line* line = &next("'kind' or 'edges'");
  if (line->tokens[0].text == "kind") {
    expect_arity(*line, 2);
    extras.kind = kind_from_name(line->tokens[1].text);
    if (!extras.kind) parse_error(line->number, line->tokens[1].col, "unknown kind '" + std::string(line->tokens[1].text) + "'");
    line = &next("'edges'");
  }
  if (line->tokens[0].text != "edges") parse_error(line->number, 1, "expected 'edges <m>'");
  expect_arity(*line, 2);
  const int m = to_count(*line, line->tokens[1], 500'000'000);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Line& e = next("an edge line");
    expect_arity(e, 2);
    const Edge edge{to_count(e, e.tokens[0], n - 1), to_count(e, e.tokens[1], n - 1)};
    if (edge.tail == edge.head) parse_error(e.number, 1, "self-loop");
    if (!edges.empty() && !(edges.back() < edge))
      parse_error(e.number, 1, edges.back() == edge ? "duplicate edge" : "edges out of ascending order");
    edges.push_back(edge);
  }

  std::optional<DemandSet> demand;
  int stage = 0;  // coords, layers, demand must come in this order
  while (at < lines.size()) {
    const Line& sec = lines[at++];
    const auto key = sec.tokens[0].text;
    if (key == "coords" && stage < 1) {
      stage = 1;
      expect_arity(sec, 1);
      std::vector<Coord> coords;
      coords.reserve(n);
      for (int v = 0; v < n; ++v) {
        const Line& c = next("a coordinate line");
        expect_arity(c, 2);
        const long r = to_long(c, c.tokens[0]), col = to_long(c, c.tokens[1]);
        if (std::abs(r) > 1'000'000'000L || std::abs(col) > 1'000'000'000L)
          parse_error(c.number, 1, "coordinate out of range");
        coords.push_back({static_cast<int>(r), static_cast<int>(col)});
      }
      extras.coords = std::move(coords);
    } else if (key == "layers" && stage < 2) {
      stage = 2;
      expect_arity(sec, static_cast<std::size_t>(n) + 1);
      std::vector<int> layers;
      for (int v = 0; v < n; ++v) layers.push_back(to_count(sec, sec.tokens[v + 1], kMaxN));
      extras.layers = std::move(layers);
    } else if (key == "demand" && stage < 3) {
      stage = 3;
      expect_arity(sec, 2);
      const int c = to_count(sec, sec.tokens[1], n);
      std::vector<Vertex> ids;
      if (c > 0) {
        const Line& list = next("the demand list");
        expect_arity(list, static_cast<std::size_t>(c));
        for (const auto& t : list.tokens) {
          const int v = to_count(list, t, n - 1);
          if (!ids.empty() && ids.back() >= v) parse_error(list.number, t.col, "demand ids must ascend");
          ids.push_back(v);
        }
      }
      demand = DemandSet::of(n, ids);
    } else {
      parse_error(sec.number, 1, "unexpected '" + std::string(key) + "'");
    }
  }

  try {
    return InstanceFile{Instance(n, std::move(edges), std::move(colors), p, std::move(extras)), demand};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidInput) throw;
    fail(ErrorCode::InvalidInput, std::string("instance: ") + e.what());
  }
}

std::string emit_instance(const Instance& instance, const std::optional<DemandSet>& demand) {
  std::string out;
  out += "difr 1\nn " + std::to_string(instance.size()) + "\np " + instance.p().str() + "\ncolors";
  if (instance.size() > 0) {
    out += ' ';
    for (Color c : instance.colors()) out += c == Color::Red ? 'R' : 'B';
  }
  out += '\n';
  if (instance.kind()) out += "kind " + std::string(kind_name(*instance.kind())) + "\n";
  out += "edges " + std::to_string(instance.edges().size()) + "\n";
  for (const auto& e : instance.edges()) out += std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
  if (instance.coords()) {
    out += "coords\n";
    for (const auto& c : *instance.coords()) out += std::to_string(c.row) + " " + std::to_string(c.col) + "\n";
  }
  if (instance.layers()) {
    out += "layers";
    for (int l : *instance.layers()) out += " " + std::to_string(l);
    out += '\n';
  }
  if (demand) {
    if (demand->size() != instance.size())
      fail(ErrorCode::InvalidInput, "demand set size does not match instance");
    const auto members = demand->members();
    out += "demand " + std::to_string(members.size()) + "\n";
    if (!members.empty()) {
      for (std::size_t i = 0; i < members.size(); ++i) out += (i ? " " : "") + std::to_string(members[i]);
      out += '\n';
    }
  }
  return out;
}

std::string emit_instance(const InstanceFile& file) { return emit_instance(file.instance, file.demand); }

Recoloring parse_solution(std::string_view text, int n) {
  std::vector<Vertex> ids;
  for (const auto& line : tokenize(text)) {
    expect_arity(line, 1);
    const long v = to_long(line, line.tokens[0]);
    if (v < 0 || v >= n)
      parse_error(line.number, 1, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    ids.push_back(static_cast<Vertex>(v));
  }
  return Recoloring(std::move(ids));
}

std::string emit_solution(const Recoloring& recoloring) {
  std::string out;
  for (Vertex v : recoloring.flipped()) out += std::to_string(v) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorCode::InvalidInput, "write to '" + path + "' failed");
}

}  // namespace difr
