#include "fairdsg/gml.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <utility>

namespace fairdsg {

namespace {

enum class TokenKind { Word, String, Open, Close };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '[') {
      out.push_back({TokenKind::Open, "[", line});
      ++i;
    } else if (ch == ']') {
      out.push_back({TokenKind::Close, "]", line});
      ++i;
    } else if (ch == '"') {
      const std::size_t start_line = line;
      std::string s;
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\n') ++line;
        s.push_back(text[i++]);
      }
      if (i == text.size()) throw ParseError("unterminated string", start_line);
      ++i;
      out.push_back({TokenKind::String, std::move(s), start_line});
    } else {
      std::string s;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '[' && text[i] != ']' && text[i] != '"') {
        s.push_back(text[i++]);
      }
      out.push_back({TokenKind::Word, std::move(s), line});
    }
  }
  return out;
}

struct Value;

struct Entry {
  std::string key;
  std::size_t line;
  std::unique_ptr<Value> value;
};

struct Value {
  bool is_list = false;
  std::string scalar;
  std::vector<Entry> list;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::vector<Entry> document() {
    std::vector<Entry> entries = entries_until_close();
    if (pos_ < tokens_.size()) throw ParseError("unbalanced ']'", tokens_[pos_].line);
    return entries;
  }

 private:
  std::vector<Entry> entries_until_close() {
    std::vector<Entry> entries;
    while (pos_ < tokens_.size() && tokens_[pos_].kind != TokenKind::Close) {
      const Token& key = tokens_[pos_++];
      if (key.kind != TokenKind::Word) throw ParseError("expected a key, got '" + key.text + "'", key.line);
      if (pos_ == tokens_.size()) throw ParseError("key '" + key.text + "' has no value", key.line);
      auto value = std::make_unique<Value>();
      const Token& tok = tokens_[pos_++];
      switch (tok.kind) {
        case TokenKind::Open:
          value->is_list = true;
          value->list = entries_until_close();
          if (pos_ == tokens_.size()) throw ParseError("unbalanced '['", tok.line);
          ++pos_;
          break;
        case TokenKind::Close:
          throw ParseError("key '" + key.text + "' has no value", key.line);
        default:
          value->scalar = tok.text;
      }
      entries.push_back({key.text, key.line, std::move(value)});
    }
    return entries;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::int64_t as_integer(const Entry& e) {
  if (e.value->is_list) throw ParseError("'" + e.key + "' must be an integer", e.line);
  const std::string& s = e.value->scalar;
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("'" + e.key + "' must be an integer, got '" + s + "'", e.line);
  }
  return v;
}

}  // namespace

GmlDocument parse_gml(std::string_view text) {
  const std::vector<Entry> top = Parser(tokenize(text)).document();
  GmlDocument doc;
  std::map<std::int64_t, std::size_t> seen;
  struct PendingEdge {
    GmlEdge edge;
    std::size_t line;
  };
  std::vector<PendingEdge> pending;

  for (const Entry& g : top) {
    if (g.key != "graph" || !g.value->is_list) continue;
    for (const Entry& item : g.value->list) {
      if (!item.value->is_list) continue;
      if (item.key == "node") {
        GmlNode node;
        bool has_id = false;
        for (const Entry& field : item.value->list) {
          if (field.key == "id") {
            node.id = as_integer(field);
            has_id = true;
          } else if (field.key == "label" && !field.value->is_list) {
            node.label = field.value->scalar;
          } else if (field.key == "value" && !field.value->is_list) {
            node.value = field.value->scalar;
          }
        }
        if (!has_id) throw ParseError("node without id", item.line);
        if (!seen.emplace(node.id, item.line).second) {
          throw ParseError("duplicate node id " + std::to_string(node.id), item.line);
        }
        doc.nodes.push_back(std::move(node));
      } else if (item.key == "edge") {
        PendingEdge e{{}, item.line};
        bool has_source = false;
        bool has_target = false;
        for (const Entry& field : item.value->list) {
          if (field.key == "source") {
            e.edge.source = as_integer(field);
            has_source = true;
          } else if (field.key == "target") {
            e.edge.target = as_integer(field);
            has_target = true;
          }
        }
        if (!has_source || !has_target) throw ParseError("edge needs source and target", item.line);
        pending.push_back(e);
      }
    }
  }
  // Nodes may follow the edges that use them, so ids are checked at the end.
  for (const PendingEdge& e : pending) {
    for (std::int64_t id : {e.edge.source, e.edge.target}) {
      if (!seen.count(id)) throw ParseError("edge references unknown node id " + std::to_string(id), e.line);
    }
    doc.edges.push_back(e.edge);
  }
  return doc;
}

namespace {

enum class Leaning { Conservative, Liberal, Neutral };

Leaning leaning(const std::string& value) {
  std::string v;
  for (char ch : value) v.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (v == "c" || v == "conservative") return Leaning::Conservative;
  if (v == "l" || v == "liberal") return Leaning::Liberal;
  if (v == "n" || v == "neutral") return Leaning::Neutral;
  throw Error("unknown political label '" + value + "'");
}

}  // namespace

PolbooksGraph polbooks_graph(const GmlDocument& doc) {
  std::vector<const GmlNode*> kept;
  PolbooksGraph out;
  for (const GmlNode& node : doc.nodes) {
    if (leaning(node.value) == Leaning::Neutral) {
      ++out.dropped_neutral;
    } else {
      kept.push_back(&node);
    }
  }
  std::sort(kept.begin(), kept.end(), [](const GmlNode* a, const GmlNode* b) { return a->id < b->id; });

  std::map<std::int64_t, NodeId> index;
  std::vector<Color> colors;
  std::vector<std::string> names;
  for (const GmlNode* node : kept) {
    index.emplace(node->id, static_cast<NodeId>(colors.size()));
    colors.push_back(leaning(node->value) == Leaning::Conservative ? Color::Red : Color::Blue);
    names.push_back(node->label.empty() ? std::to_string(node->id) : node->label);
  }
  std::vector<Edge> edges;
  for (const GmlEdge& e : doc.edges) {
    const auto s = index.find(e.source);
    const auto t = index.find(e.target);
    if (s == index.end() || t == index.end()) continue;
    edges.push_back({s->second, t->second, 1.0});
  }
  out.graph = LabeledGraph::from_edges(colors.size(), std::move(edges), std::move(names));
  out.coloring = Coloring(std::move(colors));
  return out;
}

}  // namespace fairdsg
