#include "krc/io.hpp"

#include <cctype>
#include <charconv>

#include "krc/energy.hpp"
#include "krc/error.hpp"

namespace krc {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc{}) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

CartanType cartan_at(Cursor& in, std::string_view text) {
  in.skip_space();
  const std::size_t at = in.pos();
  if (at >= text.size() || (text[at] != 'A' && text[at] != 'C')) in.fail("expected type A or C");
  const Family family = text[at] == 'A' ? Family::A : Family::C;
  in.accept(text[at]);
  if (at + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[at + 1]))) {
    throw ParseError(at + 1, "expected the rank after the type letter");
  }
  const int n = in.integer();
  try {
    return CartanType(family, n);
  } catch (const Error& e) {
    throw ParseError(at, e.what());
  }
}

}  // namespace

CartanType parse_cartan(std::string_view text) {
  Cursor in(text);
  const CartanType ct = cartan_at(in, text);
  if (!in.done()) in.fail("trailing characters after the type");
  return ct;
}

std::vector<int> parse_int_list(std::string_view text) {
  Cursor in(text);
  std::vector<int> out;
  if (in.done()) in.fail("empty list");
  do {
    out.push_back(in.integer());
  } while (in.accept(','));
  if (!in.done()) in.fail("expected ','");
  return out;
}

TensorElement parse_filling(std::string_view text) {
  Cursor in(text);
  const CartanType ct = cartan_at(in, text);
  in.expect(';');
  std::vector<Column> cols;
  do {
    std::vector<Letter> letters;
    do {
      const std::size_t at = (in.skip_space(), in.pos());
      const int v = in.integer();
      if (v == 0) throw ParseError(at, "0 is not a letter");
      letters.emplace_back(v);
    } while (in.accept(','));
    cols.push_back(validate_column(letters, ct));
  } while (in.accept('|'));
  if (!in.done()) in.fail("expected ',' or '|'");
  return TensorElement(ct, std::move(cols));
}

std::string columns_str(const TensorElement& b) {
  std::string out;
  for (const auto& col : b.factors()) {
    if (!out.empty()) out += " | ";
    out += col.str();
  }
  return out;
}

std::string serialize_filling(const TensorElement& b) {
  return b.cartan().name() + "; " + columns_str(b);
}

std::string crystal_graph_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + serialize_filling(g.vertices[v]) + "\"];\n";
  }
  for (const auto& edge : g.edges) {
    out += "  v" + std::to_string(edge.source) + " -> v" + std::to_string(edge.target) +
           " [label=\"" + std::to_string(edge.index) + "\"";
    if (edge.index == 0) {
      out += ", style=dashed";
      if (!is_demazure_arrow(0, g.vertices[edge.source])) out += ", color=red";
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace krc
