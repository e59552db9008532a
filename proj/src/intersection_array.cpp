#include "gspec/intersection_array.hpp"

#include "gspec/errors.hpp"

#include <cctype>

namespace gspec {

void IntersectionArray::validate() const {
  if (b.size() != c.size()) throw PreconditionError("intersection array: b and c lengths differ");
  if (b.empty()) return;
  if (c.front() != 1) throw PreconditionError("intersection array: c_1 must be 1");
  for (int v : b) {
    if (v < 1) throw PreconditionError("intersection array: b_i must be positive");
  }
  for (int v : c) {
    if (v < 1) throw PreconditionError("intersection array: c_i must be positive");
  }
  for (int i = 0; i <= diameter(); ++i) {
    if (a_at(i) < 0) {
      throw PreconditionError("intersection array: a_" + std::to_string(i) + " = " + std::to_string(a_at(i)) +
                              " is negative");
    }
  }
}

std::string IntersectionArray::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
  out += ";";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out + "}";
}

IntersectionArray parse_intersection_array(std::string_view text) {
  IntersectionArray arr;
  std::vector<int>* target = &arr.b;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  const bool braced = i < text.size() && text[i] == '{';
  if (braced) ++i;
  bool seen_semicolon = false;
  bool expect_number = true;
  while (true) {
    skip();
    if (i >= text.size()) break;
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!expect_number) throw ParseError("intersection array: expected ',' or ';'", i + 1);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("intersection array: entry too large", i + 1);
        ++i;
      }
      target->push_back(v);
      expect_number = false;
    } else if (ch == ',' && !expect_number) {
      expect_number = true;
      ++i;
    } else if (ch == ';' && !seen_semicolon && (expect_number ? target->empty() : true)) {
      seen_semicolon = true;
      target = &arr.c;
      expect_number = true;
      ++i;
    } else if (ch == '}' && braced) {
      ++i;
      skip();
      if (i != text.size()) throw ParseError("intersection array: trailing characters", i + 1);
      if (!seen_semicolon) throw ParseError("intersection array: missing ';'", i);
      if (expect_number && !target->empty()) throw ParseError("intersection array: dangling ','", i);
      arr.validate();
      return arr;
    } else {
      throw ParseError(std::string("intersection array: unexpected '") + ch + "'", i + 1);
    }
  }
  if (braced) throw ParseError("intersection array: missing '}'", text.size() + 1);
  if (!seen_semicolon) throw ParseError("intersection array: missing ';'", text.size() + 1);
  if (expect_number && !target->empty()) throw ParseError("intersection array: dangling ','", text.size() + 1);
  arr.validate();
  return arr;
}

}  // namespace gspec
