#include "knotcert/pd_code.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace knotcert {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }
  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == digits) {
      pos = start;
      fail("expected an integer");
    }
    std::int64_t value = 0;
    const auto res =
        std::from_chars(text.data() + start, text.data() + pos, value);
    if (res.ec != std::errc{}) {
      const std::size_t at = start;
      pos = at;
      fail("integer out of range");
    }
    return value;
  }
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  Cursor cur{text};
  PDCode pd;
  bool saw_header = false;
  while (!cur.done()) {
    if (cur.eat_word("FREE_LOOPS")) {
      if (saw_header) cur.fail("duplicate FREE_LOOPS header");
      if (!pd.crossings.empty())
        cur.fail("FREE_LOOPS header must come before crossing terms");
      cur.expect('=');
      const std::int64_t k = cur.integer();
      if (k < 0 || k > 0xFFFF) cur.fail("free loop count out of range");
      pd.free_loops = static_cast<std::uint32_t>(k);
      saw_header = true;
      continue;
    }
    if (!cur.eat_word("X")) cur.fail("expected crossing term X(a,b,c,d)");
    cur.expect('(');
    std::array<std::int64_t, 4> tuple{};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) cur.expect(',');
      tuple[static_cast<std::size_t>(i)] = cur.integer();
      if (tuple[static_cast<std::size_t>(i)] <= 0)
        cur.fail("arc labels must be positive");
    }
    cur.expect(')');
    pd.crossings.push_back(tuple);
  }
  if (pd.crossings.empty() && pd.free_loops == 0)
    throw ParseError("empty diagram: no crossings and no free loops", 0);

  std::map<std::int64_t, int> count;
  for (const auto& x : pd.crossings)
    for (std::int64_t label : x) ++count[label];
  for (const auto& [label, n] : count) {
    if (n != 2) {
      throw ParseError("arc label " + std::to_string(label) + " occurs " +
                           std::to_string(n) + " time(s), expected exactly 2",
                       text.size());
    }
  }
  return pd;
}

BraidWord parse_braid(std::string_view text) {
  Cursor cur{text};
  if (!cur.eat_word("BR")) cur.fail("expected braid word BR(n; w1 w2 ...)");
  cur.expect('(');
  const std::int64_t n = cur.integer();
  if (n < 1 || n > 0xFFFF) cur.fail("strand count out of range");
  cur.expect(';');
  BraidWord braid;
  braid.strand_count = static_cast<std::uint32_t>(n);
  while (!cur.eat(')')) {
    if (cur.done()) cur.fail("unterminated braid word");
    const std::int64_t w = cur.integer();
    if (w == 0) cur.fail("braid letters must be nonzero");
    if (w >= n || w <= -n) {
      cur.fail("generator " + std::to_string(w < 0 ? -w : w) +
               " out of range for strand count " + std::to_string(n));
    }
    braid.letters.push_back(static_cast<std::int32_t>(w));
  }
  if (!cur.done()) cur.fail("trailing characters after braid word");
  return braid;
}

GaussCode parse_gauss(std::string_view text) {
  Cursor cur{text};
  GaussCode code;
  code.components.emplace_back();
  bool any_token = false;
  while (!cur.done()) {
    if (cur.eat(';')) {
      code.components.emplace_back();
      continue;
    }
    GaussPassage p;
    if (cur.eat('O')) {
      p.over = true;
    } else if (cur.eat('U')) {
      p.over = false;
    } else {
      cur.fail("expected passage token O<label><sign> or U<label><sign>");
    }
    p.label = cur.integer();
    if (p.label <= 0) cur.fail("crossing labels must be positive");
    if (cur.eat('+')) {
      p.sign = +1;
    } else if (cur.eat('-')) {
      p.sign = -1;
    } else {
      cur.fail("expected crossing sign '+' or '-'");
    }
    code.components.back().push_back(p);
    any_token = true;
  }
  if (!any_token) {
    if (code.components.size() > 1)
      throw ParseError("empty component in signed code", 0);
    return code;  // a single crossing-free circle
  }
  for (const auto& comp : code.components) {
    if (comp.empty())
      throw ParseError("empty component in signed code", text.size());
  }

  struct Occ {
    int over = 0;
    int under = 0;
    int sign = 0;
    bool sign_conflict = false;
  };
  std::map<std::int64_t, Occ> occ;
  for (const auto& comp : code.components) {
    for (const auto& p : comp) {
      Occ& o = occ[p.label];
      ++(p.over ? o.over : o.under);
      if (o.sign == 0) {
        o.sign = p.sign;
      } else if (o.sign != p.sign) {
        o.sign_conflict = true;
      }
    }
  }
  for (const auto& [label, o] : occ) {
    const int total = o.over + o.under;
    if (total != 2) {
      throw ParseError("crossing " + std::to_string(label) + " occurs " +
                           std::to_string(total) +
                           " time(s), expected exactly 2",
                       text.size());
    }
    if (o.over != 1) {
      throw ParseError("crossing " + std::to_string(label) +
                           " must appear once over and once under",
                       text.size());
    }
    if (o.sign_conflict) {
      throw ParseError(
          "crossing " + std::to_string(label) + " has conflicting signs",
          text.size());
    }
  }
  return code;
}

}  // namespace knotcert
